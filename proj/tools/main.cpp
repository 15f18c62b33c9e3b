#include <fstream>

#include "common.hpp"

namespace cli {

void with_dot_output(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream os(path);
  if (!os) throw pipelat::InvalidInput("cannot write " + path);
  body(os);
}

void write_graph_dot(const std::string& path, const std::vector<std::string>& labels,
                     const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  with_dot_output(path, [&](std::ostream& os) {
    os << "digraph G {\n  rankdir=BT;\n";
    for (std::size_t k = 0; k < labels.size(); ++k) os << "  n" << k << " [label=\"" << labels[k] << "\"];\n";
    for (auto [a, b] : arcs) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
  });
}

}  // namespace cli

int main(int argc, char** argv) {
  CLI::App app{"Pipe dreams, weak order congruences and subword complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  cli::Global g;
  cli::Outcome out;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", g.cap, "Enumeration cap (default: PIPELAT_CAP or 1000000)")->check(CLI::PositiveNumber);

  cli::add_pd_commands(app, g, out);
  cli::add_cox_commands(app, g, out);
  cli::add_sc_commands(app, g, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const pipelat::CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (raise --cap or PIPELAT_CAP)\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return out.code;
}
