#include <algorithm>
#include <fstream>
#include <map>

#include "common.hpp"
#include "pipelat/lattice.hpp"
#include "pipelat/pdlattice.hpp"

namespace cli {

using namespace pipelat;

namespace {

struct PdArgs {
  std::string omega, pi, order = "rows", dot;
  bool acyclic = false, count = false, anti = false;
  int n = 0;
};

std::vector<std::string> labels_of(const std::vector<PipeDream>& pds) {
  std::vector<std::string> out;
  for (const auto& p : pds) out.push_back(compact(p));
  return out;
}

void enumerate_cmd(const Global& g, const PdArgs& a) {
  const Permutation omega = parse_permutation(a.omega);
  const auto pds = enumerate(omega, a.acyclic, g.cap);
  if (g.json()) {
    json j{{"omega", to_string(omega)}, {"acyclic_only", a.acyclic}, {"count", pds.size()}};
    if (!a.count) {
      j["pipe_dreams"] = json::array();
      for (const auto& p : pds) j["pipe_dreams"].push_back(pd_json(p));
    }
    print_json(j);
    return;
  }
  if (a.count) {
    std::cout << pds.size() << '\n';
    return;
  }
  for (std::size_t k = 0; k < pds.size(); ++k) std::cout << "# " << k << '\n' << to_ascii(pds[k]);
}

void flipgraph_cmd(const Global& g, const PdArgs& a) {
  const Permutation omega = parse_permutation(a.omega);
  const FlipGraph fg = increasing_flip_graph(omega, a.acyclic, g.cap);
  if (!a.dot.empty()) write_graph_dot(a.dot, labels_of(fg.vertices), fg.arcs);
  if (a.dot == "-") return;
  if (g.json()) {
    json j{{"omega", to_string(omega)}, {"vertices", json::array()}, {"arcs", fg.arcs}};
    for (const auto& p : fg.vertices) j["vertices"].push_back(pd_json(p));
    print_json(j);
    return;
  }
  std::cout << "vertices " << fg.vertices.size() << '\n';
  for (std::size_t k = 0; k < fg.vertices.size(); ++k) std::cout << k << ' ' << compact(fg.vertices[k]) << '\n';
  std::cout << "arcs " << fg.arcs.size() << '\n';
  for (auto [x, y] : fg.arcs) std::cout << x << " -> " << y << '\n';
}

void print_pd(const Global& g, const PipeDream& p) {
  if (g.json()) print_json(pd_json(p));
  else std::cout << to_ascii(p);
}

void classes_cmd(const Global& g, const PdArgs& a) {
  const Permutation omega = parse_permutation(a.omega);
  const auto pc = congruence_partition(omega, g.cap);
  json blocks = json::array();
  for (std::size_t b = 0; b < pc.blocks.size(); ++b) {
    std::vector<std::string> perms;
    for (std::size_t x : pc.blocks[b]) perms.push_back(to_string(pc.interval.elements[x]));
    if (g.json()) blocks.push_back({{"pipe_dream", pd_json(pc.apd[b])}, {"permutations", perms}});
    else {
      std::cout << compact(pc.apd[b]) << ':';
      for (const auto& s : perms) std::cout << ' ' << s;
      std::cout << '\n';
    }
  }
  if (g.json()) print_json({{"omega", to_string(omega)}, {"classes", blocks}});
}

void quotient_cmd(const Global& g, const PdArgs& a, Outcome& out) {
  const Permutation omega = parse_permutation(a.omega);
  const auto pc = congruence_partition(omega, g.cap);
  const FinitePoset interval = pc.interval.poset();
  const CongruenceCheck cc = is_congruence(interval, pc.blocks);
  if (!cc.ok) {
    std::vector<std::string> w;
    for (std::size_t x : cc.witness) w.push_back(to_string(pc.interval.elements[x]));
    print_json({{"omega", to_string(omega)}, {"congruence", false}, {"violation", cc.violation}, {"witness", w}});
    out.code = 1;
    return;
  }
  const FinitePoset q = quotient(interval, pc.blocks);
  const auto labels = labels_of(pc.apd);
  if (!a.dot.empty())
    with_dot_output(a.dot, [&](std::ostream& os) { write_dot(os, q, [&](std::size_t k) { return labels[k]; }, "quotient"); });
  if (a.dot == "-") return;
  if (g.json()) {
    json j{{"omega", to_string(omega)}, {"congruence", true}, {"classes", json::array()}, {"covers", q.covers()}};
    for (const auto& p : pc.apd) j["classes"].push_back(pd_json(p));
    print_json(j);
    return;
  }
  std::cout << "classes " << pc.apd.size() << '\n';
  for (std::size_t k = 0; k < pc.apd.size(); ++k) std::cout << k << ' ' << labels[k] << '\n';
  std::cout << "covers " << q.covers().size() << '\n';
  for (auto [x, y] : q.covers()) std::cout << x << " -> " << y << '\n';
}

// One report per omega; returns false on the first failing report.
Report nu_report(const Permutation& omega, std::size_t cap) {
  const NuAcyclicity r = nu_acyclicity_report(omega, cap);
  const bool dominant = is_dominant(omega);
  Check c{"acyclic_iff_dominant", r.all_acyclic == dominant, "null"};
  if (!c.pass)
    c.witness_json = json{{"dominant", dominant}, {"all_acyclic", r.all_acyclic},
                          {"pipe_dream", r.witness ? pd_json(*r.witness) : json(nullptr)}}
                         .dump();
  return {"omega", to_string(omega), {c}};
}

Report canopy_report(const Permutation& omega, std::size_t cap) {
  const WeakInterval iv = weak_interval(omega, cap);
  Check c{"recoils_equal_canopy", true, "null"};
  for (const Permutation& pi : iv.elements) {
    if (recoils(pi, omega) == canopy(insert(pi, omega))) continue;
    c.pass = false;
    c.witness_json = json{{"pi", to_string(pi)}}.dump();
    break;
  }
  return {"omega", to_string(omega), {c}};
}

Report rewrite_report(const Permutation& omega, std::size_t cap) {
  const auto pc = congruence_partition(omega, cap);
  Blocks expected = pc.blocks;
  for (auto& b : expected) std::sort(b.begin(), b.end());
  std::sort(expected.begin(), expected.end());
  Blocks got = rewriting_classes(pc.interval);
  std::sort(got.begin(), got.end());
  Check closure{"rewriting_closure", got == expected, "null"};
  Check extremes{"pattern_extremes", true, "null"};
  for (const auto& b : pc.blocks) {
    std::vector<Permutation> perms;
    for (std::size_t x : b) perms.push_back(pc.interval.elements[x]);
    const auto [lo, hi] = block_extremes(perms);
    for (const Permutation& pi : perms) {
      if (is_class_minimum(pi, omega) == (pi == lo) && is_class_maximum(pi, omega) == (pi == hi)) continue;
      extremes.pass = false;
      extremes.witness_json = json{{"pi", to_string(pi)}, {"min", to_string(lo)}, {"max", to_string(hi)}}.dump();
      break;
    }
    if (!extremes.pass) break;
  }
  return {"omega", to_string(omega), {closure, extremes}};
}

void verify_cmd(const Global& g, const PdArgs& a, const std::string& what, Outcome& out) {
  std::vector<Permutation> targets;
  if (!a.omega.empty()) targets.push_back(parse_permutation(a.omega));
  else if (a.n >= 1) targets = all_permutations(a.n);
  else throw InvalidInput("give --n or --omega");
  std::size_t failures = 0;
  for (const Permutation& omega : targets) {
    Report r;
    if (what == "theorem-a") r = verify_theorem_A(omega, g.cap);
    else if (what == "nu") r = nu_report(omega, g.cap);
    else if (what == "canopy") r = canopy_report(omega, g.cap);
    else r = rewrite_report(omega, g.cap);
    if (g.json()) std::cout << r.to_json() << '\n';
    if (!r.pass()) {
      ++failures;
      if (!g.json()) std::cout << "FAIL " << r.subject << ' ' << r.first_failure()->name << ' '
                               << r.first_failure()->witness_json << '\n';
    }
  }
  if (!g.json()) std::cout << what << ": " << targets.size() << " checked, " << failures << " failed\n";
  if (failures) out.code = 1;
}

}  // namespace

void add_pd_commands(CLI::App& app, Global& g, Outcome& out) {
  auto args = std::make_shared<PdArgs>();
  CLI::App* pd = app.add_subcommand("pd", "Pipe dreams of a permutation");
  pd->require_subcommand(1);
  auto omega_opt = [&](CLI::App* c, bool required = true) {
    auto* o = c->add_option("--omega", args->omega, "Exit permutation, e.g. 1365724 or 0,2,1,3");
    if (required) o->required();
  };

  auto* en = pd->add_subcommand("enumerate", "List the reduced pipe dreams");
  omega_opt(en);
  en->add_flag("--acyclic", args->acyclic, "Only acyclic pipe dreams");
  en->add_flag("--count", args->count, "Print the count only");
  en->callback([&g, args] { enumerate_cmd(g, *args); });

  auto* fg = pd->add_subcommand("flipgraph", "Increasing flip graph");
  omega_opt(fg);
  fg->add_flag("--acyclic", args->acyclic, "Restrict to acyclic pipe dreams");
  fg->add_option("--dot", args->dot, "Write the graph as DOT to a file (- for stdout)");
  fg->callback([&g, args] { flipgraph_cmd(g, *args); });

  auto* gr = pd->add_subcommand("greedy", "Greedy (or antigreedy) pipe dream");
  omega_opt(gr);
  gr->add_flag("--anti", args->anti, "Antigreedy instead");
  gr->callback([&g, args] {
    const Permutation omega = parse_permutation(args->omega);
    print_pd(g, args->anti ? antigreedy(omega) : greedy(omega));
  });

  auto* ins = pd->add_subcommand("insert", "Insertion of pi into the shape of omega");
  omega_opt(ins);
  ins->add_option("--pi", args->pi, "Permutation below omega")->required();
  ins->callback([&g, args] { print_pd(g, insert(parse_permutation(args->pi), parse_permutation(args->omega))); });

  auto* sw = pd->add_subcommand("sweep", "Sweeping algorithm");
  omega_opt(sw);
  sw->add_option("--pi", args->pi, "Permutation below omega")->required();
  sw->add_option("--order", args->order, "Cell order")->check(CLI::IsMember({"rows", "columns"}));
  sw->callback([&g, args] {
    const Permutation omega = parse_permutation(args->omega);
    const SweepOrder order = args->order == "rows" ? rows_bottom_up(omega.size()) : columns_left_right(omega.size());
    print_pd(g, sweep(parse_permutation(args->pi), omega, order));
  });

  auto* cl = pd->add_subcommand("classes", "Classes of the pipe dream congruence on [e,omega]");
  omega_opt(cl);
  cl->callback([&g, args] { classes_cmd(g, *args); });

  auto* qu = pd->add_subcommand("quotient", "Quotient of [e,omega] by the pipe dream congruence");
  omega_opt(qu);
  qu->add_option("--dot", args->dot, "Write the quotient Hasse diagram as DOT to a file (- for stdout)");
  qu->callback([&g, &out, args] { quotient_cmd(g, *args, out); });

  auto* ve = pd->add_subcommand("verify", "Exhaustive checks over S_n");
  ve->require_subcommand(1);
  const std::pair<const char*, const char*> checks[] = {
      {"theorem-a", "Partition, congruence and quotient against the acyclic flip graph"},
      {"nu", "Acyclicity of all pipe dreams of 0omega against dominance"},
      {"canopy", "Recoils against the canopy of the inserted pipe dream"},
      {"rewrite", "Rewriting closure and pattern extremes against the congruence classes"}};
  for (auto [name, help] : checks) {
    auto* c = ve->add_subcommand(name, help);
    c->add_option("--n", args->n, "Check every omega in S_n")->check(CLI::Range(1, 9));
    omega_opt(c, false);
    const std::string what = name;
    c->callback([&g, &out, args, what] { verify_cmd(g, *args, what, out); });
  }
}

}  // namespace cli
