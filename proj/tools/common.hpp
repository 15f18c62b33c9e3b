#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstddef>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pipelat/coxeter.hpp"
#include "pipelat/errors.hpp"
#include "pipelat/perm.hpp"
#include "pipelat/pipedream.hpp"

namespace cli {

using json = nlohmann::ordered_json;

struct Global {
  std::string format = "text";
  std::size_t cap = pipelat::default_cap();
  bool json() const { return format == "json"; }
};

// Exit code returned by the handler of the subcommand that ran.
struct Outcome {
  int code = 0;
};

inline std::string compact(const pipelat::PipeDream& p) {
  std::string s = pipelat::to_ascii(p);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  for (char& ch : s)
    if (ch == '\n') ch = '/';
  return s.empty() ? "-" : s;
}

inline json pd_json(const pipelat::PipeDream& p) { return json::parse(pipelat::to_json(p)); }

inline void print_json(const json& j) { std::cout << j.dump() << '\n'; }

// Path "-" writes to stdout.
void with_dot_output(const std::string& path, const std::function<void(std::ostream&)>& body);
void write_graph_dot(const std::string& path, const std::vector<std::string>& labels,
                     const std::vector<std::pair<std::size_t, std::size_t>>& arcs);

void add_pd_commands(CLI::App& app, Global& g, Outcome& out);
void add_cox_commands(CLI::App& app, Global& g, Outcome& out);
void add_sc_commands(CLI::App& app, Global& g, Outcome& out);

}  // namespace cli
