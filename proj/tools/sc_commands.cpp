#include <fstream>

#include "common.hpp"
#include "pipelat/lattice.hpp"
#include "pipelat/subword.hpp"

namespace cli {

using namespace pipelat;

namespace {

struct ScArgs {
  std::string type, word, omega, facet, pi, dot, resume;
  bool allow_large = false, count = false, elements = false, lattice = false;
  int max_len = -1, jobs = 1;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
};

std::shared_ptr<const CoxeterGroup> group_of(const Global& g, const ScArgs& a) {
  return std::make_shared<const CoxeterGroup>(CoxeterSystem::build(a.type, a.allow_large), g.cap);
}

ElemId element_of(const CoxeterGroup& grp, const std::string& text) {
  if (text.empty()) return grp.longest();
  if (text == "e") return grp.identity();
  return grp.from_word(parse_word(text));
}

SubwordComplex complex_of(const Global& g, const ScArgs& a) {
  auto grp = group_of(g, a);
  const ElemId omega = element_of(*grp, a.omega);
  return SubwordComplex(grp, parse_word(a.word), omega);
}

void group_cmd(const Global& g, const ScArgs& a) {
  auto grp = group_of(g, a);
  const auto& sys = grp->system();
  json j{{"type", sys.type()},
         {"rank", sys.rank()},
         {"order", grp->size()},
         {"positive_roots", sys.positive_count()},
         {"longest", grp->word_string(grp->longest())},
         {"longest_length", grp->length(grp->longest())}};
  if (a.lattice) j["weak_order_lattice"] = is_lattice(grp->weak_order()).ok;
  if (a.elements) {
    j["elements"] = json::array();
    for (ElemId w = 0; w < grp->size(); ++w) j["elements"].push_back(grp->word_string(w));
  }
  if (g.json()) {
    print_json(j);
    return;
  }
  for (auto& [k, v] : j.items()) {
    if (k == "elements") continue;
    std::cout << k << ' ' << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  if (a.elements)
    for (ElemId w = 0; w < grp->size(); ++w) std::cout << (w == 0 ? "e" : grp->word_string(w)) << '\n';
}

void roots_cmd(const Global& g, const ScArgs& a) {
  const auto sys = CoxeterSystem::build(a.type, a.allow_large);
  json roots = json::array();
  for (int r = 0; r < sys->positive_count(); ++r) {
    if (g.json()) roots.push_back(sys->root_to_string(r));
    else std::cout << sys->root_to_string(r) << '\n';
  }
  if (g.json()) print_json({{"type", sys->type()}, {"positive_roots", roots}});
}

void facets_cmd(const Global& g, const ScArgs& a) {
  const SubwordComplex sc = complex_of(g, a);
  const auto facets = sc.facets(g.cap);
  if (a.count) {
    if (g.json()) print_json({{"facets", facets.size()}});
    else std::cout << facets.size() << '\n';
    return;
  }
  json list = json::array();
  for (const Facet& f : facets) {
    const bool acyclic = sc.is_acyclic(f), strong = acyclic && sc.is_strongly_acyclic(f);
    if (g.json()) list.push_back({{"facet", to_string(f)}, {"acyclic", acyclic}, {"strongly_acyclic", strong}});
    else std::cout << to_string(f) << (strong ? " strongly_acyclic" : acyclic ? " acyclic" : " cyclic") << '\n';
  }
  if (g.json()) print_json({{"Q", to_string(sc.word())}, {"omega", sc.group().word_string(sc.omega())}, {"facets", list}});
}

void extensions_cmd(const Global& g, const ScArgs& a) {
  const SubwordComplex sc = complex_of(g, a);
  const Facet f = parse_facet(a.facet);
  if (!sc.is_facet(f)) throw InvalidInput(a.facet + " is not a facet");
  json list = json::array();
  for (ElemId pi : sc.linear_extensions(f)) {
    const std::string w = pi == 0 ? "e" : sc.group().word_string(pi);
    const bool below = sc.group().weak_leq(pi, sc.omega());
    if (g.json()) list.push_back({{"element", w}, {"below_omega", below}});
    else std::cout << w << (below ? " *" : "") << '\n';
  }
  if (g.json()) print_json({{"facet", to_string(f)}, {"extensions", list}});
}

void quotient_cmd(const Global& g, const ScArgs& a, Outcome& out) {
  const SubwordComplex sc = complex_of(g, a);
  const CoxeterGroup& grp = sc.group();
  const SubwordEquivalence eq = equivalence_partition(sc, g.cap);
  const CongruenceCheck cc = is_congruence(eq.interval_poset, eq.blocks);
  auto name = [&](ElemId w) { return w == 0 ? std::string("e") : grp.word_string(w); };
  if (!cc.ok) {
    std::vector<std::string> w;
    for (std::size_t x : cc.witness) w.push_back(name(eq.interval[x]));
    print_json({{"congruence", false}, {"violation", cc.violation}, {"witness", w}});
    out.code = 1;
    return;
  }
  const FinitePoset q = quotient(eq.interval_poset, eq.blocks);
  std::vector<std::string> labels;
  for (std::size_t b : eq.block_facets) labels.push_back(to_string(eq.facets[b]));
  if (!a.dot.empty())
    with_dot_output(a.dot, [&](std::ostream& os) { write_dot(os, q, [&](std::size_t k) { return labels[k]; }, "quotient"); });
  if (a.dot == "-") return;
  if (g.json()) {
    json blocks = json::array();
    for (std::size_t b = 0; b < eq.blocks.size(); ++b) {
      std::vector<std::string> elems;
      for (std::size_t x : eq.blocks[b]) elems.push_back(name(eq.interval[x]));
      blocks.push_back({{"facet", labels[b]}, {"elements", elems}});
    }
    json covers = json::array();
    for (auto [x, y] : q.covers()) covers.push_back({labels[x], labels[y]});
    print_json({{"congruence", true}, {"classes", blocks}, {"covers", covers}});
    return;
  }
  for (std::size_t b = 0; b < eq.blocks.size(); ++b) {
    std::cout << labels[b] << ':';
    for (std::size_t x : eq.blocks[b]) std::cout << ' ' << name(eq.interval[x]);
    std::cout << '\n';
  }
  std::cout << "covers " << q.covers().size() << '\n';
  for (auto [x, y] : q.covers()) std::cout << labels[x] << " -> " << labels[y] << '\n';
}

void verify_cmd(const Global& g, const ScArgs& a, const std::string& what, Outcome& out) {
  const SubwordComplex sc = complex_of(g, a);
  const Report r = what == "thm-b" ? verify_thm_B(sc) : verify_thm_C(sc);
  if (g.json()) std::cout << r.to_json() << '\n';
  else
    for (const Check& c : r.checks)
      std::cout << c.name << ' ' << (c.pass ? "pass" : "FAIL " + c.witness_json) << '\n';
  if (!r.pass()) out.code = 1;
}

void scan_cmd(const Global& g, const ScArgs& a, const std::string& which, Outcome& out) {
  auto grp = group_of(g, a);
  ScanOptions opts;
  opts.max_len = a.max_len;
  opts.sample = a.sample;
  opts.seed = a.seed;
  opts.jobs = a.jobs;
  if (!a.resume.empty()) opts.resume_from = parse_word(a.resume == "-" ? "" : a.resume);
  const bool want_a = which == "conj-a";
  const ScanSummary s = scan_conjectures(grp, opts, [&](const std::string& line, const ConjectureResult&) {
    std::cout << line << '\n';
  });
  const std::size_t failures = want_a ? s.conj_a_failures : s.conj_b_failures;
  std::cerr << which << ' ' << grp->system().type() << ": " << s.words << " words, " << s.pairs << " pairs, "
            << failures << " counterexamples\n";
  if (failures) out.code = 1;
}

}  // namespace

void add_cox_commands(CLI::App& app, Global& g, Outcome&) {
  auto args = std::make_shared<ScArgs>();
  CLI::App* cox = app.add_subcommand("cox", "Finite Coxeter groups");
  cox->require_subcommand(1);
  auto* grp = cox->add_subcommand("group", "Enumerate the group");
  auto* roots = cox->add_subcommand("roots", "List the positive roots");
  for (CLI::App* c : {grp, roots}) {
    c->add_option("--type", args->type, "Type tag, e.g. A3, B3, D4, H3, I2(5)")->required();
    c->add_flag("--allow-large", args->allow_large, "Allow H4, F4 and E types");
  }
  grp->add_flag("--elements", args->elements, "List every element as a reduced word");
  grp->add_flag("--lattice", args->lattice, "Check that the weak order is a lattice");
  grp->callback([&g, args] { group_cmd(g, *args); });
  roots->callback([&g, args] { roots_cmd(g, *args); });
}

void add_sc_commands(CLI::App& app, Global& g, Outcome& out) {
  auto args = std::make_shared<ScArgs>();
  CLI::App* sc = app.add_subcommand("sc", "Subword complexes");
  sc->require_subcommand(1);
  auto complex_opts = [&](CLI::App* c) {
    c->add_option("--type", args->type, "Type tag")->required();
    c->add_option("--word", args->word, "Word Q, e.g. 1,2,1,2,1,2")->required();
    c->add_option("--omega", args->omega, "Element as a word; 'e' for the identity (default: longest element)");
    c->add_flag("--allow-large", args->allow_large, "Allow H4, F4 and E types");
  };

  auto* fa = sc->add_subcommand("facets", "List facets with acyclicity");
  complex_opts(fa);
  fa->add_flag("--count", args->count, "Print the count only");
  fa->callback([&g, args] { facets_cmd(g, *args); });

  auto* ex = sc->add_subcommand("extensions", "Linear extensions of a facet (* marks elements below omega)");
  complex_opts(ex);
  ex->add_option("--facet", args->facet, "Facet positions, e.g. 1,3,4")->required();
  ex->callback([&g, args] { extensions_cmd(g, *args); });

  auto* sw = sc->add_subcommand("sweep", "Facet produced by the sweeping algorithm");
  complex_opts(sw);
  sw->add_option("--pi", args->pi, "Element as a word; 'e' for the identity")->required();
  sw->callback([&g, args] {
    const SubwordComplex c = complex_of(g, *args);
    const Facet f = c.sweep(args->pi == "e" ? c.group().identity() : c.group().from_word(parse_word(args->pi)));
    if (g.json()) print_json({{"facet", to_string(f)}});
    else std::cout << to_string(f) << '\n';
  });

  auto* qu = sc->add_subcommand("quotient", "Quotient of [e,omega] by the subword complex equivalence");
  complex_opts(qu);
  qu->add_option("--dot", args->dot, "Write the quotient Hasse diagram as DOT to a file (- for stdout)");
  qu->callback([&g, &out, args] { quotient_cmd(g, *args, out); });

  auto* ve = sc->add_subcommand("verify", "Verify linear extension properties");
  ve->require_subcommand(1);
  const std::pair<const char*, const char*> checks[] = {
      {"thm-b", "Linear extension sets: convexity, lower sets, covers, partition"},
      {"thm-c", "Partition of [e,omega] and root cone intersection (sorting words)"}};
  for (auto [name, help] : checks) {
    auto* c = ve->add_subcommand(name, help);
    complex_opts(c);
    const std::string what = name;
    c->callback([&g, &out, args, what] { verify_cmd(g, *args, what, out); });
  }

  auto* scan = sc->add_subcommand("scan", "Scan alternating words for counterexamples (JSON lines)");
  scan->require_subcommand(1);
  const std::pair<const char*, const char*> scans[] = {
      {"conj-a", "The equivalence on [e,omega] is a lattice congruence"},
      {"conj-b", "Quotient covers are the extremal flips between strongly acyclic facets"}};
  for (auto [name, help] : scans) {
    auto* c = scan->add_subcommand(name, help);
    c->add_option("--type", args->type, "Type tag")->required();
    c->add_option("--max-len", args->max_len, "Maximal word length (default: length of the longest element)");
    c->add_option("--sample", args->sample, "Scan this many random words instead");
    c->add_option("--seed", args->seed, "Seed for --sample");
    c->add_option("--resume-from", args->resume, "Start at this word ('-' for the empty word)");
    c->add_option("--jobs", args->jobs, "Worker threads")->check(CLI::Range(1, 256));
    c->add_flag("--allow-large", args->allow_large, "Allow H4, F4 and E types");
    const std::string which = name;
    c->callback([&g, &out, args, which] { scan_cmd(g, *args, which, out); });
  }
}

}  // namespace cli
