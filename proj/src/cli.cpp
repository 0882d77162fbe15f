#include "elparg/cli.hpp"

#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "elparg/dialogue.hpp"
#include "elparg/dot.hpp"
#include "elparg/generator.hpp"
#include "elparg/report.hpp"
#include "elparg/selftest.hpp"
#include "elparg/wfsx.hpp"

namespace elparg {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AttackKind kind_arg(const std::string& s, const char* what) {
  auto k = parse_attack_kind(s);
  if (!k) throw UsageError(std::string("unknown notion of attack for ") + what + ": '" + s + "'");
  return *k;
}

std::string literal_list(const LiteralSet& s) {
  std::vector<std::string> xs;
  for (const auto& l : s) xs.push_back(render(l));
  std::sort(xs.begin(), xs.end());
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return out;
}

std::string arg_line(const Framework& fw, ArgId a) {
  return "#" + std::to_string(a) + ": " + fw.arguments()[a].render();
}

std::string arg_list(const Framework& fw, const ArgBits& bits) {
  std::string out;
  for (ArgId a : fw.arguments().ids(bits)) out += (out.empty() ? "" : ", ") + fw.arguments()[a].render();
  return out.empty() ? "{}" : out;
}

struct Options {
  std::string format = "text";
  bool quiet = false;
  std::string file;
  std::string attack = "u", defence = "a";
  std::string kind = "u";
  std::string dot;
  std::string query, goal;
  bool stages = false, compare = false;
  GenParams gen;
  std::size_t corpus = 0;
  std::uint64_t selftest_seed = 1;
};

SemanticsParams params_of(const Options& o) {
  return {kind_arg(o.attack, "--attack"), kind_arg(o.defence, "--defence")};
}

void cmd_args(const Options& o, RunReport& rep) {
  const Framework fw(parse_program_file(o.file));
  for (ArgId a = 0; a < fw.arguments().size(); ++a) rep.lines.push_back(arg_line(fw, a));
}

void cmd_attacks(const Options& o, RunReport& rep) {
  const AttackKind k = kind_arg(o.kind, "--kind");
  rep.params["kind"] = std::string(tag(k));
  const Framework fw(parse_program_file(o.file));
  for (auto [x, y] : fw.relation(k).pairs())
    rep.lines.push_back("#" + std::to_string(x) + " " + std::string(tag(k)) + " #" + std::to_string(y));
  if (!o.dot.empty()) write_text_file(o.dot, attack_graph_dot(fw, k));
}

void cmd_justify(const Options& o, RunReport& rep) {
  const SemanticsParams params = params_of(o);
  rep.params["semantics"] = params.render();
  const Program p = parse_program_file(o.file);
  if (!o.query.empty()) {
    const Literal l = parse_literal(o.query);
    const bool j = literal_status(p, params, l);
    rep.lines.push_back(render(l) + ": " + (j ? "justified" : "not justified"));
    return;
  }
  const Framework fw(p);
  const FixpointResult res = fixpoint(fw, params);
  if (o.stages) {
    const auto deltas = res.deltas();
    for (std::size_t n = 0; n < deltas.size(); ++n)
      if (deltas[n].any()) rep.lines.push_back(std::to_string(n + 1) + ": " + arg_list(fw, deltas[n]));
  } else {
    for (ArgId a : fw.arguments().ids(res.justified)) rep.lines.push_back(arg_line(fw, a));
  }
}

void cmd_status(const Options& o, RunReport& rep) {
  const SemanticsParams params = params_of(o);
  rep.params["semantics"] = params.render();
  const Framework fw(parse_program_file(o.file));
  const FixpointResult res = fixpoint(fw, params);
  for (ArgId a = 0; a < fw.arguments().size(); ++a)
    rep.lines.push_back(arg_line(fw, a) + " " + res.status_of[a].render());
}

void cmd_hierarchy(const Options& o, RunReport& rep) {
  const HierarchyReport h = hierarchy_report(parse_program_file(o.file));
  std::ostringstream head;
  head << "x\\y ";
  for (AttackKind y : kHierarchyKinds) head << std::setw(4) << tag(y);
  rep.lines.push_back(head.str());
  for (AttackKind x : kHierarchyKinds) {
    std::ostringstream row;
    row << std::left << std::setw(4) << tag(x) << std::right;
    for (AttackKind y : kHierarchyKinds) row << std::setw(4) << h.justified.at({x, y}).count();
    rep.lines.push_back(row.str());
  }
  for (const auto& c : h.checks) rep.add(c.name, c.pass, c.detail);
}

void cmd_coherence(const Options& o, RunReport& rep) {
  const SemanticsParams params = params_of(o);
  rep.params["semantics"] = params.render();
  const auto v = check_coherence(parse_program_file(o.file), params);
  for (const auto& l : v) rep.lines.push_back(render(l.complement()) + " justified but not " + render(l) + " is not");
  rep.add("coherence " + params.render(), v.empty(), v.empty() ? "" : std::to_string(v.size()) + " violations");
}

void cmd_wfsx(const Options& o, RunReport& rep) {
  const Program p = parse_program_file(o.file);
  const WfmResult w = wfm_p(p);
  if (o.stages)
    for (std::size_t i = 0; i < w.stages.size(); ++i)
      rep.lines.push_back("I" + std::to_string(i) + ": {" + literal_list(w.stages[i]) + "}");
  rep.lines.push_back("T: " + literal_list(w.model.t));
  rep.lines.push_back("F: " + literal_list(w.model.f));
  if (o.compare) {
    const Interpretation m = as_interpretation(model(p, {AttackKind::Undercut, AttackKind::Attack}));
    const bool same = m == w.model;
    rep.add("wfm_p equals u/a model", same,
            same ? "" : "u/a model T: " + literal_list(m.t) + " F: " + literal_list(m.f));
  }
}

void cmd_prove(const Options& o, RunReport& rep) {
  const SemanticsParams params = params_of(o);
  rep.params["semantics"] = params.render();
  if (o.goal.empty()) throw UsageError("prove needs --goal");
  const ObjectiveLiteral goal = parse_objective_literal(o.goal);
  rep.params["goal"] = render(goal);
  const Framework fw(parse_program_file(o.file));
  const auto ids = fw.arguments().for_literal(goal);
  if (ids.empty()) rep.lines.push_back("no argument for " + render(goal));
  bool won = false;
  for (ArgId a : ids) {
    const ProofOutcome out = prove(fw, params, a);
    std::string line = arg_line(fw, a) + (out.won ? " WON" : " LOST");
    if (out.won) line += " (height " + std::to_string(out.height) + ", " + std::to_string(out.tree->size()) + " nodes)";
    rep.lines.push_back(line);
    if (out.won && !o.dot.empty() && !won) write_text_file(o.dot, dialogue_tree_dot(fw, *out.tree));
    won = won || out.won;
  }
  rep.add("proponent wins for " + render(goal), won);
}

void cmd_gen(const Options& o, RunReport& rep) {
  rep.params["generator"] = o.gen.render();
  const std::string text = render(random_program(o.gen));
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) rep.lines.push_back(line);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Argumentation semantics for extended logic programs", "elparg"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--quiet", o.quiet, "Only print failures");

  auto file = [&](CLI::App* s) { s->add_option("file", o.file, "Program file (.elp)")->required(); };
  auto semantics = [&](CLI::App* s) {
    s->add_option("--attack,-x", o.attack, "Opponent's notion of attack (r, u, a, d, sa, su)");
    s->add_option("--defence,-y", o.defence, "Proponent's notion of defence");
  };

  auto* args = app.add_subcommand("args", "List the minimal arguments");
  file(args);
  auto* attacks = app.add_subcommand("attacks", "List one attack relation");
  file(attacks);
  attacks->add_option("--kind,-k", o.kind, "Notion of attack")->required();
  attacks->add_option("--dot", o.dot, "Write the attack graph as DOT");
  auto* justify = app.add_subcommand("justify", "Justified arguments or literal status");
  file(justify);
  semantics(justify);
  justify->add_flag("--stages", o.stages, "Print arguments added at each stage");
  justify->add_option("--query", o.query, "Literal to query, e.g. p, ~p, 'not p'");
  auto* status = app.add_subcommand("status", "Justified/overruled/defensible per argument");
  file(status);
  semantics(status);
  auto* hierarchy = app.add_subcommand("hierarchy", "All 25 semantics and their ordering");
  file(hierarchy);
  auto* coherence = app.add_subcommand("coherence", "Check that ~L justified implies not L justified");
  file(coherence);
  semantics(coherence);
  auto* wfsx = app.add_subcommand("wfsx", "Paraconsistent well-founded model");
  file(wfsx);
  wfsx->add_flag("--stages", o.stages, "Print the iteration");
  wfsx->add_flag("--compare", o.compare, "Compare with the u/a argumentation model");
  auto* prove_cmd = app.add_subcommand("prove", "Search for winning dialogue trees");
  file(prove_cmd);
  semantics(prove_cmd);
  prove_cmd->add_option("--goal", o.goal, "Objective literal")->required();
  prove_cmd->add_option("--dot", o.dot, "Write the first winning tree as DOT");
  auto* gen = app.add_subcommand("gen", "Print a random program");
  gen->add_option("--seed", o.gen.seed);
  gen->add_option("--atoms", o.gen.num_atoms)->check(CLI::PositiveNumber);
  gen->add_option("--rules", o.gen.num_rules);
  gen->add_option("--max-body", o.gen.max_body);
  gen->add_option("--neg-head", o.gen.neg_head_prob)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--expl-neg", o.gen.expl_neg_prob)->check(CLI::Range(0.0, 1.0));
  gen->add_option("--default", o.gen.default_prob)->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--pair", o.gen.complementary_facts, "Add a complementary fact pair");
  auto* self = app.add_subcommand("selftest", "Run the built-in checks");
  self->add_option("--corpus", o.corpus, "Also check this many random programs");
  self->add_option("--seed", o.selftest_seed, "Corpus seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  RunReport rep;
  CLI::App* sub = app.get_subcommands().front();
  rep.command = sub->get_name();
  if (!o.file.empty()) rep.params["file"] = o.file;
  try {
    if (sub == args) cmd_args(o, rep);
    else if (sub == attacks) cmd_attacks(o, rep);
    else if (sub == justify) cmd_justify(o, rep);
    else if (sub == status) cmd_status(o, rep);
    else if (sub == hierarchy) cmd_hierarchy(o, rep);
    else if (sub == coherence) cmd_coherence(o, rep);
    else if (sub == wfsx) cmd_wfsx(o, rep);
    else if (sub == prove_cmd) cmd_prove(o, rep);
    else if (sub == gen) cmd_gen(o, rep);
    else if (sub == self) rep = selftest({o.corpus, o.selftest_seed});
  } catch (const ParseError& e) {
    err << (o.file.empty() ? "" : o.file + ":") << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << e.what() << '\n' << sub->help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (o.format == "json")
    out << rep.to_json() << '\n';
  else
    rep.print_text(out, o.quiet);
  return rep.ok() ? 0 : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace elparg
