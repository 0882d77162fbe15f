// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

#include "elparg/cli.hpp"
#include "elparg/dialogue.hpp"
#include "elparg/fixtures.hpp"
#include "elparg/generator.hpp"
#include "elparg/selftest.hpp"
#include "elparg/wfsx.hpp"

using namespace elparg;

namespace {

constexpr std::uint64_t kCorpusSeed = 20240611;
constexpr std::size_t kCorpusSize = 500;

using Names = std::set<std::string>;
using K = AttackKind;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = make_corpus(kCorpusSize, kCorpusSeed, 6, 10);
  return c;
}

std::vector<SemanticsParams> pat(const char* s) { return *parse_params_pattern(s); }

Names names(const Framework& fw, const ArgBits& bits) {
  const auto r = fw.arguments().renderings(bits);
  return {r.begin(), r.end()};
}

std::string show(const Names& n) {
  std::string out = "{";
  for (const auto& s : n) out += (out.size() > 1 ? ", " : "") + s;
  return out + "}";
}

std::string reproducer(const CorpusEntry& e) { return " [" + e.params.render() + "]\n" + render(e.program); }

// Criterion 1: staged `justify` output for every column of the table.
Outcome table_reproduction() {
  Outcome o;
  struct Column {
    const char* params;
    std::vector<Names> rows;
  };
  const Names s{"[s]"}, nq{"[~q <- not r]"}, p{"[p <- not q]"}, ps{"[p <- not q]", "[s]"};
  const Column columns[] = {
      {"a/x", {{}, {}, {}, {}}},
      {"d/x", {s, {}, {}, {}}},
      {"u/u", {s, nq, {}, {}}},          {"u/su", {s, nq, {}, {}}},
      {"u/a", {s, nq, p, {}}},           {"u/d", {s, nq, p, {}}},  {"u/sa", {s, nq, p, {}}},
      {"sa/sa", {ps, {}, {}, {}}},       {"sa/su", {ps, {}, {}, {}}},
      {"sa/a", {ps, nq, {}, {}}},        {"sa/d", {ps, nq, {}, {}}}, {"sa/u", {ps, nq, {}, {}}},
      {"su/x", {{"[p <- not q]", "[q <- not p]", "[s]"}, nq, {}, {}}},
  };
  const auto fx = std::find_if(fixtures().begin(), fixtures().end(), [](const Fixture& f) { return f.name == "staged"; });
  const std::string path = "acceptance_staged.elp";
  {
    std::ofstream(path) << fx->text;
  }
  for (const auto& col : columns) {
    for (const auto& params : pat(col.params)) {
      std::ostringstream out, err;
      const int code = run_cli({"elparg", "justify", path, "--attack", std::string(tag(params.attack)), "--defence",
                                std::string(tag(params.defence)), "--stages"},
                               out, err);
      if (code != 0) {
        o.fail(params.render() + ": exit " + std::to_string(code));
        continue;
      }
      // Lines are `n: [..], [..]`; rows missing from the output are empty.
      std::vector<Names> rows(col.rows.size());
      std::istringstream in(out.str());
      for (std::string line; std::getline(in, line);) {
        const auto colon = line.find(": ");
        const std::size_t n = std::stoul(line.substr(0, colon));
        if (n == 0 || n > rows.size()) {
          o.fail(params.render() + ": unexpected row " + line);
          continue;
        }
        std::string rest = line.substr(colon + 2);
        for (std::size_t pos; (pos = rest.find("], [")) != std::string::npos; rest = rest.substr(pos + 3))
          rows[n - 1].insert(rest.substr(0, pos + 1));
        rows[n - 1].insert(rest);
      }
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i] != col.rows[i])
          o.fail(params.render() + " row " + std::to_string(i + 1) + ": " + show(rows[i]) + " vs " + show(col.rows[i]));
    }
  }
  std::remove(path.c_str());
  return o;
}

// Criterion 2: the four minimal arguments of the train program.
Outcome train_arguments() {
  Outcome o;
  const Framework fw(fixture_program("train"));
  const Names want{"[cross <- ~train; ~train <- wear_glasses, not train; wear_glasses]",
                   "[~train <- wear_glasses, not train; wear_glasses]", "[wear_glasses]", "[~cross <- not ~train]"};
  const Names got = names(fw, ~fw.arguments().empty_bits());
  if (got != want) o.fail(show(got));
  if (!fw.arguments().concluding(parse_objective_literal("train")).empty()) o.fail("an argument concludes train");
  if (fw.arguments().for_literal(parse_objective_literal("cross")).size() != 1) o.fail("cross needs one argument");
  return o;
}

// Criterion 3: stated J-sets of the six counterexample programs.
Outcome counterexamples() {
  Outcome o;
  struct Claim {
    const char* fixture;
    std::vector<const char*> params;
    Names want;
  };
  const std::vector<Claim> claims = {
      {"mutual", {"su/x", "sa/x"}, {"[p <- not q]", "[q <- not p]"}},
      {"mutual", {"a/x", "d/x", "u/x"}, {}},
      {"mutual_fact", {"d/x", "a/x"}, {}},
      {"mutual_fact", {"sa/su", "sa/sa"}, {"[q <- not p]"}},
      {"mutual_fact", {"u/su", "u/u"}, {"[~p]"}},
      {"mutual_fact", {"u/a"}, {"[~p]", "[q <- not p]"}},
      {"mutual_fact", {"sa/u"}, {"[~p]", "[q <- not p]"}},
      {"cycle4", {"sa/x"}, {}},
      {"cycle4", {"su/u", "su/su"}, {"[~p]"}},
      {"cycle4", {"u/a", "su/sa", "su/a"}, {"[~p]", "[q <- not r]", "[s <- not p]"}},
      {"mutual_extra", {"u/x", "d/x", "a/x"}, {}},
      {"mutual_extra", {"su/su", "su/sa", "sa/su", "sa/sa"}, {"[p <- not q]", "[q <- not p]"}},
      {"mutual_extra", {"su/u", "su/a", "sa/u", "sa/a"}, {"[p <- not q]", "[q <- not p]", "[r <- not p]"}},
      {"self_guard", {"a/x"}, {}},
      {"self_guard", {"d/x"}, {"[~p]"}},
      {"cross_rebut", {"sa/x", "d/x", "a/x"}, {}},
      {"cross_rebut", {"u/x", "su/x"}, {"[p]", "[q]"}},
  };
  for (const auto& c : claims) {
    const Framework fw(fixture_program(c.fixture));
    for (const char* ps : c.params)
      for (const auto& params : pat(ps)) {
        const Names got = names(fw, fixpoint(fw, params).justified);
        if (got != c.want) o.fail(std::string(c.fixture) + " " + params.render() + ": " + show(got));
      }
  }
  return o;
}

Outcome corpus_hierarchy() {
  Outcome o;
  for (const auto& e : corpus()) {
    const HierarchyReport rep = hierarchy_report(e.program);
    for (const auto& c : rep.checks)
      if (!c.pass) o.fail(c.name + ": " + c.detail + reproducer(e));
  }
  return o;
}

Outcome corpus_relation_algebra() {
  Outcome o;
  for (const auto& e : corpus()) {
    const ArgumentSet args = enumerate_arguments(e.program);
    const AttackRelations rels(args);
    const AttackRelation u = attack_relation(args, K::Undercut);
    const AttackRelation r = attack_relation(args, K::Rebut);
    const AttackRelation ui = inverse_relation(u);
    const AttackRelation a = attack_relation(args, K::Attack), d = attack_relation(args, K::Defeat),
                         sa = attack_relation(args, K::StrongAttack), su = attack_relation(args, K::StrongUndercut);
    if (!(d == (u | (r - ui)))) o.fail("d identity" + reproducer(e));
    if (!(sa == ((u | r) - ui))) o.fail("sa identity" + reproducer(e));
    if (!(su == (u - ui))) o.fail("su identity" + reproducer(e));
    if (!(a == (u | r))) o.fail("a identity" + reproducer(e));
    if (!(su.subset_of(u) && u.subset_of(d) && d.subset_of(a) && su.subset_of(sa) && sa.subset_of(d) && r.subset_of(a)))
      o.fail("inclusion diagram" + reproducer(e));
    for (K k : kAllKinds)
      if (!(rels[k] == attack_relation(args, k))) o.fail(std::string(tag(k)) + " engine differs" + reproducer(e));
  }
  return o;
}

Outcome corpus_wfsx() {
  Outcome o;
  std::size_t contradictory = 0;
  for (const auto& e : corpus()) {
    if (e.params.complementary_facts) ++contradictory;
    if (!check_wfsx_equivalence(e.program)) o.fail("mismatch" + reproducer(e));
  }
  for (const auto& f : fixtures())
    if (!check_wfsx_equivalence(parse_program(f.text))) o.fail("mismatch on " + std::string(f.name));
  if (contradictory < 50) o.fail("only " + std::to_string(contradictory) + " contradictory programs");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(contradictory) + " programs with a complementary fact pair";
  return o;
}

// Criterion 7: gamma membership against the argument-based reading, for
// every subset of the Herbrand base taken as the true side.
Outcome gamma_characterisation() {
  Outcome o;
  std::size_t programs = 0;
  for (const auto& e : corpus()) {
    const Program& p = e.program;
    const auto& hb = p.herbrand_base();
    if (hb.size() > 8) continue;
    ++programs;
    const ArgumentSet args = enumerate_arguments(p);
    for (std::size_t mask = 0; mask < (std::size_t{1} << hb.size()); ++mask) {
      LiteralSet t;
      for (std::size_t i = 0; i < hb.size(); ++i)
        if (mask >> i & 1) t.insert(hb[i]);
      const LiteralSet g = gamma(p, t), gs = gamma_s(p, t);
      for (const auto& l : hb) {
        bool plain = false, semi = false;
        for (ArgId a : args.concluding(l)) {
          const Argument& arg = args[a];
          bool hit = false, clash = false;
          for (const auto& d : arg.assumptions()) hit = hit || t.count(d.inner);
          for (const auto& c : arg.conclusions()) clash = clash || t.count(c.complement());
          plain = plain || !hit;
          semi = semi || (!hit && !clash);
        }
        if (plain != (g.count(l) > 0)) o.fail("gamma on " + render(l) + reproducer(e));
        if (semi != (gs.count(l) > 0)) o.fail("gamma_s on " + render(l) + reproducer(e));
      }
    }
  }
  if (programs < 100) o.fail("sub-corpus too small: " + std::to_string(programs));
  if (o.pass) o.detail = std::to_string(programs) + " programs";
  return o;
}

Outcome corpus_proof_theory() {
  Outcome o;
  std::size_t proofs = 0;
  auto check = [&](const Program& p, const std::string& where) {
    const Framework fw(p);
    for (const auto& params : hierarchy_params()) {
      const FixpointResult res = fixpoint(fw, params);
      for (ArgId a = 0; a < fw.arguments().size(); ++a) {
        const ProofOutcome out = prove(fw, params, a);
        ++proofs;
        if (out.won != res.justified.test(a)) o.fail(params.render() + " " + fw.arguments()[a].render() + where);
        if (out.won && !verify_tree(fw, params, *out.tree)) o.fail("tree rejected " + params.render() + where);
        if (out.won && out.height + 1 > res.first_stage(a)) o.fail("height bound " + params.render() + where);
      }
    }
  };
  for (const auto& f : fixtures()) check(parse_program(f.text), " in " + std::string(f.name));
  for (const auto& e : corpus()) check(e.program, reproducer(e));
  if (o.pass) o.detail = std::to_string(proofs) + " searches";
  return o;
}

Outcome coherence() {
  Outcome o;
  for (const auto& e : corpus())
    for (K x : kHierarchyKinds)
      if (!check_coherence(e.program, {x, K::Attack}).empty()) o.fail(std::string(tag(x)) + "/a" + reproducer(e));
  const auto p = parse_objective_literal("p");
  auto violated = [&](const char* fixture, const char* params) {
    const auto v = check_coherence(fixture_program(fixture), pat(params)[0]);
    return std::find(v.begin(), v.end(), p) != v.end();
  };
  for (const char* ps : {"u/u", "su/u", "su/su"})
    if (!violated("coherence_p", ps)) o.fail(std::string("P shows no violation for ") + ps);
  for (const char* ps : {"su/sa", "sa/sa"})
    if (!violated("coherence_q", ps)) o.fail(std::string("Q shows no violation for ") + ps);
  return o;
}

Outcome consistency() {
  Outcome o;
  for (const auto& e : corpus()) {
    const Framework fw(e.program);
    for (const auto& params : hierarchy_params())
      if (kind_included(params.defence, params.attack) &&
          !check_consistency(fw, fixpoint(fw, params), params.attack))
        o.fail(params.render() + reproducer(e));
  }
  const Framework fw(fixture_program("rebut_pair"));
  const FixpointResult res = fixpoint(fw, {K::Undercut, K::Attack});
  if (check_consistency(fw, res, K::Rebut)) o.fail("rebut pair is r-consistent");
  const Names want{"[p]", "[~p]", "[q <- not p]"};
  if (names(fw, res.justified) != want) o.fail("rebut pair J_u/a = " + show(names(fw, res.justified)));
  return o;
}

Outcome lfp_chain() {
  Outcome o;
  using G = GammaOp;
  for (const auto& e : corpus()) {
    const auto sp = lfp_compose(e.program, G::SemiNormal, G::Plain);
    const auto ss = lfp_compose(e.program, G::SemiNormal, G::SemiNormal);
    const auto pp = lfp_compose(e.program, G::Plain, G::Plain);
    const auto ps = lfp_compose(e.program, G::Plain, G::SemiNormal);
    if (sp != ss) o.fail("lfp(Gs G) != lfp(Gs Gs)" + reproducer(e));
    if (!std::includes(pp.begin(), pp.end(), ss.begin(), ss.end())) o.fail("lfp(Gs Gs) not in lfp(G G)" + reproducer(e));
    if (!std::includes(ps.begin(), ps.end(), pp.begin(), pp.end())) o.fail("lfp(G G) not in lfp(G Gs)" + reproducer(e));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds;  // 0: no time limit
  };
  const std::vector<Criterion> criteria = {
      {1, "staged table reproduction", table_reproduction, 1.0},
      {2, "train program arguments", train_arguments, 1.0},
      {3, "counterexample programs", counterexamples, 0},
      {4, "hierarchy on corpus", corpus_hierarchy, 60.0},
      {5, "relation algebra on corpus", corpus_relation_algebra, 0},
      {6, "wfsx equivalence on corpus", corpus_wfsx, 0},
      {7, "gamma characterisation", gamma_characterisation, 0},
      {8, "proof theory on corpus", corpus_proof_theory, 300.0},
      {9, "coherence", coherence, 0},
      {10, "consistency", consistency, 0},
      {11, "lfp chain on corpus", lfp_chain, 0},
  };
  corpus();  // generated once, outside the timings

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs >= c.limit_seconds) out.fail("took " + std::to_string(secs) + " s");
    failures += !out.pass;
    std::cout << "criterion " << c.id << ": " << (out.pass ? "PASS" : "FAIL") << " " << c.name << " (" << std::fixed
              << std::setprecision(3) << secs << " s";
    if (c.limit_seconds > 0) std::cout << ", limit " << c.limit_seconds << " s";
    std::cout << ")";
    if (!out.detail.empty()) std::cout << ": " << out.detail;
    std::cout << std::endl;
  }
  return failures;
}
