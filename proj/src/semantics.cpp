#include "elparg/semantics.hpp"

#include <algorithm>

namespace elparg {

std::string SemanticsParams::render() const {
  return std::string(tag(attack)) + "/" + std::string(tag(defence));
}

std::vector<SemanticsParams> hierarchy_params() {
  std::vector<SemanticsParams> out;
  for (AttackKind x : kHierarchyKinds)
    for (AttackKind y : kHierarchyKinds) out.push_back({x, y});
  return out;
}

Framework::Framework(Program program)
    : program_(std::move(program)), args_(enumerate_arguments(program_)), rels_(args_) {}

std::string Standing::render() const {
  if (justified && overruled) return "justified+overruled";
  if (justified) return "justified";
  if (overruled) return "overruled";
  return "defensible";
}

std::vector<ArgBits> FixpointResult::deltas() const {
  std::vector<ArgBits> out;
  for (std::size_t i = 1; i < stages.size(); ++i) out.push_back(stages[i] - stages[i - 1]);
  return out;
}

std::size_t FixpointResult::first_stage(ArgId a) const {
  for (std::size_t i = 0; i < stages.size(); ++i)
    if (stages[i].test(a)) return i;
  return 0;
}

bool acceptable(const Framework& fw, ArgId a, const ArgBits& s, const SemanticsParams& params) {
  const AttackRelation& x = fw.relation(params.attack);
  const AttackRelation& y = fw.relation(params.defence);
  const ArgBits& attackers = x.attackers_of(a);
  for (auto b = attackers.find_first(); b != ArgBits::npos; b = attackers.find_next(b))
    if (!y.attackers_of(b).intersects(s)) return false;
  return true;
}

ArgBits apply_operator(const Framework& fw, const ArgBits& s, const SemanticsParams& params) {
  ArgBits out = fw.arguments().empty_bits();
  for (ArgId a = 0; a < out.size(); ++a)
    if (acceptable(fw, a, s, params)) out.set(a);
  return out;
}

FixpointResult fixpoint(const Framework& fw, const SemanticsParams& params) {
  FixpointResult res;
  res.params = params;
  res.stages.push_back(fw.arguments().empty_bits());
  for (;;) {
    ArgBits next = apply_operator(fw, res.stages.back(), params);
    const bool done = next == res.stages.back();
    res.stages.push_back(std::move(next));
    if (done) break;
  }
  res.justified = res.stages.back();

  const AttackRelation& attack = fw.relation(AttackKind::Attack);
  res.status_of.resize(fw.arguments().size());
  for (ArgId a = 0; a < res.status_of.size(); ++a) {
    res.status_of[a].justified = res.justified.test(a);
    res.status_of[a].overruled = attack.attackers_of(a).intersects(res.justified);
  }
  return res;
}

FixpointResult fixpoint(const Program& p, const SemanticsParams& params) {
  return fixpoint(Framework(p), params);
}

namespace {

bool objective_justified(const Framework& fw, const FixpointResult& res, const ObjectiveLiteral& l) {
  for (ArgId a : fw.arguments().concluding(l))
    if (res.justified.test(a)) return true;
  return false;
}

bool default_justified(const Program& p, const SemanticsParams& params, const ObjectiveLiteral& l) {
  auto [extended, fresh] = add_query_rule(p, l);
  const Framework fw(std::move(extended));
  const FixpointResult res = fixpoint(fw, params);
  for (ArgId a : fw.arguments().for_literal({fresh, false}))
    if (res.justified.test(a)) return true;
  return false;
}

}  // namespace

bool literal_status(const Program& p, const SemanticsParams& params, const Literal& l) {
  if (const auto* o = std::get_if<ObjectiveLiteral>(&l)) {
    const Framework fw(p);
    return objective_justified(fw, fixpoint(fw, params), *o);
  }
  return default_justified(p, params, std::get<DefaultLiteral>(l).inner);
}

SemanticModel model(const Framework& fw, const FixpointResult& result) {
  SemanticModel m;
  for (ArgId a : fw.arguments().ids(result.justified))
    for (const auto& c : fw.arguments()[a].conclusions()) m.true_literals.insert(c);
  for (const auto& l : fw.program().herbrand_base()) {
    const auto ids = fw.arguments().for_literal(l);
    const bool all_overruled =
        std::all_of(ids.begin(), ids.end(), [&](ArgId a) { return result.status_of[a].overruled; });
    if (all_overruled) m.default_literals.insert(DefaultLiteral{l});
  }
  return m;
}

SemanticModel model(const Program& p, const SemanticsParams& params) {
  const Framework fw(p);
  return model(fw, fixpoint(fw, params));
}

std::vector<ObjectiveLiteral> check_coherence(const Program& p, const SemanticsParams& params) {
  const Framework fw(p);
  const FixpointResult res = fixpoint(fw, params);
  std::vector<ObjectiveLiteral> violations;
  for (const auto& l : p.herbrand_base()) {
    if (l.atom.is_reserved()) continue;
    if (objective_justified(fw, res, l.complement()) && !default_justified(p, params, l))
      violations.push_back(l);
  }
  return violations;
}

bool check_consistency(const Framework& fw, const FixpointResult& result, AttackKind kind) {
  const AttackRelation& rel = fw.relation(kind);
  for (auto a = result.justified.find_first(); a != ArgBits::npos; a = result.justified.find_next(a))
    if (rel.targets_of(a).intersects(result.justified)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Hierarchy
// ---------------------------------------------------------------------------

const std::vector<std::vector<SemanticsParams>>& hierarchy_classes() {
  using K = AttackKind;
  constexpr K u = K::Undercut, a = K::Attack, d = K::Defeat, sa = K::StrongAttack,
              su = K::StrongUndercut;
  static const std::vector<std::vector<SemanticsParams>> classes = {
      {{a, su}, {a, u}, {a, a}, {a, d}, {a, sa}},  // 0
      {{d, su}, {d, u}, {d, a}, {d, d}, {d, sa}},  // 1
      {{sa, su}, {sa, sa}},                        // 2
      {{u, su}, {u, u}},                           // 3
      {{sa, u}, {sa, d}, {sa, a}},                 // 4
      {{su, su}},                                  // 5
      {{u, a}, {u, d}, {u, sa}},                   // 6
      {{su, u}},                                   // 7
      {{su, sa}},                                  // 8
      {{su, a}, {su, d}},                          // 9
  };
  return classes;
}

const std::vector<std::pair<std::size_t, std::size_t>>& hierarchy_edges() {
  static const std::vector<std::pair<std::size_t, std::size_t>> edges = {
      {0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6},
      {4, 7}, {5, 7}, {5, 8}, {6, 8}, {7, 9}, {8, 9}};
  return edges;
}

bool HierarchyReport::ok() const { return failures() == 0; }

std::size_t HierarchyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const HierarchyCheck& c) { return !c.pass; }));
}

namespace {

std::string class_name(const std::vector<SemanticsParams>& cls) {
  std::string out;
  for (const auto& p : cls) out += (out.empty() ? "" : " = ") + p.render();
  return out;
}

}  // namespace

HierarchyReport hierarchy_report(const Framework& fw) {
  HierarchyReport rep;
  for (const auto& p : hierarchy_params()) rep.justified[p] = fixpoint(fw, p).justified;

  const auto& classes = hierarchy_classes();
  for (const auto& cls : classes) {
    HierarchyCheck c{"equal " + class_name(cls), true, ""};
    for (std::size_t i = 1; i < cls.size(); ++i)
      if (rep.justified[cls[i]] != rep.justified[cls[0]]) {
        c.pass = false;
        c.detail += cls[i].render() + " differs from " + cls[0].render() + "; ";
      }
    rep.checks.push_back(std::move(c));
  }
  for (auto [lo, hi] : hierarchy_edges()) {
    const SemanticsParams& l = classes[lo][0];
    const SemanticsParams& h = classes[hi][0];
    HierarchyCheck c{"subset " + l.render() + " <= " + h.render(), true, ""};
    if (!rep.justified[l].is_subset_of(rep.justified[h])) {
      c.pass = false;
      c.detail = "J_" + l.render() + " not contained in J_" + h.render();
    }
    rep.checks.push_back(std::move(c));
  }

  HierarchyCheck mono{"weaker attack / stronger defence subsumption", true, ""};
  for (const auto& p : hierarchy_params())
    for (const auto& q : hierarchy_params())
      if (kind_included(q.attack, p.attack) && kind_included(p.defence, q.defence) &&
          !rep.justified[p].is_subset_of(rep.justified[q])) {
        mono.pass = false;
        mono.detail += "J_" + p.render() + " not in J_" + q.render() + "; ";
      }
  rep.checks.push_back(std::move(mono));
  return rep;
}

HierarchyReport hierarchy_report(const Program& p) { return hierarchy_report(Framework(p)); }

}  // namespace elparg
