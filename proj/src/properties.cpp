#include "elparg/properties.hpp"

#include <algorithm>

#include "elparg/dialogue.hpp"
#include "elparg/wfsx.hpp"

namespace elparg {

namespace {

std::string literals(const LiteralSet& s) {
  std::string out = "{";
  for (const auto& l : s) out += (out.size() > 1 ? ", " : "") + render(l);
  return out + "}";
}

bool subset(const LiteralSet& a, const LiteralSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::string check_relation_algebra(const Framework& fw) {
  const auto& args = fw.arguments();
  for (AttackKind k : kAllKinds)
    if (!(fw.relation(k) == attack_relation(args, k)))
      return std::string(long_name(k)) + " relation differs from its definition";

  const AttackRelation& r = fw.relation(AttackKind::Rebut);
  if (!(inverse_relation(r) == r)) return "rebut is not symmetric";

  using K = AttackKind;
  const std::pair<K, K> order[] = {{K::StrongUndercut, K::Undercut}, {K::Undercut, K::Defeat},
                                   {K::Defeat, K::Attack},           {K::StrongUndercut, K::StrongAttack},
                                   {K::StrongAttack, K::Defeat},     {K::Rebut, K::Attack}};
  for (auto [lo, hi] : order)
    if (!fw.relation(lo).subset_of(fw.relation(hi)))
      return std::string(tag(lo)) + " not contained in " + std::string(tag(hi));
  return {};
}

std::string check_hierarchy(const Framework& fw) {
  const HierarchyReport rep = hierarchy_report(fw);
  for (const auto& c : rep.checks)
    if (!c.pass) return c.name + ": " + c.detail;
  return {};
}

std::string check_wfsx(const Program& p) {
  const WfmResult w = wfm_p(p);
  const Interpretation m = as_interpretation(model(p, {AttackKind::Undercut, AttackKind::Attack}));
  if (w.model == m) return {};
  return "wfm_p T=" + literals(w.model.t) + " F=" + literals(w.model.f) + " but u/a model T=" + literals(m.t) +
         " F=" + literals(m.f);
}

std::string check_gamma_characterisation(const Framework& fw, std::size_t max_base) {
  const Program& p = fw.program();
  const auto& hb = p.herbrand_base();
  if (hb.size() > max_base) return {};
  const auto& args = fw.arguments();

  for (std::size_t mask = 0; mask < (std::size_t{1} << hb.size()); ++mask) {
    LiteralSet t;
    for (std::size_t i = 0; i < hb.size(); ++i)
      if (mask >> i & 1) t.insert(hb[i]);
    const LiteralSet g = gamma(p, t);
    const LiteralSet gs = gamma_s(p, t);

    for (const auto& l : hb) {
      bool plain = false, semi = false;
      for (ArgId a : args.concluding(l)) {
        const Argument& arg = args[a];
        const bool assm_ok = std::none_of(arg.assumptions().begin(), arg.assumptions().end(),
                                          [&](const DefaultLiteral& d) { return t.count(d.inner) > 0; });
        if (!assm_ok) continue;
        plain = true;
        if (std::none_of(arg.conclusions().begin(), arg.conclusions().end(),
                         [&](const ObjectiveLiteral& c) { return t.count(c.complement()) > 0; }))
          semi = true;
      }
      if (plain != (g.count(l) > 0))
        return "gamma at " + literals(t) + " disagrees on " + render(l);
      if (semi != (gs.count(l) > 0))
        return "gamma_s at " + literals(t) + " disagrees on " + render(l);
    }
  }
  return {};
}

std::string check_proof_theory(const Framework& fw) {
  for (const auto& params : hierarchy_params()) {
    const FixpointResult res = fixpoint(fw, params);
    for (ArgId a = 0; a < fw.arguments().size(); ++a) {
      const ProofOutcome out = prove(fw, params, a);
      const std::string who = params.render() + " " + fw.arguments()[a].render();
      if (out.won != res.justified.test(a))
        return who + (out.won ? " has a winning tree but is not justified" : " is justified but has no winning tree");
      if (!out.won) continue;
      if (!verify_tree(fw, params, *out.tree)) return who + ": winning tree fails verification";
      const std::size_t n = res.first_stage(a);
      if (out.height + 1 > n)
        return who + ": tree height " + std::to_string(out.height) + " exceeds stage " + std::to_string(n) + " - 1";
    }
  }
  return {};
}

std::string check_coherence_defence_a(const Program& p) {
  for (AttackKind x : kHierarchyKinds) {
    const SemanticsParams params{x, AttackKind::Attack};
    const auto v = check_coherence(p, params);
    if (!v.empty()) return params.render() + " violates coherence at " + render(v.front());
  }
  return {};
}

std::string check_consistency_property(const Framework& fw) {
  for (const auto& params : hierarchy_params()) {
    if (!kind_included(params.defence, params.attack)) continue;
    if (!check_consistency(fw, fixpoint(fw, params), params.attack))
      return "J_" + params.render() + " is not " + std::string(tag(params.attack)) + "-consistent";
  }
  return {};
}

std::string check_lfp_chain(const Program& p) {
  using G = GammaOp;
  const LiteralSet sp = lfp_compose(p, G::SemiNormal, G::Plain);
  const LiteralSet ss = lfp_compose(p, G::SemiNormal, G::SemiNormal);
  const LiteralSet pp = lfp_compose(p, G::Plain, G::Plain);
  const LiteralSet ps = lfp_compose(p, G::Plain, G::SemiNormal);
  if (sp != ss) return "lfp(Gs G) = " + literals(sp) + " differs from lfp(Gs Gs) = " + literals(ss);
  if (!subset(ss, pp)) return "lfp(Gs Gs) = " + literals(ss) + " not within lfp(G G) = " + literals(pp);
  if (!subset(pp, ps)) return "lfp(G G) = " + literals(pp) + " not within lfp(G Gs) = " + literals(ps);
  return {};
}

}  // namespace elparg
