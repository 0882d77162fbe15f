#include "elparg/wfsx.hpp"

#include <algorithm>

namespace elparg {

bool Interpretation::is_interpretation() const {
  return std::none_of(t.begin(), t.end(), [&](const ObjectiveLiteral& l) { return f.count(l) > 0; });
}

bool Interpretation::is_two_valued(const std::vector<ObjectiveLiteral>& herbrand_base) const {
  return std::all_of(herbrand_base.begin(), herbrand_base.end(),
                     [&](const ObjectiveLiteral& l) { return t.count(l) || f.count(l); });
}

DefiniteProgram gl_transform(const Program& p, const LiteralSet& i) {
  DefiniteProgram out;
  for (const auto& r : p.rules()) {
    const bool blocked = std::any_of(r.default_body().begin(), r.default_body().end(),
                                     [&](const DefaultLiteral& d) { return i.count(d.inner) > 0; });
    if (!blocked) out.push_back({r.head(), r.objective_body()});
  }
  return out;
}

LiteralSet least_model(const DefiniteProgram& dp) {
  LiteralSet m;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& r : dp) {
      if (m.count(r.head)) continue;
      if (std::all_of(r.body.begin(), r.body.end(), [&](const ObjectiveLiteral& b) { return m.count(b) > 0; })) {
        m.insert(r.head);
        changed = true;
      }
    }
  }
  return m;
}

Program semi_normal(const Program& p) {
  std::vector<Rule> rules;
  rules.reserve(p.size());
  for (const auto& r : p.rules()) {
    std::vector<DefaultLiteral> def{DefaultLiteral{r.head().complement()}};
    def.insert(def.end(), r.default_body().begin(), r.default_body().end());
    rules.emplace_back(r.head(), r.objective_body(), std::move(def));
  }
  return Program(std::move(rules));
}

LiteralSet gamma(const Program& p, const LiteralSet& i) { return least_model(gl_transform(p, i)); }

LiteralSet gamma_s(const Program& p, const LiteralSet& i) { return gamma(semi_normal(p), i); }

namespace {

LiteralSet apply(const Program& p, const Program& ps, GammaOp op, const LiteralSet& i) {
  return op == GammaOp::Plain ? gamma(p, i) : gamma(ps, i);
}

}  // namespace

WfmResult wfm_p(const Program& p) {
  const Program ps = semi_normal(p);
  WfmResult res;
  res.stages.push_back({});
  for (;;) {
    LiteralSet next = gamma(p, gamma(ps, res.stages.back()));
    const bool done = next == res.stages.back();
    res.stages.push_back(std::move(next));
    if (done) break;
  }
  res.model.t = res.stages.back();
  const LiteralSet gs = gamma(ps, res.model.t);
  for (const auto& l : p.herbrand_base())
    if (!gs.count(l)) res.model.f.insert(l);
  return res;
}

LiteralSet lfp_compose(const Program& p, GammaOp outer, GammaOp inner) {
  const Program ps = semi_normal(p);
  LiteralSet cur;
  for (;;) {
    LiteralSet next = apply(p, ps, outer, apply(p, ps, inner, cur));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Interpretation as_interpretation(const SemanticModel& m) {
  Interpretation i;
  i.t = m.true_literals;
  for (const auto& d : m.default_literals) i.f.insert(d.inner);
  return i;
}

bool check_wfsx_equivalence(const Program& p) {
  return wfm_p(p).model ==
         as_interpretation(model(p, {AttackKind::Undercut, AttackKind::Attack}));
}

}  // namespace elparg
