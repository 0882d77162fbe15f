// Paraconsistent well-founded semantics with explicit negation.
//
// Explicitly negated literals are treated as atoms of their own when taking
// least models: the definite programs below range over ObjectiveLiteral
// directly, so no renaming is ever visible.
#pragma once

#include <vector>

#include "elparg/semantics.hpp"
#include "elparg/syntax.hpp"

namespace elparg {

/// T u not F over the Herbrand base. T and F may overlap.
struct Interpretation {
  LiteralSet t;
  LiteralSet f;

  /// T and F are disjoint.
  bool is_interpretation() const;
  /// T u F covers the given Herbrand base.
  bool is_two_valued(const std::vector<ObjectiveLiteral>& herbrand_base) const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

struct DefiniteRule {
  ObjectiveLiteral head;
  std::vector<ObjectiveLiteral> body;

  friend bool operator==(const DefiniteRule&, const DefiniteRule&) = default;
};

using DefiniteProgram = std::vector<DefiniteRule>;

/// Drops every rule with a default literal `not L` where L is in `i`, then
/// strips the remaining default literals.
DefiniteProgram gl_transform(const Program& p, const LiteralSet& i);

/// Least fixpoint of the immediate-consequence operator.
LiteralSet least_model(const DefiniteProgram& dp);

/// Every rule `L <- Body` replaced by `L <- not ~L, Body`.
Program semi_normal(const Program& p);

LiteralSet gamma(const Program& p, const LiteralSet& i);
LiteralSet gamma_s(const Program& p, const LiteralSet& i);

enum class GammaOp { Plain, SemiNormal };

struct WfmResult {
  Interpretation model;
  /// I_0 = {}, I_{n+1} = Gamma(Gamma_s(I_n)); the last two are equal.
  std::vector<LiteralSet> stages;
};

/// WFM_p(P) = T u not (H(P) - Gamma_s T), T = lfp of Gamma Gamma_s.
WfmResult wfm_p(const Program& p);

/// Least fixpoint from {} of outer(inner(.)).
LiteralSet lfp_compose(const Program& p, GammaOp outer, GammaOp inner);

/// wfm_p(p) and model(p, u/a) agree on both the true and the default part.
bool check_wfsx_equivalence(const Program& p);

/// The argument-semantics model in interpretation form (F = literals L with
/// `not L` in the model).
Interpretation as_interpretation(const SemanticModel& m);

}  // namespace elparg
