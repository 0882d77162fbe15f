// Parameterised least-fixpoint semantics over the arguments of a program.
//
// The opponent attacks with notion x, the proponent defends with notion y.
// An argument is x/y-acceptable wrt. S when each of its x-attackers is
// y-attacked by a member of S; J_{x/y} is the least fixpoint of the operator
// collecting acceptable arguments.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "elparg/arguments.hpp"
#include "elparg/attacks.hpp"
#include "elparg/syntax.hpp"

namespace elparg {

struct SemanticsParams {
  AttackKind attack = AttackKind::Undercut;   // opponent's x
  AttackKind defence = AttackKind::Attack;    // proponent's y

  std::string render() const;  // "u/a"

  friend bool operator==(const SemanticsParams&, const SemanticsParams&) = default;
  friend auto operator<=>(const SemanticsParams&, const SemanticsParams&) = default;
};

/// The 25 pairs over {u, a, d, sa, su}, attack-major.
std::vector<SemanticsParams> hierarchy_params();

/// A program with its minimal arguments and attack relations, built once and
/// shared by every semantics query.
class Framework {
 public:
  explicit Framework(Program program);

  const Program& program() const noexcept { return program_; }
  const ArgumentSet& arguments() const noexcept { return args_; }
  const AttackRelations& relations() const noexcept { return rels_; }
  const AttackRelation& relation(AttackKind k) const { return rels_[k]; }

 private:
  Program program_;
  ArgumentSet args_;
  AttackRelations rels_;
};

/// Status of one argument. Justified and overruled are reported separately:
/// on contradictory programs an argument can be both.
struct Standing {
  bool justified = false;
  bool overruled = false;  // attacked (notion a) by a justified argument
  bool defensible() const { return !justified && !overruled; }
  std::string render() const;
};

struct FixpointResult {
  SemanticsParams params;
  /// Cumulative stages J^0 = {} , J^1, ..., with the last two equal.
  std::vector<ArgBits> stages;
  ArgBits justified;
  std::vector<Standing> status_of;

  /// Arguments first added at stage n (n >= 1); deltas()[0] is J^1.
  std::vector<ArgBits> deltas() const;
  /// Smallest n with the argument in J^n, or 0 if never justified.
  std::size_t first_stage(ArgId a) const;
};

/// `a` is x/y-acceptable with respect to `s`.
bool acceptable(const Framework& fw, ArgId a, const ArgBits& s, const SemanticsParams& params);

/// One application of the acceptability operator.
ArgBits apply_operator(const Framework& fw, const ArgBits& s, const SemanticsParams& params);

FixpointResult fixpoint(const Framework& fw, const SemanticsParams& params);
FixpointResult fixpoint(const Program& p, const SemanticsParams& params);

/// Objective L: some justified argument concludes L. Default `not L`: the
/// query rule `__not_L <- not L` is justified in the extended program.
bool literal_status(const Program& p, const SemanticsParams& params, const Literal& l);

struct SemanticModel {
  LiteralSet true_literals;
  DefaultSet default_literals;

  friend bool operator==(const SemanticModel&, const SemanticModel&) = default;
};

/// Conclusions of the justified set plus `not L` for every L in the Herbrand
/// base all of whose minimal arguments are overruled (vacuously true when L
/// has no argument).
SemanticModel model(const Framework& fw, const FixpointResult& result);
SemanticModel model(const Program& p, const SemanticsParams& params);

/// Literals L of the Herbrand base where ~L is justified but `not L` is not.
std::vector<ObjectiveLiteral> check_coherence(const Program& p, const SemanticsParams& params);

/// No pair of justified arguments is related by `kind`.
bool check_consistency(const Framework& fw, const FixpointResult& result, AttackKind kind);

struct HierarchyCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct HierarchyReport {
  std::map<SemanticsParams, ArgBits> justified;
  std::vector<HierarchyCheck> checks;

  bool ok() const;
  std::size_t failures() const;
};

/// Computes the 25 fixpoints over {u,a,d,sa,su} and checks the equality
/// classes and inclusion edges of the semantics hierarchy, plus the
/// subsumption law for weaker attack / stronger defence.
HierarchyReport hierarchy_report(const Framework& fw);
HierarchyReport hierarchy_report(const Program& p);

/// Equality classes of the hierarchy, bottom to top.
const std::vector<std::vector<SemanticsParams>>& hierarchy_classes();
/// Inclusion edges between classes (lower, upper) as indices into
/// hierarchy_classes().
const std::vector<std::pair<std::size_t, std::size_t>>& hierarchy_edges();

}  // namespace elparg
