// Notions of attack between arguments and the relations they induce.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "elparg/arguments.hpp"

namespace elparg {

enum class AttackKind { Rebut, Undercut, Attack, Defeat, StrongAttack, StrongUndercut };

inline constexpr std::array<AttackKind, 6> kAllKinds = {
    AttackKind::Rebut,  AttackKind::Undercut,     AttackKind::Attack,
    AttackKind::Defeat, AttackKind::StrongAttack, AttackKind::StrongUndercut};

/// The five notions the semantics hierarchy is built over (no bare rebut).
inline constexpr std::array<AttackKind, 5> kHierarchyKinds = {
    AttackKind::Undercut, AttackKind::Attack, AttackKind::Defeat, AttackKind::StrongAttack,
    AttackKind::StrongUndercut};

/// Short tag: r, u, a, d, sa, su.
std::string_view tag(AttackKind k);
/// rebut, undercut, attack, defeat, strong-attack, strong-undercut.
std::string_view long_name(AttackKind k);
/// Accepts either the short tag or the long name.
std::optional<AttackKind> parse_attack_kind(std::string_view s);

/// x is contained in y on every program, following the inclusion diagram
/// su <= u <= d <= a, su <= sa <= d <= a, r <= a (reflexive).
bool kind_included(AttackKind x, AttackKind y);

/// Definition-level check of whether `a` attacks `b` under `kind`, read
/// directly off conclusions and assumptions.
bool check_attack(AttackKind kind, const Argument& a, const Argument& b);

/// A binary relation over the ArgIds of one ArgumentSet, stored as
/// out-neighbour and in-neighbour bitsets.
class AttackRelation {
 public:
  AttackRelation() = default;
  AttackRelation(AttackKind kind, std::size_t n);

  AttackKind kind() const noexcept { return kind_; }
  std::size_t universe() const noexcept { return out_.size(); }

  void add(ArgId attacker, ArgId target);
  bool contains(ArgId attacker, ArgId target) const { return out_[attacker].test(target); }

  /// Arguments attacked by `a`.
  const ArgBits& targets_of(ArgId a) const { return out_[a]; }
  /// Arguments attacking `b`.
  const ArgBits& attackers_of(ArgId b) const { return in_[b]; }

  /// All pairs in (attacker, target) lexicographic order.
  std::vector<std::pair<ArgId, ArgId>> pairs() const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  /// Pairwise set algebra; kinds are carried from the left operand.
  AttackRelation operator|(const AttackRelation& o) const;
  AttackRelation operator-(const AttackRelation& o) const;
  bool subset_of(const AttackRelation& o) const;

  /// Same pair set (kinds ignored).
  friend bool operator==(const AttackRelation& a, const AttackRelation& b) { return a.out_ == b.out_; }

 private:
  AttackKind kind_ = AttackKind::Attack;
  std::vector<ArgBits> out_;
  std::vector<ArgBits> in_;
};

/// Relation of `kind` over `args`: every pair satisfying check_attack.
AttackRelation attack_relation(const ArgumentSet& args, AttackKind kind);

/// {(b, a) | (a, b) in rel}.
AttackRelation inverse_relation(const AttackRelation& rel);

/// All six relations of one argument set. Undercut and rebut are computed
/// from conclusion/assumption bitsets; the composites come from the
/// identities a = u|r, d = u|(r - u^-1), sa = (u|r) - u^-1, su = u - u^-1.
class AttackRelations {
 public:
  AttackRelations() = default;
  explicit AttackRelations(const ArgumentSet& args);

  const AttackRelation& get(AttackKind k) const { return rels_[static_cast<std::size_t>(k)]; }
  const AttackRelation& operator[](AttackKind k) const { return get(k); }

 private:
  std::array<AttackRelation, 6> rels_;
};

}  // namespace elparg
