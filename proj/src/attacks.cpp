#include "elparg/attacks.hpp"

#include <algorithm>

namespace elparg {

std::string_view tag(AttackKind k) {
  switch (k) {
    case AttackKind::Rebut: return "r";
    case AttackKind::Undercut: return "u";
    case AttackKind::Attack: return "a";
    case AttackKind::Defeat: return "d";
    case AttackKind::StrongAttack: return "sa";
    case AttackKind::StrongUndercut: return "su";
  }
  return "?";
}

std::string_view long_name(AttackKind k) {
  switch (k) {
    case AttackKind::Rebut: return "rebut";
    case AttackKind::Undercut: return "undercut";
    case AttackKind::Attack: return "attack";
    case AttackKind::Defeat: return "defeat";
    case AttackKind::StrongAttack: return "strong-attack";
    case AttackKind::StrongUndercut: return "strong-undercut";
  }
  return "?";
}

std::optional<AttackKind> parse_attack_kind(std::string_view s) {
  for (AttackKind k : kAllKinds)
    if (s == tag(k) || s == long_name(k)) return k;
  return std::nullopt;
}

bool kind_included(AttackKind x, AttackKind y) {
  using K = AttackKind;
  if (x == y || y == K::Attack) return true;
  switch (x) {
    case K::StrongUndercut: return y != K::Rebut;
    case K::Undercut: return y == K::Defeat;
    case K::StrongAttack: return y == K::Defeat;
    default: return false;
  }
}

namespace {

bool undercuts(const Argument& a, const Argument& b) {
  for (const auto& l : a.conclusions())
    if (b.assumptions().count(DefaultLiteral{l})) return true;
  return false;
}

bool rebuts(const Argument& a, const Argument& b) {
  for (const auto& l : a.conclusions())
    if (b.conclusions().count(l.complement())) return true;
  return false;
}

}  // namespace

bool check_attack(AttackKind kind, const Argument& a, const Argument& b) {
  switch (kind) {
    case AttackKind::Undercut: return undercuts(a, b);
    case AttackKind::Rebut: return rebuts(a, b);
    case AttackKind::Attack: return undercuts(a, b) || rebuts(a, b);
    case AttackKind::Defeat: return undercuts(a, b) || (rebuts(a, b) && !undercuts(b, a));
    case AttackKind::StrongAttack: return (undercuts(a, b) || rebuts(a, b)) && !undercuts(b, a);
    case AttackKind::StrongUndercut: return undercuts(a, b) && !undercuts(b, a);
  }
  return false;
}

AttackRelation::AttackRelation(AttackKind kind, std::size_t n)
    : kind_(kind), out_(n, ArgBits(n)), in_(n, ArgBits(n)) {}

void AttackRelation::add(ArgId attacker, ArgId target) {
  out_[attacker].set(target);
  in_[target].set(attacker);
}

std::vector<std::pair<ArgId, ArgId>> AttackRelation::pairs() const {
  std::vector<std::pair<ArgId, ArgId>> out;
  for (ArgId a = 0; a < out_.size(); ++a)
    for (auto b = out_[a].find_first(); b != ArgBits::npos; b = out_[a].find_next(b))
      out.emplace_back(a, b);
  return out;
}

std::size_t AttackRelation::size() const {
  std::size_t n = 0;
  for (const auto& row : out_) n += row.count();
  return n;
}

AttackRelation AttackRelation::operator|(const AttackRelation& o) const {
  AttackRelation r = *this;
  for (std::size_t i = 0; i < out_.size(); ++i) {
    r.out_[i] |= o.out_[i];
    r.in_[i] |= o.in_[i];
  }
  return r;
}

AttackRelation AttackRelation::operator-(const AttackRelation& o) const {
  AttackRelation r = *this;
  for (std::size_t i = 0; i < out_.size(); ++i) {
    r.out_[i] -= o.out_[i];
    r.in_[i] -= o.in_[i];
  }
  return r;
}

bool AttackRelation::subset_of(const AttackRelation& o) const {
  for (std::size_t i = 0; i < out_.size(); ++i)
    if (!out_[i].is_subset_of(o.out_[i])) return false;
  return true;
}

AttackRelation attack_relation(const ArgumentSet& args, AttackKind kind) {
  AttackRelation rel(kind, args.size());
  for (ArgId a = 0; a < args.size(); ++a)
    for (ArgId b = 0; b < args.size(); ++b)
      if (check_attack(kind, args[a], args[b])) rel.add(a, b);
  return rel;
}

AttackRelation inverse_relation(const AttackRelation& rel) {
  AttackRelation inv(rel.kind(), rel.universe());
  for (auto [a, b] : rel.pairs()) inv.add(b, a);
  return inv;
}

AttackRelations::AttackRelations(const ArgumentSet& args) {
  const std::size_t n = args.size();
  AttackRelation u(AttackKind::Undercut, n), r(AttackKind::Rebut, n);
  for (ArgId a = 0; a < n; ++a) {
    const Argument& x = args[a];
    for (ArgId b = 0; b < n; ++b) {
      const Argument& y = args[b];
      if (x.conclusion_bits().intersects(y.assumption_bits())) u.add(a, b);
      if (x.conclusion_bits().intersects(y.complement_bits())) r.add(a, b);
    }
  }
  const AttackRelation u_inv = inverse_relation(u);
  auto with_kind = [n](AttackKind k, const AttackRelation& src) {
    AttackRelation out(k, n);
    for (auto [a, b] : src.pairs()) out.add(a, b);
    return out;
  };
  auto slot = [&](AttackKind k) -> AttackRelation& { return rels_[static_cast<std::size_t>(k)]; };
  slot(AttackKind::Attack) = with_kind(AttackKind::Attack, u | r);
  slot(AttackKind::Defeat) = with_kind(AttackKind::Defeat, u | (r - u_inv));
  slot(AttackKind::StrongAttack) = with_kind(AttackKind::StrongAttack, (u | r) - u_inv);
  slot(AttackKind::StrongUndercut) = with_kind(AttackKind::StrongUndercut, u - u_inv);
  slot(AttackKind::Undercut) = std::move(u);
  slot(AttackKind::Rebut) = std::move(r);
}

}  // namespace elparg
