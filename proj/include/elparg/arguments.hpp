// Minimal arguments of a ground program.
//
// An argument is a finite rule sequence in which every objective body literal
// of a rule is the head of some later rule. Arguments are identified by their
// rule set; the stored sequence is one canonical witness (a topological order
// with rules that need a literal placed before the rule supplying it, ties
// broken by source position).
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "elparg/syntax.hpp"

namespace elparg {

/// Index of an argument inside its ArgumentSet.
using ArgId = std::size_t;

/// Set of arguments of one program, as a bitset over ArgIds.
using ArgBits = boost::dynamic_bitset<>;

class Argument {
 public:
  /// `rule_ids` index into program.rules() and must already be in
  /// canonical order. Used by the enumerator; tests build arguments through it
  /// too.
  Argument(const Program& program, std::vector<std::size_t> rule_ids);

  /// Rules in canonical order.
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  /// Source indices, parallel to rules().
  const std::vector<std::size_t>& sequence() const noexcept { return sequence_; }
  /// Sorted source indices; identifies the argument within its program.
  const std::vector<std::size_t>& rule_set() const noexcept { return rule_set_; }

  /// Head of the first rule; the literal the argument is minimal for.
  const ObjectiveLiteral& principal() const { return rules_.front().head(); }

  const LiteralSet& conclusions() const noexcept { return conclusions_; }
  const DefaultSet& assumptions() const noexcept { return assumptions_; }

  /// Literal-id bitsets over program.herbrand_base(); used by the attack engine.
  const boost::dynamic_bitset<>& conclusion_bits() const noexcept { return conclusion_bits_; }
  const boost::dynamic_bitset<>& assumption_bits() const noexcept { return assumption_bits_; }
  /// conclusion_bits with every literal replaced by its complement.
  const boost::dynamic_bitset<>& complement_bits() const noexcept { return complement_bits_; }

  /// `[r1; r2; ...]` using inline rule syntax.
  std::string render() const;

  /// Same set of rules. Arguments of different programs compare by content.
  friend bool operator==(const Argument& a, const Argument& b) { return a.sorted_rules_ == b.sorted_rules_; }

 private:
  std::vector<Rule> rules_;
  std::vector<std::size_t> sequence_;
  std::vector<std::size_t> rule_set_;
  std::vector<Rule> sorted_rules_;
  LiteralSet conclusions_;
  DefaultSet assumptions_;
  boost::dynamic_bitset<> conclusion_bits_;
  boost::dynamic_bitset<> assumption_bits_;
  boost::dynamic_bitset<> complement_bits_;
};

inline const LiteralSet& conclusions(const Argument& a) { return a.conclusions(); }
inline const DefaultSet& assumptions(const Argument& a) { return a.assumptions(); }

/// Args_P: every minimal argument exactly once, ordered lexicographically by
/// rendering so ArgIds are stable.
class ArgumentSet {
 public:
  ArgumentSet() = default;
  ArgumentSet(std::vector<Argument> members);

  const std::vector<Argument>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const Argument& operator[](ArgId id) const { return members_.at(id); }

  /// Every argument having `l` among its conclusions (not only as principal).
  const std::vector<ArgId>& concluding(const ObjectiveLiteral& l) const;
  /// Arguments whose principal conclusion is `l`, i.e. minimal arguments for l.
  std::vector<ArgId> for_literal(const ObjectiveLiteral& l) const;

  const std::map<ObjectiveLiteral, std::vector<ArgId>>& by_conclusion() const noexcept {
    return by_conclusion_;
  }

  /// Position of an argument with the same rule set, or size() if absent.
  ArgId find(const Argument& a) const;

  ArgBits empty_bits() const { return ArgBits(members_.size()); }
  std::vector<ArgId> ids(const ArgBits& bits) const;
  std::vector<std::string> renderings(const ArgBits& bits) const;

 private:
  std::vector<Argument> members_;
  std::map<ObjectiveLiteral, std::vector<ArgId>> by_conclusion_;
};

ArgumentSet enumerate_arguments(const Program& p);

/// Direct check of the support condition on a rule sequence. Every rule must
/// be drawn from `p`; the empty sequence is not an argument.
bool is_argument(const Program& p, const std::vector<Rule>& seq);

}  // namespace elparg
