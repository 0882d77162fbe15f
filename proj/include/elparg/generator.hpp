// Deterministic random ground programs for property testing.
//
// The random source is SplitMix64 (state += 0x9E3779B97F4A7C15, then the
// xor-shift-multiply finaliser with 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB).
// Integers below n are next() % n; probabilities compare
// (next() >> 11) * 2^-53 against the threshold. Any implementation following
// these rules reproduces the same programs.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "elparg/syntax.hpp"

namespace elparg {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::uint64_t state_;
};

struct GenParams {
  std::uint64_t seed = 1;
  std::size_t num_atoms = 3;
  std::size_t num_rules = 5;
  std::size_t max_body = 2;
  double neg_head_prob = 0.3;   // head is explicitly negated
  double expl_neg_prob = 0.3;   // body literal is explicitly negated
  double default_prob = 0.6;    // body literal is under `not`
  /// Append `a.` and `~a.` for a randomly chosen atom a.
  bool complementary_facts = false;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
  /// `seed=1 atoms=3 rules=5 body=2 neg_head=0.3 expl_neg=0.3 default=0.6`
  std::string render() const;
};

/// Atom names are a, b, c, ... z, then a1, b1, ...
std::string generated_atom_name(std::size_t i);

/// Rules are drawn in order: head atom, head negation, body length in
/// [0, max_body], then per body literal atom, explicit negation, default.
/// Duplicate draws collapse, so the result may have fewer rules.
Program random_program(const GenParams& gp);

struct CorpusEntry {
  GenParams params;
  Program program;
};

/// `count` programs with 1..max_atoms atoms and max_rules/2..max_rules rules. Every
/// fifth entry carries a complementary fact pair (within the rule budget).
std::vector<CorpusEntry> make_corpus(std::size_t count, std::uint64_t seed,
                                     std::size_t max_atoms = 6, std::size_t max_rules = 10);

}  // namespace elparg
