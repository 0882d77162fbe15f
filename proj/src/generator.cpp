#include "elparg/generator.hpp"

#include <sstream>
#include <stdexcept>

namespace elparg {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

void GenParams::validate() const {
  auto prob = [](double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(std::string(name) + " must be in [0, 1]");
  };
  if (num_atoms < 1) throw std::invalid_argument("num_atoms must be at least 1");
  prob(neg_head_prob, "neg_head_prob");
  prob(expl_neg_prob, "expl_neg_prob");
  prob(default_prob, "default_prob");
}

std::string GenParams::render() const {
  std::ostringstream os;
  os << "seed=" << seed << " atoms=" << num_atoms << " rules=" << num_rules << " body=" << max_body
     << " neg_head=" << neg_head_prob << " expl_neg=" << expl_neg_prob << " default=" << default_prob;
  if (complementary_facts) os << " pair";
  return os.str();
}

std::string generated_atom_name(std::size_t i) {
  std::string name(1, static_cast<char>('a' + i % 26));
  if (i >= 26) name += std::to_string(i / 26);
  return name;
}

Program random_program(const GenParams& gp) {
  gp.validate();
  SplitMix64 rng(gp.seed);
  auto atom = [&] { return Atom(generated_atom_name(rng.below(gp.num_atoms))); };

  std::vector<Rule> rules;
  for (std::size_t i = 0; i < gp.num_rules; ++i) {
    Atom h = atom();
    ObjectiveLiteral head{h, rng.chance(gp.neg_head_prob)};
    std::vector<ObjectiveLiteral> obj;
    std::vector<DefaultLiteral> def;
    const std::size_t len = rng.below(gp.max_body + 1);
    for (std::size_t j = 0; j < len; ++j) {
      Atom b = atom();
      ObjectiveLiteral l{b, rng.chance(gp.expl_neg_prob)};
      if (rng.chance(gp.default_prob))
        def.push_back({l});
      else
        obj.push_back(l);
    }
    rules.emplace_back(head, std::move(obj), std::move(def));
  }
  if (gp.complementary_facts) {
    Atom a = atom();
    rules.emplace_back(ObjectiveLiteral{a, false});
    rules.emplace_back(ObjectiveLiteral{a, true});
  }
  return Program(std::move(rules));
}

std::vector<CorpusEntry> make_corpus(std::size_t count, std::uint64_t seed, std::size_t max_atoms,
                                     std::size_t max_rules) {
  SplitMix64 rng(seed);
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GenParams gp;
    gp.seed = rng.next();
    gp.num_atoms = 1 + rng.below(max_atoms);
    gp.complementary_facts = i % 5 == 0 && max_rules >= 2;
    const std::size_t budget = gp.complementary_facts ? max_rules - 2 : max_rules;
    gp.num_rules = budget / 2 + rng.below(budget - budget / 2 + 1);
    gp.max_body = rng.below(4);
    gp.neg_head_prob = 0.1 * static_cast<double>(rng.below(6));
    gp.expl_neg_prob = 0.1 * static_cast<double>(rng.below(6));
    gp.default_prob = 0.1 * static_cast<double>(3 + rng.below(7));
    out.push_back({gp, random_program(gp)});
  }
  return out;
}

}  // namespace elparg
