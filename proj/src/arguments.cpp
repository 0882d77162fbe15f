#include "elparg/arguments.hpp"

#include <algorithm>
#include <set>

namespace elparg {

Argument::Argument(const Program& program, std::vector<std::size_t> rule_ids)
    : sequence_(std::move(rule_ids)) {
  const std::size_t nlits = program.herbrand_base().size();
  conclusion_bits_.resize(nlits);
  assumption_bits_.resize(nlits);
  complement_bits_.resize(nlits);
  rules_.reserve(sequence_.size());
  for (std::size_t id : sequence_) {
    const Rule& r = program.rules().at(id);
    rules_.push_back(r);
    conclusions_.insert(r.head());
    const std::size_t h = *program.literal_id(r.head());
    conclusion_bits_.set(h);
    complement_bits_.set(h ^ 1);
    for (const auto& d : r.default_body()) {
      assumptions_.insert(d);
      assumption_bits_.set(*program.literal_id(d.inner));
    }
  }
  rule_set_ = sequence_;
  std::sort(rule_set_.begin(), rule_set_.end());
  sorted_rules_ = rules_;
  std::sort(sorted_rules_.begin(), sorted_rules_.end());
}

std::string Argument::render() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (i) out += "; ";
    out += render_inline(rules_[i]);
  }
  return out + "]";
}

ArgumentSet::ArgumentSet(std::vector<Argument> members) {
  std::vector<std::pair<std::string, Argument>> keyed;
  keyed.reserve(members.size());
  for (auto& a : members) keyed.emplace_back(a.render(), std::move(a));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first < y.first : x.second.rule_set() < y.second.rule_set();
  });
  for (auto& [_, a] : keyed) {
    if (!members_.empty() && members_.back() == a) continue;
    members_.push_back(std::move(a));
  }
  for (ArgId i = 0; i < members_.size(); ++i)
    for (const auto& c : members_[i].conclusions()) by_conclusion_[c].push_back(i);
}

const std::vector<ArgId>& ArgumentSet::concluding(const ObjectiveLiteral& l) const {
  static const std::vector<ArgId> none;
  auto it = by_conclusion_.find(l);
  return it == by_conclusion_.end() ? none : it->second;
}

std::vector<ArgId> ArgumentSet::for_literal(const ObjectiveLiteral& l) const {
  std::vector<ArgId> out;
  for (ArgId i : concluding(l))
    if (members_[i].principal() == l) out.push_back(i);
  return out;
}

ArgId ArgumentSet::find(const Argument& a) const {
  for (ArgId i = 0; i < members_.size(); ++i)
    if (members_[i] == a) return i;
  return members_.size();
}

std::vector<ArgId> ArgumentSet::ids(const ArgBits& bits) const {
  std::vector<ArgId> out;
  for (auto i = bits.find_first(); i != ArgBits::npos; i = bits.find_next(i)) out.push_back(i);
  return out;
}

std::vector<std::string> ArgumentSet::renderings(const ArgBits& bits) const {
  std::vector<std::string> out;
  for (ArgId i : ids(bits)) out.push_back(members_[i].render());
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

struct IndexedRule {
  std::size_t head;
  std::vector<std::size_t> body;  // objective body literal ids
};

// Chooses one rule per needed literal, keeping the literal dependency graph
// acyclic. Each complete choice is one minimal argument rooted at `root`.
class Enumerator {
 public:
  Enumerator(const Program& p, std::vector<IndexedRule> rules, std::vector<std::vector<std::size_t>> by_head)
      : program_(p), rules_(std::move(rules)), by_head_(std::move(by_head)),
        choice_(p.herbrand_base().size(), kNone) {}

  void run(std::vector<Argument>& out) {
    out_ = &out;
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      const std::size_t h = rules_[r].head;
      choice_[h] = r;
      if (!self_loop(r)) {
        std::vector<std::size_t> agenda;
        push_body(r, agenda);
        search(agenda, 0, h);
      }
      choice_[h] = kNone;
    }
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool self_loop(std::size_t r) const {
    const auto& b = rules_[r].body;
    return std::find(b.begin(), b.end(), rules_[r].head) != b.end();
  }

  void push_body(std::size_t r, std::vector<std::size_t>& agenda) const {
    for (std::size_t l : rules_[r].body) agenda.push_back(l);
  }

  // Is `target` reachable from literal `from` through chosen rules?
  bool reaches(std::size_t from, std::size_t target) const {
    std::vector<std::size_t> stack{from};
    std::vector<bool> seen(choice_.size(), false);
    while (!stack.empty()) {
      const std::size_t l = stack.back();
      stack.pop_back();
      if (l == target) return true;
      if (seen[l] || choice_[l] == kNone) continue;
      seen[l] = true;
      for (std::size_t b : rules_[choice_[l]].body) stack.push_back(b);
    }
    return false;
  }

  void search(std::vector<std::size_t>& agenda, std::size_t pos, std::size_t root) {
    while (pos < agenda.size() && choice_[agenda[pos]] != kNone) ++pos;
    if (pos == agenda.size()) {
      emit(root);
      return;
    }
    const std::size_t lit = agenda[pos];
    for (std::size_t r : by_head_[lit]) {
      // The new edges lit -> body must not close a cycle back to lit.
      bool cyclic = false;
      for (std::size_t b : rules_[r].body)
        if (b == lit || reaches(b, lit)) {
          cyclic = true;
          break;
        }
      if (cyclic) continue;
      choice_[lit] = r;
      const std::size_t mark = agenda.size();
      push_body(r, agenda);
      search(agenda, pos + 1, root);
      agenda.resize(mark);
      choice_[lit] = kNone;
    }
  }

  void emit(std::size_t root) {
    // Collect rules reachable from the root's rule.
    std::vector<std::size_t> chosen;
    std::vector<bool> seen(choice_.size(), false);
    std::vector<std::size_t> stack{root};
    while (!stack.empty()) {
      const std::size_t l = stack.back();
      stack.pop_back();
      if (seen[l]) continue;
      seen[l] = true;
      chosen.push_back(choice_[l]);
      for (std::size_t b : rules_[choice_[l]].body) stack.push_back(b);
    }
    out_->emplace_back(program_, canonical_order(chosen));
  }

  // Kahn's algorithm: a rule is placed once every chosen rule that needs its
  // head has been placed; smallest source index first.
  std::vector<std::size_t> canonical_order(std::vector<std::size_t> chosen) const {
    std::sort(chosen.begin(), chosen.end());
    std::vector<std::size_t> indegree(chosen.size(), 0);
    auto pos_of_head = [&](std::size_t lit) {
      for (std::size_t i = 0; i < chosen.size(); ++i)
        if (rules_[chosen[i]].head == lit) return i;
      return chosen.size();
    };
    std::vector<std::vector<std::size_t>> needs(chosen.size());
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      std::set<std::size_t> deps;
      for (std::size_t b : rules_[chosen[i]].body) deps.insert(pos_of_head(b));
      for (std::size_t d : deps) {
        needs[i].push_back(d);
        ++indegree[d];
      }
    }
    std::vector<std::size_t> order;
    std::vector<bool> placed(chosen.size(), false);
    while (order.size() < chosen.size()) {
      std::size_t pick = chosen.size();
      for (std::size_t i = 0; i < chosen.size(); ++i)
        if (!placed[i] && indegree[i] == 0) {
          pick = i;
          break;
        }
      placed[pick] = true;
      order.push_back(chosen[pick]);
      for (std::size_t d : needs[pick]) --indegree[d];
    }
    return order;
  }

  const Program& program_;
  std::vector<IndexedRule> rules_;
  std::vector<std::vector<std::size_t>> by_head_;
  std::vector<std::size_t> choice_;
  std::vector<Argument>* out_ = nullptr;
};

}  // namespace

ArgumentSet enumerate_arguments(const Program& p) {
  std::vector<IndexedRule> rules;
  std::vector<std::vector<std::size_t>> by_head(p.herbrand_base().size());
  for (std::size_t i = 0; i < p.rules().size(); ++i) {
    const Rule& r = p.rules()[i];
    IndexedRule ir{*p.literal_id(r.head()), {}};
    for (const auto& l : r.objective_body()) ir.body.push_back(*p.literal_id(l));
    by_head[ir.head].push_back(i);
    rules.push_back(std::move(ir));
  }
  std::vector<Argument> found;
  Enumerator(p, std::move(rules), std::move(by_head)).run(found);
  return ArgumentSet(std::move(found));
}

bool is_argument(const Program& p, const std::vector<Rule>& seq) {
  if (seq.empty()) return false;
  for (const auto& r : seq)
    if (std::find(p.rules().begin(), p.rules().end(), r) == p.rules().end()) return false;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (const auto& l : seq[i].objective_body()) {
      bool supported = false;
      for (std::size_t k = i + 1; k < seq.size() && !supported; ++k) supported = seq[k].head() == l;
      if (!supported) return false;
    }
  return true;
}

}  // namespace elparg
