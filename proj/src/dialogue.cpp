#include "elparg/dialogue.hpp"

#include <algorithm>
#include <iterator>
#include <unordered_map>

namespace elparg {

std::size_t DialogueNode::size() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.size();
  return n;
}

namespace {

std::size_t node_height(const DialogueNode& n) {
  std::size_t best = 0;
  bool any = false;
  for (const auto& o : n.children)
    for (const auto& p : o.children) {
      best = std::max(best, node_height(p));
      any = true;
    }
  return any ? best + 1 : 0;
}

}  // namespace

std::size_t DialogueTree::height() const { return node_height(root); }

std::vector<ArgId> legal_moves(const Framework& fw, const SemanticsParams& params,
                               const std::vector<Move>& path) {
  const std::size_t n = fw.arguments().size();
  if (path.empty()) throw IllegalDialogue("empty dialogue");
  const AttackRelation& x = fw.relation(params.attack);
  const AttackRelation& y = fw.relation(params.defence);

  ArgBits used(n);
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Move& m = path[i];
    const std::string where = "move " + std::to_string(i + 1) + ": ";
    if (m.argument >= n) throw IllegalDialogue(where + "unknown argument");
    if (m.index != i + 1) throw IllegalDialogue(where + "index out of sequence");
    const bool odd = (m.index % 2) == 1;
    if ((m.player == Player::Proponent) != odd) throw IllegalDialogue(where + "players must alternate, P first");
    if (m.player == Player::Proponent) {
      if (used.test(m.argument)) throw IllegalDialogue(where + "proponent repeats an argument");
      used.set(m.argument);
      if (i > 0 && !y.contains(m.argument, path[i - 1].argument))
        throw IllegalDialogue(where + "proponent move does not y-attack the previous move");
    } else if (!x.contains(m.argument, path[i - 1].argument)) {
      throw IllegalDialogue(where + "opponent move does not x-attack the previous move");
    }
  }

  const Move& last = path.back();
  ArgBits options = last.player == Player::Proponent ? x.attackers_of(last.argument)
                                                     : y.attackers_of(last.argument) - used;
  return fw.arguments().ids(options);
}

namespace {

// AND-OR search with a height bound. Outcomes depend on the set of arguments
// the proponent has already used on the current path, so that set is part of
// the memo key.
class ProofSearch {
 public:
  ProofSearch(const Framework& fw, const SemanticsParams& params)
      : x_(fw.relation(params.attack)), y_(fw.relation(params.defence)) {}

  bool can_win(ArgId a, std::size_t h, ArgBits& used) {
    const ArgBits& attackers = x_.attackers_of(a);
    if (attackers.none()) return true;
    if (h == 0) return false;

    std::string key = memo_key(a, h, used);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    bool won = true;
    for (auto b = attackers.find_first(); b != ArgBits::npos && won; b = attackers.find_next(b))
      won = reply(b, h, used).has_value();
    memo_.emplace(std::move(key), won);
    return won;
  }

  DialogueNode build(ArgId a, std::size_t h, ArgBits& used, std::size_t index) {
    DialogueNode node{{Player::Proponent, a, index}, {}};
    const ArgBits& attackers = x_.attackers_of(a);
    for (auto b = attackers.find_first(); b != ArgBits::npos; b = attackers.find_next(b)) {
      DialogueNode o{{Player::Opponent, b, index + 1}, {}};
      const ArgId c = *reply(b, h, used);
      used.set(c);
      o.children.push_back(build(c, h - 1, used, index + 2));
      used.reset(c);
      node.children.push_back(std::move(o));
    }
    return node;
  }

 private:
  // First proponent answer to opponent move `b` that wins within h - 1.
  std::optional<ArgId> reply(ArgId b, std::size_t h, ArgBits& used) {
    const ArgBits options = y_.attackers_of(b) - used;
    for (auto c = options.find_first(); c != ArgBits::npos; c = options.find_next(c)) {
      used.set(c);
      const bool ok = can_win(c, h - 1, used);
      used.reset(c);
      if (ok) return c;
    }
    return std::nullopt;
  }

  static std::string memo_key(ArgId a, std::size_t h, const ArgBits& used) {
    std::vector<ArgBits::block_type> blocks;
    boost::to_block_range(used, std::back_inserter(blocks));
    std::string key = std::to_string(a) + ':' + std::to_string(h) + ':';
    for (auto blk : blocks) key.append(reinterpret_cast<const char*>(&blk), sizeof blk);
    return key;
  }

  const AttackRelation& x_;
  const AttackRelation& y_;
  std::unordered_map<std::string, bool> memo_;
};

}  // namespace

ProofOutcome prove(const Framework& fw, const SemanticsParams& params, ArgId root) {
  const std::size_t n = fw.arguments().size();
  if (root >= n) throw UnknownArgument("unknown argument #" + std::to_string(root));

  ProofSearch search(fw, params);
  ArgBits used(n);
  used.set(root);
  // Proponent arguments on a path are distinct, so no winning tree is taller
  // than n - 1.
  const std::size_t bound = n == 0 ? 0 : n - 1;
  ProofOutcome out;
  if (!search.can_win(root, bound, used)) return out;

  std::size_t h = 0;
  while (!search.can_win(root, h, used)) ++h;
  DialogueTree tree{search.build(root, h, used, 1), params};
  out.won = true;
  out.height = tree.height();
  out.tree = std::move(tree);
  return out;
}

ProofOutcome prove(const Framework& fw, const SemanticsParams& params, const Argument& root) {
  const ArgId id = fw.arguments().find(root);
  if (id >= fw.arguments().size()) throw UnknownArgument("unknown argument " + root.render());
  return prove(fw, params, id);
}

namespace {

bool verify_node(const Framework& fw, const SemanticsParams& params, const DialogueNode& node,
                 std::vector<Move>& path) {
  path.push_back(node.move);
  struct Pop {
    std::vector<Move>& p;
    ~Pop() { p.pop_back(); }
  } pop{path};

  std::vector<ArgId> moves;
  try {
    moves = legal_moves(fw, params, path);
  } catch (const IllegalDialogue&) {
    return false;
  }

  if (node.move.player == Player::Proponent) {
    // Children must be exactly the opponent's moves, each once.
    std::vector<ArgId> kids;
    for (const auto& c : node.children) {
      if (c.move.player != Player::Opponent) return false;
      kids.push_back(c.move.argument);
    }
    std::sort(kids.begin(), kids.end());
    if (kids != moves) return false;
  } else {
    // One proponent answer per opponent move; none means the proponent lost.
    if (node.children.size() != 1) return false;
    const auto& c = node.children.front();
    if (c.move.player != Player::Proponent) return false;
    if (std::find(moves.begin(), moves.end(), c.move.argument) == moves.end()) return false;
  }
  for (const auto& c : node.children)
    if (!verify_node(fw, params, c, path)) return false;
  return true;
}

}  // namespace

bool verify_tree(const Framework& fw, const SemanticsParams& params, const DialogueTree& tree) {
  if (tree.params != params) return false;
  const Move& r = tree.root.move;
  if (r.player != Player::Proponent || r.index != 1) return false;
  std::vector<Move> path;
  return verify_node(fw, params, tree.root, path);
}

bool cross_check_proof_theory(const Framework& fw, const SemanticsParams& params) {
  const FixpointResult res = fixpoint(fw, params);
  for (ArgId a = 0; a < fw.arguments().size(); ++a)
    if (prove(fw, params, a).won != res.justified.test(a)) return false;
  return true;
}

}  // namespace elparg
