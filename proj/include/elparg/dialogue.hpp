// Dialectical proof theory: x/y-dialogues between a proponent (P), who
// defends with notion y and may not repeat an argument, and an opponent (O),
// who attacks with notion x. A winning dialogue tree answers every opponent
// attack on every proponent move.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "elparg/semantics.hpp"

namespace elparg {

enum class Player { Proponent, Opponent };

/// Thrown by legal_moves when the given path is not a legal dialogue prefix.
class IllegalDialogue : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown by prove for an argument outside Args_P.
class UnknownArgument : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Move {
  Player player;
  ArgId argument;
  std::size_t index;  // 1-based position in the dialogue; P moves are odd
};

struct DialogueNode {
  Move move;
  std::vector<DialogueNode> children;

  std::size_t size() const;
};

struct DialogueTree {
  DialogueNode root;
  SemanticsParams params;

  std::size_t size() const { return root.size(); }
  /// 0 for a bare root, otherwise 1 + max over grandchildren subtrees.
  std::size_t height() const;
};

struct ProofOutcome {
  bool won = false;
  std::optional<DialogueTree> tree;
  std::size_t height = 0;
};

/// Arguments available for the next move after `path`. Opponent: all
/// x-attackers of the last argument. Proponent: all y-attackers of the last
/// argument not yet played by the proponent on this path.
std::vector<ArgId> legal_moves(const Framework& fw, const SemanticsParams& params,
                               const std::vector<Move>& path);

/// Searches for a winning tree rooted at `root` and returns one of minimal
/// height (proponent replies tried in ArgId order).
ProofOutcome prove(const Framework& fw, const SemanticsParams& params, ArgId root);
ProofOutcome prove(const Framework& fw, const SemanticsParams& params, const Argument& root);

/// Independently re-checks every dialogue condition, the completeness of
/// opponent children, and that the proponent wins every branch.
bool verify_tree(const Framework& fw, const SemanticsParams& params, const DialogueTree& tree);

/// prove(a).won agrees with membership in J_{x/y} for every argument.
bool cross_check_proof_theory(const Framework& fw, const SemanticsParams& params);

}  // namespace elparg
