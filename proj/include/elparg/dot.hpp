// Graphviz output for attack graphs and dialogue trees.
#pragma once

#include <string>

#include "elparg/dialogue.hpp"
#include "elparg/semantics.hpp"

namespace elparg {

/// One node per argument (`#k` with the rendering as tooltip), one edge per
/// attack pair labelled with the kind's tag.
std::string attack_graph_dot(const Framework& fw, AttackKind kind);

/// Proponent moves as boxes, opponent moves as ellipses. Edges point from
/// attacker to attacked and carry `u` when the attacker undercuts, `r`
/// otherwise. Nodes are numbered in preorder.
std::string dialogue_tree_dot(const Framework& fw, const DialogueTree& tree);

/// Writes `text` to `path`; throws std::runtime_error on I/O failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace elparg
