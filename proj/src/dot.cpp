#include "elparg/dot.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace elparg {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

void emit_tree(const Framework& fw, const DialogueNode& node, std::size_t& next, std::ostream& os,
               std::ostream& edges) {
  const std::size_t id = next++;
  const bool p = node.move.player == Player::Proponent;
  os << "  n" << id << " [shape=" << (p ? "box" : "ellipse") << ", label="
     << quote(std::string(p ? "P: " : "O: ") + fw.arguments()[node.move.argument].render()) << "];\n";
  for (const auto& child : node.children) {
    const std::size_t cid = next;
    emit_tree(fw, child, next, os, edges);
    const bool undercut = fw.relation(AttackKind::Undercut).contains(child.move.argument, node.move.argument);
    edges << "  n" << cid << " -> n" << id << " [label=" << (undercut ? "u" : "r") << "];\n";
  }
}

}  // namespace

std::string attack_graph_dot(const Framework& fw, AttackKind kind) {
  std::ostringstream os;
  os << "digraph attacks {\n";
  const auto& args = fw.arguments();
  for (ArgId a = 0; a < args.size(); ++a)
    os << "  a" << a << " [label=" << quote("#" + std::to_string(a)) << ", tooltip=" << quote(args[a].render())
       << "];\n";
  for (auto [x, y] : fw.relation(kind).pairs())
    os << "  a" << x << " -> a" << y << " [label=" << tag(kind) << "];\n";
  os << "}\n";
  return os.str();
}

std::string dialogue_tree_dot(const Framework& fw, const DialogueTree& tree) {
  std::ostringstream nodes, edges;
  std::size_t next = 0;
  emit_tree(fw, tree.root, next, nodes, edges);
  return "digraph dialogue {\n  rankdir=BT;\n" + nodes.str() + edges.str() + "}\n";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace elparg
