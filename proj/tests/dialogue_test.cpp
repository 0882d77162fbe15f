#include <gtest/gtest.h>

#include "elparg/dialogue.hpp"
#include "elparg/fixtures.hpp"
#include "elparg/generator.hpp"

using namespace elparg;

namespace {

using K = AttackKind;

ArgId by_render(const Framework& fw, const std::string& r) {
  for (ArgId a = 0; a < fw.arguments().size(); ++a)
    if (fw.arguments()[a].render() == r) return a;
  throw std::out_of_range(r);
}

std::vector<std::string> names(const Framework& fw, std::vector<ArgId> ids) {
  std::vector<std::string> out;
  for (ArgId a : ids) out.push_back(fw.arguments()[a].render());
  std::sort(out.begin(), out.end());
  return out;
}

const SemanticsParams kAU{K::Attack, K::Undercut};

}  // namespace

TEST(LegalMoves, OpponentRepliesToRoot) {
  const Framework fw(fixture_program("dialogue"));
  const ArgId root = by_render(fw, "[p <- q, not r; q <- not s]");
  const auto moves = legal_moves(fw, kAU, {{Player::Proponent, root, 1}});
  EXPECT_EQ(names(fw, moves),
            (std::vector<std::string>{"[r <- not t]", "[s <- not t]", "[~q <- u; u <- not v]"}));
}

TEST(LegalMoves, UnattackedLeaf) {
  const Framework fw(fixture_program("dialogue"));
  const ArgId t = by_render(fw, "[t <- not w]");
  EXPECT_TRUE(legal_moves(fw, kAU, {{Player::Proponent, t, 1}}).empty());
}

TEST(LegalMoves, ProponentCannotRepeat) {
  const Framework fw(fixture_program("mutual"));
  const ArgId p = by_render(fw, "[p <- not q]");
  const ArgId q = by_render(fw, "[q <- not p]");
  const SemanticsParams uu{K::Undercut, K::Undercut};
  const auto moves = legal_moves(fw, uu, {{Player::Proponent, p, 1}, {Player::Opponent, q, 2}});
  EXPECT_TRUE(moves.empty());
}

TEST(LegalMoves, RejectsIllegalPrefixes) {
  const Framework fw(fixture_program("mutual"));
  const ArgId p = by_render(fw, "[p <- not q]");
  const ArgId q = by_render(fw, "[q <- not p]");
  const SemanticsParams uu{K::Undercut, K::Undercut};
  EXPECT_THROW(legal_moves(fw, uu, {}), IllegalDialogue);
  EXPECT_THROW(legal_moves(fw, uu, {{Player::Opponent, p, 1}}), IllegalDialogue);
  EXPECT_THROW(legal_moves(fw, uu, {{Player::Proponent, p, 2}}), IllegalDialogue);
  EXPECT_THROW(legal_moves(fw, uu, {{Player::Proponent, p, 1}, {Player::Opponent, p, 2}}), IllegalDialogue);
  EXPECT_THROW(legal_moves(fw, uu, {{Player::Proponent, p, 1}, {Player::Opponent, q, 2}, {Player::Proponent, p, 3}}),
               IllegalDialogue);
  EXPECT_THROW(legal_moves(fw, uu, {{Player::Proponent, 99, 1}}), IllegalDialogue);
}

TEST(Prove, DialogueTreeShape) {
  const Framework fw(fixture_program("dialogue"));
  const ArgId root = by_render(fw, "[p <- q, not r; q <- not s]");
  const ProofOutcome out = prove(fw, kAU, root);
  ASSERT_TRUE(out.won);
  const DialogueTree& tree = *out.tree;
  EXPECT_EQ(tree.size(), 11u);
  EXPECT_EQ(out.height, 2u);
  EXPECT_TRUE(verify_tree(fw, kAU, tree));
  ASSERT_EQ(tree.root.children.size(), 3u);
  for (const auto& o : tree.root.children) {
    ASSERT_EQ(o.children.size(), 1u);
    const std::string reply = fw.arguments()[o.children[0].move.argument].render();
    if (fw.arguments()[o.move.argument].render() == "[~q <- u; u <- not v]")
      EXPECT_EQ(reply, "[v <- not r]");
    else
      EXPECT_EQ(reply, "[t <- not w]");
  }
}

TEST(Prove, LosingArgument) {
  const Framework fw(fixture_program("staged"));
  const ProofOutcome out = prove(fw, {K::Undercut, K::Attack}, by_render(fw, "[q <- not p]"));
  EXPECT_FALSE(out.won);
  EXPECT_FALSE(out.tree.has_value());
}

TEST(Prove, UnattackedHasHeightZero) {
  const Framework fw(fixture_program("staged"));
  for (const auto& params : hierarchy_params()) {
    if (params.attack == K::Attack) continue;
    const ProofOutcome out = prove(fw, params, by_render(fw, "[s]"));
    if (fw.relation(params.attack).attackers_of(by_render(fw, "[s]")).none()) {
      EXPECT_TRUE(out.won);
      EXPECT_EQ(out.height, 0u);
      EXPECT_EQ(out.tree->size(), 1u);
    }
  }
}

TEST(Prove, UnknownArgument) {
  const Framework fw(fixture_program("staged"));
  EXPECT_THROW(prove(fw, {}, 6), UnknownArgument);
  const Program other = parse_program("zz.");
  EXPECT_THROW(prove(fw, {}, Argument(other, {0})), UnknownArgument);
  EXPECT_TRUE(prove(fw, {K::Undercut, K::Attack}, fw.arguments()[by_render(fw, "[s]")]).won);
}

TEST(Prove, HeightBoundedByStage) {
  for (const auto& f : fixtures()) {
    const Framework fw(parse_program(f.text));
    for (const auto& params : hierarchy_params()) {
      const FixpointResult res = fixpoint(fw, params);
      for (ArgId a : fw.arguments().ids(res.justified)) {
        const ProofOutcome out = prove(fw, params, a);
        ASSERT_TRUE(out.won);
        EXPECT_LE(out.height + 1, res.first_stage(a)) << f.name << " " << params.render();
      }
    }
  }
}

TEST(VerifyTree, RejectsMissingOpponentMove) {
  const Framework fw(fixture_program("dialogue"));
  ProofOutcome out = prove(fw, kAU, by_render(fw, "[p <- q, not r; q <- not s]"));
  DialogueTree tree = *out.tree;
  tree.root.children.pop_back();
  EXPECT_FALSE(verify_tree(fw, kAU, tree));
}

TEST(VerifyTree, RejectsRepeatedProponentArgument) {
  const Framework fw(fixture_program("mutual"));
  const ArgId p = by_render(fw, "[p <- not q]");
  const ArgId q = by_render(fw, "[q <- not p]");
  const SemanticsParams uu{K::Undercut, K::Undercut};
  DialogueTree tree{{{Player::Proponent, p, 1}, {}}, uu};
  DialogueNode o{{Player::Opponent, q, 2}, {}};
  o.children.push_back({{Player::Proponent, p, 3}, {}});
  tree.root.children.push_back(o);
  EXPECT_FALSE(verify_tree(fw, uu, tree));
}

TEST(VerifyTree, RejectsUnansweredOpponent) {
  const Framework fw(fixture_program("mutual"));
  const SemanticsParams uu{K::Undercut, K::Undercut};
  const ArgId p = by_render(fw, "[p <- not q]");
  const ArgId q = by_render(fw, "[q <- not p]");
  DialogueTree tree{{{Player::Proponent, p, 1}, {{{Player::Opponent, q, 2}, {}}}}, uu};
  EXPECT_FALSE(verify_tree(fw, uu, tree));
}

TEST(VerifyTree, RejectsWrongParamsAndRoot) {
  const Framework fw(fixture_program("dialogue"));
  const ProofOutcome out = prove(fw, kAU, by_render(fw, "[p <- q, not r; q <- not s]"));
  EXPECT_FALSE(verify_tree(fw, {K::Undercut, K::Attack}, *out.tree));
  DialogueTree bad = *out.tree;
  bad.root.move.player = Player::Opponent;
  EXPECT_FALSE(verify_tree(fw, kAU, bad));
}

TEST(VerifyTree, RejectsTwoProponentReplies) {
  const Framework fw(fixture_program("dialogue"));
  DialogueTree tree = *prove(fw, kAU, by_render(fw, "[p <- q, not r; q <- not s]")).tree;
  auto& o = tree.root.children.front();
  o.children.push_back(o.children.front());
  EXPECT_FALSE(verify_tree(fw, kAU, tree));
}

TEST(CrossCheck, FixturesAllPairs) {
  for (const auto& f : fixtures()) {
    const Framework fw(parse_program(f.text));
    for (const auto& params : hierarchy_params()) EXPECT_TRUE(cross_check_proof_theory(fw, params)) << f.name;
  }
  EXPECT_TRUE(cross_check_proof_theory(Framework(Program{}), {}));
}

TEST(CrossCheck, Corpus) {
  for (const auto& e : make_corpus(200, 51)) {
    const Framework fw(e.program);
    for (const auto& params : hierarchy_params())
      EXPECT_TRUE(cross_check_proof_theory(fw, params)) << params.render() << "\n" << render(e.program);
  }
}
