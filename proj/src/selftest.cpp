#include "elparg/selftest.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "elparg/dialogue.hpp"
#include "elparg/fixtures.hpp"
#include "elparg/generator.hpp"
#include "elparg/properties.hpp"
#include "elparg/wfsx.hpp"

namespace elparg {

std::optional<std::vector<SemanticsParams>> parse_params_pattern(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  const auto x = parse_attack_kind(text.substr(0, slash));
  if (!x) return std::nullopt;
  const std::string_view rest = text.substr(slash + 1);
  if (rest == "x") {
    std::vector<SemanticsParams> out;
    for (AttackKind y : kHierarchyKinds) out.push_back({*x, y});
    return out;
  }
  const auto y = parse_attack_kind(rest);
  if (!y) return std::nullopt;
  return std::vector<SemanticsParams>{{*x, *y}};
}

namespace {

using json = nlohmann::json;

std::string join(const std::vector<std::string>& xs) {
  std::string out = "{";
  for (const auto& x : xs) out += (out.size() > 1 ? ", " : "") + x;
  return out + "}";
}

std::vector<std::string> sorted_strings(const json& j) {
  std::vector<std::string> out = j.get<std::vector<std::string>>();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> rendered(const Framework& fw, const ArgBits& bits) {
  auto out = fw.arguments().renderings(bits);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SemanticsParams> params_of(const json& check) {
  std::vector<SemanticsParams> out;
  for (const auto& s : check.at("params")) {
    auto ps = parse_params_pattern(s.get<std::string>());
    if (!ps) throw std::invalid_argument("bad params pattern " + s.get<std::string>());
    out.insert(out.end(), ps->begin(), ps->end());
  }
  return out;
}

// Returns an empty string on success.
std::string run_check(const json& c) {
  const std::string kind = c.at("kind");
  const Framework fw(fixture_program(c.at("fixture").get<std::string>()));

  if (kind == "arguments") {
    const auto got = rendered(fw, ~fw.arguments().empty_bits());
    const auto want = sorted_strings(c.at("expect"));
    return got == want ? "" : "got " + join(got) + ", expected " + join(want);
  }
  if (kind == "no_argument") {
    const auto l = parse_objective_literal(c.at("literal").get<std::string>());
    return fw.arguments().concluding(l).empty() ? "" : "found an argument for " + render(l);
  }
  if (kind == "stages") {
    const auto want = c.at("expect");
    for (const auto& params : params_of(c)) {
      const auto deltas = fixpoint(fw, params).deltas();
      for (std::size_t row = 0; row < std::max(want.size(), deltas.size()); ++row) {
        const auto got = row < deltas.size() ? rendered(fw, deltas[row]) : std::vector<std::string>{};
        const auto exp = row < want.size() ? sorted_strings(want[row]) : std::vector<std::string>{};
        if (got != exp)
          return params.render() + " row " + std::to_string(row + 1) + ": got " + join(got) + ", expected " +
                 join(exp);
      }
    }
    return {};
  }
  if (kind == "justified") {
    const auto want = sorted_strings(c.at("expect"));
    for (const auto& params : params_of(c)) {
      const auto got = rendered(fw, fixpoint(fw, params).justified);
      if (got != want) return params.render() + ": got " + join(got) + ", expected " + join(want);
    }
    return {};
  }
  if (kind == "wfsx") {
    const WfmResult w = wfm_p(fw.program());
    std::vector<std::string> t, f;
    for (const auto& l : w.model.t) t.push_back(render(l));
    for (const auto& l : w.model.f) f.push_back(render(l));
    std::sort(t.begin(), t.end());
    std::sort(f.begin(), f.end());
    if (t != sorted_strings(c.at("t"))) return "T = " + join(t);
    if (f != sorted_strings(c.at("f"))) return "F = " + join(f);
    return check_wfsx(fw.program());
  }
  if (kind == "coherence") {
    for (const auto& params : params_of(c)) {
      const auto v = check_coherence(fw.program(), params);
      if (c.at("violation").is_null()) {
        if (!v.empty()) return params.render() + ": unexpected violation at " + render(v.front());
      } else {
        const auto l = parse_objective_literal(c.at("violation").get<std::string>());
        if (std::find(v.begin(), v.end(), l) == v.end())
          return params.render() + ": no violation at " + render(l);
      }
    }
    return {};
  }
  if (kind == "consistency") {
    const auto rel = parse_attack_kind(c.at("relation").get<std::string>());
    if (!rel) throw std::invalid_argument("bad relation");
    for (const auto& params : params_of(c))
      if (check_consistency(fw, fixpoint(fw, params), *rel) != c.at("expect").get<bool>())
        return params.render() + ": consistency differs from expectation";
    return {};
  }
  if (kind == "prove") {
    const auto& args = fw.arguments();
    ArgId root = args.size();
    for (ArgId a = 0; a < args.size(); ++a)
      if (args[a].render() == c.at("root").get<std::string>()) root = a;
    if (root == args.size()) return "root argument not found";
    for (const auto& params : params_of(c)) {
      const ProofOutcome out = prove(fw, params, root);
      if (out.won != c.at("won").get<bool>()) return params.render() + ": unexpected outcome";
      if (!out.won) continue;
      if (!verify_tree(fw, params, *out.tree)) return params.render() + ": tree fails verification";
      if (out.tree->size() != c.at("size").get<std::size_t>())
        return params.render() + ": tree has " + std::to_string(out.tree->size()) + " nodes";
      std::vector<std::string> opp;
      for (const auto& o : out.tree->root.children) opp.push_back(args[o.move.argument].render());
      std::sort(opp.begin(), opp.end());
      if (opp != sorted_strings(c.at("opponent"))) return params.render() + ": opponent moves " + join(opp);
    }
    return {};
  }
  if (kind == "strict_inclusions") {
    using K = AttackKind;
    const std::pair<K, K> order[] = {{K::StrongUndercut, K::Undercut}, {K::Undercut, K::Defeat},
                                     {K::Defeat, K::Attack},           {K::StrongUndercut, K::StrongAttack},
                                     {K::StrongAttack, K::Defeat},     {K::Rebut, K::Attack}};
    for (auto [lo, hi] : order) {
      const auto& a = fw.relation(lo);
      const auto& b = fw.relation(hi);
      if (!a.subset_of(b) || a == b)
        return std::string(tag(lo)) + " is not strictly contained in " + std::string(tag(hi));
    }
    return {};
  }
  throw std::invalid_argument("unknown check kind " + kind);
}

void property_checks(RunReport& rep, const std::string& label, const Program& p) {
  const Framework fw(p);
  const std::pair<const char*, std::string> props[] = {
      {"relation algebra", check_relation_algebra(fw)},
      {"hierarchy", check_hierarchy(fw)},
      {"wfsx equivalence", check_wfsx(p)},
      {"gamma characterisation", check_gamma_characterisation(fw)},
      {"proof theory", check_proof_theory(fw)},
      {"coherence with defence a", check_coherence_defence_a(p)},
      {"consistency", check_consistency_property(fw)},
      {"lfp chain", check_lfp_chain(p)},
  };
  for (const auto& [name, failure] : props)
    rep.add(label + ": " + name, failure.empty(), failure.empty() ? "" : failure + "\n" + render(p));
}

}  // namespace

RunReport selftest(const SelftestOptions& options) {
  RunReport rep;
  rep.command = "selftest";
  rep.params["corpus"] = std::to_string(options.corpus_size);
  rep.params["seed"] = std::to_string(options.seed);

  const json expected = json::parse(fixture_expectations());
  for (const auto& c : expected.at("checks")) {
    const std::string failure = run_check(c);
    rep.add(c.at("name"), failure.empty(), failure);
  }
  for (const auto& f : fixtures()) property_checks(rep, std::string(f.name), parse_program(f.text));

  if (options.corpus_size > 0) {
    std::size_t failures = 0;
    RunReport corpus;
    for (const auto& e : make_corpus(options.corpus_size, options.seed))
      property_checks(corpus, "corpus " + e.params.render(), e.program);
    for (auto& r : corpus.results)
      if (!r.pass) {
        ++failures;
        rep.results.push_back(std::move(r));
      }
    rep.add("corpus of " + std::to_string(options.corpus_size) + " programs", failures == 0,
            failures == 0 ? "" : std::to_string(failures) + " property failures");
  }
  return rep;
}

}  // namespace elparg
