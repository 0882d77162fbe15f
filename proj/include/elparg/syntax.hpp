// Ground extended logic programs: literals with explicit (~) and default
// (not) negation, rules, programs, the `.elp` parser and canonical printer.
#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace elparg {

/// Thrown for malformed program text or literals. Carries a 1-based source
/// position; line 0 means the position is unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// Raised when a program already uses the reserved `__` atom prefix in a way
/// that could clash with a generated query atom.
class ReservedAtomError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Prefix reserved for atoms generated by add_query_rule.
inline constexpr std::string_view kReservedPrefix = "__";

class Atom {
 public:
  /// Validates against `[a-z][a-zA-Z0-9_]*`.
  explicit Atom(std::string name);

  /// Builds an atom in the reserved `__` namespace. Only query-rule
  /// construction should call this.
  static Atom reserved(std::string name);

  const std::string& name() const noexcept { return name_; }
  bool is_reserved() const noexcept;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;

 private:
  struct Unchecked {};
  Atom(std::string name, Unchecked) : name_(std::move(name)) {}
  std::string name_;
};

/// An atom A or its explicit negation ~A. Double negation collapses by
/// construction: complement() just flips the flag.
struct ObjectiveLiteral {
  Atom atom;
  bool negated = false;

  ObjectiveLiteral complement() const { return {atom, !negated}; }

  friend bool operator==(const ObjectiveLiteral&, const ObjectiveLiteral&) = default;
  // Orders by atom name, positive before negated: p < ~p < q.
  friend auto operator<=>(const ObjectiveLiteral&, const ObjectiveLiteral&) = default;
};

inline ObjectiveLiteral complement(const ObjectiveLiteral& l) { return l.complement(); }

/// `not L` for an objective literal L.
struct DefaultLiteral {
  ObjectiveLiteral inner;

  friend bool operator==(const DefaultLiteral&, const DefaultLiteral&) = default;
  friend auto operator<=>(const DefaultLiteral&, const DefaultLiteral&) = default;
};

using Literal = std::variant<ObjectiveLiteral, DefaultLiteral>;

using LiteralSet = std::set<ObjectiveLiteral>;
using DefaultSet = std::set<DefaultLiteral>;

/// `head <- objective_body, not default_body`. The head is objective by type.
/// Duplicate body literals are dropped on construction; the first occurrence
/// keeps its position.
class Rule {
 public:
  Rule(ObjectiveLiteral head, std::vector<ObjectiveLiteral> objective_body = {},
       std::vector<DefaultLiteral> default_body = {});

  const ObjectiveLiteral& head() const noexcept { return head_; }
  const std::vector<ObjectiveLiteral>& objective_body() const noexcept { return objective_body_; }
  const std::vector<DefaultLiteral>& default_body() const noexcept { return default_body_; }
  bool is_fact() const noexcept { return objective_body_.empty() && default_body_.empty(); }

  /// Rule identity is (head, body as sets).
  friend bool operator==(const Rule& a, const Rule& b);
  friend std::weak_ordering operator<=>(const Rule& a, const Rule& b);

 private:
  ObjectiveLiteral head_;
  std::vector<ObjectiveLiteral> objective_body_;
  std::vector<DefaultLiteral> default_body_;
};

/// A finite ground extended logic program. Immutable once built.
class Program {
 public:
  Program() = default;
  /// Keeps the first occurrence of every duplicate rule.
  explicit Program(std::vector<Rule> rules);

  const std::vector<Rule>& rules() const noexcept { return rules_; }
  std::size_t size() const noexcept { return rules_.size(); }
  bool empty() const noexcept { return rules_.empty(); }

  /// Sorted atoms occurring anywhere in the program.
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }

  /// L and ~L for every atom, sorted (p, ~p, q, ~q, ...).
  const std::vector<ObjectiveLiteral>& herbrand_base() const noexcept { return herbrand_base_; }

  /// Position of `l` in herbrand_base(), if present. Literal ids are
  /// 2 * atom_index + negated, so complement(id) == id ^ 1.
  std::optional<std::size_t> literal_id(const ObjectiveLiteral& l) const;

  bool uses_reserved_atoms() const;

  /// Same rule set regardless of order.
  friend bool operator==(const Program& a, const Program& b);

 private:
  std::vector<Rule> rules_;
  std::vector<Atom> atoms_;
  std::vector<ObjectiveLiteral> herbrand_base_;
};

Program parse_program(std::string_view text);
Program parse_program_file(const std::string& path);

/// Parses `p`, `~p`, `not p` or `not ~p`.
Literal parse_literal(std::string_view text);
ObjectiveLiteral parse_objective_literal(std::string_view text);

std::string render(const ObjectiveLiteral& l);
std::string render(const DefaultLiteral& l);
std::string render(const Literal& l);
/// `h.` or `h <- b1, b2, not c.` (objective body first).
std::string render(const Rule& r);
/// Rule body-less form used inside arguments: `h <- b1, not c` (no period).
std::string render_inline(const Rule& r);
/// One rule per line.
std::string render(const Program& p);

/// Name of the fresh atom standing for `not l`: `__not_p`, `__not_neg_p`.
std::string query_atom_name(const ObjectiveLiteral& l);

/// P' = P plus `__not_<l> <- not l`. Returns the program and the fresh atom.
/// Idempotent: if the query rule is already present the rule set is unchanged.
/// Throws ReservedAtomError if the program uses the reserved prefix for
/// anything other than query rules.
std::pair<Program, Atom> add_query_rule(const Program& p, const ObjectiveLiteral& l);

std::ostream& operator<<(std::ostream& os, const ObjectiveLiteral& l);
std::ostream& operator<<(std::ostream& os, const DefaultLiteral& l);
std::ostream& operator<<(std::ostream& os, const Rule& r);

}  // namespace elparg
