#include "elparg/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace elparg {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? message
                                   : std::to_string(line) + ":" + std::to_string(column) + ": " +
                                         message),
      message_(message),
      line_(line),
      column_(column) {}

namespace {

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool valid_atom_name(std::string_view s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

template <typename T>
std::vector<T> dedup_keep_first(std::vector<T> xs) {
  std::vector<T> out;
  out.reserve(xs.size());
  for (auto& x : xs)
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  return out;
}

template <typename T>
std::vector<T> sorted(std::vector<T> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

}  // namespace

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!valid_atom_name(name_)) throw ParseError("invalid atom name '" + name_ + "'", 0, 0);
}

Atom Atom::reserved(std::string name) {
  if (name.rfind(kReservedPrefix, 0) != 0)
    throw std::invalid_argument("reserved atom must start with '__'");
  return Atom(std::move(name), Unchecked{});
}

bool Atom::is_reserved() const noexcept { return name_.rfind(kReservedPrefix, 0) == 0; }

Rule::Rule(ObjectiveLiteral head, std::vector<ObjectiveLiteral> objective_body,
           std::vector<DefaultLiteral> default_body)
    : head_(std::move(head)),
      objective_body_(dedup_keep_first(std::move(objective_body))),
      default_body_(dedup_keep_first(std::move(default_body))) {}

bool operator==(const Rule& a, const Rule& b) {
  return a.head_ == b.head_ && sorted(a.objective_body_) == sorted(b.objective_body_) &&
         sorted(a.default_body_) == sorted(b.default_body_);
}

std::weak_ordering operator<=>(const Rule& a, const Rule& b) {
  if (auto c = a.head_ <=> b.head_; c != 0) return c;
  if (auto c = sorted(a.objective_body_) <=> sorted(b.objective_body_); c != 0) return c;
  return sorted(a.default_body_) <=> sorted(b.default_body_);
}

Program::Program(std::vector<Rule> rules) {
  for (auto& r : rules)
    if (std::find(rules_.begin(), rules_.end(), r) == rules_.end()) rules_.push_back(std::move(r));

  std::set<Atom> atoms;
  for (const auto& r : rules_) {
    atoms.insert(r.head().atom);
    for (const auto& l : r.objective_body()) atoms.insert(l.atom);
    for (const auto& l : r.default_body()) atoms.insert(l.inner.atom);
  }
  atoms_.assign(atoms.begin(), atoms.end());
  herbrand_base_.reserve(2 * atoms_.size());
  for (const auto& a : atoms_) {
    herbrand_base_.push_back({a, false});
    herbrand_base_.push_back({a, true});
  }
}

std::optional<std::size_t> Program::literal_id(const ObjectiveLiteral& l) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), l.atom);
  if (it == atoms_.end() || *it != l.atom) return std::nullopt;
  return 2 * static_cast<std::size_t>(it - atoms_.begin()) + (l.negated ? 1 : 0);
}

bool Program::uses_reserved_atoms() const {
  return std::any_of(atoms_.begin(), atoms_.end(), [](const Atom& a) { return a.is_reserved(); });
}

bool operator==(const Program& a, const Program& b) {
  if (a.rules_.size() != b.rules_.size()) return false;
  return sorted(a.rules_) == sorted(b.rules_);
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok { Ident, Not, Tilde, Arrow, Dot, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space_and_comments();
    const std::size_t line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};
    const char c = src_[pos_];
    if (c == '~') return advance(1, Tok::Tilde, line, col);
    if (c == '.') return advance(1, Tok::Dot, line, col);
    if (c == ',') return advance(1, Tok::Comma, line, col);
    if (c == '<' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-')
      return advance(2, Tok::Arrow, line, col);
    if (is_ident_char(c)) {
      std::size_t end = pos_;
      while (end < src_.size() && is_ident_char(src_[end])) ++end;
      std::string word(src_.substr(pos_, end - pos_));
      if (std::isupper(static_cast<unsigned char>(word[0])) || word[0] == '_') {
        if (word.rfind(kReservedPrefix, 0) == 0)
          throw ParseError("reserved atom name '" + word + "'", line, col);
        throw ParseError("variable not allowed: '" + word + "'", line, col);
      }
      if (std::isdigit(static_cast<unsigned char>(word[0])))
        throw ParseError("atom must start with a lowercase letter: '" + word + "'", line, col);
      const Tok kind = word == "not" ? Tok::Not : Tok::Ident;
      return advance(end - pos_, kind, line, col, std::move(word));
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

 private:
  Token advance(std::size_t n, Tok kind, std::size_t line, std::size_t col, std::string text = {}) {
    if (text.empty()) text = std::string(src_.substr(pos_, n));
    pos_ += n;
    col_ += n;
    return {kind, std::move(text), line, col};
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++pos_;
        ++line_;
        col_ = 1;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
        ++col_;
      } else if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "atom";
    case Tok::Not: return "'not'";
    case Tok::Tilde: return "'~'";
    case Tok::Arrow: return "'<-'";
    case Tok::Dot: return "'.'";
    case Tok::Comma: return "','";
    case Tok::End: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { look_ = lex_.next(); }

  std::vector<Rule> program() {
    std::vector<Rule> rules;
    while (look_.kind != Tok::End) rules.push_back(rule());
    return rules;
  }

  Literal single_literal() {
    Literal l = literal();
    expect_end();
    return l;
  }

 private:
  Rule rule() {
    if (look_.kind == Tok::Not) throw error("default literal in head");
    ObjectiveLiteral head = objective();
    std::vector<ObjectiveLiteral> obj;
    std::vector<DefaultLiteral> def;
    if (look_.kind == Tok::Arrow) {
      shift();
      do {
        Literal l = literal();
        if (auto* o = std::get_if<ObjectiveLiteral>(&l))
          obj.push_back(std::move(*o));
        else
          def.push_back(std::get<DefaultLiteral>(std::move(l)));
      } while (accept(Tok::Comma));
    }
    expect(Tok::Dot);
    return Rule(std::move(head), std::move(obj), std::move(def));
  }

  Literal literal() {
    if (accept(Tok::Not)) return DefaultLiteral{objective()};
    return objective();
  }

  ObjectiveLiteral objective() {
    const bool neg = accept(Tok::Tilde);
    if (look_.kind != Tok::Ident) throw error(std::string("expected atom, found ") + describe(look_.kind));
    ObjectiveLiteral l{Atom(look_.text), neg};
    shift();
    return l;
  }

  bool accept(Tok t) {
    if (look_.kind != t) return false;
    shift();
    return true;
  }

  void expect(Tok t) {
    if (!accept(t))
      throw error(std::string("expected ") + describe(t) + ", found " + describe(look_.kind));
  }

  void expect_end() {
    if (look_.kind != Tok::End) throw error(std::string("unexpected ") + describe(look_.kind));
  }

  void shift() { look_ = lex_.next(); }

  ParseError error(const std::string& msg) const { return ParseError(msg, look_.line, look_.column); }

  Lexer lex_;
  Token look_;
};

}  // namespace

Program parse_program(std::string_view text) { return Program(Parser(text).program()); }

Program parse_program_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_program(ss.str());
}

Literal parse_literal(std::string_view text) { return Parser(text).single_literal(); }

ObjectiveLiteral parse_objective_literal(std::string_view text) {
  Literal l = parse_literal(text);
  if (auto* o = std::get_if<ObjectiveLiteral>(&l)) return *o;
  throw ParseError("expected an objective literal, got '" + std::string(text) + "'", 0, 0);
}

// ---------------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------------

std::string render(const ObjectiveLiteral& l) { return (l.negated ? "~" : "") + l.atom.name(); }

std::string render(const DefaultLiteral& l) { return "not " + render(l.inner); }

std::string render(const Literal& l) {
  return std::visit([](const auto& x) { return render(x); }, l);
}

std::string render_inline(const Rule& r) {
  std::string out = render(r.head());
  if (r.is_fact()) return out;
  out += " <- ";
  bool first = true;
  auto sep = [&] {
    if (!first) out += ", ";
    first = false;
  };
  for (const auto& l : r.objective_body()) sep(), out += render(l);
  for (const auto& l : r.default_body()) sep(), out += render(l);
  return out;
}

std::string render(const Rule& r) { return render_inline(r) + "."; }

std::string render(const Program& p) {
  std::string out;
  for (const auto& r : p.rules()) out += render(r) + "\n";
  return out;
}

std::ostream& operator<<(std::ostream& os, const ObjectiveLiteral& l) { return os << render(l); }
std::ostream& operator<<(std::ostream& os, const DefaultLiteral& l) { return os << render(l); }
std::ostream& operator<<(std::ostream& os, const Rule& r) { return os << render(r); }

// ---------------------------------------------------------------------------
// Query rules
// ---------------------------------------------------------------------------

std::string query_atom_name(const ObjectiveLiteral& l) {
  return std::string(kReservedPrefix) + "not_" + (l.negated ? "neg_" : "") + l.atom.name();
}

namespace {

bool is_query_rule(const Rule& r) {
  if (!r.head().atom.is_reserved() || r.head().negated) return false;
  if (!r.objective_body().empty() || r.default_body().size() != 1) return false;
  return r.head().atom.name() == query_atom_name(r.default_body().front().inner);
}

}  // namespace

std::pair<Program, Atom> add_query_rule(const Program& p, const ObjectiveLiteral& l) {
  // Reserved atoms are only tolerated as heads of well-formed query rules that
  // nothing else refers to.
  std::set<Atom> query_heads;
  for (const auto& r : p.rules())
    if (is_query_rule(r)) query_heads.insert(r.head().atom);
  for (const auto& r : p.rules()) {
    auto bad = [&](const ObjectiveLiteral& x) { return x.atom.is_reserved(); };
    const bool body_uses = std::any_of(r.objective_body().begin(), r.objective_body().end(), bad) ||
                           std::any_of(r.default_body().begin(), r.default_body().end(),
                                       [&](const DefaultLiteral& d) { return bad(d.inner); });
    if (body_uses || (r.head().atom.is_reserved() && !is_query_rule(r)))
      throw ReservedAtomError("reserved atom collision in rule '" + render(r) + "'");
  }
  if (l.atom.is_reserved()) throw ReservedAtomError("cannot query reserved atom '" + l.atom.name() + "'");

  Atom fresh = Atom::reserved(query_atom_name(l));
  std::vector<Rule> rules = p.rules();
  rules.emplace_back(ObjectiveLiteral{fresh, false}, std::vector<ObjectiveLiteral>{},
                     std::vector<DefaultLiteral>{DefaultLiteral{l}});
  return {Program(std::move(rules)), std::move(fresh)};
}

}  // namespace elparg
