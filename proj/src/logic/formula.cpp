#include "brouwer/logic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <random>

#include "brouwer/core/error.hpp"

namespace brouwer {

Formula Formula::var(std::string name) {
  if (!is_identifier(name) || name == "F") {
    throw Error(ErrorKind::InvalidInput, "bad variable name '" + name + "'");
  }
  return Formula(std::make_shared<const Node>(Node{Kind::Var, std::move(name), nullptr, nullptr}));
}

Formula Formula::bottom() {
  static const Formula b(std::make_shared<const Node>(Node{Kind::Bottom, "", nullptr, nullptr}));
  return b;
}

Formula Formula::binary(Kind k, Formula l, Formula r) {
  return Formula(std::make_shared<const Node>(Node{k, "", std::make_shared<const Formula>(std::move(l)),
                                                   std::make_shared<const Formula>(std::move(r))}));
}

Formula Formula::conj(Formula l, Formula r) { return binary(Kind::And, std::move(l), std::move(r)); }
Formula Formula::disj(Formula l, Formula r) { return binary(Kind::Or, std::move(l), std::move(r)); }
Formula Formula::implies(Formula l, Formula r) { return binary(Kind::Implies, std::move(l), std::move(r)); }

std::size_t Formula::connectives() const {
  if (!is_binary()) return 0;
  return 1 + left().connectives() + right().connectives();
}

bool Formula::operator==(const Formula& o) const {
  if (node_ == o.node_) return true;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case Kind::Var: return name() == o.name();
    case Kind::Bottom: return true;
    default: return left() == o.left() && right() == o.right();
  }
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse() {
    Formula f = imp();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula imp() {
    Formula lhs = disj();
    if (accept("->")) return Formula::implies(std::move(lhs), imp());
    return lhs;
  }

  Formula disj() {
    Formula f = conj();
    while (accept("|")) f = Formula::disj(std::move(f), conj());
    return f;
  }

  Formula conj() {
    Formula f = neg();
    while (accept("&")) f = Formula::conj(std::move(f), neg());
    return f;
  }

  Formula neg() {
    std::size_t tildes = 0;
    while (accept("~")) ++tildes;
    Formula f = atom();
    while (tildes-- > 0) f = Formula::neg(std::move(f));
    return f;
  }

  Formula atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      Formula f = imp();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
      std::string name(text_.substr(pos_, end - pos_));
      pos_ = end;
      return name == "F" ? Formula::bottom() : Formula::var(std::move(name));
    }
    fail("expected a variable, 'F' or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_negation(const Formula& f) {
  return f.kind() == Formula::Kind::Implies && f.right().kind() == Formula::Kind::Bottom;
}

// 0 = implication, 1 = or, 2 = and, 3 = prefix/atom
int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Implies: return is_negation(f) ? 3 : 0;
    case Formula::Kind::Or: return 1;
    case Formula::Kind::And: return 2;
    default: return 3;
  }
}

void print(const Formula& f, std::string& out);

void print_at(const Formula& f, int min_prec, std::string& out) {
  if (precedence(f) < min_prec) {
    out += '(';
    print(f, out);
    out += ')';
  } else {
    print(f, out);
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Var: out += f.name(); return;
    case Formula::Kind::Bottom: out += 'F'; return;
    case Formula::Kind::And:
      print_at(f.left(), 2, out);
      out += " & ";
      print_at(f.right(), 3, out);
      return;
    case Formula::Kind::Or:
      print_at(f.left(), 1, out);
      out += " | ";
      print_at(f.right(), 2, out);
      return;
    case Formula::Kind::Implies:
      if (is_negation(f)) {
        out += '~';
        print_at(f.left(), 3, out);
        return;
      }
      print_at(f.left(), 1, out);
      out += " -> ";
      print_at(f.right(), 0, out);
      return;
  }
}

void collect(const Formula& f, std::set<std::string>& out) {
  if (f.kind() == Formula::Kind::Var) out.insert(f.name());
  if (f.is_binary()) {
    collect(f.left(), out);
    collect(f.right(), out);
  }
}

Formula replace_bottom(const Formula& f, const Formula& by) {
  switch (f.kind()) {
    case Formula::Kind::Var: return f;
    case Formula::Kind::Bottom: return by;
    case Formula::Kind::And: return Formula::conj(replace_bottom(f.left(), by), replace_bottom(f.right(), by));
    case Formula::Kind::Or: return Formula::disj(replace_bottom(f.left(), by), replace_bottom(f.right(), by));
    case Formula::Kind::Implies:
      return Formula::implies(replace_bottom(f.left(), by), replace_bottom(f.right(), by));
  }
  return f;
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  collect(f, out);
  return out;
}

bool is_positive(const Formula& f) {
  if (f.kind() == Formula::Kind::Bottom) return false;
  if (!f.is_binary()) return true;
  return is_positive(f.left()) && is_positive(f.right());
}

Formula positify(const Formula& f, const std::string& fresh) {
  const auto vars = variables(f);
  if (vars.count(fresh) != 0) throw Error(ErrorKind::FreshNotFresh, "'" + fresh + "' occurs in the formula");
  if (is_positive(f)) return f;
  std::optional<Formula> conj;
  for (const auto& v : vars) conj = conj ? Formula::conj(*conj, Formula::var(v)) : Formula::var(v);
  const Formula fresh_var = Formula::var(fresh);
  return replace_bottom(f, conj ? Formula::conj(*conj, fresh_var) : fresh_var);
}

std::string fresh_variable(const Formula& f) {
  const auto vars = variables(f);
  for (const char* c : {"q", "r", "s", "t"}) {
    if (vars.count(c) == 0) return c;
  }
  for (std::size_t i = 1;; ++i) {
    std::string name = "x" + std::to_string(i);
    if (vars.count(name) == 0) return name;
  }
}

namespace {

Formula sample(std::mt19937_64& rng, std::size_t size, const std::vector<std::string>& vars) {
  if (size == 0) {
    if (std::bernoulli_distribution(0.1)(rng)) return Formula::bottom();
    return Formula::var(vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)]);
  }
  const auto kind = std::uniform_int_distribution<int>(0, 2)(rng);
  const auto left_size = std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
  Formula l = sample(rng, left_size, vars);
  Formula r = sample(rng, size - 1 - left_size, vars);
  switch (kind) {
    case 0: return Formula::conj(std::move(l), std::move(r));
    case 1: return Formula::disj(std::move(l), std::move(r));
    default: return Formula::implies(std::move(l), std::move(r));
  }
}

}  // namespace

Formula sample_formula(std::uint64_t seed, std::size_t size, const std::vector<std::string>& vars) {
  if (vars.empty()) throw Error(ErrorKind::InvalidInput, "sample_formula needs at least one variable");
  std::mt19937_64 rng(seed);
  return sample(rng, size, vars);
}

}  // namespace brouwer
