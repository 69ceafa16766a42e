#include "derivcalc/parser.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <variant>

#include "derivcalc/errors.hpp"

namespace derivcalc {

namespace {

// A parsed value: either a field element or an operator.
using Value = std::variant<RatFunc, DiffOp>;

class Parser {
 public:
  Parser(std::string_view text, std::size_t nvars, bool allow_ops)
      : text_(text), nvars_(nvars), allow_ops_(allow_ops) {
    if (nvars_ == 0) throw ParseError("variable count must be at least 1", 0);
  }

  Value parse_value_to_end() {
    Value v = expr();
    expect_end();
    return v;
  }

  Derivation derivation_to_end() {
    Derivation d = derivation_literal();
    expect_end();
    return d;
  }

  OpWord word_to_end() {
    OpWord w;
    w.nvars = nvars_;
    bool negate = false;
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    for (;;) {
      WordTerm t = word_term();
      if (negate) t.coefficient = -t.coefficient;
      w.terms.push_back(std::move(t));
      skip_ws();
      if (peek() == '+' || peek() == '-') {
        negate = peek() == '-';
        ++pos_;
        continue;
      }
      break;
    }
    expect_end();
    return w;
  }

  std::vector<RatFunc> list_to_end() {
    std::vector<RatFunc> out;
    skip_ws();
    if (at_end()) return out;
    for (;;) {
      out.push_back(scalar(expr(), "expected a scalar expression"));
      skip_ws();
      if (peek() == ';' || peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    expect_end();
    return out;
  }

 private:
  // --- lexical helpers ---

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_end() {
    skip_ws();
    if (!at_end()) fail(std::string("unexpected character '") + peek() + "'");
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned small_int() {
    const std::size_t start = pos_;
    const std::string s = digits();
    if (s.size() > 6) {
      pos_ = start;
      fail("integer too large");
    }
    return static_cast<unsigned>(std::stoul(s));
  }

  std::size_t variable_index() {
    // Caller has consumed 't'.
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index after 't'");
    const unsigned idx = small_int();
    if (idx == 0 || idx > nvars_) {
      pos_ = start - 1;
      fail("unknown variable t" + std::to_string(idx));
    }
    return idx - 1;
  }

  // --- value arithmetic ---

  static bool is_scalar(const Value& v) { return std::holds_alternative<RatFunc>(v); }

  DiffOp as_op(const Value& v) const {
    if (is_scalar(v)) return DiffOp::identity(nvars_, std::get<RatFunc>(v));
    return std::get<DiffOp>(v);
  }

  RatFunc scalar(const Value& v, const char* message) const {
    if (!is_scalar(v)) fail(message);
    return std::get<RatFunc>(v);
  }

  Value add(const Value& a, const Value& b, bool subtract) const {
    if (is_scalar(a) && is_scalar(b)) {
      return subtract ? std::get<RatFunc>(a) - std::get<RatFunc>(b) : std::get<RatFunc>(a) + std::get<RatFunc>(b);
    }
    return subtract ? as_op(a) - as_op(b) : as_op(a) + as_op(b);
  }

  Value multiply(const Value& a, const Value& b) const {
    if (is_scalar(a) && is_scalar(b)) return std::get<RatFunc>(a) * std::get<RatFunc>(b);
    if (is_scalar(a)) return std::get<DiffOp>(b).scaled(std::get<RatFunc>(a));
    return compose(std::get<DiffOp>(a), as_op(b));
  }

  // --- grammar ---

  Value expr() {
    Value v = term();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') return v;
      ++pos_;
      v = add(v, term(), c == '-');
    }
  }

  Value term() {
    Value v = factor();
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '*' && c != '/') return v;
      const std::size_t op_pos = pos_;
      ++pos_;
      Value rhs = factor();
      if (c == '*') {
        v = multiply(v, rhs);
        continue;
      }
      if (!is_scalar(rhs)) {
        pos_ = op_pos;
        fail("cannot divide by an operator");
      }
      const RatFunc& d = std::get<RatFunc>(rhs);
      if (d.is_zero()) {
        pos_ = op_pos;
        fail("division by the zero expression");
      }
      v = multiply(v, d.reciprocal());
    }
  }

  Value factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      Value v = factor();
      if (is_scalar(v)) return -std::get<RatFunc>(v);
      return -std::get<DiffOp>(v);
    }
    Value base = atom();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    const unsigned e = small_int();
    if (is_scalar(base)) return std::get<RatFunc>(base).pow(static_cast<long>(e));
    DiffOp acc = DiffOp::identity(nvars_, RatFunc::one(nvars_));
    for (unsigned r = 0; r < e; ++r) acc = compose(acc, std::get<DiffOp>(base));
    return acc;
  }

  Value atom() {
    skip_ws();
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (c == 't') {
      ++pos_;
      return RatFunc::variable(nvars_, variable_index());
    }
    if (c == 'd' && allow_ops_) {
      ++pos_;
      return DiffOp::partial(RatFunc::one(nvars_), multi_index());
    }
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (at_end()) fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  // int ['/' positive-int]; a '/' not followed by digits is left for term().
  Value rational() {
    BigInt num(digits(), 10);
    std::size_t p = pos_;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    if (p < text_.size() && text_[p] == '/') {
      std::size_t q = p + 1;
      while (q < text_.size() && std::isspace(static_cast<unsigned char>(text_[q]))) ++q;
      if (q < text_.size() && std::isdigit(static_cast<unsigned char>(text_[q]))) {
        pos_ = q;
        BigInt den(digits(), 10);
        if (den == 0) {
          pos_ = p;
          fail("division by the zero expression");
        }
        return RatFunc::constant(nvars_, BigRational(num, den));
      }
    }
    return RatFunc::constant(nvars_, BigRational(num));
  }

  MultiIndex multi_index() {
    expect('[');
    std::vector<MultiIndex::value_type> e;
    for (;;) {
      e.push_back(small_int());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    if (e.size() != nvars_) fail("multi-index needs " + std::to_string(nvars_) + " entries");
    expect(']');
    return MultiIndex(std::move(e));
  }

  // --- derivations and words ---

  // True when the text at pos_ starts "( t<digits> ->".
  bool derivation_ahead() const {
    std::size_t p = pos_;
    auto ws = [&] {
      while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    };
    ws();
    if (p >= text_.size() || text_[p] != '(') return false;
    ++p;
    ws();
    if (p >= text_.size() || text_[p] != 't') return false;
    ++p;
    if (p >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[p]))) return false;
    while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) ++p;
    ws();
    return text_.substr(p, 2) == "->";
  }

  Derivation derivation_literal() {
    skip_ws();
    const bool parens = peek() == '(';
    if (parens) ++pos_;
    std::vector<RatFunc> images(nvars_, RatFunc(nvars_));
    std::vector<bool> seen(nvars_, false);
    for (;;) {
      skip_ws();
      if (peek() != 't') fail("expected generator 't<i>' in derivation literal");
      ++pos_;
      const std::size_t start = pos_;
      const std::size_t idx = variable_index();
      if (seen[idx]) {
        pos_ = start;
        fail("generator listed twice in derivation literal");
      }
      seen[idx] = true;
      skip_ws();
      if (text_.substr(pos_, 2) != "->") fail("expected '->'");
      pos_ += 2;
      images[idx] = scalar(expr(), "derivation images must be scalar expressions");
      skip_ws();
      if (peek() == ';' || peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    if (parens) expect(')');
    return Derivation(std::move(images));
  }

  WordTerm word_term() {
    WordTerm t{RatFunc::one(nvars_), {}};
    bool in_word = false;
    char joiner = '\0';
    for (;;) {
      skip_ws();
      if (derivation_ahead()) {
        if (in_word && joiner != 'o') fail("derivations in a word are joined with 'o'");
        t.word.push_back(derivation_literal());
        in_word = true;
      } else if (text_.substr(pos_, 2) == "id") {
        if (in_word) fail("'id' must stand alone in a word");
        pos_ += 2;
        in_word = true;
      } else {
        if (in_word) fail("scalar factors must precede the derivations of a word");
        Value v = factor();
        RatFunc c = scalar(v, "word coefficients must be scalar");
        if (joiner == '/') {
          if (c.is_zero()) fail("division by the zero expression");
          c = c.reciprocal();
        }
        t.coefficient *= c;
      }
      skip_ws();
      const char next = peek();
      if (next == '*' || next == '/' || next == 'o') {
        if (next == '/' && in_word) fail("cannot divide a word");
        joiner = next;
        ++pos_;
        continue;
      }
      break;
    }
    if (!in_word) fail("word term needs 'id' or at least one derivation");
    return t;
  }

  std::string_view text_;
  std::size_t nvars_;
  bool allow_ops_;
  std::size_t pos_ = 0;
};

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const DivisionByZero&) {
    throw ParseError("division by the zero expression", 0);
  }
}

}  // namespace

RatFunc parse_expr(std::string_view text, std::size_t nvars) {
  return guarded([&] {
    Parser p(text, nvars, false);
    return std::get<RatFunc>(p.parse_value_to_end());
  });
}

DiffOp parse_diffop(std::string_view text, std::size_t nvars) {
  return guarded([&] {
    Parser p(text, nvars, true);
    Value v = p.parse_value_to_end();
    if (auto* c = std::get_if<RatFunc>(&v)) return DiffOp::identity(nvars, *c);
    return std::get<DiffOp>(std::move(v));
  });
}

Derivation parse_derivation(std::string_view text, std::size_t nvars) {
  return guarded([&] { return Parser(text, nvars, false).derivation_to_end(); });
}

OpWord parse_word(std::string_view text, std::size_t nvars) {
  return guarded([&] { return Parser(text, nvars, false).word_to_end(); });
}

std::vector<RatFunc> parse_expr_list(std::string_view text, std::size_t nvars) {
  return guarded([&] { return Parser(text, nvars, false).list_to_end(); });
}

}  // namespace derivcalc
