#include "hnr/expression.hpp"

#include <cctype>
#include <limits>

#include "hnr/error.hpp"

namespace hnr {

namespace {

constexpr unsigned long kMaxExponent = 1'000'000;

class Parser {
public:
  Parser(std::string_view text, const AlgebraPtr& alg) : text_(text), alg_(alg) {}

  Element parse() {
    Element x = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return x;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    if (!at_digit()) fail("expected a number");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned long small_uint(unsigned long limit) {
    std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 9 || std::stoul(d) > limit) {
      pos_ = start;
      fail("number too large");
    }
    return std::stoul(d);
  }

  int index() { return static_cast<int>(small_uint(std::numeric_limits<int>::max() / 2)); }

  Element expr() {
    Element x = term();
    for (;;) {
      if (accept('+'))
        x += term();
      else if (accept('-'))
        x -= term();
      else
        return x;
    }
  }

  Element term() {
    Element x = factor();
    while (accept('*')) x = x * factor();
    return x;
  }

  Element factor() {
    Element x = atom();
    if (accept('^')) x = power(x, static_cast<int>(small_uint(kMaxExponent)));
    return x;
  }

  Element atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Element x = expr();
      expect(')');
      return x;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return rational();
    ++pos_;
    switch (c) {
      case 't': return gen_t(alg_, index());
      case 'T': return gen_T(alg_, index());
      case 'g': return gen_g(alg_, index());
      case 'e': return gen_e(alg_, index());
      case 'b': return idempotent();
      default:
        pos_ = start;
        fail("unknown symbol '" + std::string(1, c) + "'");
    }
  }

  Element idempotent() {
    expect('[');
    std::vector<int> k{index()};
    while (accept(',')) k.push_back(index());
    expect(']');
    if (static_cast<int>(k.size()) != alg_->n())
      throw Error(ErrorCode::IndexOutOfRange, "b[...] needs " + std::to_string(alg_->n()) + " entries");
    for (int v : k)
      if (v < 1 || v > alg_->r())
        throw Error(ErrorCode::IndexOutOfRange, "color " + std::to_string(v) + " outside [1," +
                                                    std::to_string(alg_->r()) + "]");
    return gen_b(alg_, ColorVector(k, alg_->r()));
  }

  Element rational() {
    const std::size_t start = pos_;
    std::string literal;
    if (text_[pos_] == '-') {
      literal = "-";
      ++pos_;
    }
    literal += digits();
    if (accept('/')) literal += "/" + digits();
    try {
      return scalar_element(alg_, Scalar::parse(literal));
    } catch (const Error&) {
      pos_ = start;
      fail("invalid rational '" + literal + "'");
    }
  }

  std::string_view text_;
  const AlgebraPtr& alg_;
  std::size_t pos_ = 0;
};

std::string monomial(const Algebra& alg, Basis basis, std::size_t label, std::size_t w) {
  std::string out;
  auto append = [&out](const std::string& part) { out += (out.empty() ? "" : "*") + part; };
  if (basis == Basis::bg) {
    std::string b = "b[";
    for (int i = 1; i <= alg.n(); ++i) b += (i > 1 ? "," : "") + std::to_string(alg.color_entry(label, i));
    append(b + "]");
  } else {
    auto c = exponent_vector(alg, label);
    for (int i = 1; i <= alg.n(); ++i) {
      if (c[i - 1] == 0) continue;
      append("t" + std::to_string(i) + (c[i - 1] > 1 ? "^" + std::to_string(c[i - 1]) : ""));
    }
  }
  const char* letter = basis == Basis::tT ? "T" : "g";
  for (int i : alg.word(w)) append(letter + std::to_string(i));
  return out;
}

}  // namespace

Element parse_element(std::string_view text, const AlgebraPtr& alg) { return Parser(text, alg).parse(); }

std::string format_element(const Element& x, Basis basis) {
  const Algebra& alg = x.context();
  const auto coords = to_coordinates(x, basis);
  if (coords.entries.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : coords.entries) {
    std::string m = monomial(alg, basis, alg.key_color(key), alg.key_perm(key));
    const bool negative = c.sign() < 0;
    const Scalar magnitude = c.abs();
    std::string body;
    if (m.empty())
      body = magnitude.str();
    else if (magnitude.is_one())
      body = m;
    else
      body = magnitude.str() + "*" + m;
    if (out.empty())
      out = negative ? (m.empty() ? "-" + body : "-" + magnitude.str() + "*" + m) : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace hnr
