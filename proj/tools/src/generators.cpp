#include "cideal_cli/generators.hpp"

#include <cctype>
#include <vector>

#include "cideal/errors.hpp"
#include "cideal_cli/document.hpp"

namespace cideal::cli {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::int64_t number() {
    skip_space();
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = checked_add(checked_mul(v, 10), text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) error("expected an exponent");
    return v;
  }
  [[noreturn]] void error(const std::string& what) const {
    std::string near = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw DocumentError("generator syntax error at column " + std::to_string(pos_ + 1) + " (" + near + "): " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Exponent monomial(Lexer& lx) {
  if (lx.accept('1')) return {0, 0};
  Exponent e;
  do {
    char var = lx.peek();
    if (var != 'x' && var != 'y') lx.error("expected x, y or 1");
    lx.accept(var);
    std::int64_t k = lx.accept('^') ? lx.number() : 1;
    (var == 'x' ? e.a : e.b) += k;
  } while (lx.accept('*'));
  return e;
}

}  // namespace

Staircase parse_generators(std::string_view text) {
  Lexer lx(text);
  bool wrapped = lx.accept('(');
  std::vector<Exponent> gens;
  do {
    gens.push_back(monomial(lx));
  } while (lx.accept(','));
  if (wrapped && !lx.accept(')')) lx.error("expected ')'");
  if (!lx.done()) lx.error("unexpected character");
  return Staircase(std::move(gens));
}

std::string format_generators(const Staircase& s) {
  auto text = s.to_string();
  return text.substr(1, text.size() - 2);
}

}  // namespace cideal::cli
