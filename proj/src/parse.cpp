#include <cctype>

#include "qm/superpoly.hpp"

namespace qm {
namespace {

class Parser {
 public:
  Parser(const TablePtr& t, const std::string& s) : t_(t), s_(s) {}

  SuperPoly run() {
    SuperPoly r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw AlgebraError("parse error at offset " + std::to_string(pos_) + ": " + what + " in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool eat_minus() { return eat("-") || eat("−"); }

  SuperPoly expr() {
    SuperPoly r(t_);
    bool neg = eat_minus();
    if (!neg) eat("+");
    SuperPoly first = term();
    r += neg ? -first : first;
    for (;;) {
      if (eat("+")) r += term();
      else if (eat_minus()) r -= term();
      else break;
    }
    return r;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '(') return true;
    return longest_name() > 0;
  }

  SuperPoly term() {
    SuperPoly r = unary();
    for (;;) {
      if (eat("*") || eat("·") || eat("∧")) r = r * unary();
      else if (starts_atom()) r = r * unary();
      else break;
    }
    return r;
  }

  SuperPoly unary() {
    if (eat_minus()) return -unary();
    SuperPoly a = atom();
    if (eat("^")) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int k = std::stoi(s_.substr(start, pos_ - start));
      SuperPoly r = SuperPoly::constant(t_, 1);
      for (int i = 0; i < k; ++i) r = r * a;
      return r;
    }
    return a;
  }

  size_t longest_name() const {
    size_t best = 0;
    for (int i = 0; i < t_->size(); ++i) {
      const std::string& n = t_->name(i);
      if (n.size() > best && s_.compare(pos_, n.size(), n) == 0) best = n.size();
    }
    return best;
  }

  SuperPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (s_[pos_] == '(') {
      ++pos_;
      SuperPoly r = expr();
      if (!eat(")")) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        size_t d = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (d == pos_) fail("expected denominator");
      }
      Q q(s_.substr(start, pos_ - start));
      if (q.get_den() == 0) fail("zero denominator");
      q.canonicalize();
      return SuperPoly::constant(t_, q);
    }
    size_t n = longest_name();
    if (n == 0) fail("unknown identifier");
    std::string name = s_.substr(pos_, n);
    pos_ += n;
    return SuperPoly::gen(t_, name);
  }

  const TablePtr& t_;
  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

SuperPoly parse_poly(const TablePtr& table, const std::string& text) { return Parser(table, text).run(); }

}  // namespace qm
