#pragma once

// Text form of homogeneous polynomials and generator lists:
//
//   ideal  := poly (',' poly)*
//   poly   := [sign] term (sign term)*
//   term   := factor ('*' factor)*
//   factor := integer ['/' integer] | variable ['^' integer]
//
// `sign` is '+', '-' or U+2212. Variable names come from default_variable_names.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/polyring.hpp"

namespace lefschetz {

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars)
      : text_(text), nvars_(nvars), names_(default_variable_names(nvars)) {}

  IdealPresentation ideal() {
    std::vector<HomogeneousPoly> gens;
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty generator list");
    gens.push_back(poly());
    while (consume(',')) gens.push_back(poly());
    expect_end();
    return IdealPresentation(nvars_, std::move(gens));
  }

  HomogeneousPoly single() {
    auto p = poly();
    expect_end();
    return p;
  }

 private:
  HomogeneousPoly poly() {
    skip_ws();
    const std::size_t start = pos_;
    std::vector<std::pair<Monomial, Rational>> terms;
    int sign = 1;
    peek_sign(sign);
    for (;;) {
      skip_ws();
      const std::size_t term_start = pos_;
      auto [mono, coeff] = term();
      if (!terms.empty() && mono.degree() != terms.front().first.degree())
        throw ParseError(term_start, "term degree " + std::to_string(mono.degree()) +
                                         " differs from " + std::to_string(terms.front().first.degree()) +
                                         " (polynomial is not homogeneous)");
      terms.emplace_back(std::move(mono), sign * coeff);
      skip_ws();
      sign = 1;
      if (!peek_sign(sign)) break;
    }
    HomogeneousPoly p(nvars_, terms.front().first.degree());
    for (const auto& [m, c] : terms) p.add_term(m, c);
    if (p.is_zero()) throw ParseError(start, "polynomial is zero");
    return p;
  }

  std::pair<Monomial, Rational> term() {
    std::vector<int> exps(nvars_, 0);
    Rational coeff(1);
    factor(exps, coeff);
    while (consume('*')) factor(exps, coeff);
    return {Monomial(std::move(exps)), coeff};
  }

  void factor(std::vector<int>& exps, Rational& coeff) {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "expected a number or variable");
    if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      BigInt num(digits());
      BigInt den(1);
      if (consume('/')) {
        skip_ws();
        const std::size_t den_pos = pos_;
        den = BigInt(digits());
        if (den == 0) throw ParseError(den_pos, "zero denominator");
      }
      coeff *= make_rational(num, den);
      return;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      const auto& name = names_[i];
      if (text_.substr(pos_, name.size()) != name) continue;
      // Longest-match guard for names like x1 vs x10.
      std::size_t after = pos_ + name.size();
      if (after < text_.size() && std::isdigit(static_cast<unsigned char>(text_[after])) &&
          std::isdigit(static_cast<unsigned char>(name.back())))
        continue;
      pos_ = after;
      int power = 1;
      if (consume('^')) {
        skip_ws();
        const std::size_t exp_pos = pos_;
        std::string d = digits();
        if (d.size() > 6) throw ParseError(exp_pos, "exponent too large");
        power = std::stoi(d);
      }
      exps[i] += power;
      return;
    }
    throw ParseError(pos_, "unknown symbol '" + std::string(1, text_[pos_]) + "'");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek_sign(int& sign) {
    skip_ws();
    if (consume_raw("+")) return true;
    if (consume_raw("-") || consume_raw("\xE2\x88\x92")) {
      sign = -sign;
      return true;
    }
    return false;
  }

  bool consume(char c) {
    skip_ws();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool consume_raw(std::string_view s) {
    if (text_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect_end() {
    skip_ws();
    if (!at_end()) throw ParseError(pos_, "unexpected trailing input");
  }

  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t nvars_;
  std::vector<std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline HomogeneousPoly parse_poly(std::string_view text, std::size_t nvars = 3) {
  return detail::PolyParser(text, nvars).single();
}

/// Comma-separated generators, e.g. "x^2, y^2-x*z, z^2".
inline IdealPresentation parse_ideal(std::string_view text, std::size_t nvars = 3) {
  return detail::PolyParser(text, nvars).ideal();
}

}  // namespace lefschetz
