#pragma once

// The codimension-three Gorenstein family
//   I = (x^a, y^b - x^{b-g} z^g, z^c, x^{a-b+g} y^{b-beta}, y^{b-beta} z^{c-g})
// with 1 <= beta <= b-1, max{1, b-a+1} <= g <= min{b-1, c-1}, a >= c >= 2,
// its complete intersection (x^a, y^b - x^{b-g} z^g, z^c), which known WLP
// results cover each tuple, and the unipotent-plus-last-row matrices whose
// determinant is positive.

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/exactla.hpp"
#include "lefschetz/polyring.hpp"

namespace lefschetz {

struct GorensteinParams {
  int a = 0, b = 0, c = 0, beta = 0, gamma = 0;

  friend auto operator<=>(const GorensteinParams&, const GorensteinParams&) = default;

  std::string to_string() const {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
           std::to_string(beta) + "," + std::to_string(gamma) + ")";
  }
};

namespace detail {

inline long floor_div(long num, long den) {
  long q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

inline void check_ci_bounds(int a, int b, int c, int gamma) {
  if (!(a >= c && c >= 2))
    throw Error(Errc::ACOrder, "need a >= c >= 2, got a=" + std::to_string(a) + " c=" + std::to_string(c));
  const int lo = std::max(1, b - a + 1), hi = std::min(b - 1, c - 1);
  if (gamma < lo || gamma > hi)
    throw Error(Errc::GammaRange, "need max{1, b-a+1} = " + std::to_string(lo) + " <= gamma <= min{b-1, c-1} = " +
                                      std::to_string(hi) + ", got gamma=" + std::to_string(gamma));
}

}  // namespace detail

inline GorensteinParams validate(int a, int b, int c, int beta, int gamma) {
  if (!(a >= c && c >= 2))
    throw Error(Errc::ACOrder, "need a >= c >= 2, got a=" + std::to_string(a) + " c=" + std::to_string(c));
  if (beta < 1 || beta > b - 1)
    throw Error(Errc::BetaRange,
                "need 1 <= beta <= b-1 = " + std::to_string(b - 1) + ", got beta=" + std::to_string(beta));
  detail::check_ci_bounds(a, b, c, gamma);
  return GorensteinParams{a, b, c, beta, gamma};
}

inline GorensteinParams validate(const GorensteinParams& p) { return validate(p.a, p.b, p.c, p.beta, p.gamma); }

/// a + b + c - beta - 3.
inline int expected_socle_degree(const GorensteinParams& p) { return p.a + p.b + p.c - p.beta - 3; }

/// Degree cap used for the family quotients; strictly above the socle degree.
inline int default_degree_cap(const GorensteinParams& p) { return p.a + p.b + p.c; }

namespace detail {

inline HomogeneousPoly mono3(int x, int y, int z) { return HomogeneousPoly::from_monomial(Monomial({x, y, z})); }

inline HomogeneousPoly ci_binomial(int b, int gamma) { return mono3(0, b, 0) - mono3(b - gamma, 0, gamma); }

}  // namespace detail

inline IdealPresentation build_ideal(const GorensteinParams& raw) {
  const GorensteinParams p = validate(raw);
  using detail::mono3;
  return IdealPresentation(3, {
                                  mono3(p.a, 0, 0),
                                  detail::ci_binomial(p.b, p.gamma),
                                  mono3(0, 0, p.c),
                                  mono3(p.a - p.b + p.gamma, p.b - p.beta, 0),
                                  mono3(0, p.b - p.beta, p.c - p.gamma),
                              });
}

/// (x^a, y^b - x^{b-gamma} z^gamma, z^c).
inline IdealPresentation build_ci(int a, int b, int c, int gamma) {
  detail::check_ci_bounds(a, b, c, gamma);
  using detail::mono3;
  return IdealPresentation(3, {mono3(a, 0, 0), detail::ci_binomial(b, gamma), mono3(0, 0, c)});
}

/// Which published sufficient conditions for the WLP apply. Every flag is
/// the literal arithmetic condition; `covered` is their disjunction.
struct CoverageReport {
  bool thm37 = false;    // max{1, b+c-a-1} <= beta <= b-1 and gamma >= floor((beta-a+b+c-2)/2)
  bool thm38 = false;    // a <= 2b-c and |a-b|+c-1 <= beta <= b-1
  bool cor313a = false;  // a >= 2b+c-6
  bool cor313b = false;  // a >= b+c-2 and 1 <= beta <= a-b-c+5
  bool small2 = false;   // one of a, b, c equals 2
  bool small3 = false;
  bool small4 = false;
  bool small5 = false;
  bool covered = false;

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    if (thm37) out.emplace_back("thm37");
    if (thm38) out.emplace_back("thm38");
    if (cor313a) out.emplace_back("cor313a");
    if (cor313b) out.emplace_back("cor313b");
    if (small2) out.emplace_back("small2");
    if (small3) out.emplace_back("small3");
    if (small4) out.emplace_back("small4");
    if (small5) out.emplace_back("small5");
    return out;
  }

  friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

inline CoverageReport classify(const GorensteinParams& raw) {
  const GorensteinParams p = validate(raw);
  const int a = p.a, b = p.b, c = p.c, beta = p.beta, gamma = p.gamma;
  auto any_equal = [&](int v) { return a == v || b == v || c == v; };
  CoverageReport r;
  r.thm37 = std::max(1, b + c - a - 1) <= beta && beta <= b - 1 &&
            gamma >= detail::floor_div(beta - a + b + c - 2, 2);
  r.thm38 = a <= 2 * b - c && std::abs(a - b) + c - 1 <= beta && beta <= b - 1;
  r.cor313a = a >= 2 * b + c - 6;
  r.cor313b = a >= b + c - 2 && 1 <= beta && beta <= a - b - c + 5;
  r.small2 = any_equal(2);
  r.small3 = any_equal(3);
  r.small4 = any_equal(4);
  r.small5 = any_equal(5);
  r.covered = r.thm37 || r.thm38 || r.cor313a || r.cor313b || r.small2 || r.small3 || r.small4 || r.small5;
  return r;
}

/// All valid tuples with a_min <= a <= a_max, ordered lexicographically by (a, b, c, beta, gamma).
inline std::vector<GorensteinParams> enumerate_params(int a_min, int a_max) {
  std::vector<GorensteinParams> out;
  for (int a = std::max(2, a_min); a <= a_max; ++a)
    for (int b = 2; b <= 2 * a - 2; ++b)
      for (int c = 2; c <= a; ++c)
        for (int beta = 1; beta <= b - 1; ++beta)
          for (int gamma = std::max(1, b - a + 1); gamma <= std::min(b - 1, c - 1); ++gamma)
            out.push_back({a, b, c, beta, gamma});
  return out;
}

/// Tuples no flag of `classify` covers.
inline std::vector<GorensteinParams> enumerate_uncovered(int a_min, int a_max) {
  std::vector<GorensteinParams> out;
  for (const auto& p : enumerate_params(a_min, a_max))
    if (!classify(p).covered) out.push_back(p);
  return out;
}

/// n x n matrix with unit diagonal and entries -a_ij (a_ij >= 0) above it in
/// the first n-1 rows, and a last row (a_1, ..., a_n), a_i >= 0, a_n > 0.
class SnMatrix {
 public:
  SnMatrix(std::size_t n, std::vector<std::vector<BigInt>> upper, std::vector<BigInt> last_row)
      : n_(n), upper_(std::move(upper)), last_(std::move(last_row)) {
    if (n_ < 2) throw Error(Errc::InvalidArgument, "need n >= 2");
    if (upper_.size() != n_ - 1 || last_.size() != n_) throw Error(Errc::DimensionMismatch, "bad Sn shape");
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (upper_[i].size() != n_) throw Error(Errc::DimensionMismatch, "bad Sn shape");
      for (std::size_t j = i + 1; j < n_; ++j)
        if (upper_[i][j] < 0) throw Error(Errc::InvalidArgument, "negative a_ij");
    }
    for (const auto& x : last_)
      if (x < 0) throw Error(Errc::InvalidArgument, "negative last-row entry");
    if (last_.back() <= 0) throw Error(Errc::InvalidArgument, "a_n must be positive");
  }

  std::size_t n() const noexcept { return n_; }
  /// a_ij for 0-based i < j, i <= n-2.
  const BigInt& upper(std::size_t i, std::size_t j) const { return upper_.at(i).at(j); }
  const std::vector<BigInt>& last_row() const noexcept { return last_; }

  RatMatrix to_matrix() const {
    RatMatrix m(n_, n_);
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      m.set(i, i, Rational(1));
      for (std::size_t j = i + 1; j < n_; ++j) m.set(i, j, Rational(-upper_[i][j]));
    }
    for (std::size_t j = 0; j < n_; ++j) m.set(n_ - 1, j, Rational(last_[j]));
    return m;
  }

 private:
  std::size_t n_;
  std::vector<std::vector<BigInt>> upper_;
  std::vector<BigInt> last_;
};

/// alpha_1 = a_1, alpha_j = a_j + sum_{i<j} alpha_i a_ij. The last row minus
/// sum alpha_i * row_i leaves (0, ..., 0, alpha_n).
inline std::vector<BigInt> sn_alpha(const SnMatrix& m) {
  std::vector<BigInt> alpha(m.n());
  for (std::size_t j = 0; j < m.n(); ++j) {
    alpha[j] = m.last_row()[j];
    for (std::size_t i = 0; i < j; ++i) alpha[j] += alpha[i] * m.upper(i, j);
  }
  return alpha;
}

struct SnDeterminantCheck {
  Rational det;
  Rational alpha_n;
  bool equal = false;
  bool positive = false;
};

inline SnDeterminantCheck sn_det_identity(const SnMatrix& m) {
  SnDeterminantCheck out;
  out.det = determinant(m.to_matrix());
  out.alpha_n = Rational(sn_alpha(m).back());
  out.equal = out.det == out.alpha_n;
  out.positive = sgn(out.det) > 0;
  return out;
}

inline SnMatrix random_sn(std::size_t n, long max_entry, std::uint64_t seed) {
  if (n < 2) throw Error(Errc::InvalidArgument, "need n >= 2");
  if (max_entry < 1) throw Error(Errc::InvalidArgument, "need max_entry >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(0, max_entry);
  std::vector<std::vector<BigInt>> upper(n - 1, std::vector<BigInt>(n));
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) upper[i][j] = entry(rng);
  std::vector<BigInt> last(n);
  for (std::size_t j = 0; j + 1 < n; ++j) last[j] = entry(rng);
  last[n - 1] = std::uniform_int_distribution<long>(1, max_entry)(rng);
  return SnMatrix(n, std::move(upper), std::move(last));
}

}  // namespace lefschetz
