#pragma once

// Monomials, homogeneous polynomials over Q and degree slices of homogeneous
// ideals. Monomials of a fixed degree are ordered graded-lex with x > y > z,
// largest first; column 0 of every slice is the pure power of the first variable.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/exactla.hpp"

namespace lefschetz {

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_)
      if (e < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  }

  static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1) {
    std::vector<int> e(nvars, 0);
    e.at(index) = power;
    return Monomial(std::move(e));
  }

  std::size_t nvars() const noexcept { return exps_.size(); }
  const std::vector<int>& exponents() const noexcept { return exps_; }
  int operator[](std::size_t i) const { return exps_[i]; }

  int degree() const noexcept {
    int d = 0;
    for (int e : exps_) d += e;
    return d;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw Error(Errc::DimensionMismatch, "monomials from different rings");
    std::vector<int> e(a.exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exps_[i];
    return Monomial(std::move(e));
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// Strict "a comes before b": higher degree first, then lexicographically larger.
struct GradedLexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
  }
};

inline std::vector<std::string> default_variable_names(std::size_t nvars) {
  switch (nvars) {
    case 1: return {"x"};
    case 2: return {"y", "z"};
    case 3: return {"x", "y", "z"};
    default: {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
      return names;
    }
  }
}

namespace detail {

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline std::size_t binomial_size(long n, long k) {
  if (k < 0 || n < k) return 0;
  return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)).get_ui();
}

inline void basis_rec(std::vector<int>& cur, std::size_t pos, int remaining, std::vector<Monomial>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    basis_rec(cur, pos + 1, remaining - e, out);
  }
}

}  // namespace detail

/// Number of monomials of degree d in n variables: C(d+n-1, n-1).
inline std::size_t monomial_count(std::size_t nvars, int d) {
  if (d < 0) return 0;
  if (nvars == 0) return d == 0 ? 1 : 0;
  return detail::binomial_size(d + static_cast<long>(nvars) - 1, static_cast<long>(nvars) - 1);
}

/// All monomials of degree d, graded-lex descending.
inline std::vector<Monomial> monomial_basis(std::size_t nvars, int d) {
  if (d < 0) throw Error(Errc::InvalidArgument, "negative degree");
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (d == 0) out.push_back(Monomial::one(0));
    return out;
  }
  out.reserve(monomial_count(nvars, d));
  std::vector<int> cur(nvars, 0);
  detail::basis_rec(cur, 0, d, out);
  return out;
}

/// Position of `m` in monomial_basis(m.nvars(), m.degree()).
inline std::size_t monomial_index(const Monomial& m) {
  const std::size_t n = m.nvars();
  long r = m.degree();
  std::size_t idx = 0;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    // Monomials whose exponent at t exceeds m's, with the same prefix.
    long k = static_cast<long>(n - t - 1);
    idx += detail::binomial_size(r - m[t] - 1 + k, k);
    r -= m[t];
  }
  return idx;
}

class HomogeneousPoly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexDesc>;

  /// The zero polynomial of the given degree.
  HomogeneousPoly(std::size_t nvars, int degree) : nvars_(nvars), degree_(degree) {
    if (degree < 0) throw Error(Errc::InvalidArgument, "negative degree");
  }

  static HomogeneousPoly from_monomial(const Monomial& m, const Rational& coeff = Rational(1)) {
    HomogeneousPoly p(m.nvars(), m.degree());
    p.add_term(m, coeff);
    return p;
  }

  static HomogeneousPoly variable(std::size_t nvars, std::size_t index) {
    return from_monomial(Monomial::variable(nvars, index));
  }

  std::size_t nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Monomial& m, const Rational& coeff) {
    if (m.nvars() != nvars_) throw Error(Errc::DimensionMismatch, "monomial from another ring");
    if (m.degree() != degree_) throw Error(Errc::InvalidArgument, "term degree differs from polynomial degree");
    if (sgn(coeff) == 0) return;
    Rational c = coeff;
    c.canonicalize();
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  HomogeneousPoly& operator+=(const HomogeneousPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }

  HomogeneousPoly& operator-=(const HomogeneousPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }

  friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
  friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) { return a -= b; }

  friend HomogeneousPoly operator*(const Rational& s, const HomogeneousPoly& p) {
    HomogeneousPoly out(p.nvars_, p.degree_);
    for (const auto& [m, c] : p.terms_) out.add_term(m, s * c);
    return out;
  }

  friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (a.nvars_ != b.nvars_) throw Error(Errc::DimensionMismatch, "polynomials from different rings");
    HomogeneousPoly out(a.nvars_, a.degree_ + b.degree_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }

  /// p^e. Binomials expand through exact binomial coefficients.
  HomogeneousPoly pow(unsigned e) const {
    if (terms_.size() == 2) {
      auto it = terms_.begin();
      const auto& [u, p] = *it++;
      const auto& [v, q] = *it;
      HomogeneousPoly out(nvars_, degree_ * static_cast<int>(e));
      for (unsigned j = 0; j <= e; ++j) {
        Rational coeff(detail::binomial(e, j));
        Rational pp, qq;
        mpq_class base_p(p), base_q(q);
        mpz_pow_ui(pp.get_num_mpz_t(), base_p.get_num_mpz_t(), e - j);
        mpz_pow_ui(pp.get_den_mpz_t(), base_p.get_den_mpz_t(), e - j);
        mpz_pow_ui(qq.get_num_mpz_t(), base_q.get_num_mpz_t(), j);
        mpz_pow_ui(qq.get_den_mpz_t(), base_q.get_den_mpz_t(), j);
        std::vector<int> ex(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i)
          ex[i] = u[i] * static_cast<int>(e - j) + v[i] * static_cast<int>(j);
        out.add_term(Monomial(std::move(ex)), coeff * pp * qq);
      }
      return out;
    }
    return pow_by_multiplication(e);
  }

  HomogeneousPoly pow_by_multiplication(unsigned e) const {
    HomogeneousPoly out = from_monomial(Monomial::one(nvars_));
    for (unsigned i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const { return to_string(default_variable_names(nvars_)); }

  friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const HomogeneousPoly& o) const {
    if (o.nvars_ != nvars_) throw Error(Errc::DimensionMismatch, "polynomials from different rings");
    if (o.degree_ != degree_ && !o.is_zero() && !is_zero())
      throw Error(Errc::InvalidArgument, "adding polynomials of different degrees");
  }

  std::size_t nvars_;
  int degree_;
  Terms terms_;
};

inline std::string HomogeneousPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (sgn(c) < 0) out += "-";
    else if (!first) out += "+";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

inline HomogeneousPoly multiply(const HomogeneousPoly& p, const Monomial& m) {
  if (p.nvars() != m.nvars()) throw Error(Errc::DimensionMismatch, "monomial from another ring");
  HomogeneousPoly out(p.nvars(), p.degree() + m.degree());
  for (const auto& [t, c] : p.terms()) out.add_term(t * m, c);
  return out;
}

/// Coordinates of p on monomial_basis(nvars, deg p).
inline SparseRow to_sparse_row(const HomogeneousPoly& p) {
  SparseRow row;
  row.reserve(p.terms().size());
  for (const auto& [m, c] : p.terms()) row.emplace_back(monomial_index(m), c);
  std::sort(row.begin(), row.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.first < b.first; });
  return row;
}

class IdealPresentation {
 public:
  IdealPresentation(std::size_t nvars, std::vector<HomogeneousPoly> generators)
      : nvars_(nvars), gens_(std::move(generators)) {
    for (const auto& g : gens_) {
      if (g.nvars() != nvars_) throw Error(Errc::InvalidIdeal, "generator ring differs from ideal ring");
      if (g.is_zero()) throw Error(Errc::InvalidIdeal, "zero generator");
    }
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<HomogeneousPoly>& generators() const noexcept { return gens_; }

  IdealPresentation with(const HomogeneousPoly& extra) const {
    auto gens = gens_;
    gens.push_back(extra);
    return IdealPresentation(nvars_, std::move(gens));
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) out += ", ";
      out += gens_[i].to_string();
    }
    return out + ")";
  }

 private:
  std::size_t nvars_;
  std::vector<HomogeneousPoly> gens_;
};

/// The degree-d piece of an ideal: echelonized span over monomial_basis(nvars, d).
struct DegreeSlice {
  int degree = 0;
  std::size_t nvars = 0;
  std::vector<Monomial> basis;
  EchelonForm echelon;
  std::vector<Monomial> standard_monomials;
  std::vector<std::size_t> standard_columns;
  // Column -> echelon row holding its pivot, or npos.
  std::vector<std::size_t> pivot_row;
  // Column -> position among standard monomials, or npos.
  std::vector<std::size_t> standard_position;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  static DegreeSlice make(std::size_t nvars, int degree, std::vector<Monomial> basis, EchelonForm echelon) {
    DegreeSlice s;
    s.degree = degree;
    s.nvars = nvars;
    s.basis = std::move(basis);
    s.echelon = std::move(echelon);
    s.pivot_row.assign(s.basis.size(), npos);
    s.standard_position.assign(s.basis.size(), npos);
    for (std::size_t i = 0; i < s.echelon.rank; ++i) s.pivot_row[s.echelon.pivot_columns[i]] = i;
    for (std::size_t c = 0; c < s.basis.size(); ++c) {
      if (s.pivot_row[c] != npos) continue;
      s.standard_position[c] = s.standard_columns.size();
      s.standard_columns.push_back(c);
      s.standard_monomials.push_back(s.basis[c]);
    }
    return s;
  }

  std::size_t ring_dim() const noexcept { return basis.size(); }
  std::size_t ideal_dim() const noexcept { return echelon.rank; }
  std::size_t quotient_dim() const noexcept { return standard_columns.size(); }

  /// Reduces a full coordinate vector modulo the slice; returns its
  /// coordinates on the standard monomials.
  DenseVector normal_form(DenseVector v) const {
    if (v.size() != basis.size()) throw Error(Errc::DimensionMismatch, "vector does not match slice");
    for (std::size_t c = 0; c < v.size(); ++c) {
      if (sgn(v[c]) == 0 || pivot_row[c] == npos) continue;
      Rational f = v[c];
      for (const auto& [col, x] : echelon.matrix.row(pivot_row[c])) v[col] -= f * x;
    }
    DenseVector out(standard_columns.size());
    for (std::size_t i = 0; i < standard_columns.size(); ++i) out[i] = std::move(v[standard_columns[i]]);
    return out;
  }

  DenseVector normal_form(const HomogeneousPoly& p) const {
    if (p.nvars() != nvars || (p.degree() != degree && !p.is_zero()))
      throw Error(Errc::DimensionMismatch, "polynomial does not live in this slice");
    DenseVector v(basis.size());
    for (const auto& [m, c] : p.terms()) v[monomial_index(m)] = c;
    return normal_form(std::move(v));
  }

  bool contains(const HomogeneousPoly& p) const {
    for (const auto& x : normal_form(p))
      if (sgn(x) != 0) return false;
    return true;
  }
};

/// Span of all monomial multiples m*g landing in degree d, echelonized.
inline DegreeSlice ideal_degree_slice(const IdealPresentation& ideal, int d) {
  if (d < 0) throw Error(Errc::InvalidArgument, "negative degree");
  const std::size_t n = ideal.nvars();
  auto basis = monomial_basis(n, d);
  RatMatrix rows(0, basis.size());
  for (const auto& g : ideal.generators()) {
    if (g.degree() > d) continue;
    for (const auto& m : monomial_basis(n, d - g.degree())) rows.append_row(to_sparse_row(multiply(g, m)));
  }
  return DegreeSlice::make(n, d, std::move(basis), rref(rows));
}

/// Restricts the ideal to the hyperplane L = 0 by solving L for one variable
/// and substituting. The result lives in the remaining nvars-1 variables,
/// in their original order; generators that vanish are dropped.
inline IdealPresentation eliminate_linear_form(const IdealPresentation& ideal, const HomogeneousPoly& form,
                                               std::size_t eliminated) {
  const std::size_t n = ideal.nvars();
  if (form.nvars() != n || form.degree() != 1) throw Error(Errc::InvalidArgument, "expected a linear form");
  if (eliminated >= n) throw Error(Errc::InvalidArgument, "variable index out of range");
  Rational lead = form.coefficient(Monomial::variable(n, eliminated));
  if (sgn(lead) == 0) throw Error(Errc::ZeroCoefficient, "linear form does not involve the eliminated variable");

  const std::size_t m = n - 1;
  auto drop = [&](const Monomial& mono) {
    std::vector<int> e;
    for (std::size_t i = 0; i < n; ++i)
      if (i != eliminated) e.push_back(mono[i]);
    return Monomial(std::move(e));
  };

  HomogeneousPoly subst(m, 1);
  for (const auto& [mono, c] : form.terms())
    if (mono[eliminated] == 0) subst.add_term(drop(mono), -c / lead);

  std::vector<HomogeneousPoly> powers{HomogeneousPoly::from_monomial(Monomial::one(m))};
  std::vector<HomogeneousPoly> out;
  for (const auto& g : ideal.generators()) {
    HomogeneousPoly image(m, g.degree());
    for (const auto& [mono, c] : g.terms()) {
      auto k = static_cast<std::size_t>(mono[eliminated]);
      while (powers.size() <= k) powers.push_back(subst.pow(static_cast<unsigned>(powers.size())));
      image += multiply(c * powers[k], drop(mono));
    }
    if (!image.is_zero()) out.push_back(std::move(image));
  }
  return IdealPresentation(m, std::move(out));
}

}  // namespace lefschetz
