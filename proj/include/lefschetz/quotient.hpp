#pragma once

// Graded Artinian quotients A = R/I: Hilbert functions, multiplication maps by
// powers of linear forms, weak/strong Lefschetz checks and colon-ideal slices.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lefschetz/error.hpp"
#include "lefschetz/exactla.hpp"
#include "lefschetz/polyring.hpp"

namespace lefschetz {

class LinearForm {
 public:
  explicit LinearForm(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    bool nonzero = false;
    for (const auto& c : coeffs_) nonzero = nonzero || sgn(c) != 0;
    if (!nonzero) throw Error(Errc::InvalidArgument, "linear form is identically zero");
  }

  /// x - y - z (first variable minus all others).
  static LinearForm first_minus_rest(std::size_t nvars) {
    std::vector<Rational> c(nvars, Rational(-1));
    c.at(0) = 1;
    return LinearForm(std::move(c));
  }

  std::size_t nvars() const noexcept { return coeffs_.size(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  HomogeneousPoly to_poly() const {
    HomogeneousPoly p(coeffs_.size(), 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p.add_term(Monomial::variable(coeffs_.size(), i), coeffs_[i]);
    return p;
  }

  std::string to_string() const { return to_poly().to_string(); }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  std::vector<Rational> coeffs_;
};

struct HilbertData {
  std::vector<std::size_t> h;  // h[0..D]
  int socle_degree = -1;
};

enum class Verdict { Holds, FailsProbably, Inconclusive };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "HOLDS";
    case Verdict::FailsProbably: return "FAILS_PROBABLY";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

/// Which linear forms a Lefschetz check tries: x-y-z first (optional), then
/// `trials` random forms with integer coefficients in [-bound, bound] \ {0}.
struct Strategy {
  unsigned trials = 8;
  long bound = 10000;
  std::uint64_t seed = 0;
  bool try_default_first = true;
};

/// Rank of x l^power : [A]_degree -> [A]_{degree+power}.
struct DegreeRank {
  int degree = 0;
  int power = 1;
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::size_t rank = 0;
  bool maximal = false;
};

struct LefschetzReport {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<LinearForm> certificate;
  // 0 for the default form, i for the i-th random trial.
  std::optional<std::size_t> certificate_index;
  std::vector<DegreeRank> per_degree;
  Strategy strategy;
  std::size_t forms_tried = 0;
};

using WlpReport = LefschetzReport;
using SlpReport = LefschetzReport;

/// R/I with per-degree slices computed incrementally and cached:
/// [I]_d = R_1 [I]_{d-1} + span(generators of degree d).
/// Not thread-safe; confine each instance to one worker.
class GradedQuotient {
 public:
  GradedQuotient(IdealPresentation ideal, int degree_cap) : ideal_(std::move(ideal)), cap_(degree_cap) {
    if (degree_cap < 1) throw Error(Errc::InvalidArgument, "degree cap must be at least 1");
  }

  const IdealPresentation& ideal() const noexcept { return ideal_; }
  std::size_t nvars() const noexcept { return ideal_.nvars(); }
  int degree_cap() const noexcept { return cap_; }

  const DegreeSlice& slice(int d) {
    if (d < 0) throw Error(Errc::InvalidArgument, "negative degree");
    if (d > cap_)
      throw Error(Errc::CapExceeded, "degree " + std::to_string(d) + " exceeds cap " + std::to_string(cap_));
    while (static_cast<int>(slices_.size()) <= d) extend();
    return slices_[static_cast<std::size_t>(d)];
  }

  /// h(d); zero past the first vanishing degree without touching the cap.
  std::size_t hilbert(int d) {
    if (d < 0) throw Error(Errc::InvalidArgument, "negative degree");
    for (int t = 0;; ++t) {
      if (vanishes_from_ && t >= *vanishes_from_) return 0;
      std::size_t h = slice(t).quotient_dim();
      if (h == 0) {
        vanishes_from_ = t;
        return 0;
      }
      if (t == d) return h;
    }
  }

  std::size_t slices_built() const noexcept { return slices_.size(); }

 private:
  void extend() {
    const int d = static_cast<int>(slices_.size());
    const std::size_t n = ideal_.nvars();
    auto basis = monomial_basis(n, d);
    EchelonBuilder builder(basis.size());
    if (d > 0) {
      const DegreeSlice& prev = slices_.back();
      if (prev.quotient_dim() == 0) {
        // Whole ring in degree d-1, hence in degree d.
        for (std::size_t c = 0; c < basis.size(); ++c) builder.insert({SparseEntry(c, Rational(1))});
      } else {
        std::vector<std::vector<std::size_t>> shift(n, std::vector<std::size_t>(prev.basis.size()));
        for (std::size_t v = 0; v < n; ++v)
          for (std::size_t c = 0; c < prev.basis.size(); ++c)
            shift[v][c] = monomial_index(prev.basis[c] * Monomial::variable(n, v));
        for (std::size_t r = 0; r < prev.echelon.rank; ++r) {
          const SparseRow& row = prev.echelon.matrix.row(r);
          for (std::size_t v = 0; v < n; ++v) {
            SparseRow moved;
            moved.reserve(row.size());
            for (const auto& [c, x] : row) moved.emplace_back(shift[v][c], x);
            // Multiplying by a variable preserves the monomial order.
            builder.insert(std::move(moved));
          }
        }
      }
    }
    for (const auto& g : ideal_.generators())
      if (g.degree() == d) builder.insert(to_sparse_row(g));
    slices_.push_back(DegreeSlice::make(n, d, std::move(basis), std::move(builder).finish()));
  }

  IdealPresentation ideal_;
  int cap_;
  std::vector<DegreeSlice> slices_;
  std::optional<int> vanishes_from_;
};

inline std::size_t hilbert(GradedQuotient& q, int d) { return q.hilbert(d); }

/// Hilbert function up to the socle degree D = max{d : h(d) > 0}.
inline HilbertData hilbert_data(GradedQuotient& q) {
  HilbertData hd;
  for (int d = 0; d <= q.degree_cap(); ++d) {
    std::size_t h = q.slice(d).quotient_dim();
    if (h == 0) {
      hd.socle_degree = d - 1;
      return hd;
    }
    hd.h.push_back(h);
  }
  throw Error(Errc::NotArtinianWithinCap,
              "h(" + std::to_string(q.degree_cap()) + ") = " + std::to_string(hd.h.back()) + " > 0");
}

inline bool is_gorenstein_symmetric(const HilbertData& hd) {
  if (hd.h.empty() || hd.h.back() != 1) return false;
  for (std::size_t i = 0, j = hd.h.size() - 1; i < j; ++i, --j)
    if (hd.h[i] != hd.h[j]) return false;
  return true;
}

/// Matrix of x l^s : [A]_d -> [A]_{d+s} on standard-monomial bases
/// (rows h(d+s), columns h(d)).
inline RatMatrix multiplication_matrix(GradedQuotient& q, const LinearForm& form, int d, int s) {
  if (s < 1) throw Error(Errc::InvalidArgument, "power must be at least 1");
  if (form.nvars() != q.nvars()) throw Error(Errc::DimensionMismatch, "form from another ring");
  if (d + s > q.degree_cap())
    throw Error(Errc::CapExceeded, "degree " + std::to_string(d + s) + " exceeds cap " + std::to_string(q.degree_cap()));
  q.slice(d + s);  // build the higher slice first; references stay valid afterwards
  const DegreeSlice& src = q.slice(d);
  const DegreeSlice& dst = q.slice(d + s);
  HomogeneousPoly power = form.to_poly().pow_by_multiplication(static_cast<unsigned>(s));
  RatMatrix m(dst.quotient_dim(), src.quotient_dim());
  for (std::size_t j = 0; j < src.standard_monomials.size(); ++j) {
    DenseVector v(dst.ring_dim());
    for (const auto& [mono, c] : power.terms()) v[monomial_index(mono * src.standard_monomials[j])] += c;
    DenseVector nf = dst.normal_form(std::move(v));
    for (std::size_t i = 0; i < nf.size(); ++i)
      if (sgn(nf[i]) != 0) m.set(i, j, nf[i]);
  }
  return m;
}

namespace detail {

inline std::vector<LinearForm> candidate_forms(std::size_t nvars, const Strategy& strategy) {
  std::vector<LinearForm> forms;
  if (strategy.try_default_first) forms.push_back(LinearForm::first_minus_rest(nvars));
  std::mt19937_64 rng(strategy.seed);
  const long bound = strategy.bound < 1 ? 1 : strategy.bound;
  std::uniform_int_distribution<long> dist(1, 2 * bound);
  for (unsigned t = 0; t < strategy.trials; ++t) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i < nvars; ++i) {
      long v = dist(rng);
      c.emplace_back(v <= bound ? v - bound - 1 : v - bound);
    }
    forms.emplace_back(std::move(c));
  }
  return forms;
}

inline DegreeRank rank_entry(const RatMatrix& m, int d, int s) {
  DegreeRank e;
  e.degree = d;
  e.power = s;
  e.source_dim = m.cols();
  e.target_dim = m.rows();
  e.rank = rank(m);
  e.maximal = e.rank == std::min(e.source_dim, e.target_dim);
  return e;
}

template <typename Check>
LefschetzReport run_strategy(GradedQuotient& q, const Strategy& strategy, Check check) {
  LefschetzReport report;
  report.strategy = strategy;
  auto forms = candidate_forms(q.nvars(), strategy);
  std::size_t index_offset = strategy.try_default_first ? 0 : 1;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    ++report.forms_tried;
    std::vector<DegreeRank> ranks;
    bool ok = check(forms[i], ranks);
    report.per_degree = std::move(ranks);
    if (ok) {
      report.verdict = Verdict::Holds;
      report.certificate = forms[i];
      report.certificate_index = i + index_offset;
      return report;
    }
  }
  report.verdict = strategy.trials >= 1 ? Verdict::FailsProbably : Verdict::Inconclusive;
  return report;
}

}  // namespace detail

/// Rank of every x l : [A]_d -> [A]_{d+1}, d = 0..D-1. Stops at the first
/// non-maximal degree unless `exhaustive`.
inline std::vector<DegreeRank> wlp_ranks(GradedQuotient& q, const LinearForm& form, bool exhaustive = true) {
  const HilbertData hd = hilbert_data(q);
  std::vector<DegreeRank> out;
  for (int d = 0; d < hd.socle_degree; ++d) {
    out.push_back(detail::rank_entry(multiplication_matrix(q, form, d, 1), d, 1));
    if (!out.back().maximal && !exhaustive) break;
  }
  return out;
}

inline WlpReport check_wlp(GradedQuotient& q, const Strategy& strategy = {}) {
  hilbert_data(q);
  return detail::run_strategy(q, strategy, [&](const LinearForm& form, std::vector<DegreeRank>& ranks) {
    ranks = wlp_ranks(q, form, false);
    for (const auto& r : ranks)
      if (!r.maximal) return false;
    return true;
  });
}

/// Ranks of x l^s : [A]_d -> [A]_{d+s} for 1 <= s <= D, 0 <= d <= D-s, built
/// by chaining the degree-one maps.
inline std::vector<DegreeRank> slp_ranks(GradedQuotient& q, const LinearForm& form, bool exhaustive = true) {
  const HilbertData hd = hilbert_data(q);
  const int D = hd.socle_degree;
  std::vector<RatMatrix> step;
  for (int d = 0; d < D; ++d) step.push_back(multiplication_matrix(q, form, d, 1));
  std::vector<DegreeRank> out;
  for (int d = 0; d < D; ++d) {
    RatMatrix chain = step[static_cast<std::size_t>(d)];
    for (int s = 1; d + s <= D; ++s) {
      if (s > 1) chain = step[static_cast<std::size_t>(d + s - 1)] * chain;
      out.push_back(detail::rank_entry(chain, d, s));
      if (!out.back().maximal && !exhaustive) return out;
    }
  }
  return out;
}

inline SlpReport check_slp(GradedQuotient& q, const Strategy& strategy = {}) {
  hilbert_data(q);
  return detail::run_strategy(q, strategy, [&](const LinearForm& form, std::vector<DegreeRank>& ranks) {
    ranks = slp_ranks(q, form, false);
    for (const auto& r : ranks)
      if (!r.maximal) return false;
    return true;
  });
}

/// For Gorenstein-shaped A: l is a weak Lefschetz element iff [A/lA]_{k+1} = 0,
/// k = floor(D/2). Computed from the slice of (I, l), not from multiplication maps.
inline bool check_wlp_gorenstein_middle(GradedQuotient& q, const LinearForm& form) {
  const HilbertData hd = hilbert_data(q);
  if (!is_gorenstein_symmetric(hd))
    throw Error(Errc::NotGorensteinShape, "h-vector is not symmetric with h(D) = 1");
  const int k = hd.socle_degree / 2;
  return ideal_degree_slice(q.ideal().with(form.to_poly()), k + 1).quotient_dim() == 0;
}

/// dim [I : f]_d as the kernel dimension of g -> f g from [R]_d to [R/I]_{d + deg f}.
inline std::size_t colon_slice_dim(GradedQuotient& q, const HomogeneousPoly& f, int d) {
  if (f.nvars() != q.nvars()) throw Error(Errc::DimensionMismatch, "polynomial from another ring");
  const int target = d + f.degree();
  if (target > q.degree_cap())
    throw Error(Errc::CapExceeded, "degree " + std::to_string(target) + " exceeds cap " + std::to_string(q.degree_cap()));
  const DegreeSlice& dst = q.slice(target);
  const auto source = monomial_basis(q.nvars(), d);
  RatMatrix m(dst.quotient_dim(), source.size());
  for (std::size_t j = 0; j < source.size(); ++j) {
    DenseVector nf = dst.normal_form(multiply(f, source[j]));
    for (std::size_t i = 0; i < nf.size(); ++i)
      if (sgn(nf[i]) != 0) m.set(i, j, nf[i]);
  }
  return source.size() - rank(m);
}

inline std::size_t colon_slice_dim(const IdealPresentation& ideal, const HomogeneousPoly& f, int d) {
  GradedQuotient q(ideal, std::max(1, d + f.degree()));
  return colon_slice_dim(q, f, d);
}

/// Entry i tells whether y^{d-i} z^i lies in [J]_d (two variables), tested by
/// whether appending the monomial grows the rank of the slice.
inline std::vector<bool> residue_membership(const IdealPresentation& ideal, int d) {
  if (ideal.nvars() != 2) throw Error(Errc::InvalidArgument, "residue membership expects two variables");
  const DegreeSlice s = ideal_degree_slice(ideal, d);
  EchelonBuilder builder(s.ring_dim());
  for (std::size_t r = 0; r < s.echelon.rank; ++r) builder.insert(s.echelon.matrix.row(r));
  std::vector<bool> out;
  for (int i = 0; i <= d; ++i) {
    Monomial m({d - i, i});
    out.push_back(builder.contains({SparseEntry(monomial_index(m), Rational(1))}));
  }
  return out;
}

}  // namespace lefschetz
