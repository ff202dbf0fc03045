#pragma once

// Numerical semigroups: membership, the Apery set with respect to the least
// generator m, the order function and the M-pure symmetry test.
//
// Every Apery element is below m * max(generators): it is a sum of at most
// m - 1 generators other than m, otherwise two partial sums would agree mod m.
// The tables are filled up to that bound.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/error.hpp"

namespace lefschetz {

class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<long> generators) : gens_(std::move(generators)) {
    for (long g : gens_)
      if (g <= 0) throw Error(Errc::InvalidSemigroup, "generators must be positive");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.size() < 2) throw Error(Errc::InvalidSemigroup, "need at least two distinct generators");
    long g = 0;
    for (long x : gens_) g = std::gcd(g, x);
    if (g != 1) throw Error(Errc::InvalidSemigroup, "generators have gcd " + std::to_string(g));
    build_tables(search_bound());
  }

  const std::vector<long>& generators() const noexcept { return gens_; }
  long multiplicity() const noexcept { return gens_.front(); }
  long search_bound() const noexcept { return gens_.front() * gens_.back(); }

  bool contains(long x) const {
    if (x < 0) return false;
    if (x <= table_limit_) return ord_[static_cast<std::size_t>(x)] >= 0;
    return x >= apery_by_residue_[static_cast<std::size_t>(x % multiplicity())];
  }

  /// Least element of the semigroup congruent to r mod m.
  long apery_element(long r) const { return apery_by_residue_.at(static_cast<std::size_t>(r)); }

  /// Maximal number of generators summing to x; -1 if x is not an element.
  long order_or_negative(long x) const {
    if (x < 0) return -1;
    if (x > table_limit_) extend_tables(x);
    return ord_[static_cast<std::size_t>(x)];
  }

 private:
  void build_tables(long limit) const {
    ord_.assign(static_cast<std::size_t>(limit) + 1, -1);
    ord_[0] = 0;
    for (long x = 1; x <= limit; ++x) {
      long best = -1;
      for (long g : gens_) {
        if (g > x) break;
        long prev = ord_[static_cast<std::size_t>(x - g)];
        if (prev >= 0) best = std::max(best, prev + 1);
      }
      ord_[static_cast<std::size_t>(x)] = best;
    }
    table_limit_ = limit;
    if (apery_by_residue_.empty()) {
      const long m = multiplicity();
      apery_by_residue_.assign(static_cast<std::size_t>(m), -1);
      for (long x = 0; x <= limit; ++x) {
        auto& slot = apery_by_residue_[static_cast<std::size_t>(x % m)];
        if (slot < 0 && ord_[static_cast<std::size_t>(x)] >= 0) slot = x;
      }
      for (long w : apery_by_residue_)
        if (w < 0) throw Error(Errc::InvalidSemigroup, "Apery search bound violated");
    }
  }

  void extend_tables(long limit) const { build_tables(limit); }

  std::vector<long> gens_;
  mutable std::vector<long> ord_;
  mutable long table_limit_ = -1;
  mutable std::vector<long> apery_by_residue_;
};

inline bool membership(const NumericalSemigroup& p, long x) { return p.contains(x); }

inline long order(const NumericalSemigroup& p, long x) {
  long o = p.order_or_negative(x);
  if (o < 0) throw Error(Errc::NotInSemigroup, std::to_string(x) + " is not in the semigroup");
  return o;
}

struct AperySet {
  long modulus = 0;
  std::vector<long> elements;  // ascending, elements[0] == 0
  std::vector<long> orders;
};

inline AperySet apery(const NumericalSemigroup& p) {
  AperySet out;
  out.modulus = p.multiplicity();
  for (long r = 0; r < out.modulus; ++r) out.elements.push_back(p.apery_element(r));
  std::sort(out.elements.begin(), out.elements.end());
  for (long w : out.elements) out.orders.push_back(order(p, w));
  return out;
}

struct MPureFailure {
  std::size_t index = 0;  // 1-based i, paired with m - i + 1
  bool sum = false;       // w_i + w_{m-i+1} != w_m
  bool order = false;     // ord(w_i) + ord(w_{m-i+1}) != ord(w_m)
};

struct MPureCheck {
  bool symmetric = false;
  std::vector<MPureFailure> failures;
};

inline MPureCheck is_m_pure_symmetric(const NumericalSemigroup& p) {
  const AperySet ap = apery(p);
  const std::size_t m = ap.elements.size();
  MPureCheck out;
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = m - 1 - i;
    MPureFailure f{i + 1, ap.elements[i] + ap.elements[j] != ap.elements[m - 1],
                   ap.orders[i] + ap.orders[j] != ap.orders[m - 1]};
    if (f.sum || f.order) out.failures.push_back(f);
  }
  out.symmetric = out.failures.empty();
  return out;
}

/// hist[i] = number of Apery elements of order i.
inline std::vector<long> order_histogram(const NumericalSemigroup& p) {
  const AperySet ap = apery(p);
  std::vector<long> hist(static_cast<std::size_t>(*std::max_element(ap.orders.begin(), ap.orders.end())) + 1, 0);
  for (long o : ap.orders) ++hist[static_cast<std::size_t>(o)];
  return hist;
}

/// "5,6,7,8" -> {5, 6, 7, 8}.
inline std::vector<long> parse_generators(std::string_view text) {
  std::vector<long> out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  for (;;) {
    skip_ws();
    const std::size_t start = pos;
    long v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (v > 100000000) throw ParseError(start, "generator too large");
      v = v * 10 + (text[pos++] - '0');
    }
    if (pos == start) throw ParseError(pos, "expected a positive integer");
    out.push_back(v);
    skip_ws();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError(pos, "expected ','");
    ++pos;
  }
  return out;
}

}  // namespace lefschetz
