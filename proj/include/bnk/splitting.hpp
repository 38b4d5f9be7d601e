#pragma once

// Splitting-type arithmetic: cohomology of twists, the imbalance u,
// cohomology profiles and staircase diagrams, Brill-Noether numerics
// (rho, rho_k, class coefficients) and the splitting-type decomposition scan.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "bnk/diagram.hpp"

namespace bnk {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class SplittingType {
 public:
  /// Parts are stored sorted ascending; unsorted input is sorted silently.
  explicit SplittingType(std::vector<long long> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("splitting type needs k >= 1 parts");
    std::sort(parts_.begin(), parts_.end());
  }

  int k() const { return static_cast<int>(parts_.size()); }
  const std::vector<long long>& parts() const { return parts_; }
  long long part(int l) const { return parts_[static_cast<std::size_t>(l - 1)]; }  // 1-indexed
  long long sum() const {
    long long s = 0;
    for (long long e : parts_) s += e;
    return s;
  }

  /// Distinct parts d_1 > d_2 > ... > d_s.
  std::vector<long long> distinct_parts() const {
    std::vector<long long> d;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it)
      if (d.empty() || d.back() != *it) d.push_back(*it);
    return d;
  }

  /// Multiplicities m_1, ..., m_s aligned with distinct_parts().
  std::vector<int> multiplicities() const {
    std::vector<long long> d = distinct_parts();
    std::vector<int> m(d.size(), 0);
    for (long long e : parts_)
      for (std::size_t j = 0; j < d.size(); ++j)
        if (d[j] == e) ++m[j];
    return m;
  }

  friend bool operator==(const SplittingType& a, const SplittingType& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator<(const SplittingType& a, const SplittingType& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<long long> parts_;
};

struct Cohomology {
  long long h0;
  long long h1;
  long long chi;
};

/// h^0, h^1 and chi of O(e)(m): h0 = sum max(0, e_l + m + 1).
inline Cohomology cohomology(const SplittingType& e, long long m) {
  long long h0 = 0, h1 = 0;
  for (long long el : e.parts()) {
    h0 += std::max(0LL, el + m + 1);
    h1 += std::max(0LL, -el - m - 1);
  }
  return {h0, h1, h0 - h1};
}

/// u(e) = h^1(End O(e)) = sum over pairs e_i < e_j of (e_j - e_i - 1).
inline long long imbalance_u(const SplittingType& e) {
  long long u = 0;
  for (long long a : e.parts())
    for (long long b : e.parts()) u += std::max(0LL, a - b - 1);
  return u;
}

/// h(n) = max{ h1(m) : h0(m) >= n }, nonincreasing with finite support.
class CohomologyProfile {
 public:
  CohomologyProfile() = default;
  explicit CohomologyProfile(std::vector<long long> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (values_[i] <= 0 || (i > 0 && values_[i] > values_[i - 1]))
        throw std::invalid_argument("profile must be nonincreasing and positive on its support");
    }
  }

  long long h(long long n) const {
    if (n < 1) throw std::invalid_argument("profile index must be >= 1");
    return n <= support() ? values_[static_cast<std::size_t>(n - 1)] : 0;
  }
  long long support() const { return static_cast<long long>(values_.size()); }
  const std::vector<long long>& values() const { return values_; }

 private:
  std::vector<long long> values_;
};

/// The scan range is m in [-e_k, -e_1 - 2]: below it h0 = 0 (vacuous), above it
/// h1 = 0 (candidate 0), so the max is complete.
inline CohomologyProfile h_profile(const SplittingType& e) {
  long long lo = -e.part(e.k());
  long long hi = -e.part(1) - 2;
  std::vector<long long> values;
  for (long long n = 1;; ++n) {
    long long best = 0;
    for (long long m = lo; m <= hi; ++m) {
      Cohomology c = cohomology(e, m);
      if (c.h0 >= n) best = std::max(best, c.h1);
    }
    if (best == 0) break;
    values.push_back(best);
  }
  return CohomologyProfile(std::move(values));
}

/// The k-staircase Gamma(e): column n carries h(n) boxes.
inline Diagram staircase(const SplittingType& e) {
  CohomologyProfile p = h_profile(e);
  Rows rows;
  for (long long r = 1;; ++r) {
    long long len = 0;
    for (long long n = 1; n <= p.support(); ++n)
      if (p.h(n) >= r) ++len;
    if (len == 0) break;
    rows.push_back(len);
  }
  return Diagram(rows);
}

inline long long rho(long long g, long long r, long long d) {
  return g - (r + 1) * (g + r - d);
}

/// rho_k = max over l in {0,...,max(r',0)} of rho(g, r-l, d) - l*k,
/// with r' = min(r, g - d + r - 1). For r' < 0 only l = 0 is taken.
inline long long rho_k(long long g, long long r, long long d, int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  long long rp = std::min(r, g - d + r - 1);
  long long best = rho(g, r, d);
  for (long long l = 1; l <= std::max(rp, 0LL); ++l)
    best = std::max(best, rho(g, r - l, d) - l * k);
  return best;
}

struct ClassCoefficient {
  BigRational value;   // prod alpha! / (g - d + r + alpha)!
  long long exponent;  // (r + 1)(g - d + r)
};

inline BigInt factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  BigInt f = 1;
  for (long long i = 2; i <= n; ++i) f *= i;
  return f;
}

inline ClassCoefficient bn_class_coefficient(long long g, long long r, long long d) {
  if (g - d + r < 0)
    throw std::invalid_argument("class exponent (r+1)(g-d+r) would be negative");
  BigRational v = 1;
  for (long long a = 0; a <= r; ++a)
    v *= BigRational(factorial(a), factorial(g - d + r + a));
  return {v, (r + 1) * (g - d + r)};
}

/// All sorted k-tuples with sum d - g + 1 - k, h0 >= r + 1 and u <= g.
/// Finite because u(e) >= e_k - e_1 - 1 caps the spread at g + 1.
inline std::vector<SplittingType> enumerate_splitting_types(long long g, long long r,
                                                            long long d, int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  long long target = d - g + 1 - k;
  long long base = target >= 0 ? target / k : -((-target + k - 1) / k);  // floor division
  std::vector<SplittingType> out;
  std::vector<long long> cur(static_cast<std::size_t>(k));

  auto rec = [&](auto&& self, int slot, long long lo, long long remaining) -> void {
    if (slot == k) {
      if (remaining != 0) return;
      SplittingType e(cur);
      if (cohomology(e, 0).h0 >= r + 1 && imbalance_u(e) <= g) out.push_back(e);
      return;
    }
    long long spread_cap = cur[0] + g + 1;
    for (long long v = lo; v * (k - slot) <= remaining; ++v) {
      if (slot > 0 && v > spread_cap) break;
      cur[static_cast<std::size_t>(slot)] = v;
      self(self, slot + 1, v, remaining - v);
    }
  };
  for (long long v = base - g - 1; v <= base; ++v) {
    cur[0] = v;
    rec(rec, 1, v, target - v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [](const SplittingType& a, const SplittingType& b) { return a == b; }),
            out.end());
  return out;
}

}  // namespace bnk
