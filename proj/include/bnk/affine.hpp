#pragma once

// Affine symmetric group elements as window vectors: periodic evaluation,
// left multiplication by generators, length, descents, and the splitting-type
// element w(e).

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "bnk/diagram.hpp"
#include "bnk/splitting.hpp"

namespace bnk {

/// Word letter 0 plays the role of the identity generator '*'.
inline constexpr int kIdentityLetter = 0;

class AffineWindow {
 public:
  AffineWindow(int k, std::vector<long long> values) : k_(k), values_(std::move(values)) {
    if (k_ < 2) throw std::invalid_argument("affine window needs k >= 2");
    if (static_cast<int>(values_.size()) != k_)
      throw std::invalid_argument("window must hold exactly k values");
    std::vector<bool> seen(static_cast<std::size_t>(k_), false);
    long long sum = 0;
    for (long long v : values_) {
      int r = residue(v, k_) - 1;
      if (seen[static_cast<std::size_t>(r)])
        throw std::invalid_argument("window values must be distinct mod k");
      seen[static_cast<std::size_t>(r)] = true;
      sum += v;
    }
    if (sum != static_cast<long long>(k_) * (k_ + 1) / 2)
      throw std::invalid_argument("window values must sum to k(k+1)/2");
  }

  static AffineWindow identity(int k) {
    std::vector<long long> v(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    return AffineWindow(k, std::move(v));
  }

  int k() const { return k_; }
  const std::vector<long long>& values() const { return values_; }

  /// w(x), extended by w(x + k) = w(x) + k.
  long long operator()(long long x) const {
    long long i = x - 1;
    long long q = i >= 0 ? i / k_ : -((-i + k_ - 1) / k_);
    long long r = i - q * k_;
    return values_[static_cast<std::size_t>(r)] + q * k_;
  }

  bool sorted() const { return std::is_sorted(values_.begin(), values_.end()); }

  friend bool operator==(const AffineWindow& a, const AffineWindow& b) {
    return a.k_ == b.k_ && a.values_ == b.values_;
  }

 private:
  int k_;
  std::vector<long long> values_;
};

/// s_j o w, computed pointwise; j = 0 is the identity.
inline AffineWindow left_multiply_generator(const AffineWindow& w, int j) {
  if (j == kIdentityLetter) return w;
  int k = w.k();
  if (j < 1 || j > k) throw std::invalid_argument("generator residue out of range");
  std::vector<long long> out;
  out.reserve(w.values().size());
  for (long long v : w.values()) {
    int r = residue(v, k);
    if (r == j)
      out.push_back(v + 1);
    else if (r == (j % k) + 1)
      out.push_back(v - 1);
    else
      out.push_back(v);
  }
  return AffineWindow(k, std::move(out));
}

/// Coxeter length: the finite affine inversion count
/// #{(i, j) : 1 <= i <= k, j > i, w(i) > w(j)}. Between residue columns a < b
/// the pairs split into (i = a, j = b + mk, m >= 0) and (i = b, j = a + mk,
/// m >= 1), giving the closed form below.
inline long long length(const AffineWindow& w) {
  int k = w.k();
  const auto& v = w.values();
  auto ceil_div = [k](long long num) {  // ceil(num / k)
    return num >= 0 ? (num + k - 1) / k : -((-num) / k);
  };
  long long total = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      long long dab = v[static_cast<std::size_t>(a)] - v[static_cast<std::size_t>(b)];
      total += std::max(0LL, ceil_div(dab));
      total += std::max(0LL, ceil_div(-dab) - 1);
    }
  return total;
}

/// Left descents: residues j with length(s_j o w) = length(w) - 1.
inline std::vector<int> descents(const AffineWindow& w) {
  long long len = length(w);
  std::vector<int> out;
  for (int j = 1; j <= w.k(); ++j)
    if (length(left_multiply_generator(w, j)) == len - 1) out.push_back(j);
  return out;
}

/// The element w(e): l maps to
/// chi(O(e)(-e_{k+1-l})) - #{l' : e_{l'} >= e_{k+1-l}} + #{l' >= k+1-l : e_{l'} = e_{k+1-l}},
/// returned as the sorted window of its coset.
inline AffineWindow w_of_splitting(const SplittingType& e) {
  int k = e.k();
  if (k < 2) throw std::invalid_argument("w(e) needs k >= 2");
  std::vector<long long> vals;
  vals.reserve(static_cast<std::size_t>(k));
  for (int l = 1; l <= k; ++l) {
    long long el = e.part(k + 1 - l);
    long long chi = cohomology(e, -el).chi;
    long long geq = 0, tail = 0;
    for (int lp = 1; lp <= k; ++lp) {
      if (e.part(lp) >= el) ++geq;
      if (lp >= k + 1 - l && e.part(lp) == el) ++tail;
    }
    vals.push_back(chi - geq + tail);
  }
  std::sort(vals.begin(), vals.end());
  return AffineWindow(k, std::move(vals));
}

}  // namespace bnk
