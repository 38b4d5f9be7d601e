#pragma once

// Young diagrams, hook lengths, the k-core test, addable/removable corners,
// the generator action on k-cores, and the diagram <-> affine-coset bijection
// through boundary t-vectors.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace bnk {

using Rows = std::vector<long long>;

/// Sorted boundary t-vector of a k-core: k integers, pairwise distinct mod k,
/// summing to k(k+1)/2. Doubles as the window of the sorted coset representative.
using TVector = std::vector<long long>;

/// Residue representative of x in {1,...,k}, with k standing for 0 mod k.
inline int residue(long long x, int k) {
  long long r = x % k;
  if (r <= 0) r += k;
  return static_cast<int>(r);
}

class Diagram {
 public:
  Diagram() = default;

  explicit Diagram(Rows rows) : rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (rows_[i] <= 0) throw std::invalid_argument("diagram rows must be positive");
      if (i > 0 && rows_[i] > rows_[i - 1])
        throw std::invalid_argument("diagram rows must be weakly decreasing");
    }
  }

  const Rows& rows() const { return rows_; }
  bool empty() const { return rows_.empty(); }
  long long row_count() const { return static_cast<long long>(rows_.size()); }

  /// Length of row r (1-indexed); 0 beyond the last row.
  long long row(long long r) const {
    if (r < 1) throw std::invalid_argument("row index must be >= 1");
    return r <= row_count() ? rows_[static_cast<std::size_t>(r - 1)] : 0;
  }

  /// Number of boxes in column c (1-indexed).
  long long column_height(long long c) const {
    if (c < 1) throw std::invalid_argument("column index must be >= 1");
    auto it = std::lower_bound(rows_.begin(), rows_.end(), c,
                               [](long long lam, long long cc) { return lam >= cc; });
    return static_cast<long long>(it - rows_.begin());
  }

  bool contains(long long r, long long c) const {
    return r >= 1 && c >= 1 && r <= row_count() && c <= row(r);
  }

  long long box_count() const {
    return std::accumulate(rows_.begin(), rows_.end(), 0LL);
  }

  friend bool operator==(const Diagram& a, const Diagram& b) { return a.rows_ == b.rows_; }
  friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }
  friend bool operator<(const Diagram& a, const Diagram& b) { return a.rows_ < b.rows_; }

 private:
  Rows rows_;
};

/// Hook length of box (r,c): arm + leg + 1.
inline long long hook_length(const Diagram& d, long long r, long long c) {
  if (!d.contains(r, c)) throw std::invalid_argument("box outside diagram");
  long long arm = d.row(r) - c;
  long long leg = d.column_height(c) - r;
  return arm + leg + 1;
}

inline bool is_k_core(const Diagram& d, int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  for (long long r = 1; r <= d.row_count(); ++r)
    for (long long c = 1; c <= d.row(r); ++c)
      if (hook_length(d, r, c) % k == 0) return false;
  return true;
}

/// Number of boxes with hook length < k; the minimal number of symbols in a
/// filling and the length of the associated coset representative.
inline long long u_core(const Diagram& d, int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  long long u = 0;
  for (long long r = 1; r <= d.row_count(); ++r)
    for (long long c = 1; c <= d.row(r); ++c)
      if (hook_length(d, r, c) < k) ++u;
  return u;
}

struct Corner {
  long long row;
  long long col;
  friend bool operator==(const Corner& a, const Corner& b) {
    return a.row == b.row && a.col == b.col;
  }
};

/// Positions where a box can be added, top to bottom (includes a new row).
inline std::vector<Corner> addable_corners(const Diagram& d) {
  std::vector<Corner> out;
  long long rc = d.row_count();
  for (long long r = 1; r <= rc; ++r)
    if (r == 1 || d.row(r) < d.row(r - 1)) out.push_back({r, d.row(r) + 1});
  out.push_back({rc + 1, 1});
  return out;
}

/// Positions where a box can be removed, top to bottom.
inline std::vector<Corner> removable_corners(const Diagram& d) {
  std::vector<Corner> out;
  for (long long r = 1; r <= d.row_count(); ++r)
    if (d.row(r) > d.row(r + 1)) out.push_back({r, d.row(r)});
  return out;
}

namespace detail {

inline Diagram add_boxes(const Diagram& d, const std::vector<Corner>& at) {
  Rows rows = d.rows();
  for (const Corner& c : at) {
    if (c.row == d.row_count() + 1)
      rows.push_back(1);
    else
      ++rows[static_cast<std::size_t>(c.row - 1)];
  }
  return Diagram(rows);
}

inline Diagram remove_boxes(const Diagram& d, const std::vector<Corner>& at) {
  Rows rows = d.rows();
  for (const Corner& c : at) --rows[static_cast<std::size_t>(c.row - 1)];
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return Diagram(rows);
}

}  // namespace detail

/// s_j acting on a k-core: add every addable corner of diagonal residue j if
/// any exist, else remove every removable corner of residue j, else no-op.
inline Diagram apply_generator(const Diagram& d, int k, int j) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  if (j < 1 || j > k) throw std::invalid_argument("generator residue out of range");
  std::vector<Corner> add;
  for (const Corner& c : addable_corners(d))
    if (residue(c.col - c.row, k) == j) add.push_back(c);
  if (!add.empty()) return detail::add_boxes(d, add);
  std::vector<Corner> rem;
  for (const Corner& c : removable_corners(d))
    if (residue(c.col - c.row, k) == j) rem.push_back(c);
  if (!rem.empty()) return detail::remove_boxes(d, rem);
  return d;
}

inline bool valid_tvector(const TVector& t) {
  int k = static_cast<int>(t.size());
  if (k < 2) return false;
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  long long sum = 0;
  for (long long v : t) {
    int r = residue(v, k) - 1;
    if (seen[static_cast<std::size_t>(r)]) return false;
    seen[static_cast<std::size_t>(r)] = true;
    sum += v;
  }
  return sum == static_cast<long long>(k) * (k + 1) / 2;
}

/// Boundary t-vector of a k-core: the diagonal index of the first horizontal
/// boundary segment in each residue class, sorted ascending. The horizontal
/// segment below row r at columns (c-1,c) has index c - r (r = 0 on the top
/// ray), so the horizontal indices are exactly { c - column_height(c) : c >= 1 }.
inline TVector window_from_core(const Diagram& d, int k) {
  if (!is_k_core(d, k)) throw std::invalid_argument("diagram is not a k-core");
  std::vector<bool> seen(static_cast<std::size_t>(k), false);
  int found = 0;
  TVector t;
  for (long long c = 1; found < k; ++c) {
    long long idx = c - d.column_height(c);
    int r = residue(idx, k) - 1;
    if (!seen[static_cast<std::size_t>(r)]) {
      seen[static_cast<std::size_t>(r)] = true;
      t.push_back(idx);
      ++found;
    }
  }
  std::sort(t.begin(), t.end());
  return t;
}

/// Inverse of window_from_core. Vertical segment indices are t_j - mk (m >= 1);
/// listing them in decreasing order v_1 > v_2 > ... gives row lengths
/// lambda_r = v_r + r - 1 until they stop being positive.
inline Diagram core_from_window(const TVector& t) {
  if (!valid_tvector(t)) throw std::invalid_argument("invalid t-vector");
  int k = static_cast<int>(t.size());
  TVector next(t);
  for (long long& v : next) v -= k;
  Rows rows;
  for (long long r = 1;; ++r) {
    auto it = std::max_element(next.begin(), next.end());
    long long lam = *it + r - 1;
    if (lam <= 0) break;
    rows.push_back(lam);
    *it -= k;
  }
  return Diagram(rows);
}

// -- coset-window forms of the generator action ------------------------------
//
// Acting with s_j on the sorted window of a coset: the value a in residue
// class j moves to a+1 and the value b in class j+1 moves to b-1. The step
// removes boxes iff b >= a+2 (equivalently b - a >= k+1), fixes the core iff
// b == a+1, and adds boxes otherwise.

enum class StepKind { add, remove, fix };

inline StepKind tvector_step_kind(const TVector& t, int j) {
  int k = static_cast<int>(t.size());
  long long a = 0, b = 0;
  for (long long v : t) {
    int r = residue(v, k);
    if (r == j) a = v;
    if (r == (j % k) + 1) b = v;
  }
  if (b == a + 1) return StepKind::fix;
  return b - a >= k + 1 ? StepKind::remove : StepKind::add;
}

inline TVector tvector_left_multiply(const TVector& t, int j) {
  int k = static_cast<int>(t.size());
  TVector out;
  out.reserve(t.size());
  for (long long v : t) {
    int r = residue(v, k);
    if (r == j)
      out.push_back(v + 1);
    else if (r == (j % k) + 1)
      out.push_back(v - 1);
    else
      out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Residues whose generator removes boxes, i.e. the removable-corner residues.
inline std::vector<int> tvector_descents(const TVector& t) {
  int k = static_cast<int>(t.size());
  std::vector<int> out;
  for (int j = 1; j <= k; ++j)
    if (tvector_step_kind(t, j) == StepKind::remove) out.push_back(j);
  return out;
}

inline TVector identity_tvector(int k) {
  TVector t(static_cast<std::size_t>(k));
  std::iota(t.begin(), t.end(), 1LL);
  return t;
}

}  // namespace bnk
