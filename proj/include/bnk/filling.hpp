#pragma once

// Efficient fillings as reduced words with their box-level tableau
// realization, truncation tables, layer coordinates, ramification index
// tables, and exhaustive enumeration in lexicographic word order.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bnk/affine.hpp"
#include "bnk/diagram.hpp"
#include "bnk/splitting.hpp"

namespace bnk {

/// Thrown when an enumeration or scan would exceed its resource budget.
class limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Letters 1..k plus 0 for the identity '*'. Words are stored oldest letter
/// first: the word (j_1, ..., j_g) builds the tableau by applying s_{j_1} first.
using Word = std::vector<int>;

using BoxMap = std::map<std::pair<long long, long long>, int>;  // (r,c) -> symbol

class Filling {
 public:
  int k() const { return k_; }
  const Word& word() const { return word_; }
  const Diagram& shape() const { return shape_; }
  const BoxMap& boxes() const { return boxes_; }

  /// Residue class of the boxes holding symbol t, or 0 ('*') if t is absent.
  int symbol_residue(int t) const {
    if (t < 1 || t > static_cast<int>(word_.size()))
      throw std::invalid_argument("symbol out of range");
    return word_[static_cast<std::size_t>(t - 1)];
  }

  friend bool operator==(const Filling& a, const Filling& b) {
    return a.k_ == b.k_ && a.word_ == b.word_;
  }
  friend bool operator<(const Filling& a, const Filling& b) {
    return a.word_ < b.word_;
  }

 private:
  friend Filling word_to_filling(const Word&, int);
  Filling(int k, Word word, Diagram shape, BoxMap boxes)
      : k_(k), word_(std::move(word)), shape_(std::move(shape)), boxes_(std::move(boxes)) {}

  int k_;
  Word word_;
  Diagram shape_;
  BoxMap boxes_;
};

/// Realizes a word as a filling: every non-'*' step must add boxes (a step
/// that removes boxes or fixes the core means the word is not reduced).
inline Filling word_to_filling(const Word& word, int k) {
  if (k < 2) throw std::invalid_argument("k must be >= 2");
  Diagram cur;
  BoxMap boxes;
  for (std::size_t i = 0; i < word.size(); ++i) {
    int j = word[i];
    if (j == kIdentityLetter) continue;
    if (j < 1 || j > k) throw std::invalid_argument("word letter out of range");
    std::vector<Corner> add;
    for (const Corner& c : addable_corners(cur))
      if (residue(c.col - c.row, k) == j) add.push_back(c);
    if (add.empty())
      throw std::invalid_argument("word not reduced at step " + std::to_string(i + 1));
    for (const Corner& c : add) boxes[{c.row, c.col}] = static_cast<int>(i + 1);
    cur = detail::add_boxes(cur, add);
  }
  return Filling(k, word, std::move(cur), std::move(boxes));
}

/// Same data as Filling::symbol_residue; kept as the spec-level operation name.
inline int residue_of_symbol(const Filling& t, int symbol) {
  return t.symbol_residue(symbol);
}

/// T^{<=t}(l) = (s_{j_t} ... s_{j_1})(l) for t = 0..g and l = 1..k.
class Truncations {
 public:
  explicit Truncations(const Filling& f) : k_(f.k()) {
    AffineWindow w = AffineWindow::identity(k_);
    table_.push_back(w.values());
    for (int j : f.word()) {
      w = left_multiply_generator(w, j);
      table_.push_back(w.values());
    }
  }

  int k() const { return k_; }
  int steps() const { return static_cast<int>(table_.size()) - 1; }

  long long at(int t, int l) const {
    if (t < 0 || t > steps() || l < 1 || l > k_)
      throw std::invalid_argument("truncation index out of range");
    return table_[static_cast<std::size_t>(t)][static_cast<std::size_t>(l - 1)];
  }

  const std::vector<long long>& row(int t) const {
    return table_[static_cast<std::size_t>(t)];
  }

 private:
  int k_;
  std::vector<std::vector<long long>> table_;
};

inline Truncations truncations(const Filling& f) { return Truncations(f); }

/// Layer coordinates: l = 1..k maps to (j, n) with 1 <= j <= s, 1 <= n <= m_j,
/// in lexicographic order. Layer j corresponds to the distinct part d_j.
struct LayerIndex {
  int layer;  // j
  int pos;    // n
};

inline std::vector<LayerIndex> layer_coordinates(const SplittingType& e) {
  std::vector<LayerIndex> out;
  std::vector<int> mult = e.multiplicities();
  for (std::size_t j = 0; j < mult.size(); ++j)
    for (int n = 1; n <= mult[j]; ++n) out.push_back({static_cast<int>(j + 1), n});
  return out;
}

/// a^i_{(j,n)} = T^{<=i}(j,n) + i - 1 and b^i_{(j,n)} = d - d_j k - a^i_{(j,n)},
/// for nodes i = 1..g-1, with d = g - 1 + chi(e).
struct RamificationTables {
  // a[i-1][l-1], b[i-1][l-1] for i = 1..g-1, l = 1..k (lexicographic layers).
  std::vector<std::vector<long long>> a;
  std::vector<std::vector<long long>> b;
};

inline RamificationTables ramification_indices(const Filling& f, const SplittingType& e) {
  if (f.k() != e.k()) throw std::invalid_argument("k mismatch");
  if (!(f.shape() == staircase(e)))
    throw std::invalid_argument("filling shape is not staircase(e)");
  int g = static_cast<int>(f.word().size());
  long long d = g - 1 + cohomology(e, 0).chi;
  std::vector<long long> dist = e.distinct_parts();
  std::vector<LayerIndex> layers = layer_coordinates(e);
  Truncations tr(f);
  RamificationTables out;
  for (int i = 1; i <= g - 1; ++i) {
    std::vector<long long> ai, bi;
    for (int l = 1; l <= e.k(); ++l) {
      long long a = tr.at(i, l) + i - 1;
      long long dj = dist[static_cast<std::size_t>(layers[static_cast<std::size_t>(l - 1)].layer - 1)];
      ai.push_back(a);
      bi.push_back(d - dj * e.k() - a);
    }
    out.a.push_back(std::move(ai));
    out.b.push_back(std::move(bi));
  }
  return out;
}

namespace detail {

/// Shapes of all truncations of reduced words for the coset of `target`,
/// i.e. the downward closure under descent steps, keyed by t-vector.
inline std::set<TVector> descent_downset(const TVector& target) {
  std::set<TVector> seen;
  std::vector<TVector> stack{target};
  while (!stack.empty()) {
    TVector cur = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(cur).second) continue;
    for (int j : tvector_descents(cur)) {
      TVector child = tvector_left_multiply(cur, j);
      if (!seen.count(child)) stack.push_back(child);
    }
  }
  return seen;
}

}  // namespace detail

/// All reduced words for the sorted-window coset of a k-core, as fillings,
/// in lexicographic order of (j_1, ..., j_u). Throws limit_error when the
/// count exceeds `limit` unless `force` is set.
inline std::vector<Filling> enumerate_efficient_fillings(const Diagram& gamma, int k,
                                                         std::uint64_t limit,
                                                         bool force = false) {
  TVector target = window_from_core(gamma, k);
  std::set<TVector> downset = detail::descent_downset(target);
  long long u = u_core(gamma, k);

  std::vector<Filling> out;
  Word word;
  auto rec = [&](auto&& self, const TVector& cur) -> void {
    if (static_cast<long long>(word.size()) == u) {
      if (cur == target) {
        if (!force && out.size() >= limit)
          throw limit_error("filling count exceeds limit " + std::to_string(limit));
        out.push_back(word_to_filling(word, k));
      }
      return;
    }
    for (int j = 1; j <= k; ++j) {
      if (tvector_step_kind(cur, j) != StepKind::add) continue;
      TVector next = tvector_left_multiply(cur, j);
      if (!downset.count(next)) continue;
      word.push_back(j);
      self(self, next);
      word.pop_back();
    }
  };
  rec(rec, identity_tvector(k));
  return out;
}

}  // namespace bnk
