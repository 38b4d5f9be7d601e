#pragma once

// Brute-force verification layer: limit line bundles on a chain of g elliptic
// curves with exactly-k-torsion node differences. Exact h^0 by section gluing,
// ramification values a^i_n, e-positivity, tableau extraction, and exhaustive
// enumeration of positive bundles at g = u(e).
//
// A limit line bundle is stored through its concentrated-degree restrictions
// L^i. Moving one unit of degree from component i to i-1 twists L|_{E^i} by
// -p^{i-1}, so for a degree distribution d the component bundle is
// L^i(-x p^{i-1} - y p^i) with x the degree to the left and y to the right.
// A degree-0 bundle O(a p^{i-1} - a p^i) is trivial iff a = 0 mod k, which for
// Special(c) components means x = c mod k.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "bnk/filling.hpp"
#include "bnk/splitting.hpp"

namespace bnk {

struct ComponentState {
  bool special = false;
  int residue = 0;  // c mod k; meaningful only when special

  static ComponentState generic() { return {false, 0}; }
  static ComponentState special_residue(int c) { return {true, c}; }

  friend bool operator==(const ComponentState& a, const ComponentState& b) {
    return a.special == b.special && (!a.special || a.residue == b.residue);
  }
  friend bool operator<(const ComponentState& a, const ComponentState& b) {
    if (a.special != b.special) return b.special;
    return a.special && a.residue < b.residue;
  }
};

class ChainModel {
 public:
  ChainModel(int k, long long d, std::vector<ComponentState> states)
      : k_(k), d_(d), states_(std::move(states)) {
    if (k_ < 2) throw std::invalid_argument("chain model needs k >= 2");
    for (ComponentState& s : states_)
      if (s.special) s.residue = ((s.residue % k_) + k_) % k_;
  }

  int k() const { return k_; }
  int g() const { return static_cast<int>(states_.size()); }
  long long d() const { return d_; }
  const std::vector<ComponentState>& states() const { return states_; }
  const ComponentState& state(int i) const {  // 1-indexed component
    if (i < 1 || i > g()) throw std::invalid_argument("component index out of range");
    return states_[static_cast<std::size_t>(i - 1)];
  }

  friend bool operator==(const ChainModel& a, const ChainModel& b) {
    return a.k_ == b.k_ && a.d_ == b.d_ && a.states_ == b.states_;
  }
  friend bool operator<(const ChainModel& a, const ChainModel& b) {
    if (a.k_ != b.k_) return a.k_ < b.k_;
    if (a.d_ != b.d_) return a.d_ < b.d_;
    return a.states_ < b.states_;
  }

 private:
  int k_;
  long long d_;
  std::vector<ComponentState> states_;
};

using DegreeDistribution = std::vector<long long>;

namespace detail {

/// h^0 on one elliptic component of a twist of total degree `deg` whose
/// p^{i-1}-coefficient has been pulled down by `x`.
inline long long component_h0(const ComponentState& s, long long x, long long deg, int k) {
  if (deg < 0) return 0;
  if (deg > 0) return deg;
  if (!s.special) return 0;
  long long r = (x - s.residue) % k;
  return r == 0 ? 1 : 0;
}

/// One gluing step of the chain DP. The pair tracks (sections, sections
/// vanishing at the right node); rank drops by one at a node unless both
/// sides vanish there identically.
struct SectionPair {
  long long all;       // h^0 so far
  long long vanishing; // h^0 of the subspace vanishing at the current right node
  friend bool operator==(const SectionPair& a, const SectionPair& b) {
    return a.all == b.all && a.vanishing == b.vanishing;
  }
};

inline SectionPair glue(const SectionPair& left, const ComponentState& st, long long x,
                        long long deg, int k) {
  long long s = component_h0(st, x, deg, k);
  long long sL = component_h0(st, x + 1, deg - 1, k);
  long long sR = component_h0(st, x, deg - 1, k);
  long long sLR = component_h0(st, x + 1, deg - 2, k);
  long long drop = (left.vanishing < left.all || sL < s) ? 1 : 0;
  long long dropR = (left.vanishing < left.all || sLR < sR) ? 1 : 0;
  return {left.all + s - drop, left.all + sR - dropR};
}

inline SectionPair first_component(const ComponentState& st, long long deg, int k) {
  return {component_h0(st, 0, deg, k), component_h0(st, 0, deg - 1, k)};
}

}  // namespace detail

/// Exact h^0 of the twist L(m) with degree distribution dvec, where m is
/// determined by sum(dvec) = d + mk. A sum not congruent to d mod k does not
/// describe a twist of the model and is rejected.
inline long long h0_chain(const ChainModel& m, const DegreeDistribution& dvec) {
  if (static_cast<int>(dvec.size()) != m.g())
    throw std::invalid_argument("distribution length must equal g");
  long long total = 0;
  for (long long di : dvec) total += di;
  if (m.g() == 0) {
    if (total != 0) throw std::invalid_argument("distribution-sum mismatch");
    return 0;
  }
  if ((total - m.d()) % m.k() != 0) throw std::invalid_argument("distribution-sum mismatch");
  detail::SectionPair acc{0, 0};
  long long x = 0;
  for (int i = 1; i <= m.g(); ++i) {
    long long deg = dvec[static_cast<std::size_t>(i - 1)];
    acc = i == 1 ? detail::first_component(m.state(1), deg, m.k())
                 : detail::glue(acc, m.state(i), x, deg, m.k());
    x += deg;
  }
  return acc.all;
}

namespace detail {

/// Pareto frontier of (all, vanishing) pairs, keeping componentwise minima.
/// The gluing step is monotone in both coordinates, so minima of the final
/// h^0 are reachable through frontier states only.
class Frontier {
 public:
  void add(SectionPair p) {
    for (const SectionPair& q : points_)
      if (q.all <= p.all && q.vanishing <= p.vanishing) return;
    points_.erase(std::remove_if(points_.begin(), points_.end(),
                                 [&](const SectionPair& q) {
                                   return p.all <= q.all && p.vanishing <= q.vanishing;
                                 }),
                  points_.end());
    points_.push_back(p);
  }
  const std::vector<SectionPair>& points() const { return points_; }
  bool empty() const { return points_.empty(); }

 private:
  std::vector<SectionPair> points_;
};

/// Minimum of h^0(X^{<= comps}, twist) over degree distributions
/// (d^1..d^comps) with every d^j >= -1 and prefix sum `alpha`; the total twist
/// degree only matters through the prefix, so nothing else is fixed here.
/// Components with d^j <= -2 only push degree (hence sections) elsewhere, so
/// the d^j >= -1 box contains the minima.
inline long long min_h0_prefix(const ChainModel& m, int comps, long long alpha) {
  if (comps < 1 || comps > m.g()) throw std::invalid_argument("prefix length out of range");
  if (alpha < -comps) throw std::invalid_argument("prefix sum below the -1 box");
  int k = m.k();
  std::map<long long, Frontier> states;
  for (int comp = 1; comp <= comps; ++comp) {
    std::map<long long, Frontier> next;
    if (comp == 1) {
      for (long long d1 = -1; d1 <= alpha + (comps - 1); ++d1) {
        if (alpha - d1 < -(comps - 1)) continue;
        next[d1].add(first_component(m.state(1), d1, k));
      }
    } else {
      for (const auto& [sigma_prev, frontier] : states) {
        for (long long dc = -1; dc <= alpha - sigma_prev + (comps - comp); ++dc) {
          long long sigma = sigma_prev + dc;
          if (alpha - sigma < -(comps - comp)) continue;
          Frontier& slot = next[sigma];
          for (const SectionPair& p : frontier.points())
            slot.add(glue(p, m.state(comp), sigma_prev, dc, k));
        }
      }
    }
    states = std::move(next);
  }
  auto it = states.find(alpha);
  if (it == states.end() || it->second.empty())
    throw std::logic_error("prefix DP produced no states");
  long long best = it->second.points().front().all;
  for (const SectionPair& p : it->second.points()) best = std::min(best, p.all);
  return best;
}

}  // namespace detail

/// a^0_n = n - 1; for 1 <= i <= g-1 the least prefix degree alpha forcing
/// h^0(X^{<= i}) >= n over all distributions; for i = g the (m, epsilon)
/// form, scanned over the bounded window m in [-(|d|+g)/k - 2, (|d|+g)/k + 2].
inline long long a_value(const ChainModel& m, int i, long long n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (i < 0 || i > m.g()) throw std::invalid_argument("i out of range");
  if (i == 0) return n - 1;
  if (i < m.g()) {
    for (long long alpha = n - 1;; ++alpha) {
      if (detail::min_h0_prefix(m, i, alpha) >= n) return alpha;
      if (alpha > n + std::abs(m.d()) + static_cast<long long>(m.g()) * m.k() + 16)
        throw std::logic_error("a_value search did not stabilize");
    }
  }
  long long window = (std::abs(m.d()) + m.g()) / m.k() + 2;
  bool found = false;
  long long best = 0;
  for (long long mm = -window; mm <= window; ++mm) {
    long long total = m.d() + mm * m.k();
    if (total < -m.g()) continue;
    long long h = detail::min_h0_prefix(m, m.g(), total);
    if (h < n) continue;
    long long alpha = total - (h - n);  // epsilon = h - n maximal
    if (!found || alpha < best) {
      best = alpha;
      found = true;
    }
  }
  if (!found) throw std::logic_error("a_value at i = g found no admissible m");
  return best;
}

/// Degree constraint d = g - 1 + chi(e), then the semicontinuity bounds
/// h^0(L(m)) >= h^0(O(e)(m)) over every distribution, for m in the window
/// [-e_k, -e_1 - 2]; outside it the bound is vacuous or Euler-automatic.
inline bool is_e_positive(const ChainModel& m, const SplittingType& e) {
  if (m.k() != e.k()) return false;
  if (m.d() != m.g() - 1 + cohomology(e, 0).chi) return false;
  if (m.g() == 0) return true;
  for (long long mm = -e.part(e.k()); mm <= -e.part(1) - 2; ++mm) {
    long long h0 = cohomology(e, mm).h0;
    if (h0 <= 0) continue;
    long long total = m.d() + mm * m.k();
    if (total < -m.g()) return false;
    if (detail::min_h0_prefix(m, m.g(), total) < h0) return false;
  }
  return true;
}

/// The W^T chain model of a filling at genus g >= u: component i is
/// Special((T[i] + i - 1) mod k) when symbol i appears, Generic otherwise.
inline ChainModel model_from_filling(const Filling& t, const SplittingType& e, int g) {
  if (t.k() != e.k()) throw std::invalid_argument("k mismatch");
  int u = static_cast<int>(t.word().size());
  if (g < u) throw std::invalid_argument("g must be at least the number of symbols");
  long long d = g - 1 + cohomology(e, 0).chi;
  std::vector<ComponentState> states;
  for (int i = 1; i <= g; ++i) {
    int ji = i <= u ? t.symbol_residue(i) : kIdentityLetter;
    if (ji == kIdentityLetter)
      states.push_back(ComponentState::generic());
    else
      states.push_back(ComponentState::special_residue((ji + i - 1) % e.k()));
  }
  return ChainModel(e.k(), d, std::move(states));
}

/// Rebuilds the tableau of an e-positive model: box (r, c) holds
/// min{ i : f_c(i) = r } with f_n(i) = i + n - 1 - a^i_n. Throws when the
/// required f_c(g) >= h(c) fails (the model is not e-positive).
inline Filling extract_filling(const ChainModel& m, const SplittingType& e) {
  if (m.k() != e.k()) throw std::invalid_argument("k mismatch");
  int g = m.g();
  CohomologyProfile prof = h_profile(e);
  long long width = prof.support();
  std::vector<std::vector<long long>> a(static_cast<std::size_t>(width));
  for (long long n = 1; n <= width; ++n) {
    auto& an = a[static_cast<std::size_t>(n - 1)];
    an.resize(static_cast<std::size_t>(g + 1));
    for (int i = 0; i <= g; ++i) an[static_cast<std::size_t>(i)] = a_value(m, i, n);
  }
  auto f = [&](long long n, int i) {
    return i + n - 1 - a[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)];
  };
  BoxMap boxes;
  for (long long c = 1; c <= width; ++c) {
    if (f(c, g) < prof.h(c))
      throw std::invalid_argument("model is not e-positive: f_n(g) < h(n) at n = " +
                                  std::to_string(c));
    for (long long r = 1; r <= prof.h(c); ++r) {
      int first = -1;
      for (int i = 0; i <= g; ++i)
        if (f(c, i) == r) {
          first = i;
          break;
        }
      if (first < 0) throw std::logic_error("f_c skipped a value");
      boxes[{r, c}] = first;
    }
  }
  Word word(static_cast<std::size_t>(g), kIdentityLetter);
  for (const auto& [pos, symbol] : boxes) {
    int rcl = residue(pos.second - pos.first, e.k());
    int& slot = word[static_cast<std::size_t>(symbol - 1)];
    if (slot != kIdentityLetter && slot != rcl)
      throw std::logic_error("extracted symbol spans two residue classes");
    slot = rcl;
  }
  Filling rebuilt = word_to_filling(word, e.k());
  if (!(rebuilt.boxes() == boxes))
    throw std::logic_error("extracted filling is not word-realizable");
  return rebuilt;
}

/// All all-Special residue assignments that are e-positive at g = u(e).
/// The candidate space has k^g points; the scan refuses to run past `limit`
/// candidates unless forced.
inline std::vector<ChainModel> enumerate_positive(const SplittingType& e, std::uint64_t limit,
                                                  bool force = false) {
  int k = e.k();
  long long u = imbalance_u(e);
  int g = static_cast<int>(u);
  long long d = g - 1 + cohomology(e, 0).chi;
  double candidates = 1;
  for (int i = 0; i < g; ++i) candidates *= k;
  if (!force && candidates > static_cast<double>(limit))
    throw limit_error("positivity scan would test " + std::to_string(candidates) +
                      " candidates");
  std::vector<ChainModel> out;
  std::vector<ComponentState> states(static_cast<std::size_t>(g),
                                     ComponentState::special_residue(0));
  auto rec = [&](auto&& self, int i) -> void {
    if (i == g) {
      ChainModel m(k, d, states);
      if (is_e_positive(m, e)) out.push_back(m);
      return;
    }
    for (int c = 0; c < k; ++c) {
      states[static_cast<std::size_t>(i)] = ComponentState::special_residue(c);
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace bnk
