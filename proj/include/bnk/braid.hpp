#pragma once

// Braid moves on reduced words / efficient fillings: the flip F^i (commuting
// letters) and the shuffle S^i (braid relation), plus the move graph on all
// efficient fillings of a core with its connectivity verdict.

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "bnk/counting.hpp"
#include "bnk/diagram.hpp"
#include "bnk/filling.hpp"

namespace bnk {

inline bool flip_defined(const Filling& t, int i) {
  int u = static_cast<int>(t.word().size());
  if (i < 1 || i + 1 > u) return false;
  int a = t.symbol_residue(i), b = t.symbol_residue(i + 1);
  if (a == kIdentityLetter || b == kIdentityLetter) return false;
  int k = t.k();
  int diff = ((a - b) % k + k) % k;
  return diff != 1 && diff != k - 1;
}

/// F^i: swap the commuting letters at positions i, i+1.
inline Filling flip(const Filling& t, int i) {
  if (!flip_defined(t, i))
    throw std::invalid_argument("flip undefined at position " + std::to_string(i));
  Word w = t.word();
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  return word_to_filling(w, t.k());
}

/// The braid relation (s_j s_{j+1})^3 = 1 needs k >= 3; for k = 2 the group is
/// infinite dihedral and no shuffle exists.
inline bool shuffle_defined(const Filling& t, int i) {
  int u = static_cast<int>(t.word().size());
  int k = t.k();
  if (k < 3 || i < 1 || i + 2 > u) return false;
  int a = t.symbol_residue(i), b = t.symbol_residue(i + 1), c = t.symbol_residue(i + 2);
  if (a == kIdentityLetter || b == kIdentityLetter || c == kIdentityLetter) return false;
  if (a != c) return false;
  int diff = ((b - a) % k + k) % k;
  return diff == 1 || diff == k - 1;
}

/// S^i: letters (a, b, a) at positions i..i+2 become (b, a, b).
inline Filling shuffle(const Filling& t, int i) {
  if (!shuffle_defined(t, i))
    throw std::invalid_argument("shuffle undefined at position " + std::to_string(i));
  Word w = t.word();
  int a = w[static_cast<std::size_t>(i - 1)], b = w[static_cast<std::size_t>(i)];
  w[static_cast<std::size_t>(i - 1)] = b;
  w[static_cast<std::size_t>(i)] = a;
  w[static_cast<std::size_t>(i + 1)] = b;
  return word_to_filling(w, t.k());
}

struct BraidEdge {
  std::size_t a;  // node indices, a < b
  std::size_t b;
  char move;  // 'F' or 'S'
  int pos;    // the move position i
  friend bool operator<(const BraidEdge& x, const BraidEdge& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.move != y.move) return x.move < y.move;
    return x.pos < y.pos;
  }
  friend bool operator==(const BraidEdge& x, const BraidEdge& y) {
    return x.a == y.a && x.b == y.b && x.move == y.move && x.pos == y.pos;
  }
};

struct BraidGraph {
  std::vector<Filling> nodes;  // lexicographic word order
  std::vector<BraidEdge> edges;
  bool connected = false;
};

/// Nodes are all efficient fillings; edges all defined flips and shuffles.
/// Each undirected edge is recorded once, from its lexicographically smaller
/// endpoint (the moves are involutions so both directions define it).
inline BraidGraph braid_graph(const Diagram& gamma, int k, std::uint64_t limit,
                              bool force = false) {
  BraidGraph out;
  out.nodes = enumerate_efficient_fillings(gamma, k, limit, force);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < out.nodes.size(); ++i) index[out.nodes[i].word()] = i;

  std::set<BraidEdge> edges;
  for (std::size_t a = 0; a < out.nodes.size(); ++a) {
    const Filling& t = out.nodes[a];
    int u = static_cast<int>(t.word().size());
    for (int i = 1; i <= u; ++i) {
      if (flip_defined(t, i)) {
        std::size_t b = index.at(flip(t, i).word());
        edges.insert({std::min(a, b), std::max(a, b), 'F', i});
      }
      if (shuffle_defined(t, i)) {
        std::size_t b = index.at(shuffle(t, i).word());
        edges.insert({std::min(a, b), std::max(a, b), 'S', i});
      }
    }
  }
  out.edges.assign(edges.begin(), edges.end());

  std::vector<std::vector<std::size_t>> adj(out.nodes.size());
  for (const BraidEdge& e : out.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<char> seen(out.nodes.size(), 0);
  std::deque<std::size_t> queue;
  if (!out.nodes.empty()) {
    seen[0] = 1;
    queue.push_back(0);
  }
  std::size_t reached = out.nodes.empty() ? 0 : 1;
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        queue.push_back(y);
      }
  }
  out.connected = reached == out.nodes.size();
  return out;
}

}  // namespace bnk
