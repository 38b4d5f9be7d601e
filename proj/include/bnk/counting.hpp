#pragma once

// Exact big-integer counting of reduced words R(w) by the memoized
// removable-corner recursion, N(e) = R(w(e)), and the persistent cache.

#include <cstdint>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "bnk/affine.hpp"
#include "bnk/diagram.hpp"
#include "bnk/filling.hpp"
#include "bnk/splitting.hpp"

namespace bnk {

using BigCount = boost::multiprecision::cpp_int;

struct TVectorHash {
  std::size_t operator()(const TVector& t) const {
    std::uint64_t h = 1469598103934665603ull;
    for (long long v : t) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Memoized R-values keyed by sorted t-vector. One cache serves every core of
/// a fixed k; mixing k values is rejected.
class MemoCache {
 public:
  static constexpr int kVersion = 1;

  explicit MemoCache(int k) : k_(k) {
    if (k_ < 2) throw std::invalid_argument("cache needs k >= 2");
  }

  int k() const { return k_; }
  std::size_t size() const { return map_.size(); }

  /// States inserted since construction (or since the last reset).
  std::uint64_t computed_states() const { return computed_; }
  void reset_counter() { computed_ = 0; }

  const BigCount* find(const TVector& t) const {
    auto it = map_.find(t);
    return it == map_.end() ? nullptr : &it->second;
  }

  void insert(const TVector& t, BigCount value) {
    if (map_.emplace(t, std::move(value)).second) ++computed_;
  }

  /// Adopts entries from another cache (values agree by determinism).
  void merge(const MemoCache& other) {
    if (other.k_ != k_) throw std::invalid_argument("cache k mismatch in merge");
    for (const auto& [key, value] : other.map_) map_.emplace(key, value);
  }

  const std::unordered_map<TVector, BigCount, TVectorHash>& entries() const { return map_; }

 private:
  int k_;
  std::unordered_map<TVector, BigCount, TVectorHash> map_;
  std::uint64_t computed_ = 0;
};

/// Memory guard for the memo walk; exceeding it raises limit_error.
inline constexpr std::uint64_t kDefaultStateLimit = 1ull << 24;

namespace detail {

/// Post-order walk with an explicit stack; no call recursion (u can be large).
inline BigCount count_from_tvector(const TVector& root, MemoCache& cache,
                                   std::uint64_t state_limit) {
  int k = static_cast<int>(root.size());
  TVector ident = identity_tvector(k);
  std::vector<TVector> stack{root};
  while (!stack.empty()) {
    TVector cur = stack.back();
    if (cache.find(cur)) {
      stack.pop_back();
      continue;
    }
    if (cur == ident) {
      cache.insert(cur, 1);
      stack.pop_back();
      continue;
    }
    std::vector<TVector> children;
    for (int j : tvector_descents(cur)) children.push_back(tvector_left_multiply(cur, j));
    bool ready = true;
    for (const TVector& ch : children)
      if (!cache.find(ch)) {
        ready = false;
        stack.push_back(ch);
      }
    if (!ready) continue;
    BigCount sum = 0;
    for (const TVector& ch : children) sum += *cache.find(ch);
    if (cache.size() >= state_limit)
      throw limit_error("memoization state limit exceeded");
    stack.pop_back();
    cache.insert(cur, std::move(sum));
  }
  return *cache.find(root);
}

}  // namespace detail

/// R(Gamma): 1 for the empty core, else the sum over removable-corner residues
/// j of R(s_j Gamma). With threads > 1 the root subtrees are counted in
/// parallel on private caches and merged; results are identical either way.
inline BigCount count_reduced_words(const Diagram& gamma, int k, MemoCache& cache,
                                    int threads = 1,
                                    std::uint64_t state_limit = kDefaultStateLimit) {
  if (cache.k() != k) throw std::invalid_argument("cache was built for a different k");
  TVector root = window_from_core(gamma, k);
  if (threads <= 1) return detail::count_from_tvector(root, cache, state_limit);

  if (cache.find(root)) return *cache.find(root);
  std::vector<int> desc = tvector_descents(root);
  if (desc.empty()) {  // empty core
    return detail::count_from_tvector(root, cache, state_limit);
  }
  std::vector<std::pair<TVector, std::future<std::pair<BigCount, MemoCache>>>> jobs;
  for (int j : desc) {
    TVector child = tvector_left_multiply(root, j);
    jobs.emplace_back(child, std::async(std::launch::async, [child, k, state_limit]() {
                        MemoCache local(k);
                        BigCount r = detail::count_from_tvector(child, local, state_limit);
                        return std::make_pair(std::move(r), std::move(local));
                      }));
  }
  BigCount sum = 0;
  for (auto& [child, fut] : jobs) {
    auto [value, local] = fut.get();
    sum += value;
    cache.merge(local);
  }
  cache.insert(root, sum);
  return sum;
}

/// N(e) = R(w(e)), counted on the staircase of e.
inline BigCount n_of_splitting(const SplittingType& e, MemoCache& cache, int threads = 1,
                               std::uint64_t state_limit = kDefaultStateLimit) {
  return count_reduced_words(staircase(e), e.k(), cache, threads, state_limit);
}

inline void cache_save(const MemoCache& cache, const std::string& path) {
  nlohmann::json entries = nlohmann::json::object();
  for (const auto& [key, value] : cache.entries()) {
    std::ostringstream name;
    for (std::size_t i = 0; i < key.size(); ++i) {
      if (i) name << ',';
      name << key[i];
    }
    entries[name.str()] = value.str();
  }
  nlohmann::json doc{{"version", MemoCache::kVersion}, {"k", cache.k()}, {"entries", entries}};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open cache file for writing: " + path);
  out << doc.dump() << '\n';
}

inline MemoCache cache_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cache file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& ex) {
    throw std::invalid_argument(std::string("cache file is not valid JSON: ") + ex.what());
  }
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != MemoCache::kVersion)
    throw std::invalid_argument("cache version mismatch");
  if (!doc.contains("k") || !doc["k"].is_number_integer())
    throw std::invalid_argument("cache is missing k");
  MemoCache cache(doc["k"].get<int>());
  int k = cache.k();
  for (const auto& [name, value] : doc.at("entries").items()) {
    TVector t;
    std::istringstream keys(name);
    std::string tok;
    while (std::getline(keys, tok, ',')) t.push_back(std::stoll(tok));
    if (static_cast<int>(t.size()) != k || !valid_tvector(t))
      throw std::invalid_argument("corrupted cache key: " + name);
    if (!value.is_string()) throw std::invalid_argument("corrupted cache value for " + name);
    const std::string& digits = value.get_ref<const std::string&>();
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("corrupted cache value for " + name);
    cache.insert(t, BigCount(digits));
  }
  cache.reset_counter();
  return cache;
}

}  // namespace bnk
