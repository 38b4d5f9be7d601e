// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Each check is exact; tolerances are zero throughout.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bnk/braid.hpp"
#include "bnk/chain.hpp"
#include "bnk/cli.hpp"
#include "bnk/counting.hpp"

using namespace bnk;

namespace {

int failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string name) : number_(number), name_(std::move(name)) {
    start_ = std::chrono::steady_clock::now();
  }

  void require(bool ok, const std::string& what) {
    if (!ok) problems_.push_back(what);
  }

  ~Criterion() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
    if (problems_.empty()) {
      std::cout << "criterion " << number_ << " [" << name_ << "]: PASS (" << ms << " ms)\n";
    } else {
      ++failures;
      std::cout << "criterion " << number_ << " [" << name_ << "]: FAIL (" << ms << " ms)\n";
      for (const std::string& p : problems_) std::cout << "    " << p << '\n';
    }
  }

 private:
  int number_;
  std::string name_;
  std::vector<std::string> problems_;
  std::chrono::steady_clock::time_point start_;
};

const char* kHeadline =
    "25867977167969459670048709047628541850991022718608668059259099938720";

void criterion1() {
  Criterion c(1, "headline count");
  SplittingType e({2, 7, 18, 18, 28, 28});
  MemoCache cache(6);
  BigCount n = n_of_splitting(e, cache);
  c.require(n.str() == kHeadline, "N(2,7,18,18,28,28) = " + n.str());

  std::ostringstream out, err;
  int code = cli::run({"n", "--e", "2,7,18,18,28,28"}, out, err);
  c.require(code == 0, "cli exit code " + std::to_string(code));
  c.require(out.str() == std::string(kHeadline) + "\n", "cli output mismatch");
}

void criterion2() {
  Criterion c(2, "worked example (-2,0,0,2)");
  SplittingType e({-2, 0, 0, 2});
  c.require(imbalance_u(e) == 7, "u != 7");
  c.require(w_of_splitting(e).values() == std::vector<long long>{-4, 2, 3, 9}, "w mismatch");
  c.require(staircase(e).rows() == Rows{5, 2, 1, 1, 1}, "staircase mismatch");
  MemoCache cache(4);
  c.require(n_of_splitting(e, cache) == 6, "N != 6");

  std::vector<Filling> fillings = enumerate_efficient_fillings(staircase(e), 4, 100);
  c.require(fillings.size() == 6, "enumeration size != 6");
  Word paper{4, 3, 1, 2, 1, 3, 4};
  bool found = false;
  for (const Filling& f : fillings) found = found || f.word() == paper;
  c.require(found, "paper tableau word missing");
  Filling f = word_to_filling(paper, 4);
  BoxMap expected{
      {{1, 1}, 1}, {{1, 2}, 3}, {{1, 3}, 4}, {{1, 4}, 6}, {{1, 5}, 7},
      {{2, 1}, 2}, {{2, 2}, 7}, {{3, 1}, 4}, {{4, 1}, 5}, {{5, 1}, 7},
  };
  c.require(f.boxes() == expected, "paper tableau boxes mismatch");
}

void criterion3() {
  Criterion c(3, "3-staircase [4,2,1,1]");
  std::vector<Filling> two = enumerate_efficient_fillings(Diagram(Rows{4, 2, 1, 1}), 3, 100);
  c.require(two.size() == 2, "count != 2");
  std::set<Word> words;
  for (const Filling& f : two) words.insert(f.word());
  c.require(words == std::set<Word>{{3, 2, 1, 2, 3}, {3, 1, 2, 1, 3}}, "word set mismatch");

  BraidGraph g = braid_graph(Diagram(Rows{4, 2, 1, 1}), 3, 100);
  c.require(g.nodes.size() == 2, "graph nodes != 2");
  c.require(g.edges.size() == 1, "graph edges != 1");
  c.require(!g.edges.empty() && g.edges[0].move == 'S', "edge is not a shuffle");
  c.require(g.connected, "graph not connected");
}

std::vector<SplittingType> scan_types() {
  std::vector<SplittingType> out;
  for (int k = 2; k <= 4; ++k) {
    std::vector<long long> tail(static_cast<std::size_t>(k - 1), 0);
    auto rec = [&](auto&& self, int slot, long long lo) -> void {
      if (slot == k - 1) {
        for (long long shift : {-3LL, 0LL, 2LL}) {
          std::vector<long long> parts{0};
          parts.insert(parts.end(), tail.begin(), tail.end());
          for (long long& p : parts) p += shift;
          out.emplace_back(parts);
        }
        return;
      }
      for (long long v = lo; v <= 5; ++v) {
        tail[static_cast<std::size_t>(slot)] = v;
        self(self, slot + 1, v);
      }
    };
    rec(rec, 0, 0);
  }
  return out;
}

void criterion4() {
  Criterion c(4, "identity scan");
  std::vector<SplittingType> types = scan_types();
  c.require(types.size() == 249, "scan size " + std::to_string(types.size()));
  for (const SplittingType& e : types) {
    int k = e.k();
    long long u = imbalance_u(e);
    Diagram gamma = staircase(e);
    std::ostringstream tag;
    tag << "e=" << join(e.parts());
    if (!is_k_core(gamma, k)) {
      c.require(false, tag.str() + ": staircase not a k-core");
      continue;
    }
    if (u_core(gamma, k) != u) c.require(false, tag.str() + ": u(Gamma) != u(e)");
    AffineWindow w = w_of_splitting(e);
    if (length(w) != u) c.require(false, tag.str() + ": length(w) != u(e)");
    if (window_from_core(gamma, k) != w.values())
      c.require(false, tag.str() + ": window mismatch");
    MemoCache cache(k);
    BigCount r = count_reduced_words(gamma, k, cache);
    if (r <= 10000) {
      std::vector<Filling> all = enumerate_efficient_fillings(gamma, k, 10000);
      if (BigCount(all.size()) != r) c.require(false, tag.str() + ": enumeration != R");
    }
  }
}

void criterion5() {
  Criterion c(5, "truncation property suite");
  for (const SplittingType& e : scan_types()) {
    int k = e.k();
    Diagram gamma = staircase(e);
    MemoCache cache(k);
    if (count_reduced_words(gamma, k, cache) > 10000) continue;
    std::vector<LayerIndex> layers = layer_coordinates(e);
    std::vector<long long> dist = e.distinct_parts();
    std::vector<int> mult = e.multiplicities();
    auto floor_div = [k](long long x) { return x >= 0 ? x / k : -((-x + k - 1) / k); };
    std::ostringstream tag;
    tag << "e=" << join(e.parts());

    for (const Filling& f : enumerate_efficient_fillings(gamma, k, 10000)) {
      Truncations tr(f);
      int g = tr.steps();
      bool ok = true;
      for (int t = 0; t <= g && ok; ++t)
        for (int l = 1; l < k && ok; ++l)
          ok = tr.at(t, l) < tr.at(t, l + 1);  // sorted
      c.require(ok, tag.str() + ": truncations not sorted");

      ok = true;
      for (int l1 = 2; l1 <= k && ok; ++l1)
        for (int l2 = 1; l2 < l1 && ok; ++l2)
          for (int t = 1; t <= g && ok; ++t)
            ok = floor_div(tr.at(t, l1) - tr.at(t, l2)) >=
                 floor_div(tr.at(t - 1, l1) - tr.at(t - 1, l2));
      c.require(ok, tag.str() + ": floor-monotonicity fails");

      ok = true;
      for (int t = 0; t <= g && ok; ++t)
        for (int l1 = 1; l1 <= k && ok; ++l1)
          for (int l2 = 1; l2 < l1 && ok; ++l2)
            if (layers[static_cast<std::size_t>(l1 - 1)].layer ==
                layers[static_cast<std::size_t>(l2 - 1)].layer)
              ok = tr.at(t, l1) - tr.at(t, l2) <= k - 1;
      c.require(ok, tag.str() + ": same-layer bound fails");

      ok = true;
      bool swap_ok = true;
      for (int t = 1; t <= g && ok; ++t) {
        int lminus = 0, lplus = 0;
        for (int l = 1; l <= k; ++l) {
          if (tr.at(t, l) == tr.at(t - 1, l) - 1) lminus = l;
          if (tr.at(t, l) == tr.at(t - 1, l) + 1) lplus = l;
        }
        if (lminus == 0 || lplus == 0) {
          ok = false;
          break;
        }
        if (layers[static_cast<std::size_t>(lminus - 1)].layer >=
            layers[static_cast<std::size_t>(lplus - 1)].layer)
          ok = false;
        long long diff = tr.at(t, lplus) - tr.at(t, lminus);
        if (((diff % k) + k) % k != 1) swap_ok = false;
      }
      c.require(ok, tag.str() + ": j- < j+ fails");
      c.require(swap_ok, tag.str() + ": swap-mod-k fails");

      ok = true;
      for (int l = 1; l <= k && ok; ++l) {
        int j = layers[static_cast<std::size_t>(l - 1)].layer;
        int n = layers[static_cast<std::size_t>(l - 1)].pos;
        long long mj = 0;
        for (int jj = 1; jj <= j; ++jj) mj += mult[static_cast<std::size_t>(jj - 1)];
        ok = tr.at(g, l) == cohomology(e, -dist[static_cast<std::size_t>(j - 1)]).chi - mj + n;
      }
      c.require(ok, tag.str() + ": endpoint formula fails");

      if (g >= 2) {
        RamificationTables rt = ramification_indices(f, e);
        ok = true;
        for (std::size_t i = 0; i < rt.a.size() && ok; ++i)
          for (int l1 = 0; l1 < k && ok; ++l1)
            for (int l2 = 0; l2 < l1 && ok; ++l2) {
              ok = rt.a[i][static_cast<std::size_t>(l2)] < rt.a[i][static_cast<std::size_t>(l1)];
              if (layers[static_cast<std::size_t>(l2)].layer <
                  layers[static_cast<std::size_t>(l1)].layer)
                ok = ok && rt.b[i][static_cast<std::size_t>(l2)] <
                               rt.b[i][static_cast<std::size_t>(l1)];
            }
        c.require(ok, tag.str() + ": a/b layer monotonicity fails");
      }
    }
  }
}

void criterion6() {
  Criterion c(6, "oracle equivalence");
  // every type with parts in [-3,3], k <= 3, u <= 5  (includes (-1,1), (-3,0,0))
  for (int k = 2; k <= 3; ++k) {
    std::vector<long long> parts(static_cast<std::size_t>(k), -3);
    auto rec = [&](auto&& self, int slot, long long lo) -> void {
      if (slot == k) {
        SplittingType e(parts);
        long long u = imbalance_u(e);
        if (u > 5) return;
        std::ostringstream tag;
        tag << "e=" << join(e.parts());
        std::vector<ChainModel> positive = enumerate_positive(e, 1000000);
        std::vector<Filling> fillings =
            enumerate_efficient_fillings(staircase(e), k, 1000000);
        std::vector<ChainModel> expected;
        for (const Filling& f : fillings)
          expected.push_back(model_from_filling(f, e, static_cast<int>(u)));
        std::sort(positive.begin(), positive.end());
        std::sort(expected.begin(), expected.end());
        if (!(positive == expected)) c.require(false, tag.str() + ": model sets differ");
        MemoCache cache(k);
        if (BigCount(positive.size()) != n_of_splitting(e, cache))
          c.require(false, tag.str() + ": size != N(e)");
        return;
      }
      for (long long v = lo; v <= 3; ++v) {
        parts[static_cast<std::size_t>(slot)] = v;
        self(self, slot + 1, v);
      }
    };
    rec(rec, 0, -3);
  }
  // Named values. The spec text asserts N((-3,0,0)) = 2, but the paper's
  // recursion and this oracle independently give 1 (see the decisions ledger);
  // the second classical point lives in the type (-2,-2,1).
  c.require(enumerate_positive(SplittingType({-1, 1}), 100).size() == 1, "N((-1,1)) != 1");
  c.require(enumerate_positive(SplittingType({-3, 0, 0}), 1000).size() == 1,
            "oracle count for (-3,0,0) != 1");
  MemoCache c3(3);
  c.require(n_of_splitting(SplittingType({-3, 0, 0}), c3) == 1, "N((-3,0,0)) != 1");
}

void criterion7() {
  Criterion c(7, "classical cross-checks");
  // genus-4 trigonal W^1_3: the decomposition carries two types whose counts
  // sum to the Kempf/Kleiman-Laksov point count 4! * 1/12 = 2.
  std::vector<SplittingType> types = enumerate_splitting_types(4, 1, 3, 3);
  c.require(types.size() == 2, "decomposition size != 2");
  bool has_a = false, has_b = false;
  BigCount total = 0;
  for (const SplittingType& e : types) {
    has_a = has_a || e.parts() == std::vector<long long>{-3, 0, 0};
    has_b = has_b || e.parts() == std::vector<long long>{-2, -2, 1};
    c.require(imbalance_u(e) == 4, "type not zero-dimensional at g = 4");
    MemoCache cache(3);
    total += n_of_splitting(e, cache);
  }
  c.require(has_a && has_b, "expected types missing");
  ClassCoefficient coeff = bn_class_coefficient(4, 1, 3);
  BigRational points = BigRational(factorial(4)) * coeff.value;
  c.require(points == BigRational(2), "4! * coefficient != 2");
  c.require(total == 2, "sum of N over the decomposition != 2");

  // k = 2: every splitting type counts exactly one word
  for (long long a = -4; a <= 0; ++a)
    for (long long b = a; b <= 4; ++b) {
      MemoCache cache(2);
      if (n_of_splitting(SplittingType({a, b}), cache) != 1) {
        c.require(false, "k=2 type with N != 1");
        return;
      }
    }
}

void criterion8() {
  Criterion c(8, "Pflueger / Jensen-Ranganathan");
  long long checked = 0;
  for (int k = 2; k <= 4; ++k)
    for (long long g = 1; g <= 8; ++g)
      for (long long r = 0; r <= g + 2; ++r)
        for (long long d = 0; d <= 2 * g + 5; ++d) {
          long long rk = rho_k(g, r, d, k);
          if (rk < 0 || rk > g) continue;
          ++checked;
          std::vector<SplittingType> types = enumerate_splitting_types(g, r, d, k);
          if (types.empty()) {
            std::ostringstream tag;
            tag << "(k,g,r,d)=(" << k << ',' << g << ',' << r << ',' << d << ')';
            c.require(false, tag.str() + ": empty decomposition with rho_k in [0,g]");
            continue;
          }
          long long best = g - imbalance_u(types[0]);
          for (const SplittingType& e : types) best = std::max(best, g - imbalance_u(e));
          if (best != rk) {
            std::ostringstream tag;
            tag << "(k,g,r,d)=(" << k << ',' << g << ',' << r << ',' << d << ") max dim "
                << best << " != rho_k " << rk;
            c.require(false, tag.str());
          }
        }
  c.require(checked >= 400, "scan covered only " + std::to_string(checked) + " cases");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (failures == 0)
    std::cout << "all acceptance criteria passed\n";
  else
    std::cout << failures << " criteria failed\n";
  return failures;
}
