#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bnk/affine.hpp"

using namespace bnk;

namespace {

AffineWindow random_window(std::mt19937& rng, int k, int steps) {
  std::uniform_int_distribution<int> jj(1, k);
  AffineWindow w = AffineWindow::identity(k);
  for (int i = 0; i < steps; ++i) w = left_multiply_generator(w, jj(rng));
  return w;
}

/// Literal inversion count with a truncation bound, as a cross-check of the
/// closed form used by length().
long long brute_length(const AffineWindow& w) {
  int k = w.k();
  long long spread = 0;
  for (long long a : w.values())
    for (long long b : w.values()) spread = std::max(spread, a - b);
  long long bound = k + k * ((spread + k - 1) / k + 1);
  long long count = 0;
  for (long long i = 1; i <= k; ++i)
    for (long long j = i + 1; j <= i + bound; ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

}  // namespace

TEST_CASE("periodic evaluation") {
  CHECK(AffineWindow::identity(4)(7) == 7);
  AffineWindow w(4, {-4, 2, 3, 9});
  CHECK(w(1) == -4);
  CHECK(w(5) == 0);
  CHECK(w(-3) == -8);
  CHECK(w(4) == 9);
}

TEST_CASE("window invariants are enforced") {
  CHECK_THROWS_AS(AffineWindow(4, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(AffineWindow(4, {1, 5, 3, 4}), std::invalid_argument);   // repeat mod 4
  CHECK_THROWS_AS(AffineWindow(4, {0, 2, 3, 4}), std::invalid_argument);   // bad sum
  CHECK_THROWS_AS(AffineWindow(1, {1}), std::invalid_argument);
}

TEST_CASE("left multiplication by generators") {
  AffineWindow id4 = AffineWindow::identity(4);
  CHECK(left_multiply_generator(id4, 4).values() == std::vector<long long>{0, 2, 3, 5});
  CHECK(left_multiply_generator(id4, kIdentityLetter) == id4);

  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    AffineWindow w = random_window(rng, 4, 9);
    for (int j = 1; j <= 4; ++j)
      CHECK(left_multiply_generator(left_multiply_generator(w, j), j) == w);
  }
}

TEST_CASE("length") {
  CHECK(length(AffineWindow::identity(5)) == 0);
  CHECK(length(AffineWindow(4, {-4, 2, 3, 9})) == 7);
  CHECK(length(AffineWindow(3, {-1, 0, 7})) == 4);
}

TEST_CASE("length closed form matches literal inversion count") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> kk(2, 6);
  for (int trial = 0; trial < 120; ++trial) {
    int k = kk(rng);
    AffineWindow w = random_window(rng, k, 14);
    CHECK(length(w) == brute_length(w));
  }
}

TEST_CASE("descents") {
  CHECK(descents(AffineWindow::identity(4)).empty());
  CHECK(descents(AffineWindow(4, {-4, 2, 3, 9})) == std::vector<int>{4});

  // sorted windows: descents are the removable-corner residues of the core
  AffineWindow w(3, {-1, 0, 7});
  std::vector<int> expected;
  Diagram core = core_from_window(w.values());
  for (const Corner& c : removable_corners(core)) {
    int r = residue(c.col - c.row, 3);
    if (std::find(expected.begin(), expected.end(), r) == expected.end()) expected.push_back(r);
  }
  std::sort(expected.begin(), expected.end());
  CHECK(descents(w) == expected);
}

TEST_CASE("w of a splitting type") {
  CHECK(w_of_splitting(SplittingType({-2, 0, 0, 2})).values() ==
        std::vector<long long>{-4, 2, 3, 9});
  CHECK(w_of_splitting(SplittingType({0, 0, 0, 0})) == AffineWindow::identity(4));
  CHECK(w_of_splitting(SplittingType({-3, 0, 0})).values() == std::vector<long long>{-1, 0, 7});
  CHECK(w_of_splitting(SplittingType({2, 7, 18, 18, 28, 28})).values() ==
        std::vector<long long>{-62, -61, -4, -3, 61, 90});
}

TEST_CASE("braid relations hold operationally") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> kk(3, 6);
  for (int trial = 0; trial < 60; ++trial) {
    int k = kk(rng);
    AffineWindow w = random_window(rng, k, 10);
    for (int j = 1; j <= k; ++j)
      for (int jp = 1; jp <= k; ++jp) {
        int diff = ((j - jp) % k + k) % k;
        if (diff == 0 || diff == 1 || diff == k - 1) continue;
        CHECK(left_multiply_generator(left_multiply_generator(w, j), jp) ==
              left_multiply_generator(left_multiply_generator(w, jp), j));
      }
    for (int j = 1; j <= k; ++j) {
      int jn = j % k + 1;
      AffineWindow lhs = w;
      for (int rep = 0; rep < 3; ++rep) {
        lhs = left_multiply_generator(lhs, j);
        lhs = left_multiply_generator(lhs, jn);
      }
      CHECK(lhs == w);
    }
  }
}

TEST_CASE("length changes by one under shortening generators") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    AffineWindow w = random_window(rng, 5, 12);
    long long len = length(w);
    for (int j = 1; j <= 5; ++j) {
      long long moved = length(left_multiply_generator(w, j));
      CHECK((moved == len + 1 || moved == len - 1));
    }
  }
}
