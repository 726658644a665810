#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qtor/cartan.hpp"

using namespace qtor;

TEST_CASE("enumerate_parities counts and order") {
  auto p21 = enumerate_parities(2, 1);
  REQUIRE(p21.size() == 3);
  CHECK(p21[0].entries() == std::vector<int>{1, 1, -1});
  CHECK(p21[1].entries() == std::vector<int>{1, -1, 1});
  CHECK(p21[2].entries() == std::vector<int>{-1, 1, 1});
  CHECK(enumerate_parities(3, 1).size() == 4);
  CHECK(enumerate_parities(3, 2).size() == 10);
  CHECK_THROWS(enumerate_parities(2, 2));
  CHECK_THROWS(enumerate_parities(1, 1));
}

TEST_CASE("cartan data for (1,1,-1)") {
  ParitySequence s({1, 1, -1});
  CartanData c = cartan_data(s);
  CHECK(c.a == std::vector<std::vector<int>>{{2, -1}, {-1, 0}});
  CHECK(c.mu == std::vector<int>{-1, -2});
  CHECK(c.node_parity == std::vector<int>{1, 0, 1});
  CHECK(c.a_hat == std::vector<std::vector<int>>{{0, -1, 1}, {-1, 2, -1}, {1, -1, 0}});
  // M matrix: M_{i+1,i} = -M_{i,i+1} = s_{i+1}
  CHECK(c.M(1, 0) == s.s(1));
  CHECK(c.M(0, 1) == -s.s(1));
  CHECK(c.M(2, 1) == s.s(2));
  CHECK(c.M(0, 2) == s.s(3));  // cyclic pair (0 = 3, 2)
  CHECK(c.M(1, 1) == 0);
}

static long long det_of(const std::vector<std::vector<int>>& m) {
  std::vector<std::vector<long long>> w(m.size());
  for (size_t i = 0; i < m.size(); ++i) w[i].assign(m[i].begin(), m[i].end());
  return int_det(w);
}

TEST_CASE("determinant identities for (2,1),(3,1),(3,2)") {
  for (auto [m, n] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
    for (auto& s : enumerate_parities(m, n)) {
      CartanData c = cartan_data(s);
      CHECK(std::abs(det_of(c.a)) == std::abs(m - n));
      CHECK(det_of(c.a_hat) == 0);
      int N = s.size();
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) CHECK(c.A(i, j) == c.B(i, j) - c.B(i + 1, j));
    }
  }
}

TEST_CASE("odd node count is even") {
  for (auto [m, n] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
    for (auto& s : enumerate_parities(m, n)) {
      CartanData c = cartan_data(s);
      int odd = 0;
      for (int x : c.node_parity) odd += x;
      CHECK(odd % 2 == 0);
      CHECK(odd > 0);  // m,n > 0 here
    }
  }
}

TEST_CASE("permutation action") {
  ParitySequence s({1, -1, 1});
  auto s1 = Permutation::transposition(3, 1, 2);
  CHECK(s.acted(s1).entries() == std::vector<int>{-1, 1, 1});
  ParitySequence t({1, 1, -1});
  CHECK(t.rotated().entries() == std::vector<int>{-1, 1, 1});
  CHECK(t.acted(Permutation::identity(3)) == t);

  // left action on random pairs
  std::mt19937_64 rng(5);
  for (int t2 = 0; t2 < 100; ++t2) {
    int N = 4;
    auto rp = [&]() {
      Permutation p = Permutation::identity(N);
      for (int k = 0; k < 5; ++k) {
        int a = 1 + (int)(rng() % N), b = 1 + (int)(rng() % N);
        if (a != b) p = p * Permutation::transposition(N, a, b);
      }
      return p;
    };
    Permutation g = rp(), h = rp();
    ParitySequence x = enumerate_parities(3, 1)[rng() % 4];
    CHECK(x.acted(g * h) == x.acted(h).acted(g));
  }
}

TEST_CASE("omega partner has matched Cartan transport") {
  for (auto [m, n] : {std::pair{2, 1}, {3, 1}, {3, 2}}) {
    for (auto& s : enumerate_parities(m, n)) {
      CartanData c = cartan_data(s);
      ParitySequence sp = s.omega_partner();
      CartanData cp = cartan_data(sp);
      int N = s.size();
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          CHECK(cp.A(m - i, m - j) == c.A(i, j));
          CHECK(cp.M(m - i, m - j) == -c.M(i, j));
          CHECK(cp.parity_of_node(m - i) == c.parity_of_node(i));
        }
    }
  }
}

TEST_CASE("gt_hat identification") {
  CHECK(gt_hat(0, 1, 4));   // 0 counts as N
  CHECK(gt_hat(0, 3, 4));
  CHECK_FALSE(gt_hat(1, 0, 4));
  CHECK_FALSE(gt_hat(2, 2, 4));
  CHECK(gt_hat(3, 2, 4));
}

TEST_CASE("json rendering") {
  CartanData c = cartan_data(ParitySequence({1, 1, -1}));
  std::string j = c.json();
  CHECK(j.find("\"s\":[1,1,-1]") != std::string::npos);
  CHECK(j.find("\"A\":[[2,-1],[-1,0]]") != std::string::npos);
  CHECK(j.find("\"mu\":[-1,-2]") != std::string::npos);
}
