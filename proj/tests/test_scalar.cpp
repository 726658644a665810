#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qtor/scalar.hpp"

using namespace qtor;

TEST_CASE("field arithmetic basics") {
  Scalar q = Scalar::q();
  CHECK((q * q.inverse()).is_one());
  CHECK((Scalar::q1() * Scalar::q2() * Scalar::q3()).is_one());
  Scalar qmq = q - q.inverse();
  CHECK((qmq / qmq).is_one());
  CHECK_THROWS(q / Scalar(0));
}

TEST_CASE("qint oracle: polynomial division of q^k - q^-k by q - q^-1") {
  // independent oracle: (q^k - q^{-k}) / (q - q^{-1}) computed as a Scalar
  auto oracle = [](long k) {
    return (Scalar::q_pow(k) - Scalar::q_pow(-k)) / (Scalar::q() - Scalar::q_pow(-1));
  };
  for (long k = -6; k <= 6; ++k) CHECK(Scalar::qint(k) == oracle(k));
  CHECK(Scalar::qint(0).is_zero());
  CHECK(Scalar::qint(1).is_one());
  CHECK(Scalar::qint(2) == Scalar::q() + Scalar::q_pow(-1));
  // frozen: [-3] = -(q^2 + 1 + q^-2)
  CHECK(Scalar::qint(-3) ==
        -(Scalar::q_pow(2) + Scalar(1) + Scalar::q_pow(-2)));
}

TEST_CASE("qint recurrence and antisymmetry") {
  for (long k = -6; k <= 6; ++k) {
    CHECK(Scalar::qint(k + 1) == Scalar::q() * Scalar::qint(k) + Scalar::q_pow(-k));
    CHECK(Scalar::qint(-k) == -Scalar::qint(k));
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(42);
  auto rnd = [&]() {
    Scalar s = Scalar::integer((long)(rng() % 7) - 3);
    s = s + Scalar::q_pow((int)(rng() % 5) - 2);
    s = s * Scalar::d_pow((int)(rng() % 3) - 1);
    if (rng() & 1) s = s + Scalar::qint((long)(rng() % 4));
    return s;
  };
  for (int t = 0; t < 50; ++t) {
    Scalar a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
  }
}

TEST_CASE("probabilistic equal") {
  Scalar a = Scalar::q1() * Scalar::q2() * Scalar::q3();
  CHECK(Scalar::probabilistic_equal(a, Scalar(1), 4));
  CHECK(Scalar::probabilistic_equal(a, a, 1));
  // [2] != q^2
  CHECK_FALSE(Scalar::probabilistic_equal(Scalar::qint(2), Scalar::q_pow(2), 4));
}

TEST_CASE("probabilistic equal agrees with exact on random pairs") {
  std::mt19937_64 rng(7);
  std::vector<Scalar> pool = {Scalar::q1(),    Scalar::q2(),      Scalar::q3(),
                              Scalar::qint(2), Scalar::qint(3),   Scalar::qint(-2),
                              Scalar(1),       Scalar::q_pow(-1), Scalar::d()};
  for (int t = 0; t < 1000; ++t) {
    Scalar a = pool[rng() % pool.size()], b = pool[rng() % pool.size()];
    if (rng() & 1) a = a + pool[rng() % pool.size()];
    if (rng() & 1) b = b * pool[rng() % pool.size()];
    bool exact = (a == b);
    bool prob = Scalar::probabilistic_equal(a, b, 3, rng());
    if (exact) CHECK(prob);       // never a false "different"
    if (!prob) CHECK_FALSE(exact);
  }
}

TEST_CASE("orientation substitutions") {
  // q -> 1/q sends [k] to [k] up to nothing: [k] is symmetric under q->1/q
  Orientation oq{true, false};
  CHECK(Scalar::qint(3).oriented(oq) == -Scalar::qint(-3));
  CHECK(Scalar::q().oriented(oq) == Scalar::q_pow(-1));
  Orientation od{false, true};
  CHECK(Scalar::q1().oriented(od) == Scalar::q3());
  CHECK(Scalar::q1().oriented(od).oriented(od) == Scalar::q1());
  // u untouched
  CHECK(Scalar::u_pow(2).oriented(oq) == Scalar::u_pow(2));
}

TEST_CASE("canonical text") {
  CHECK(Scalar::q().str() == "hq^2");
  CHECK((Scalar::q() - Scalar::q_pow(-1)).str() == "(hq^4 - 1)/hq^2");
}
