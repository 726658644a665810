#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qtor/rewrite.hpp"

using namespace qtor;

static CtxPtr tor21() {
  return make_ctx(AlgebraKind::Toroidal, ParitySequence({1, 1, -1}));
}

TEST_CASE("structural cleanup") {
  auto ctx = tor21();
  RewriteSystem sys = RewriteSystem::build(ctx, {});
  // t t^-1 -> 1 and C to the front
  Expr x = gen(ctx, Family::gen_E, 1, 0) * gen_pow(ctx, Family::gen_C, 0, 1) *
           gen_pow(ctx, Family::gen_K, 1, 1) * gen_pow(ctx, Family::gen_K, 1, -1);
  Expr n = sys.structural(x);
  REQUIRE(n.size() == 1);
  CHECK(n.leading_word().size() == 2);
  CHECK(n.leading_word()[0].fam == Family::gen_C);
  CHECK(n.leading_word()[1].fam == Family::gen_E);
  // K_2 K_1 -> K_1 K_2
  Expr y = gen_pow(ctx, Family::gen_K, 2, 1) * gen_pow(ctx, Family::gen_K, 1, 1);
  CHECK(sys.structural(y).leading_word()[0].node == 1);
  // C C^-1 -> 1
  Expr z = gen_pow(ctx, Family::gen_C, 0, 1) * gen_pow(ctx, Family::gen_C, 0, -1);
  CHECK(sys.structural(z).leading_word().empty());
}

TEST_CASE("rules orient and self-reduce") {
  auto ctx = tor21();
  Cutoffs cut{1, 0, 0};
  auto insts = enumerate_instances(ctx, cut);
  RewriteSystem sys = RewriteSystem::build(ctx, insts);
  CHECK(sys.non_orientable().empty());
  CHECK(sys.rule_count() > 100);
  // every instance normalizes to zero under the system built from it
  int checked = 0;
  for (auto& inst : insts) {
    if (checked++ % 7) continue;  // sample for speed
    INFO(inst.id);
    auto out = sys.normalize(inst.expr, 20000);
    CHECK(out.status == Verdict::Zero);
  }
}

TEST_CASE("single generators are normal forms") {
  auto ctx = tor21();
  Cutoffs cut{1, 0, 0};
  RewriteSystem sys = RewriteSystem::build(ctx, enumerate_instances(ctx, cut));
  for (auto& g : algebra_generators(*ctx, 1)) {
    auto out = sys.normalize(Expr::generator(ctx, g), 1000);
    CHECK(out.status == Verdict::NonzeroNormal);
    CHECK(out.steps == 0);
    CHECK((out.result - Expr::generator(ctx, g)).is_zero());
  }
  CHECK(sys.is_zero(Expr::zero(ctx), 10) == Verdict::Zero);
  // scalar multiple of a rule reduces
  auto inst = instantiate(ctx, "tor.EF", {1, 1}, {1, 0});
  CHECK(sys.is_zero(inst.scaled(Scalar::q() - Scalar::q_pow(-1)), 10000) ==
        Verdict::Zero);
}

TEST_CASE("normalization preserves parity and grading") {
  auto ctx = tor21();
  Cutoffs cut{1, 0, 0};
  RewriteSystem sys = RewriteSystem::build(ctx, enumerate_instances(ctx, cut));
  Expr x = gen(ctx, Family::gen_E, 1, 1) * gen(ctx, Family::gen_F, 1, 0) *
           gen(ctx, Family::gen_E, 0, 0);
  auto g0 = x.grading();
  auto out = sys.normalize(x, 100000);
  REQUIRE(out.status != Verdict::Inconclusive);
  auto g1 = out.result.grading();
  REQUIRE(g0.has_value());
  REQUIRE(g1.has_value());
  CHECK(*g0 == *g1);
  CHECK(*x.parity() == *out.result.parity());
}

TEST_CASE("budget exhaustion reports Inconclusive") {
  auto ctx = tor21();
  Cutoffs cut{1, 0, 0};
  RewriteSystem sys = RewriteSystem::build(ctx, enumerate_instances(ctx, cut));
  Expr x = gen(ctx, Family::gen_E, 1, 1) * gen(ctx, Family::gen_F, 1, 1) *
           gen(ctx, Family::gen_E, 1, -1) * gen(ctx, Family::gen_F, 1, -1);
  auto out = sys.normalize(x, 1);
  CHECK(out.status == Verdict::Inconclusive);
  CHECK(out.steps == 1);
}

TEST_CASE("determinism") {
  auto ctx = tor21();
  Cutoffs cut{1, 0, 0};
  RewriteSystem sys = RewriteSystem::build(ctx, enumerate_instances(ctx, cut));
  Expr x = gen(ctx, Family::gen_E, 1, 1) * gen(ctx, Family::gen_F, 1, 0) *
           gen(ctx, Family::gen_E, 2, 0) * gen(ctx, Family::gen_F, 2, 1);
  auto a = sys.normalize(x, 100000);
  auto b = sys.normalize(x, 100000);
  CHECK(a.steps == b.steps);
  CHECK((a.result - b.result).is_zero());
  CHECK(a.result.str() == b.result.str());
}

TEST_CASE("centrality of K = K_0 K_1 K_2 against generators") {
  auto ctx = tor21();
  Cutoffs cut{2, 1, 0};
  RewriteSystem sys = RewriteSystem::build(ctx, enumerate_instances(ctx, cut));
  Expr K = gen_pow(ctx, Family::gen_K, 0, 1) * gen_pow(ctx, Family::gen_K, 1, 1) *
           gen_pow(ctx, Family::gen_K, 2, 1);
  for (auto& g : algebra_generators(*ctx, 1)) {
    Expr x = Expr::generator(ctx, g);
    INFO(g.str());
    CHECK(sys.is_zero(K * x - x * K, 10000) == Verdict::Zero);
  }
}

TEST_CASE("cubic Serre at odd nodes follows from quadratic relations") {
  // for A_ii = 0 the cubic Serre expression reduces using the quadratic set only
  auto ctx = make_ctx(AlgebraKind::Toroidal, ParitySequence({1, -1, 1}));
  Cutoffs cut{2, 1, 0};
  std::set<std::string> quad = {"tor.EEA", "tor.EE0", "tor.FFA", "tor.FF0"};
  RewriteSystem sys = RewriteSystem::build(ctx, enumerate_instances(ctx, cut, quad));
  // node 1 has A_{11} = 0 in (1,-1,1); build the cubic expression by hand
  auto E = [&](int i, int r) { return gen(ctx, Family::gen_E, i, r); };
  Expr cubic = weighted_bracket(E(1, 0), weighted_bracket(E(1, 0), E(2, 0)));
  CHECK(sys.is_zero(cubic + cubic, 20000) == Verdict::Zero);
  CHECK(sys.is_zero(cubic, 20000) == Verdict::Zero);
}

TEST_CASE("presentation equivalence probe: HE reduces under the K-form and back") {
  auto ctx = tor21();
  Cutoffs cut{2, 0, 0};
  // K-form system: C/K conjugations + the series-form Cartan block
  std::set<std::string> base = {"tor.ccent",  "tor.ccent_f", "tor.ccent_h",
                                "tor.ccent_k", "tor.KK",      "tor.KE",
                                "tor.KF"};
  auto kform_sys_insts = enumerate_instances(ctx, cut, base);
  auto kf = enumerate_kform(ctx, 3);
  for (auto& i : kf) kform_sys_insts.push_back(i);
  RewriteSystem ksys = RewriteSystem::build(ctx, kform_sys_insts);

  std::set<std::string> hform = {"tor.ccent",  "tor.ccent_f", "tor.ccent_h",
                                 "tor.ccent_k", "tor.KK",      "tor.KE",
                                 "tor.KF",      "tor.HH",      "tor.HE",
                                 "tor.HF"};
  RewriteSystem hsys =
      RewriteSystem::build(ctx, enumerate_instances(ctx, Cutoffs{3, 0, 0}, hform));

  // every H-form instance at R=1 reduces under the K-form system
  auto hinst = enumerate_instances(ctx, Cutoffs{1, 0, 0},
                                   {"tor.HH", "tor.HE", "tor.HF"});
  for (auto& i : hinst) {
    INFO(i.id);
    CHECK(is_zero_mod_units(ksys, i.expr, 50000) == Verdict::Zero);
  }
  // and the K-form instances at R=1 reduce under the H-form system
  for (auto& i : enumerate_kform(ctx, 1)) {
    INFO(i.id);
    CHECK(hsys.is_zero(i.expr, 50000) == Verdict::Zero);
  }
}

TEST_CASE("nf cache consistency") {
  auto ctx = tor21();
  Cutoffs cut{1, 0, 0};
  RewriteSystem sys = RewriteSystem::build(ctx, enumerate_instances(ctx, cut));
  clear_nf_cache();
  Expr x = gen(ctx, Family::gen_E, 1, 1) * gen(ctx, Family::gen_F, 1, 0);
  auto a = normalize_cached(sys, x, 10000);
  auto b = normalize_cached(sys, x, 10000);
  CHECK(a.status == b.status);
  CHECK((a.result - b.result).is_zero());
}
