#include "qtor/modes.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace qtor {

Expr gen(const CtxPtr& ctx, Family f, int node, int mode) {
  GeneratorSymbol g{f, (int16_t)node, mode};
  return Expr::generator(ctx, g);
}

Expr gen_pow(const CtxPtr& ctx, Family f, int node, int exp) {
  if (exp == 0) return Expr::unit(ctx);
  Family use = f;
  if (exp < 0) use = family_inverse(f);
  Word w;
  for (int i = 0; i < std::abs(exp); ++i)
    w.push_back(GeneratorSymbol{use, (int16_t)node, 0});
  return Expr::term(ctx, std::move(w), Scalar(1));
}

const std::vector<std::vector<int>>& partitions_of(int n) {
  static std::map<int, std::vector<std::vector<int>>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest, int maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(rec, n, n);
  return cache.emplace(n, std::move(out)).first->second;
}

namespace {

struct CartanFams {
  Family grp, grp_inv, mode, cent, cent_inv;
  Family raise, lower;
};

CartanFams cartan_fams(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::Toroidal:
      return {Family::gen_K, Family::gen_K_inv, Family::gen_H, Family::gen_C,
              Family::gen_C_inv, Family::gen_E, Family::gen_F};
    case AlgebraKind::SlCurrent:
      return {Family::gen_k, Family::gen_k_inv, Family::gen_h, Family::gen_c,
              Family::gen_c_inv, Family::gen_xp, Family::gen_xm};
    case AlgebraKind::GlCurrent:
      return {Family::gen_phi, Family::gen_phi_inv, Family::gen_phim,
              Family::gen_glc, Family::gen_glc_inv, Family::gen_glxp,
              Family::gen_glxm};
    default:
      throw std::domain_error("no Cartan currents in the Chevalley realization");
  }
}

mpz_class factorial(int n) {
  mpz_class r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Scalar scalar_int_pow(const Scalar& s, int e) {
  if (e == 0) return Scalar(1);
  Scalar base = e > 0 ? s : s.inverse();
  Scalar r(1);
  for (int i = 0; i < std::abs(e); ++i) r = r * base;
  return r;
}

}  // namespace

Expr cartan_current_mode(const CtxPtr& ctx, int node, int sign, int t,
                         int group_exp, const Scalar& arg_scale, int arg_cpow) {
  CartanFams F = cartan_fams(ctx->kind);
  // (q - q^-1), with the context's parameter orientation applied
  Scalar qdiff = (Scalar::q() - Scalar::q_pow(-1)).oriented(ctx->orient);
  if (sign != 1 && sign != -1) throw std::domain_error("sign must be +-1");
  if (sign == 1 && t < 0) return Expr::zero(ctx);
  if (sign == -1 && t > 0) return Expr::zero(ctx);
  Expr group = gen_pow(ctx, F.grp, node, sign * group_exp);
  int tau = std::abs(t);
  if (tau == 0) return group;
  Expr acc = Expr::zero(ctx);
  for (auto& lam : partitions_of(tau)) {
    // per-part factor: sign * e * (q - q^-1) * scale^{-sign*part}, C^{-sign*cpow*part}
    Scalar coef(1);
    Word hpart;
    std::map<int, int> mult;
    for (int p : lam) {
      coef = coef * Scalar(sign) * Scalar(group_exp) * qdiff *
             scalar_int_pow(arg_scale, -sign * p);
      hpart.push_back(GeneratorSymbol{F.mode, (int16_t)node, sign * p});
      mult[p]++;
    }
    for (auto& [p, m] : mult) coef = coef / Scalar(Poly::integer(factorial(m)), Poly::integer(1));
    Expr term = Expr::term(ctx, std::move(hpart), coef);
    acc = acc + term;
  }
  // central powers from the argument scaling: C^{-sign*cpow*tau}
  Expr cent = gen_pow(ctx, F.cent, 0, -sign * arg_cpow * tau);
  return cent * group * acc;
}

Expr cartan_mode_ladder(const CtxPtr& ctx, int node, int r) {
  if (r == 0) throw std::domain_error("ladder mode must be nonzero");
  CartanFams F = cartan_fams(ctx->kind);
  if (ctx->kind == AlgebraKind::GlCurrent)
    throw std::domain_error("no ladder for the gl Cartan currents");
  Scalar qdiff = (Scalar::q() - Scalar::q_pow(-1)).oriented(ctx->orient);
  Expr raise_r = gen(ctx, F.raise, node, r);
  Expr lower_0 = gen(ctx, F.lower, node, 0);
  Expr bracket = super_bracket(raise_r, lower_0, Scalar(1));
  Expr acc;
  if (r > 0) {
    // H_{i,r} = K_i^{-1} C^{-r} [E_{i,r}, F_{i,0}] - sum over partitions with
    // at least two parts of (q-q^-1)^{l-1}/prod(m!) * prod H_{i,part}
    acc = gen_pow(ctx, F.grp, node, -1) * gen_pow(ctx, F.cent, 0, -r) * bracket;
    for (auto& lam : partitions_of(r)) {
      if (lam.size() < 2) continue;
      Scalar coef = scalar_int_pow(qdiff, (int)lam.size() - 1);
      std::map<int, int> mult;
      Expr prod = Expr::unit(ctx);
      for (int p : lam) {
        prod = prod * cartan_mode_ladder(ctx, node, p);
        mult[p]++;
      }
      for (auto& [p, m] : mult)
        coef = coef / Scalar(Poly::integer(factorial(m)), Poly::integer(1));
      acc = acc - prod.scaled(coef);
    }
  } else {
    // H_{i,-tau} = K_i [E_{i,-tau}, F_{i,0}] + sum_{l>=2} (-1)^l (q-q^-1)^{l-1}...
    int tau = -r;
    acc = gen_pow(ctx, F.grp, node, 1) * bracket;
    for (auto& lam : partitions_of(tau)) {
      if (lam.size() < 2) continue;
      Scalar coef = scalar_int_pow(qdiff, (int)lam.size() - 1);
      if (lam.size() % 2 == 1) coef = -coef;
      std::map<int, int> mult;
      Expr prod = Expr::unit(ctx);
      for (int p : lam) {
        prod = prod * cartan_mode_ladder(ctx, node, -p);
        mult[p]++;
      }
      for (auto& [p, m] : mult)
        coef = coef / Scalar(Poly::integer(factorial(m)), Poly::integer(1));
      acc = acc + prod.scaled(coef);
    }
  }
  return acc;
}

std::vector<GeneratorSymbol> algebra_generators(const AlgebraCtx& ctx, int R) {
  std::vector<GeneratorSymbol> out;
  int N = ctx.N();
  auto push = [&out](Family f, int node, int mode = 0) {
    out.push_back(GeneratorSymbol{f, (int16_t)node, mode});
  };
  switch (ctx.kind) {
    case AlgebraKind::SlChevalley:
      for (int i = 0; i < N; ++i) {
        push(Family::gen_e, i);
        push(Family::gen_f, i);
        push(Family::gen_t, i);
        push(Family::gen_t_inv, i);
      }
      break;
    case AlgebraKind::SlCurrent:
      for (int i = 1; i <= N - 1; ++i) {
        for (int r = -R; r <= R; ++r) {
          push(Family::gen_xp, i, r);
          push(Family::gen_xm, i, r);
          if (r != 0) push(Family::gen_h, i, r);
        }
        push(Family::gen_k, i);
        push(Family::gen_k_inv, i);
      }
      push(Family::gen_c, 0);
      push(Family::gen_c_inv, 0);
      break;
    case AlgebraKind::Toroidal:
      for (int i = 0; i < N; ++i) {
        for (int r = -R; r <= R; ++r) {
          push(Family::gen_E, i, r);
          push(Family::gen_F, i, r);
          if (r != 0) push(Family::gen_H, i, r);
        }
        push(Family::gen_K, i);
        push(Family::gen_K_inv, i);
      }
      push(Family::gen_C, 0);
      push(Family::gen_C_inv, 0);
      break;
    case AlgebraKind::GlCurrent:
      for (int i = 1; i <= N - 1; ++i)
        for (int r = -R; r <= R; ++r) {
          push(Family::gen_glxp, i, r);
          push(Family::gen_glxm, i, r);
        }
      for (int i = 0; i < N; ++i) {
        for (int r = -R; r <= R; ++r)
          if (r != 0) push(Family::gen_phim, i, r);
        push(Family::gen_phi, i);
        push(Family::gen_phi_inv, i);
      }
      push(Family::gen_glc, 0);
      push(Family::gen_glc_inv, 0);
      break;
  }
  return out;
}

}  // namespace qtor
