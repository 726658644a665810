#include "qtor/presentations.hpp"

#include <sstream>
#include <stdexcept>

namespace qtor {

std::string Cutoffs::str() const {
  std::ostringstream os;
  os << "R=" << R << ",Rc=" << R_cubic << ",Rq=" << R_quartic;
  return os.str();
}

namespace {

using Emit = std::function<void(const std::string& tid, const std::string& args,
                                Expr expr)>;

std::string argstr(std::initializer_list<std::pair<const char*, int>> kv) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (auto& [k, v] : kv) {
    if (!first) os << ",";
    first = false;
    os << k << "=" << v;
  }
  os << "]";
  return os.str();
}

// ---- oriented scalar shorthands --------------------------------------------

struct Sc {
  Orientation o;
  Scalar q(int k) const { return Scalar::q_pow(k).oriented(o); }
  Scalar d(int k) const { return Scalar::d_pow(k).oriented(o); }
  Scalar qd() const { return (Scalar::q() - Scalar::q_pow(-1)).oriented(o); }
  Scalar qint(long k) const { return Scalar::qint(k).oriented(o); }
  /// [r*A]/r, exact.
  Scalar qint_over(int rA, int r) const { return qint(rA) / Scalar(r); }
};

// ---- generic bivariate series instantiation ---------------------------------

// (az * c^acp) z - (bw * c^bcp) w
struct Binom {
  Scalar az;
  int acp = 0;
  Scalar bw;
  int bcp = 0;
};

struct PrefTerm {
  int zp, wp;
  Scalar coef;
  int cp;
};

std::vector<PrefTerm> expand_prefactor(const std::vector<Binom>& bs) {
  std::vector<PrefTerm> acc{{0, 0, Scalar(1), 0}};
  for (auto& b : bs) {
    std::vector<PrefTerm> nxt;
    for (auto& t : acc) {
      if (!b.az.is_zero())
        nxt.push_back({t.zp + 1, t.wp, t.coef * b.az, t.cp + b.acp});
      if (!b.bw.is_zero())
        nxt.push_back({t.zp, t.wp + 1, t.coef * (-b.bw), t.cp + b.bcp});
    }
    acc = std::move(nxt);
  }
  return acc;
}

using ModeFn = std::function<Expr(int)>;

Expr series_coeff(const CtxPtr& ctx, Family central,
                  const std::vector<PrefTerm>& pref, const ModeFn& fz,
                  const ModeFn& fw, bool z_first, int a, int b) {
  Expr acc = Expr::zero(ctx);
  for (auto& t : pref) {
    Expr cz = fz(a + t.zp);
    if (cz.is_zero()) continue;
    Expr cw = fw(b + t.wp);
    if (cw.is_zero()) continue;
    Expr cent = gen_pow(ctx, central, 0, t.cp);
    Expr prod = z_first ? cent * cz * cw : cent * cw * cz;
    acc = acc + prod.scaled(t.coef);
  }
  return acc;
}

// ---- per-realization emitters ------------------------------------------------

void emit_chevalley(const CtxPtr& ctx, const Cutoffs&, const Emit& emit) {
  const CartanData& cd = ctx->cartan;
  int N = cd.N();
  int mn = cd.s.m() * cd.s.n();
  Sc sc{ctx->orient};
  auto E = [&](int i) { return gen(ctx, Family::gen_e, ((i % N) + N) % N); };
  auto Fg = [&](int i) { return gen(ctx, Family::gen_f, ((i % N) + N) % N); };
  auto T = [&](int i, int e) { return gen_pow(ctx, Family::gen_t, ((i % N) + N) % N, e); };

  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      emit("dj.tt", argstr({{"i", i}, {"j", j}}),
           T(i, 1) * T(j, 1) - T(j, 1) * T(i, 1));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      emit("dj.te", argstr({{"i", i}, {"j", j}}),
           T(i, 1) * E(j) - (E(j) * T(i, 1)).scaled(sc.q(cd.A(i, j))));
      emit("dj.tf", argstr({{"i", i}, {"j", j}}),
           T(i, 1) * Fg(j) - (Fg(j) * T(i, 1)).scaled(sc.q(-cd.A(i, j))));
      Expr ef = super_bracket(E(i), Fg(j), Scalar(1));
      if (i == j) ef = ef - (T(i, 1) - T(i, -1)).scaled(sc.qd().inverse());
      emit("dj.ef", argstr({{"i", i}, {"j", j}}), ef);
    }
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      if (cd.A(i, j) != 0) continue;
      emit("dj.ee0", argstr({{"i", i}, {"j", j}}),
           super_bracket(E(i), E(j), Scalar(1)));
      emit("dj.ff0", argstr({{"i", i}, {"j", j}}),
           super_bracket(Fg(i), Fg(j), Scalar(1)));
    }
  for (int i = 0; i < N; ++i) {
    if (cd.A(i, i) != 0) {
      for (int eps : {1, -1}) {
        emit("dj.serre3e", argstr({{"i", i}, {"eps", eps}}),
             weighted_bracket(E(i), weighted_bracket(E(i), E(i + eps))));
        emit("dj.serre3f", argstr({{"i", i}, {"eps", eps}}),
             weighted_bracket(Fg(i), weighted_bracket(Fg(i), Fg(i + eps))));
      }
      if (mn == 2) {
        auto quint = [&](auto g, int ii) {
          Expr lhs = weighted_bracket(
              g(ii + 1), weighted_bracket(
                             g(ii - 1), weighted_bracket(
                                            g(ii + 1), weighted_bracket(
                                                           g(ii - 1), g(ii)))));
          Expr rhs = weighted_bracket(
              g(ii - 1), weighted_bracket(
                             g(ii + 1), weighted_bracket(
                                            g(ii - 1), weighted_bracket(
                                                           g(ii + 1), g(ii)))));
          return lhs - rhs;
        };
        emit("dj.serre5e", argstr({{"i", i}}), quint(E, i));
        emit("dj.serre5f", argstr({{"i", i}}), quint(Fg, i));
      }
    } else if (mn != 2) {
      emit("dj.serre4e", argstr({{"i", i}}),
           weighted_bracket(
               E(i), weighted_bracket(E(i + 1),
                                      weighted_bracket(E(i), E(i - 1)))));
      emit("dj.serre4f", argstr({{"i", i}}),
           weighted_bracket(
               Fg(i), weighted_bracket(Fg(i + 1),
                                       weighted_bracket(Fg(i), Fg(i - 1)))));
    }
  }
}

// Shared by the sl-current and toroidal realizations; the toroidal twist is
// the d^{M} matrix and the affine node range.
struct CurrentFams {
  Family xp, xm, h, k, cent;
  bool toroidal;
};

void emit_current_like(const CtxPtr& ctx, const Cutoffs& cut, const Emit& emit,
                       const CurrentFams& F, const std::string& px) {
  const CartanData& cd = ctx->cartan;
  int N = cd.N();
  int R = cut.R;
  Sc sc{ctx->orient};
  int lo = F.toroidal ? 0 : 1;
  int hi = N - 1;
  auto node = [&](int i) {
    if (!F.toroidal) return i;  // finite: caller stays in range
    return ((i % N) + N) % N;
  };
  auto XP = [&](int i, int r) { return gen(ctx, F.xp, node(i), r); };
  auto XM = [&](int i, int r) { return gen(ctx, F.xm, node(i), r); };
  auto Hm = [&](int i, int r) { return gen(ctx, F.h, node(i), r); };
  auto Kp = [&](int i, int e) { return gen_pow(ctx, F.k, node(i), e); };
  auto Cp = [&](int e) { return gen_pow(ctx, F.cent, 0, e); };
  auto dM = [&](int i, int j, int r) {
    return F.toroidal ? sc.d(-r * cd.M(i, j)) : Scalar(1);
  };

  // centrality of c/C against every generator family
  for (int i = lo; i <= hi; ++i) {
    for (int r = -R; r <= R; ++r) {
      emit(px + ".ccent", argstr({{"i", i}, {"r", r}}),
           Cp(1) * XP(i, r) - XP(i, r) * Cp(1));
      emit(px + ".ccent_f", argstr({{"i", i}, {"r", r}}),
           Cp(1) * XM(i, r) - XM(i, r) * Cp(1));
      if (r != 0)
        emit(px + ".ccent_h", argstr({{"i", i}, {"r", r}}),
             Cp(1) * Hm(i, r) - Hm(i, r) * Cp(1));
    }
    emit(px + ".ccent_k", argstr({{"i", i}}), Cp(1) * Kp(i, 1) - Kp(i, 1) * Cp(1));
  }
  // k_i k_j commute
  for (int i = lo; i <= hi; ++i)
    for (int j = i + 1; j <= hi; ++j)
      emit(px + ".kk", argstr({{"i", i}, {"j", j}}),
           Kp(i, 1) * Kp(j, 1) - Kp(j, 1) * Kp(i, 1));
  // k conjugation
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j)
      for (int r = -R; r <= R; ++r) {
        emit(px + ".kxp", argstr({{"i", i}, {"j", j}, {"r", r}}),
             Kp(i, 1) * XP(j, r) - (XP(j, r) * Kp(i, 1)).scaled(sc.q(cd.A(i, j))));
        emit(px + ".kxm", argstr({{"i", i}, {"j", j}, {"r", r}}),
             Kp(i, 1) * XM(j, r) - (XM(j, r) * Kp(i, 1)).scaled(sc.q(-cd.A(i, j))));
      }
  // h-h
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j)
      for (int r = -R; r <= R; ++r)
        for (int s = -R; s <= R; ++s) {
          if (r == 0 || s == 0) continue;
          if (i == j && r > s) continue;  // symmetric in (i,r)<->(j,s)
          if (i > j) continue;
          Expr rel = Hm(i, r) * Hm(j, s) - Hm(j, s) * Hm(i, r);
          if (r + s == 0)
            rel = rel - (Cp(r) - Cp(-r)).scaled(sc.qint_over(r * cd.A(i, j), r) *
                                                dM(i, j, r) / sc.qd());
          emit(px + ".hh", argstr({{"i", i}, {"j", j}, {"r", r}, {"s", s}}), rel);
        }
  // h-x
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j)
      for (int r = -R; r <= R; ++r)
        for (int t = -R; t <= R; ++t) {
          if (r == 0) continue;
          Scalar base = sc.qint_over(r * cd.A(i, j), r) * dM(i, j, r);
          emit(px + ".hxp", argstr({{"i", i}, {"j", j}, {"r", r}, {"t", t}}),
               Hm(i, r) * XP(j, t) - XP(j, t) * Hm(i, r) -
                   (Cp(-(r + std::abs(r)) / 2) * XP(j, t + r)).scaled(base));
          emit(px + ".hxm", argstr({{"i", i}, {"j", j}, {"r", r}, {"t", t}}),
               Hm(i, r) * XM(j, t) - XM(j, t) * Hm(i, r) +
                   (Cp(-(r - std::abs(r)) / 2) * XM(j, t + r)).scaled(base));
        }
  // [x+_{i,r}, x-_{j,s}]
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j)
      for (int r = -R; r <= R; ++r)
        for (int s = -R; s <= R; ++s) {
          Expr rel = super_bracket(XP(i, r), XM(j, s), Scalar(1));
          if (i == j) {
            Expr kp = cartan_current_mode(ctx, node(i), +1, r + s);
            Expr km = cartan_current_mode(ctx, node(i), -1, r + s);
            rel = rel - (Cp(r) * kp - Cp(s) * km).scaled(sc.qd().inverse());
          }
          emit(px + ".xpxm", argstr({{"i", i}, {"j", j}, {"r", r}, {"s", s}}), rel);
        }
  // quadratic x-x
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j) {
      int A = cd.A(i, j);
      int sgn = (cd.parity_of_node(i) * cd.parity_of_node(j)) % 2 ? -1 : 1;
      for (int r = -R; r <= R; ++r)
        for (int s = -R; s <= R; ++s) {
          if (i == j && r > s) continue;
          if (A == 0 && i > j) continue;
          if (A == 0) {
            emit(px + ".xxp0", argstr({{"i", i}, {"j", j}, {"r", r}, {"s", s}}),
                 super_bracket(XP(i, r), XP(j, s), Scalar(1)));
            emit(px + ".xxm0", argstr({{"i", i}, {"j", j}, {"r", r}, {"s", s}}),
                 super_bracket(XM(i, r), XM(j, s), Scalar(1)));
            continue;
          }
          if (F.toroidal) {
            // (d^M z - q^A w) E_i(z) E_j(w) - (-1)^{|i||j|} (d^M q^A z - w) E_j(w) E_i(z)
            auto quad = [&](auto X, int Aq) {
              Expr rel = (X(i, r + 1) * X(j, s)).scaled(sc.d(cd.M(i, j))) -
                         (X(i, r) * X(j, s + 1)).scaled(sc.q(Aq));
              Expr rhs = (X(j, s) * X(i, r + 1)).scaled(sc.d(cd.M(i, j)) * sc.q(Aq)) -
                         X(j, s + 1) * X(i, r);
              return rel - rhs.scaled(Scalar(sgn));
            };
            emit(px + ".xxpA", argstr({{"i", i}, {"j", j}, {"r", r}, {"s", s}}),
                 quad(XP, A));
            emit(px + ".xxmA", argstr({{"i", i}, {"j", j}, {"r", r}, {"s", s}}),
                 quad(XM, -A));
          } else {
            // (z - q^A w) x_i(z) x_j(w) + (-1)^{|i||j|} (w - q^A z) x_j(w) x_i(z)
            auto quad = [&](auto X, int Aq) {
              Expr rel = X(i, r + 1) * X(j, s) - (X(i, r) * X(j, s + 1)).scaled(sc.q(Aq));
              Expr sw = X(j, s + 1) * X(i, r) - (X(j, s) * X(i, r + 1)).scaled(sc.q(Aq));
              return rel + sw.scaled(Scalar(sgn));
            };
            emit(px + ".xxpA", argstr({{"i", i}, {"j", j}, {"r", r}, {"s", s}}),
                 quad(XP, A));
            emit(px + ".xxmA", argstr({{"i", i}, {"j", j}, {"r", r}, {"s", s}}),
                 quad(XM, -A));
          }
        }
    }
  // cubic Serre
  int Rc = cut.R_cubic;
  for (int i = lo; i <= hi; ++i) {
    if (cd.A(i, i) == 0) continue;
    for (int eps : {1, -1}) {
      int nb = i + eps;
      if (!F.toroidal && (nb < 1 || nb > N - 1)) continue;
      for (int r1 = -Rc; r1 <= Rc; ++r1)
        for (int r2 = r1; r2 <= Rc; ++r2)
          for (int t = -Rc; t <= Rc; ++t) {
            auto cub = [&](auto X) {
              return weighted_bracket(X(i, r1),
                                      weighted_bracket(X(i, r2), X(nb, t))) +
                     weighted_bracket(X(i, r2),
                                      weighted_bracket(X(i, r1), X(nb, t)));
            };
            emit(px + ".serre3p",
                 argstr({{"i", i}, {"eps", eps}, {"r1", r1}, {"r2", r2}, {"t", t}}),
                 cub(XP));
            emit(px + ".serre3m",
                 argstr({{"i", i}, {"eps", eps}, {"r1", r1}, {"r2", r2}, {"t", t}}),
                 cub(XM));
          }
    }
  }
  // quartic Serre (mn != 2) and quintic Serre (mn = 2, toroidal and DJ only)
  int mn = cd.s.m() * cd.s.n();
  int Rq = cut.R_quartic;
  for (int i = lo; i <= hi; ++i) {
    if (mn != 2 && cd.A(i, i) == 0) {
      if (!F.toroidal && (i - 1 < 1 || i + 1 > N - 1)) continue;
      for (int r1 = -Rq; r1 <= Rq; ++r1)
        for (int r2 = r1; r2 <= Rq; ++r2)
          for (int t1 = -Rq; t1 <= Rq; ++t1)
            for (int t2 = -Rq; t2 <= Rq; ++t2) {
              auto quart = [&](auto X) {
                auto one = [&](int a, int b) {
                  return weighted_bracket(
                      X(i, a),
                      weighted_bracket(
                          X(i + 1, t1),
                          weighted_bracket(X(i, b), X(i - 1, t2))));
                };
                return one(r1, r2) + one(r2, r1);
              };
              emit(px + ".serre4p",
                   argstr({{"i", i}, {"r1", r1}, {"r2", r2}, {"t1", t1}, {"t2", t2}}),
                   quart(XP));
              emit(px + ".serre4m",
                   argstr({{"i", i}, {"r1", r1}, {"r2", r2}, {"t1", t1}, {"t2", t2}}),
                   quart(XM));
            }
    }
    if (F.toroidal && mn == 2 && cd.A(i, i) != 0) {
      for (int r1 = -Rq; r1 <= Rq; ++r1)
        for (int r2 = r1; r2 <= Rq; ++r2)
          for (int t1 = -Rq; t1 <= Rq; ++t1)
            for (int t2 = t1; t2 <= Rq; ++t2)
              for (int y = -Rq; y <= Rq; ++y) {
                auto quint = [&](auto X) {
                  auto one = [&](int a1, int a2, int b1, int b2) {
                    Expr l = weighted_bracket(
                        X(i - 1, a1),
                        weighted_bracket(
                            X(i + 1, b1),
                            weighted_bracket(
                                X(i - 1, a2),
                                weighted_bracket(X(i + 1, b2), X(i, y)))));
                    Expr r = weighted_bracket(
                        X(i + 1, b1),
                        weighted_bracket(
                            X(i - 1, a1),
                            weighted_bracket(
                                X(i + 1, b2),
                                weighted_bracket(X(i - 1, a2), X(i, y)))));
                    return l - r;
                  };
                  return one(r1, r2, t1, t2) + one(r2, r1, t1, t2) +
                         one(r1, r2, t2, t1) + one(r2, r1, t2, t1);
                };
                emit(px + ".serre5p",
                     argstr({{"i", i}, {"r1", r1}, {"r2", r2}, {"t1", t1},
                             {"t2", t2}, {"y", y}}),
                     quint(XP));
                emit(px + ".serre6m",
                     argstr({{"i", i}, {"r1", r1}, {"r2", r2}, {"t1", t1},
                             {"t2", t2}, {"y", y}}),
                     quint(XM));
              }
    }
  }
}

void emit_gl(const CtxPtr& ctx, const Cutoffs& cut, const Emit& emit);

}  // namespace

std::vector<RelationInstance> enumerate_instances(const CtxPtr& ctx,
                                                  const Cutoffs& cut,
                                                  const std::set<std::string>& filter) {
  std::vector<RelationInstance> out;
  Emit emit = [&](const std::string& tid, const std::string& args, Expr e) {
    if (!filter.empty() && !filter.count(tid)) return;
    if (e.is_zero()) return;
    out.push_back(RelationInstance{tid, tid + args, std::move(e)});
  };
  switch (ctx->kind) {
    case AlgebraKind::SlChevalley:
      emit_chevalley(ctx, cut, emit);
      break;
    case AlgebraKind::SlCurrent:
      emit_current_like(ctx, cut, emit,
                        {Family::gen_xp, Family::gen_xm, Family::gen_h,
                         Family::gen_k, Family::gen_c, false},
                        "cur");
      break;
    case AlgebraKind::Toroidal: {
      Emit renamed = [&emit](const std::string& tid, const std::string& args,
                             Expr e) {
        static const std::map<std::string, std::string> ren = {
            {"tor.kxp", "tor.KE"},        {"tor.kxm", "tor.KF"},
            {"tor.hh", "tor.HH"},         {"tor.hxp", "tor.HE"},
            {"tor.hxm", "tor.HF"},        {"tor.xpxm", "tor.EF"},
            {"tor.xxpA", "tor.EEA"},      {"tor.xxmA", "tor.FFA"},
            {"tor.xxp0", "tor.EE0"},      {"tor.xxm0", "tor.FF0"},
            {"tor.kk", "tor.KK"},         {"tor.serre3p", "tor.serre3E"},
            {"tor.serre3m", "tor.serre3F"}, {"tor.serre4p", "tor.serre4E"},
            {"tor.serre4m", "tor.serre4F"}, {"tor.serre5p", "tor.serre5E"},
            {"tor.serre6m", "tor.serre6F"}};
        auto it = ren.find(tid);
        emit(it == ren.end() ? tid : it->second, args, std::move(e));
      };
      emit_current_like(ctx, cut, renamed,
                        {Family::gen_E, Family::gen_F, Family::gen_H,
                         Family::gen_K, Family::gen_C, true},
                        "tor");
      break;
    }
    case AlgebraKind::GlCurrent:
      emit_gl(ctx, cut, emit);
      break;
  }
  return out;
}

namespace {

void emit_kform_inner(const CtxPtr& ctx, int R, const Emit& emit) {
  const CartanData& cd = ctx->cartan;
  int N = cd.N();
  Sc sc{ctx->orient};
  auto kmode = [&](int i, int sign, int cp) {
    return [&ctx, i, sign, cp](int t) {
      return cartan_current_mode(ctx, i, sign, t, 1, Scalar(1), cp);
    };
  };
  auto emode = [&](int j) {
    return [&ctx, j](int t) { return gen(ctx, Family::gen_E, j, t); };
  };
  auto fmode = [&](int j) {
    return [&ctx, j](int t) { return gen(ctx, Family::gen_F, j, t); };
  };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int A = cd.A(i, j), M = cd.M(i, j);
      for (int a = -R; a <= R; ++a)
        for (int b = -R; b <= R; ++b) {
          // kk1, same sign
          for (int sign : {1, -1}) {
            if (i > j || (i == j && a > b)) continue;
            Expr lhs = kmode(i, sign, 0)(a) * kmode(j, sign, 0)(b);
            Expr rhs = kmode(j, sign, 0)(b) * kmode(i, sign, 0)(a);
            emit(sign > 0 ? "tor.kk1p" : "tor.kk1m",
                 argstr({{"i", i}, {"j", j}, {"a", a}, {"b", b}}), lhs - rhs);
          }
        }
      // kk2: (d^M C^-1 z - q^A w)(d^M q^A C z - w) K-_i(z) K+_j(w)
      //    = (d^M q^A C^-1 z - w)(d^M C z - q^A w) K+_j(w) K-_i(z)
      {
        std::vector<Binom> lpre = {{sc.d(M), -1, sc.q(A), 0},
                                   {sc.d(M) * sc.q(A), 1, Scalar(1), 0}};
        std::vector<Binom> rpre = {{sc.d(M) * sc.q(A), -1, Scalar(1), 0},
                                   {sc.d(M), 1, sc.q(A), 0}};
        auto fz = kmode(i, -1, 0);
        auto fw = kmode(j, +1, 0);
        for (int a = -R; a <= R; ++a)
          for (int b = -R; b <= R; ++b) {
            Expr lhs = series_coeff(ctx, Family::gen_C, expand_prefactor(lpre),
                                    fz, fw, true, a, b);
            Expr rhs = series_coeff(ctx, Family::gen_C, expand_prefactor(rpre),
                                    fz, fw, false, a, b);
            emit("tor.kk2", argstr({{"i", i}, {"j", j}, {"a", a}, {"b", b}}),
                 lhs - rhs);
          }
      }
      // ke / kf, both signs
      for (int sign : {1, -1}) {
        int cpk_e = sign > 0 ? -1 : 0;  // K^pm(C^{-(1 pm 1)/2} z) for E
        int cpk_f = sign > 0 ? 0 : -1;  // K^pm(C^{-(1 mp 1)/2} z) for F
        std::vector<Binom> le = {{sc.d(M), 0, sc.q(A), 0}};
        std::vector<Binom> re = {{sc.d(M) * sc.q(A), 0, Scalar(1), 0}};
        std::vector<Binom> lf = {{sc.d(M), 0, sc.q(-A), 0}};
        std::vector<Binom> rf = {{sc.d(M) * sc.q(-A), 0, Scalar(1), 0}};
        for (int a = -R; a <= R; ++a)
          for (int b = -R; b <= R; ++b) {
            Expr lhs = series_coeff(ctx, Family::gen_C, expand_prefactor(le),
                                    kmode(i, sign, cpk_e), emode(j), true, a, b);
            Expr rhs = series_coeff(ctx, Family::gen_C, expand_prefactor(re),
                                    kmode(i, sign, cpk_e), emode(j), false, a, b);
            emit(sign > 0 ? "tor.kep" : "tor.kem",
                 argstr({{"i", i}, {"j", j}, {"a", a}, {"b", b}}), lhs - rhs);
            Expr lhs2 = series_coeff(ctx, Family::gen_C, expand_prefactor(lf),
                                     kmode(i, sign, cpk_f), fmode(j), true, a, b);
            Expr rhs2 = series_coeff(ctx, Family::gen_C, expand_prefactor(rf),
                                     kmode(i, sign, cpk_f), fmode(j), false, a, b);
            emit(sign > 0 ? "tor.kfp" : "tor.kfm",
                 argstr({{"i", i}, {"j", j}, {"a", a}, {"b", b}}), lhs2 - rhs2);
          }
      }
    }
}

}  // namespace

std::vector<RelationInstance> enumerate_kform(const CtxPtr& ctx, int R) {
  if (ctx->kind != AlgebraKind::Toroidal)
    throw std::domain_error("K-form instances exist for the toroidal algebra");
  std::vector<RelationInstance> out;
  Emit emit = [&](const std::string& tid, const std::string& args, Expr e) {
    if (e.is_zero()) return;
    out.push_back(RelationInstance{tid, tid + args, std::move(e)});
  };
  emit_kform_inner(ctx, R, emit);
  return out;
}

// ---- gl-hat presentation -----------------------------------------------------

namespace {

// mu on the appendix identification of the affine nodes with {1..N}
int mu_hat(const CartanData& cd, int i) {
  int N = cd.N();
  int k = ((i % N) + N) % N;
  if (k == 0) return cd.s.n() - cd.s.m();  // mu(N) = n - m
  return cd.mu_of(k);
}

void emit_gl(const CtxPtr& ctx, const Cutoffs& cut, const Emit& emit) {
  const CartanData& cd = ctx->cartan;
  int N = cd.N();
  int R = cut.R;
  Sc sc{ctx->orient};
  auto phimode = [&](int i, int sign, int cp) {
    return [&ctx, i, sign, cp](int t) {
      return cartan_current_mode(ctx, i, sign, t, 1, Scalar(1), cp);
    };
  };
  auto xmode = [&](int j, bool plus) {
    Family f = plus ? Family::gen_glxp : Family::gen_glxm;
    return [&ctx, j, f](int t) { return gen(ctx, f, j, t); };
  };
  // same-sign phi-phi commute
  for (int sign : {1, -1})
    for (int i = 0; i < N; ++i)
      for (int j = i; j < N; ++j)
        for (int a = -R; a <= R; ++a)
          for (int b = -R; b <= R; ++b) {
            if (i == j && a > b) continue;
            Expr lhs = phimode(i, sign, 0)(a) * phimode(j, sign, 0)(b);
            Expr rhs = phimode(j, sign, 0)(b) * phimode(i, sign, 0)(a);
            emit(sign > 0 ? "gl.phiphiP" : "gl.phiphiM",
                 argstr({{"i", i}, {"j", j}, {"a", a}, {"b", b}}), lhs - rhs);
          }
  // mixed phi+ phi-: cleared form with four binomials per side
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int dji = gt_hat(j, i, N) ? 1 : 0;
      int dij = gt_hat(i, j, N) ? 1 : 0;
      int si = cd.s.s(i == 0 ? N : i);
      std::vector<Binom> lpre = {{Scalar(1), -1, Scalar(1), 0},
                                 {Scalar(1), -1, sc.q(2 * si * dji), 0},
                                 {Scalar(1), 1, sc.q(2 * si), 0},
                                 {Scalar(1), 1, sc.q(-2 * si * dij), 0}};
      std::vector<Binom> rpre = {{Scalar(1), -1, sc.q(2 * si), 0},
                                 {Scalar(1), -1, sc.q(-2 * si * dij), 0},
                                 {Scalar(1), 1, Scalar(1), 0},
                                 {Scalar(1), 1, sc.q(2 * si * dji), 0}};
      auto fz = phimode(i, +1, 0);
      auto fw = phimode(j, -1, 0);
      for (int a = -R; a <= R; ++a)
        for (int b = -R; b <= R; ++b) {
          Expr lhs = series_coeff(ctx, Family::gen_glc, expand_prefactor(lpre),
                                  fz, fw, true, a, b);
          Expr rhs = series_coeff(ctx, Family::gen_glc, expand_prefactor(rpre),
                                  fz, fw, false, a, b);
          emit("gl.phiphiX", argstr({{"i", i}, {"j", j}, {"a", a}, {"b", b}}),
               lhs - rhs);
        }
    }
  // phi-x cross relations
  for (int sign : {1, -1})
    for (int i = 0; i < N; ++i)
      for (int j = 1; j <= N - 1; ++j) {
        int si = cd.s.s(i == 0 ? N : i);
        int B = cd.B(i, j);
        int mu2 = 2 * mu_hat(cd, i);  // exponents live in hq = q^{1/2}
        auto hq = [&](int htimes2) { return Scalar::hq_pow(htimes2).oriented(ctx->orient); };
        {
          // (z - q^{mu + s_i/2 + 3B/2} w) phi^pm_i(c^{-(1+-1)/2} z) x+_j(w)
          //   = q^B (z - q^{mu + s_i/2 - B/2} w) x+_j(w) phi^pm_i(...)
          int cp = sign > 0 ? -1 : 0;
          std::vector<Binom> l = {{Scalar(1), 0, hq(mu2 + si + 3 * B), 0}};
          std::vector<Binom> r = {{sc.q(B), 0, sc.q(B) * hq(mu2 + si - B), 0}};
          for (int a = -R; a <= R; ++a)
            for (int b = -R; b <= R; ++b) {
              Expr lhs = series_coeff(ctx, Family::gen_glc, expand_prefactor(l),
                                      phimode(i, sign, cp), xmode(j, true), true,
                                      a, b);
              Expr rhs = series_coeff(ctx, Family::gen_glc, expand_prefactor(r),
                                      phimode(i, sign, cp), xmode(j, true), false,
                                      a, b);
              emit(sign > 0 ? "gl.phixpP" : "gl.phixpM",
                   argstr({{"i", i}, {"j", j}, {"a", a}, {"b", b}}), lhs - rhs);
            }
        }
        {
          int cp = sign > 0 ? 0 : -1;
          std::vector<Binom> l = {{Scalar(1), 0, hq(mu2 + si - B), 0}};
          std::vector<Binom> r = {{sc.q(-B), 0, sc.q(-B) * hq(mu2 + si + 3 * B), 0}};
          for (int a = -R; a <= R; ++a)
            for (int b = -R; b <= R; ++b) {
              Expr lhs = series_coeff(ctx, Family::gen_glc, expand_prefactor(l),
                                      phimode(i, sign, cp), xmode(j, false), true,
                                      a, b);
              Expr rhs = series_coeff(ctx, Family::gen_glc, expand_prefactor(r),
                                      phimode(i, sign, cp), xmode(j, false), false,
                                      a, b);
              emit(sign > 0 ? "gl.phixmP" : "gl.phixmM",
                   argstr({{"i", i}, {"j", j}, {"a", a}, {"b", b}}), lhs - rhs);
            }
        }
      }
  // embedded sl relations, with k/h written through the phi currents
  CtxPtr slctx = make_ctx(AlgebraKind::SlCurrent, cd.s, ctx->orient);
  auto embed = [&](const Expr& e) { return embed_sl_in_gl(e, ctx); };
  Emit fwd = [&](const std::string& tid, const std::string& args, Expr e) {
    emit("gl.sl." + tid.substr(4), args, embed(e));  // "cur.x" -> "gl.sl.x"
  };
  emit_current_like(slctx, cut, fwd,
                    {Family::gen_xp, Family::gen_xm, Family::gen_h,
                     Family::gen_k, Family::gen_c, false},
                    "cur");
  // c-centrality for the gl generators proper
  for (int i = 0; i < N; ++i) {
    emit("gl.ccent_phi", argstr({{"i", i}}),
         gen_pow(ctx, Family::gen_glc, 0, 1) * gen(ctx, Family::gen_phi, i) -
             gen(ctx, Family::gen_phi, i) * gen_pow(ctx, Family::gen_glc, 0, 1));
  }
}

}  // namespace

Expr embed_sl_in_gl(const Expr& x, const CtxPtr& gl) {
  const CartanData& cd = gl->cartan;
  int N = cd.N();
  auto image = [&](const GeneratorSymbol& g) -> Expr {
    switch (g.fam) {
      case Family::gen_xp:
        return gen(gl, Family::gen_glxp, g.node, g.mode);
      case Family::gen_xm:
        return gen(gl, Family::gen_glxm, g.node, g.mode);
      case Family::gen_c:
        return gen_pow(gl, Family::gen_glc, 0, 1);
      case Family::gen_c_inv:
        return gen_pow(gl, Family::gen_glc, 0, -1);
      case Family::gen_k:
        return gen_pow(gl, Family::gen_phi, g.node, 1) *
               gen_pow(gl, Family::gen_phi, (g.node + 1) % N, -1);
      case Family::gen_k_inv:
        return gen_pow(gl, Family::gen_phi, g.node, -1) *
               gen_pow(gl, Family::gen_phi, (g.node + 1) % N, 1);
      case Family::gen_h: {
        // h_{i,r} = q^{-r mu(i)} (phi_{i,r} - phi_{i+1,r})
        Scalar fac = Scalar::q_pow(-g.mode * cd.mu_of(g.node)).oriented(gl->orient);
        return (gen(gl, Family::gen_phim, g.node, g.mode) -
                gen(gl, Family::gen_phim, (g.node + 1) % N, g.mode))
            .scaled(fac);
      }
      default:
        throw std::domain_error("embed_sl_in_gl: unexpected symbol " + g.str());
    }
  };
  return map_symbols(x, gl, image);
}

Expr instantiate(const CtxPtr& ctx, const std::string& tid,
                 const std::vector<int>& nodes, const std::vector<int>& modes) {
  // Reuses the enumeration with a tight cutoff and picks the matching instance.
  int R = 0;
  for (int m : modes) R = std::max(R, std::abs(m));
  Cutoffs cut{R, R, R};
  auto all = enumerate_instances(ctx, cut, {tid});
  for (auto& inst : all) {
    // match on the numeric arguments in order
    std::vector<int> got;
    std::string s = inst.id.substr(inst.id.find('['));
    size_t p = 0;
    while ((p = s.find('=', p)) != std::string::npos) {
      ++p;
      got.push_back(std::stoi(s.substr(p)));
    }
    std::vector<int> expect = nodes;
    expect.insert(expect.end(), modes.begin(), modes.end());
    if (got == expect) return inst.expr;
  }
  throw std::domain_error("no instance " + tid + " with the given arguments");
}

std::vector<TemplateInfo> presentation_templates(const AlgebraCtx& ctx) {
  std::vector<TemplateInfo> out;
  auto add = [&](const char* id, bool series, const char* guard, int arity) {
    out.push_back(TemplateInfo{id, series, guard, arity});
  };
  switch (ctx.kind) {
    case AlgebraKind::SlChevalley:
      add("dj.tt", false, "i<j", 0);
      add("dj.te", false, "", 0);
      add("dj.tf", false, "", 0);
      add("dj.ef", false, "", 0);
      add("dj.ee0", false, "A_ij=0", 0);
      add("dj.ff0", false, "A_ij=0", 0);
      add("dj.serre3e", false, "A_ii!=0", 0);
      add("dj.serre3f", false, "A_ii!=0", 0);
      add("dj.serre4e", false, "mn!=2, A_ii=0", 0);
      add("dj.serre4f", false, "mn!=2, A_ii=0", 0);
      add("dj.serre5e", false, "mn=2, A_ii!=0", 0);
      add("dj.serre5f", false, "mn=2, A_ii!=0", 0);
      break;
    case AlgebraKind::SlCurrent:
      add("cur.ccent", false, "", 1);
      add("cur.ccent_f", false, "", 1);
      add("cur.ccent_h", false, "r!=0", 1);
      add("cur.ccent_k", false, "", 0);
      add("cur.kk", false, "i<j", 0);
      add("cur.kxp", false, "", 1);
      add("cur.kxm", false, "", 1);
      add("cur.hh", false, "r,s!=0", 2);
      add("cur.hxp", false, "r!=0", 2);
      add("cur.hxm", false, "r!=0", 2);
      add("cur.xpxm", false, "", 2);
      add("cur.xxpA", false, "A_ij!=0", 2);
      add("cur.xxmA", false, "A_ij!=0", 2);
      add("cur.xxp0", false, "A_ij=0", 2);
      add("cur.xxm0", false, "A_ij=0", 2);
      add("cur.serre3p", false, "A_ii!=0, i+eps in I", 3);
      add("cur.serre3m", false, "A_ii!=0, i+eps in I", 3);
      add("cur.serre4p", false, "mn!=2, A_ii=0, i+-1 in I", 4);
      add("cur.serre4m", false, "mn!=2, A_ii=0, i+-1 in I", 4);
      break;
    case AlgebraKind::Toroidal:
      add("tor.ccent", false, "", 1);
      add("tor.ccent_f", false, "", 1);
      add("tor.ccent_h", false, "r!=0", 1);
      add("tor.ccent_k", false, "", 0);
      add("tor.KK", false, "i<j", 0);
      add("tor.KE", false, "", 1);
      add("tor.KF", false, "", 1);
      add("tor.HH", false, "r,s!=0", 2);
      add("tor.HE", false, "r!=0", 2);
      add("tor.HF", false, "r!=0", 2);
      add("tor.EF", false, "", 2);
      add("tor.EEA", false, "A_ij!=0", 2);
      add("tor.FFA", false, "A_ij!=0", 2);
      add("tor.EE0", false, "A_ij=0", 2);
      add("tor.FF0", false, "A_ij=0", 2);
      add("tor.serre3E", false, "A_ii!=0", 3);
      add("tor.serre3F", false, "A_ii!=0", 3);
      add("tor.serre4E", false, "mn!=2, A_ii=0", 4);
      add("tor.serre4F", false, "mn!=2, A_ii=0", 4);
      add("tor.serre5E", false, "mn=2, A_ii!=0", 5);
      add("tor.serre6F", false, "mn=2, A_ii!=0", 5);
      add("tor.kk1p", true, "", 2);
      add("tor.kk1m", true, "", 2);
      add("tor.kk2", true, "", 2);
      add("tor.kep", true, "", 2);
      add("tor.kem", true, "", 2);
      add("tor.kfp", true, "", 2);
      add("tor.kfm", true, "", 2);
      break;
    case AlgebraKind::GlCurrent:
      add("gl.phiphiP", true, "", 2);
      add("gl.phiphiM", true, "", 2);
      add("gl.phiphiX", true, "", 2);
      add("gl.phixpP", true, "", 2);
      add("gl.phixpM", true, "", 2);
      add("gl.phixmP", true, "", 2);
      add("gl.phixmM", true, "", 2);
      add("gl.sl.*", false, "embedded sl relations via k = phi phi^{-1}", 2);
      add("gl.ccent_phi", false, "", 0);
      break;
  }
  return out;
}

std::string relation_manifest(const CtxPtr& ctx, const Cutoffs& cut) {
  auto insts = enumerate_instances(ctx, cut);
  std::map<std::string, long> counts;
  for (auto& i : insts) counts[i.tid]++;
  std::ostringstream os;
  os << "{\"algebra\":\"" << algebra_kind_name(ctx->kind) << "\",\"parity\":\""
     << ctx->parity().str() << "\",\"cutoffs\":\"" << cut.str()
     << "\",\"templates\":[";
  auto tpl = presentation_templates(*ctx);
  bool first = true;
  for (auto& t : tpl) {
    if (!first) os << ",";
    first = false;
    long c = 0;
    for (auto& [k, v] : counts)
      if (k == t.id || (t.id.back() == '*' &&
                        k.rfind(t.id.substr(0, t.id.size() - 1), 0) == 0))
        c += v;
    os << "{\"id\":\"" << t.id << "\",\"guard\":\"" << t.guard
       << "\",\"series\":" << (t.series ? "true" : "false")
       << ",\"instances\":" << c << "}";
  }
  os << "],\"total\":" << insts.size() << "}";
  return os.str();
}

}  // namespace qtor
