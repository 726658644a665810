#include "qtor/expr.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qtor {

std::string algebra_kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::SlChevalley: return "DJ";
    case AlgebraKind::SlCurrent: return "Cur";
    case AlgebraKind::Toroidal: return "Tor";
    case AlgebraKind::GlCurrent: return "Gl";
  }
  return "?";
}

namespace {
struct FamInfo {
  const char* name;
  FamilyClass cls;
  int wsign;          // +1 raising, -1 lowering, 0 neutral
  bool has_mode;
  bool mode_nonzero;
  AlgebraKind alg;
  Family inv;         // inverse partner, or itself if not invertible
};

const FamInfo& fam_info(Family f) {
  using F = Family;
  using C = FamilyClass;
  using A = AlgebraKind;
  static const std::map<Family, FamInfo> table = {
      {F::gen_e, {"e", C::Raising, 1, false, false, A::SlChevalley, F::gen_e}},
      {F::gen_f, {"f", C::Lowering, -1, false, false, A::SlChevalley, F::gen_f}},
      {F::gen_t, {"t", C::CartanGroup, 0, false, false, A::SlChevalley, F::gen_t_inv}},
      {F::gen_t_inv, {"t^-1", C::CartanGroup, 0, false, false, A::SlChevalley, F::gen_t}},
      {F::gen_xp, {"x+", C::Raising, 1, true, false, A::SlCurrent, F::gen_xp}},
      {F::gen_xm, {"x-", C::Lowering, -1, true, false, A::SlCurrent, F::gen_xm}},
      {F::gen_h, {"h", C::CartanMode, 0, true, true, A::SlCurrent, F::gen_h}},
      {F::gen_k, {"k", C::CartanGroup, 0, false, false, A::SlCurrent, F::gen_k_inv}},
      {F::gen_k_inv, {"k^-1", C::CartanGroup, 0, false, false, A::SlCurrent, F::gen_k}},
      {F::gen_c, {"c", C::Central, 0, false, false, A::SlCurrent, F::gen_c_inv}},
      {F::gen_c_inv, {"c^-1", C::Central, 0, false, false, A::SlCurrent, F::gen_c}},
      {F::gen_E, {"E", C::Raising, 1, true, false, A::Toroidal, F::gen_E}},
      {F::gen_F, {"F", C::Lowering, -1, true, false, A::Toroidal, F::gen_F}},
      {F::gen_H, {"H", C::CartanMode, 0, true, true, A::Toroidal, F::gen_H}},
      {F::gen_K, {"K", C::CartanGroup, 0, false, false, A::Toroidal, F::gen_K_inv}},
      {F::gen_K_inv, {"K^-1", C::CartanGroup, 0, false, false, A::Toroidal, F::gen_K}},
      {F::gen_C, {"C", C::Central, 0, false, false, A::Toroidal, F::gen_C_inv}},
      {F::gen_C_inv, {"C^-1", C::Central, 0, false, false, A::Toroidal, F::gen_C}},
      {F::gen_phi, {"phi", C::CartanGroup, 0, false, false, A::GlCurrent, F::gen_phi_inv}},
      {F::gen_phi_inv, {"phi^-1", C::CartanGroup, 0, false, false, A::GlCurrent, F::gen_phi}},
      {F::gen_phim, {"phim", C::CartanMode, 0, true, true, A::GlCurrent, F::gen_phim}},
      {F::gen_glxp, {"x+", C::Raising, 1, true, false, A::GlCurrent, F::gen_glxp}},
      {F::gen_glxm, {"x-", C::Lowering, -1, true, false, A::GlCurrent, F::gen_glxm}},
      {F::gen_glc, {"c", C::Central, 0, false, false, A::GlCurrent, F::gen_glc_inv}},
      {F::gen_glc_inv, {"c^-1", C::Central, 0, false, false, A::GlCurrent, F::gen_glc}},
  };
  return table.at(f);
}
}  // namespace

FamilyClass family_class(Family f) { return fam_info(f).cls; }
const char* family_name(Family f) { return fam_info(f).name; }
bool family_invertible(Family f) { return fam_info(f).inv != f; }
Family family_inverse(Family f) {
  if (!family_invertible(f)) throw std::domain_error("family not invertible");
  return fam_info(f).inv;
}
int family_weight_sign(Family f) { return fam_info(f).wsign; }
bool family_has_mode(Family f) { return fam_info(f).has_mode; }
bool family_mode_nonzero(Family f) { return fam_info(f).mode_nonzero; }
AlgebraKind family_algebra(Family f) { return fam_info(f).alg; }

std::string GeneratorSymbol::str() const {
  std::ostringstream os;
  os << family_name(fam);
  if (family_has_mode(fam))
    os << "[" << node << "," << mode << "]";
  else if (family_class(fam) != FamilyClass::Central)
    os << "[" << node << "]";
  return os.str();
}

int symbol_cmp(const GeneratorSymbol& a, const GeneratorSymbol& b) {
  auto rank = [](FamilyClass c) {
    switch (c) {
      case FamilyClass::Raising: return 4;
      case FamilyClass::CartanMode: return 3;
      case FamilyClass::Lowering: return 2;
      case FamilyClass::CartanGroup: return 1;
      case FamilyClass::Central: return 0;
    }
    return 0;
  };
  int ra = rank(family_class(a.fam)), rb = rank(family_class(b.fam));
  if (ra != rb) return ra < rb ? -1 : 1;
  if (a.node != b.node) return a.node < b.node ? -1 : 1;  // node ascending
  if (a.mode != b.mode) return a.mode < b.mode ? -1 : 1;  // higher mode is larger
  if (a.fam != b.fam) return (int)a.fam < (int)b.fam ? -1 : 1;
  return 0;
}

namespace {
// (raising+lowering letters, Cartan-mode letters); group-like and central
// letters weigh nothing so EF-type rewrites strictly decrease the order, and
// raising/lowering letters dominate the Cartan-mode letters that K^{+-}-mode
// expansions produce in bulk.
std::pair<int, int> word_weights(const Word& w) {
  int ef = 0, h = 0;
  for (auto& g : w) {
    FamilyClass c = family_class(g.fam);
    if (c == FamilyClass::Raising || c == FamilyClass::Lowering)
      ++ef;
    else if (c == FamilyClass::CartanMode)
      ++h;
  }
  return {ef, h};
}
}  // namespace

int word_weight(const Word& w) {
  auto [ef, h] = word_weights(w);
  return ef + h;
}

int word_cmp(const Word& a, const Word& b) {
  auto wa = word_weights(a), wb = word_weights(b);
  if (wa.first != wb.first) return wa.first < wb.first ? -1 : 1;
  if (wa.second != wb.second) return wa.second < wb.second ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  // total |mode| before lex: the quadratic exchange rules then walk toward
  // balanced mode configurations instead of drifting to the rule-window edge,
  // and each tie class is a finite alphabet (intrinsic termination)
  long long ma = 0, mb = 0;
  for (auto& g : a) ma += std::abs((long long)g.mode);
  for (auto& g : b) mb += std::abs((long long)g.mode);
  if (ma != mb) return ma < mb ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = symbol_cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

uint64_t word_hash(const Word& w) {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (auto& g : w) {
    mix((uint64_t)g.fam);
    mix((uint64_t)(int64_t)g.node);
    mix((uint64_t)(int64_t)g.mode);
  }
  return h;
}

std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += w[i].str();
  }
  return s;
}

std::string AlgebraCtx::str() const {
  return algebra_kind_name(kind) + cartan.s.str() + "/" + orient.str();
}

int AlgebraCtx::symbol_parity(const GeneratorSymbol& g) const {
  if (family_weight_sign(g.fam) != 0) return cartan.parity_of_node(g.node);
  return 0;
}

void AlgebraCtx::validate(const GeneratorSymbol& g) const {
  if (family_algebra(g.fam) != kind)
    throw std::domain_error("symbol " + g.str() + " not valid in " + str());
  if (family_mode_nonzero(g.fam) && g.mode == 0)
    throw std::domain_error("Cartan mode generator requires nonzero mode");
  if (!family_has_mode(g.fam) && g.mode != 0)
    throw std::domain_error("family carries no mode");
  int Nn = N();
  bool finite_node =
      (kind == AlgebraKind::SlCurrent) ||
      (kind == AlgebraKind::GlCurrent &&
       (g.fam == Family::gen_glxp || g.fam == Family::gen_glxm));
  if (family_class(g.fam) == FamilyClass::Central) return;
  if (finite_node) {
    if (g.node < 1 || g.node > Nn - 1)
      throw std::domain_error("node out of finite range I");
  } else {
    if (g.node < 0 || g.node > Nn - 1)
      throw std::domain_error("node out of affine range");
  }
}

int AlgebraCtx::grading_len() const {
  switch (kind) {
    case AlgebraKind::SlChevalley: return N();
    case AlgebraKind::SlCurrent: return N();      // deg_1..deg_{N-1}, delta
    case AlgebraKind::Toroidal: return N() + 1;   // deg_0..deg_{N-1}, delta
    case AlgebraKind::GlCurrent: return N();
  }
  return 0;
}

std::vector<long long> AlgebraCtx::symbol_grading(const GeneratorSymbol& g) const {
  std::vector<long long> d(grading_len(), 0);
  int ws = family_weight_sign(g.fam);
  switch (kind) {
    case AlgebraKind::SlChevalley:
      if (ws != 0) d[g.node] += ws;
      break;
    case AlgebraKind::SlCurrent:
    case AlgebraKind::GlCurrent:
      if (ws != 0) d[g.node - 1] += ws;
      if (family_has_mode(g.fam)) d[N() - 1] += g.mode;
      break;
    case AlgebraKind::Toroidal:
      if (ws != 0) d[g.node] += ws;
      if (family_has_mode(g.fam)) d[N()] += g.mode;
      break;
  }
  return d;
}

std::vector<int> AlgebraCtx::symbol_weight(const GeneratorSymbol& g) const {
  std::vector<int> w(N(), 0);
  int ws = family_weight_sign(g.fam);
  if (ws != 0) w[((g.node % N()) + N()) % N()] += ws;
  return w;
}

CtxPtr make_ctx(AlgebraKind kind, const ParitySequence& s, Orientation o) {
  auto ctx = std::make_shared<AlgebraCtx>();
  ctx->kind = kind;
  ctx->cartan = cartan_data(s);
  ctx->orient = o;
  return ctx;
}

Expr Expr::unit(CtxPtr ctx) {
  Expr e(std::move(ctx));
  e.terms_[Word{}] = Scalar(1);
  return e;
}

Expr Expr::generator(CtxPtr ctx, GeneratorSymbol g) {
  ctx->validate(g);
  Expr e(std::move(ctx));
  e.terms_[Word{g}] = Scalar(1);
  return e;
}

Expr Expr::term(CtxPtr ctx, Word w, Scalar c) {
  Expr e(std::move(ctx));
  if (!c.is_zero()) e.terms_[std::move(w)] = std::move(c);
  return e;
}

void Expr::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
  } else {
    Scalar s = it->second + c;
    if (s.is_zero())
      terms_.erase(it);
    else
      it->second = std::move(s);
  }
}

namespace {
void check_same_ctx(const Expr& a, const Expr& b) {
  if (!a.ctx() || !b.ctx()) throw std::domain_error("expression without context");
  if (!a.ctx()->same(*b.ctx()))
    throw std::domain_error("context mismatch: " + a.ctx()->str() + " vs " +
                            b.ctx()->str());
}
}  // namespace

Expr Expr::operator+(const Expr& o) const {
  check_same_ctx(*this, o);
  Expr r = *this;
  for (auto& [w, c] : o.terms_) r.add_term(w, c);
  return r;
}

Expr Expr::operator-() const {
  Expr r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

Expr Expr::operator-(const Expr& o) const { return *this + (-o); }

Expr Expr::scaled(const Scalar& c) const {
  Expr r(ctx_);
  if (c.is_zero()) return r;
  for (auto& [w, cc] : terms_) {
    Scalar prod = cc * c;
    if (!prod.is_zero()) r.terms_[w] = std::move(prod);
  }
  return r;
}

Expr Expr::operator*(const Expr& o) const {
  check_same_ctx(*this, o);
  Expr r(ctx_);
  for (auto& [wa, ca] : terms_)
    for (auto& [wb, cb] : o.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * cb);
    }
  return r;
}

const Word& Expr::leading_word() const {
  if (terms_.empty()) throw std::domain_error("leading word of zero expression");
  return terms_.begin()->first;
}
const Scalar& Expr::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading coeff of zero expression");
  return terms_.begin()->second;
}

int word_parity(const AlgebraCtx& ctx, const Word& w) {
  int p = 0;
  for (auto& g : w) p ^= ctx.symbol_parity(g);
  return p;
}

int graded_reversal_sign(const AlgebraCtx& ctx, const Word& w) {
  // (-1)^{sum_{i<j} |g_i||g_j|}: a pair contributes iff both letters are odd.
  int odd = 0;
  for (auto& g : w) odd += ctx.symbol_parity(g);
  long long pairs = (long long)odd * (odd - 1) / 2;
  return (pairs % 2 == 0) ? 1 : -1;
}

std::optional<int> Expr::parity() const {
  if (terms_.empty()) return 0;
  int p = word_parity(*ctx_, terms_.begin()->first);
  for (auto& [w, c] : terms_)
    if (word_parity(*ctx_, w) != p) return std::nullopt;
  return p;
}

std::optional<std::vector<int>> Expr::weight() const {
  if (terms_.empty()) return std::vector<int>(ctx_->N(), 0);
  auto weight_of = [this](const Word& w) {
    std::vector<int> acc(ctx_->N(), 0);
    for (auto& g : w) {
      auto gw = ctx_->symbol_weight(g);
      for (int i = 0; i < ctx_->N(); ++i) acc[i] += gw[i];
    }
    return acc;
  };
  auto first = weight_of(terms_.begin()->first);
  for (auto& [w, c] : terms_)
    if (weight_of(w) != first) return std::nullopt;
  return first;
}

std::optional<std::vector<long long>> Expr::grading() const {
  if (terms_.empty()) return std::vector<long long>(ctx_->grading_len(), 0);
  auto grade_of = [this](const Word& w) {
    std::vector<long long> acc(ctx_->grading_len(), 0);
    for (auto& g : w) {
      auto gg = ctx_->symbol_grading(g);
      for (size_t i = 0; i < acc.size(); ++i) acc[i] += gg[i];
    }
    return acc;
  };
  auto first = grade_of(terms_.begin()->first);
  for (auto& [w, c] : terms_)
    if (grade_of(w) != first) return std::nullopt;
  return first;
}

std::string Expr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (!w.empty()) os << "*" << word_str(w);
  }
  return os.str();
}

std::string Expr::json() const {
  std::ostringstream os;
  os << "{\"terms\":[";
  bool first = true;
  std::string alg = algebra_kind_name(ctx_ ? ctx_->kind : AlgebraKind::Toroidal);
  for (auto& [w, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "{\"coef\":\"" << c.str() << "\",\"word\":[";
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) os << ",";
      os << "{\"alg\":\"" << alg << "\",\"fam\":\"" << family_name(w[i].fam)
         << "\",\"node\":" << w[i].node << ",\"mode\":" << w[i].mode << "}";
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

std::string Expr::latex() const {
  if (terms_.empty()) return "0";
  auto sym_tex = [](const GeneratorSymbol& g) {
    std::ostringstream os;
    std::string n = family_name(g.fam);
    bool inv = n.size() > 3 && n.substr(n.size() - 3) == "^-1";
    if (inv) n = n.substr(0, n.size() - 3);
    if (n == "x+") n = "x^{+}";
    if (n == "x-") n = "x^{-}";
    if (n == "phi" || n == "phim") n = "\\phi";
    os << n << "_{" << g.node;
    if (family_has_mode(g.fam)) os << "," << g.mode;
    os << "}";
    if (inv) os << "^{-1}";
    return os.str();
  };
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "\\left(" << c.str() << "\\right)";
    for (auto& g : w) os << " " << sym_tex(g);
  }
  return os.str();
}

uint64_t Expr::hash() const {
  uint64_t h = 14695981039346656037ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (auto& [w, c] : terms_) {
    mix(word_hash(w));
    mix(c.hash());
  }
  return h;
}

Expr map_symbols(const Expr& x, const CtxPtr& target,
                 const std::function<Expr(const GeneratorSymbol&)>& image,
                 bool antihom, bool graded_sign) {
  Expr out = Expr::zero(target);
  for (auto& [w, c] : x.terms()) {
    Expr prod = Expr::unit(target);
    if (!antihom) {
      for (auto& g : w) prod = prod * image(g);
    } else {
      for (auto it = w.rbegin(); it != w.rend(); ++it) prod = prod * image(*it);
      if (graded_sign && graded_reversal_sign(*x.ctx(), w) < 0) prod = -prod;
    }
    out = out + prod.scaled(c);
  }
  return out;
}

Expr super_bracket(const Expr& x, const Expr& y, const Scalar& a) {
  check_same_ctx(x, y);
  auto px = x.parity(), py = y.parity();
  if (!px || !py) throw std::domain_error("super_bracket: inhomogeneous parity");
  Scalar sign = (*px && *py) ? Scalar(-1) : Scalar(1);
  return x * y - (y * x).scaled(sign * a);
}

Expr weighted_bracket(const Expr& x, const Expr& y) {
  check_same_ctx(x, y);
  auto wx = x.weight(), wy = y.weight();
  if (!wx || !wy) throw std::domain_error("weighted_bracket: inhomogeneous weight");
  long long pair = x.ctx()->cartan.pairing(
      std::vector<int>(wx->begin(), wx->end()),
      std::vector<int>(wy->begin(), wy->end()));
  return super_bracket(x, y, Scalar::q_pow((int)-pair));
}

}  // namespace qtor
