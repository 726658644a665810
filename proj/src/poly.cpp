#include "qtor/poly.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qtor {

mpz_class mpz_pow_ui_wrap(const mpz_class& b, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

Poly Poly::integer(long v) { return integer(mpz_class(v)); }

Poly Poly::integer(const mpz_class& v) {
  Poly p;
  if (v != 0) p.terms_.push_back({Mono{}, v});
  return p;
}

Poly Poly::monomial(const Mono& m, const mpz_class& c) {
  Poly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::variable(int var, int exp) {
  Mono m;
  m.e[var] = exp;
  return monomial(m);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

bool Poly::is_integer() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

int Poly::degree(int var) const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, m.e[var]);
  return d;
}

int Poly::low_degree(int var) const {
  if (terms_.empty()) return 0;
  int d = terms_[0].first.e[var];
  for (auto& [m, c] : terms_) d = std::min(d, m.e[var]);
  return d;
}

mpz_class Poly::content() const {
  mpz_class g = 0;
  for (auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Mono Poly::mono_content() const {
  Mono mc;
  if (terms_.empty()) return mc;
  mc = terms_[0].first;
  for (auto& [m, c] : terms_)
    for (int i = 0; i < kNumVars; ++i) mc.e[i] = std::min(mc.e[i], m.e[i]);
  return mc;
}

Poly Poly::from_terms(std::vector<Term> t) {
  std::sort(t.begin(), t.end(), [](const Term& a, const Term& b) {
    return mono_cmp(a.first, b.first) > 0;
  });
  Poly p;
  for (auto& tm : t) {
    if (!p.terms_.empty() && p.terms_.back().first == tm.first)
      p.terms_.back().second += tm.second;
    else
      p.terms_.push_back(std::move(tm));
    if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  }
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = mono_cmp(terms_[i].first, o.terms_[j].first);
    if (c > 0)
      r.terms_.push_back(terms_[i++]);
    else if (c < 0)
      r.terms_.push_back(o.terms_[j++]);
    else {
      mpz_class s = terms_[i].second + o.terms_[j].second;
      if (s != 0) r.terms_.push_back({terms_[i].first, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Mono& m, const mpz_class& c) const {
  if (c == 0) return Poly();
  Poly r = *this;
  for (auto& [mm, cc] : r.terms_) {
    for (int i = 0; i < kNumVars; ++i) mm.e[i] += m.e[i];
    cc *= c;
  }
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Term> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : o.terms_) {
      Mono m = ma;
      for (int i = 0; i < kNumVars; ++i) m.e[i] += mb.e[i];
      acc.push_back({m, ca * cb});
    }
  return from_terms(std::move(acc));
}

Poly Poly::pow(unsigned k) const {
  Poly r = integer(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

int Poly::cmp(const Poly& a, const Poly& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = mono_cmp(a.terms_[i].first, b.terms_[i].first);
    if (c != 0) return c;
    int s = ::cmp(a.terms_[i].second, b.terms_[i].second);
    if (s != 0) return s < 0 ? -1 : 1;
  }
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

Poly Poly::divexact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("poly division by zero");
  Poly rem = *this, quo;
  std::vector<Term> qt;
  while (!rem.is_zero()) {
    const Mono& lm = rem.leading_mono();
    const Mono& dm = d.leading_mono();
    Mono q;
    for (int i = 0; i < kNumVars; ++i) {
      q.e[i] = lm.e[i] - dm.e[i];
      if (q.e[i] < 0) throw std::domain_error("inexact poly division (mono)");
    }
    mpz_class qc, r;
    mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem.leading_coeff().get_mpz_t(),
                d.leading_coeff().get_mpz_t());
    if (r != 0) throw std::domain_error("inexact poly division (coeff)");
    qt.push_back({q, qc});
    rem = rem - d.mul_term(q, qc);
  }
  return from_terms(std::move(qt));
}

namespace {

// View of p as a univariate polynomial in `var` with Poly coefficients.
std::map<int, Poly> split_var(const Poly& p, int var) {
  std::map<int, std::vector<Poly::Term>> buckets;
  for (auto& [m, c] : p.terms()) {
    Mono mm = m;
    int e = mm.e[var];
    mm.e[var] = 0;
    buckets[e].push_back({mm, c});
  }
  std::map<int, Poly> out;
  for (auto& [e, v] : buckets) out[e] = Poly::from_terms(std::move(v));
  return out;
}

Poly join_var(const std::map<int, Poly>& coeffs, int var) {
  std::vector<Poly::Term> acc;
  for (auto& [e, p] : coeffs)
    for (auto& [m, c] : p.terms()) {
      Mono mm = m;
      mm.e[var] += e;
      acc.push_back({mm, c});
    }
  return Poly::from_terms(std::move(acc));
}

Poly content_wrt(const Poly& p, int var) {
  Poly g;
  for (auto& [e, c] : split_var(p, var)) {
    g = Poly::gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

// Pseudo-remainder of a by b in variable var (deg_var a >= deg_var b).
Poly prem(Poly a, const Poly& b, int var) {
  auto bs = split_var(b, var);
  int db = bs.rbegin()->first;
  const Poly& lb = bs.rbegin()->second;
  while (true) {
    if (a.is_zero()) return a;
    auto as = split_var(a, var);
    int da = as.rbegin()->first;
    if (da < db) return a;
    const Poly& la = as.rbegin()->second;
    // a <- lb*a - la*b*x^(da-db)
    Mono shift;
    shift.e[var] = da - db;
    a = lb * a - (la * b).mul_term(shift, 1);
  }
}

Poly sign_normalize(Poly p) {
  if (!p.is_zero() && p.leading_coeff() < 0) return -p;
  return p;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return sign_normalize(b);
  if (b.is_zero()) return sign_normalize(a);
  if (a.is_integer() && b.is_integer()) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.leading_coeff().get_mpz_t(),
            b.leading_coeff().get_mpz_t());
    return integer(g);
  }
  int var = -1;
  for (int v = kNumVars - 1; v >= 0; --v)
    if (a.degree(v) > 0 || b.degree(v) > 0) var = v;
  // var = lowest-index variable present; recurse univariately in it.
  Poly ca = content_wrt(a, var), cb = content_wrt(b, var);
  Poly cg = gcd(ca, cb);
  Poly pa = a.divexact(ca), pb = b.divexact(cb);
  // primitive PRS
  if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);
  while (true) {
    if (pb.is_zero()) return sign_normalize(cg * pa);
    if (pb.degree(var) == 0) return sign_normalize(cg);  // pa primitive in var
    Poly r = prem(pa, pb, var);
    pa = pb;
    if (r.is_zero())
      pb = Poly();
    else
      pb = r.divexact(content_wrt(r, var));
  }
}

Poly Poly::reverse_var(int var, int deg) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size());
  for (auto& [m, c] : terms_) {
    Mono mm = m;
    mm.e[var] = deg - mm.e[var];
    if (mm.e[var] < 0) throw std::domain_error("reverse_var: headroom too small");
    acc.push_back({mm, c});
  }
  return from_terms(std::move(acc));
}

namespace {
uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return (uint64_t)((__uint128_t)a * b % p);
}
uint64_t powmod(uint64_t b, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = mulmod(r, b, p);
    b = mulmod(b, b, p);
    e >>= 1;
  }
  return r;
}
}  // namespace

uint64_t Poly::eval_mod(const std::array<uint64_t, kNumVars>& pt, uint64_t p) const {
  uint64_t acc = 0;
  for (auto& [m, c] : terms_) {
    uint64_t t = mpz_fdiv_ui(c.get_mpz_t(), p);  // in [0, p) for any sign
    for (int i = 0; i < kNumVars; ++i)
      if (m.e[i]) t = mulmod(t, powmod(pt[i], m.e[i], p), p);
    acc = (acc + t) % p;
  }
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    mpz_class a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool printed = false;
    if (a != 1 || m.is_one()) {
      os << a.get_str();
      printed = true;
    }
    for (int i = 0; i < kNumVars; ++i)
      if (m.e[i]) {
        if (printed) os << "*";
        os << var_name(i);
        if (m.e[i] != 1) os << "^" << m.e[i];
        printed = true;
      }
  }
  return os.str();
}

uint64_t Poly::hash() const {
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (auto& [m, c] : terms_) {
    for (int i = 0; i < kNumVars; ++i) mix((uint64_t)(int64_t)m.e[i]);
    mix(mpz_fdiv_ui(c.get_mpz_t(), 2305843009213693951ull));
    mix(c < 0 ? 7u : 3u);
  }
  return h;
}

}  // namespace qtor
