#include "qtor/scalar.hpp"

#include <random>
#include <stdexcept>

namespace qtor {

namespace {
constexpr size_t kReduceThreshold = 48;  // term count that triggers eager gcd
constexpr uint64_t kPrime = 2305843009213693951ull;  // 2^61 - 1
}  // namespace

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("scalar with zero denominator");
  light_normalize();
  if (num_.size() + den_.size() > kReduceThreshold) reduce();
}

Scalar Scalar::var_pow(int var, int k) {
  if (k >= 0) return Scalar(Poly::variable(var, k), Poly::integer(1));
  return Scalar(Poly::integer(1), Poly::variable(var, -k));
}

Scalar Scalar::qint(long k) {
  // [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}  (k > 0), [-k] = -[k], [0] = 0.
  if (k == 0) return Scalar(0);
  bool neg = k < 0;
  long a = neg ? -k : k;
  Scalar s(0);
  for (long j = 0; j < a; ++j) s += q_pow(a - 1 - 2 * j);
  return neg ? -s : s;
}

void Scalar::light_normalize() {
  if (num_.is_zero()) {
    den_ = Poly::integer(1);
    reduced_ = true;
    return;
  }
  // cancel monomial content
  Mono mn = num_.mono_content(), md = den_.mono_content();
  Mono common;
  for (int i = 0; i < kNumVars; ++i) common.e[i] = std::min(mn.e[i], md.e[i]);
  if (!common.is_one()) {
    num_ = num_.divexact(Poly::monomial(common));
    den_ = den_.divexact(Poly::monomial(common));
  }
  // cancel integer content
  mpz_class cn = num_.content(), cd = den_.content();
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (g > 1) {
    num_ = num_.divexact(Poly::integer(g));
    den_ = den_.divexact(Poly::integer(g));
  }
  if (den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  reduced_ = den_.is_one();
}

void Scalar::reduce() const {
  if (reduced_) return;
  Poly g = Poly::gcd(num_, den_);
  if (!g.is_one() && !g.is_zero()) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  if (!den_.is_zero() && den_.leading_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  reduced_ = true;
}

bool Scalar::is_one() const {
  if (num_ == den_) return true;
  reduce();
  return num_ == den_;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
  return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  return Scalar(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw std::domain_error("scalar division by zero");
  return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  return Scalar(den_, num_);
}

bool Scalar::equals(const Scalar& o) const {
  if (num_ == o.num_ && den_ == o.den_) return true;
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  if (!probabilistic_equal(*this, o, 2)) return false;  // sound fast reject
  return num_ * o.den_ == o.num_ * den_;
}

bool Scalar::probabilistic_equal(const Scalar& a, const Scalar& b, int trials,
                                 uint64_t seed) {
  std::mt19937_64 rng(seed ^ (a.num_.hash() * 31 + b.num_.hash()));
  std::uniform_int_distribution<uint64_t> dist(2, kPrime - 2);
  auto mulmod = [](uint64_t x, uint64_t y) {
    return (uint64_t)((__uint128_t)x * y % kPrime);
  };
  auto powmod = [&](uint64_t x, uint64_t e) {
    uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, x);
      x = mulmod(x, x);
      e >>= 1;
    }
    return r;
  };
  for (int t = 0; t < trials; ++t) {
    for (int attempt = 0; attempt < 32; ++attempt) {
      std::array<uint64_t, kNumVars> pt{dist(rng), dist(rng), dist(rng)};
      uint64_t da = a.den_.eval_mod(pt, kPrime);
      uint64_t db = b.den_.eval_mod(pt, kPrime);
      if (da == 0 || db == 0) continue;  // redraw
      uint64_t na = a.num_.eval_mod(pt, kPrime);
      uint64_t nb = b.num_.eval_mod(pt, kPrime);
      // na/da == nb/db  <=>  na*db == nb*da  (mod p)
      if (mulmod(na, db) != mulmod(nb, da)) return false;
      break;
    }
  }
  return true;
}

Scalar Scalar::oriented(const Orientation& o) const {
  if (!o.flip_q && !o.flip_d) return *this;
  Poly n = num_, d = den_;
  for (int var = 0; var < 2; ++var) {
    bool flip = (var == 0) ? o.flip_q : o.flip_d;
    if (!flip) continue;
    int dn = n.degree(var), dd = d.degree(var);
    int m = std::max(dn, dd);
    n = n.reverse_var(var, dn).mul_term(Poly::variable(var, m - dn).leading_mono(), 1);
    d = d.reverse_var(var, dd).mul_term(Poly::variable(var, m - dd).leading_mono(), 1);
  }
  return Scalar(std::move(n), std::move(d));
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  a.reduce();
  b.reduce();
  int c = Poly::cmp(a.num_, b.num_);
  if (c != 0) return c;
  return Poly::cmp(a.den_, b.den_);
}

std::string Scalar::str() const {
  reduce();
  if (den_.is_one()) return num_.str();
  std::string n = num_.str();
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.str();
  if (den_.size() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

uint64_t Scalar::hash() const {
  reduce();
  return num_.hash() * 1000003ull + den_.hash();
}

}  // namespace qtor
