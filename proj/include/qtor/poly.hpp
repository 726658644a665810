#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qtor {

/// Number of ring variables: hq (= q^{1/2}), hd (= d^{1/2}), u (spectral shift).
inline constexpr int kNumVars = 3;

inline const char* var_name(int v) {
  static const char* names[kNumVars] = {"hq", "hd", "u"};
  return names[v];
}

/// Monomial exponent vector, non-negative entries.
struct Mono {
  std::array<int32_t, kNumVars> e{0, 0, 0};

  int total() const { return e[0] + e[1] + e[2]; }
  bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }
  bool operator==(const Mono&) const = default;
};

/// Degree-lex order, hq > hd > u.
inline int mono_cmp(const Mono& a, const Mono& b) {
  if (a.total() != b.total()) return a.total() < b.total() ? -1 : 1;
  for (int i = 0; i < kNumVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

/// Sparse polynomial over Z in hq, hd, u. Terms sorted descending, coefficients
/// nonzero. The substance of the artifact sits above this layer; the integer
/// coefficients are GMP's.
class Poly {
 public:
  using Term = std::pair<Mono, mpz_class>;

  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly integer(long v);
  static Poly integer(const mpz_class& v);
  static Poly monomial(const Mono& m, const mpz_class& c = 1);
  /// Single variable to a non-negative power.
  static Poly variable(int var, int exp = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_integer() const;  // constant polynomial
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }

  const Mono& leading_mono() const { return terms_.front().first; }
  const mpz_class& leading_coeff() const { return terms_.front().second; }

  int degree(int var) const;            // max exponent of var, -1 for zero poly
  int low_degree(int var) const;        // min exponent of var, 0 for zero poly
  mpz_class content() const;            // gcd of coefficients (non-negative)
  Mono mono_content() const;            // componentwise min exponent

  Poly operator-() const;
  Poly operator+(const Poly&) const;
  Poly operator-(const Poly&) const;
  Poly operator*(const Poly&) const;
  Poly mul_term(const Mono& m, const mpz_class& c) const;
  Poly pow(unsigned k) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  /// Total order for canonical containers.
  static int cmp(const Poly& a, const Poly& b);

  /// Exact division; aborts if the division has a remainder.
  Poly divexact(const Poly& d) const;
  static Poly gcd(const Poly& a, const Poly& b);

  /// Substitute var -> 1/var given headroom `deg`; caller multiplies the
  /// counterpart through. Returns poly with exponents e -> deg - e.
  Poly reverse_var(int var, int deg) const;

  uint64_t eval_mod(const std::array<uint64_t, kNumVars>& pt, uint64_t p) const;

  std::string str() const;
  uint64_t hash() const;

  static Poly from_terms(std::vector<Term> t);  // sorts, combines, prunes

 private:
  std::vector<Term> terms_;
};

mpz_class mpz_pow_ui_wrap(const mpz_class& b, unsigned long e);

}  // namespace qtor
