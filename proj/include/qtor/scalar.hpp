#pragma once

#include <cstdint>
#include <string>

#include "qtor/poly.hpp"

namespace qtor {

/// Parameter orientation of an algebra instance: whether the formal q and/or d
/// are inverted relative to the reference presentation. This is how the maps
/// "to the algebra with q1 and q3 switched" (d -> 1/d) and the change-of-parity
/// map (q -> 1/q) are realized: transported coefficients stay untouched, the
/// target relation set is built with the flipped parameters.
struct Orientation {
  bool flip_q = false;
  bool flip_d = false;
  bool operator==(const Orientation&) const = default;
  Orientation compose(const Orientation& o) const {
    return {bool(flip_q ^ o.flip_q), bool(flip_d ^ o.flip_d)};
  }
  std::string str() const {
    std::string s;
    if (flip_q) s += "q";
    if (flip_d) s += "d";
    return s.empty() ? "std" : ("inv_" + s);
  }
};

/// Exact rational function in q^{1/2}, d^{1/2} and u over the integers.
/// Stored as num/den of polynomials in hq, hd, u; Laurent monomials live in
/// the denominator. Light normalization (monomial + integer content) is kept
/// at all times; the full gcd reduction runs lazily.
class Scalar {
 public:
  Scalar() : num_(), den_(Poly::integer(1)) {}
  Scalar(long v) : num_(Poly::integer(v)), den_(Poly::integer(1)) {}
  Scalar(Poly num, Poly den);

  static Scalar integer(long v) { return Scalar(v); }
  /// hq^k, hd^k, u^k for any integer k.
  static Scalar hq_pow(int k) { return var_pow(0, k); }
  static Scalar hd_pow(int k) { return var_pow(1, k); }
  static Scalar u_pow(int k) { return var_pow(2, k); }
  static Scalar q_pow(int k) { return var_pow(0, 2 * k); }
  static Scalar d_pow(int k) { return var_pow(1, 2 * k); }
  static Scalar q() { return q_pow(1); }
  static Scalar d() { return d_pow(1); }
  /// q1 = d q^{-1}, q2 = q^2, q3 = d^{-1} q^{-1}.
  static Scalar q1() { return d() * q_pow(-1); }
  static Scalar q2() { return q_pow(2); }
  static Scalar q3() { return d_pow(-1) * q_pow(-1); }
  /// [k] = (q^k - q^{-k}) / (q - q^{-1}); [0]=0, [-k]=-[k].
  static Scalar qint(long k);
  static Scalar var_pow(int var, int k);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;

  Scalar operator-() const;
  Scalar operator+(const Scalar&) const;
  Scalar operator-(const Scalar&) const;
  Scalar operator*(const Scalar&) const;
  Scalar operator/(const Scalar&) const;  // throws on zero divisor
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  /// Exact equality of rational functions (cross-multiplied, no gcd needed).
  bool equals(const Scalar& o) const;
  bool operator==(const Scalar& o) const { return equals(o); }

  /// Monte-Carlo equality over a 61-bit prime field. `false` is definitive;
  /// `true` is only probable and must be confirmed exactly before a Zero
  /// verdict is reported.
  static bool probabilistic_equal(const Scalar& a, const Scalar& b, int trials,
                                  uint64_t seed = 0x9e3779b97f4a7c15ull);

  /// Canonical form: gcd-reduced, den content-free with positive leading
  /// coefficient. Idempotent.
  void reduce() const;

  /// Apply the orientation substitution (hq -> 1/hq and/or hd -> 1/hd).
  Scalar oriented(const Orientation& o) const;

  /// Total order on canonical forms (reduces both sides).
  static int cmp(const Scalar& a, const Scalar& b);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  std::string str() const;   // canonical "num/den"
  uint64_t hash() const;     // canonical

 private:
  void light_normalize();
  mutable Poly num_, den_;
  mutable bool reduced_ = false;
};

}  // namespace qtor
