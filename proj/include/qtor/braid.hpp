#pragma once

#include <string>
#include <vector>

#include "qtor/cartan.hpp"

namespace qtor {

/// A letter of the extended affine braid group B_N (T_i, tau, X_i) or of the
/// toroidal braid group B^_N (That_i, tauhat, Yhat_j). pow is +1 or -1.
struct BraidLetter {
  enum class Kind { T, Tau, X, That, TauHat, Yhat };
  Kind kind;
  int index = 0;  // node index where applicable
  int pow = 1;

  bool inverse_of(const BraidLetter& o) const {
    return kind == o.kind && index == o.index && pow == -o.pow;
  }
  bool operator==(const BraidLetter&) const = default;
  std::string str() const;
};

/// Freely reduced braid word; letters apply right-to-left (suffix convention).
struct BraidWord {
  std::vector<BraidLetter> letters;

  static BraidWord from(std::vector<BraidLetter> ls);  // freely reduces
  BraidWord operator*(const BraidWord& o) const;       // concatenation (this then o)
  BraidWord inverse() const;
  BraidWord pow(int k) const;
  bool operator==(const BraidWord&) const = default;
  std::string str() const;
};

BraidWord free_reduce(BraidWord w);

/// gamma: X_1 -> tau T_{N-1}...T_1, T_i -> T_i. X_{i>1} are first expanded via
/// the lattice relations X_2 = T_1^{-1} X_1 T_1^{-1} X_1 and
/// X_{i+1} = X_{i-1}^{-1} T_i^{-1} X_i T_i^{-1} X_i.
BraidWord gamma_translate(const BraidWord& w, int N);

/// pi: T_i -> sigma_i (sigma_0 = (1,N)), tau -> the N-cycle, X_i -> id.
/// Toroidal letters map the same way (Yhat -> id).
Permutation project_pi(const BraidWord& w, int N);

/// The Fourier transform of the toroidal braid group:
/// Phi(That_i) = That_i, Phi(Yhat_j) = That_{j-1}^{-1}..That_1^{-1} tauhat That_{N-1}..That_j,
/// Phi(tauhat) = Yhat_1^{-1} That_1...That_{N-1}.
BraidWord fourier(const BraidWord& w, int N);

/// Convenience letter constructors.
BraidWord bw_T(int i, int pow = 1);
BraidWord bw_tau(int pow = 1);
BraidWord bw_X(int i, int pow = 1);
BraidWord bw_That(int i, int pow = 1);
BraidWord bw_tauhat(int pow = 1);
BraidWord bw_Yhat(int i, int pow = 1);

}  // namespace qtor
