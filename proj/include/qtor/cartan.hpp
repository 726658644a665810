#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qtor {

/// Permutation of {1..N}; image(i) is 1-based.
struct Permutation {
  std::vector<int> img;  // img[i-1] = sigma(i)

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  /// The N-cycle (1,2,...,N): i -> i+1.
  static Permutation rotation(int n);
  int n() const { return (int)img.size(); }
  int operator()(int i) const { return img[i - 1]; }
  Permutation inverse() const;
  /// (a*b)(x) = a(b(x)).
  Permutation operator*(const Permutation& b) const;
  bool is_identity() const;
  bool operator==(const Permutation&) const = default;
};

/// A parity sequence: N-tuple over {+1,-1} with exactly m entries +1, m != n,
/// N = m + n >= 3. Entries are s_1..s_N; access is cyclic.
class ParitySequence {
 public:
  ParitySequence() = default;
  explicit ParitySequence(std::vector<int> entries);
  static ParitySequence standard(int m, int n);

  int size() const { return (int)v_.size(); }
  int m() const { return m_; }
  int n() const { return size() - m_; }
  /// s_i for any integer i (cyclic; s_0 = s_N).
  int s(int i) const;
  const std::vector<int>& entries() const { return v_; }

  /// sigma s with (sigma s)_i = s_{sigma^{-1}(i)}.
  ParitySequence acted(const Permutation& g) const;
  /// tau s = (s_N, s_1, ..., s_{N-1}).
  ParitySequence rotated() const { return acted(Permutation::rotation(size())); }
  /// -s (swaps m and n).
  ParitySequence negated() const;
  /// s' with s'_j = s_{m+1-j}: the diagram-reversal partner used by omega.
  ParitySequence omega_partner() const;

  bool operator==(const ParitySequence&) const = default;
  bool operator<(const ParitySequence& o) const { return v_ < o.v_; }
  std::string str() const;

 private:
  std::vector<int> v_;
  int m_ = 0;
};

/// All parity sequences for (m,n), ordered lexicographically with +1 < -1.
std::vector<ParitySequence> enumerate_parities(int m, int n);

/// Cartan-type data attached to a parity sequence.
struct CartanData {
  ParitySequence s;
  std::vector<std::vector<int>> a_hat;  // N x N affine Cartan matrix
  std::vector<std::vector<int>> a;      // (N-1) x (N-1) finite part (nodes 1..N-1)
  std::vector<std::vector<int>> m_mat;  // N x N, M_{i+1,i} = -M_{i,i+1} = s_{i+1}
  std::vector<std::vector<int>> b_mat;  // N x N, B_{i,j} = s_i (d_{i,j} - d_{i,j+1})
  std::vector<int> node_parity;         // size N, (1 - s_i s_{i+1})/2
  std::vector<int> mu;                  // size N-1, mu[i-1] = -(s_1+..+s_i)

  int N() const { return s.size(); }
  int A(int i, int j) const;            // affine entries, cyclic node indices
  int M(int i, int j) const;
  int B(int i, int j) const;
  int parity_of_node(int i) const;      // 0/1, cyclic
  int mu_of(int i) const;               // i in 1..N-1
  /// <alpha_i, alpha_j> pairing of simple-root lattice vectors given as
  /// coordinate vectors over the affine node set.
  long long pairing(const std::vector<int>& beta, const std::vector<int>& gamma) const;

  std::string json() const;
};

CartanData cartan_data(const ParitySequence& s);

/// Determinant of an integer matrix (fraction-free Gaussian elimination).
long long int_det(std::vector<std::vector<long long>> m);

/// In the appendix the affine node set is identified with {1..N}; this is the
/// delta_{i>j} comparison under that identification (node 0 counts as N).
bool gt_hat(int i, int j, int N);

}  // namespace qtor
