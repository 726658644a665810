#include "qtor/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qtor {

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img.resize(n);
  std::iota(p.img.begin(), p.img.end(), 1);
  return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.img[a - 1], p.img[b - 1]);
  return p;
}

Permutation Permutation::rotation(int n) {
  Permutation p;
  p.img.resize(n);
  for (int i = 1; i <= n; ++i) p.img[i - 1] = i % n + 1;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img.resize(img.size());
  for (int i = 1; i <= n(); ++i) p.img[img[i - 1] - 1] = i;
  return p;
}

Permutation Permutation::operator*(const Permutation& b) const {
  if (n() != b.n()) throw std::domain_error("permutation size mismatch");
  Permutation p;
  p.img.resize(img.size());
  for (int i = 1; i <= n(); ++i) p.img[i - 1] = (*this)(b(i));
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (img[i - 1] != i) return false;
  return true;
}

ParitySequence::ParitySequence(std::vector<int> entries) : v_(std::move(entries)) {
  int N = (int)v_.size();
  for (int x : v_)
    if (x != 1 && x != -1) throw std::domain_error("parity entries must be +1/-1");
  m_ = (int)std::count(v_.begin(), v_.end(), 1);
  int nn = N - m_;
  if (m_ == nn) throw std::domain_error("parity sequence requires m != n");
  if (N < 3) throw std::domain_error("parity sequence requires m + n >= 3");
}

ParitySequence ParitySequence::standard(int m, int n) {
  std::vector<int> v(m + n, -1);
  for (int i = 0; i < m; ++i) v[i] = 1;
  return ParitySequence(std::move(v));
}

int ParitySequence::s(int i) const {
  int N = size();
  int k = ((i - 1) % N + N) % N;
  return v_[k];
}

ParitySequence ParitySequence::acted(const Permutation& g) const {
  if (g.n() != size()) throw std::domain_error("permutation/parity size mismatch");
  Permutation gi = g.inverse();
  std::vector<int> w(size());
  for (int i = 1; i <= size(); ++i) w[i - 1] = v_[gi(i) - 1];
  return ParitySequence(std::move(w));
}

ParitySequence ParitySequence::negated() const {
  std::vector<int> w(v_);
  for (int& x : w) x = -x;
  return ParitySequence(std::move(w));
}

ParitySequence ParitySequence::omega_partner() const {
  std::vector<int> w(size());
  for (int j = 1; j <= size(); ++j) w[j - 1] = s(m() + 1 - j);
  return ParitySequence(std::move(w));
}

std::string ParitySequence::str() const {
  std::string out = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) out += ",";
    out += v_[i] == 1 ? "1" : "-1";
  }
  return out + ")";
}

std::vector<ParitySequence> enumerate_parities(int m, int n) {
  if (m < 0 || n < 0 || m == n || m + n < 3)
    throw std::domain_error("enumerate_parities: need m,n >= 0, m != n, m+n >= 3");
  int N = m + n;
  // Lexicographic with +1 < -1 is binary-string lex with 0 (=+1) < 1 (=-1).
  std::vector<std::vector<int>> strings;
  std::vector<int> cur(N, 0);
  auto rec = [&](auto&& self, int pos, int ones) -> void {
    if (pos == N) {
      if (ones == n) strings.push_back(cur);
      return;
    }
    if (N - pos < n - ones) return;
    cur[pos] = 0;
    if (ones <= n) self(self, pos + 1, ones);
    cur[pos] = 1;
    if (ones + 1 <= n) self(self, pos + 1, ones + 1);
    cur[pos] = 0;
  };
  rec(rec, 0, 0);
  std::vector<ParitySequence> out;
  out.reserve(strings.size());
  for (auto& sbin : strings) {
    std::vector<int> v(N, 1);
    for (int i = 0; i < N; ++i)
      if (sbin[i]) v[i] = -1;
    out.push_back(ParitySequence(std::move(v)));
  }
  return out;
}

CartanData cartan_data(const ParitySequence& s) {
  CartanData c;
  c.s = s;
  int N = s.size();
  auto idx = [N](int i) { return ((i % N) + N) % N; };  // node index mod N
  c.a_hat.assign(N, std::vector<int>(N, 0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int v = 0;
      if (i == j) v += s.s(i) + s.s(i + 1);
      if (idx(j + 1) == i) v -= s.s(i);
      if (idx(i + 1) == j) v -= s.s(j);
      c.a_hat[i][j] = v;
    }
  c.a.assign(N - 1, std::vector<int>(N - 1, 0));
  for (int i = 1; i <= N - 1; ++i)
    for (int j = 1; j <= N - 1; ++j) {
      // finite part is not cyclic: only literal Kronecker deltas
      int v = 0;
      if (i == j) v += s.s(i) + s.s(i + 1);
      if (j + 1 == i) v -= s.s(i);
      if (i + 1 == j) v -= s.s(j);
      c.a[i - 1][j - 1] = v;
    }
  c.m_mat.assign(N, std::vector<int>(N, 0));
  for (int i = 0; i < N; ++i) {
    int ip1 = idx(i + 1);
    c.m_mat[ip1][i] = s.s(i + 1);
    c.m_mat[i][ip1] = -s.s(i + 1);
  }
  c.b_mat.assign(N, std::vector<int>(N, 0));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      int v = 0;
      if (i == j) v += s.s(i);
      if (idx(j + 1) == i) v -= s.s(i);
      c.b_mat[i][j] = v;
    }
  c.node_parity.resize(N);
  for (int i = 0; i < N; ++i) c.node_parity[i] = (1 - s.s(i) * s.s(i + 1)) / 2;
  c.mu.resize(N - 1);
  int acc = 0;
  for (int i = 1; i <= N - 1; ++i) {
    acc += s.s(i);
    c.mu[i - 1] = -acc;
  }
  return c;
}

int CartanData::A(int i, int j) const {
  int Nn = N();
  return a_hat[((i % Nn) + Nn) % Nn][((j % Nn) + Nn) % Nn];
}
int CartanData::M(int i, int j) const {
  int Nn = N();
  return m_mat[((i % Nn) + Nn) % Nn][((j % Nn) + Nn) % Nn];
}
int CartanData::B(int i, int j) const {
  int Nn = N();
  return b_mat[((i % Nn) + Nn) % Nn][((j % Nn) + Nn) % Nn];
}
int CartanData::parity_of_node(int i) const {
  int Nn = N();
  return node_parity[((i % Nn) + Nn) % Nn];
}
int CartanData::mu_of(int i) const {
  if (i < 1 || i > N() - 1) throw std::domain_error("mu index out of range");
  return mu[i - 1];
}

long long CartanData::pairing(const std::vector<int>& beta,
                              const std::vector<int>& gamma) const {
  long long acc = 0;
  int Nn = N();
  for (int i = 0; i < Nn; ++i)
    for (int j = 0; j < Nn; ++j)
      acc += (long long)beta[i] * a_hat[i][j] * gamma[j];
  return acc;
}

std::string CartanData::json() const {
  auto mat = [](const std::vector<std::vector<int>>& m) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < m.size(); ++i) {
      if (i) os << ",";
      os << "[";
      for (size_t j = 0; j < m[i].size(); ++j) {
        if (j) os << ",";
        os << m[i][j];
      }
      os << "]";
    }
    os << "]";
    return os.str();
  };
  auto vec = [](const std::vector<int>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) os << ",";
      os << v[i];
    }
    os << "]";
    return os.str();
  };
  std::ostringstream os;
  os << "{\"s\":" << vec(s.entries()) << ",\"A_hat\":" << mat(a_hat)
     << ",\"A\":" << mat(a) << ",\"M\":" << mat(m_mat) << ",\"B\":" << mat(b_mat)
     << ",\"parity\":" << vec(node_parity) << ",\"mu\":" << vec(mu) << "}";
  return os.str();
}

long long int_det(std::vector<std::vector<long long>> m) {
  // Bareiss fraction-free elimination.
  int n = (int)m.size();
  if (n == 0) return 1;
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool gt_hat(int i, int j, int N) {
  auto lift = [N](int x) {
    int k = ((x % N) + N) % N;
    return k == 0 ? N : k;
  };
  return lift(i) > lift(j);
}

}  // namespace qtor
