#include "qtor/braid.hpp"

#include <sstream>
#include <stdexcept>

namespace qtor {

std::string BraidLetter::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::T: os << "T[" << index << "]"; break;
    case Kind::Tau: os << "tau"; break;
    case Kind::X: os << "X[" << index << "]"; break;
    case Kind::That: os << "That[" << index << "]"; break;
    case Kind::TauHat: os << "tauhat"; break;
    case Kind::Yhat: os << "Yhat[" << index << "]"; break;
  }
  if (pow < 0) os << "^-1";
  return os.str();
}

BraidWord free_reduce(BraidWord w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.letters.size(); ++i)
      if (w.letters[i].inverse_of(w.letters[i + 1])) {
        w.letters.erase(w.letters.begin() + i, w.letters.begin() + i + 2);
        changed = true;
        break;
      }
  }
  return w;
}

BraidWord BraidWord::from(std::vector<BraidLetter> ls) {
  BraidWord w;
  w.letters = std::move(ls);
  return free_reduce(std::move(w));
}

BraidWord BraidWord::operator*(const BraidWord& o) const {
  std::vector<BraidLetter> ls = letters;
  ls.insert(ls.end(), o.letters.begin(), o.letters.end());
  return from(std::move(ls));
}

BraidWord BraidWord::inverse() const {
  std::vector<BraidLetter> ls;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    BraidLetter l = *it;
    l.pow = -l.pow;
    ls.push_back(l);
  }
  return from(std::move(ls));
}

BraidWord BraidWord::pow(int k) const {
  BraidWord base = k >= 0 ? *this : inverse();
  BraidWord out;
  for (int j = 0; j < std::abs(k); ++j) out = out * base;
  return out;
}

std::string BraidWord::str() const {
  if (letters.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) s += " ";
    s += letters[i].str();
  }
  return s;
}

BraidWord bw_T(int i, int pow) { return BraidWord::from({{BraidLetter::Kind::T, i, pow}}); }
BraidWord bw_tau(int pow) { return BraidWord::from({{BraidLetter::Kind::Tau, 0, pow}}); }
BraidWord bw_X(int i, int pow) { return BraidWord::from({{BraidLetter::Kind::X, i, pow}}); }
BraidWord bw_That(int i, int pow) {
  return BraidWord::from({{BraidLetter::Kind::That, i, pow}});
}
BraidWord bw_tauhat(int pow) {
  return BraidWord::from({{BraidLetter::Kind::TauHat, 0, pow}});
}
BraidWord bw_Yhat(int i, int pow) {
  return BraidWord::from({{BraidLetter::Kind::Yhat, i, pow}});
}

namespace {

// X_i as a word in tau and T via gamma and the lattice relations.
BraidWord x_word(int i, int N) {
  if (i < 1 || i > N - 1) throw std::domain_error("X index out of range");
  // gamma(X_1) = tau T_{N-1} ... T_1
  BraidWord x1 = bw_tau();
  for (int j = N - 1; j >= 1; --j) x1 = x1 * bw_T(j);
  if (i == 1) return x1;
  BraidWord prev2;  // X_{i-1} word (X_0 = 1)
  BraidWord prev = x1;
  for (int k = 1; k < i; ++k) {
    // X_{k+1} = X_{k-1}^{-1} T_k^{-1} X_k T_k^{-1} X_k
    BraidWord next = prev2.inverse() * bw_T(k, -1) * prev * bw_T(k, -1) * prev;
    prev2 = prev;
    prev = next;
  }
  return prev;
}

}  // namespace

BraidWord gamma_translate(const BraidWord& w, int N) {
  BraidWord out;
  for (auto& l : w.letters) {
    switch (l.kind) {
      case BraidLetter::Kind::T:
        out = out * bw_T(l.index, l.pow);
        break;
      case BraidLetter::Kind::Tau:
        out = out * bw_tau(l.pow);
        break;
      case BraidLetter::Kind::X: {
        BraidWord xw = x_word(l.index, N);
        out = out * (l.pow > 0 ? xw : xw.inverse());
        break;
      }
      default:
        throw std::domain_error("gamma acts on the affine braid group only");
    }
  }
  return out;
}

Permutation project_pi(const BraidWord& w, int N) {
  // letters apply right to left
  Permutation acc = Permutation::identity(N);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    Permutation p = Permutation::identity(N);
    switch (it->kind) {
      case BraidLetter::Kind::T:
      case BraidLetter::Kind::That: {
        int i = ((it->index % N) + N) % N;
        p = (i == 0) ? Permutation::transposition(N, 1, N)
                     : Permutation::transposition(N, i, i + 1);
        break;
      }
      case BraidLetter::Kind::Tau:
      case BraidLetter::Kind::TauHat:
        p = it->pow > 0 ? Permutation::rotation(N)
                        : Permutation::rotation(N).inverse();
        break;
      case BraidLetter::Kind::X:
      case BraidLetter::Kind::Yhat:
        break;  // parity preserving
    }
    acc = p * acc;
  }
  return acc;
}

BraidWord fourier(const BraidWord& w, int N) {
  auto phi_yhat = [N](int j) {
    // That_{j-1}^{-1} ... That_1^{-1} tauhat That_{N-1} ... That_j
    BraidWord out;
    for (int k = j - 1; k >= 1; --k) out = out * bw_That(k, -1);
    out = out * bw_tauhat();
    for (int k = N - 1; k >= j; --k) out = out * bw_That(k);
    return out;
  };
  BraidWord out;
  for (auto& l : w.letters) {
    BraidWord img;
    switch (l.kind) {
      case BraidLetter::Kind::That:
        img = bw_That(l.index);
        break;
      case BraidLetter::Kind::Yhat: {
        int j = l.index;
        if (j == 0) {
          // Yhat_0 = That_{N-1}^{-1} Yhat_{N-1} That_{N-1}^{-1} from the
          // lattice relation, pushed through Phi
          img = bw_That(N - 1, -1) * phi_yhat(N - 1) * bw_That(N - 1, -1);
        } else {
          img = phi_yhat(j);
        }
        break;
      }
      case BraidLetter::Kind::TauHat: {
        img = bw_Yhat(1, -1);
        for (int k = 1; k <= N - 1; ++k) img = img * bw_That(k);
        break;
      }
      default:
        throw std::domain_error("Phi acts on the toroidal braid group only");
    }
    out = out * (l.pow > 0 ? img : img.inverse());
  }
  return out;
}

}  // namespace qtor
