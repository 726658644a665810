#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qtor/cartan.hpp"
#include "qtor/scalar.hpp"

namespace qtor {

enum class AlgebraKind : uint8_t { SlChevalley, SlCurrent, Toroidal, GlCurrent };

std::string algebra_kind_name(AlgebraKind k);

enum class Family : uint8_t {
  // Drinfeld-Jimbo Chevalley
  gen_e, gen_f, gen_t, gen_t_inv,
  // sl current
  gen_xp, gen_xm, gen_h, gen_k, gen_k_inv, gen_c, gen_c_inv,
  // toroidal
  gen_E, gen_F, gen_H, gen_K, gen_K_inv, gen_C, gen_C_inv,
  // gl current
  gen_phi, gen_phi_inv, gen_phim, gen_glxp, gen_glxm, gen_glc, gen_glc_inv,
};

/// Coarse role of a family in the monomial order: raising / Cartan mode /
/// lowering / Cartan group-like / central.
enum class FamilyClass : uint8_t { Raising, CartanMode, Lowering, CartanGroup, Central };

FamilyClass family_class(Family f);
const char* family_name(Family f);
/// Inverse partner for invertible group-like families; throws otherwise.
Family family_inverse(Family f);
bool family_invertible(Family f);
/// +1 raising (weight +alpha_node), -1 lowering, 0 otherwise.
int family_weight_sign(Family f);
bool family_has_mode(Family f);       // mode index is meaningful
bool family_mode_nonzero(Family f);   // h/H/phim require mode != 0
AlgebraKind family_algebra(Family f);

struct GeneratorSymbol {
  Family fam{};
  int16_t node = 0;
  int32_t mode = 0;

  bool operator==(const GeneratorSymbol&) const = default;
  std::string str() const;
};

/// Total symbol order. "Larger" symbols head the words the rewriter removes:
/// raising > Cartan-mode > lowering > Cartan-group > central; then lower node,
/// then higher mode, then family id.
int symbol_cmp(const GeneratorSymbol& a, const GeneratorSymbol& b);

using Word = std::vector<GeneratorSymbol>;

/// Weighted graded lex order on words. Central and Cartan-group symbols weigh
/// nothing so that EF-type rewrites strictly decrease the order.
int word_cmp(const Word& a, const Word& b);
int word_weight(const Word& w);
uint64_t word_hash(const Word& w);
std::string word_str(const Word& w);

struct WordGreater {
  bool operator()(const Word& a, const Word& b) const { return word_cmp(a, b) > 0; }
};

/// Shared immutable context: which algebra, which parity sequence, which
/// parameter orientation.
struct AlgebraCtx {
  AlgebraKind kind;
  CartanData cartan;
  Orientation orient;

  int N() const { return cartan.N(); }
  const ParitySequence& parity() const { return cartan.s; }
  bool same(const AlgebraCtx& o) const {
    return kind == o.kind && cartan.s == o.cartan.s && orient == o.orient;
  }
  std::string str() const;
  /// 0/1 parity of a symbol in this context.
  int symbol_parity(const GeneratorSymbol& g) const;
  /// Validity per the family/realization and node/mode constraints.
  void validate(const GeneratorSymbol& g) const;
  /// Length of the grading vector: N for Chevalley, N (= N-1 nodes + delta)
  /// for sl/gl currents, N+1 for toroidal.
  int grading_len() const;
  std::vector<long long> symbol_grading(const GeneratorSymbol& g) const;
  /// Classical weight as alpha-lattice coordinates over the affine node set.
  std::vector<int> symbol_weight(const GeneratorSymbol& g) const;
};

using CtxPtr = std::shared_ptr<const AlgebraCtx>;
CtxPtr make_ctx(AlgebraKind kind, const ParitySequence& s, Orientation o = {});

/// Finite linear combination of words with exact scalar coefficients.
class Expr {
 public:
  Expr() = default;
  explicit Expr(CtxPtr ctx) : ctx_(std::move(ctx)) {}
  static Expr zero(CtxPtr ctx) { return Expr(std::move(ctx)); }
  static Expr unit(CtxPtr ctx);
  static Expr generator(CtxPtr ctx, GeneratorSymbol g);
  static Expr term(CtxPtr ctx, Word w, Scalar c);

  const CtxPtr& ctx() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  const std::map<Word, Scalar, WordGreater>& terms() const { return terms_; }

  Expr operator+(const Expr&) const;
  Expr operator-(const Expr&) const;
  Expr operator-() const;
  Expr operator*(const Expr&) const;  // concatenation product, no relations
  Expr scaled(const Scalar& c) const;
  void add_term(const Word& w, const Scalar& c);  // in place, merges

  /// Largest word (order-maximal term); expression must be nonzero.
  const Word& leading_word() const;
  const Scalar& leading_coeff() const;

  /// 0/1 parity when parity-homogeneous.
  std::optional<int> parity() const;
  /// Common classical weight when weight-homogeneous.
  std::optional<std::vector<int>> weight() const;
  /// Common grading vector when grading-homogeneous.
  std::optional<std::vector<long long>> grading() const;

  std::string str() const;
  std::string json() const;
  std::string latex() const;
  uint64_t hash() const;

 private:
  CtxPtr ctx_;
  std::map<Word, Scalar, WordGreater> terms_;
};

/// [x, y]_a = xy - (-1)^{|x||y|} a yx; inputs must be parity-homogeneous.
Expr super_bracket(const Expr& x, const Expr& y, const Scalar& a);
/// [[x, y]] = [x, y]_{q^{-<beta,gamma>}} from the classical weights.
Expr weighted_bracket(const Expr& x, const Expr& y);

/// Word-level helpers used by morphism application.
int word_parity(const AlgebraCtx& ctx, const Word& w);
/// Sign (-1)^{sum_{i<j} |g_i||g_j|} of the graded reversal of w.
int graded_reversal_sign(const AlgebraCtx& ctx, const Word& w);

/// Map an expression through a symbol-wise image table, multiplicatively.
/// Coefficients pass through unchanged. With antihom=true each word is
/// reversed; graded_sign selects the super convention (-1)^{sum |g_i||g_j|}
/// (parities taken in the source context).
Expr map_symbols(const Expr& x, const CtxPtr& target,
                 const std::function<Expr(const GeneratorSymbol&)>& image,
                 bool antihom = false, bool graded_sign = true);

}  // namespace qtor
