#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "qtor/presentations.hpp"

namespace qtor {

enum class Verdict { Zero, NonzeroNormal, Inconclusive };
const char* verdict_name(Verdict v);

struct Rule {
  Word lhs;
  Expr rhs;        // lhs == rhs modulo the ideal
  std::string id;  // instance id of origin
};

struct NormalizeOutcome {
  Expr result;
  Verdict status = Verdict::Inconclusive;
  long steps = 0;
  std::map<std::string, long> fired;  // rule id -> count
};

/// Oriented relation instances plus the built-in group-like handling
/// (inverse cancellation, Cartan-group sorting, centrality of C/c). Immutable
/// after construction; safe to share across threads.
class RewriteSystem {
 public:
  static RewriteSystem build(CtxPtr ctx, const std::vector<RelationInstance>& instances);

  const CtxPtr& ctx() const { return ctx_; }
  uint64_t fingerprint() const { return fingerprint_; }
  size_t rule_count() const { return rules_.size(); }
  const std::vector<std::string>& non_orientable() const { return non_orientable_; }

  /// Group-like word cleanup: cancel inverse pairs, sort commuting Cartan
  /// letters, move central letters to the front. Coefficient-free.
  static Word structural_word(const AlgebraCtx& ctx, Word w);
  Expr structural(const Expr& x) const;

  NormalizeOutcome normalize(const Expr& x, long budget = 100000,
                             uint64_t shuffle_seed = 0) const;
  /// normalize + a second randomized pass at budget*4 before conceding
  /// NonzeroNormal.
  Verdict is_zero(const Expr& x, long budget = 100000, uint64_t seed = 1) const;

  struct Match {
    size_t pos;
    const Rule* rule;
  };
  std::optional<Match> find_match(const Word& w, uint64_t shuffle_seed) const;

  const std::vector<std::pair<std::string, Expr>>& instances() const {
    return instances_;
  }

 private:
  CtxPtr ctx_;
  std::vector<Rule> rules_;
  struct WordHasher {
    size_t operator()(const Word& w) const { return (size_t)word_hash(w); }
  };
  std::unordered_map<Word, size_t, WordHasher> by_lhs_;
  std::vector<size_t> lengths_;  // distinct rule lengths, ascending
  std::vector<std::string> non_orientable_;
  uint64_t fingerprint_ = 0;
  mutable std::shared_ptr<std::unordered_map<Word, bool, WordHasher>> irreducible_;
  mutable std::shared_ptr<std::mutex> mu_;
};

/// Ideal membership helped by invertibility: tries is_zero on u * x for unit
/// words u built from the Cartan group-likes (1, K_a^{e}, K_a^{e} K_b^{f}).
/// Sound because u is invertible. Needed when x has no group-like letters but
/// the relation set's rules carry them (the K-form Cartan block).
Verdict is_zero_mod_units(const RewriteSystem& sys, const Expr& x, long budget,
                          uint64_t seed = 1);

/// Process-wide normal-form cache (in memory, plus an optional on-disk layer).
void set_nf_cache_dir(const std::string& dir);  // empty disables the disk layer
void clear_nf_cache();
NormalizeOutcome normalize_cached(const RewriteSystem& sys, const Expr& x,
                                  long budget);
Verdict is_zero_cached(const RewriteSystem& sys, const Expr& x, long budget,
                       uint64_t seed = 1);

}  // namespace qtor
