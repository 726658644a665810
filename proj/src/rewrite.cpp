#include "qtor/rewrite.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>

namespace qtor {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Zero: return "Zero";
    case Verdict::NonzeroNormal: return "NonzeroNormal";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

bool is_central(Family f) { return family_class(f) == FamilyClass::Central; }
bool is_group(Family f) { return family_class(f) == FamilyClass::CartanGroup; }
bool is_cmode(Family f) { return family_class(f) == FamilyClass::CartanMode; }

// Group-like letters commute with each other and with Cartan modes; central
// letters commute with everything. Cartan modes do not commute among
// themselves (their bracket has a central remainder handled by rules).
bool letters_commute(const GeneratorSymbol& a, const GeneratorSymbol& b) {
  if (is_central(a.fam) || is_central(b.fam)) return true;
  if (is_group(a.fam) && is_group(b.fam)) return true;
  if (is_group(a.fam) && is_cmode(b.fam)) return true;
  if (is_cmode(a.fam) && is_group(b.fam)) return true;
  return false;
}

bool inverse_pair(const GeneratorSymbol& a, const GeneratorSymbol& b) {
  if (!family_invertible(a.fam)) return false;
  return family_inverse(a.fam) == b.fam && a.node == b.node && a.mode == b.mode;
}

}  // namespace

Word RewriteSystem::structural_word(const AlgebraCtx&, Word w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      if (inverse_pair(w[i], w[i + 1])) {
        w.erase(w.begin() + i, w.begin() + i + 2);
        changed = true;
        break;
      }
      if (letters_commute(w[i], w[i + 1]) && symbol_cmp(w[i], w[i + 1]) > 0) {
        std::swap(w[i], w[i + 1]);
        changed = true;
      }
    }
  }
  return w;
}

Expr RewriteSystem::structural(const Expr& x) const {
  Expr out = Expr::zero(x.ctx());
  for (auto& [w, c] : x.terms()) out.add_term(structural_word(*ctx_, w), c);
  return out;
}

RewriteSystem RewriteSystem::build(CtxPtr ctx,
                                   const std::vector<RelationInstance>& instances) {
  RewriteSystem sys;
  sys.ctx_ = std::move(ctx);
  sys.irreducible_ = std::make_shared<std::unordered_map<Word, bool, WordHasher>>();
  sys.mu_ = std::make_shared<std::mutex>();
  uint64_t fp = 1469598103934665603ull;
  auto mix = [&fp](uint64_t v) {
    fp ^= v;
    fp *= 1099511628211ull;
  };
  auto add_instance = [&sys](const Expr& raw, const std::string& id) {
    Expr e = sys.structural(raw);
    if (e.is_zero()) return;
    const Word lead = e.leading_word();
    if (lead.empty()) {
      sys.non_orientable_.push_back(id);
      return;
    }
    Scalar lc = e.leading_coeff();
    Expr rest = Expr::zero(sys.ctx_);
    for (auto& [w, c] : e.terms()) {
      if (w == lead) continue;
      rest.add_term(w, c);
    }
    Rule r{lead, (-rest).scaled(lc.inverse()), id};
    if (sys.by_lhs_.count(r.lhs)) return;  // first orientation wins
    sys.by_lhs_.emplace(r.lhs, sys.rules_.size());
    sys.rules_.push_back(std::move(r));
  };
  for (auto& inst : instances) {
    add_instance(inst.expr, inst.id);
    // group-like closure: a two-term conjugation relation g x = a x g with g
    // invertible also yields x g^{-1} = a g^{-1} x
    Expr e = sys.structural(inst.expr);
    if (e.size() == 2) {
      auto it = e.terms().begin();
      const Word &w1 = it->first;
      Scalar c1 = it->second;
      ++it;
      const Word &w2 = it->first;
      Scalar c2 = it->second;
      if (w1.size() == 2 && w2.size() == 2 && w1[0] == w2[1] && w1[1] == w2[0]) {
        for (int which : {0, 1}) {
          GeneratorSymbol g = which ? w1[1] : w1[0];
          GeneratorSymbol x = which ? w1[0] : w1[1];
          bool g_first = which == 0;
          if (family_class(g.fam) != FamilyClass::CartanGroup) continue;
          if (!family_invertible(g.fam)) continue;
          if (letters_commute(g, x)) continue;
          // g_first: c1 g x + c2 x g = 0, lambda = -c2/c1 with gx = lambda xg
          Scalar lam = g_first ? (-c2 / c1) : (-c1 / c2);
          GeneratorSymbol gi{family_inverse(g.fam), g.node, g.mode};
          Expr lhs = Expr::term(sys.ctx_, Word{x, gi}, Scalar(1));
          Expr rhs = Expr::term(sys.ctx_, Word{gi, x}, lam);
          add_instance(lhs - rhs, inst.id + ".inv");
          break;
        }
      }
    }
  }
  std::vector<size_t> lens;
  for (auto& r : sys.rules_) lens.push_back(r.lhs.size());
  std::sort(lens.begin(), lens.end());
  lens.erase(std::unique(lens.begin(), lens.end()), lens.end());
  sys.lengths_ = std::move(lens);
  for (auto& r : sys.rules_) {
    mix(word_hash(r.lhs));
    mix(r.rhs.hash());
    for (char c : r.id) mix((uint64_t)c);
  }
  mix((uint64_t)sys.ctx_->kind);
  for (char c : sys.ctx_->str()) mix((uint64_t)c);
  sys.fingerprint_ = fp;
  return sys;
}

std::optional<RewriteSystem::Match> RewriteSystem::find_match(
    const Word& w, uint64_t shuffle_seed) const {
  std::vector<Match> cands;
  Word sub;
  for (size_t len : lengths_) {
    if (len > w.size()) break;
    for (size_t pos = 0; pos + len <= w.size(); ++pos) {
      sub.assign(w.begin() + pos, w.begin() + pos + len);
      auto it = by_lhs_.find(sub);
      if (it != by_lhs_.end()) cands.push_back(Match{pos, &rules_[it->second]});
    }
  }
  if (cands.empty()) return std::nullopt;
  if (shuffle_seed) {
    std::mt19937_64 rng(shuffle_seed ^ word_hash(w));
    return cands[rng() % cands.size()];
  }
  // longest match first (longer rules carry structure a shorter conjugation
  // move would destroy), then lowest id, then leftmost
  auto better = [](const Match& a, const Match& b) {
    if (a.rule->lhs.size() != b.rule->lhs.size())
      return a.rule->lhs.size() > b.rule->lhs.size();
    if (a.rule->id != b.rule->id) return a.rule->id < b.rule->id;
    return a.pos < b.pos;
  };
  auto best = cands.begin();
  for (auto it = cands.begin() + 1; it != cands.end(); ++it)
    if (better(*it, *best)) best = it;
  return *best;
}

NormalizeOutcome RewriteSystem::normalize(const Expr& x, long budget,
                                          uint64_t shuffle_seed) const {
  NormalizeOutcome out;
  // Every rewrite replaces a word by strictly smaller words, so one descending
  // sweep suffices: the largest remaining word is either reducible (rewrite in
  // place) or a settled part of the normal form (pop it).
  std::map<Word, Scalar, WordGreater> work;
  for (auto& [w, c] : x.terms()) {
    Word sw = structural_word(*ctx_, w);
    auto it = work.find(sw);
    if (it == work.end()) {
      work.emplace(std::move(sw), c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) work.erase(it);
    }
  }
  Expr done = Expr::zero(x.ctx());
  long steps = 0;
  while (!work.empty()) {
    auto front = work.begin();
    const Word w = front->first;
    bool known_irreducible = false;
    if (!shuffle_seed) {
      std::lock_guard<std::mutex> lk(*mu_);
      known_irreducible = irreducible_->count(w) > 0;
    }
    std::optional<Match> match;
    if (!known_irreducible) match = find_match(w, shuffle_seed);
    if (!match) {
      if (!shuffle_seed && !known_irreducible) {
        std::lock_guard<std::mutex> lk(*mu_);
        irreducible_->emplace(w, true);
      }
      done.add_term(w, front->second);
      work.erase(front);
      continue;
    }
    if (steps >= budget) {
      out.result = done;
      for (auto& [ww, cc] : work) out.result.add_term(ww, cc);
      out.status = Verdict::Inconclusive;
      out.steps = steps;
      return out;
    }
    ++steps;
    out.fired[match->rule->id]++;
    Scalar coef = front->second;
    work.erase(front);
    Word prefix(w.begin(), w.begin() + match->pos);
    Word suffix(w.begin() + match->pos + match->rule->lhs.size(), w.end());
    for (auto& [rw, rc] : match->rule->rhs.terms()) {
      Word nw = prefix;
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), suffix.begin(), suffix.end());
      nw = structural_word(*ctx_, std::move(nw));
      Scalar add = coef * rc;
      if (add.is_zero()) continue;
      auto it = work.find(nw);
      if (it == work.end()) {
        work.emplace(std::move(nw), std::move(add));
      } else {
        it->second = it->second + add;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  out.result = done;
  out.status = done.is_zero() ? Verdict::Zero : Verdict::NonzeroNormal;
  out.steps = steps;
  return out;
}

Verdict RewriteSystem::is_zero(const Expr& x, long budget, uint64_t seed) const {
  NormalizeOutcome first = normalize(x, budget, 0);
  if (first.status == Verdict::Zero) return Verdict::Zero;
  // randomized retries at a larger budget to dodge order artifacts before
  // conceding a nonzero normal form
  bool inconclusive = first.status == Verdict::Inconclusive;
  for (uint64_t k = 0; k < 3; ++k) {
    NormalizeOutcome retry =
        normalize(x, budget * 4, (seed + k * 0x9e3779b97f4a7c15ull) | 1);
    if (retry.status == Verdict::Zero) return Verdict::Zero;
    if (retry.status == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::Inconclusive : Verdict::NonzeroNormal;
}

Verdict is_zero_mod_units(const RewriteSystem& sys, const Expr& x, long budget,
                          uint64_t seed) {
  Verdict v = sys.is_zero(x, budget, seed);
  if (v == Verdict::Zero) return v;
  const AlgebraCtx& ctx = *sys.ctx();
  Family grp;
  switch (ctx.kind) {
    case AlgebraKind::Toroidal: grp = Family::gen_K; break;
    case AlgebraKind::SlCurrent: grp = Family::gen_k; break;
    case AlgebraKind::GlCurrent: grp = Family::gen_phi; break;
    default: grp = Family::gen_t; break;
  }
  Family cent;
  switch (ctx.kind) {
    case AlgebraKind::Toroidal: cent = Family::gen_C; break;
    case AlgebraKind::GlCurrent: cent = Family::gen_glc; break;
    default: cent = Family::gen_c; break;
  }
  int lo = (ctx.kind == AlgebraKind::SlCurrent) ? 1 : 0;
  std::vector<Expr> singles;
  for (int a = lo; a <= ctx.N() - 1; ++a)
    for (int e : {1, -1}) singles.push_back(gen_pow(x.ctx(), grp, a, e));
  if (ctx.kind != AlgebraKind::SlChevalley)
    for (int e : {1, -1}) singles.push_back(gen_pow(x.ctx(), cent, 0, e));
  // candidate (left, right) unit pairs, cheapest first
  std::vector<std::pair<Expr, Expr>> cands;
  Expr one = Expr::unit(x.ctx());
  for (auto& u : singles) {
    cands.push_back({u, one});
    cands.push_back({one, u});
  }
  for (auto& u : singles)
    for (auto& w : singles) cands.push_back({u, w});
  for (size_t i = 0; i < singles.size(); ++i)
    for (size_t j = i; j < singles.size(); ++j) {
      cands.push_back({singles[i] * singles[j], one});
      cands.push_back({one, singles[i] * singles[j]});
    }
  bool inconclusive = v == Verdict::Inconclusive;
  for (auto& [l, r] : cands) {
    Verdict uv = sys.is_zero(l * x * r, budget, seed);
    if (uv == Verdict::Zero) return Verdict::Zero;
    if (uv == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? Verdict::Inconclusive : Verdict::NonzeroNormal;
}

// ---- normal-form cache -------------------------------------------------------

namespace {
struct CacheKey {
  uint64_t fp;
  uint64_t eh;
  long budget;
  bool operator==(const CacheKey&) const = default;
};
struct CacheKeyHash {
  size_t operator()(const CacheKey& k) const {
    return (size_t)(k.fp * 1000003ull + k.eh * 31 + (uint64_t)k.budget);
  }
};
std::mutex g_cache_mu;
std::unordered_map<CacheKey, NormalizeOutcome, CacheKeyHash> g_mem_cache;
std::string g_cache_dir;

std::string disk_path(const CacheKey& k) {
  std::ostringstream os;
  os << g_cache_dir << "/" << std::hex << k.fp;
  std::filesystem::create_directories(os.str());
  os << "/" << std::hex << k.eh << "_" << std::dec << k.budget << ".json";
  return os.str();
}
}  // namespace

void set_nf_cache_dir(const std::string& dir) {
  std::lock_guard<std::mutex> lk(g_cache_mu);
  g_cache_dir = dir;
}

void clear_nf_cache() {
  std::lock_guard<std::mutex> lk(g_cache_mu);
  g_mem_cache.clear();
}

NormalizeOutcome normalize_cached(const RewriteSystem& sys, const Expr& x,
                                  long budget) {
  CacheKey key{sys.fingerprint(), x.hash(), budget};
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = g_mem_cache.find(key);
    if (it != g_mem_cache.end()) return it->second;
  }
  NormalizeOutcome out = sys.normalize(x, budget, 0);
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    g_mem_cache.emplace(key, out);
  }
  return out;
}

Verdict is_zero_cached(const RewriteSystem& sys, const Expr& x, long budget,
                       uint64_t seed) {
  CacheKey key{sys.fingerprint(), x.hash(), budget};
  std::string dir;
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    dir = g_cache_dir;
  }
  std::string guard;
  if (!dir.empty()) {
    guard = x.str();
    std::lock_guard<std::mutex> lk(g_cache_mu);
    std::ifstream in(disk_path(key));
    if (in) {
      std::string verdict, stored;
      std::getline(in, verdict);
      std::getline(in, stored);
      if (stored == guard) {
        if (verdict == "Zero") return Verdict::Zero;
        if (verdict == "NonzeroNormal") return Verdict::NonzeroNormal;
        if (verdict == "Inconclusive") return Verdict::Inconclusive;
      }
    }
  }
  Verdict v = sys.is_zero(x, budget, seed);
  if (!dir.empty()) {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    std::string path = disk_path(key);
    std::string tmp = path + ".tmp";
    {
      std::ofstream outp(tmp);
      outp << verdict_name(v) << "\n" << guard << "\n";
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
  }
  return v;
}

}  // namespace qtor
