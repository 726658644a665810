#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qtor/modes.hpp"

namespace qtor {

/// Mode cutoffs for instantiating generating-series relations.
struct Cutoffs {
  int R = 2;          // quadratic / EF / Cartan templates
  int R_cubic = 1;    // cubic Serre
  int R_quartic = 0;  // quartic and quintic Serre

  std::string str() const;
};

struct RelationInstance {
  std::string tid;  // template id, e.g. "tor.EF"
  std::string id;   // full instance id, e.g. "tor.EF[i=0,j=0,r=1,s=-1]"
  Expr expr;        // LHS - RHS
};

struct TemplateInfo {
  std::string id;
  bool series = false;      // instantiated from generating series
  std::string guard;        // human-readable applicability guard
  int mode_arity = 0;       // number of free mode indices
};

/// The template catalogue of the given algebra's defining presentation.
/// For the toroidal algebra this is the H-form; the K-form series templates
/// (tor.kk1, tor.kk2, tor.ke*, tor.kf*) are available via enumerate_kform.
std::vector<TemplateInfo> presentation_templates(const AlgebraCtx& ctx);

/// All instances of the defining presentation within the cutoffs,
/// deterministically ordered. `filter`, when nonempty, keeps only the listed
/// template ids.
std::vector<RelationInstance> enumerate_instances(
    const CtxPtr& ctx, const Cutoffs& cut,
    const std::set<std::string>& filter = {});

/// Toroidal K-form instances (series form of the Cartan block), |a|,|b| <= R.
std::vector<RelationInstance> enumerate_kform(const CtxPtr& ctx, int R);

/// One targeted instance; throws if the guard rejects the arguments. The
/// argument lists are matched against the instance id in emission order
/// (nodes and flags first, then modes).
Expr instantiate(const CtxPtr& ctx, const std::string& tid,
                 const std::vector<int>& nodes, const std::vector<int>& modes);

/// Rewrite an sl-current expression into the gl algebra: x stays, c stays,
/// k_i = phi_i phi_{i+1}^{-1}, h_{i,r} = q^{-r mu(i)} (phim_{i,r} - phim_{i+1,r}).
Expr embed_sl_in_gl(const Expr& x, const CtxPtr& gl);

/// JSON manifest: template ids, guards, instance counts at the cutoffs.
std::string relation_manifest(const CtxPtr& ctx, const Cutoffs& cut);

}  // namespace qtor
