#ifndef WITTDISP_DEFORM_HPP
#define WITTDISP_DEFORM_HPP

#include "wittdisp/census.hpp"
#include "wittdisp/zink.hpp"

namespace wd {

// ---- square-zero lifting -----------------------------------------------------

// summand lifts of U_R along E, in pivot-normalized form; count |a|^(d(h-d))
std::vector<Subspace> filtration_lifts(const PDExtension& E, const Subspace& UR, int h);

// pivot-normalized basis rows of a rank-d summand of S^h (S local)
Subspace summand_normalize(const Ring& S, std::vector<std::vector<Relem>> rows);

// adapted pair over a local base from pivot-normalized rows
Pair adapted_pair_local(const DispCtx& ctx, const Subspace& U, int h);

// tilde of a morphism of S/R-pairs: the c-block goes through the relative
// divided Frobenius, which kills the Teichmueller part of the kernel
WMat tilde_morphism_rel(const PDExtension& E, const PairHom& fm);

// canonical lift of D (a Dieudonne display over R) along E with the chosen
// filtration lift: coordinatewise set-section lift of basis and psi
Display gm_lift(const Display& D, const PDExtension& E, const DispCtx& ctxS,
                const Subspace& US);

// exhaustive fiber of lifts of D over S, up to isomorphisms reducing to the identity
struct GmFiber {
  std::vector<Subspace> filtrations;
  std::vector<Display> canonical;     // gm_lift per filtration
  uint64_t total_lifts = 0;
  uint64_t classes = 0;
  bool classes_eq_filtrations = false;
  bool partition_ok = false;
  bool canonical_pairwise_noniso = false;
  bool aut_trivial = false;
};
GmFiber gm_fiber_analysis(const Display& D, const PDExtension& E, const DispCtx& ctxS,
                          uint64_t budget);

// ---- universal deformation ----------------------------------------------------

struct UnivDeformation {
  Ring Rdef;           // jet ring k[t_ij]/m^(order+1), or GR-based in mixed char
  DispCtx ctx;         // context over Rdef
  Display univ;
  int tangent_dim = 0;
  bool rigid_first_order = false;  // reduction mod (m^2 + p) equals transported Psi_0
};

// mixed_prec = 0: equal characteristic (jet over the residue field);
// mixed_prec = a > 0: jet over GR(p^a, f) with p-adic coefficient precision a
UnivDeformation universal_deformation(const Display& D0, int order, int mixed_prec);

// specialization of the universal display along t_i -> values[i] (in S)
Display specialize_deformation(const UnivDeformation& UD, const Ring& S,
                               const std::vector<Relem>& values, const DispCtx& ctxS);

// ---- rigidity -----------------------------------------------------------------

struct RigiditySolution {
  WMat T;  // over W_target(R)
  bool converged = false;
  int iterations = 0;
};

// Solve T = A sigma(T) A0^{-1} with T = 1 mod (m_R, p), for A over the Zink model
// W_N(R) and A0 invertible over W_N(k) with wk-part(A) = A0. In equal
// characteristic the iteration runs at constant precision; in mixed
// characteristic it descends from Z.N to target_n.
RigiditySolution rigidity_series(const ZinkCtx& Z, const WMat& A0, const WMat& A,
                                 int target_n);

} // namespace wd

#endif
