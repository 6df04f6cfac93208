#ifndef WITTDISP_PAIR_HPP
#define WITTDISP_PAIR_HPP

#include "wittdisp/hom.hpp"
#include "wittdisp/matrix.hpp"

namespace wd {

// Semilinear context for pairs and displays.
//  - truncated: module over W_m(R), psi side over W_n(R), m >= n+1. sigma is the
//    Frobenius W_m -> W_n, sigma_div the divided Frobenius on I_m.
//  - dieudonne: finite-precision model of the Zink ring for an F_p-algebra base;
//    m == n and sigma is the length-preserving coordinatewise Frobenius. sigma_div
//    pads the lost top coordinate with 0 (precision semantics).
struct DispCtx {
  Ring R;
  int m = 0, n = 0;
  bool dieudonne = false;
  WittRing Wm, Wn;

  static DispCtx truncated(const Ring& R, int m, int n);
  static DispCtx dieudonne_ctx(const Ring& R, int N);

  bool ok() const { return R.ok(); }
  bool same(const DispCtx& o) const {
    return m == o.m && n == o.n && dieudonne == o.dieudonne && R.same(o.R);
  }

  Wv sigma(const Wv& x) const;      // W_m -> W_n
  Wv sigma_div(const Wv& x) const;  // I_m -> W_n
  Wv reduce(const Wv& x) const;     // plain truncation W_m -> W_n
  WMat sigma_mat(const WMat& x) const;
  WMat reduce_mat(const WMat& x) const;
};

// Pair (M, M_1) of type (h, d): M = W_m(R)^h with a chosen normal decomposition,
// encoded by an invertible basis matrix whose first d columns span L and whose
// last h-d columns span T; M_1 = L + I_m T.
struct Pair {
  DispCtx ctx;
  int h = 0, d = 0;
  WMat basis;
  bool operator==(const Pair& o) const {
    return h == o.h && d == o.d && ctx.same(o.ctx) && basis == o.basis;
  }
};

Pair pair_make(const DispCtx& ctx, int h, int d, const WMat& basis);
Pair pair_standard(const DispCtx& ctx, int h, int d);

// does v (column vector over W_m) lie in M_1?
bool pair_filtration_contains(const Pair& P, const std::vector<Wv>& v);

// Morphism of pairs given by its matrix in the standard bases of the modules.
// Validity (f(M_1) in M_1') is equivalent to the decomposition c-block lying in I.
struct PairHom {
  Pair src, tgt;
  WMat f;
};

PairHom pair_hom(const Pair& src, const Pair& tgt, const WMat& f);
bool pair_hom_valid(const Pair& src, const Pair& tgt, const WMat& f);
WMat pair_hom_blocks(const PairHom& fm);  // tgt.basis^{-1} * f * src.basis
PairHom pair_hom_compose(const PairHom& g, const PairHom& f);

// same module, new normal decomposition; FiltrationChanged if M_1 differs
PairHom change_decomposition(const Pair& P, const WMat& new_basis);

Pair base_change_pair(const Pair& P, const RingHom& h, const DispCtx& tgt_ctx);
Pair dual_pair(const Pair& P);
Pair twist_pair(const Pair& P, const Wv& c);  // c unit of W_m

// M_1~ = L^sigma + T^sigma with comparison l+t -> l+pt into W_n (x) M^sigma.
struct TildeModule {
  WittRing Wn;
  int h = 0, d = 0;
  WMat comparison;  // sigma(basis) * diag(1_d, p 1_{h-d})
};

TildeModule tilde(const Pair& P);
// matrix of f~ from the tilde basis of src to the tilde basis of tgt:
// (sigma a, p sigma b; c-dot, sigma d)
WMat tilde_morphism(const PairHom& fm);
// section j: M^sigma -> M_1~, l+t -> pl+t; matrix in (std, tilde) bases
WMat tilde_section(const Pair& P);
// canonical iso (M_1^*)~ -> (M_1~)^dual as a permutation matrix
WMat tilde_dual_iso(const Pair& P);
// canonical iso tilde(twist_pair(P,c)) -> sigma(c)-transport of tilde(P)
WMat tilde_twist_iso(const Pair& P, const Wv& c);

} // namespace wd

#endif
