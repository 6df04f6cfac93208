#ifndef WITTDISP_ZINK_HPP
#define WITTDISP_ZINK_HPP

#include "wittdisp/hom.hpp"
#include "wittdisp/witt.hpp"

namespace wd {

// Artinian local base with perfect residue field of characteristic p.
struct ArtinLocal {
  Ring R;
  Ring k;
  std::vector<Relem> m_gens;
  int nu = 1;  // m^nu = 0
};

ArtinLocal artin_local(const Ring& R);

// The canonical identification GR(p^N, f) = Z_q/p^N -> W_N(F_q), sending the class
// of x to the Hensel root of the lifted modulus. fwd/bwd are full index tables.
struct ZqIso {
  Ring gr;
  WittRing W;
  Wv root;
  std::vector<uint64_t> fwd;  // gr index -> W index
  std::vector<uint64_t> bwd;  // W index -> gr index
};

ZqIso make_zq_iso(const WittRing& W);

// Finite-precision model of the Zink ring What(R): arithmetic happens in W_N(R),
// the W(k)-part is tracked modulo p^N through the splitting below.
struct ZinkCtx {
  ArtinLocal A;
  int N = 0;
  WittRing W;    // W_N(R)
  WittRing Wk;   // W_N(k)
  bool char_p = false;
  // mixed characteristic: Delta via the Z_q-structure
  ZqIso zq;          // iso GR(p^N, f) -> W_N(k)
  Wv root_in_WR;     // Hensel root of the gr modulus in W_N(R) (f > 1)
};

ZinkCtx zink_make(const Ring& R, int N);

Wv zink_wk_part(const ZinkCtx& Z, const Wv& x);   // coordinatewise residue, in W_N(k)
Wv zink_wk_embed(const ZinkCtx& Z, const Wv& xi); // section Delta_N: W_N(k) -> W_N(R)

struct ZinkSplit {
  Wv wk;   // over W_N(k)
  Wv nil;  // over W_N(R), all coordinates in m
};

ZinkSplit zink_split(const ZinkCtx& Z, const Wv& x);
Wv zink_assemble(const ZinkCtx& Z, const ZinkSplit& s);

// Square-zero extension S -> R with trivial divided powers on the kernel a.
struct PDExtension {
  Ring S, R;
  RingHom proj;
  std::vector<Relem> kernel;      // all elements of a
  std::vector<uint64_t> section;  // element-index set-section of proj
};

PDExtension pd_extension(const Ring& S, const Ring& R, const RingHom& proj);
Relem pd_lift(const PDExtension& E, const Relem& r);
Wv pd_lift_w(const PDExtension& E, const Wv& x);
bool pd_in_kernel(const PDExtension& E, const Relem& x);

// I_{S/R} = ker(What(S) -> R) decomposed as I_S + a, a embedded by Teichmuller
// (trivial divided powers). x must have proj(x_0) = 0.
struct RelSplit {
  Wv aug;       // in I_S (first coordinate 0)
  Relem apart;  // in a
};

RelSplit relative_augmentation_split(const PDExtension& E, const WittRing& WS, const Wv& x);
// (sigma^div, 0) on the decomposition; pad allows n = len (Dieudonne model)
Wv relative_divided_frobenius(const PDExtension& E, const WittRing& WS, const Wv& x, int n,
                              bool pad = false);

} // namespace wd

#endif
