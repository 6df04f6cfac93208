#ifndef WITTDISP_DISPLAY_HPP
#define WITTDISP_DISPLAY_HPP

#include <optional>

#include "wittdisp/pair.hpp"

namespace wd {

// (m,n)-truncated display (or Dieudonne display in the equal-precision model):
// a pair plus an invertible matrix psi expressing Psi: M_1~ -> W_n (x) M in the
// canonical tilde basis.
struct Display {
  Pair pair;
  WMat psi;
  bool operator==(const Display& o) const { return pair == o.pair && psi == o.psi; }
};

Display display_make(const Pair& P, const WMat& psi);

// Frobenius Phi = Psi o j as a matrix W_n (x) M^sigma -> W_n (x) M
WMat frobenius_phi(const Display& D);

Display dual_display(const Display& D);
// twist by (c, iota): c a unit of W_m scaling the invertible module's basis,
// iota a unit of W_n giving the sigma-transport
Display twist_display(const Display& D, const Wv& c, const Wv& iota);
Display truncate_display(const Display& D, int m2, int n2);
Display base_change_display(const Display& D, const RingHom& h, const DispCtx& tgt_ctx);

// polarization: alternating perfect pairing J over W_m plus similitude (c, iota);
// checks that J defines a morphism of displays D -> (c,iota) (x) D^dual
struct PolarizationReport {
  bool alternating = false;
  bool perfect = false;
  bool lagrangian = false;  // J is a morphism of pairs into the twisted dual
  WMat residual;            // psi-compatibility defect, zero iff polarized
  bool pass = false;
};
PolarizationReport polarization_check(const Display& D, const WMat& J, const Wv& c,
                                      const Wv& iota);

// g over W_m defines an isomorphism D1 -> D2 if it is a filtration-compatible
// pair iso and psi2 = reduce(g) psi1 tilde(g)^{-1}
bool display_iso_check(const Display& D1, const Display& D2, const WMat& g);

uint64_t gl_order(const WittRing& W, int h);
// all of GL_h(W_m) in index order (deterministic); BudgetExceeded if too large
std::vector<WMat> enumerate_gl(const WittRing& W, int h, uint64_t budget);

// exhaustive isomorphism search; returns the least witness or nullopt (certified)
std::optional<WMat> display_isomorphic(const Display& D1, const Display& D2, uint64_t budget);

} // namespace wd

#endif
