#include "wittdisp/display.hpp"

#include <algorithm>

namespace wd {

Display display_make(const Pair& P, const WMat& psi) {
  if (psi.rows != P.h || psi.cols != P.h || !psi.W.same(P.ctx.Wn))
    fail(Err::RingMismatch, "psi must be h x h over W_n");
  if (!wmat_invertible(psi)) fail(Err::SingularPsi, "psi is not invertible");
  return Display{P, psi};
}

WMat frobenius_phi(const Display& D) { return wmat_mul(D.psi, tilde_section(D.pair)); }

Display dual_display(const Display& D) {
  Pair dp = dual_pair(D.pair);
  WMat psid = wmat_mul(wmat_transpose(wmat_inverse(D.psi)), tilde_dual_iso(D.pair));
  return display_make(dp, psid);
}

Display twist_display(const Display& D, const Wv& c, const Wv& iota) {
  const DispCtx& ctx = D.pair.ctx;
  if (!ctx.Wm.is_unit(c) || !ctx.Wn.is_unit(iota)) fail(Err::NonUnit, "twist data must be units");
  Pair tp = twist_pair(D.pair, c);
  Wv scale = ctx.Wn.mul(ctx.reduce(c), iota);
  return display_make(tp, wmat_scale(D.psi, scale));
}

Display truncate_display(const Display& D, int m2, int n2) {
  const DispCtx& ctx = D.pair.ctx;
  if (m2 > ctx.m || n2 > ctx.n || n2 < 1 || m2 < n2 + 1)
    fail(Err::BadTruncation, "invalid truncation target");
  DispCtx t = DispCtx::truncated(ctx.R, m2, n2);
  Pair P = pair_make(t, D.pair.h, D.pair.d, wmat_truncate(D.pair.basis, m2));
  return display_make(P, wmat_truncate(D.psi, n2));
}

Display base_change_display(const Display& D, const RingHom& h, const DispCtx& tgt_ctx) {
  Pair P = base_change_pair(D.pair, h, tgt_ctx);
  WMat psi = wmat_map(D.psi, tgt_ctx.Wn, [&](const Wv& v) {
    Wv r;
    r.a.reserve(v.a.size());
    for (const auto& x : v.a) r.a.push_back(h.apply(x));
    return r;
  });
  return display_make(P, psi);
}

PolarizationReport polarization_check(const Display& D, const WMat& J, const Wv& c,
                                      const Wv& iota) {
  const Pair& P = D.pair;
  const DispCtx& ctx = P.ctx;
  if (P.h % 2 != 0) fail(Err::OddRank, "polarization needs even rank");
  PolarizationReport rep;
  rep.alternating = (wmat_transpose(J) == wmat_neg(J));
  rep.perfect = wmat_invertible(J);
  if (!rep.alternating || !rep.perfect) return rep;

  // lambda: M -> M^dual, x -> (y -> pairing(x,y)); matrix J^T in the std bases
  WMat lambda = wmat_transpose(J);
  Display twisted_dual = twist_display(dual_display(D), c, iota);
  rep.lagrangian = pair_hom_valid(P, twisted_dual.pair, lambda);
  if (!rep.lagrangian) return rep;

  PairHom lam = pair_hom(P, twisted_dual.pair, lambda);
  WMat lhs = wmat_mul(ctx.reduce_mat(lambda), D.psi);
  WMat rhs = wmat_mul(twisted_dual.psi, tilde_morphism(lam));
  rep.residual = wmat_sub(lhs, rhs);
  rep.pass = true;
  for (const auto& v : rep.residual.e)
    if (!ctx.Wn.is_zero(v)) rep.pass = false;
  return rep;
}

bool display_iso_check(const Display& D1, const Display& D2, const WMat& g) {
  if (D1.pair.h != D2.pair.h || D1.pair.d != D2.pair.d || !D1.pair.ctx.same(D2.pair.ctx))
    return false;
  if (!wmat_invertible(g)) return false;
  if (!pair_hom_valid(D1.pair, D2.pair, g)) return false;
  PairHom gh{D1.pair, D2.pair, g};
  WMat gt = tilde_morphism(gh);
  if (!wmat_invertible(gt)) return false;
  WMat lhs = wmat_mul(D2.psi, gt);
  WMat rhs = wmat_mul(D1.pair.ctx.reduce_mat(g), D1.psi);
  return lhs == rhs;
}

uint64_t gl_order(const WittRing& W, int h) {
  // |GL_h(W_m(F_q))| = |GL_h(F_q)| * q^((m-1)h^2) for local W with residue F_q
  uint64_t q = W.base().residue_field().size();
  uint64_t gl1 = 1;
  uint64_t qh = 1;
  for (int i = 0; i < h; ++i) qh *= q;
  uint64_t qi = 1;
  for (int i = 0; i < h; ++i) {
    gl1 *= (qh - qi);
    qi *= q;
  }
  uint64_t lift = 1;
  uint64_t extra = W.size() / q;  // |ker(W -> F_q... residue)| per entry
  for (int i = 0; i < h * h; ++i) lift *= extra;
  return gl1 * lift;
}

std::vector<WMat> enumerate_gl(const WittRing& W, int h, uint64_t budget) {
  uint64_t total = 1;
  for (int i = 0; i < h * h; ++i) {
    if (total > budget / W.size()) fail(Err::BudgetExceeded, "GL enumeration too large");
    total *= W.size();
  }
  std::vector<WMat> out;
  for (uint64_t idx = 0; idx < total; ++idx) {
    WMat m(W, h, h);
    uint64_t t = idx;
    for (int k = 0; k < h * h; ++k) {
      m.e[k] = W.element_at(t % W.size());
      t /= W.size();
    }
    if (wmat_invertible(m)) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const WMat& a, const WMat& b) { return a.e < b.e; });
  return out;
}

std::optional<WMat> display_isomorphic(const Display& D1, const Display& D2, uint64_t budget) {
  const DispCtx& ctx = D1.pair.ctx;
  if (D1.pair.h != D2.pair.h || D1.pair.d != D2.pair.d || !ctx.same(D2.pair.ctx))
    return std::nullopt;
  int h = D1.pair.h;
  std::vector<WMat> gl = enumerate_gl(ctx.Wm, h, budget);
  for (const auto& g : gl)
    if (display_iso_check(D1, D2, g)) return g;
  return std::nullopt;
}

} // namespace wd
