#include "wittdisp/pair.hpp"

namespace wd {

DispCtx DispCtx::truncated(const Ring& R, int m, int n) {
  if (n < 1 || m < n + 1) fail(Err::LengthTooShort, "truncated context needs m >= n+1");
  DispCtx c;
  c.R = R;
  c.m = m;
  c.n = n;
  c.Wm = WittRing(R, m);
  c.Wn = WittRing(R, n);
  return c;
}

DispCtx DispCtx::dieudonne_ctx(const Ring& R, int N) {
  if (N < 1) fail(Err::ZeroPrecision, "precision must be >= 1");
  if (!R.is_fp_algebra())
    fail(Err::NoSection, "equal-precision Dieudonne model needs an F_p-algebra base");
  DispCtx c;
  c.R = R;
  c.m = N;
  c.n = N;
  c.dieudonne = true;
  c.Wm = WittRing(R, N);
  c.Wn = c.Wm;
  return c;
}

Wv DispCtx::sigma(const Wv& x) const {
  return dieudonne ? Wm.frobenius_endo(x) : Wm.frobenius(x, n);
}

Wv DispCtx::sigma_div(const Wv& x) const { return Wm.div_frob(x, n, dieudonne); }

Wv DispCtx::reduce(const Wv& x) const { return dieudonne ? x : Wm.truncate(x, n); }

WMat DispCtx::sigma_mat(const WMat& x) const {
  return wmat_map(x, Wn, [&](const Wv& v) { return sigma(v); });
}

WMat DispCtx::reduce_mat(const WMat& x) const {
  return dieudonne ? x : wmat_truncate(x, n);
}

Pair pair_make(const DispCtx& ctx, int h, int d, const WMat& basis) {
  if (d < 0 || d > h || h < 1) fail(Err::BadRank, "need 0 <= d <= h");
  if (basis.rows != h || basis.cols != h || !basis.W.same(ctx.Wm))
    fail(Err::RingMismatch, "basis must be h x h over W_m");
  if (!wmat_invertible(basis)) fail(Err::SingularBasis, "decomposition basis is singular");
  return Pair{ctx, h, d, basis};
}

Pair pair_standard(const DispCtx& ctx, int h, int d) {
  return pair_make(ctx, h, d, wmat_identity(ctx.Wm, h));
}

bool pair_filtration_contains(const Pair& P, const std::vector<Wv>& v) {
  WMat binv = wmat_inverse(P.basis);
  std::vector<Wv> w = wmat_apply(binv, v);
  for (int i = P.d; i < P.h; ++i)
    if (!P.ctx.R.is_zero(w[i].a[0])) return false;
  return true;
}

bool pair_hom_valid(const Pair& src, const Pair& tgt, const WMat& f) {
  if (!src.ctx.same(tgt.ctx)) fail(Err::RingMismatch, "pair morphism across contexts");
  WMat blocks = wmat_mul(wmat_inverse(tgt.basis), wmat_mul(f, src.basis));
  for (int i = tgt.d; i < tgt.h; ++i)
    for (int j = 0; j < src.d; ++j)
      if (!src.ctx.R.is_zero(blocks.at(i, j).a[0])) return false;
  return true;
}

PairHom pair_hom(const Pair& src, const Pair& tgt, const WMat& f) {
  if (!pair_hom_valid(src, tgt, f))
    fail(Err::FiltrationChanged, "morphism does not preserve the filtration");
  return PairHom{src, tgt, f};
}

WMat pair_hom_blocks(const PairHom& fm) {
  return wmat_mul(wmat_inverse(fm.tgt.basis), wmat_mul(fm.f, fm.src.basis));
}

PairHom pair_hom_compose(const PairHom& g, const PairHom& f) {
  if (!(f.tgt == g.src)) fail(Err::RingMismatch, "composition source/target mismatch");
  return PairHom{f.src, g.tgt, wmat_mul(g.f, f.f)};
}

PairHom change_decomposition(const Pair& P, const WMat& new_basis) {
  Pair Q = pair_make(P.ctx, P.h, P.d, new_basis);
  WMat id = wmat_identity(P.ctx.Wm, P.h);
  if (!pair_hom_valid(P, Q, id) || !pair_hom_valid(Q, P, id))
    fail(Err::FiltrationChanged, "new basis presents a different filtration");
  return PairHom{P, Q, id};
}

Pair base_change_pair(const Pair& P, const RingHom& h, const DispCtx& tgt_ctx) {
  if (!h.source().same(P.ctx.R) || !h.target().same(tgt_ctx.R))
    fail(Err::RingMismatch, "base change hom does not match contexts");
  if (tgt_ctx.m != P.ctx.m || tgt_ctx.n != P.ctx.n || tgt_ctx.dieudonne != P.ctx.dieudonne)
    fail(Err::RingMismatch, "base change must preserve truncation lengths");
  WMat b = wmat_map(P.basis, tgt_ctx.Wm, [&](const Wv& v) {
    Wv r;
    r.a.reserve(v.a.size());
    for (const auto& c : v.a) r.a.push_back(h.apply(c));
    return r;
  });
  return pair_make(tgt_ctx, P.h, P.d, b);
}

Pair dual_pair(const Pair& P) {
  WMat dualbasis = wmat_transpose(wmat_inverse(P.basis));
  // normal decomposition of the dual is (T^dual, L^dual)
  WMat reordered(P.ctx.Wm, P.h, P.h);
  for (int j = 0; j < P.h - P.d; ++j)
    for (int i = 0; i < P.h; ++i) reordered.at(i, j) = dualbasis.at(i, P.d + j);
  for (int j = 0; j < P.d; ++j)
    for (int i = 0; i < P.h; ++i) reordered.at(i, P.h - P.d + j) = dualbasis.at(i, j);
  return pair_make(P.ctx, P.h, P.h - P.d, reordered);
}

Pair twist_pair(const Pair& P, const Wv& c) {
  if (!P.ctx.Wm.is_unit(c)) fail(Err::NonUnit, "twist requires a unit");
  return pair_make(P.ctx, P.h, P.d, wmat_scale(P.basis, c));
}

TildeModule tilde(const Pair& P) {
  const DispCtx& ctx = P.ctx;
  WMat sb = ctx.sigma_mat(P.basis);
  Wv p_elem = ctx.Wn.scalar_p();
  WMat comp(ctx.Wn, P.h, P.h);
  for (int j = 0; j < P.h; ++j)
    for (int i = 0; i < P.h; ++i)
      comp.at(i, j) = (j < P.d) ? sb.at(i, j) : ctx.Wn.mul(p_elem, sb.at(i, j));
  return TildeModule{ctx.Wn, P.h, P.d, comp};
}

WMat tilde_morphism(const PairHom& fm) {
  const DispCtx& ctx = fm.src.ctx;
  WMat blocks = pair_hom_blocks(fm);
  int h = fm.src.h, ds = fm.src.d, dt = fm.tgt.d;
  WMat out(ctx.Wn, h, h);
  Wv p_elem = ctx.Wn.scalar_p();
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      const Wv& x = blocks.at(i, j);
      if (i < dt && j < ds) {
        out.at(i, j) = ctx.sigma(x);                       // a-block
      } else if (i < dt) {
        out.at(i, j) = ctx.Wn.mul(p_elem, ctx.sigma(x));   // p * sigma(b)
      } else if (j < ds) {
        out.at(i, j) = ctx.sigma_div(x);                   // c-dot
      } else {
        out.at(i, j) = ctx.sigma(x);                       // d-block
      }
    }
  return out;
}

WMat tilde_section(const Pair& P) {
  const DispCtx& ctx = P.ctx;
  WMat sbinv = wmat_inverse(ctx.sigma_mat(P.basis));
  Wv p_elem = ctx.Wn.scalar_p();
  WMat out(ctx.Wn, P.h, P.h);
  for (int i = 0; i < P.h; ++i)
    for (int j = 0; j < P.h; ++j)
      out.at(i, j) = (i < P.d) ? ctx.Wn.mul(p_elem, sbinv.at(i, j)) : sbinv.at(i, j);
  return out;
}

WMat tilde_dual_iso(const Pair& P) {
  // domain basis (T^dual,sigma then L^dual,sigma), target the dual basis of
  // (L^sigma, T^sigma); pure block permutation
  const DispCtx& ctx = P.ctx;
  int h = P.h, d = P.d;
  WMat perm(ctx.Wn, h, h);
  for (int i = 0; i < h - d; ++i) perm.at(d + i, i) = ctx.Wn.one();
  for (int j = 0; j < d; ++j) perm.at(j, h - d + j) = ctx.Wn.one();
  return perm;
}

WMat tilde_twist_iso(const Pair& P, const Wv& c) {
  if (!P.ctx.Wm.is_unit(c)) fail(Err::NonUnit, "twist requires a unit");
  return wmat_scale(wmat_identity(P.ctx.Wn, P.h), P.ctx.sigma(c));
}

} // namespace wd
