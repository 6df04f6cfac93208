#include "wittdisp/deform.hpp"

#include <algorithm>
#include <map>

namespace wd {

Subspace summand_normalize(const Ring& S, std::vector<std::vector<Relem>> rows) {
  if (rows.empty()) return rows;
  int h = (int)rows[0].size();
  size_t pr = 0;
  for (int col = 0; col < h && pr < rows.size(); ++col) {
    size_t sel = pr;
    while (sel < rows.size() && !S.is_unit(rows[sel][col])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pr], rows[sel]);
    Relem inv = S.inv(rows[pr][col]);
    for (auto& v : rows[pr]) v = S.mul(v, inv);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == pr || S.is_zero(rows[r][col])) continue;
      Relem c = rows[r][col];
      for (int j = 0; j < h; ++j) rows[r][j] = S.sub(rows[r][j], S.mul(c, rows[pr][j]));
    }
    ++pr;
  }
  if (pr != rows.size()) fail(Err::BadRank, "rows do not span a free summand");
  return rows;
}

Pair adapted_pair_local(const DispCtx& ctx, const Subspace& U, int h) {
  return U.empty() ? pair_standard(ctx, h, 0) : adapted_pair(ctx, U);
}

std::vector<Subspace> filtration_lifts(const PDExtension& E, const Subspace& UR, int h) {
  int d = (int)UR.size();
  std::vector<Subspace> out;
  if (d == 0 || d == h) {
    Subspace base;
    for (const auto& row : UR) {
      std::vector<Relem> r;
      for (const auto& x : row) r.push_back(pd_lift(E, x));
      base.push_back(std::move(r));
    }
    out.push_back(base);
    return out;
  }
  std::vector<int> piv;
  for (const auto& row : UR) {
    int j = 0;
    while (j < h && !E.R.is_unit(row[j])) ++j;
    piv.push_back(j);
  }
  std::vector<std::pair<int, int>> free_pos;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < h; ++j)
      if (std::find(piv.begin(), piv.end(), j) == piv.end()) free_pos.emplace_back(i, j);
  Subspace base;
  for (const auto& row : UR) {
    std::vector<Relem> r;
    for (const auto& x : row) r.push_back(pd_lift(E, x));
    base.push_back(std::move(r));
  }
  uint64_t total = 1;
  for (size_t i = 0; i < free_pos.size(); ++i) total *= E.kernel.size();
  for (uint64_t mask = 0; mask < total; ++mask) {
    Subspace U = base;
    uint64_t t = mask;
    for (const auto& [i, j] : free_pos) {
      U[i][j] = E.S.add(U[i][j], E.kernel[t % E.kernel.size()]);
      t /= E.kernel.size();
    }
    out.push_back(std::move(U));
  }
  std::sort(out.begin(), out.end());
  return out;
}

WMat tilde_morphism_rel(const PDExtension& E, const PairHom& fm) {
  const DispCtx& ctx = fm.src.ctx;
  WMat blocks = wmat_mul(wmat_inverse(fm.tgt.basis), wmat_mul(fm.f, fm.src.basis));
  int h = fm.src.h, ds = fm.src.d, dt = fm.tgt.d;
  WMat out(ctx.Wn, h, h);
  Wv p_elem = ctx.Wn.scalar_p();
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) {
      const Wv& x = blocks.at(i, j);
      if (i < dt && j < ds) {
        out.at(i, j) = ctx.sigma(x);
      } else if (i < dt) {
        out.at(i, j) = ctx.Wn.mul(p_elem, ctx.sigma(x));
      } else if (j < ds) {
        out.at(i, j) = relative_divided_frobenius(E, ctx.Wm, x, ctx.n, ctx.dieudonne);
      } else {
        out.at(i, j) = ctx.sigma(x);
      }
    }
  return out;
}

namespace {

Subspace residue_filtration(const Ring& R, const Pair& P) {
  std::vector<std::vector<Relem>> rows;
  for (int j = 0; j < P.d; ++j) {
    std::vector<Relem> row(P.h);
    for (int i = 0; i < P.h; ++i) row[i] = P.basis.at(i, j).a[0];
    rows.push_back(std::move(row));
  }
  return summand_normalize(R, rows);
}

} // namespace

Display gm_lift(const Display& D, const PDExtension& E, const DispCtx& ctxS,
                const Subspace& US) {
  const DispCtx& ctxR = D.pair.ctx;
  if (!ctxR.dieudonne || !ctxS.dieudonne || ctxS.m != ctxR.m || !ctxS.R.same(E.S) ||
      !ctxR.R.same(E.R))
    fail(Err::BadDescriptor, "gm_lift needs matching Dieudonne contexts over S -> R");
  int h = D.pair.h, d = D.pair.d;
  if ((int)US.size() != d) fail(Err::InvalidFiltrationLift, "filtration lift has wrong rank");

  Subspace UR = residue_filtration(E.R, D.pair);
  // the lift's reduction must be U_R
  {
    std::vector<std::vector<Relem>> red;
    for (const auto& row : US) {
      std::vector<Relem> r;
      for (const auto& x : row) r.push_back(E.proj.apply(x));
      red.push_back(std::move(r));
    }
    if (!red.empty() && summand_normalize(E.R, red) != UR)
      fail(Err::InvalidFiltrationLift, "filtration lift does not reduce to the base filtration");
  }

  std::vector<int> piv;
  for (const auto& row : UR) {
    int j = 0;
    while (j < h && !E.R.is_unit(row[j])) ++j;
    piv.push_back(j);
  }

  WMat BS = wmat_map(D.pair.basis, ctxS.Wm, [&](const Wv& v) { return pd_lift_w(E, v); });
  for (int j = 0; j < d; ++j) {
    // replace the bottom Witt coordinate of the j-th L-column by the lift of its
    // U_R-coordinates through U_S
    for (int r = 0; r < h; ++r) {
      Relem acc = E.S.zero();
      for (int i = 0; i < d; ++i) {
        Relem lam = D.pair.basis.at(piv[i], j).a[0];
        acc = E.S.add(acc, E.S.mul(pd_lift(E, lam), US[i][r]));
      }
      BS.at(r, j).a[0] = acc;
    }
  }
  WMat psiS = wmat_map(D.psi, ctxS.Wn, [&](const Wv& v) { return pd_lift_w(E, v); });
  return display_make(pair_make(ctxS, h, d, BS), psiS);
}

namespace {

// all Witt vectors of the given length with coordinates in the kernel of E
std::vector<Wv> kernel_witt_vectors(const PDExtension& E, const WittRing& WS) {
  std::vector<Wv> out;
  size_t k = E.kernel.size();
  uint64_t total = 1;
  for (int i = 0; i < WS.len(); ++i) total *= k;
  for (uint64_t mask = 0; mask < total; ++mask) {
    Wv v = WS.zero();
    uint64_t t = mask;
    for (int i = 0; i < WS.len(); ++i) {
      v.a[i] = E.kernel[t % k];
      t /= k;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<int32_t> point_key(const Subspace& U, const WMat& psi) {
  std::vector<int32_t> key;
  for (const auto& row : U)
    for (const auto& e : row) key.insert(key.end(), e.c.begin(), e.c.end());
  key.push_back(-1);
  for (const auto& v : psi.e)
    for (const auto& e : v.a) key.insert(key.end(), e.c.begin(), e.c.end());
  return key;
}

struct GmPoint {
  Subspace U;
  WMat psi;
};

GmPoint gm_action(const DispCtx& ctxS, const Ring& S, const WMat& g, const GmPoint& x, int h) {
  std::vector<std::vector<Relem>> rows;
  for (const auto& row : x.U) {
    std::vector<Relem> img(h, S.zero());
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j) img[i] = S.add(img[i], S.mul(g.at(i, j).a[0], row[j]));
    rows.push_back(std::move(img));
  }
  Subspace U2 = x.U.empty() ? x.U : summand_normalize(S, rows);
  Pair P1 = adapted_pair_local(ctxS, x.U, h);
  Pair P2 = adapted_pair_local(ctxS, U2, h);
  PairHom gh{P1, P2, g};
  WMat gt = tilde_morphism(gh);
  WMat psi2 = wmat_mul(ctxS.reduce_mat(g), wmat_mul(x.psi, wmat_inverse(gt)));
  return GmPoint{U2, psi2};
}

} // namespace

GmFiber gm_fiber_analysis(const Display& D, const PDExtension& E, const DispCtx& ctxS,
                          uint64_t budget) {
  GmFiber F;
  const Ring& S = E.S;
  int h = D.pair.h;

  // adapted presentation of D over R
  Subspace UR = residue_filtration(E.R, D.pair);
  Pair Pad = adapted_pair_local(D.pair.ctx, UR, h);
  PairHom pres{Pad, D.pair, wmat_identity(D.pair.ctx.Wm, h)};
  if (!pair_hom_valid(Pad, D.pair, pres.f) || !pair_hom_valid(D.pair, Pad, pres.f))
    fail(Err::Internal, "adapted presentation mismatch");
  Display Dad = display_make(Pad, wmat_mul(D.psi, tilde_morphism(pres)));

  F.filtrations = filtration_lifts(E, UR, h);
  for (const auto& US : F.filtrations) F.canonical.push_back(gm_lift(Dad, E, ctxS, US));

  std::vector<Wv> K = kernel_witt_vectors(E, ctxS.Wm);
  uint64_t eta_total = 1;
  for (int i = 0; i < h * h; ++i) {
    if (eta_total > budget / K.size()) fail(Err::BudgetExceeded, "gm fiber too large");
    eta_total *= K.size();
  }
  F.total_lifts = (uint64_t)F.filtrations.size() * eta_total;
  if (F.filtrations.size() * eta_total > budget || eta_total > budget)
    fail(Err::BudgetExceeded, "gm fiber too large");

  // the isomorphisms reducing to the identity: g = 1 (+) eta
  std::vector<WMat> G;
  G.reserve(eta_total);
  for (uint64_t mask = 0; mask < eta_total; ++mask) {
    WMat g = wmat_identity(ctxS.Wm, h);
    uint64_t t = mask;
    for (int k = 0; k < h * h; ++k) {
      g.e[k] = ctxS.Wm.add(g.e[k], K[t % K.size()]);
      t /= K.size();
    }
    G.push_back(std::move(g));
  }

  std::map<std::vector<int32_t>, int> cls;
  uint64_t covered = 0;
  F.aut_trivial = true;
  F.canonical_pairwise_noniso = true;
  for (size_t ci = 0; ci < F.canonical.size(); ++ci) {
    const Display& C = F.canonical[ci];
    GmPoint x{F.filtrations[ci], C.psi};
    uint64_t aut = 0, fresh = 0;
    for (const auto& g : G) {
      GmPoint y = gm_action(ctxS, S, g, x, h);
      auto key = point_key(y.U, y.psi);
      auto [it, inserted] = cls.emplace(std::move(key), (int)ci);
      if (inserted)
        ++fresh;
      else if (it->second != (int)ci)
        F.canonical_pairwise_noniso = false;
      if (y.U == x.U && y.psi == x.psi) ++aut;
    }
    if (aut != 1) F.aut_trivial = false;
    covered += fresh;
  }
  F.classes = F.canonical.size();
  F.partition_ok = (covered == F.total_lifts);
  F.classes_eq_filtrations = (F.classes == F.filtrations.size()) && F.partition_ok &&
                             F.canonical_pairwise_noniso;
  return F;
}

// ---- universal deformation ----------------------------------------------------

namespace {

Relem jet_var(const Ring& J, int v) {
  const RingData* d = J.data();
  std::vector<int> e(d->vars, 0);
  e[v] = 1;
  auto it = std::find(d->monomials.begin(), d->monomials.end(), e);
  if (it == d->monomials.end()) fail(Err::Internal, "jet variable missing");
  int mi = (int)(it - d->monomials.begin());
  Relem r = J.zero();
  Relem one_b = d->base.one();
  std::copy(one_b.c.begin(), one_b.c.end(), r.c.begin() + mi * d->base.dim());
  return J.canon(std::vector<int64_t>(r.c.begin(), r.c.end()));
}

} // namespace

UnivDeformation universal_deformation(const Display& D0, int order, int mixed_prec) {
  const DispCtx& ctx0 = D0.pair.ctx;
  const Ring& k = ctx0.R;
  if (!k.is_field() || !ctx0.dieudonne)
    fail(Err::BadDescriptor, "universal deformation starts from a Dieudonne display over F_q");
  if (order < 1) fail(Err::ZeroPrecision, "order must be >= 1");
  int h = D0.pair.h, d = D0.pair.d;
  int r = d * (h - d);
  int N = ctx0.m;

  UnivDeformation UD;
  UD.tangent_dim = r;
  Ring base = (mixed_prec > 0) ? Ring::galois_ring(k.p(), mixed_prec, k.f(), k.modulus()) : k;
  UD.Rdef = (r > 0) ? Ring::jet(base, r, order + 1) : base;
  bool charp = (mixed_prec == 0);
  UD.ctx = charp ? DispCtx::dieudonne_ctx(UD.Rdef, N) : DispCtx::truncated(UD.Rdef, N, N - 1);

  // constant lift of residue-field elements into Rdef
  RingHom inc = (UD.Rdef.kind() == RingKind::Jet) ? RingHom::include_const(UD.Rdef) : RingHom();
  auto lift_elem = [&](const Relem& x) -> Relem {
    Relem b = charp ? x : base.section(x);
    return inc.ok() ? inc.apply(b) : b;
  };
  auto lift_wv = [&](const Wv& v, const WittRing& W) {
    Wv out = W.zero();
    for (int i = 0; i < W.len() && i < (int)v.a.size(); ++i) out.a[i] = lift_elem(v.a[i]);
    return out;
  };

  // adapted presentation of D0
  StackPoint sp = display_stack_point(D0);
  Subspace U0 = sp.U;
  std::vector<int> piv;
  for (const auto& row : U0) {
    int j = 0;
    while (j < h && !k.is_unit(row[j])) ++j;
    piv.push_back(j);
  }

  // universal filtration U(t): row_i = lift(U0 row_i) + sum_j t_{ij} e_{nonpiv_j}
  Subspace Uu;
  {
    std::vector<int> nonpiv;
    for (int j = 0; j < h; ++j)
      if (std::find(piv.begin(), piv.end(), j) == piv.end()) nonpiv.push_back(j);
    int v = 0;
    for (int i = 0; i < d; ++i) {
      std::vector<Relem> row(h, UD.Rdef.zero());
      for (int j = 0; j < h; ++j) row[j] = lift_elem(U0[i][j]);
      if (r > 0)
        for (int j : nonpiv) row[j] = UD.Rdef.add(row[j], jet_var(UD.Rdef, v++));
      Uu.push_back(std::move(row));
    }
  }

  Pair Pu = adapted_pair_local(UD.ctx, Uu, h);
  WMat psiu(UD.ctx.Wn, h, h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) psiu.at(i, j) = lift_wv(sp.psi.at(i, j), UD.ctx.Wn);
  UD.univ = display_make(Pu, psiu);

  // first-order rigidity: reduce mod (m^2 + p) and compare with the transported Psi_0
  {
    Ring R1 = (r > 0) ? Ring::jet(k, r, 2) : k;
    // hom Rdef -> R1: kill p and all monomials of degree >= 2
    std::vector<Relem> images;
    images.reserve(UD.Rdef.size());
    const RingData* dj = UD.Rdef.data();
    for (uint64_t idx = 0; idx < UD.Rdef.size(); ++idx) {
      Relem x = UD.Rdef.element_at(idx);
      Relem y = R1.zero();
      if (UD.Rdef.kind() == RingKind::Jet) {
        int bd = dj->base.dim();
        for (size_t mi = 0; mi < dj->monomials.size(); ++mi) {
          int deg = 0;
          for (int e : dj->monomials[mi]) deg += e;
          if (deg > 1) continue;
          Relem coeff{std::vector<int32_t>(x.c.begin() + mi * bd, x.c.begin() + (mi + 1) * bd)};
          Relem kc = dj->base.residue(dj->base.canon(
              std::vector<int64_t>(coeff.c.begin(), coeff.c.end())));
          if (r > 0) {
            Relem term = R1.zero();
            std::copy(kc.c.begin(), kc.c.end(), term.c.begin() + mi * k.dim());
            y = R1.add(y, R1.canon(std::vector<int64_t>(term.c.begin(), term.c.end())));
          } else {
            y = R1.add(y, kc);
          }
        }
      } else {
        y = UD.Rdef.residue(x);
      }
      images.push_back(y);
    }
    RingHom red = RingHom::table(UD.Rdef, R1, images);
    if (!red.validate(200)) fail(Err::Internal, "reduction hom invalid");

    DispCtx ctx1 = charp ? DispCtx::dieudonne_ctx(R1, N)
                         : DispCtx::truncated(R1, N, N - 1);
    Display red_univ = base_change_display(UD.univ, red, ctx1);

    // constant presentation over R1 and the relative identification
    RingHom toK = RingHom::residue(R1);
    PDExtension E1 = pd_extension(R1, k, toK);
    Subspace U0c;
    for (const auto& row : U0) {
      std::vector<Relem> rr;
      for (const auto& x : row) rr.push_back(pd_lift(E1, x));
      U0c.push_back(std::move(rr));
    }
    Pair Pc = adapted_pair_local(ctx1, U0c, h);
    WMat psic(ctx1.Wn, h, h);
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j) psic.at(i, j) = pd_lift_w(E1, ctx0.dieudonne && !charp
                                                                    ? ctx0.Wm.truncate(sp.psi.at(i, j), N - 1)
                                                                    : sp.psi.at(i, j));
    PairHom trans{Pc, red_univ.pair, wmat_identity(ctx1.Wm, h)};
    WMat Trel = tilde_morphism_rel(E1, trans);
    UD.rigid_first_order = (wmat_mul(red_univ.psi, Trel) == psic);
  }
  return UD;
}

Display specialize_deformation(const UnivDeformation& UD, const Ring& S,
                               const std::vector<Relem>& values, const DispCtx& ctxS) {
  const Ring& J = UD.Rdef;
  if (J.kind() != RingKind::Jet) {
    // no moduli: constant display over S via residue -> section
    RingHom toS = RingHom::table(J, S, [&] {
      std::vector<Relem> im;
      for (uint64_t i = 0; i < J.size(); ++i) {
        // J is the residue field k or GR; embed constants through S's section
        Relem x = J.element_at(i);
        Relem kx = J.residue(x);
        im.push_back(S.section(kx));
      }
      return im;
    }());
    if (!toS.validate(100)) fail(Err::Internal, "specialization hom invalid");
    return base_change_display(UD.univ, toS, ctxS);
  }
  const RingData* dj = J.data();
  if ((int)values.size() != dj->vars) fail(Err::BadDescriptor, "wrong number of values");
  Ring base = dj->base;
  // base -> S: through the residue field section (base = k or GR over the same k)
  auto base_to_S = [&](const Relem& c) -> Relem { return S.section(base.residue(c)); };
  std::vector<Relem> images;
  images.reserve(J.size());
  int bd = base.dim();
  for (uint64_t idx = 0; idx < J.size(); ++idx) {
    Relem x = J.element_at(idx);
    Relem acc = S.zero();
    for (size_t mi = 0; mi < dj->monomials.size(); ++mi) {
      Relem coeff{std::vector<int32_t>(x.c.begin() + mi * bd, x.c.begin() + (mi + 1) * bd)};
      Relem term = base_to_S(base.canon(std::vector<int64_t>(coeff.c.begin(), coeff.c.end())));
      for (int v = 0; v < dj->vars; ++v)
        for (int e = 0; e < dj->monomials[mi][v]; ++e) term = S.mul(term, values[v]);
      acc = S.add(acc, term);
    }
    images.push_back(acc);
  }
  RingHom toS = RingHom::table(J, S, images);
  if (!toS.validate(200)) fail(Err::Internal, "specialization hom invalid");
  return base_change_display(UD.univ, toS, ctxS);
}

// ---- rigidity -------------------------------------------------------------------

RigiditySolution rigidity_series(const ZinkCtx& Z, const WMat& A0, const WMat& A,
                                 int target_n) {
  int h = A.rows;
  const WittRing& W = Z.W;
  if (!A0.W.same(Z.Wk) || !W.same(A.W)) fail(Err::RingMismatch, "rigidity input rings");
  if (!wmat_invertible(A0))
    fail(Err::NonConvergent, "A0 must be invertible over W(k) in this model");
  // wk-part of A must be A0
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      if (zink_wk_part(Z, A.at(i, j)) != A0.at(i, j))
        fail(Err::RingMismatch, "A does not reduce to A0");

  WMat A0inv = wmat_inverse(A0);
  WMat A0inv_R = wmat_map(A0inv, W, [&](const Wv& v) { return zink_wk_embed(Z, v); });

  RigiditySolution sol;
  if (Z.char_p) {
    if (target_n != Z.N) fail(Err::BadTruncation, "equal characteristic solves at precision N");
    WMat T = wmat_identity(W, h);
    int bound = 2 * Z.N * Z.A.nu + 16;
    for (int it = 0; it < bound; ++it) {
      WMat sT = wmat_map(T, W, [&](const Wv& v) { return W.frobenius_endo(v); });
      WMat Tn = wmat_mul(A, wmat_mul(sT, A0inv_R));
      ++sol.iterations;
      if (Tn == T) {
        sol.T = T;
        sol.converged = true;
        return sol;
      }
      T = Tn;
    }
    fail(Err::NonConvergent, "rigidity iteration did not stabilize");
  }

  // mixed characteristic: descend in precision from Z.N to target_n; the last
  // step realizes the defining equation at the target precision, and convergence
  // means the iterate no longer moves under truncation
  if (target_n < 1 || target_n >= Z.N)
    fail(Err::BadTruncation, "need 1 <= target_n < N for the mixed-characteristic descent");
  WMat T = wmat_identity(W, h);
  WMat Tprev = T;
  int L = Z.N;
  while (L > target_n) {
    WittRing WL(Z.A.R, L);
    WittRing WL1(Z.A.R, L - 1);
    WMat sT = wmat_map(T, WL1, [&](const Wv& v) { return WL.frobenius(v, L - 1); });
    WMat AL = wmat_map(A, WL1, [&](const Wv& v) { return W.truncate(v, L - 1); });
    WMat A0L = wmat_map(A0inv_R, WL1, [&](const Wv& v) { return W.truncate(v, L - 1); });
    Tprev = T;
    T = wmat_mul(AL, wmat_mul(sT, A0L));
    ++sol.iterations;
    --L;
  }
  WittRing Wp(Z.A.R, target_n + 1);
  WMat cmp = wmat_map(Tprev, WittRing(Z.A.R, target_n),
                      [&](const Wv& v) { return Wp.truncate(v, target_n); });
  if (!(cmp == T)) fail(Err::NonConvergent, "iteration still moving at target precision");
  sol.T = T;
  sol.converged = true;
  return sol;
}

} // namespace wd
