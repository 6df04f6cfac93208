#include "wittdisp/census.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace wd {

void Rational::reduce() {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational make_rational(int64_t num, int64_t den) {
  Rational r{num, den};
  r.reduce();
  return r;
}

Rational rational_add(const Rational& a, const Rational& b) {
  Rational r{a.num * b.den + b.num * a.den, a.den * b.den};
  r.reduce();
  return r;
}

std::string rational_show(const Rational& r) {
  std::ostringstream os;
  os << r.num << "/" << r.den;
  return os.str();
}

uint64_t gaussian_binomial(uint64_t q, int h, int d) {
  if (d < 0 || d > h) return 0;
  // prod_{i=0}^{d-1} (q^(h-i) - 1) / (q^(i+1) - 1), kept integral stepwise
  uint64_t acc = 1;
  for (int i = 0; i < d; ++i) {
    uint64_t num = 1;
    for (int k = 0; k < h - i; ++k) num *= q;
    num -= 1;
    uint64_t den = 1;
    for (int k = 0; k < i + 1; ++k) den *= q;
    den -= 1;
    acc = acc * num;
    if (acc % den != 0) fail(Err::Internal, "gaussian binomial not integral");
    acc /= den;
  }
  return acc;
}

std::vector<Subspace> enumerate_grassmannian(const Ring& Fq, int h, int d, uint64_t budget) {
  if (d < 0 || d > h) fail(Err::BadRank, "need 0 <= d <= h");
  uint64_t expect = gaussian_binomial(Fq.size(), h, d);
  if (expect > budget) fail(Err::BudgetExceeded, "Grassmannian too large");
  std::vector<Subspace> out;
  if (d == 0) {
    out.push_back({});
    return out;
  }
  // choose pivot columns, then free entries right of pivots and off pivot columns
  std::vector<int> piv(d);
  for (int i = 0; i < d; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < d; ++i)
      for (int j = piv[i] + 1; j < h; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) free_pos.emplace_back(i, j);
    uint64_t nfree = 1;
    for (size_t i = 0; i < free_pos.size(); ++i) nfree *= Fq.size();
    for (uint64_t mask = 0; mask < nfree; ++mask) {
      Subspace U(d, std::vector<Relem>(h, Fq.zero()));
      for (int i = 0; i < d; ++i) U[i][piv[i]] = Fq.one();
      uint64_t t = mask;
      for (const auto& [i, j] : free_pos) {
        U[i][j] = Fq.element_at(t % Fq.size());
        t /= Fq.size();
      }
      out.push_back(std::move(U));
    }
    // next pivot combination
    int i = d - 1;
    while (i >= 0 && piv[i] == h - d + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
  if (out.size() != expect) fail(Err::Internal, "Grassmannian count mismatch");
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<int> pivot_cols(const Ring& R, const Subspace& U, int h) {
  std::vector<int> piv;
  for (const auto& row : U) {
    int j = 0;
    while (j < h && !R.is_unit(row[j])) ++j;
    if (j == h) fail(Err::BadRank, "row has no unit pivot");
    piv.push_back(j);
  }
  return piv;
}

} // namespace

Pair adapted_pair(const DispCtx& ctx, const Subspace& U) {
  const Ring& Fq = ctx.R;
  int d = (int)U.size();
  int h = d > 0 ? (int)U[0].size() : 0;
  if (d == 0) fail(Err::Internal, "adapted_pair needs h from U; use pair_standard for d=0");
  std::vector<int> piv = pivot_cols(Fq, U, h);
  WMat B(ctx.Wm, h, h);
  for (int i = 0; i < d; ++i)
    for (int r = 0; r < h; ++r) B.at(r, i) = ctx.Wm.teichmuller(U[i][r]);
  int col = d;
  for (int j = 0; j < h; ++j) {
    if (std::find(piv.begin(), piv.end(), j) != piv.end()) continue;
    B.at(j, col) = ctx.Wm.one();
    ++col;
  }
  return pair_make(ctx, h, d, B);
}

static Pair point_pair(const DispCtx& ctx, const Subspace& U, int h) {
  return U.empty() ? pair_standard(ctx, h, 0) : adapted_pair(ctx, U);
}

Display stack_point_display(const DispCtx& ctx, const StackPoint& x) {
  int h = x.psi.rows;
  return display_make(point_pair(ctx, x.U, h), x.psi);
}

StackPoint display_stack_point(const Display& D) {
  const Pair& P = D.pair;
  const Ring& Fq = P.ctx.R;
  if (!Fq.is_field()) fail(Err::Internal, "stack points live over F_q");
  std::vector<std::vector<Relem>> rows;
  for (int j = 0; j < P.d; ++j) {
    std::vector<Relem> row(P.h);
    for (int i = 0; i < P.h; ++i) row[i] = Fq.residue(P.basis.at(i, j).a[0]);
    rows.push_back(std::move(row));
  }
  Subspace U = rref(Fq, rows);
  Pair Pad = point_pair(P.ctx, U, P.h);
  PairHom t{Pad, P, wmat_identity(P.ctx.Wm, P.h)};
  if (!pair_hom_valid(Pad, P, t.f) || !pair_hom_valid(P, Pad, t.f))
    fail(Err::Internal, "display basis does not present its own filtration");
  WMat psi_ad = wmat_mul(D.psi, tilde_morphism(t));
  return StackPoint{U, psi_ad};
}

StackPoint group_action(const DispCtx& ctx, const WMat& g, const StackPoint& x) {
  const Ring& Fq = ctx.R;
  int h = g.rows;
  // residue matrix and transported subspace
  std::vector<std::vector<Relem>> rows;
  for (const auto& row : x.U) {
    std::vector<Relem> img(h, Fq.zero());
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j)
        img[i] = Fq.add(img[i], Fq.mul(Fq.residue(g.at(i, j).a[0]), row[j]));
    rows.push_back(std::move(img));
  }
  Subspace U2 = rref(Fq, rows);
  Pair P1 = point_pair(ctx, x.U, h);
  Pair P2 = point_pair(ctx, U2, h);
  PairHom gh{P1, P2, g};
  WMat gt = tilde_morphism(gh);
  WMat psi2 = wmat_mul(ctx.reduce_mat(g), wmat_mul(x.psi, wmat_inverse(gt)));
  return StackPoint{U2, psi2};
}

namespace {

uint64_t psi_raw_index(const WittRing& Wn, const WMat& psi) {
  uint64_t idx = 0;
  for (int k = (int)psi.e.size() - 1; k >= 0; --k)
    idx = idx * Wn.size() + Wn.index_of(psi.e[k]);
  return idx;
}

} // namespace

Census run_census(const CensusParams& par, uint64_t budget) {
  Ring Fq = Ring::galois_field(par.p, par.f);
  DispCtx ctx = DispCtx::truncated(Fq, par.m, par.n);
  int h = par.h;

  uint64_t grass_n = gaussian_binomial(Fq.size(), h, par.d);
  uint64_t Xn = grass_n * gl_order(ctx.Wn, h);
  uint64_t Gn = gl_order(ctx.Wm, h);
  if (Xn > budget || Gn > budget || Xn > budget / Gn)
    fail(Err::BudgetExceeded, "census size exceeds budget");

  std::vector<Subspace> grass = enumerate_grassmannian(Fq, h, par.d, budget);
  std::vector<WMat> psis = enumerate_gl(ctx.Wn, h, budget);
  std::vector<WMat> G = enumerate_gl(ctx.Wm, h, budget);

  std::unordered_map<uint64_t, uint32_t> psi_pos;
  for (uint32_t i = 0; i < psis.size(); ++i) psi_pos[psi_raw_index(ctx.Wn, psis[i])] = i;

  // precompute per g: reduced matrix; per (g, U): target U and tilde(g)^{-1}
  size_t NU = grass.size(), NP = psis.size();
  std::vector<Pair> pairs;
  pairs.reserve(NU);
  for (const auto& U : grass) pairs.push_back(point_pair(ctx, U, h));

  struct GTab {
    WMat gn;
    std::vector<uint32_t> tgtU;
    std::vector<WMat> tinv;
  };
  std::vector<GTab> tabs(G.size());
  std::unordered_map<uint64_t, uint32_t> upos;
  auto ukey = [&](const Subspace& U) {
    uint64_t k = 1469598103934665603ULL;
    for (const auto& row : U)
      for (const auto& e : row)
        for (int32_t c : e.c) k = (k ^ (uint64_t)(c + 1)) * 1099511628211ULL;
    return k;
  };
  for (uint32_t i = 0; i < NU; ++i) upos[ukey(grass[i])] = i;

  for (size_t gi = 0; gi < G.size(); ++gi) {
    GTab& T = tabs[gi];
    T.gn = ctx.reduce_mat(G[gi]);
    T.tgtU.resize(NU);
    T.tinv.reserve(NU);
    for (size_t ui = 0; ui < NU; ++ui) {
      std::vector<std::vector<Relem>> rows;
      for (const auto& row : grass[ui]) {
        std::vector<Relem> img(h, Fq.zero());
        for (int i = 0; i < h; ++i)
          for (int j = 0; j < h; ++j)
            img[i] = Fq.add(img[i], Fq.mul(Fq.residue(G[gi].at(i, j).a[0]), row[j]));
        rows.push_back(std::move(img));
      }
      Subspace U2 = rref(Fq, rows);
      uint32_t u2 = upos.at(ukey(U2));
      T.tgtU[ui] = u2;
      PairHom gh{pairs[ui], pairs[u2], G[gi]};
      T.tinv.push_back(wmat_inverse(tilde_morphism(gh)));
    }
  }

  auto xindex = [&](uint32_t ui, const WMat& psi) -> uint64_t {
    return (uint64_t)ui * NP + psi_pos.at(psi_raw_index(ctx.Wn, psi));
  };

  Census C;
  C.params = par;
  C.X_size = Xn;
  C.G_size = Gn;
  std::vector<uint8_t> visited(NU * NP, 0);
  Rational mass{0, 1};
  for (uint64_t xpos = 0; xpos < NU * NP; ++xpos) {
    if (visited[xpos]) continue;
    uint32_t ui = (uint32_t)(xpos / NP);
    const WMat& psi = psis[xpos % NP];
    uint64_t orbit = 0, aut = 0;
    for (size_t gi = 0; gi < G.size(); ++gi) {
      const GTab& T = tabs[gi];
      WMat psi2 = wmat_mul(T.gn, wmat_mul(psi, T.tinv[ui]));
      uint64_t ypos = xindex(T.tgtU[ui], psi2);
      if (ypos == xpos) ++aut;
      if (!visited[ypos]) {
        visited[ypos] = 1;
        ++orbit;
      }
    }
    if (orbit * aut != Gn) fail(Err::Internal, "orbit-stabilizer violation");
    C.classes.push_back(CensusClass{StackPoint{grass[ui], psi}, orbit, aut});
    mass = rational_add(mass, make_rational(1, (int64_t)aut));
  }
  C.mass = mass;
  C.mass_expect = make_rational((int64_t)Xn, (int64_t)Gn);
  C.mass_ok = (C.mass == C.mass_expect);
  uint64_t total = 0;
  for (const auto& cl : C.classes) total += cl.orbit_size;
  if (total != Xn) fail(Err::Internal, "orbits do not partition X");
  return C;
}

CensusCheck census_verify(const Census& C, uint64_t budget) {
  CensusCheck R;
  const CensusParams& par = C.params;
  Ring Fq = Ring::galois_field(par.p, par.f);
  DispCtx ctx = DispCtx::truncated(Fq, par.m, par.n);
  std::vector<WMat> G = enumerate_gl(ctx.Wm, par.h, budget);
  if (G.size() != C.G_size) return R;

  R.orbit_stabilizer_ok = true;
  R.reps_distinct_ok = true;
  uint64_t total = 0;
  std::vector<std::vector<StackPoint>> orbits;
  for (const auto& cl : C.classes) {
    std::vector<StackPoint> orb;
    uint64_t aut = 0;
    for (const auto& g : G) {
      StackPoint y = group_action(ctx, g, cl.rep);
      if (y == cl.rep) ++aut;
      orb.push_back(std::move(y));
    }
    std::sort(orb.begin(), orb.end());
    orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
    if (orb.size() != cl.orbit_size || aut != cl.aut_order ||
        orb.size() * aut != C.G_size)
      R.orbit_stabilizer_ok = false;
    total += orb.size();
    orbits.push_back(std::move(orb));
  }
  for (size_t i = 0; i < orbits.size() && R.reps_distinct_ok; ++i)
    for (size_t j = i + 1; j < orbits.size(); ++j)
      if (std::binary_search(orbits[i].begin(), orbits[i].end(), C.classes[j].rep)) {
        R.reps_distinct_ok = false;
        break;
      }
  R.partition_ok = (total == C.X_size);
  Rational mass{0, 1};
  for (const auto& cl : C.classes) mass = rational_add(mass, make_rational(1, (int64_t)cl.aut_order));
  R.mass_ok = (mass == make_rational((int64_t)C.X_size, (int64_t)C.G_size));
  return R;
}

ZipData zip_extract(const Display& D) {
  const Pair& P = D.pair;
  const Ring& Fq = P.ctx.R;
  if (!Fq.is_field()) fail(Err::Internal, "zip extraction needs a field base");
  ZipData Z;
  // Hodge: M_1 / IM
  std::vector<std::vector<Relem>> rows;
  for (int j = 0; j < P.d; ++j) {
    std::vector<Relem> row(P.h);
    for (int i = 0; i < P.h; ++i) row[i] = Fq.residue(P.basis.at(i, j).a[0]);
    rows.push_back(std::move(row));
  }
  Z.hodge = rref(Fq, rows);
  // conjugate: image of M -> M_1~ -> W_n (x) M -> M/IM
  WMat comp = frobenius_phi(D);
  std::vector<std::vector<Relem>> crows;
  for (int j = 0; j < P.h; ++j) {
    std::vector<Relem> row(P.h);
    for (int i = 0; i < P.h; ++i) row[i] = Fq.residue(comp.at(i, j).a[0]);
    crows.push_back(std::move(row));
  }
  Z.conjugate = rref(Fq, crows);
  Z.comparison.assign(P.h, std::vector<Relem>(P.h, Fq.zero()));
  for (int i = 0; i < P.h; ++i)
    for (int j = 0; j < P.h; ++j) Z.comparison[i][j] = Fq.residue(D.psi.at(i, j).a[0]);
  return Z;
}

Display shtuka_to_display(const DispCtx& ctx, const WittRing& WN, const WMat& g0, int val) {
  const Ring& Fq = ctx.R;
  if (!Fq.is_field()) fail(Err::Internal, "shtuka comparison lives over F_q");
  if (!WN.base().same(Fq)) fail(Err::RingMismatch, "g0 must be over W_N(F_q)");
  int h = g0.rows;
  int N = WN.len();
  if (val != 0 && val != 1) fail(Err::ValuationMismatch, "supported valuations: 0, 1");

  if (val == 0) {
    // g integral unit: M_1 = p g Lambda = I M, Psi = sigma(g)^{-1}
    if (!wmat_invertible(g0)) fail(Err::ValuationMismatch, "valuation-0 input must be a unit");
    if (N < ctx.n + 1) fail(Err::LengthTooShort, "need N >= n+1");
    WMat sg = wmat_map(g0, WN, [&](const Wv& v) { return WN.frobenius_endo(v); });
    WMat psi = wmat_truncate(wmat_inverse(sg), ctx.n);
    return display_make(pair_standard(ctx, h, 0), psi);
  }

  // val == 1: g = p^{-1} g0, M_1 = g0 Lambda (+ p Lambda), d = rank of residue
  std::vector<std::vector<Relem>> rows;
  for (int j = 0; j < h; ++j) {
    std::vector<Relem> row(h);
    for (int i = 0; i < h; ++i) row[i] = Fq.residue(g0.at(i, j).a[0]);
    rows.push_back(std::move(row));
  }
  Subspace U = rref(Fq, rows);
  int d = (int)U.size();
  Pair P = point_pair(ctx, U, h);

  // X = g0^{-1} B diag(1_d, p): integral with unit determinant when the
  // elementary divisors of g0 are in {1, p}
  Wv det = wmat_det(g0);
  int v = WN.valuation(det);
  if (v != h - d) fail(Err::ValuationMismatch, "det valuation must be h-d");
  if (N < ctx.n + 1 + v) fail(Err::LengthTooShort, "need N >= n+1+(h-d)");
  WMat adj = wmat_adjugate(g0);
  // B over W_N: lift the adapted basis
  WMat BN(WN, h, h);
  {
    Pair Pn = P;
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j) {
        Wv lift = WN.zero();
        const Wv& src = Pn.basis.at(i, j);
        for (int t = 0; t < ctx.m && t < N; ++t) lift.a[t] = src.a[t];
        BN.at(i, j) = lift;
      }
  }
  Wv pn = WN.scalar_p();
  WMat rhs = BN;
  for (int i = 0; i < h; ++i)
    for (int j = d; j < h; ++j) rhs.at(i, j) = WN.mul(pn, rhs.at(i, j));
  WMat Y = wmat_mul(adj, rhs);
  // divide by det = p^v * u
  Wv u = det;
  {
    WittRing cur = WN;
    for (int i = 0; i < v; ++i) {
      u = cur.p_divide(u);
      cur = cur.with_len(cur.len() - 1);
    }
    Wv uf = WN.zero();
    for (size_t i = 0; i < u.a.size(); ++i) uf.a[i] = u.a[i];
    u = uf;
  }
  WMat X(WN.with_len(N - v), h, h);
  {
    WMat Yu = wmat_scale(Y, WN.inv(u));
    for (int i = 0; i < h; ++i)
      for (int j = 0; j < h; ++j) {
        Wv e = Yu.at(i, j);
        WittRing cur = WN;
        for (int t = 0; t < v; ++t) {
          if (!Fq.is_zero(e.a[0]))
            fail(Err::ValuationMismatch, "p g0^{-1} is not integral on the filtration");
          e = cur.p_divide(e);
          cur = cur.with_len(cur.len() - 1);
        }
        X.at(i, j) = e;
      }
  }
  // Psi = sigma(X) truncated to n
  WittRing WX = WN.with_len(N - v);
  WMat psi(ctx.Wn, h, h);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j) psi.at(i, j) = WX.frobenius(X.at(i, j), ctx.n);
  return display_make(P, psi);
}

} // namespace wd
