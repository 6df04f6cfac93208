#include <doctest.h>

#include "wittdisp/deform.hpp"
#include "wittdisp/io.hpp"

using namespace wd;

namespace {

Display std_display_over(const Ring& k, int N, int h, int d, std::mt19937_64& rng) {
  DispCtx ctx = DispCtx::dieudonne_ctx(k, N);
  for (;;) {
    WMat psi = wmat_random(ctx.Wn, h, h, rng);
    if (!wmat_invertible(psi)) continue;
    return display_make(pair_standard(ctx, h, d), psi);
  }
}

} // namespace

TEST_SUITE_BEGIN("deform");

TEST_CASE("filtration lifts are counted by |a|^{d(h-d)}") {
  Ring F3 = Ring::prime_field(3);
  Ring S = Ring::trunc_poly(F3, 2);
  PDExtension E = pd_extension(S, F3, RingHom::kill_vars(S));
  Subspace UR{{F3.one(), F3.zero()}};
  auto lifts = filtration_lifts(E, UR, 2);
  CHECK(lifts.size() == 3);  // 3^{1*1}
  for (const auto& U : lifts) {
    CHECK(U.size() == 1);
    CHECK(U[0][0] == S.one());
    CHECK(pd_in_kernel(E, U[0][1]));
  }
  // degenerate types have a unique lift
  CHECK(filtration_lifts(E, {}, 2).size() == 1);
}

TEST_CASE("gm_lift reduces to the input display and respects the chosen filtration") {
  std::mt19937_64 rng(71);
  Ring F3 = Ring::prime_field(3);
  Ring S = Ring::trunc_poly(F3, 2);
  PDExtension E = pd_extension(S, F3, RingHom::kill_vars(S));
  int N = 2;
  DispCtx ctxS = DispCtx::dieudonne_ctx(S, N);
  Display D = std_display_over(F3, N, 2, 1, rng);
  Subspace UR{{F3.one(), F3.zero()}};
  for (const auto& US : filtration_lifts(E, UR, 2)) {
    Display L = gm_lift(D, E, ctxS, US);
    // reduction along proj recovers D
    DispCtx ctxR = D.pair.ctx;
    Display red = base_change_display(L, E.proj, ctxR);
    CHECK(red == D);
    // the filtration of the lift is U_S
    Subspace got;
    for (int j = 0; j < L.pair.d; ++j) {
      std::vector<Relem> row(2);
      for (int i = 0; i < 2; ++i) row[i] = L.pair.basis.at(i, j).a[0];
      got.push_back(row);
    }
    CHECK(summand_normalize(S, got) == US);
  }
  // identity extension: the lift is the display itself
  PDExtension Eid = pd_extension(F3, F3, RingHom::identity(F3));
  Display Lid = gm_lift(D, Eid, D.pair.ctx, UR);
  CHECK(Lid == D);
  // a non-lift filtration is rejected
  Subspace badU{{S.one(), S.one()}};
  CHECK_THROWS_AS(gm_lift(D, E, ctxS, badU), Error);
}

TEST_CASE("gm fiber: lifts biject with filtration lifts (exhaustive)") {
  std::mt19937_64 rng(73);
  Ring F3 = Ring::prime_field(3);
  Ring S = Ring::trunc_poly(F3, 2);
  PDExtension E = pd_extension(S, F3, RingHom::kill_vars(S));
  int N = 2;
  DispCtx ctxS = DispCtx::dieudonne_ctx(S, N);
  Display D = std_display_over(F3, N, 2, 1, rng);
  GmFiber F = gm_fiber_analysis(D, E, ctxS, 100'000'000);
  CHECK(F.filtrations.size() == 3);
  CHECK(F.total_lifts == 3 * 6561);
  CHECK(F.classes == 3);
  CHECK(F.partition_ok);
  CHECK(F.canonical_pairwise_noniso);
  CHECK(F.aut_trivial);
  CHECK(F.classes_eq_filtrations);
}

TEST_CASE("gm fiber for degenerate type d = 0") {
  std::mt19937_64 rng(79);
  Ring F3 = Ring::prime_field(3);
  Ring S = Ring::trunc_poly(F3, 2);
  PDExtension E = pd_extension(S, F3, RingHom::kill_vars(S));
  DispCtx ctxS = DispCtx::dieudonne_ctx(S, 2);
  Display D = std_display_over(F3, 2, 1, 0, rng);
  GmFiber F = gm_fiber_analysis(D, E, ctxS, 1'000'000);
  CHECK(F.classes == 1);
  CHECK(F.partition_ok);
  CHECK(F.classes_eq_filtrations);
}

TEST_CASE("universal deformation at first order: dimensions and rigidity") {
  std::mt19937_64 rng(83);
  Ring F3 = Ring::prime_field(3);
  Display D0 = std_display_over(F3, 2, 2, 1, rng);
  UnivDeformation UD = universal_deformation(D0, 1, 0);
  CHECK(UD.tangent_dim == 1);
  CHECK(UD.Rdef.kind() == RingKind::Jet);
  CHECK(UD.Rdef.size() == 9);  // F_3[t]/t^2... as a jet ring of order 2
  CHECK(UD.rigid_first_order);

  // d(h-d) = 2 coordinates for h=3, d=1 (construction only; no exhaustive run)
  Display D31 = std_display_over(F3, 2, 3, 1, rng);
  UnivDeformation U31 = universal_deformation(D31, 1, 0);
  CHECK(U31.tangent_dim == 2);
  CHECK(U31.rigid_first_order);

  // degenerate: no moduli
  Display Dd0 = std_display_over(F3, 2, 2, 0, rng);
  UnivDeformation U0 = universal_deformation(Dd0, 1, 0);
  CHECK(U0.tangent_dim == 0);
  CHECK(U0.rigid_first_order);
}

TEST_CASE("universal deformation: mixed characteristic jet ring") {
  std::mt19937_64 rng(89);
  Ring F3 = Ring::prime_field(3);
  Display D0 = std_display_over(F3, 3, 2, 1, rng);
  UnivDeformation UD = universal_deformation(D0, 1, 2);
  CHECK(UD.Rdef.p_nilpotence() == 2);
  CHECK(UD.tangent_dim == 1);
  CHECK(UD.rigid_first_order);
}

TEST_CASE("first-order universality: specializations hit every deformation class") {
  std::mt19937_64 rng(97);
  Ring F3 = Ring::prime_field(3);
  int N = 2;
  Display D0 = std_display_over(F3, N, 2, 1, rng);
  UnivDeformation UD = universal_deformation(D0, 1, 0);
  REQUIRE(UD.rigid_first_order);

  Ring S = Ring::trunc_poly(F3, 2);
  PDExtension E = pd_extension(S, F3, RingHom::kill_vars(S));
  DispCtx ctxS = DispCtx::dieudonne_ctx(S, N);
  GmFiber F = gm_fiber_analysis(D0, E, ctxS, 100'000'000);
  REQUIRE(F.classes == 3);

  // specialize t -> c*eps for all c in F_3; each class is hit exactly once
  Relem eps = S.canon({0, 1});
  std::vector<int> hits(F.canonical.size(), 0);
  for (int c = 0; c < 3; ++c) {
    Display Dc = specialize_deformation(UD, S, {S.mul(S.from_int(c), eps)}, ctxS);
    // identify the class by the exhaustive isomorphism test reducing to id:
    // run the fiber action from the canonical reps and look for Dc
    int found = -1;
    for (size_t ci = 0; ci < F.canonical.size(); ++ci) {
      // Dc should equal some iso-translate of canonical[ci]; test directly by
      // checking the filtration class via gm_lift of the same filtration
      Subspace Uc;
      for (int j = 0; j < Dc.pair.d; ++j) {
        std::vector<Relem> row(2);
        for (int i = 0; i < 2; ++i) row[i] = Dc.pair.basis.at(i, j).a[0];
        Uc.push_back(row);
      }
      if (summand_normalize(S, Uc) == F.filtrations[ci]) found = (int)ci;
    }
    REQUIRE(found >= 0);
    ++hits[found];
    // and the specialization is isomorphic to that canonical lift via an iso
    // reducing to the identity (exhaustive over the unipotent group)
    const Display& C = F.canonical[found];
    std::vector<Wv> K;
    {
      WittRing WS = ctxS.Wm;
      uint64_t tot = 1;
      for (int i = 0; i < WS.len(); ++i) tot *= E.kernel.size();
      for (uint64_t m = 0; m < tot; ++m) {
        Wv v = WS.zero();
        uint64_t t = m;
        for (int i = 0; i < WS.len(); ++i) {
          v.a[i] = E.kernel[t % E.kernel.size()];
          t /= E.kernel.size();
        }
        K.push_back(v);
      }
    }
    bool iso_found = false;
    uint64_t tot = 1;
    for (int i = 0; i < 4; ++i) tot *= K.size();
    for (uint64_t m = 0; m < tot && !iso_found; ++m) {
      WMat g = wmat_identity(ctxS.Wm, 2);
      uint64_t t = m;
      for (int k = 0; k < 4; ++k) {
        g.e[k] = ctxS.Wm.add(g.e[k], K[t % K.size()]);
        t /= K.size();
      }
      if (display_iso_check(C, Dc, g)) iso_found = true;
    }
    CHECK(iso_found);
  }
  for (int hcount : hits) CHECK(hcount == 1);
}

TEST_CASE("rigidity series: fixed point, congruence, uniqueness") {
  std::mt19937_64 rng(101);
  // char p, square-zero base
  Ring S = Ring::trunc_poly(Ring::prime_field(3), 2);
  ZinkCtx Z = zink_make(S, 2);
  for (int h = 1; h <= 2; ++h) {
    for (int rep = 0; rep < 25; ++rep) {
      WMat A0(Z.Wk, h, h);
      do {
        A0 = wmat_random(Z.Wk, h, h, rng);
      } while (!wmat_invertible(A0));
      WMat A = wmat_map(A0, Z.W, [&](const Wv& v) { return zink_wk_embed(Z, v); });
      // perturb by a matrix over What(m)
      for (auto& e : A.e) {
        Wv nil = Z.W.random(rng);
        for (auto& c : nil.a) {
          // force coordinates into m
          std::vector<int64_t> raw(c.c.begin(), c.c.end());
          raw[0] = 0;
          c = S.canon(raw);
        }
        e = Z.W.add(e, nil);
      }
      RigiditySolution sol = rigidity_series(Z, A0, A, Z.N);
      CHECK(sol.converged);
      // defining equation holds exactly
      WMat sT = wmat_map(sol.T, Z.W, [&](const Wv& v) { return Z.W.frobenius_endo(v); });
      WMat A0inv = wmat_map(wmat_inverse(A0), Z.W, [&](const Wv& v) { return zink_wk_embed(Z, v); });
      CHECK(sol.T == wmat_mul(A, wmat_mul(sT, A0inv)));
      // T = 1 mod (m, p)
      WMat diff = wmat_sub(sol.T, wmat_identity(Z.W, h));
      for (const auto& e : diff.e) {
        CHECK(S.in_max_ideal(e.a[0]));
      }
      CHECK(wmat_invertible(sol.T));
      // A = A0: T = 1
      WMat Apure = wmat_map(A0, Z.W, [&](const Wv& v) { return zink_wk_embed(Z, v); });
      RigiditySolution pure = rigidity_series(Z, A0, Apure, Z.N);
      CHECK(pure.T == wmat_identity(Z.W, h));
    }
  }
}

TEST_CASE("rigidity series: the one-step example and exhaustive uniqueness at h=1") {
  Ring S = Ring::trunc_poly(Ring::prime_field(3), 2);
  ZinkCtx Z = zink_make(S, 2);
  // A0 = 1, A = 1 + [x] with x in a: since sigma kills a, T = 1 + [x]
  Relem t = S.canon({0, 1});
  WMat A0 = wmat_identity(Z.Wk, 1);
  WMat A = wmat_identity(Z.W, 1);
  A.at(0, 0) = Z.W.add(A.at(0, 0), Z.W.teichmuller(t));
  RigiditySolution sol = rigidity_series(Z, A0, A, Z.N);
  CHECK(sol.T.at(0, 0) == A.at(0, 0));
  // uniqueness: T' = A sigma(T') A0^{-1} with T' = 1 mod (m,p) has one solution
  int solutions = 0;
  for (uint64_t i = 0; i < Z.W.size(); ++i) {
    Wv cand = Z.W.element_at(i);
    Wv diff = Z.W.sub(cand, Z.W.one());
    if (!S.in_max_ideal(diff.a[0])) continue;
    if (cand == Z.W.mul(A.at(0, 0), Z.W.frobenius_endo(cand))) ++solutions;
  }
  CHECK(solutions == 1);
}

TEST_CASE("rigidity series in mixed characteristic via precision descent") {
  std::mt19937_64 rng(103);
  Ring R = Ring::integers_mod(3, 2);  // m = (3), square-zero
  ZinkCtx Z = zink_make(R, 5);
  int target = 2;
  for (int rep = 0; rep < 10; ++rep) {
    WMat A0(Z.Wk, 1, 1);
    do {
      A0 = wmat_random(Z.Wk, 1, 1, rng);
    } while (!wmat_invertible(A0));
    WMat A = wmat_map(A0, Z.W, [&](const Wv& v) { return zink_wk_embed(Z, v); });
    Wv nil = Z.W.random(rng);
    for (auto& c : nil.a) {
      std::vector<int64_t> raw(c.c.begin(), c.c.end());
      raw[0] -= raw[0] % 3;
      c = R.canon(raw);
    }
    A.at(0, 0) = Z.W.add(A.at(0, 0), nil);
    RigiditySolution sol = rigidity_series(Z, A0, A, target);
    CHECK(sol.converged);
    CHECK((int)sol.T.at(0, 0).a.size() == target);
    // defining equation at the target precision: T = trunc(A sigma(T~) A0^{-1})
    // realized by construction; check congruence T = 1 mod (m, p)
    WittRing Wt(R, target);
    Wv diff = Wt.sub(sol.T.at(0, 0), Wt.one());
    CHECK(R.in_max_ideal(diff.a[0]));
  }
}

TEST_SUITE_END();
