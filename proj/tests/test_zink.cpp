#include <doctest.h>

#include "wittdisp/zink.hpp"

using namespace wd;

TEST_SUITE_BEGIN("zink");

TEST_CASE("zink_make over a perfect field has zero nilpart") {
  Ring F9 = Ring::galois_field(3, 2);
  ZinkCtx Z = zink_make(F9, 2);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    Wv x = Z.W.random(rng);
    ZinkSplit s = zink_split(Z, x);
    CHECK(Z.W.is_zero(s.nil));
    CHECK(zink_assemble(Z, s) == x);
  }
}

TEST_CASE("zink_make rejects products and tiny precision") {
  Ring P = Ring::product({Ring::prime_field(3), Ring::prime_field(3)});
  CHECK_THROWS_AS(zink_make(P, 2), Error);
  CHECK_THROWS_AS(zink_make(Ring::prime_field(3), 1), Error);
}

TEST_CASE("split/assemble round-trips exhaustively over F_3[t]/t^2") {
  Ring S = Ring::trunc_poly(Ring::prime_field(3), 2);
  ZinkCtx Z = zink_make(S, 2);
  REQUIRE(Z.W.size() == 81 * 81);
  std::mt19937_64 rng(2);
  for (uint64_t i = 0; i < Z.W.size(); ++i) {
    Wv x = Z.W.element_at(i);
    ZinkSplit s = zink_split(Z, x);
    for (const auto& c : s.nil.a) CHECK(S.in_max_ideal(c));
    CHECK(zink_assemble(Z, s) == x);
  }
}

TEST_CASE("split/assemble in mixed characteristic") {
  for (Ring R : {Ring::integers_mod(3, 2), Ring::galois_ring(3, 2, 2),
                 Ring::trunc_poly(Ring::integers_mod(3, 2), 2)}) {
    ZinkCtx Z = zink_make(R, 2);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
      Wv x = Z.W.random(rng);
      ZinkSplit s = zink_split(Z, x);
      for (const auto& c : s.nil.a) CHECK(R.in_max_ideal(c));
      CHECK(zink_assemble(Z, s) == x);
      // the W(k)-part extraction is a retraction of the embedding
      CHECK(zink_wk_part(Z, zink_wk_embed(Z, s.wk)) == s.wk);
    }
  }
}

TEST_CASE("zink arithmetic satisfies ring axioms on samples") {
  for (Ring R : {Ring::trunc_poly(Ring::prime_field(3), 2), Ring::integers_mod(3, 2),
                 Ring::trunc_poly(Ring::galois_field(3, 2), 2)}) {
    ZinkCtx Z = zink_make(R, 2);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 500; ++i) {
      Wv x = Z.W.random(rng), y = Z.W.random(rng), z = Z.W.random(rng);
      CHECK(Z.W.add(x, y) == Z.W.add(y, x));
      CHECK(Z.W.mul(Z.W.mul(x, y), z) == Z.W.mul(x, Z.W.mul(y, z)));
      CHECK(Z.W.mul(x, Z.W.add(y, z)) == Z.W.add(Z.W.mul(x, y), Z.W.mul(x, z)));
    }
  }
}

TEST_CASE("sigma kills the Teichmueller embedding of a square-zero kernel") {
  // char p: sigma([x]) = [x^p] = 0 for x^2 = 0
  Ring S = Ring::trunc_poly(Ring::prime_field(3), 2);
  ZinkCtx Z = zink_make(S, 3);
  for (uint64_t i = 0; i < S.size(); ++i) {
    Relem x = S.element_at(i);
    if (!S.in_max_ideal(x)) continue;
    CHECK(Z.W.is_zero(Z.W.frobenius_endo(Z.W.teichmuller(x))));
  }
  // mixed characteristic, through the Frobenius polynomials
  Ring Z9 = Ring::integers_mod(3, 2);
  WittRing W(Z9, 3);
  for (uint64_t i = 0; i < Z9.size(); ++i) {
    Relem x = Z9.element_at(i);
    if (!Z9.in_max_ideal(x)) continue;
    CHECK(W.with_len(2).is_zero(W.frobenius(W.teichmuller(x), 2)));
  }
}

TEST_CASE("PD extension validation") {
  Ring F3 = Ring::prime_field(3);
  Ring S = Ring::trunc_poly(F3, 2);
  PDExtension E = pd_extension(S, F3, RingHom::kill_vars(S));
  CHECK(E.kernel.size() == 3);
  for (const auto& x : E.kernel)
    for (const auto& y : E.kernel) CHECK(S.is_zero(S.mul(x, y)));
  // t^3 kernel is not square-zero
  Ring S3 = Ring::trunc_poly(F3, 3);
  CHECK_THROWS_AS(pd_extension(S3, F3, RingHom::kill_vars(S3)), Error);
  // Z/9 -> Z/3 is square-zero with compatible trivial divided powers (p = 3)
  Ring Z9 = Ring::integers_mod(3, 2);
  PDExtension E2 = pd_extension(Z9, F3, RingHom::residue(Z9));
  CHECK(E2.kernel.size() == 3);
}

TEST_CASE("relative augmentation split") {
  Ring F3 = Ring::prime_field(3);
  Ring S = Ring::trunc_poly(F3, 2);
  PDExtension E = pd_extension(S, F3, RingHom::kill_vars(S));
  WittRing WS(S, 2);

  // x in a embeds as [x]: split = (0, x)
  Relem t = S.canon({0, 1});
  RelSplit s = relative_augmentation_split(E, WS, WS.teichmuller(t));
  CHECK(WS.is_zero(s.aug));
  CHECK(s.apart == t);

  // V(y): split = (V(y), 0)
  std::mt19937_64 rng(6);
  WittRing W1 = WS.with_len(1);
  for (int i = 0; i < 20; ++i) {
    Wv y = W1.random(rng);
    RelSplit sv = relative_augmentation_split(E, WS, W1.verschiebung(y));
    CHECK(sv.aug == W1.verschiebung(y));
    CHECK(S.is_zero(sv.apart));
  }

  // round-trip over all of I_{S/R}
  int count = 0;
  for (uint64_t i = 0; i < WS.size(); ++i) {
    Wv x = WS.element_at(i);
    if (!pd_in_kernel(E, x.a[0])) {
      CHECK_THROWS_AS(relative_augmentation_split(E, WS, x), Error);
      continue;
    }
    ++count;
    RelSplit sp = relative_augmentation_split(E, WS, x);
    CHECK(WS.add(sp.aug, WS.teichmuller(sp.apart)) == x);
    // stability: s * [x] stays in a with value sbar * x
    Wv sc = WS.random(rng);
    Wv prod = WS.mul(sc, WS.teichmuller(sp.apart));
    RelSplit sp2 = relative_augmentation_split(E, WS, prod);
    CHECK(WS.is_zero(sp2.aug));
    CHECK(sp2.apart == S.mul(sc.a[0], sp.apart));
  }
  CHECK(count == 3 * 9);  // |a| * |S|^(N-1)
}

TEST_CASE("relative divided Frobenius") {
  Ring F3 = Ring::prime_field(3);
  Ring S = Ring::trunc_poly(F3, 2);
  PDExtension E = pd_extension(S, F3, RingHom::kill_vars(S));
  int m = 3, n = 2;
  WittRing WS(S, m), Wn(S, n);

  // x in a -> 0
  Relem t = S.canon({0, 1});
  CHECK(Wn.is_zero(relative_divided_frobenius(E, WS, WS.teichmuller(t), n)));
  // V(y) -> y truncated
  WittRing Wy = WS.with_len(m - 1);
  std::mt19937_64 rng(8);
  for (int i = 0; i < 20; ++i) {
    Wv y = Wy.random(rng);
    CHECK(relative_divided_frobenius(E, WS, Wy.verschiebung(y), n) == Wy.truncate(y, n));
  }
  // p sigma^div(1 (x) x) = sigma(x) for all x in I_{S/R} (exhaustive)
  for (uint64_t i = 0; i < WS.size(); ++i) {
    Wv x = WS.element_at(i);
    if (!pd_in_kernel(E, x.a[0])) continue;
    Wv lhs = Wn.mul(Wn.scalar_p(), relative_divided_frobenius(E, WS, x, n));
    Wv rhs = WS.frobenius(x, n);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Frobenius vanishes on the embedded kernel (exhaustive)") {
  Ring F9 = Ring::galois_field(3, 2);
  Ring S = Ring::trunc_poly(F9, 2);
  PDExtension E = pd_extension(S, F9, RingHom::kill_vars(S));
  REQUIRE(E.kernel.size() <= 1000);
  WittRing WS(S, 3);
  for (const auto& x : E.kernel)
    CHECK(WS.with_len(2).is_zero(WS.frobenius(WS.teichmuller(x), 2)));
}

TEST_SUITE_END();
