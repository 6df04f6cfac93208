#include "wittdisp/zink.hpp"

#include <algorithm>

namespace wd {

ArtinLocal artin_local(const Ring& R) {
  if (!R.is_local()) fail(Err::NoSection, "base is not local: " + R.describe());
  ArtinLocal A;
  A.R = R;
  A.k = R.residue_field();
  A.m_gens = R.max_ideal_gens();
  A.nu = R.nilpotence();
  // verify m^nu = 0 on products of nu generators (with repetition)
  if (!A.m_gens.empty()) {
    size_t g = A.m_gens.size();
    uint64_t total = 1;
    for (int i = 0; i < A.nu; ++i) total *= g;
    for (uint64_t mask = 0; mask < total && mask < 100000; ++mask) {
      Relem prod = R.one();
      uint64_t t = mask;
      for (int i = 0; i < A.nu; ++i) {
        prod = R.mul(prod, A.m_gens[t % g]);
        t /= g;
      }
      if (!R.is_zero(prod)) fail(Err::Internal, "m^nu != 0");
    }
  }
  return A;
}

ZqIso make_zq_iso(const WittRing& W) {
  const Ring& k = W.base();
  if (!k.is_field()) fail(Err::Internal, "zq_iso needs W_N(F_q)");
  long p = k.p();
  int f = k.f(), N = W.len();
  ZqIso iso;
  iso.W = W;
  iso.gr = Ring::galois_ring(p, N, f, k.modulus());

  // Hensel root of the lifted modulus in W_N(F_q), seeded by the Teichmuller
  // lift of the residue generator
  std::vector<int64_t> mod = k.modulus();
  auto eval_m = [&](const Wv& z) {
    Wv acc = W.pow(z, (uint64_t)f);
    Wv zp = W.one();
    for (int j = 0; j < f; ++j) {
      acc = W.add(acc, W.mul(W.from_int(mod[j]), zp));
      zp = W.mul(zp, z);
    }
    return acc;
  };
  auto eval_mprime = [&](const Wv& z) {
    Wv acc = W.mul(W.from_int(f), W.pow(z, (uint64_t)(f - 1)));
    Wv zp = W.one();
    for (int j = 1; j < f; ++j) {
      acc = W.add(acc, W.mul(W.from_int(mod[j] * j), zp));
      zp = W.mul(zp, z);
    }
    return acc;
  };
  Relem gen = f == 1 ? k.zero() : k.canon([&] {
    std::vector<int64_t> c(f, 0);
    c[1] = 1;
    return c;
  }());
  Wv z = W.teichmuller(gen);
  for (int it = 0; it < 4 * N + 8; ++it) {
    Wv fz = eval_m(z);
    if (W.is_zero(fz)) break;
    z = W.sub(z, W.mul(fz, W.inv(eval_mprime(z))));
  }
  if (!W.is_zero(eval_m(z))) fail(Err::Internal, "Hensel lift of modulus root failed");
  iso.root = z;

  uint64_t sz = iso.gr.size();
  if (sz != W.size()) fail(Err::Internal, "zq size mismatch");
  iso.fwd.assign(sz, 0);
  iso.bwd.assign(sz, sz);
  for (uint64_t i = 0; i < sz; ++i) {
    Relem e = iso.gr.element_at(i);
    Wv acc = W.zero();
    Wv zp = W.one();
    for (int j = 0; j < f; ++j) {
      acc = W.add(acc, W.mul(W.from_int(e.c[j]), zp));
      zp = W.mul(zp, z);
    }
    uint64_t wi = W.index_of(acc);
    iso.fwd[i] = wi;
    if (iso.bwd[wi] != sz) fail(Err::Internal, "zq iso not injective");
    iso.bwd[wi] = i;
  }
  return iso;
}

ZinkCtx zink_make(const Ring& R, int N) {
  if (N < 2) fail(Err::ZeroPrecision, "Zink precision must be >= 2");
  ZinkCtx Z;
  Z.A = artin_local(R);
  Z.N = N;
  Z.W = WittRing(R, N);
  Z.Wk = WittRing(Z.A.k, N);
  Z.char_p = R.is_fp_algebra();
  if (!Z.char_p) {
    Z.zq = make_zq_iso(Z.Wk);
    if (Z.A.k.f() > 1) {
      // Hensel root of the modulus inside W_N(R)
      const Ring& k = Z.A.k;
      const WittRing& W = Z.W;
      std::vector<int64_t> mod = k.modulus();
      int f = k.f();
      auto eval_m = [&](const Wv& z) {
        Wv acc = W.pow(z, (uint64_t)f);
        Wv zp = W.one();
        for (int j = 0; j < f; ++j) {
          acc = W.add(acc, W.mul(W.from_int(mod[j]), zp));
          zp = W.mul(zp, z);
        }
        return acc;
      };
      auto eval_mprime = [&](const Wv& z) {
        Wv acc = W.mul(W.from_int(f), W.pow(z, (uint64_t)(f - 1)));
        Wv zp = W.one();
        for (int j = 1; j < f; ++j) {
          acc = W.add(acc, W.mul(W.from_int(mod[j] * j), zp));
          zp = W.mul(zp, z);
        }
        return acc;
      };
      std::vector<int64_t> gc(f, 0);
      gc[1] = 1;
      Wv z = W.teichmuller(R.section(k.canon(gc)));
      for (int it = 0; it < 6 * N + 12; ++it) {
        Wv fz = eval_m(z);
        if (W.is_zero(fz)) break;
        z = W.sub(z, W.mul(fz, W.inv(eval_mprime(z))));
      }
      if (!W.is_zero(eval_m(z))) fail(Err::NoSection, "no Hensel root of modulus in W_N(R)");
      Z.root_in_WR = z;
    }
  }
  return Z;
}

Wv zink_wk_part(const ZinkCtx& Z, const Wv& x) {
  Wv r;
  r.a.reserve(Z.N);
  for (const auto& c : x.a) r.a.push_back(Z.A.R.residue(c));
  return r;
}

Wv zink_wk_embed(const ZinkCtx& Z, const Wv& xi) {
  if (Z.char_p) {
    Wv r;
    r.a.reserve(Z.N);
    for (const auto& c : xi.a) r.a.push_back(Z.A.R.section(c));
    return r;
  }
  // mixed characteristic: through the Z_q-coordinates
  Relem e = Z.zq.gr.element_at(Z.zq.bwd[Z.Wk.index_of(xi)]);
  int f = Z.A.k.f();
  if (f == 1) return Z.W.from_int(e.c[0]);
  Wv acc = Z.W.zero();
  Wv zp = Z.W.one();
  for (int j = 0; j < f; ++j) {
    acc = Z.W.add(acc, Z.W.mul(Z.W.from_int(e.c[j]), zp));
    zp = Z.W.mul(zp, Z.root_in_WR);
  }
  return acc;
}

ZinkSplit zink_split(const ZinkCtx& Z, const Wv& x) {
  ZinkSplit s;
  s.wk = zink_wk_part(Z, x);
  s.nil = Z.W.sub(x, zink_wk_embed(Z, s.wk));
  for (const auto& c : s.nil.a)
    if (!Z.A.R.in_max_ideal(c)) fail(Err::Internal, "Zink split has non-nilpotent part");
  return s;
}

Wv zink_assemble(const ZinkCtx& Z, const ZinkSplit& s) {
  return Z.W.add(zink_wk_embed(Z, s.wk), s.nil);
}

PDExtension pd_extension(const Ring& S, const Ring& R, const RingHom& proj) {
  if (!proj.source().same(S) || !proj.target().same(R))
    fail(Err::RingMismatch, "projection does not match S -> R");
  PDExtension E;
  E.S = S;
  E.R = R;
  E.proj = proj;
  E.section.assign(R.size(), S.size());
  for (uint64_t i = 0; i < S.size(); ++i) {
    Relem x = S.element_at(i);
    Relem y = proj.apply(x);
    uint64_t yi = R.index_of(y);
    if (E.section[yi] == S.size()) E.section[yi] = i;
    if (R.is_zero(y)) E.kernel.push_back(x);
  }
  for (uint64_t i = 0; i < R.size(); ++i)
    if (E.section[i] == S.size()) fail(Err::BadDescriptor, "projection is not surjective");
  // square-zero with trivial divided powers
  for (const auto& x : E.kernel)
    for (const auto& y : E.kernel)
      if (!S.is_zero(S.mul(x, y)))
        fail(Err::BadDescriptor, "kernel is not square-zero");
  return E;
}

Relem pd_lift(const PDExtension& E, const Relem& r) {
  return E.S.element_at(E.section[E.R.index_of(r)]);
}

Wv pd_lift_w(const PDExtension& E, const Wv& x) {
  Wv r;
  r.a.reserve(x.a.size());
  for (const auto& c : x.a) r.a.push_back(pd_lift(E, c));
  return r;
}

bool pd_in_kernel(const PDExtension& E, const Relem& x) {
  return E.R.is_zero(E.proj.apply(x));
}

RelSplit relative_augmentation_split(const PDExtension& E, const WittRing& WS, const Wv& x) {
  if (!WS.base().same(E.S)) fail(Err::RingMismatch, "Witt ring not over S");
  if (!pd_in_kernel(E, x.a[0]))
    fail(Err::NotInRelativeIdeal, "element does not map to 0 in R");
  RelSplit s;
  s.apart = x.a[0];
  s.aug = WS.sub(x, WS.teichmuller(x.a[0]));
  if (!E.S.is_zero(s.aug.a[0])) fail(Err::Internal, "relative split failed");
  return s;
}

Wv relative_divided_frobenius(const PDExtension& E, const WittRing& WS, const Wv& x, int n,
                              bool pad) {
  RelSplit s = relative_augmentation_split(E, WS, x);
  return WS.div_frob(s.aug, n, pad);
}

} // namespace wd
