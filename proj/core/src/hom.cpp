#include "wittdisp/hom.hpp"

#include <algorithm>

namespace wd {

RingHom RingHom::identity(const Ring& r) {
  RingHom h;
  h.kind_ = HomKind::Identity;
  h.src_ = h.tgt_ = r;
  return h;
}

RingHom RingHom::residue(const Ring& r) {
  RingHom h;
  h.kind_ = HomKind::Residue;
  h.src_ = r;
  h.tgt_ = r.residue_field();
  return h;
}

RingHom RingHom::reduce_prec(const Ring& src, int b) {
  if (src.kind() != RingKind::IntegersMod && src.kind() != RingKind::GaloisRing &&
      !(src.kind() == RingKind::PrimeField || src.kind() == RingKind::GaloisField))
    fail(Err::BadDescriptor, "reduce_prec needs a basic ring");
  if (b < 1 || b > src.a()) fail(Err::BadDescriptor, "bad target precision");
  RingHom h;
  h.kind_ = HomKind::ReducePrec;
  h.src_ = src;
  h.k_ = b;
  h.tgt_ = Ring::galois_ring(src.p(), b, src.f(), src.modulus());
  return h;
}

RingHom RingHom::kill_vars(const Ring& src) {
  RingHom h;
  h.kind_ = HomKind::KillVars;
  h.src_ = src;
  if (src.kind() == RingKind::TruncPoly) {
    h.tgt_ = src.base();
  } else if (src.kind() == RingKind::Jet) {
    Ring b = src.base();
    int prec = std::min(b.a(), src.jet_order());
    h.tgt_ = Ring::galois_ring(b.p(), prec, b.f());
  } else {
    fail(Err::BadDescriptor, "kill_vars needs trunc_poly or jet");
  }
  return h;
}

RingHom RingHom::include_const(const Ring& tgt) {
  if (tgt.kind() != RingKind::TruncPoly && tgt.kind() != RingKind::Jet)
    fail(Err::BadDescriptor, "include_const needs trunc_poly or jet target");
  RingHom h;
  h.kind_ = HomKind::IncludeConst;
  h.src_ = tgt.base();
  h.tgt_ = tgt;
  return h;
}

RingHom RingHom::field_embed(const Ring& src, const Ring& tgt) {
  if (!src.is_field() || !tgt.is_field() || src.p() != tgt.p() || tgt.f() % src.f() != 0)
    fail(Err::BadDescriptor, "field_embed needs F_{p^f} -> F_{p^{fk}}");
  RingHom h;
  h.kind_ = HomKind::FieldEmbed;
  h.src_ = src;
  h.tgt_ = tgt;
  // find the first root of the source modulus in the target
  const auto& m = src.modulus();
  for (uint64_t i = 0; i < tgt.size(); ++i) {
    Relem x = tgt.element_at(i);
    Relem acc = tgt.pow(x, (uint64_t)src.f());
    for (int j = 0; j < src.f(); ++j)
      acc = tgt.add(acc, tgt.mul(tgt.from_int(m[j]), tgt.pow(x, (uint64_t)j)));
    if (tgt.is_zero(acc)) {
      h.gen_image_ = x;
      return h;
    }
  }
  fail(Err::Internal, "no root of modulus in extension field");
}

RingHom RingHom::frobenius_pow(const Ring& r, int k) {
  if (!r.is_fp_algebra()) fail(Err::BadDescriptor, "frobenius_pow needs an F_p-algebra");
  RingHom h;
  h.kind_ = HomKind::FrobeniusPow;
  h.src_ = h.tgt_ = r;
  h.k_ = k;
  return h;
}

RingHom RingHom::table(const Ring& src, const Ring& tgt, std::vector<Relem> images) {
  if (images.size() != src.size()) fail(Err::BadDescriptor, "table size mismatch");
  RingHom h;
  h.kind_ = HomKind::Table;
  h.src_ = src;
  h.tgt_ = tgt;
  h.table_ = std::move(images);
  return h;
}

RingHom RingHom::compose(const RingHom& g, const RingHom& f) {
  if (!f.target().same(g.source())) fail(Err::RingMismatch, "compose: target/source mismatch");
  RingHom h;
  h.kind_ = HomKind::Compose;
  h.src_ = f.source();
  h.tgt_ = g.target();
  h.parts_ = {f, g};
  return h;
}

Relem RingHom::apply(const Relem& x) const {
  switch (kind_) {
    case HomKind::Identity: return x;
    case HomKind::Residue: return src_.residue(x);
    case HomKind::ReducePrec: {
      std::vector<int64_t> raw(x.c.begin(), x.c.end());
      return tgt_.canon(raw);
    }
    case HomKind::KillVars: {
      int bd = src_.base().dim();
      std::vector<int64_t> raw(x.c.begin(), x.c.begin() + bd);
      return tgt_.canon(raw);
    }
    case HomKind::IncludeConst: {
      Relem r = tgt_.zero();
      std::vector<int64_t> raw(x.c.begin(), x.c.end());
      // reduce into the constant block's precision
      for (int i = 0; i < (int)raw.size(); ++i)
        r.c[i] = (int32_t)(raw[i] % tgt_.data()->radix[i]);
      return r;
    }
    case HomKind::FieldEmbed: {
      Relem acc = tgt_.zero();
      for (int i = src_.f() - 1; i >= 0; --i) {
        acc = tgt_.mul(acc, gen_image_);
        acc = tgt_.add(acc, tgt_.from_int(x.c[i]));
      }
      return acc;
    }
    case HomKind::FrobeniusPow: {
      uint64_t e = 1;
      for (int i = 0; i < k_; ++i) e *= (uint64_t)src_.p();
      return src_.pow(x, e);
    }
    case HomKind::Table: return table_[src_.index_of(x)];
    case HomKind::Compose: return parts_[1].apply(parts_[0].apply(x));
  }
  fail(Err::Internal, "unreachable");
}

bool RingHom::validate(long samples, uint64_t seed) const {
  if (apply(src_.zero()) != tgt_.zero()) return false;
  if (apply(src_.one()) != tgt_.one()) return false;
  std::mt19937_64 rng(seed);
  for (long i = 0; i < samples; ++i) {
    Relem x = src_.random(rng), y = src_.random(rng);
    if (apply(src_.add(x, y)) != tgt_.add(apply(x), apply(y))) return false;
    if (apply(src_.mul(x, y)) != tgt_.mul(apply(x), apply(y))) return false;
  }
  return true;
}

Relem apply_hom(const RingHom& h, const Relem& x) {
  if ((int)x.c.size() != h.source().dim()) fail(Err::RingMismatch, "element not in hom source");
  return h.apply(x);
}

} // namespace wd
