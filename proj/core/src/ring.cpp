#include "wittdisp/ring.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>

namespace wd {

const char* err_name(Err e) {
  switch (e) {
    case Err::CompositeP: return "CompositeP";
    case Err::ReducibleModulus: return "ReducibleModulus";
    case Err::ZeroPrecision: return "ZeroPrecision";
    case Err::RingMismatch: return "RingMismatch";
    case Err::NonIntegralDivision: return "NonIntegralDivision";
    case Err::LengthTooShort: return "LengthTooShort";
    case Err::NotInAugmentationIdeal: return "NotInAugmentationIdeal";
    case Err::NoSection: return "NoSection";
    case Err::NotInRelativeIdeal: return "NotInRelativeIdeal";
    case Err::SingularBasis: return "SingularBasis";
    case Err::BadRank: return "BadRank";
    case Err::FiltrationChanged: return "FiltrationChanged";
    case Err::NonUnit: return "NonUnit";
    case Err::SingularPsi: return "SingularPsi";
    case Err::BadTruncation: return "BadTruncation";
    case Err::OddRank: return "OddRank";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::InvalidFiltrationLift: return "InvalidFiltrationLift";
    case Err::NonConvergent: return "NonConvergent";
    case Err::ValuationMismatch: return "ValuationMismatch";
    case Err::BadDescriptor: return "BadDescriptor";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

const char* ring_kind_name(RingKind k) {
  switch (k) {
    case RingKind::PrimeField: return "prime_field";
    case RingKind::GaloisField: return "galois_field";
    case RingKind::IntegersMod: return "integers_mod";
    case RingKind::GaloisRing: return "galois_ring";
    case RingKind::TruncPoly: return "trunc_poly";
    case RingKind::Product: return "finite_product";
    case RingKind::Jet: return "jet";
  }
  return "?";
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

bool is_basic(RingKind k) {
  return k == RingKind::PrimeField || k == RingKind::GaloisField ||
         k == RingKind::IntegersMod || k == RingKind::GaloisRing;
}

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int64_t mod_pos(int64_t v, int64_t m) {
  int64_t r = v % m;
  return r < 0 ? r + m : r;
}

// ---- F_p[x] helpers for modulus search/validation -------------------------

using Fpoly = std::vector<int64_t>; // coeffs, low to high; normalized (no trailing zeros)

void ptrim(Fpoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Fpoly pmod(Fpoly a, const Fpoly& b, long p) {
  // b monic of degree db
  int db = (int)b.size() - 1;
  ptrim(a);
  while ((int)a.size() - 1 >= db) {
    int64_t lead = a.back();
    int shift = (int)a.size() - 1 - db;
    for (int i = 0; i <= db; ++i)
      a[i + shift] = mod_pos(a[i + shift] - lead * b[i], p);
    ptrim(a);
  }
  return a;
}

bool divides(const Fpoly& d, const Fpoly& a, long p) { return pmod(a, d, p).empty(); }

bool irreducible_mod_p(const std::vector<int64_t>& nonlead, long p) {
  int f = (int)nonlead.size();
  if (f == 0) return false;
  Fpoly m(f + 1);
  for (int i = 0; i < f; ++i) m[i] = mod_pos(nonlead[i], p);
  m[f] = 1;
  if (f == 1) return true;
  // trial division by all monic polynomials of degree 1..f/2
  for (int dg = 1; 2 * dg <= f; ++dg) {
    int64_t total = ipow(p, dg);
    for (int64_t v = 0; v < total; ++v) {
      Fpoly d(dg + 1);
      int64_t t = v;
      for (int i = 0; i < dg; ++i) { d[i] = t % p; t /= p; }
      d[dg] = 1;
      if (divides(d, m, p)) return false;
    }
  }
  return true;
}

std::vector<int64_t> smallest_irreducible(long p, int f) {
  int64_t total = ipow(p, f);
  for (int64_t v = 0; v < total; ++v) {
    std::vector<int64_t> c(f);
    int64_t t = v;
    for (int i = 0; i < f; ++i) { c[i] = t % p; t /= p; }
    if (irreducible_mod_p(c, p)) return c;
  }
  fail(Err::Internal, "no irreducible modulus found");
}

void check_p(long p) {
  if (!is_prime(p) || p == 2) fail(Err::CompositeP, "p must be an odd prime, got " + std::to_string(p));
}

} // namespace

Ring RingData::wrap(RingData&& d) {
  auto sp = std::make_shared<RingData>(std::move(d));
  return Ring(std::shared_ptr<const RingData>(sp));
}

// ---- constructors ----------------------------------------------------------

static RingData make_basic(RingKind kind, long p, int a, int f, std::vector<int64_t> modulus) {
  check_p(p);
  if (a < 1 || f < 1) fail(Err::ZeroPrecision, "need a >= 1 and f >= 1");
  RingData d;
  d.kind = kind;
  d.p = p;
  d.a = a;
  d.f = f;
  d.pa = ipow(p, a);
  if (modulus.empty()) modulus = smallest_irreducible(p, f);
  if ((int)modulus.size() != f) fail(Err::BadDescriptor, "modulus degree mismatch");
  if (!irreducible_mod_p(modulus, p)) fail(Err::ReducibleModulus, "modulus is reducible mod p");
  for (auto& c : modulus) c = mod_pos(c, d.pa);
  d.modulus = std::move(modulus);
  d.dim = f;
  d.count = 1;
  for (int i = 0; i < f; ++i) d.count *= (uint64_t)d.pa;
  d.radix.assign(f, d.pa);
  d.p_nilp = a;
  d.nilp = a;
  return d;
}

Ring Ring::prime_field(long p) { return RingData::wrap(make_basic(RingKind::PrimeField, p, 1, 1, {0})); }

Ring Ring::galois_field(long p, int f) {
  if (f == 1) return prime_field(p);
  return RingData::wrap(make_basic(RingKind::GaloisField, p, 1, f, {}));
}

Ring Ring::galois_field(long p, int f, const std::vector<int64_t>& modulus) {
  return RingData::wrap(make_basic(f == 1 ? RingKind::PrimeField : RingKind::GaloisField, p, 1, f, modulus));
}

Ring Ring::integers_mod(long p, int a) {
  if (a == 1) return prime_field(p);
  return RingData::wrap(make_basic(RingKind::IntegersMod, p, a, 1, {0}));
}

Ring Ring::galois_ring(long p, int a, int f) {
  if (f == 1) return integers_mod(p, a);
  if (a == 1) return galois_field(p, f);
  return RingData::wrap(make_basic(RingKind::GaloisRing, p, a, f, {}));
}

Ring Ring::galois_ring(long p, int a, int f, const std::vector<int64_t>& modulus) {
  if (f == 1) return integers_mod(p, a);
  if (a == 1) return galois_field(p, f, modulus);
  return RingData::wrap(make_basic(RingKind::GaloisRing, p, a, f, modulus));
}

Ring Ring::trunc_poly(const Ring& base, int ell) {
  if (!base.ok()) fail(Err::BadDescriptor, "empty base ring");
  if (ell < 1) fail(Err::ZeroPrecision, "need ell >= 1");
  RingData d;
  d.kind = RingKind::TruncPoly;
  d.p = base.p();
  d.base = base;
  d.ell = ell;
  d.dim = base.dim() * ell;
  d.count = 1;
  for (int i = 0; i < ell; ++i) d.count *= base.size();
  for (int i = 0; i < ell; ++i)
    d.radix.insert(d.radix.end(), base.data()->radix.begin(), base.data()->radix.end());
  d.p_nilp = base.p_nilpotence();
  d.nilp = base.nilpotence() + ell - 1;
  return RingData::wrap(std::move(d));
}

Ring Ring::product(const std::vector<Ring>& factors) {
  if (factors.empty()) fail(Err::BadDescriptor, "empty product");
  RingData d;
  d.kind = RingKind::Product;
  d.p = factors.front().p();
  d.factors = factors;
  d.count = 1;
  d.p_nilp = 1;
  d.nilp = 1;
  for (const auto& r : factors) {
    if (r.p() != d.p) fail(Err::RingMismatch, "product factors must share p");
    d.dim += r.dim();
    d.count *= r.size();
    d.p_nilp = std::max(d.p_nilp, r.p_nilpotence());
    d.nilp = std::max(d.nilp, r.nilpotence());
    d.radix.insert(d.radix.end(), r.data()->radix.begin(), r.data()->radix.end());
  }
  return RingData::wrap(std::move(d));
}

Ring Ring::jet(const Ring& base, int vars, int order) {
  if (!base.ok() || !is_basic(base.kind())) fail(Err::BadDescriptor, "jet base must be a basic local ring");
  if (vars < 1 || order < 1) fail(Err::ZeroPrecision, "need vars >= 1 and order >= 1");
  RingData d;
  d.kind = RingKind::Jet;
  d.p = base.p();
  d.base = base;
  d.vars = vars;
  d.order = order;

  // monomials of total degree < order, graded lexicographic
  std::vector<std::vector<int>> monos;
  std::vector<int> cur(vars, 0);
  for (int deg = 0; deg < order; ++deg) {
    // all exponent vectors of total degree == deg, lex within degree
    std::vector<int> e(vars, 0);
    e[vars - 1] = deg;
    while (true) {
      std::vector<int> rev(e.rbegin(), e.rend());
      monos.push_back(rev);
      // next composition of deg into vars parts
      int i = vars - 1;
      while (i > 0 && e[i] == 0) --i;
      if (i == 0) break;
      int v = e[i];
      e[i] = 0;
      e[i - 1] += 1;
      e[vars - 1] = v - 1;
    }
  }
  std::sort(monos.begin(), monos.end(), [](const auto& x, const auto& y) {
    int dx = std::accumulate(x.begin(), x.end(), 0), dy = std::accumulate(y.begin(), y.end(), 0);
    if (dx != dy) return dx < dy;
    return x < y;
  });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  d.monomials = monos;
  int M = (int)monos.size();
  int ab = base.a();
  for (const auto& mo : monos) {
    int deg = std::accumulate(mo.begin(), mo.end(), 0);
    d.coeff_prec.push_back(std::min(ab, order - deg));
  }
  d.mono_prod.assign((size_t)M * M, -1);
  for (int i = 0; i < M; ++i)
    for (int j = 0; j < M; ++j) {
      std::vector<int> s(vars);
      int deg = 0;
      for (int v = 0; v < vars; ++v) { s[v] = monos[i][v] + monos[j][v]; deg += s[v]; }
      if (deg >= order) continue;
      auto it = std::lower_bound(monos.begin(), monos.end(), s, [](const auto& x, const auto& y) {
        int dx = std::accumulate(x.begin(), x.end(), 0), dy = std::accumulate(y.begin(), y.end(), 0);
        if (dx != dy) return dx < dy;
        return x < y;
      });
      d.mono_prod[(size_t)i * M + j] = (int32_t)(it - monos.begin());
    }

  d.dim = base.dim() * M;
  d.count = 1;
  for (int k = 0; k < M; ++k) {
    int64_t rad = ipow(d.p, d.coeff_prec[k]);
    for (int i = 0; i < base.dim(); ++i) {
      d.radix.push_back(rad);
      d.count *= (uint64_t)rad;
    }
  }
  d.p_nilp = std::min(base.p_nilpotence(), order);
  d.nilp = order;
  return RingData::wrap(std::move(d));
}

// ---- accessors --------------------------------------------------------------

RingKind Ring::kind() const { return d_->kind; }
long Ring::p() const { return d_->p; }
int Ring::a() const { return d_->a; }
int Ring::f() const { return d_->f; }
int Ring::ell() const { return d_->ell; }
int Ring::jet_vars() const { return d_->vars; }
int Ring::jet_order() const { return d_->order; }
const std::vector<int64_t>& Ring::modulus() const { return d_->modulus; }
Ring Ring::base() const { return d_->base; }
const std::vector<Ring>& Ring::factors() const { return d_->factors; }
int Ring::dim() const { return d_->dim; }
uint64_t Ring::size() const { return d_->count; }
bool Ring::is_field() const { return is_basic(d_->kind) && d_->a == 1; }
bool Ring::is_fp_algebra() const { return d_->p_nilp == 1; }
int Ring::p_nilpotence() const { return d_->p_nilp; }
int Ring::nilpotence() const { return d_->nilp; }

bool Ring::is_local() const {
  switch (d_->kind) {
    case RingKind::Product: return d_->factors.size() == 1 && d_->factors[0].is_local();
    case RingKind::TruncPoly: return d_->base.is_local();
    default: return true;
  }
}

bool Ring::same(const Ring& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  const RingData &x = *d_, &y = *o.d_;
  if (x.kind != y.kind || x.p != y.p || x.a != y.a || x.f != y.f || x.modulus != y.modulus ||
      x.ell != y.ell || x.vars != y.vars || x.order != y.order)
    return false;
  if (x.base.ok() != y.base.ok() || (x.base.ok() && !x.base.same(y.base))) return false;
  if (x.factors.size() != y.factors.size()) return false;
  for (size_t i = 0; i < x.factors.size(); ++i)
    if (!x.factors[i].same(y.factors[i])) return false;
  return true;
}

std::string Ring::describe() const {
  std::ostringstream os;
  switch (d_->kind) {
    case RingKind::PrimeField: os << "F_" << d_->p; break;
    case RingKind::GaloisField: os << "F_" << ipow(d_->p, d_->f); break;
    case RingKind::IntegersMod: os << "Z/" << d_->pa; break;
    case RingKind::GaloisRing: os << "GR(" << d_->pa << "," << d_->f << ")"; break;
    case RingKind::TruncPoly: os << d_->base.describe() << "[t]/t^" << d_->ell; break;
    case RingKind::Product: {
      os << "(";
      for (size_t i = 0; i < d_->factors.size(); ++i)
        os << (i ? " x " : "") << d_->factors[i].describe();
      os << ")";
      break;
    }
    case RingKind::Jet:
      os << d_->base.describe() << "[" << d_->vars << " vars]/m^" << d_->order;
      break;
  }
  return os.str();
}

// ---- element ops ------------------------------------------------------------

Relem Ring::zero() const { return Relem{std::vector<int32_t>(d_->dim, 0)}; }

Relem Ring::one() const { return from_int(1); }

Relem Ring::from_int(int64_t v) const {
  switch (d_->kind) {
    case RingKind::TruncPoly:
    case RingKind::Jet: {
      Relem r = zero();
      Relem b = d_->base.from_int(d_->kind == RingKind::Jet
                                      ? mod_pos(v, ipow(d_->p, d_->coeff_prec[0]))
                                      : v);
      std::copy(b.c.begin(), b.c.end(), r.c.begin());
      return r;
    }
    case RingKind::Product: {
      Relem r;
      for (const auto& fac : d_->factors) {
        Relem x = fac.from_int(v);
        r.c.insert(r.c.end(), x.c.begin(), x.c.end());
      }
      return r;
    }
    default: {
      Relem r = zero();
      r.c[0] = (int32_t)mod_pos(v, d_->pa);
      return r;
    }
  }
}

Relem Ring::canon(const std::vector<int64_t>& raw) const {
  if ((int)raw.size() != d_->dim) fail(Err::RingMismatch, "coordinate length mismatch");
  Relem r;
  r.c.resize(d_->dim);
  for (int i = 0; i < d_->dim; ++i) r.c[i] = (int32_t)mod_pos(raw[i], d_->radix[i]);
  return r;
}

bool Ring::is_zero(const Relem& x) const {
  return std::all_of(x.c.begin(), x.c.end(), [](int32_t v) { return v == 0; });
}

Relem Ring::add(const Relem& x, const Relem& y) const {
  Relem r;
  r.c.resize(d_->dim);
  for (int i = 0; i < d_->dim; ++i) {
    int64_t s = (int64_t)x.c[i] + y.c[i];
    r.c[i] = (int32_t)(s >= d_->radix[i] ? s - d_->radix[i] : s);
  }
  // basic / trunc-poly / product coordinates are independent; jet radices already encode precision
  return r;
}

Relem Ring::neg(const Relem& x) const {
  Relem r;
  r.c.resize(d_->dim);
  for (int i = 0; i < d_->dim; ++i) r.c[i] = (int32_t)(x.c[i] == 0 ? 0 : d_->radix[i] - x.c[i]);
  return r;
}

Relem Ring::sub(const Relem& x, const Relem& y) const { return add(x, neg(y)); }

namespace {

// product in a basic ring: polynomial convolution reduced by the monic modulus, mod p^a
void basic_mul(const RingData& d, const int32_t* x, const int32_t* y, int32_t* out) {
  int f = d.f;
  if (f == 1) {
    out[0] = (int32_t)(((int64_t)x[0] * y[0]) % d.pa);
    return;
  }
  int64_t buf[16] = {0};
  assert(2 * f - 1 <= 16);
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j) buf[i + j] = (buf[i + j] + (int64_t)x[i] * y[j]) % d.pa;
  for (int i = 2 * f - 2; i >= f; --i) {
    int64_t lead = buf[i];
    if (lead == 0) continue;
    buf[i] = 0;
    for (int j = 0; j < f; ++j)
      buf[i - f + j] = mod_pos(buf[i - f + j] - lead * d.modulus[j], d.pa);
  }
  for (int i = 0; i < f; ++i) out[i] = (int32_t)mod_pos(buf[i], d.pa);
}

} // namespace

Relem Ring::mul(const Relem& x, const Relem& y) const {
  switch (d_->kind) {
    case RingKind::TruncPoly: {
      int bd = d_->base.dim();
      Relem r = zero();
      std::vector<int32_t> tmp(bd);
      for (int i = 0; i < d_->ell; ++i)
        for (int j = 0; j + i < d_->ell; ++j) {
          Relem xa{std::vector<int32_t>(x.c.begin() + i * bd, x.c.begin() + (i + 1) * bd)};
          Relem yb{std::vector<int32_t>(y.c.begin() + j * bd, y.c.begin() + (j + 1) * bd)};
          Relem pr = d_->base.mul(xa, yb);
          int off = (i + j) * bd;
          for (int k = 0; k < bd; ++k) {
            int64_t s = (int64_t)r.c[off + k] + pr.c[k];
            int64_t rad = d_->radix[off + k];
            r.c[off + k] = (int32_t)(s >= rad ? s - rad : s);
          }
        }
      return r;
    }
    case RingKind::Jet: {
      int bd = d_->base.dim();
      int M = (int)d_->monomials.size();
      Relem r = zero();
      std::vector<int32_t> tmp(bd);
      for (int i = 0; i < M; ++i) {
        bool xz = true;
        for (int k = 0; k < bd; ++k)
          if (x.c[i * bd + k]) { xz = false; break; }
        if (xz) continue;
        for (int j = 0; j < M; ++j) {
          int32_t tgt = d_->mono_prod[(size_t)i * M + j];
          if (tgt < 0) continue;
          basic_mul(*d_->base.data(), x.c.data() + i * bd, y.c.data() + j * bd, tmp.data());
          int off = tgt * bd;
          for (int k = 0; k < bd; ++k) {
            int64_t rad = d_->radix[off + k];
            int64_t s = ((int64_t)r.c[off + k] + tmp[k]) % rad;
            r.c[off + k] = (int32_t)s;
          }
        }
      }
      return r;
    }
    case RingKind::Product: {
      Relem r;
      r.c.resize(d_->dim);
      int off = 0;
      for (const auto& fac : d_->factors) {
        int fd = fac.dim();
        Relem xa{std::vector<int32_t>(x.c.begin() + off, x.c.begin() + off + fd)};
        Relem yb{std::vector<int32_t>(y.c.begin() + off, y.c.begin() + off + fd)};
        Relem pr = fac.mul(xa, yb);
        std::copy(pr.c.begin(), pr.c.end(), r.c.begin() + off);
        off += fd;
      }
      return r;
    }
    default: {
      Relem r;
      r.c.resize(d_->dim);
      basic_mul(*d_, x.c.data(), y.c.data(), r.c.data());
      return r;
    }
  }
}

Relem Ring::pow(const Relem& x, uint64_t e) const {
  Relem r = one(), b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

// ---- units ------------------------------------------------------------------

namespace {

int64_t egcd(int64_t a, int64_t b, int64_t& s, int64_t& t) {
  if (b == 0) { s = 1; t = 0; return a; }
  int64_t s1, t1;
  int64_t g = egcd(b, a % b, s1, t1);
  s = t1;
  t = s1 - (a / b) * t1;
  return g;
}

} // namespace

bool Ring::is_unit(const Relem& x) const {
  switch (d_->kind) {
    case RingKind::Product: {
      int off = 0;
      for (const auto& fac : d_->factors) {
        Relem xa{std::vector<int32_t>(x.c.begin() + off, x.c.begin() + off + fac.dim())};
        if (!fac.is_unit(xa)) return false;
        off += fac.dim();
      }
      return true;
    }
    default: {
      Ring k = residue_field();
      return !k.is_zero(residue(x));
    }
  }
}

Relem Ring::inv(const Relem& x) const {
  if (!is_unit(x)) fail(Err::NonUnit, "element is not a unit in " + describe());
  switch (d_->kind) {
    case RingKind::PrimeField: {
      int64_t s, t;
      egcd(x.c[0], d_->p, s, t);
      Relem r = zero();
      r.c[0] = (int32_t)mod_pos(s, d_->p);
      return r;
    }
    case RingKind::GaloisField: {
      // x^(q-2)
      uint64_t q = size();
      return pow(x, q - 2);
    }
    case RingKind::Product: {
      Relem r;
      r.c.resize(d_->dim);
      int off = 0;
      for (const auto& fac : d_->factors) {
        Relem xa{std::vector<int32_t>(x.c.begin() + off, x.c.begin() + off + fac.dim())};
        Relem iv = fac.inv(xa);
        std::copy(iv.c.begin(), iv.c.end(), r.c.begin() + off);
        off += fac.dim();
      }
      return r;
    }
    default: {
      // local: Newton from the residue-field inverse
      Ring k = residue_field();
      Relem y = section(k.inv(residue(x)));
      Relem two = from_int(2);
      for (int it = 0; it < 64; ++it) {
        Relem xy = mul(x, y);
        if (xy == one()) return y;
        y = mul(y, sub(two, xy));
      }
      fail(Err::Internal, "unit inversion did not converge");
    }
  }
}

// ---- enumeration --------------------------------------------------------------

uint64_t Ring::index_of(const Relem& x) const {
  uint64_t idx = 0;
  for (int i = d_->dim - 1; i >= 0; --i) idx = idx * (uint64_t)d_->radix[i] + (uint64_t)x.c[i];
  return idx;
}

Relem Ring::element_at(uint64_t idx) const {
  Relem r;
  r.c.resize(d_->dim);
  for (int i = 0; i < d_->dim; ++i) {
    r.c[i] = (int32_t)(idx % (uint64_t)d_->radix[i]);
    idx /= (uint64_t)d_->radix[i];
  }
  return r;
}

Relem Ring::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<uint64_t> dist(0, size() - 1);
  return element_at(dist(rng));
}

// ---- local structure -----------------------------------------------------------

Ring Ring::residue_field() const {
  switch (d_->kind) {
    case RingKind::PrimeField:
    case RingKind::GaloisField: return *this;
    case RingKind::IntegersMod: return Ring::prime_field(d_->p);
    case RingKind::GaloisRing: {
      std::vector<int64_t> m(d_->modulus.begin(), d_->modulus.end());
      for (auto& c : m) c = mod_pos(c, d_->p);
      return Ring::galois_field(d_->p, d_->f, m);
    }
    case RingKind::TruncPoly:
    case RingKind::Jet: return d_->base.residue_field();
    case RingKind::Product:
      if (d_->factors.size() == 1) return d_->factors[0].residue_field();
      fail(Err::NoSection, "product ring is not local");
  }
  fail(Err::Internal, "unreachable");
}

Relem Ring::residue(const Relem& x) const {
  switch (d_->kind) {
    case RingKind::PrimeField:
    case RingKind::GaloisField: return x;
    case RingKind::IntegersMod:
    case RingKind::GaloisRing: {
      Relem r;
      r.c.resize(d_->f);
      for (int i = 0; i < d_->f; ++i) r.c[i] = (int32_t)(x.c[i] % d_->p);
      return r;
    }
    case RingKind::TruncPoly:
    case RingKind::Jet: {
      int bd = d_->base.dim();
      Relem head{std::vector<int32_t>(x.c.begin(), x.c.begin() + bd)};
      return d_->base.residue(head);
    }
    case RingKind::Product:
      if (d_->factors.size() == 1) return d_->factors[0].residue(x);
      fail(Err::NoSection, "product ring is not local");
  }
  fail(Err::Internal, "unreachable");
}

Relem Ring::section(const Relem& k_elem) const {
  switch (d_->kind) {
    case RingKind::PrimeField:
    case RingKind::GaloisField: return k_elem;
    case RingKind::IntegersMod:
    case RingKind::GaloisRing: {
      // Teichmueller: the unique multiplicative lift, reached by iterating q-th powers
      Relem y = zero();
      for (int i = 0; i < d_->f; ++i) y.c[i] = k_elem.c[i];
      uint64_t q = 1;
      for (int i = 0; i < d_->f; ++i) q *= (uint64_t)d_->p;
      for (int it = 0; it < d_->a + 2; ++it) {
        Relem z = pow(y, q);
        if (z == y) break;
        y = z;
      }
      return y;
    }
    case RingKind::TruncPoly:
    case RingKind::Jet: {
      Relem b = d_->base.section(k_elem);
      Relem r = zero();
      std::copy(b.c.begin(), b.c.end(), r.c.begin());
      return r;
    }
    case RingKind::Product:
      if (d_->factors.size() == 1) return d_->factors[0].section(k_elem);
      fail(Err::NoSection, "product ring is not local");
  }
  fail(Err::Internal, "unreachable");
}

std::vector<Relem> Ring::max_ideal_gens() const {
  switch (d_->kind) {
    case RingKind::PrimeField:
    case RingKind::GaloisField: return {};
    case RingKind::IntegersMod:
    case RingKind::GaloisRing: return {from_int(d_->p)};
    case RingKind::TruncPoly: {
      std::vector<Relem> gens;
      for (const auto& g : d_->base.max_ideal_gens()) {
        Relem r = zero();
        std::copy(g.c.begin(), g.c.end(), r.c.begin());
        gens.push_back(r);
      }
      Relem t = zero();
      if (d_->ell > 1) {
        Relem one_b = d_->base.one();
        std::copy(one_b.c.begin(), one_b.c.end(), t.c.begin() + d_->base.dim());
        gens.push_back(t);
      }
      return gens;
    }
    case RingKind::Jet: {
      std::vector<Relem> gens;
      for (const auto& g : d_->base.max_ideal_gens()) {
        Relem r = zero();
        std::copy(g.c.begin(), g.c.end(), r.c.begin());
        if (!is_zero(r)) gens.push_back(r);
      }
      if (d_->order > 1) {
        int bd = d_->base.dim();
        for (int v = 0; v < d_->vars; ++v) {
          std::vector<int> e(d_->vars, 0);
          e[v] = 1;
          auto it = std::find(d_->monomials.begin(), d_->monomials.end(), e);
          int mi = (int)(it - d_->monomials.begin());
          Relem r = zero();
          Relem one_b = d_->base.one();
          std::copy(one_b.c.begin(), one_b.c.end(), r.c.begin() + mi * bd);
          gens.push_back(r);
        }
      }
      return gens;
    }
    case RingKind::Product:
      if (d_->factors.size() == 1) return d_->factors[0].max_ideal_gens();
      fail(Err::NoSection, "product ring is not local");
  }
  fail(Err::Internal, "unreachable");
}

bool Ring::in_max_ideal(const Relem& x) const {
  Ring k = residue_field();
  return k.is_zero(residue(x));
}

Relem Ring::pth_root(const Relem& x) const {
  if (!is_field()) fail(Err::Internal, "pth_root needs a perfect field");
  if (d_->f == 1) return x;
  uint64_t e = 1;
  for (int i = 0; i < d_->f - 1; ++i) e *= (uint64_t)d_->p;
  return pow(x, e);
}

// ---- axiom check ---------------------------------------------------------------

namespace {

std::string show(const Relem& x) {
  std::string s = "[";
  for (size_t i = 0; i < x.c.size(); ++i) s += (i ? "," : "") + std::to_string(x.c[i]);
  return s + "]";
}

} // namespace

AxiomReport ring_axiom_check(const Ring& r, long samples, uint64_t seed, MulOverride mul_override) {
  if (samples < 1) fail(Err::BadDescriptor, "samples must be >= 1");
  AxiomReport rep;
  std::mt19937_64 rng(seed);
  auto mult = [&](const Relem& x, const Relem& y) {
    return mul_override ? mul_override(r, x, y) : r.mul(x, y);
  };
  for (long i = 0; i < samples && (long)rep.violations.size() < 10; ++i) {
    Relem x = r.random(rng), y = r.random(rng), z = r.random(rng);
    ++rep.samples_run;
    auto witness = [&](const char* law) {
      rep.violations.push_back(std::string(law) + " at x=" + show(x) + " y=" + show(y) +
                               " z=" + show(z));
    };
    if (r.add(x, y) != r.add(y, x)) witness("add-comm");
    if (r.add(r.add(x, y), z) != r.add(x, r.add(y, z))) witness("add-assoc");
    if (mult(x, y) != mult(y, x)) witness("mul-comm");
    if (mult(mult(x, y), z) != mult(x, mult(y, z))) witness("mul-assoc");
    if (mult(x, r.add(y, z)) != r.add(mult(x, y), mult(x, z))) witness("distributivity");
    if (r.add(x, r.zero()) != x) witness("add-identity");
    if (mult(x, r.one()) != x) witness("mul-identity");
    if (!r.is_zero(r.add(x, r.neg(x)))) witness("neg");
  }
  return rep;
}

} // namespace wd
