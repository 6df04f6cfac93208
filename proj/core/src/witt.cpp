#include "wittdisp/witt.hpp"

#include <sstream>

namespace wd {

WittRing::WittRing(const Ring& base, int len) : base_(base), len_(len) {
  if (len < 1) fail(Err::ZeroPrecision, "Witt length must be >= 1");
  polys_ = witt_polys(base.p(), len);
}

void WittRing::check(const Wv& x) const {
  if ((int)x.a.size() != len_) fail(Err::RingMismatch, "Witt vector length mismatch");
}

Wv WittRing::zero() const { return Wv{std::vector<Relem>(len_, base_.zero())}; }

Wv WittRing::one() const {
  Wv r = zero();
  r.a[0] = base_.one();
  return r;
}

Wv WittRing::teichmuller(const Relem& r) const {
  Wv x = zero();
  x.a[0] = r;
  return x;
}

Wv WittRing::from_int(int64_t v) const {
  if (v < 0) return neg(from_int(-v));
  Wv acc = zero(), b = one();
  // binary expansion with Witt addition keeps everything exact
  while (v) {
    if (v & 1) acc = add(acc, b);
    v >>= 1;
    if (v) b = add(b, b);
  }
  return acc;
}

bool WittRing::is_zero(const Wv& x) const {
  for (const auto& c : x.a)
    if (!base_.is_zero(c)) return false;
  return true;
}

Wv WittRing::add(const Wv& x, const Wv& y) const {
  check(x);
  check(y);
  if (len_ == 1) return Wv{{base_.add(x.a[0], y.a[0])}};
  std::vector<Relem> args(2 * len_);
  for (int j = 0; j < len_; ++j) {
    args[2 * j] = x.a[j];
    args[2 * j + 1] = y.a[j];
  }
  Wv r;
  r.a.reserve(len_);
  for (int i = 0; i < len_; ++i) r.a.push_back(ipoly_eval(polys_->S[i], base_, args));
  return r;
}

Wv WittRing::neg(const Wv& x) const {
  check(x);
  Wv r;
  r.a.reserve(len_);
  for (const auto& c : x.a) r.a.push_back(base_.neg(c));  // p odd
  return r;
}

Wv WittRing::sub(const Wv& x, const Wv& y) const { return add(x, neg(y)); }

Wv WittRing::mul(const Wv& x, const Wv& y) const {
  check(x);
  check(y);
  if (len_ == 1) return Wv{{base_.mul(x.a[0], y.a[0])}};
  std::vector<Relem> args(2 * len_);
  for (int j = 0; j < len_; ++j) {
    args[2 * j] = x.a[j];
    args[2 * j + 1] = y.a[j];
  }
  Wv r;
  r.a.reserve(len_);
  for (int i = 0; i < len_; ++i) r.a.push_back(ipoly_eval(polys_->P[i], base_, args));
  return r;
}

Wv WittRing::pow(const Wv& x, uint64_t e) const {
  Wv r = one(), b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

bool WittRing::is_unit(const Wv& x) const {
  check(x);
  return base_.is_unit(x.a[0]);
}

Wv WittRing::inv(const Wv& x) const {
  if (!is_unit(x)) fail(Err::NonUnit, "Witt vector is not a unit");
  Wv y = teichmuller(base_.inv(x.a[0]));
  Wv two = from_int(2);
  for (int it = 0; it < 2 * len_ + 8; ++it) {
    Wv xy = mul(x, y);
    if (xy == one()) return y;
    y = mul(y, sub(two, xy));
  }
  fail(Err::Internal, "Witt inversion did not converge");
}

std::vector<Relem> WittRing::ghost(const Wv& x) const {
  check(x);
  std::vector<Relem> w(len_);
  Relem pk = base_.one();
  Relem p_elem = base_.from_int(base_.p());
  for (int i = 0; i < len_; ++i) {
    Relem acc = base_.zero();
    Relem pj = base_.one();
    for (int j = 0; j <= i; ++j) {
      uint64_t ex = 1;
      for (int k = 0; k < i - j; ++k) ex *= (uint64_t)base_.p();
      acc = base_.add(acc, base_.mul(pj, base_.pow(x.a[j], ex)));
      pj = base_.mul(pj, p_elem);
    }
    w[i] = acc;
  }
  (void)pk;
  return w;
}

Wv WittRing::verschiebung(const Wv& x) const {
  check(x);
  Wv r;
  r.a.reserve(len_ + 1);
  r.a.push_back(base_.zero());
  r.a.insert(r.a.end(), x.a.begin(), x.a.end());
  return r;
}

Wv WittRing::truncate(const Wv& x, int n) const {
  check(x);
  if (n < 1 || n > len_) fail(Err::BadTruncation, "bad truncation length");
  return Wv{std::vector<Relem>(x.a.begin(), x.a.begin() + n)};
}

Wv WittRing::frobenius(const Wv& x, int n) const {
  check(x);
  if (len_ < n + 1) fail(Err::LengthTooShort, "Frobenius needs m >= n+1");
  Wv r;
  r.a.reserve(n);
  if (base_.is_fp_algebra()) {
    for (int i = 0; i < n; ++i) r.a.push_back(base_.pow(x.a[i], (uint64_t)base_.p()));
    return r;
  }
  std::vector<Relem> args(2 * len_, base_.zero());
  for (int j = 0; j < len_; ++j) args[2 * j] = x.a[j];
  for (int i = 0; i < n; ++i) r.a.push_back(ipoly_eval(polys_->F[i], base_, args));
  return r;
}

Wv WittRing::frobenius_endo(const Wv& x) const {
  check(x);
  if (!base_.is_fp_algebra()) fail(Err::LengthTooShort, "length-preserving Frobenius needs an F_p-algebra base");
  Wv r;
  r.a.reserve(len_);
  for (int i = 0; i < len_; ++i) r.a.push_back(base_.pow(x.a[i], (uint64_t)base_.p()));
  return r;
}

Wv WittRing::inv_frobenius_endo(const Wv& x) const {
  check(x);
  Wv r;
  r.a.reserve(len_);
  for (int i = 0; i < len_; ++i) r.a.push_back(base_.pth_root(x.a[i]));
  return r;
}

Wv WittRing::div_frob(const Wv& x, int n, bool pad) const {
  check(x);
  if (!base_.is_zero(x.a[0]))
    fail(Err::NotInAugmentationIdeal, "divided Frobenius needs a_0 = 0");
  if (!pad && len_ - 1 < n) fail(Err::LengthTooShort, "divided Frobenius needs m >= n+1");
  Wv r;
  r.a.reserve(n);
  for (int i = 0; i < n; ++i)
    r.a.push_back(i + 1 < len_ ? x.a[i + 1] : base_.zero());
  return r;
}

int WittRing::valuation(const Wv& x) const {
  check(x);
  for (int i = 0; i < len_; ++i)
    if (!base_.is_zero(x.a[i])) return i;
  return len_;
}

Wv WittRing::p_divide(const Wv& x) const {
  check(x);
  if (!base_.is_field()) fail(Err::Internal, "p_divide needs a perfect field base");
  if (!base_.is_zero(x.a[0])) fail(Err::ValuationMismatch, "p_divide needs valuation >= 1");
  Wv r;
  r.a.reserve(len_ - 1);
  for (int i = 1; i < len_; ++i) r.a.push_back(base_.pth_root(x.a[i]));
  return r;
}

uint64_t WittRing::size() const {
  uint64_t s = 1;
  for (int i = 0; i < len_; ++i) s *= base_.size();
  return s;
}

uint64_t WittRing::index_of(const Wv& x) const {
  uint64_t idx = 0;
  for (int i = len_ - 1; i >= 0; --i) idx = idx * base_.size() + base_.index_of(x.a[i]);
  return idx;
}

Wv WittRing::element_at(uint64_t idx) const {
  Wv r;
  r.a.reserve(len_);
  for (int i = 0; i < len_; ++i) {
    r.a.push_back(base_.element_at(idx % base_.size()));
    idx /= base_.size();
  }
  return r;
}

Wv WittRing::random(std::mt19937_64& rng) const {
  Wv r;
  r.a.reserve(len_);
  for (int i = 0; i < len_; ++i) r.a.push_back(base_.random(rng));
  return r;
}

std::string WittRing::show(const Wv& x) const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < len_; ++i) {
    if (i) os << ",";
    os << "[";
    for (size_t j = 0; j < x.a[i].c.size(); ++j) os << (j ? "," : "") << x.a[i].c[j];
    os << "]";
  }
  os << ")";
  return os.str();
}

Wv aug_tensor_div_frob(const AugTensor& t) {
  Wv acc = t.Wn.zero();
  WittRing Wy = t.Wm.with_len(t.Wm.len() - 1);
  for (const auto& [s, y] : t.terms) {
    Wv ytr = Wy.truncate(y, t.Wn.len());
    acc = t.Wn.add(acc, t.Wn.mul(s, ytr));
  }
  return acc;
}

} // namespace wd
