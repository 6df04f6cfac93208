#ifndef WITTDISP_WITT_HPP
#define WITTDISP_WITT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "wittdisp/ring.hpp"
#include "wittdisp/wittpolys.hpp"

namespace wd {

// Truncated p-typical Witt vector: components in the base ring, low index first.
struct Wv {
  std::vector<Relem> a;
  bool operator==(const Wv&) const = default;
  auto operator<=>(const Wv&) const = default;
};

// W_n(R) for a finite base ring R. Arithmetic evaluates the cached integral
// structure polynomials inside R, so p-torsion bases are handled exactly.
class WittRing {
public:
  WittRing() = default;
  WittRing(const Ring& base, int len);

  bool ok() const { return base_.ok(); }
  const Ring& base() const { return base_; }
  int len() const { return len_; }
  bool same(const WittRing& o) const { return len_ == o.len_ && base_.same(o.base_); }
  WittRing with_len(int n) const { return WittRing(base_, n); }

  Wv zero() const;
  Wv one() const;
  Wv from_int(int64_t v) const;
  Wv teichmuller(const Relem& r) const;
  Wv scalar_p() const { return from_int((int64_t)base_.p()); }

  bool is_zero(const Wv& x) const;
  Wv add(const Wv& x, const Wv& y) const;
  Wv sub(const Wv& x, const Wv& y) const;
  Wv neg(const Wv& x) const;
  Wv mul(const Wv& x, const Wv& y) const;
  Wv pow(const Wv& x, uint64_t e) const;
  bool is_unit(const Wv& x) const;
  Wv inv(const Wv& x) const;

  std::vector<Relem> ghost(const Wv& x) const;

  // semilinear operators
  Wv verschiebung(const Wv& x) const;            // length len+1
  Wv truncate(const Wv& x, int n) const;         // length n <= len
  Wv frobenius(const Wv& x, int n) const;        // W_len -> W_n, len >= n+1
  Wv frobenius_endo(const Wv& x) const;          // F_p-algebra base: length-preserving
  Wv inv_frobenius_endo(const Wv& x) const;      // perfect-field base
  // sigma^div(1 (x) x) for x in I_len; pad=true allows n = len (Dieudonne model,
  // top coordinate taken as 0)
  Wv div_frob(const Wv& x, int n, bool pad = false) const;

  // perfect-field base only
  int valuation(const Wv& x) const;              // least i with x_i != 0, len if x = 0
  Wv p_divide(const Wv& x) const;                // solve p*y = x, length len-1

  uint64_t size() const;
  uint64_t index_of(const Wv& x) const;
  Wv element_at(uint64_t idx) const;
  Wv random(std::mt19937_64& rng) const;
  std::string show(const Wv& x) const;

  const WittPolys& polys() const { return *polys_; }

private:
  void check(const Wv& x) const;
  Ring base_;
  int len_ = 0;
  std::shared_ptr<const WittPolys> polys_;
};

// Element of W_n(R) (x)_{sigma, W_m(R)} I_{m,R}, kept as a formal list of
// (scalar, generator) terms with generator V(y); no normal form is chosen.
struct AugTensor {
  WittRing Wn;
  WittRing Wm;
  // terms (s, y) standing for s (x) V(y), y of length m-1
  std::vector<std::pair<Wv, Wv>> terms;
};

// sigma^div extended linearly: sum s * (y truncated to n)
Wv aug_tensor_div_frob(const AugTensor& t);

} // namespace wd

#endif
