#ifndef WITTDISP_RING_HPP
#define WITTDISP_RING_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "wittdisp/error.hpp"

namespace wd {

// Element of a finite commutative ring, as a canonical coordinate vector.
// All structure lives in the Ring that produced it.
struct Relem {
  std::vector<int32_t> c;
  bool operator==(const Relem&) const = default;
  auto operator<=>(const Relem&) const = default;
};

enum class RingKind { PrimeField, GaloisField, IntegersMod, GaloisRing, TruncPoly, Product, Jet };

const char* ring_kind_name(RingKind k);

struct RingData;

// Finite commutative base ring: F_p, F_q, Z/p^a, GR(p^a, f) = W_a(F_q) presented as
// (Z/p^a)[x]/(modulus), R0[t]/t^ell, finite products, and local jet rings
// R0[t_1..t_r]/m^ord. Immutable and shareable; p is always an odd prime.
class Ring {
public:
  Ring() = default;

  static Ring prime_field(long p);
  static Ring galois_field(long p, int f);
  static Ring galois_field(long p, int f, const std::vector<int64_t>& modulus);
  static Ring integers_mod(long p, int a);
  static Ring galois_ring(long p, int a, int f);
  static Ring galois_ring(long p, int a, int f, const std::vector<int64_t>& modulus);
  static Ring trunc_poly(const Ring& base, int ell);
  static Ring product(const std::vector<Ring>& factors);
  static Ring jet(const Ring& base, int vars, int order);

  bool ok() const { return d_ != nullptr; }
  bool same(const Ring& o) const;

  RingKind kind() const;
  long p() const;
  int a() const;
  int f() const;
  int ell() const;
  int jet_vars() const;
  int jet_order() const;
  const std::vector<int64_t>& modulus() const;
  Ring base() const;
  const std::vector<Ring>& factors() const;
  std::string describe() const;

  int dim() const;
  uint64_t size() const;
  bool is_field() const;
  bool is_local() const;
  bool is_fp_algebra() const;
  int p_nilpotence() const;

  Relem zero() const;
  Relem one() const;
  Relem from_int(int64_t v) const;
  Relem canon(const std::vector<int64_t>& raw) const;

  bool is_zero(const Relem& x) const;
  Relem add(const Relem& x, const Relem& y) const;
  Relem sub(const Relem& x, const Relem& y) const;
  Relem neg(const Relem& x) const;
  Relem mul(const Relem& x, const Relem& y) const;
  Relem pow(const Relem& x, uint64_t e) const;
  bool is_unit(const Relem& x) const;
  Relem inv(const Relem& x) const;

  uint64_t index_of(const Relem& x) const;
  Relem element_at(uint64_t idx) const;
  Relem random(std::mt19937_64& rng) const;

  // local-ring structure
  Ring residue_field() const;
  Relem residue(const Relem& x) const;
  Relem section(const Relem& k_elem) const;     // multiplicative section k -> R
  std::vector<Relem> max_ideal_gens() const;
  int nilpotence() const;                        // least nu with m^nu = 0
  bool in_max_ideal(const Relem& x) const;

  // perfect fields only
  Relem pth_root(const Relem& x) const;

  const RingData* data() const { return d_.get(); }

private:
  explicit Ring(std::shared_ptr<const RingData> d) : d_(std::move(d)) {}
  std::shared_ptr<const RingData> d_;
  friend struct RingData;
};

struct RingData {
  RingKind kind;
  long p = 0;
  int a = 1;
  int f = 1;
  int64_t pa = 0;                 // p^a
  std::vector<int64_t> modulus;   // basic kinds: non-leading coeffs of monic modulus
  Ring base;                      // TruncPoly / Jet
  int ell = 0;                    // TruncPoly
  int vars = 0, order = 0;        // Jet
  std::vector<Ring> factors;      // Product

  int dim = 0;
  uint64_t count = 0;
  int p_nilp = 0;
  int nilp = 1;
  std::vector<int64_t> radix;               // per-coordinate canonical radix
  std::vector<std::vector<int>> monomials;  // Jet: exponent vectors in graded-lex order
  std::vector<int> coeff_prec;              // Jet: per-monomial p-precision
  std::vector<int32_t> mono_prod;           // Jet: monomial product table, -1 = truncated

  static Ring wrap(RingData&& d);
};

// Axiom spot-check on sampled triples. `mul_override`, when set, replaces the ring's
// product (used as a negative control in tests).
struct AxiomReport {
  long samples_run = 0;
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

using MulOverride = Relem (*)(const Ring&, const Relem&, const Relem&);
AxiomReport ring_axiom_check(const Ring& r, long samples, uint64_t seed = 1,
                             MulOverride mul_override = nullptr);

bool is_prime(long p);

} // namespace wd

#endif
