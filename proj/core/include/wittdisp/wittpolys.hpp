#ifndef WITTDISP_WITTPOLYS_HPP
#define WITTDISP_WITTPOLYS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

#include "wittdisp/ring.hpp"

namespace wd {

// Sparse integer polynomial. Variable layout is interleaved and depth-independent:
// a_j -> variable 2j, b_j -> variable 2j+1. Exponent vectors are trimmed of
// trailing zeros; terms are sorted by exponent vector.
struct Term {
  std::vector<uint16_t> e;
  mpz_class c;
  bool operator==(const Term& o) const { return e == o.e && c == o.c; }
};

struct Ipoly {
  std::vector<Term> t;
  bool operator==(const Ipoly&) const = default;
};

Ipoly ipoly_var(int v, int exp = 1);
Ipoly ipoly_const(const mpz_class& c);
Ipoly ipoly_add(const Ipoly& x, const Ipoly& y);
Ipoly ipoly_sub(const Ipoly& x, const Ipoly& y);
Ipoly ipoly_mul(const Ipoly& x, const Ipoly& y);
Ipoly ipoly_pow(const Ipoly& x, uint64_t n);
Ipoly ipoly_scale(const Ipoly& x, const mpz_class& c);
// divides every coefficient by c; throws NonIntegralDivision if not exact
Ipoly ipoly_divexact(const Ipoly& x, const mpz_class& c, long* nonintegral_counter);
mpz_class ipoly_eval_z(const Ipoly& x, const std::vector<mpz_class>& args);

// Evaluate with ring elements substituted for variables (absent variables = 0).
Relem ipoly_eval(const Ipoly& poly, const Ring& R, const std::vector<Relem>& args);

// Sum/product/Frobenius structure polynomials for p-typical Witt vectors, generated
// by the ghost recursion with all divisions checked exact over Z.
//   S[i], P[i]: ghost(S)_i = ghost(a)_i + ghost(b)_i, ghost(P)_i = ghost(a)_i * ghost(b)_i
//   F[i]: ghost(F(a))_i = ghost(a)_{i+1}   (F[i] uses a_0..a_{i+1})
struct WittPolys {
  long p = 0;
  int depth = 0;
  std::vector<Ipoly> S, P, F;
  long nonintegral_divisions = 0;
};

// Cached per prime; grows monotonically in depth.
std::shared_ptr<const WittPolys> witt_polys(long p, int depth);

// ghost polynomial w_i in the a-variables
Ipoly ghost_poly(long p, int i);

} // namespace wd

#endif
