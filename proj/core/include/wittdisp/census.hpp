#ifndef WITTDISP_CENSUS_HPP
#define WITTDISP_CENSUS_HPP

#include "wittdisp/display.hpp"

namespace wd {

struct Rational {
  int64_t num = 0, den = 1;
  void reduce();
  bool operator==(const Rational&) const = default;
};
Rational make_rational(int64_t num, int64_t den);
Rational rational_add(const Rational& a, const Rational& b);
std::string rational_show(const Rational& r);

uint64_t gaussian_binomial(uint64_t q, int h, int d);

// d-dimensional subspaces of F_q^h as reduced row echelon d x h matrices,
// in lexicographic order
using Subspace = std::vector<std::vector<Relem>>;
std::vector<Subspace> enumerate_grassmannian(const Ring& Fq, int h, int d, uint64_t budget);

// canonical adapted pair for an echelon subspace: pivot lifts to L, complementary
// standard vectors to T
Pair adapted_pair(const DispCtx& ctx, const Subspace& U);

// point of the quotient presentation: filtration U plus psi over W_n
struct StackPoint {
  Subspace U;
  WMat psi;
  bool operator==(const StackPoint& o) const { return U == o.U && psi.e == o.psi.e; }
  auto operator<=>(const StackPoint& o) const {
    if (auto c = U <=> o.U; c != 0) return c;
    return psi.e <=> o.psi.e;
  }
};

Display stack_point_display(const DispCtx& ctx, const StackPoint& x);
StackPoint display_stack_point(const Display& D);  // for adapted-basis displays

// diagonal action of g in GL_h(W_m): U' = echelon(g U), psi' = g_n psi tilde(g)^{-1}
StackPoint group_action(const DispCtx& ctx, const WMat& g, const StackPoint& x);

struct CensusParams {
  long p = 3;
  int f = 1, h = 1, d = 0, m = 2, n = 1;
};

struct CensusClass {
  StackPoint rep;
  uint64_t orbit_size = 0;
  uint64_t aut_order = 0;
};

struct Census {
  CensusParams params;
  uint64_t X_size = 0, G_size = 0;
  std::vector<CensusClass> classes;
  Rational mass;        // sum of 1/aut over classes
  Rational mass_expect; // |X|/|G|
  bool mass_ok = false;
};

Census run_census(const CensusParams& P, uint64_t budget);

// verification pass over an existing census (recomputes orbits of the stored reps)
struct CensusCheck {
  bool orbit_stabilizer_ok = false;
  bool partition_ok = false;
  bool mass_ok = false;
  bool reps_distinct_ok = false;
};
CensusCheck census_verify(const Census& C, uint64_t budget);

// Hodge and conjugate filtration of a display over F_q, with the reduced
// comparison matrix in the adapted bases
struct ZipData {
  Subspace hodge;      // rank d
  Subspace conjugate;  // rank h-d
  std::vector<std::vector<Relem>> comparison;  // residue of psi
};
ZipData zip_extract(const Display& D);

// display attached to a matrix g = p^{-val} g0 over W_N(F_q) with integral g0:
// filtration p g Lambda, psi from p^{-1} sigma(g)^{-1}
Display shtuka_to_display(const DispCtx& ctx, const WittRing& WN, const WMat& g0, int val);

} // namespace wd

#endif
