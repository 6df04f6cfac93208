#ifndef WITTDISP_ADM_HPP
#define WITTDISP_ADM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "wittdisp/error.hpp"

namespace wd {

// Extended affine Weyl group of GL_h as periodic bijections u: Z -> Z with
// u(i+h) = u(i)+h, stored by the window [u(1),...,u(h)]. The Omega-grading is
// shift(u) = (sum u(i) - i)/h; the affine Weyl part is shift 0.
struct AffPerm {
  int h = 0;
  std::vector<int64_t> win;
  bool operator==(const AffPerm&) const = default;
  auto operator<=>(const AffPerm&) const = default;
};

AffPerm aff_identity(int h);
AffPerm aff_simple(int h, int i);   // s_i, 0 <= i <= h-1 (s_0 affine)
AffPerm aff_tau(int h);             // length-zero generator i -> i+1
AffPerm aff_translation(const std::vector<int64_t>& lambda);
int64_t aff_apply(const AffPerm& u, int64_t x);
AffPerm aff_mul(const AffPerm& a, const AffPerm& b);  // a after b
AffPerm aff_inv(const AffPerm& a);
int64_t aff_shift(const AffPerm& a);
long aff_length(const AffPerm& a);  // inversions of the affine permutation
std::string aff_show(const AffPerm& a);

// lexicographically least reduced word of the affine part (shift stripped)
std::vector<int> reduced_word(const AffPerm& a);

// Bruhat order on the extended group: equal shift plus subword criterion
bool bruhat_leq(const AffPerm& x, const AffPerm& y);

struct AdmissibleSet {
  int h = 0, d = 0;
  std::vector<AffPerm> elements;           // sorted by (length, window)
  std::vector<uint8_t> leq;                // elements x elements, leq[i*n+j] = (e_i <= e_j)
  std::vector<std::pair<int, int>> covers; // cover relations i < j
  std::vector<int> extremes;               // indices of the translations t^lambda
};

// Adm(mu_d) = { w <= t^lambda : lambda in S_h . (1^d, 0^(h-d)) }
AdmissibleSet admissible_set(int h, int d, uint64_t budget);

} // namespace wd

#endif
