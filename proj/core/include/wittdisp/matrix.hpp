#ifndef WITTDISP_MATRIX_HPP
#define WITTDISP_MATRIX_HPP

#include <functional>
#include <random>
#include <vector>

#include "wittdisp/witt.hpp"

namespace wd {

// Dense matrix over a truncated Witt ring. Row-major.
struct WMat {
  WittRing W;
  int rows = 0, cols = 0;
  std::vector<Wv> e;

  WMat() = default;
  WMat(const WittRing& w, int r, int c) : W(w), rows(r), cols(c), e((size_t)r * c, w.zero()) {}

  Wv& at(int i, int j) { return e[(size_t)i * cols + j]; }
  const Wv& at(int i, int j) const { return e[(size_t)i * cols + j]; }
  bool operator==(const WMat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

WMat wmat_identity(const WittRing& W, int n);
WMat wmat_mul(const WMat& x, const WMat& y);
WMat wmat_add(const WMat& x, const WMat& y);
WMat wmat_sub(const WMat& x, const WMat& y);
WMat wmat_neg(const WMat& x);
WMat wmat_transpose(const WMat& x);
WMat wmat_scale(const WMat& x, const Wv& c);
Wv wmat_det(const WMat& x);
WMat wmat_adjugate(const WMat& x);
bool wmat_invertible(const WMat& x);
WMat wmat_inverse(const WMat& x);  // throws SingularBasis if det is not a unit
WMat wmat_map(const WMat& x, const WittRing& target, const std::function<Wv(const Wv&)>& f);
WMat wmat_truncate(const WMat& x, int n);
WMat wmat_block(const WMat& x, int r0, int c0, int nr, int nc);
void wmat_set_block(WMat& x, int r0, int c0, const WMat& b);
WMat wmat_random(const WittRing& W, int r, int c, std::mt19937_64& rng);
std::vector<Wv> wmat_apply(const WMat& x, const std::vector<Wv>& v);
std::string wmat_show(const WMat& x);

// Reduced row echelon form over a field; rows are vectors of Relem.
// Returns the canonical basis of the row space (pivots = 1, cleared columns).
std::vector<std::vector<Relem>> rref(const Ring& F, std::vector<std::vector<Relem>> rows);

// Howell-style column reduction over W_n(F_q) (a chain ring). Supports exact
// membership tests for the spanned column module.
struct Howell {
  WittRing W;
  int h = 0;
  // pivots in increasing row order: (row, p-valuation of pivot entry, column)
  struct Pivot {
    int row;
    int val;
    std::vector<Wv> col;
  };
  std::vector<Pivot> pivots;
};

Howell howell_form(const WittRing& W, int h, std::vector<std::vector<Wv>> cols);
bool howell_member(const Howell& H, std::vector<Wv> v);
bool howell_same_span(const Howell& A, const Howell& B);

} // namespace wd

#endif
