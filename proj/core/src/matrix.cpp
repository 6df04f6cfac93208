#include "wittdisp/matrix.hpp"

#include <cassert>
#include <sstream>

namespace wd {

WMat wmat_identity(const WittRing& W, int n) {
  WMat m(W, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = W.one();
  return m;
}

WMat wmat_mul(const WMat& x, const WMat& y) {
  if (x.cols != y.rows || !x.W.same(y.W)) fail(Err::RingMismatch, "matrix product shape/ring");
  WMat r(x.W, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.W.is_zero(x.at(i, k))) continue;
      for (int j = 0; j < y.cols; ++j)
        r.at(i, j) = x.W.add(r.at(i, j), x.W.mul(x.at(i, k), y.at(k, j)));
    }
  return r;
}

WMat wmat_add(const WMat& x, const WMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) fail(Err::RingMismatch, "matrix sum shape");
  WMat r(x.W, x.rows, x.cols);
  for (size_t i = 0; i < x.e.size(); ++i) r.e[i] = x.W.add(x.e[i], y.e[i]);
  return r;
}

WMat wmat_sub(const WMat& x, const WMat& y) { return wmat_add(x, wmat_neg(y)); }

WMat wmat_neg(const WMat& x) {
  WMat r(x.W, x.rows, x.cols);
  for (size_t i = 0; i < x.e.size(); ++i) r.e[i] = x.W.neg(x.e[i]);
  return r;
}

WMat wmat_transpose(const WMat& x) {
  WMat r(x.W, x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

WMat wmat_scale(const WMat& x, const Wv& c) {
  WMat r(x.W, x.rows, x.cols);
  for (size_t i = 0; i < x.e.size(); ++i) r.e[i] = x.W.mul(x.e[i], c);
  return r;
}

namespace {

Wv det_rec(const WMat& m, std::vector<int>& cols, int row) {
  const WittRing& W = m.W;
  int n = (int)cols.size();
  if (n == 1) return m.at(row, cols[0]);
  Wv acc = W.zero();
  for (int k = 0; k < n; ++k) {
    const Wv& pivot = m.at(row, cols[k]);
    if (W.is_zero(pivot)) continue;
    std::vector<int> rest;
    rest.reserve(n - 1);
    for (int j = 0; j < n; ++j)
      if (j != k) rest.push_back(cols[j]);
    Wv minor = det_rec(m, rest, row + 1);
    Wv term = W.mul(pivot, minor);
    acc = (k % 2 == 0) ? W.add(acc, term) : W.sub(acc, term);
  }
  return acc;
}

} // namespace

Wv wmat_det(const WMat& x) {
  if (x.rows != x.cols) fail(Err::RingMismatch, "determinant needs a square matrix");
  std::vector<int> cols(x.cols);
  for (int i = 0; i < x.cols; ++i) cols[i] = i;
  return det_rec(x, cols, 0);
}

WMat wmat_adjugate(const WMat& x) {
  int n = x.rows;
  WMat adj(x.W, n, n);
  if (n == 1) {
    adj.at(0, 0) = x.W.one();
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // cofactor C_ij, placed transposed
      WMat minor(x.W, n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor.at(rr, cc) = x.at(r, c);
          ++cc;
        }
        ++rr;
      }
      Wv d = wmat_det(minor);
      adj.at(j, i) = ((i + j) % 2 == 0) ? d : x.W.neg(d);
    }
  return adj;
}

bool wmat_invertible(const WMat& x) {
  return x.rows == x.cols && x.W.is_unit(wmat_det(x));
}

WMat wmat_inverse(const WMat& x) {
  Wv d = wmat_det(x);
  if (!x.W.is_unit(d)) fail(Err::SingularBasis, "matrix determinant is not a unit");
  return wmat_scale(wmat_adjugate(x), x.W.inv(d));
}

WMat wmat_map(const WMat& x, const WittRing& target, const std::function<Wv(const Wv&)>& f) {
  WMat r(target, x.rows, x.cols);
  for (size_t i = 0; i < x.e.size(); ++i) r.e[i] = f(x.e[i]);
  return r;
}

WMat wmat_truncate(const WMat& x, int n) {
  WittRing Wn = x.W.with_len(n);
  return wmat_map(x, Wn, [&](const Wv& v) { return x.W.truncate(v, n); });
}

WMat wmat_block(const WMat& x, int r0, int c0, int nr, int nc) {
  WMat r(x.W, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r.at(i, j) = x.at(r0 + i, c0 + j);
  return r;
}

void wmat_set_block(WMat& x, int r0, int c0, const WMat& b) {
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < b.cols; ++j) x.at(r0 + i, c0 + j) = b.at(i, j);
}

WMat wmat_random(const WittRing& W, int r, int c, std::mt19937_64& rng) {
  WMat m(W, r, c);
  for (auto& v : m.e) v = W.random(rng);
  return m;
}

std::vector<Wv> wmat_apply(const WMat& x, const std::vector<Wv>& v) {
  if ((int)v.size() != x.cols) fail(Err::RingMismatch, "matrix apply shape");
  std::vector<Wv> r(x.rows, x.W.zero());
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r[i] = x.W.add(r[i], x.W.mul(x.at(i, j), v[j]));
  return r;
}

std::string wmat_show(const WMat& x) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < x.rows; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < x.cols; ++j) os << (j ? " " : "") << x.W.show(x.at(i, j));
  }
  os << "]";
  return os.str();
}

std::vector<std::vector<Relem>> rref(const Ring& F, std::vector<std::vector<Relem>> rows) {
  if (rows.empty()) return rows;
  size_t ncols = rows[0].size();
  size_t pr = 0;
  for (size_t col = 0; col < ncols && pr < rows.size(); ++col) {
    size_t sel = pr;
    while (sel < rows.size() && F.is_zero(rows[sel][col])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pr], rows[sel]);
    Relem inv = F.inv(rows[pr][col]);
    for (auto& v : rows[pr]) v = F.mul(v, inv);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == pr || F.is_zero(rows[r][col])) continue;
      Relem c = rows[r][col];
      for (size_t j = 0; j < ncols; ++j)
        rows[r][j] = F.sub(rows[r][j], F.mul(c, rows[pr][j]));
    }
    ++pr;
  }
  rows.resize(pr);
  return rows;
}

namespace {

// x = p^v * u with u a unit; returns u padded to full length
Wv unit_part(const WittRing& W, const Wv& x, int v) {
  Wv y = x;
  WittRing cur = W;
  for (int i = 0; i < v; ++i) {
    y = cur.p_divide(y);
    cur = cur.with_len(cur.len() - 1);
  }
  Wv full = W.zero();
  for (int i = 0; i < (int)y.a.size(); ++i) full.a[i] = y.a[i];
  return full;
}

void col_submul(const WittRing& W, std::vector<Wv>& c, const Wv& s, const std::vector<Wv>& piv) {
  for (size_t i = 0; i < c.size(); ++i) c[i] = W.sub(c[i], W.mul(s, piv[i]));
}

} // namespace

Howell howell_form(const WittRing& W, int h, std::vector<std::vector<Wv>> cols) {
  if (!W.base().is_field()) fail(Err::Internal, "howell_form needs W_n(F_q)");
  Howell H;
  H.W = W;
  H.h = h;
  int n = W.len();
  for (int row = 0; row < h; ++row) {
    int best = -1, bestval = n;
    for (size_t k = 0; k < cols.size(); ++k) {
      int v = W.valuation(cols[k][row]);
      if (v < bestval) {
        bestval = v;
        best = (int)k;
      }
    }
    if (best < 0 || bestval == n) continue;
    std::vector<Wv> piv = cols[best];
    cols.erase(cols.begin() + best);
    // normalize pivot entry to exactly p^v
    Wv u = unit_part(W, piv[row], bestval);
    Wv uinv = W.inv(u);
    for (auto& x : piv) x = W.mul(x, uinv);
    // eliminate the row in all other columns
    for (auto& c : cols) {
      if (W.is_zero(c[row])) continue;
      if (W.valuation(c[row]) < bestval) fail(Err::Internal, "pivot was not minimal");
      Wv w = unit_part(W, c[row], bestval);
      col_submul(W, c, w, piv);
      assert(W.is_zero(c[row]));
    }
    // Howell closure: p^(n-v) * pivot has zero pivot entry but may span below
    if (bestval > 0) {
      Wv pk = W.pow(W.scalar_p(), (uint64_t)(n - bestval));
      std::vector<Wv> extra;
      extra.reserve(h);
      for (const auto& x : piv) extra.push_back(W.mul(pk, x));
      bool nonzero = false;
      for (const auto& x : extra)
        if (!W.is_zero(x)) nonzero = true;
      if (nonzero) cols.push_back(std::move(extra));
    }
    H.pivots.push_back({row, bestval, std::move(piv)});
  }
  for (const auto& c : cols)
    for (const auto& x : c)
      if (!W.is_zero(x)) fail(Err::Internal, "howell_form: residual column");
  return H;
}

bool howell_member(const Howell& H, std::vector<Wv> v) {
  const WittRing& W = H.W;
  size_t pi = 0;
  for (int row = 0; row < H.h; ++row) {
    const Howell::Pivot* piv = nullptr;
    if (pi < H.pivots.size() && H.pivots[pi].row == row) piv = &H.pivots[pi++];
    if (W.is_zero(v[row])) continue;
    if (!piv) return false;
    int val = W.valuation(v[row]);
    if (val < piv->val) return false;
    Wv w = unit_part(W, v[row], piv->val);
    col_submul(W, v, w, piv->col);
  }
  for (const auto& x : v)
    if (!W.is_zero(x)) return false;
  return true;
}

bool howell_same_span(const Howell& A, const Howell& B) {
  for (const auto& p : A.pivots)
    if (!howell_member(B, p.col)) return false;
  for (const auto& p : B.pivots)
    if (!howell_member(A, p.col)) return false;
  return true;
}

} // namespace wd
