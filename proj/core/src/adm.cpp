#include "wittdisp/adm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wd {

AffPerm aff_identity(int h) {
  AffPerm u;
  u.h = h;
  u.win.resize(h);
  std::iota(u.win.begin(), u.win.end(), 1);
  return u;
}

AffPerm aff_simple(int h, int i) {
  if (i < 0 || i >= h) fail(Err::BadDescriptor, "simple reflection index out of range");
  AffPerm u = aff_identity(h);
  if (i >= 1) {
    std::swap(u.win[i - 1], u.win[i]);
  } else {
    // s_0 swaps 0 and 1 periodically
    u.win[0] = 0;
    u.win[h - 1] = h + 1;
    if (h == 1) fail(Err::BadDescriptor, "no affine reflection for h = 1");
  }
  return u;
}

AffPerm aff_tau(int h) {
  AffPerm u;
  u.h = h;
  u.win.resize(h);
  std::iota(u.win.begin(), u.win.end(), 2);
  return u;
}

AffPerm aff_translation(const std::vector<int64_t>& lambda) {
  AffPerm u;
  u.h = (int)lambda.size();
  u.win.resize(u.h);
  for (int i = 0; i < u.h; ++i) u.win[i] = (i + 1) + u.h * lambda[i];
  return u;
}

int64_t aff_apply(const AffPerm& u, int64_t x) {
  int64_t q = x - 1;
  int64_t r = q % u.h;
  if (r < 0) r += u.h;
  int64_t k = (q - r) / u.h;
  return u.win[r] + k * u.h;
}

AffPerm aff_mul(const AffPerm& a, const AffPerm& b) {
  if (a.h != b.h) fail(Err::RingMismatch, "rank mismatch");
  AffPerm u;
  u.h = a.h;
  u.win.resize(a.h);
  for (int i = 0; i < a.h; ++i) u.win[i] = aff_apply(a, b.win[i]);
  return u;
}

AffPerm aff_inv(const AffPerm& a) {
  AffPerm u;
  u.h = a.h;
  u.win.resize(a.h);
  for (int i = 1; i <= a.h; ++i) {
    int64_t v = a.win[i - 1];
    int64_t r = (v - 1) % a.h;
    if (r < 0) r += a.h;
    int64_t k = (v - 1 - r) / a.h;
    // a(i) = v means a^{-1}(v) = i, periodically
    u.win[r] = i - k * a.h;
  }
  return u;
}

int64_t aff_shift(const AffPerm& a) {
  int64_t s = 0;
  for (int i = 0; i < a.h; ++i) s += a.win[i] - (i + 1);
  if (s % a.h != 0) fail(Err::Internal, "invalid affine permutation");
  return s / a.h;
}

long aff_length(const AffPerm& a) {
  // number of pairs i < j (i in [1,h], j in Z) with a(i) > a(j)
  long inv = 0;
  for (int i = 1; i <= a.h; ++i)
    for (int jr = 1; jr <= a.h; ++jr) {
      // j = jr + k h with j > i, count k with a(i) > a(jr) + k h
      int64_t kmin = (jr > i) ? 0 : 1;
      // a(i) - a(jr) > k h  <=>  k <= ceil((a(i)-a(jr))/h) - 1
      int64_t diff = a.win[i - 1] - a.win[jr - 1];
      int64_t kmax;
      if (diff <= 0) continue;
      kmax = (diff - 1) / a.h;  // largest k with k h < diff
      if (kmax >= kmin) inv += (long)(kmax - kmin + 1);
    }
  return inv;
}

std::string aff_show(const AffPerm& a) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < a.h; ++i) os << (i ? "," : "") << a.win[i];
  os << "]";
  return os.str();
}

namespace {

bool left_descent(const AffPerm& v, int i) {
  // l(s_i v) < l(v) iff v^{-1}(i) > v^{-1}(i+1), with positions 0,1 for s_0
  AffPerm vi = aff_inv(v);
  int64_t a = aff_apply(vi, i == 0 ? 0 : i);
  int64_t b = aff_apply(vi, i == 0 ? 1 : i + 1);
  return a > b;
}

} // namespace

std::vector<int> reduced_word(const AffPerm& a) {
  int64_t k = aff_shift(a);
  AffPerm tau_inv_k = aff_identity(a.h);
  AffPerm tau = aff_tau(a.h), tau_inv = aff_inv(tau);
  for (int64_t i = 0; i < (k >= 0 ? k : -k); ++i)
    tau_inv_k = aff_mul(tau_inv_k, k >= 0 ? tau_inv : tau);
  AffPerm v = aff_mul(tau_inv_k, a);
  if (aff_shift(v) != 0) fail(Err::Internal, "shift stripping failed");
  std::vector<int> word;
  long len = aff_length(v);
  while (len > 0) {
    int chosen = -1;
    for (int i = 0; i < v.h; ++i)
      if (left_descent(v, i)) {
        chosen = i;
        break;
      }
    if (chosen < 0) fail(Err::Internal, "no descent on a non-identity element");
    v = aff_mul(aff_simple(v.h, chosen), v);
    word.push_back(chosen);
    --len;
  }
  return word;
}

bool bruhat_leq(const AffPerm& x, const AffPerm& y) {
  if (x.h != y.h) fail(Err::RingMismatch, "rank mismatch");
  if (aff_shift(x) != aff_shift(y)) return false;
  // strip the common shift and compare the affine parts
  AffPerm tau = aff_tau(x.h), tau_inv = aff_inv(tau);
  int64_t k = aff_shift(x);
  AffPerm s = aff_identity(x.h);
  for (int64_t i = 0; i < (k >= 0 ? k : -k); ++i) s = aff_mul(s, k >= 0 ? tau_inv : tau);
  AffPerm xv = aff_mul(s, x), yv = aff_mul(s, y);
  // recursive subword criterion
  std::vector<std::pair<AffPerm, AffPerm>> stack{{xv, yv}};
  while (!stack.empty()) {
    auto [u, w] = stack.back();
    stack.pop_back();
    long lu = aff_length(u), lw = aff_length(w);
    if (lu > lw) return false;
    if (lu == 0) continue;  // e <= w always
    if (lw == 0) return false;
    int i = -1;
    for (int j = 0; j < w.h; ++j)
      if (left_descent(w, j)) {
        i = j;
        break;
      }
    AffPerm si = aff_simple(w.h, i);
    AffPerm sw = aff_mul(si, w);
    if (left_descent(u, i))
      stack.push_back({aff_mul(si, u), sw});
    else
      stack.push_back({u, sw});
  }
  return true;
}

AdmissibleSet admissible_set(int h, int d, uint64_t budget) {
  if (d < 0 || d > h || h < 1) fail(Err::BadRank, "need 0 <= d <= h");
  if (h > 6) fail(Err::BudgetExceeded, "admissible sets computed for h <= 6");
  AdmissibleSet A;
  A.h = h;
  A.d = d;

  // extreme translations t^lambda, lambda in the S_h-orbit of (1^d, 0^(h-d))
  std::vector<int64_t> mu(h, 0);
  for (int i = 0; i < d; ++i) mu[i] = 1;
  std::sort(mu.begin(), mu.end());
  std::set<AffPerm> elems;
  std::vector<AffPerm> extremes;
  do {
    extremes.push_back(aff_translation(mu));
  } while (std::next_permutation(mu.begin(), mu.end()));

  AffPerm tau = aff_tau(h);
  AffPerm tau_d = aff_identity(h);
  for (int i = 0; i < d; ++i) tau_d = aff_mul(tau_d, tau);

  for (const auto& t : extremes) {
    std::vector<int> word = reduced_word(t);
    size_t L = word.size();
    if (L > 20) fail(Err::BudgetExceeded, "reduced word too long");
    for (uint64_t mask = 0; mask < (1ULL << L); ++mask) {
      AffPerm v = aff_identity(h);
      for (size_t i = 0; i < L; ++i)
        if (mask & (1ULL << i)) v = aff_mul(v, aff_simple(h, word[i]));
      elems.insert(aff_mul(tau_d, v));
      if (elems.size() > budget) fail(Err::BudgetExceeded, "admissible set too large");
    }
  }

  A.elements.assign(elems.begin(), elems.end());
  std::sort(A.elements.begin(), A.elements.end(), [](const AffPerm& a, const AffPerm& b) {
    long la = aff_length(a), lb = aff_length(b);
    if (la != lb) return la < lb;
    return a.win < b.win;
  });
  size_t n = A.elements.size();
  A.leq.assign(n * n, 0);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      A.leq[i * n + j] = bruhat_leq(A.elements[i], A.elements[j]) ? 1 : 0;
  // covers: i < j with nothing strictly between
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j || !A.leq[i * n + j]) continue;
      bool cover = true;
      for (size_t k = 0; k < n && cover; ++k) {
        if (k == i || k == j) continue;
        if (A.leq[i * n + k] && A.leq[k * n + j]) cover = false;
      }
      if (cover) A.covers.emplace_back((int)i, (int)j);
    }
  for (const auto& t : extremes) {
    auto it = std::find(A.elements.begin(), A.elements.end(), t);
    if (it == A.elements.end()) fail(Err::Internal, "extreme translation missing");
    A.extremes.push_back((int)(it - A.elements.begin()));
  }
  std::sort(A.extremes.begin(), A.extremes.end());
  return A;
}

} // namespace wd
