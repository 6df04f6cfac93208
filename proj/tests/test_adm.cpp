#include <doctest.h>

#include <random>
#include <set>

#include "wittdisp/adm.hpp"

using namespace wd;

TEST_SUITE_BEGIN("adm");

TEST_CASE("affine permutation basics") {
  AffPerm e = aff_identity(2);
  CHECK(aff_length(e) == 0);
  AffPerm s0 = aff_simple(2, 0), s1 = aff_simple(2, 1);
  CHECK(aff_length(s0) == 1);
  CHECK(aff_length(s1) == 1);
  CHECK(aff_mul(s0, s0) == e);
  CHECK(aff_mul(s1, s1) == e);
  AffPerm tau = aff_tau(2);
  CHECK(aff_length(tau) == 0);
  CHECK(aff_shift(tau) == 1);
  AffPerm t10 = aff_translation({1, 0});
  CHECK(aff_length(t10) == 1);
  CHECK(aff_shift(t10) == 1);
  // t_lambda t_mu = t_{lambda+mu}
  AffPerm t01 = aff_translation({0, 1});
  CHECK(aff_mul(t10, t01) == aff_translation({1, 1}));
  CHECK(aff_inv(t10) == aff_translation({-1, 0}));
  // length of a dominant translation for GL_3
  CHECK(aff_length(aff_translation({1, 1, 0})) == 2);
  CHECK(aff_length(aff_translation({2, 1, 0})) == 4);
}

TEST_CASE("reduced words multiply back and realize the length") {
  for (int h = 2; h <= 3; ++h) {
    std::mt19937_64 rng(101 + h);
    for (int rep = 0; rep < 50; ++rep) {
      // random product of simples and a tau power
      AffPerm x = aff_identity(h);
      int L = (int)(rng() % 6);
      for (int i = 0; i < L; ++i) x = aff_mul(x, aff_simple(h, (int)(rng() % h)));
      std::vector<int> w = reduced_word(x);
      CHECK((long)w.size() == aff_length(x));
      AffPerm y = aff_identity(h);
      for (int i : w) y = aff_mul(y, aff_simple(h, i));
      CHECK(y == x);
    }
  }
}

TEST_CASE("bruhat order: reflexivity, the spec example, antisymmetry") {
  AffPerm e = aff_identity(2);
  CHECK(bruhat_leq(e, e));
  // e <= t^{(1,0)} fails across shift components; the affine parts compare
  AffPerm t10 = aff_translation({1, 0});
  AffPerm tau = aff_tau(2);
  CHECK(bruhat_leq(tau, t10));  // tau = shift part of t^{(1,0)}, length 0 <= 1
  CHECK(!bruhat_leq(t10, tau));
  CHECK(bruhat_leq(t10, t10));
  // different shift components are incomparable
  CHECK(!bruhat_leq(e, t10));

  // antisymmetry on all pairs of elements of length <= 4 in a shift class (h=2)
  std::set<AffPerm> elems;
  std::vector<AffPerm> frontier{aff_tau(2)};
  elems.insert(frontier[0]);
  for (int step = 0; step < 4; ++step) {
    std::vector<AffPerm> next;
    for (const auto& x : frontier)
      for (int i = 0; i < 2; ++i) {
        AffPerm y = aff_mul(x, aff_simple(2, i));
        if (elems.insert(y).second) next.push_back(y);
      }
    frontier = next;
  }
  for (const auto& x : elems)
    for (const auto& y : elems)
      if (bruhat_leq(x, y) && bruhat_leq(y, x)) CHECK(x == y);
}

TEST_CASE("admissible set for GL_2, mu_1 has three elements") {
  AdmissibleSet A = admissible_set(2, 1, 1 << 20);
  CHECK(A.elements.size() == 3);
  CHECK(A.extremes.size() == 2);
  // maximal elements are exactly the extreme translations
  for (size_t i = 0; i < A.elements.size(); ++i) {
    bool is_max = true;
    for (size_t j = 0; j < A.elements.size(); ++j)
      if (i != j && A.leq[i * A.elements.size() + j]) is_max = false;
    bool is_extreme =
        std::find(A.extremes.begin(), A.extremes.end(), (int)i) != A.extremes.end();
    CHECK(is_max == is_extreme);
  }
  // the bottom element is tau (length 0)
  CHECK(aff_length(A.elements[0]) == 0);
  CHECK(A.elements[0] == aff_tau(2));
}

TEST_CASE("degenerate admissible sets") {
  AdmissibleSet A0 = admissible_set(2, 0, 1 << 20);
  CHECK(A0.elements.size() == 1);
  CHECK(A0.elements[0] == aff_identity(2));
  AdmissibleSet A2 = admissible_set(2, 2, 1 << 20);
  CHECK(A2.elements.size() == 1);
  AdmissibleSet A1 = admissible_set(1, 1, 1 << 20);
  CHECK(A1.elements.size() == 1);
  CHECK(A1.elements[0] == aff_translation({1}));
}

TEST_CASE("admissible sets: closure, grading, extreme count, duality bijection") {
  for (int h = 2; h <= 3; ++h)
    for (int d = 0; d <= h; ++d) {
      AdmissibleSet A = admissible_set(h, d, 1 << 20);
      size_t n = A.elements.size();
      // binomial(h, d) extremes, all of the same length d(h-d)
      uint64_t binom = 1;
      for (int i = 0; i < d; ++i) binom = binom * (h - i) / (i + 1);
      CHECK(A.extremes.size() == binom);
      for (int e : A.extremes) CHECK(aff_length(A.elements[e]) == (long)(d * (h - d)));
      // downward closure: everything below an element is in the set
      for (size_t i = 0; i < n; ++i) {
        std::vector<int> w = reduced_word(A.elements[i]);
        AffPerm tau_d = aff_identity(h);
        for (int k = 0; k < (int)aff_shift(A.elements[i]); ++k)
          tau_d = aff_mul(tau_d, aff_tau(h));
        for (uint64_t mask = 0; mask < (1ULL << w.size()); ++mask) {
          AffPerm v = aff_identity(h);
          for (size_t b = 0; b < w.size(); ++b)
            if (mask & (1ULL << b)) v = aff_mul(v, aff_simple(h, w[b]));
          AffPerm el = aff_mul(tau_d, v);
          CHECK(std::find(A.elements.begin(), A.elements.end(), el) != A.elements.end());
        }
      }
      // graded by length: covers raise length by exactly one
      for (const auto& [i, j] : A.covers)
        CHECK(aff_length(A.elements[j]) == aff_length(A.elements[i]) + 1);
      // duality: x -> t^{(1,...,1)} x^{-1} is a bijection onto Adm(mu_{h-d})
      AdmissibleSet B = admissible_set(h, h - d, 1 << 20);
      std::set<AffPerm> bset(B.elements.begin(), B.elements.end());
      AffPerm ones = aff_translation(std::vector<int64_t>(h, 1));
      std::set<AffPerm> image;
      for (const auto& x : A.elements) image.insert(aff_mul(ones, aff_inv(x)));
      CHECK(image == bset);
    }
}

TEST_CASE("admissible sets match an independent interval enumeration") {
  // oracle: BFS over the full shift-d component up to the extreme length, then
  // direct bruhat_leq tests against all extreme translations
  for (int h = 2; h <= 3; ++h)
    for (int d = 1; d < h; ++d) {
      AdmissibleSet A = admissible_set(h, d, 1 << 20);
      long lmax = (long)d * (h - d);
      AffPerm tau_d = aff_identity(h);
      for (int k = 0; k < d; ++k) tau_d = aff_mul(tau_d, aff_tau(h));
      std::set<AffPerm> layer{tau_d}, all{tau_d};
      for (long step = 0; step < lmax; ++step) {
        std::set<AffPerm> next;
        for (const auto& x : layer)
          for (int i = 0; i < h; ++i) {
            AffPerm y = aff_mul(x, aff_simple(h, i));
            if (aff_length(y) == aff_length(x) + 1) next.insert(y);
          }
        all.insert(next.begin(), next.end());
        layer = next;
      }
      std::set<AffPerm> oracle;
      for (const auto& w : all) {
        bool adm = false;
        for (int e : A.extremes)
          if (bruhat_leq(w, A.elements[e])) adm = true;
        if (adm) oracle.insert(w);
      }
      std::set<AffPerm> got(A.elements.begin(), A.elements.end());
      CHECK(got == oracle);
    }
}

TEST_SUITE_END();
