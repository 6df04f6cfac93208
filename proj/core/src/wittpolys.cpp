#include "wittdisp/wittpolys.hpp"

#include <algorithm>
#include <map>

namespace wd {

namespace {

void etrim(std::vector<uint16_t>& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

void normalize(Ipoly& p) {
  std::sort(p.t.begin(), p.t.end(), [](const Term& x, const Term& y) { return x.e < y.e; });
  std::vector<Term> out;
  for (auto& t : p.t) {
    if (t.c == 0) continue;
    if (!out.empty() && out.back().e == t.e)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c == 0; }),
            out.end());
  p.t = std::move(out);
}

} // namespace

Ipoly ipoly_var(int v, int exp) {
  Ipoly p;
  if (exp == 0) return ipoly_const(1);
  Term t;
  t.e.assign(v + 1, 0);
  t.e[v] = (uint16_t)exp;
  t.c = 1;
  p.t.push_back(std::move(t));
  return p;
}

Ipoly ipoly_const(const mpz_class& c) {
  Ipoly p;
  if (c != 0) p.t.push_back(Term{{}, c});
  return p;
}

Ipoly ipoly_add(const Ipoly& x, const Ipoly& y) {
  Ipoly r = x;
  r.t.insert(r.t.end(), y.t.begin(), y.t.end());
  normalize(r);
  return r;
}

Ipoly ipoly_sub(const Ipoly& x, const Ipoly& y) { return ipoly_add(x, ipoly_scale(y, -1)); }

Ipoly ipoly_scale(const Ipoly& x, const mpz_class& c) {
  if (c == 0) return Ipoly{};
  Ipoly r = x;
  for (auto& t : r.t) t.c *= c;
  return r;
}

Ipoly ipoly_mul(const Ipoly& x, const Ipoly& y) {
  std::map<std::vector<uint16_t>, mpz_class> acc;
  for (const auto& tx : x.t)
    for (const auto& ty : y.t) {
      std::vector<uint16_t> e(std::max(tx.e.size(), ty.e.size()), 0);
      for (size_t i = 0; i < tx.e.size(); ++i) e[i] += tx.e[i];
      for (size_t i = 0; i < ty.e.size(); ++i) e[i] += ty.e[i];
      etrim(e);
      acc[e] += tx.c * ty.c;
    }
  Ipoly r;
  for (auto& [e, c] : acc)
    if (c != 0) r.t.push_back(Term{e, c});
  return r;
}

Ipoly ipoly_pow(const Ipoly& x, uint64_t n) {
  Ipoly r = ipoly_const(1), b = x;
  while (n) {
    if (n & 1) r = ipoly_mul(r, b);
    n >>= 1;
    if (n) b = ipoly_mul(b, b);
  }
  return r;
}

Ipoly ipoly_divexact(const Ipoly& x, const mpz_class& c, long* nonintegral_counter) {
  Ipoly r = x;
  for (auto& t : r.t) {
    if (!mpz_divisible_p(t.c.get_mpz_t(), c.get_mpz_t())) {
      if (nonintegral_counter) ++*nonintegral_counter;
      fail(Err::NonIntegralDivision, "ghost recursion division is not exact");
    }
    mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

mpz_class ipoly_eval_z(const Ipoly& x, const std::vector<mpz_class>& args) {
  mpz_class acc = 0;
  for (const auto& t : x.t) {
    mpz_class m = t.c;
    for (size_t v = 0; v < t.e.size(); ++v) {
      if (t.e[v] == 0) continue;
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), args.at(v).get_mpz_t(), t.e[v]);
      m *= pw;
    }
    acc += m;
  }
  return acc;
}

Relem ipoly_eval(const Ipoly& poly, const Ring& R, const std::vector<Relem>& args) {
  // per-variable power cache
  std::vector<std::vector<Relem>> pw(args.size());
  auto power = [&](size_t v, uint16_t e) -> const Relem& {
    auto& tab = pw[v];
    if (tab.empty()) tab = {R.one(), args[v]};
    while (tab.size() <= e) tab.push_back(R.mul(tab.back(), args[v]));
    return tab[e];
  };
  int64_t porder = 1;
  for (int i = 0; i < R.p_nilpotence(); ++i) porder *= R.p();
  Relem acc = R.zero();
  for (const auto& t : poly.t) {
    mpz_class cr = t.c % porder;
    Relem m = R.from_int(cr.get_si());
    for (size_t v = 0; v < t.e.size(); ++v) {
      if (t.e[v] == 0) continue;
      if (v >= args.size()) fail(Err::Internal, "ipoly_eval: missing argument");
      m = R.mul(m, power(v, t.e[v]));
    }
    acc = R.add(acc, m);
  }
  return acc;
}

Ipoly ghost_poly(long p, int i) {
  // w_i(a) = sum_{j<=i} p^j a_j^{p^(i-j)}, a_j at variable 2j
  Ipoly w;
  mpz_class pj = 1;
  for (int j = 0; j <= i; ++j) {
    uint64_t ex = 1;
    for (int k = 0; k < i - j; ++k) ex *= (uint64_t)p;
    w = ipoly_add(w, ipoly_scale(ipoly_var(2 * j, (int)ex), pj));
    pj *= p;
  }
  return w;
}

namespace {

Ipoly swap_ab(const Ipoly& x) {
  // a_j <-> b_j, i.e. swap variables 2j and 2j+1
  Ipoly r = x;
  for (auto& t : r.t) {
    std::vector<uint16_t> e(t.e.size() + 1, 0);
    for (size_t v = 0; v < t.e.size(); ++v) e[v ^ 1] = t.e[v];
    etrim(e);
    t.e = std::move(e);
  }
  normalize(r);
  return r;
}

void extend_polys(WittPolys& W, int depth) {
  long p = W.p;
  for (int i = W.depth; i < depth; ++i) {
    Ipoly wa = ghost_poly(p, i);
    Ipoly wb = swap_ab(wa);

    // S_i
    {
      Ipoly rhs = ipoly_add(wa, wb);
      mpz_class pj = 1;
      for (int j = 0; j < i; ++j) {
        uint64_t ex = 1;
        for (int k = 0; k < i - j; ++k) ex *= (uint64_t)p;
        rhs = ipoly_sub(rhs, ipoly_scale(ipoly_pow(W.S[j], ex), pj));
        pj *= p;
      }
      W.S.push_back(ipoly_divexact(rhs, pj, &W.nonintegral_divisions));
    }
    // P_i
    {
      Ipoly rhs = ipoly_mul(wa, wb);
      mpz_class pj = 1;
      for (int j = 0; j < i; ++j) {
        uint64_t ex = 1;
        for (int k = 0; k < i - j; ++k) ex *= (uint64_t)p;
        rhs = ipoly_sub(rhs, ipoly_scale(ipoly_pow(W.P[j], ex), pj));
        pj *= p;
      }
      W.P.push_back(ipoly_divexact(rhs, pj, &W.nonintegral_divisions));
    }
    // F_i: ghost(F(a))_i = ghost(a)_{i+1}
    {
      Ipoly rhs = ghost_poly(p, i + 1);
      mpz_class pj = 1;
      for (int j = 0; j < i; ++j) {
        uint64_t ex = 1;
        for (int k = 0; k < i - j; ++k) ex *= (uint64_t)p;
        rhs = ipoly_sub(rhs, ipoly_scale(ipoly_pow(W.F[j], ex), pj));
        pj *= p;
      }
      W.F.push_back(ipoly_divexact(rhs, pj, &W.nonintegral_divisions));
    }
  }
  W.depth = depth;
}

} // namespace

std::shared_ptr<const WittPolys> witt_polys(long p, int depth) {
  if (!is_prime(p) || p == 2) fail(Err::CompositeP, "p must be an odd prime");
  if (depth < 1) fail(Err::ZeroPrecision, "depth must be >= 1");
  static std::map<long, std::shared_ptr<WittPolys>> cache;
  auto& slot = cache[p];
  if (!slot) {
    slot = std::make_shared<WittPolys>();
    slot->p = p;
  }
  if (slot->depth < depth) {
    auto grown = std::make_shared<WittPolys>(*slot);
    extend_polys(*grown, depth);
    slot = grown;
  }
  return slot;
}

} // namespace wd
