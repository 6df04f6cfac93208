#ifndef WITTDISP_IO_HPP
#define WITTDISP_IO_HPP

#include <json.hpp>

#include "wittdisp/adm.hpp"
#include "wittdisp/census.hpp"
#include "wittdisp/deform.hpp"

namespace wd {

using json = nlohmann::json;

// ---- rings ---------------------------------------------------------------

inline json ring_to_json(const Ring& r) {
  json j;
  j["kind"] = ring_kind_name(r.kind());
  switch (r.kind()) {
    case RingKind::PrimeField:
      j["p"] = r.p();
      break;
    case RingKind::GaloisField:
      j["p"] = r.p();
      j["f"] = r.f();
      j["modulus"] = r.modulus();
      break;
    case RingKind::IntegersMod:
      j["p"] = r.p();
      j["a"] = r.a();
      break;
    case RingKind::GaloisRing:
      j["p"] = r.p();
      j["a"] = r.a();
      j["f"] = r.f();
      j["modulus"] = r.modulus();
      break;
    case RingKind::TruncPoly:
      j["base"] = ring_to_json(r.base());
      j["ell"] = r.ell();
      break;
    case RingKind::Product: {
      json fs = json::array();
      for (const auto& f : r.factors()) fs.push_back(ring_to_json(f));
      j["factors"] = fs;
      break;
    }
    case RingKind::Jet:
      j["base"] = ring_to_json(r.base());
      j["vars"] = r.jet_vars();
      j["order"] = r.jet_order();
      break;
  }
  return j;
}

inline Ring ring_from_json(const json& j) {
  std::string kind = j.at("kind");
  if (kind == "prime_field") return Ring::prime_field(j.at("p"));
  if (kind == "galois_field") {
    if (j.contains("modulus"))
      return Ring::galois_field(j.at("p"), j.at("f"), j.at("modulus").get<std::vector<int64_t>>());
    return Ring::galois_field(j.at("p"), j.at("f"));
  }
  if (kind == "integers_mod") return Ring::integers_mod(j.at("p"), j.at("a"));
  if (kind == "galois_ring") {
    if (j.contains("modulus"))
      return Ring::galois_ring(j.at("p"), j.at("a"), j.at("f"),
                               j.at("modulus").get<std::vector<int64_t>>());
    return Ring::galois_ring(j.at("p"), j.at("a"), j.at("f"));
  }
  if (kind == "trunc_poly") return Ring::trunc_poly(ring_from_json(j.at("base")), j.at("ell"));
  if (kind == "finite_product") {
    std::vector<Ring> fs;
    for (const auto& f : j.at("factors")) fs.push_back(ring_from_json(f));
    return Ring::product(fs);
  }
  if (kind == "jet")
    return Ring::jet(ring_from_json(j.at("base")), j.at("vars"), j.at("order"));
  fail(Err::BadDescriptor, "unknown ring kind: " + kind);
}

inline json elem_to_json(const Relem& x) { return json(x.c); }

inline Relem elem_from_json(const Ring& r, const json& j) {
  return r.canon(j.get<std::vector<int64_t>>());
}

// ---- Witt vectors and matrices --------------------------------------------

inline json wv_to_json(const Wv& x) {
  json comps = json::array();
  for (const auto& c : x.a) comps.push_back(elem_to_json(c));
  return comps;
}

inline Wv wv_from_json(const WittRing& W, const json& j) {
  Wv x;
  if ((int)j.size() != W.len()) fail(Err::BadDescriptor, "wrong Witt length");
  for (const auto& c : j) x.a.push_back(elem_from_json(W.base(), c));
  return x;
}

inline json wmat_to_json(const WMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(wv_to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline WMat wmat_from_json(const WittRing& W, const json& j) {
  int rows = (int)j.size();
  int cols = rows ? (int)j.at(0).size() : 0;
  WMat m(W, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int c = 0; c < cols; ++c) m.at(i, c) = wv_from_json(W, j.at(i).at(c));
  return m;
}

// ---- structure polynomials --------------------------------------------------

inline json ipoly_to_json(const Ipoly& p) {
  json terms = json::array();
  for (const auto& t : p.t) {
    json term;
    term["c"] = t.c.get_str();
    term["e"] = t.e;
    terms.push_back(term);
  }
  return terms;
}

// ---- pairs and displays ------------------------------------------------------

inline json ctx_to_json(const DispCtx& c) {
  json j;
  j["ring"] = ring_to_json(c.R);
  j["m"] = c.m;
  j["n"] = c.n;
  j["dieudonne"] = c.dieudonne;
  return j;
}

inline DispCtx ctx_from_json(const json& j) {
  Ring R = ring_from_json(j.at("ring"));
  bool dd = j.value("dieudonne", false);
  return dd ? DispCtx::dieudonne_ctx(R, j.at("m")) : DispCtx::truncated(R, j.at("m"), j.at("n"));
}

inline json pair_to_json(const Pair& P) {
  json j;
  j["ring"] = ring_to_json(P.ctx.R);
  j["m"] = P.ctx.m;
  j["h"] = P.h;
  j["d"] = P.d;
  j["basis"] = wmat_to_json(P.basis);
  return j;
}

inline json display_to_json(const Display& D) {
  json j;
  j["pair"] = pair_to_json(D.pair);
  j["psi"] = wmat_to_json(D.psi);
  j["m"] = D.pair.ctx.m;
  j["n"] = D.pair.ctx.n;
  j["dieudonne"] = D.pair.ctx.dieudonne;
  return j;
}

inline Display display_from_json(const json& j) {
  json jp = j.at("pair");
  Ring R = ring_from_json(jp.at("ring"));
  bool dd = j.value("dieudonne", false);
  DispCtx ctx = dd ? DispCtx::dieudonne_ctx(R, j.at("m"))
                   : DispCtx::truncated(R, j.at("m"), j.at("n"));
  WMat basis = wmat_from_json(ctx.Wm, jp.at("basis"));
  Pair P = pair_make(ctx, jp.at("h"), jp.at("d"), basis);
  return display_make(P, wmat_from_json(ctx.Wn, j.at("psi")));
}

// ---- census --------------------------------------------------------------------

inline json subspace_to_json(const Subspace& U) {
  json rows = json::array();
  for (const auto& row : U) {
    json r = json::array();
    for (const auto& e : row) r.push_back(elem_to_json(e));
    rows.push_back(r);
  }
  return rows;
}

inline Subspace subspace_from_json(const Ring& R, const json& j) {
  Subspace U;
  for (const auto& row : j) {
    std::vector<Relem> r;
    for (const auto& e : row) r.push_back(elem_from_json(R, e));
    U.push_back(std::move(r));
  }
  return U;
}

inline json census_to_json(const Census& C) {
  json j;
  j["params"] = {{"p", C.params.p}, {"f", C.params.f}, {"h", C.params.h},
                 {"d", C.params.d}, {"m", C.params.m}, {"n", C.params.n}};
  // for GL_h at hyperspecial level the reductive quotient is the whole group,
  // so n = 1 doubles as the "1rdt" truncation level
  j["params"]["n_is_rdt_level"] = (C.params.n == 1);
  j["totals"] = {{"X", C.X_size}, {"G", C.G_size}};
  json cls = json::array();
  for (const auto& c : C.classes) {
    json e;
    e["rep"] = {{"U", subspace_to_json(c.rep.U)}, {"psi", wmat_to_json(c.rep.psi)}};
    e["autOrder"] = c.aut_order;
    e["orbitSize"] = c.orbit_size;
    cls.push_back(e);
  }
  j["classes"] = cls;
  j["massCheck"] = {{"mass", rational_show(C.mass)},
                    {"expected", rational_show(C.mass_expect)},
                    {"ok", C.mass_ok}};
  return j;
}

inline Census census_from_json(const json& j) {
  Census C;
  C.params.p = j.at("params").at("p");
  C.params.f = j.at("params").at("f");
  C.params.h = j.at("params").at("h");
  C.params.d = j.at("params").at("d");
  C.params.m = j.at("params").at("m");
  C.params.n = j.at("params").at("n");
  C.X_size = j.at("totals").at("X");
  C.G_size = j.at("totals").at("G");
  Ring Fq = Ring::galois_field(C.params.p, C.params.f);
  DispCtx ctx = DispCtx::truncated(Fq, C.params.m, C.params.n);
  for (const auto& e : j.at("classes")) {
    CensusClass c;
    c.rep.U = subspace_from_json(Fq, e.at("rep").at("U"));
    c.rep.psi = wmat_from_json(ctx.Wn, e.at("rep").at("psi"));
    c.aut_order = e.at("autOrder");
    c.orbit_size = e.at("orbitSize");
    C.classes.push_back(std::move(c));
  }
  uint64_t num = 0;
  (void)num;
  C.mass = Rational{0, 1};
  for (const auto& c : C.classes)
    C.mass = rational_add(C.mass, make_rational(1, (int64_t)c.aut_order));
  C.mass_expect = make_rational((int64_t)C.X_size, (int64_t)C.G_size);
  C.mass_ok = (C.mass == C.mass_expect);
  return C;
}

// ---- Zink elements ---------------------------------------------------------------

inline json zink_elem_to_json(const ZinkCtx& Z, const Wv& x) {
  ZinkSplit s = zink_split(Z, x);
  json j;
  j["wk"] = wv_to_json(s.wk);
  json nil = json::array();
  for (int i = 0; i < Z.N; ++i)
    if (!Z.A.R.is_zero(s.nil.a[i])) nil.push_back({i, elem_to_json(s.nil.a[i])});
  j["nilpart"] = nil;
  j["precision"] = Z.N;
  return j;
}

// ---- admissible sets ----------------------------------------------------------------

inline json adm_to_json(const AdmissibleSet& A) {
  json j;
  j["h"] = A.h;
  j["d"] = A.d;
  json els = json::array();
  for (const auto& e : A.elements) {
    json el;
    el["window"] = e.win;
    el["length"] = aff_length(e);
    els.push_back(el);
  }
  j["elements"] = els;
  json edges = json::array();
  for (const auto& [i, k] : A.covers) edges.push_back({i, k});
  j["coverEdges"] = edges;
  j["extremes"] = A.extremes;
  return j;
}

inline std::string adm_to_dot(const AdmissibleSet& A) {
  std::string s = "digraph adm {\n  rankdir=BT;\n";
  for (size_t i = 0; i < A.elements.size(); ++i)
    s += "  n" + std::to_string(i) + " [label=\"" + aff_show(A.elements[i]) + " l=" +
         std::to_string(aff_length(A.elements[i])) + "\"];\n";
  for (const auto& [i, k] : A.covers)
    s += "  n" + std::to_string(i) + " -> n" + std::to_string(k) + ";\n";
  s += "}\n";
  return s;
}

} // namespace wd

#endif
