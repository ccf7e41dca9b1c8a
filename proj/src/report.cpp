#include "tatelab/report.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <set>

namespace tatelab {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

struct Outcome {
    bool ok = false;
    Json expected;
    Json actual;
};

Outcome equal_outcome(Json expected, Json actual) {
    bool ok = expected == actual;
    return {ok, std::move(expected), std::move(actual)};
}

template <class F>
void run_check(Report& rep, const std::string& id, const std::string& anchor, F&& f) {
    auto t0 = Clock::now();
    Outcome o;
    try {
        o = f();
    } catch (const std::exception& ex) {
        o = {false, "no exception", std::string("exception: ") + ex.what()};
    }
    rep.checks.push_back(
        {id, o.ok ? "pass" : "fail", std::move(o.expected), std::move(o.actual), anchor,
         ms_since(t0)});
}

void skip_check(Report& rep, const std::string& id, const std::string& anchor,
                const std::string& why) {
    rep.checks.push_back({id, "skipped", Json(), Json(why), anchor, 0});
}

std::string mono_name(const Monomial& m, const std::vector<std::string>& vars) {
    if (m.degree() == 0) return "1";
    std::string s;
    for (size_t v = 0; v < vars.size(); ++v)
        for (int e = 0; e < m.e[v]; ++e)
            s += static_cast<char>(std::tolower(static_cast<unsigned char>(vars[v][0])));
    return s;
}

bool rmat_equal(const RMatrix& a, const RMatrix& b) {
    return a.tgt.twists == b.tgt.twists && a.src.twists == b.src.twists && a.ent == b.ent;
}

/* Coefficients of 1/(1 - 6t + 6t^2 - t^3), the inverse Hilbert series of
 * the quotient: the graded deviations of a Koszul algebra with Hilbert
 * function (1,6,6,1). */
std::vector<long> koszul_betti_series(int n) {
    std::vector<long> b{1};
    for (int i = 1; i <= n; ++i) {
        long v = 6 * b[i - 1];
        if (i >= 2) v -= 6 * b[i - 2];
        if (i >= 3) v += b[i - 3];
        b.push_back(v);
    }
    return b;
}

// ------------------------------------------------------------------ ring

void ring_suite(Workspace& ws, Report& rep) {
    run_check(rep, "ring.basis",
              "the quotient has the 14-element monomial basis 1, t, u, v, x, y, z, tv, uv, vx, "
              "vy, vz, tx, tvx",
              [&]() {
                  const GradedAlgebra& A = ws.R();
                  std::vector<std::string> names;
                  for (const Monomial& m : A.basis()) names.push_back(mono_name(m, A.var_names()));
                  std::vector<std::string> want = {"1",  "t",  "u",  "v",  "x",  "y",  "z",
                                                   "tv", "uv", "vx", "vy", "vz", "tx", "tvx"};
                  std::sort(names.begin(), names.end());
                  std::sort(want.begin(), want.end());
                  return equal_outcome(Json(want), Json(names));
              });

    run_check(rep, "ring.hilbert", "the Hilbert function of the quotient is (1, 6, 6, 1)",
              [&]() { return equal_outcome(Json({1, 6, 6, 1}), Json(ws.R().hilbert_function())); });

    run_check(rep, "ring.groebner",
              "the 15 marked quadrics form a Groebner basis: standard-monomial counts agree "
              "with the quotient dimensions in every degree",
              [&]() {
                  const GradedAlgebra& A = ws.R();
                  GroebnerEvidence ev =
                      groebner_check_by_hilbert(A.marked_basis(), A.nvars(), 6, A.field());
                  Json exp = {{"ok", true}, {"quotient_dims", {1, 6, 6, 1, 0, 0, 0}}};
                  Json act = {{"ok", ev.ok}, {"quotient_dims", ev.quotient_dims}};
                  return equal_outcome(exp, act);
              });

    run_check(rep, "ring.multtable",
              "the nonzero products of a degree-1 by a degree-2 basis element are exactly "
              "t*vx = u*vz = v*tx = x*tv = x*vx = y*vy = z*uv = s and z*tx = -alpha*s, "
              "with s = tvx",
              [&]() {
                  const GradedAlgebra& A = ws.R();
                  const FieldConfig& cfg = A.field();
                  int sidx = -1;
                  for (int i = 0; i < A.dim(); ++i)
                      if (mono_name(A.basis()[i], A.var_names()) == "tvx") sidx = i;
                  std::map<std::pair<std::string, std::string>, Scalar> table = {
                      {{"t", "vx"}, cfg.one()},  {{"u", "vz"}, cfg.one()},
                      {{"v", "tx"}, cfg.one()},  {{"x", "tv"}, cfg.one()},
                      {{"x", "vx"}, cfg.one()},  {{"y", "vy"}, cfg.one()},
                      {{"z", "uv"}, cfg.one()},  {{"z", "tx"}, -cfg.alpha()}};
                  long nonzero = 0;
                  std::vector<std::string> mismatches;
                  for (int i = 0; i < A.dim(); ++i) {
                      if (A.basis_degree(i) != 1) continue;
                      for (int j = 0; j < A.dim(); ++j) {
                          if (A.basis_degree(j) != 2) continue;
                          std::string ni = mono_name(A.basis()[i], A.var_names());
                          std::string nj = mono_name(A.basis()[j], A.var_names());
                          SVec want;
                          auto it = table.find({ni, nj});
                          if (it != table.end()) want = SVec{{sidx, it->second}};
                          const SVec& got = A.product(i, j);
                          if (!got.empty()) ++nonzero;
                          if (got != want) mismatches.push_back(ni + "*" + nj);
                      }
                  }
                  Json exp = {{"nonzero_products", 8}, {"mismatches", Json::array()}};
                  Json act = {{"nonzero_products", nonzero}, {"mismatches", mismatches}};
                  return equal_outcome(exp, act);
              });

    run_check(rep, "ring.assoc",
              "the tabulated structure constants define an associative product",
              [&]() { return equal_outcome(Json(true), Json(ws.R().check_associativity())); });

    run_check(rep, "ring.socle",
              "the socle is one-dimensional, spanned by s = tvx; the ring is Gorenstein",
              [&]() {
                  const GradedAlgebra& A = ws.R();
                  std::vector<SVec> soc = A.socle();
                  int sidx = -1;
                  for (int i = 0; i < A.dim(); ++i)
                      if (mono_name(A.basis()[i], A.var_names()) == "tvx") sidx = i;
                  bool spans_s = soc.size() == 1 && soc[0].size() == 1 && soc[0][0].first == sidx;
                  Json exp = {{"dim", 1}, {"generator", "tvx"}, {"gorenstein", true}};
                  Json act = {{"dim", soc.size()},
                              {"generator", spans_s ? "tvx" : "other"},
                              {"gorenstein", A.is_gorenstein()}};
                  return equal_outcome(exp, act);
              });
}

// ---------------------------------------------------------------- invsys

void invsys_suite(Workspace& ws, Report& rep) {
    const FieldConfig& cfg = ws.options().cfg;
    try {
        require_invsys_field(cfg);
    } catch (const ConfigError& ex) {
        for (const char* id : {"invsys.annihilator", "invsys.apolarity",
                               "invsys.reject_extra_generator", "invsys.reject_wrong_form",
                               "invsys.socle_pairing"})
            skip_check(rep, id, "inverse-system certificate", ex.what());
        return;
    }
    const GradedAlgebra& A = ws.R();
    DPElement F = apolar_form(cfg);

    run_check(rep, "invsys.socle_pairing",
              "contraction of the socle representative: (TVX) o F = 6 (so s is nonzero "
              "in P/Ann(F))",
              [&]() {
                  Poly g = parse_poly("T*V*X", A.var_names(), cfg);
                  DPElement r = contract(g, F);
                  std::string got = r.is_zero() ? "0" : r.terms.begin()->second.str();
                  return equal_outcome(Json(cfg.from_long(6).str()), Json(got));
              });

    run_check(rep, "invsys.annihilator",
              "the annihilator of F has dimensions 0, 15, 55, 126 in degrees 1..4",
              [&]() {
                  std::vector<long> dims;
                  for (int d = 1; d <= 4; ++d) dims.push_back(annihilator_dim(F, d, cfg).dim);
                  return equal_outcome(Json({0, 15, 55, 126}), Json(dims));
              });

    run_check(rep, "invsys.apolarity",
              "the 15 quadrics generate Ann(F) in degrees <= 3, so the quotient is the "
              "Gorenstein ring with Hilbert function (1, 6, 6, 1)",
              [&]() {
                  ApolarityEvidence ev = verify_apolarity(A.marked_basis(), F, cfg);
                  Json exp = {{"ok", true}, {"quotient_hf", {1, 6, 6, 1, 0}}};
                  Json act = {{"ok", ev.ok}, {"quotient_hf", ev.quotient_hf}};
                  return equal_outcome(exp, act);
              });

    run_check(rep, "invsys.reject_extra_generator",
              "adding the generator TVX breaks the certificate (TVX o F = 6 != 0)",
              [&]() {
                  MarkedBasis I2 = A.marked_basis();
                  Monomial tvx = Monomial::var(0) * Monomial::var(2) * Monomial::var(3);
                  I2.gens.emplace_back(parse_poly("T*V*X", A.var_names(), cfg), tvx);
                  ApolarityEvidence ev = verify_apolarity(I2, F, cfg);
                  return equal_outcome(Json(false), Json(ev.ok));
              });

    run_check(rep, "invsys.reject_wrong_form",
              "replacing F by the single cube tX^3 fails the certificate (its annihilator "
              "has Hilbert function (1, 1, 1, 1))",
              [&]() {
                  DPElement F2 = parse_dp_form("tX^3", cfg);
                  ApolarityEvidence ev = verify_apolarity(A.marked_basis(), F2, cfg);
                  return equal_outcome(Json(false), Json(ev.ok));
              });
}

// --------------------------------------------------------------- complex

void complex_suite(Workspace& ws, Report& rep) {
    const int neg = ws.options().neg;
    const int pos = ws.options().pos;

    run_check(rep, "complex.d2", "the explicit complete resolution C satisfies d o d = 0",
              [&]() { return equal_outcome(Json(true), Json(ws.C().check_d2())); });

    run_check(rep, "complex.minimal",
              "every differential entry of C lies in the maximal ideal",
              [&]() { return equal_outcome(Json(true), Json(ws.C().check_minimal())); });

    run_check(rep, "complex.negative_ranks",
              "C_i has rank 2 for all i <= 0 and rank 3 at i = 1 (eventual periodicity of "
              "the negative tail)",
              [&]() {
                  const Complex& C = ws.C();
                  Json exp = Json::array(), act = Json::array();
                  for (int i = -neg; i <= 1; ++i) {
                      exp.push_back(i <= 0 ? 2 : 3);
                      act.push_back(C.at(i).rank());
                  }
                  return equal_outcome(exp, act);
              });

    run_check(rep, "complex.exactness",
              "C is exact: the homology of C vanishes at every computed interior spot "
              "-8 <= i <= 3",
              [&]() {
                  const Complex& C = ws.C();
                  Json exp = Json::array(), act = Json::array();
                  for (int i = std::max(-8, -neg + 1); i <= std::min(3, pos - 1); ++i) {
                      exp.push_back(0);
                      act.push_back(C.homology_dim(i));
                  }
                  return equal_outcome(exp, act);
              });

    run_check(rep, "complex.image_dim",
              "the image of d_i has k-dimension 14 for every i <= 0 (the periodic syzygies "
              "all have length 14)",
              [&]() {
                  const Complex& C = ws.C();
                  Json exp = Json::array(), act = Json::array();
                  for (int i = -neg + 1; i <= 0; ++i) {
                      exp.push_back(14);
                      act.push_back(C.image_dim(i));
                  }
                  return equal_outcome(exp, act);
              });

    run_check(rep, "complex.d0_dual",
              "the dual of d_0 = [[v, y], [alpha x, z]] is its transpose [[v, alpha x], [y, z]]",
              [&]() {
                  const GradedAlgebra& A = ws.R();
                  RMatrix dd = ws.C().d(0).dual(A);
                  bool ok = dd.ent.size() == 2 && dd.ent[0].size() == 2 &&
                            dd.ent[0][0] == A.parse("V").coeffs() &&
                            dd.ent[0][1] == A.parse("alpha*X").coeffs() &&
                            dd.ent[1][0] == A.parse("Y").coeffs() &&
                            dd.ent[1][1] == A.parse("Z").coeffs();
                  return equal_outcome(Json(true), Json(ok));
              });

    run_check(rep, "complex.dual_involution",
              "dualizing the complete resolution twice returns the original complex",
              [&]() {
                  const Complex& C = ws.C();
                  Complex CC = C.dualized().dualized();
                  bool ok = CC.lo == C.lo && CC.mods.size() == C.mods.size();
                  for (int i = C.lo; ok && i <= C.hi(); ++i) {
                      ok = CC.at(i).twists == C.at(i).twists;
                      if (ok && i > C.lo) ok = rmat_equal(CC.d(i), C.d(i));
                  }
                  return equal_outcome(Json(true), Json(ok));
              });

    run_check(rep, "complex.dual_exactness",
              "the dual complex Hom(C, R) is exact at every computed interior spot "
              "-3 <= j <= 8 (total acyclicity)",
              [&]() {
                  Json exp = Json::array(), act = Json::array();
                  const Complex& T = ws.T();
                  for (int j = std::max(-3, T.lo + 1); j <= std::min(8, T.hi() - 1); ++j) {
                      exp.push_back(0);
                      act.push_back(T.homology_dim(j));
                  }
                  return equal_outcome(exp, act);
              });

    if (!ws.options().growth) {
        for (const char* id : {"growth.fibonacci_bound", "growth.ranks",
                               "growth.strictly_increasing"})
            skip_check(rep, id, "exponential rank growth of the positive tail",
                       "growth checks disabled for this run");
        return;
    }

    // the three growth checks share the kernel of the last differential
    std::vector<long> ranks;
    long next_low_block = 0;  // degree-(pos+1) generators of the next syzygy module
    run_check(rep, "growth.ranks",
              "the positive-tail ranks match the prediction rank C_i = b_{i-2} + b_{i-1} + 2 "
              "from the inverse Hilbert series coefficients b_j; the next syzygy module "
              "starts with b_{pos-1} + 2 generators in its minimal degree",
              [&]() {
                  const Complex& C = ws.C();
                  for (int i = 2; i <= pos; ++i) ranks.push_back(C.at(i).rank());
                  // the kernel of d_pos starts in degree pos + 1, so its lowest
                  // slice is exactly the lowest block of minimal generators
                  const auto& K = ws.pos_kernel();
                  if (!K.empty() && K.begin()->first == pos + 1)
                      next_low_block = static_cast<long>(K.begin()->second.size());
                  std::vector<long> b = koszul_betti_series(pos);
                  std::vector<long> pred;
                  for (int i = 2; i <= pos; ++i) pred.push_back(b[i - 2] + b[i - 1] + 2);
                  Json exp = {{"ranks", pred}, {"next_low_block", b[pos - 1] + 2}};
                  Json act = {{"ranks", ranks}, {"next_low_block", next_low_block}};
                  return equal_outcome(exp, act);
              });

    run_check(rep, "growth.fibonacci_bound",
              "rank C_{i+2} is bounded below by the coefficients of (2 + t)/(1 - t - t^2); "
              "for the first uncomputed spot the lowest generator block already exceeds "
              "the bound",
              [&]() {
                  std::vector<long> vals = ranks;
                  if (next_low_block > 0) vals.push_back(next_low_block);
                  std::vector<long> fib = fib_lower_bound(static_cast<int>(vals.size()) - 1);
                  bool ok = true;
                  for (size_t i = 0; i < vals.size(); ++i) ok = ok && vals[i] >= fib[i];
                  Json act = {{"ranks", vals}, {"bounds", fib}, {"ok", ok}};
                  Json exp = {{"ranks", vals}, {"bounds", fib}, {"ok", true}};
                  return equal_outcome(exp, act);
              });

    run_check(rep, "growth.strictly_increasing",
              "the positive-tail ranks are strictly increasing on the computed range",
              [&]() {
                  bool ok = !ranks.empty();
                  for (size_t i = 1; i < ranks.size(); ++i) ok = ok && ranks[i] > ranks[i - 1];
                  return equal_outcome(Json(true), Json(ok));
              });
}

// -------------------------------------------------------------- homology

void homology_suite(Workspace& ws, Report& rep) {
    const SuiteOptions& opt = ws.options();

    run_check(rep, "betti.k",
              "the Betti numbers of k are the coefficients of the inverse Hilbert series "
              "1/(1 - 6t + 6t^2 - t^3): 1, 6, 30, 145, 696",
              [&]() {
                  return equal_outcome(Json(koszul_betti_series(opt.depth_k)),
                                       Json(ws.res("k", opt.depth_k).betti()));
              });

    run_check(rep, "betti.k_linear",
              "the minimal resolution of k is linear on the computed range (the ring is "
              "Koszul there)",
              [&]() {
                  return equal_outcome(Json(true), Json(ws.res("k", opt.depth_k).is_linear()));
              });

    run_check(rep, "betti.presets",
              "Betti numbers of the distinguished modules: M is totally 2-periodic; the "
              "others grow along the positive tail of C",
              [&]() {
                  Json exp = {{"M", {2, 2, 2, 2, 2, 2, 2, 2, 2}},
                              {"N", {1, 5, 24, 115, 551}},
                              {"E", {9, 38, 177, 843}},
                              {"CokerD1", {2, 3, 9, 38}},
                              {"Mstar", {3, 9, 38, 177, 843}}};
                  Json act = {{"M", ws.res("M", opt.depth).betti()},
                              {"N", ws.res("N", 4).betti()},
                              {"E", ws.res("E", 3).betti()},
                              {"CokerD1", ws.res("CokerD1", 3).betti()},
                              {"Mstar", ws.res("Mstar", 4).betti()}};
                  return equal_outcome(exp, act);
              });

    run_check(rep, "tate.ext_vanish",
              "stable cohomology vanishes in positive degrees: Ext^i(M, N) = 0 for "
              "1 <= i <= 8 computed from the complete resolution",
              [&]() {
                  Json exp = Json::array(), act = Json::array();
                  for (int i = 1; i <= 8; ++i) {
                      exp.push_back(0);
                      act.push_back(tate_ext_dim(ws.T(), ws.mod("N"), i));
                  }
                  return equal_outcome(exp, act);
              });

    run_check(rep, "tate.tor_vanish",
              "stable homology vanishes in positive degrees: Tor_i(M, N) = 0 for 1 <= i <= 8",
              [&]() {
                  Json exp = Json::array(), act = Json::array();
                  for (int i = 1; i <= 8; ++i) {
                      exp.push_back(0);
                      act.push_back(tate_tor_dim(ws.T(), ws.mod("N"), i));
                  }
                  return equal_outcome(exp, act);
              });

    run_check(rep, "tate.ext_nonvanish",
              "stable cohomology is nonzero in every computed negative degree -5 <= i <= -1 "
              "(the asymmetric vanishing window)",
              [&]() {
                  std::vector<long> dims;
                  bool ok = true;
                  for (int i = -5; i <= -1; ++i) {
                      long d = tate_ext_dim(ws.T(), ws.mod("N"), i);
                      dims.push_back(d);
                      ok = ok && d > 0;
                  }
                  Json act = {{"dims", dims}, {"all_positive", ok}};
                  Json exp = {{"dims", dims}, {"all_positive", true}};
                  return equal_outcome(exp, act);
              });

    run_check(rep, "tate.tor_nonvanish",
              "stable homology is nonzero in every computed negative degree -5 <= i <= -1",
              [&]() {
                  std::vector<long> dims;
                  bool ok = true;
                  for (int i = -5; i <= -1; ++i) {
                      long d = tate_tor_dim(ws.T(), ws.mod("N"), i);
                      dims.push_back(d);
                      ok = ok && d > 0;
                  }
                  Json act = {{"dims", dims}, {"all_positive", ok}};
                  Json exp = {{"dims", dims}, {"all_positive", true}};
                  return equal_outcome(exp, act);
              });

    run_check(rep, "tate.matches_ext",
              "stable and ordinary cohomology agree in positive degrees: the complete "
              "resolution and the minimal resolution of M give the same Ext^i(M, N) for "
              "1 <= i <= 8",
              [&]() {
                  Json exp = Json::array(), act = Json::array();
                  for (int i = 1; i <= 8; ++i) {
                      exp.push_back(ext_dim(ws.res("M", opt.depth), ws.mod("N"), i));
                      act.push_back(tate_ext_dim(ws.T(), ws.mod("N"), i));
                  }
                  return equal_outcome(exp, act);
              });

    run_check(rep, "tate.shift_tor",
              "negative stable cohomology is stable homology of the transpose: "
              "Ext^{-i-1}(M, N) = Tor_i(M*, N) for 1 <= i <= 4",
              [&]() {
                  Json exp = Json::array(), act = Json::array();
                  for (int i = 1; i <= 4; ++i) {
                      exp.push_back(tor_dim(ws.res("Mstar", 4), ws.mod("N"), i));
                      act.push_back(tate_ext_dim(ws.T(), ws.mod("N"), -i - 1));
                  }
                  return equal_outcome(exp, act);
              });

    run_check(rep, "ext.nm",
              "cohomology in the opposite order never vanishes: Ext^i(N, M) > 0 for "
              "0 <= i <= 4",
              [&]() {
                  std::vector<long> dims;
                  bool ok = true;
                  for (int i = 0; i <= 4; ++i) {
                      long d = ext_dim(ws.res("N", 4), ws.mod("M"), i);
                      dims.push_back(d);
                      ok = ok && d > 0;
                  }
                  Json act = {{"dims", dims}, {"all_positive", ok}};
                  Json exp = {{"dims", dims}, {"all_positive", true}};
                  return equal_outcome(exp, act);
              });

    run_check(rep, "ext.nm_top",
              "Ext^5(N, M) > 0, computed as Tor_5(M*, N) via duality over the "
              "self-injective ring, using the positive tail of C as the resolution of M*",
              [&]() {
                  const Complex& C = ws.C();
                  Resolution r;
                  r.A = &ws.R();
                  r.module = ws.mod("Mstar");
                  r.d.push_back(RMatrix::zero(FreeModule{}, FreeModule{}));
                  for (int i = 1; i <= opt.pos; ++i) {
                      r.F.push_back(FreeModule{C.at(i).twists});
                      if (i >= 2) r.d.push_back(C.d(i));
                  }
                  r.top_kernel = ws.pos_kernel();
                  long d = tor_dim(r, ws.mod("N"), opt.pos - 1);
                  Json act = {{"dim", d}, {"positive", d > 0}};
                  Json exp = {{"dim", d}, {"positive", true}};
                  return equal_outcome(exp, act);
              });

    run_check(rep, "matlis.pairing",
              "Matlis duality pairs homology with cohomology: Tor_i(N, M^v) and Ext^i(N, M) "
              "have equal dimension for 0 <= i <= 4",
              [&]() {
                  Json exp = Json::array(), act = Json::array();
                  for (int i = 0; i <= 4; ++i) {
                      exp.push_back(ext_dim(ws.res("N", 4), ws.mod("M"), i));
                      act.push_back(tor_dim(ws.res("N", 4), ws.mod("Mdual"), i));
                  }
                  return equal_outcome(exp, act);
              });

    run_check(rep, "bass.r",
              "the ring is self-injective: its Bass numbers are 1, 0, 0, 0, 0",
              [&]() {
                  std::vector<long> mu;
                  for (int i = 0; i <= 4; ++i)
                      mu.push_back(ext_dim(ws.res("k", opt.depth_k), ws.mod("R"), i));
                  return equal_outcome(Json({1, 0, 0, 0, 0}), Json(mu));
              });

    run_check(rep, "bass.duality",
              "Bass numbers are Betti numbers of the transpose: mu^i(X) = beta_i(Hom(X, R)) "
              "for X in {N, CokerD1, M} and 0 <= i <= 4",
              [&]() {
                  Json exp, act;
                  for (auto& [name, dual] :
                       std::vector<std::pair<std::string, std::string>>{
                           {"N", "Nstar"}, {"CokerD1", "CokerD1star"}, {"M", "Mstar"}}) {
                      std::vector<long> mu;
                      for (int i = 0; i <= 4; ++i)
                          mu.push_back(ext_dim(ws.res("k", opt.depth_k), ws.mod(name), i));
                      exp[name] = mu;
                      act[name] = ws.res(dual, 4).betti();
                  }
                  return equal_outcome(exp, act);
              });

    run_check(rep, "length2.family",
              "for a family of random modules L of length 2, both Ext^i(E, L) and "
              "Tor_i(E, L) are nonzero for 1 <= i <= 3 (no finite projective dimension "
              "phenomena among short modules)",
              [&]() {
                  const Resolution& rE = ws.res("E", 3);
                  std::vector<std::string> failures;
                  for (int s = 0; s < opt.seeds; ++s) {
                      unsigned long long seed = opt.seed0 + static_cast<unsigned long long>(s);
                      FpModule L = random_length2_module(ws.R(), seed);
                      for (int i = 1; i <= 3; ++i) {
                          if (ext_dim(rE, L, i) <= 0)
                              failures.push_back("ext seed " + std::to_string(seed) + " i " +
                                                 std::to_string(i));
                          if (tor_dim(rE, L, i) <= 0)
                              failures.push_back("tor seed " + std::to_string(seed) + " i " +
                                                 std::to_string(i));
                      }
                  }
                  Json exp = {{"seeds", opt.seeds}, {"failures", Json::array()}};
                  Json act = {{"seeds", opt.seeds}, {"failures", failures}};
                  return equal_outcome(exp, act);
              });
}

// ------------------------------------------------------------- auslander

void auslander_suite(Workspace& ws, Report& rep) {
    for (int q : ws.options().qs) {
        run_check(rep, "auslander.q" + std::to_string(q),
                  "Ext^i(M, N_q) vanishes exactly outside {0, q-1, q}: arbitrarily long "
                  "finite gaps between nonvanishing degrees",
                  [&]() {
                      const Resolution& rM = ws.res("M", ws.options().depth);
                      const FpModule& Nq = ws.mod("Nq", q);
                      std::set<int> want{0, q - 1, q};
                      std::vector<long> dims;
                      std::vector<int> nonzero;
                      for (int i = 0; i <= q + 4; ++i) {
                          long d = ext_dim(rM, Nq, i);
                          dims.push_back(d);
                          if (d > 0) nonzero.push_back(i);
                      }
                      Json exp = {{"nonzero", std::vector<int>(want.begin(), want.end())}};
                      Json act = {{"nonzero", nonzero}, {"dims", dims}};
                      bool ok = exp["nonzero"] == act["nonzero"];
                      return Outcome{ok, exp, act};
                  });
    }
}

}  // namespace

// ------------------------------------------------------------ Workspace

const GradedAlgebra& Workspace::R() {
    if (!R_) {
        opt_.cfg.validate();
        auto pres = parse_presentation(preset_presentation_text("gorenstein-cd6"), opt_.cfg);
        R_ = GradedAlgebra::build(pres, opt_.cfg);
    }
    return *R_;
}

const Complex& Workspace::C() {
    if (!C_) C_ = build_complete_resolution(opt_.neg, opt_.pos, R());
    return *C_;
}

const Complex& Workspace::T() {
    if (!T_) T_ = C().dualized();
    return *T_;
}

const FpModule& Workspace::mod(const std::string& name, int q) {
    std::string key = name == "Nq" ? name + ":" + std::to_string(q) : name;
    auto it = mods_.find(key);
    if (it != mods_.end()) return it->second;
    FpModule m;
    if (name == "Nstar")
        m = r_dual(mod("N")).mod;
    else if (name == "CokerD1star")
        m = r_dual(mod("CokerD1")).mod;
    else if (name == "Mdual")
        m = matlis_dual(mod("M"));
    else
        m = preset_module(name, R(), q);
    return mods_.emplace(key, std::move(m)).first->second;
}

const Resolution& Workspace::res(const std::string& name, int depth, int q) {
    std::string key = name == "Nq" ? name + ":" + std::to_string(q) : name;
    auto it = ress_.find(key);
    if (it != ress_.end() && it->second.depth() >= depth) return it->second;
    Resolution r = min_free_resolution(mod(name, q), depth);
    return ress_.insert_or_assign(key, std::move(r)).first->second;
}

const std::map<int, std::vector<SVec>>& Workspace::pos_kernel() {
    if (!pos_kernel_) pos_kernel_ = graded_kernel(R(), C().d(opt_.pos));
    return *pos_kernel_;
}

// --------------------------------------------------------------- Report

int Report::count(const std::string& status) const {
    int n = 0;
    for (const CheckResult& c : checks)
        if (c.status == status) ++n;
    return n;
}

Json Report::to_json() const {
    Json j;
    j["version"] = version;
    j["field"] = field;
    j["checks"] = Json::array();
    for (const CheckResult& c : checks) {
        Json jc;
        jc["id"] = c.id;
        jc["status"] = c.status;
        jc["expected"] = c.expected;
        jc["actual"] = c.actual;
        jc["paper_anchor"] = c.paper_anchor;
        jc["runtime_ms"] = c.runtime_ms;
        j["checks"].push_back(std::move(jc));
    }
    j["summary"] = {{"pass", count("pass")}, {"fail", count("fail")},
                    {"skipped", count("skipped")}};
    return j;
}

void emit_json(const Report& rep, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open report path " + path);
    out << rep.to_json().dump(2) << "\n";
    if (!out) throw ConfigError("failed writing report to " + path);
}

Report run_suite(const std::string& suite, Workspace& ws) {
    Report rep;
    rep.version = "0.1.0";
    rep.field = ws.options().cfg.describe();
    bool all = suite == "all";
    bool known = all;
    try {
        if (all || suite == "ring") ring_suite(ws, rep), known = true;
        if (all || suite == "invsys") invsys_suite(ws, rep), known = true;
        if (all || suite == "complex") complex_suite(ws, rep), known = true;
        if (all || suite == "homology") homology_suite(ws, rep), known = true;
        if (all || suite == "auslander") auslander_suite(ws, rep), known = true;
        if (!known) throw ConfigError("unknown suite '" + suite + "'");
    } catch (const ConfigError& ex) {
        rep.checks.push_back({"config", "fail", Json("valid configuration"), Json(ex.what()),
                              "configuration contract", 0});
    }
    std::sort(rep.checks.begin(), rep.checks.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    return rep;
}

Report run_suite(const std::string& suite, const SuiteOptions& opt) {
    Workspace ws(opt);
    return run_suite(suite, ws);
}

}  // namespace tatelab
