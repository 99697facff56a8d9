// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "unit/m2_oracle.hpp"
#include "wqg/bialgebroid.hpp"
#include "wqg/cli.hpp"
#include "wqg/duality.hpp"
#include "wqg/errors.hpp"
#include "wqg/frobenius.hpp"
#include "wqg/hopf.hpp"
#include "wqg/io.hpp"
#include "wqg/repcat.hpp"
#include "wqg/weak.hpp"
#include "wqg/zoo.hpp"

using namespace wqg;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F5 = FieldSpec::prime(5);

/// Failed sub-checks of the criterion being run.
struct Log {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Instance {
  std::string name;
  WeakBialgebra h;
};

std::vector<Instance> instances() {
  std::vector<Instance> out;
  for (FieldSpec f : {Q, F5}) {
    const std::string s = "/" + f.to_string();
    out.push_back({"PG2" + s, fixtures::pg(2, f)});
    out.push_back({"PG3" + s, fixtures::pg(3, f)});
    out.push_back({"K2" + s, fixtures::k2(f)});
    out.push_back({"MX" + s, fixtures::mx(f)});
    out.push_back({"PG2*" + s, groupoid_function_algebra(pair_groupoid(2), f)});
    out.push_back({"PG3*" + s, groupoid_function_algebra(pair_groupoid(3), f)});
    FsBialgebroid e = fixtures::eb2(f);
    out.push_back({"EB2w" + s, bialgebroid_to_weak(e, e.base)});
  }
  return out;
}

bool same_tensors(const WeakBialgebra& a, const WeakBialgebra& b) {
  return a.algebra == b.algebra && a.coalgebra == b.coalgebra;
}

CheckReport full_check(const WeakBialgebra& h) {
  CheckReport r = check_weak_bialgebra(h);
  if (r.overall()) {
    r.append(verify_counital_identities(h), "counital.");
    r.append(antiiso_check(h), "antiiso.");
    if (h.antipode) r.append(verify_antipode(h, *h.antipode), "antipode.");
  }
  return r;
}

void criterion1(Log& log) {
  for (const auto& [name, h] : instances()) {
    log.expect(check_weak_bialgebra(h).overall(), name + " check_weak_bialgebra");
    log.expect(verify_counital_identities(h).overall(), name + " verify_counital_identities");
    log.expect(antiiso_check(h).overall(), name + " antiiso_check");
    log.expect(verify_ifs(counital_data(h).ifs_t).overall(), name + " target IFS");
  }
}

void criterion2(Log& log) {
  const WeakBialgebra pg2 = fixtures::pg(2, Q);
  const std::size_t n = pg2.dim();
  // unit, counit, mul, comul, antipode entries in this order
  const std::size_t total = n + n + n * n * n + n * n * n + n * n;
  for (std::size_t k = 0; k < 20; ++k) {
    std::size_t p = (k * 7) % total;
    Vector unit = pg2.one(), counit = pg2.coalgebra.counit();
    Tensor3 mul = pg2.algebra.mul(), comul = pg2.coalgebra.comul();
    Matrix s = *pg2.antipode;
    const Scalar one = Scalar::one(Q);
    std::string where;
    if (p < n) {
      unit[p] += one;
      where = "unit[" + std::to_string(p) + "]";
    } else if ((p -= n) < n) {
      counit[p] += one;
      where = "counit[" + std::to_string(p) + "]";
    } else if ((p -= n) < n * n * n) {
      mul(p / (n * n), p / n % n, p % n) += one;
      where = "mul[" + std::to_string(p) + "]";
    } else if ((p -= n * n * n) < n * n * n) {
      comul(p / (n * n), p / n % n, p % n) += one;
      where = "comul[" + std::to_string(p) + "]";
    } else {
      p -= n * n * n;
      s(p / n, p % n) += one;
      where = "antipode[" + std::to_string(p) + "]";
    }
    WeakBialgebra m(FinDimAlgebra(Q, n, mul, unit), FinDimCoalgebra(Q, n, comul, counit), s);
    CheckReport r = full_check(m);
    bool witnessed = false;
    for (const auto& it : r.items) witnessed = witnessed || (!it.passed && !it.witnesses.empty());
    log.expect(!r.overall() && witnessed, "mutation " + where + " not caught with a witness");
  }
}

void criterion3(Log& log) {
  for (const auto& [name, h] : instances()) {
    FsBialgebroid l = weak_to_bialgebroid(h);
    log.expect(same_tensors(bialgebroid_to_weak(l, l.base), h), name + " round trip");
  }
}

void criterion4(Log& log) {
  FsBialgebroid l = fixtures::ebm2(Q);
  FrobeniusSystem s2 = fixtures::m2_second_ifs(Q);
  log.expect(verify_ifs(l.base).overall() && verify_ifs(s2).overall(), "both systems are IFSs");
  log.expect(!(l.base.phi == s2.phi), "the systems are distinct");
  WeakBialgebra h1 = bialgebroid_to_weak(l, l.base);
  WeakBialgebra h2 = bialgebroid_to_weak(l, s2);
  Vector t = l.src(compare_frobenius_systems(l.base, s2));
  auto tinv = algebra_inverse(h1.algebra, t);
  log.expect(tinv.has_value(), "t invertible");
  if (!tinv) return;
  const std::size_t n = h1.dim();
  for (std::size_t i = 0; i < n; ++i) {
    Vector x = h1.basis(i);
    log.expect(h2.delta(x) == apply_axis(h1.algebra.left_mult(*tinv), h1.delta(x), n, n, 1),
               "Delta_psi on basis " + std::to_string(i));
    log.expect(h2.eps(x) == h1.eps(h1.mul(t, x)), "eps_psi on basis " + std::to_string(i));
  }
  log.expect(same_tensors(twist_weak(h1, t), h2), "twist_weak reproduces the second structure");
  log.expect(!same_tensors(h1, h2), "the twist is nontrivial");
}

void criterion5(Log& log) {
  for (const auto& [name, h] : instances()) {
    WeakBialgebra plain = h;
    plain.antipode.reset();
    const bool beta = beta_map(plain).bijective;
    auto solved = solve_antipode(plain);
    const bool has = std::holds_alternative<Matrix>(solved);
    const bool tak = check_tak_hopf(weak_to_bialgebroid(plain));
    log.expect(beta == has && has == tak, name + " beta / solver / bialgebroid criterion disagree");
    if (has) log.expect(verify_antipode(plain, std::get<Matrix>(solved)).overall(), name + " solved antipode");
  }
  WeakBialgebra pg2 = fixtures::pg(2, Q);
  pg2.antipode.reset();
  auto s = solve_antipode(pg2);
  bool transposition = std::holds_alternative<Matrix>(s);
  for (std::size_t i = 0; transposition && i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      transposition = transposition && std::get<Matrix>(s).col(i * 2 + j) == pg2.basis(j * 2 + i);
  log.expect(transposition, "PG2 antipode is g_ij -> g_ji");
  auto mx = solve_antipode(fixtures::mx(Q));
  const auto* nh = std::get_if<NotHopf>(&mx);
  log.expect(nh && nh->rank == 3 && nh->codomain_dim == 4, "MX is NotHopf with rank 3 of 4");
}

void criterion6(Log& log) {
  for (const auto& h : {fixtures::pg(2, Q), fixtures::pg(3, Q), fixtures::k2(Q)}) {
    EvaluationPairing e = evaluation_pairing(h);
    log.expect(check_weak_skew_pairing(e.pairing).overall(), "evaluation pairing axioms, dim " + std::to_string(h.dim()));
    log.expect(e.nondegenerate_lambda && e.nondegenerate_h, "nondegeneracy, dim " + std::to_string(h.dim()));
    log.expect(h.antipode && dual_weak_bialgebra(h).antipode == h.antipode->transpose(),
               "dual antipode is the transpose, dim " + std::to_string(h.dim()));
  }
  CheckReport plain = check_weak_skew_pairing(evaluation_pairing(fixtures::pg(2, Q), false).pairing);
  log.expect(!plain.overall(), "un-opped pairing on PG2 passes every axiom (PG2 is cocommutative)");
}

void criterion7(Log& log) {
  log.expect(verify_ifs(trace_ifs_commutative(split_algebra(Q, 2))).overall(), "trace IFS on QxQ");
  log.expect(verify_ifs(trace_ifs_commutative(split_algebra(Q, 3))).overall(), "trace IFS on QxQxQ");
  Matrix two = Matrix::from_ints(Q, {{2, 0}, {0, 2}});
  FrobeniusSystem m2 = matrix_ifs(2, two, Q);
  log.expect(verify_ifs(m2).overall(), "matrix_ifs(2, 2I)");
  std::vector<FrobeniusSystem> systems{trace_ifs_commutative(split_algebra(Q, 2)),
                                       trace_ifs_commutative(split_algebra(Q, 3)),
                                       m2,
                                       matrix_ifs_candidate(2, Matrix::from_ints(Q, {{1, 0}, {0, 2}}), Q),
                                       matrix_ifs_candidate(2, Matrix::from_ints(Q, {{1, 1}, {0, 1}}), Q),
                                       twist_frobenius_system(trace_ifs_commutative(split_algebra(Q, 2)),
                                                              Vector{Scalar(Q, 1), Scalar(Q, 5)})};
  std::size_t symmetric = 0;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    SymmetryFlags fl = symmetry_flags(systems[i]);
    symmetric += fl.theta_identity;
    log.expect(fl.theta_identity == fl.e_flip_invariant && fl.theta_identity == fl.phi_symmetric,
               "symmetry flags disagree on system " + std::to_string(i));
    log.expect((frobenius_automorphism(systems[i]) == Matrix::identity(Q, systems[i].dim())) == fl.e_flip_invariant,
               "theta = id iff flip(e) = e on system " + std::to_string(i));
  }
  log.expect(symmetric > 0 && symmetric < systems.size(), "both symmetric and non-symmetric systems sampled");
  Vector t0 = flatten(Matrix::from_ints(Q, {{1, 0}, {0, 3}}));
  log.expect(compare_frobenius_systems(m2, twist_frobenius_system(m2, t0)) == t0, "planted t recovered");
}

std::vector<CoalgComodule> sample_comodules() {
  WeakBialgebra pg2 = fixtures::pg(2, Q);
  std::vector<CoalgComodule> out;
  for (std::size_t i = 0; i < 4; ++i) out.push_back(one_dim_comodule(pg2, pg2.basis(i)));
  out.push_back(regular_comodule(pg2));
  out.push_back(regular_comodule(fixtures::pg(3, Q)));
  out.push_back(regular_comodule(fixtures::k2(Q)));
  out.push_back(regular_comodule(groupoid_function_algebra(pair_groupoid(2), Q)));
  return out;
}

void criterion8(Log& log) {
  WeakBialgebra pg2 = fixtures::pg(2, Q), k2 = fixtures::k2(Q);
  for (const auto& [h, dim] : {std::pair{pg2, std::size_t{8}}, std::pair{k2, std::size_t{4}}}) {
    HModule m = regular_module(h);
    log.expect(gamma_monoidal_check(m, m).overall(), "gamma_monoidal_check, dim " + std::to_string(h.dim()));
    log.expect(module_tensor(m, m).dim == dim, "dim of M.N, dim " + std::to_string(h.dim()));
  }
  std::size_t round_trips = 0;
  for (const auto& c : sample_comodules()) {
    BialgebroidComodule b = coalg_comodule_to_bialgebroid(c);
    CoalgComodule back = bialgebroid_comodule_to_coalg(b);
    BialgebroidComodule again = coalg_comodule_to_bialgebroid(back);
    bool ok = comodule_check(b).overall() && same_tensors(back.h, c.h) && back.delta == c.delta &&
              again.left_act == b.left_act && again.right_act == b.right_act && again.lambda == b.lambda;
    round_trips += ok;
  }
  log.expect(round_trips >= 6 && round_trips == sample_comodules().size(), "comodule round trips");
  CoalgComodule c12 = one_dim_comodule(pg2, pg2.basis(1)), c21 = one_dim_comodule(pg2, pg2.basis(2));
  for (const auto& [a, b, dim] : {std::tuple{c12, c21, std::size_t{1}}, std::tuple{c12, c12, std::size_t{0}},
                                  std::tuple{regular_comodule(pg2), regular_comodule(pg2), std::size_t{8}}}) {
    ComoduleTensor t = comodule_tensor(a, b);
    log.expect(t.report.overall(), "comodule tensor report");
    log.expect(t.quotient_form.dim == dim && t.compressed.dim() == dim,
               "comodule tensor dims, expected " + std::to_string(dim));
  }
}

std::map<std::string, std::string> read_probe(const std::string& path) {
  std::map<std::string, std::string> out;
  std::ifstream f(path);
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string law, status;
    ls >> law >> status;
    out[law] = status;
  }
  return out;
}

void criterion9(Log& log) {
  const FieldSpec F2 = FieldSpec::prime(2);
  Matrix uinv = Matrix::from_ints(F2, {{1, 1}, {1, 0}});
  Matrix u = inverse(uinv);
  CheckReport r = verify_ifs(matrix_ifs_candidate(2, u, F2));
  oracle::ProbeOutcome o = oracle::probe_matrix_system(F2, oracle::to_m2(flatten(u)), oracle::to_m2(flatten(uinv)));
  std::map<std::string, bool> brute{
      {"dual-basis-left", o.left}, {"dual-basis-right", o.right}, {"casimir", o.casimir}, {"nabla-one", o.nabla}};
  auto recorded = read_probe(WQG_TEST_DATA_DIR "/m2f2_probe.txt");
  log.expect(recorded.size() == brute.size(), "artifact lists every law");
  for (const auto& [law, ok] : brute) {
    log.expect(r.passed(law) == ok, law + ": verify_ifs and the brute-force oracle disagree");
    log.expect(recorded[law] == (ok ? "pass" : "fail"), law + ": artifact out of date");
  }
}

struct CliResult {
  int code;
  std::string out;
};

CliResult cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = run_cli(std::move(args), in, out, err);
  return {code, out.str()};
}

void criterion10(Log& log) {
  std::vector<std::vector<std::string>> gens{{"gen", "pair-groupoid", "--objects", "2"},
                                             {"gen", "pair-groupoid", "--objects", "3", "--field", "F_5"},
                                             {"gen", "pair-groupoid", "--objects", "2", "--function"},
                                             {"gen", "group", "--order", "2"},
                                             {"gen", "monoid", "--table", "0,1;1,1"}};
  for (const auto& g : gens) {
    CliResult doc = cli(g);
    log.expect(doc.code == 0, "generation exit code");
    log.expect(cli({"check", "-"}, doc.out).code == 0, "check of generated " + g[1]);
    CliResult l = cli({"to-bialgebroid", "-"}, doc.out);
    log.expect(l.code == 0 && cli({"check", "-"}, l.out).code == 0, "to-bialgebroid | check for " + g[1]);
    CliResult w = cli({"from-bialgebroid", "-", "--ifs", "canonical"}, l.out);
    log.expect(w.code == 0 && cli({"check", "-"}, w.out).code == 0, "from-bialgebroid | check for " + g[1]);
    log.expect(serialize_structure(parse_structure(doc.out)) == doc.out, "byte round trip for " + g[1]);
    CliResult r1 = cli({"check", "-", "--all-witnesses"}, doc.out), r2 = cli({"check", "-", "--all-witnesses"}, doc.out);
    log.expect(r1.out == r2.out, "deterministic report for " + g[1]);
  }
  CliResult eb = cli({"gen", "enveloping", "--split", "2"});
  log.expect(eb.code == 0 && cli({"check", "-"}, eb.out).code == 0, "enveloping bialgebroid checks");
  CliResult ebw = cli({"from-bialgebroid", "-", "--ifs", "canonical"}, eb.out);
  log.expect(ebw.code == 0 && cli({"check", "-"}, ebw.out).code == 0, "from-bialgebroid eb2 --ifs canonical | check");
  log.expect(serialize_structure(parse_structure(eb.out)) == eb.out, "byte round trip for the bialgebroid");
  CliResult mx = cli({"antipode", "-"}, cli({"gen", "monoid", "--table", "0,1;1,1"}).out);
  log.expect(mx.code == 1 && mx.out.find("\"rank\": 3") != std::string::npos, "antipode on MX reports NotHopf");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Log&)> run;
  };
  const std::vector<Criterion> all{
      {1, "axiom suites on the fixture instances over Q and F_5", criterion1},
      {2, "20 single-entry mutations of PG2 are caught with witnesses", criterion2},
      {3, "weak -> bialgebroid -> weak round trip", criterion3},
      {4, "twist law for two systems on M_2(Q)", criterion4},
      {5, "antipode equivalence", criterion5},
      {6, "duality and evaluation pairings", criterion6},
      {7, "Frobenius suite", criterion7},
      {8, "module and comodule categories", criterion8},
      {9, "M_2(F_2) candidate system probe", criterion9},
      {10, "CLI pipelines, round trips, determinism", criterion10},
  };
  int failed = 0;
  for (const auto& c : all) {
    Log log;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(log);
    } catch (const std::exception& e) {
      log.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > 60.0) log.failures.push_back("took longer than 60 s");
    const bool ok = log.failures.empty();
    failed += !ok;
    std::printf("criterion %2d %s  %s (%.2f s)\n", c.id, ok ? "PASS" : "FAIL", c.title, secs);
    for (const auto& f : log.failures) std::printf("    - %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
