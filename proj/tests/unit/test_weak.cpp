#include <doctest.h>

#include <tuple>

#include "unit/groupoid_oracle.hpp"
#include "wqg/errors.hpp"
#include "wqg/hopf.hpp"
#include "wqg/weak.hpp"
#include "wqg/zoo.hpp"

using namespace wqg;

namespace {

const FieldSpec Q = FieldSpec::rational();
const FieldSpec F5 = FieldSpec::prime(5);

Vector to_vec(FieldSpec f, const oracle::PairGroupoid& g, const oracle::Elem& x) {
  Vector v = zero_vector(f, static_cast<std::size_t>(g.n * g.n));
  for (const auto& [a, c] : x) v[g.index(a)] = Scalar(f, c);
  return v;
}

WeakBialgebra with_counit(const WeakBialgebra& h, Vector counit) {
  FinDimCoalgebra c(h.field(), h.dim(), h.coalgebra.comul(), std::move(counit));
  return WeakBialgebra(h.algebra, c, std::nullopt, h.basis_names);
}

}  // namespace

TEST_CASE("zoo instances are weak bialgebras over Q and F_5") {
  for (FieldSpec f : {Q, F5}) {
    CAPTURE(f.to_string());
    std::vector<WeakBialgebra> zoo = {fixtures::pg(2, f), fixtures::pg(3, f), fixtures::k2(f), fixtures::mx(f),
                                      groupoid_function_algebra(pair_groupoid(2), f)};
    for (const auto& h : zoo) {
      CHECK(check_weak_bialgebra(h).overall());
      CHECK(verify_counital_identities(h).overall());
      CHECK(antiiso_check(h).overall());
      CHECK(verify_ifs(counital_data(h).ifs_t).overall());
    }
  }
}

TEST_CASE("the counit of PG2 is not unital, while eps_t(1) = 1 holds") {
  WeakBialgebra h = fixtures::pg(2, Q);
  oracle::PairGroupoid g{2};
  CHECK(h.eps(h.one()) == Scalar(Q, g.eps(g.one())));
  CHECK(h.eps(h.one()) == Scalar(Q, 2));
  CHECK(check_weak_bialgebra(h).passed("eps-t-unit"));
}

TEST_CASE("counital maps of PG2 and PG3 match the defining formulas") {
  for (int n : {2, 3}) {
    WeakBialgebra h = fixtures::pg(static_cast<std::size_t>(n), Q);
    oracle::PairGroupoid g{n};
    CounitalData cd = counital_data(h);
    for (auto a : g.arrows()) {
      oracle::Elem x = oracle::arrow(a.first, a.second);
      const auto i = static_cast<std::size_t>(g.index(a));
      CHECK(cd.eps_t.col(i) == to_vec(Q, g, g.eps_t(x)));
      CHECK(cd.eps_s.col(i) == to_vec(Q, g, g.eps_s(x)));
      CHECK(cd.eps_s_prime.col(i) == to_vec(Q, g, g.eps_s_prime(x)));
      CHECK(cd.eps_t_prime.col(i) == to_vec(Q, g, g.eps_t_prime(x)));
      // eps_t(g_ij) = g_ii and eps_s(g_ij) = g_jj
      CHECK(cd.eps_t.col(i) == to_vec(Q, g, oracle::arrow(a.first, a.first)));
      CHECK(cd.eps_s.col(i) == to_vec(Q, g, oracle::arrow(a.second, a.second)));
    }
    CHECK(cd.H_t.dim() == static_cast<std::size_t>(n));
    CHECK(cd.H_t == cd.H_s);
    // ifs_t = (eps|, sum g_ii (x) g_ii) in the basis g_11, ..., g_nn
    CHECK(cd.ifs_t.e == Matrix::identity(Q, static_cast<std::size_t>(n)));
    CHECK(cd.ifs_t.phi == Vector(static_cast<std::size_t>(n), Scalar::one(Q)));
  }
}

TEST_CASE("K2 has trivial counital data") {
  WeakBialgebra h = fixtures::k2(Q);
  CounitalData cd = counital_data(h);
  CHECK(cd.H_t.dim() == 1);
  CHECK(cd.ifs_t.e == Matrix::from_ints(Q, {{1}}));
  CHECK(cd.ifs_t.phi == Vector{Scalar::one(Q)});
  for (std::size_t i = 0; i < 2; ++i) CHECK(cd.eps_t.col(i) == h.eps(h.basis(i)) * h.one());
}

TEST_CASE("changing the counit of g12 breaks counit-weak-mult at the first brute-force triple") {
  WeakBialgebra pg2 = fixtures::pg(2, Q);
  Vector eps = pg2.coalgebra.counit();
  eps[1] = Scalar::zero(Q);
  WeakBialgebra h = with_counit(pg2, eps);

  // Oracle: eps(fgh) against eps(f g) eps(g h) for grouplike g, lexicographic.
  oracle::PairGroupoid g{2};
  auto ev = [&](const oracle::Elem& x) {
    std::int64_t s = 0;
    for (const auto& [a, c] : x) s += c * (g.index(a) == 1 ? 0 : 1);
    return s;
  };
  std::optional<std::tuple<int, int, int>> first;
  auto arrows = g.arrows();
  for (auto a : arrows)
    for (auto b : arrows)
      for (auto c : arrows) {
        auto x = oracle::arrow(a.first, a.second), y = oracle::arrow(b.first, b.second),
             z = oracle::arrow(c.first, c.second);
        if (!first && ev(g.mul(g.mul(x, y), z)) != ev(g.mul(x, y)) * ev(g.mul(y, z))) {
          first = std::make_tuple(g.index(a), g.index(b), g.index(c));
        }
      }
  REQUIRE(first);
  CheckReport r = check_weak_bialgebra(h);
  REQUIRE_FALSE(r.passed("counit-weak-mult"));
  const auto& w = r.find("counit-weak-mult")->witnesses.front();
  auto [i, j, k] = *first;
  CHECK(w.indices == std::vector<std::size_t>{std::size_t(i), std::size_t(j), std::size_t(k)});
  // (g11, g12, g21): eps(g11) = 1 on the left, eps(g12) eps(g12 g21) = 0 on the right
  CHECK(w.indices == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("mutated comultiplications are caught") {
  WeakBialgebra pg2 = fixtures::pg(2, Q);
  Tensor3 comul = pg2.coalgebra.comul();
  comul(1, 1, 1) = Scalar::zero(Q);
  comul(1, 0, 1) = Scalar::one(Q);
  WeakBialgebra h(pg2.algebra, FinDimCoalgebra(Q, 4, comul, pg2.coalgebra.counit()));
  CHECK_FALSE(check_weak_bialgebra(h).overall());
  CHECK_THROWS_AS(counital_data(h), InvalidInput);
}

TEST_CASE("opposite variants keep every identity") {
  WeakBialgebra h = fixtures::pg(2, Q);
  for (Variant v : {Variant::op, Variant::cop, Variant::bop}) {
    WeakBialgebra x = variant(h, v);
    CHECK(verify_counital_identities(x).overall());
    CHECK(antiiso_check(x).overall());
  }
  // bop exchanges the source and target projections of PG2 (g_ij -> g_ii versus g_jj).
  CounitalData a = counital_data(h), b = counital_data(variant(h, Variant::bop));
  CHECK(a.eps_t == b.eps_s);
  CHECK(a.eps_s == b.eps_t);
}

TEST_CASE("Delta(1) lies in H_s (x) H_t and the projections are idempotent") {
  for (const auto& h : {fixtures::pg(3, Q), groupoid_function_algebra(pair_groupoid(3), Q)}) {
    CounitalData cd = counital_data(h);
    CHECK(cd.eps_t * cd.eps_t == cd.eps_t);
    CHECK(cd.eps_s * cd.eps_s == cd.eps_s);
    CHECK(cd.eps_t * cd.eps_s_prime == cd.eps_t);
    CHECK(cd.eps_s_prime * cd.eps_t == cd.eps_s_prime);
    CHECK(Subspace::column_space(cd.eps_t_prime) == cd.H_t);
  }
}

TEST_CASE("induced isomorphisms of counital subalgebras") {
  WeakBialgebra h = fixtures::pg(2, Q);
  InducedIso id = induced_counital_iso(LinearMap::from_matrix(Matrix::identity(Q, 4)), h, h);
  CHECK(id.report.overall());
  CounitalData cd = counital_data(h);
  for (const auto& x : cd.H_t.basis()) CHECK(id.g(x) == x);

  Subspace units = Subspace::span(Q, 4, {h.basis(0), h.basis(3)});
  WeakBialgebra b = restrict_weak_bialgebra(h, units);
  CHECK(check_weak_bialgebra(b).overall());
  InducedIso inc = induced_counital_iso(LinearMap::from_matrix(units.basis_matrix()), b, h);
  CHECK(inc.report.overall());
  // g is the inverse of the inclusion on span{g11, g22}
  CHECK(inc.g(h.basis(0)) == b.basis(0));
  CHECK(inc.g(h.basis(3)) == b.basis(1));

  WeakBialgebra k = fixtures::k2(Q);
  InducedIso kk = induced_counital_iso(LinearMap::from_matrix(Matrix::identity(Q, 2)), k, k);
  CHECK(kk.report.overall());
  CHECK(kk.g(k.one()) == k.one());

  // The flip g11 <-> g12 is not multiplicative.
  Matrix swap = Matrix::from_ints(Q, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_THROWS_AS(induced_counital_iso(LinearMap::from_matrix(swap), h, h), NotAHomomorphism);
}
