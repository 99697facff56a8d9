#include "wqg/zoo.hpp"

#include "wqg/duality.hpp"
#include "wqg/errors.hpp"

namespace wqg {

namespace {

std::string pair_name(std::size_t n, std::size_t i, std::size_t j) {
  if (n <= 9) return "g" + std::to_string(i + 1) + std::to_string(j + 1);
  return "g" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace

CheckReport check_groupoid(const FiniteGroupoid& g, const CheckOptions& opts) {
  const std::size_t n = g.arrows.size();
  CheckReport report;
  bool shape_ok = g.compose.size() == n && g.inverse.size() == n && g.identities.size() == g.objects;
  for (const auto& row : g.compose) shape_ok = shape_ok && row.size() == n;
  for (const auto& a : g.arrows) shape_ok = shape_ok && a.source < g.objects && a.target < g.objects;
  for (std::size_t i : g.inverse) shape_ok = shape_ok && i < n;
  for (std::size_t i : g.identities) shape_ok = shape_ok && i < n;
  for (const auto& row : g.compose) {
    for (const auto& c : row) shape_ok = shape_ok && (!c || *c < n);
  }
  report.add_flag("shape", shape_ok, "table sizes or indices out of range");
  if (!shape_ok) return report;
  {
    ItemRecorder rec(report, "composition-domain", opts);
    for (std::size_t a = 0; a < n && rec.keep_going(); ++a) {
      for (std::size_t b = 0; b < n && rec.keep_going(); ++b) {
        const auto& c = g.compose[a][b];
        bool composable = g.arrows[b].target == g.arrows[a].source;
        bool ok = composable == c.has_value();
        if (ok && c) ok = g.arrows[*c].source == g.arrows[b].source && g.arrows[*c].target == g.arrows[a].target;
        if (ok) {
          rec.pass_case();
        } else {
          rec.fail({a, b}, {});
        }
      }
    }
  }
  {
    ItemRecorder rec(report, "associativity", opts);
    for (std::size_t a = 0; a < n && rec.keep_going(); ++a) {
      for (std::size_t b = 0; b < n && rec.keep_going(); ++b) {
        for (std::size_t c = 0; c < n && rec.keep_going(); ++c) {
          const auto& ab = g.compose[a][b];
          const auto& bc = g.compose[b][c];
          if (!ab || !bc) continue;
          const auto& l = g.compose[*ab][c];
          const auto& r = g.compose[a][*bc];
          if (l && r && *l == *r) {
            rec.pass_case();
          } else {
            rec.fail({a, b, c}, {});
          }
        }
      }
    }
  }
  {
    ItemRecorder rec(report, "identities", opts);
    for (std::size_t o = 0; o < g.objects && rec.keep_going(); ++o) {
      std::size_t id = g.identities[o];
      bool ok = g.arrows[id].source == o && g.arrows[id].target == o;
      for (std::size_t a = 0; a < n && ok; ++a) {
        if (g.arrows[a].source == o) ok = g.compose[a][id] == a;
        if (ok && g.arrows[a].target == o) ok = g.compose[id][a] == a;
      }
      if (ok) {
        rec.pass_case();
      } else {
        rec.fail({o}, {});
      }
    }
  }
  {
    ItemRecorder rec(report, "inverses", opts);
    for (std::size_t a = 0; a < n && rec.keep_going(); ++a) {
      std::size_t inv = g.inverse[a];
      const Arrow& x = g.arrows[a];
      bool ok = g.compose[a][inv] == g.identities[x.target] && g.compose[inv][a] == g.identities[x.source];
      if (ok) {
        rec.pass_case();
      } else {
        rec.fail({a}, {});
      }
    }
  }
  return report;
}

FiniteGroupoid pair_groupoid(std::size_t objects) {
  if (objects == 0) throw InvalidInput("pair groupoid needs at least one object");
  FiniteGroupoid g;
  g.objects = objects;
  const std::size_t n = objects * objects;
  for (std::size_t i = 0; i < objects; ++i) {
    for (std::size_t j = 0; j < objects; ++j) g.arrows.push_back(Arrow{j, i, pair_name(objects, i, j)});
  }
  std::vector<std::vector<std::optional<std::size_t>>> table(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t i = 0; i < objects; ++i) {
    for (std::size_t j = 0; j < objects; ++j) {
      for (std::size_t l = 0; l < objects; ++l) table[i * objects + j][j * objects + l] = i * objects + l;
    }
  }
  g.compose = std::move(table);
  for (std::size_t i = 0; i < objects; ++i) {
    for (std::size_t j = 0; j < objects; ++j) g.inverse.push_back(j * objects + i);
    g.identities.push_back(i * objects + i);
  }
  return g;
}

FiniteGroupoid cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic group of order 0");
  FiniteGroupoid g;
  g.objects = 1;
  for (std::size_t k = 0; k < n; ++k) {
    g.arrows.push_back(Arrow{0, 0, k == 0 ? "1" : (k == 1 ? "u" : "u" + std::to_string(k))});
  }
  g.compose.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.compose[a][b] = (a + b) % n;
    g.inverse.push_back((n - a) % n);
  }
  g.identities = {0};
  return g;
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  FiniteGroupoid g;
  g.objects = a.objects + b.objects;
  const std::size_t na = a.arrows.size(), n = na + b.arrows.size();
  g.arrows = a.arrows;
  for (const auto& x : b.arrows) g.arrows.push_back(Arrow{x.source + a.objects, x.target + a.objects, x.name + "'"});
  g.compose.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) g.compose[i][j] = a.compose[i][j];
  }
  for (std::size_t i = 0; i < b.arrows.size(); ++i) {
    for (std::size_t j = 0; j < b.arrows.size(); ++j) {
      if (b.compose[i][j]) g.compose[na + i][na + j] = *b.compose[i][j] + na;
    }
  }
  g.inverse = a.inverse;
  for (std::size_t i : b.inverse) g.inverse.push_back(i + na);
  g.identities = a.identities;
  for (std::size_t i : b.identities) g.identities.push_back(i + na);
  return g;
}

WeakBialgebra groupoid_algebra(const FiniteGroupoid& g, FieldSpec f) {
  CheckReport r = check_groupoid(g);
  if (!r.overall()) throw InvalidGroupoid("groupoid fails " + r.failed_ids().front());
  const std::size_t n = g.arrows.size();
  Tensor3 mul(f, n, n, n), comul(f, n, n, n);
  Vector unit = zero_vector(f, n);
  Matrix s(f, n, n);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.compose[a][b]) mul(a, b, *g.compose[a][b]) = Scalar::one(f);
    }
    comul(a, a, a) = Scalar::one(f);
    s(g.inverse[a], a) = Scalar::one(f);
    names.push_back(g.arrows[a].name);
  }
  for (std::size_t id : g.identities) unit[id] = Scalar::one(f);
  return WeakBialgebra(FinDimAlgebra(f, n, std::move(mul), std::move(unit)),
                       FinDimCoalgebra(f, n, std::move(comul), Vector(n, Scalar::one(f))), std::move(s),
                       std::move(names));
}

WeakBialgebra groupoid_function_algebra(const FiniteGroupoid& g, FieldSpec f) {
  return dual_weak_bialgebra(groupoid_algebra(g, f));
}

WeakBialgebra monoid_bialgebra(const std::vector<std::vector<std::size_t>>& table, FieldSpec f,
                               std::vector<std::string> names) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidInput("empty monoid table");
  for (const auto& row : table) {
    if (row.size() != n) throw InvalidInput("monoid table is not square");
    for (std::size_t c : row) {
      if (c >= n) throw InvalidInput("monoid table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw NotAssociative("(" + std::to_string(a) + " " + std::to_string(b) + ") " + std::to_string(c));
        }
      }
    }
  }
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table[e][x] == x && table[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) throw InvalidInput("monoid table has no identity");
  if (names.empty()) {
    for (std::size_t i = 0; i < n; ++i) names.push_back("m" + std::to_string(i));
  }
  Tensor3 mul(f, n, n, n), comul(f, n, n, n);
  std::optional<Matrix> s = Matrix(f, n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul(a, b, table[a][b]) = Scalar::one(f);
    comul(a, a, a) = Scalar::one(f);
    std::optional<std::size_t> inv;
    for (std::size_t b = 0; b < n && !inv; ++b) {
      if (table[a][b] == *identity && table[b][a] == *identity) inv = b;
    }
    if (!inv) {
      s.reset();
    } else if (s) {
      (*s)(*inv, a) = Scalar::one(f);
    }
  }
  return WeakBialgebra(FinDimAlgebra(f, n, std::move(mul), unit_vector(f, n, *identity)),
                       FinDimCoalgebra(f, n, std::move(comul), Vector(n, Scalar::one(f))), std::move(s),
                       std::move(names));
}

FinDimAlgebra split_algebra(FieldSpec f, std::size_t m) {
  Tensor3 mul(f, m, m, m);
  for (std::size_t i = 0; i < m; ++i) mul(i, i, i) = Scalar::one(f);
  return FinDimAlgebra(f, m, std::move(mul), Vector(m, Scalar::one(f)));
}

FsBialgebroid enveloping_bialgebroid(const FrobeniusSystem& s, const std::vector<std::string>& base_names) {
  CheckReport ifs = verify_ifs(s);
  if (!ifs.overall()) throw BadBase("base system is not an IFS (" + ifs.failed_ids().front() + ")");
  const FinDimAlgebra& r = s.algebra;
  const FieldSpec f = r.field();
  const std::size_t m = r.dim(), n = m * m;
  auto rname = [&](std::size_t a) { return a < base_names.size() ? base_names[a] : "r" + std::to_string(a); };
  // (r_a (x) r_b)(r_c (x) r_d) = r_a r_c (x) r_d r_b
  Tensor3 mul(f, n, n, n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t d = 0; d < m; ++d) {
          for (const auto& [k, x] : r.basis_product(a, c)) {
            for (const auto& [l, y] : r.basis_product(d, b)) mul(a * m + b, c * m + d, k * m + l) += x * y;
          }
        }
      }
    }
  }
  FsBialgebroid out;
  out.base = s;
  out.total = FinDimAlgebra(f, n, std::move(mul), kron(r.unit(), r.unit()));
  Matrix src(f, n, m), tgt(f, n, m);
  for (std::size_t a = 0; a < m; ++a) {
    src.set_col(a, kron(r.basis(a), r.unit()));
    tgt.set_col(a, kron(r.unit(), r.basis(a)));
  }
  out.src = LinearMap::from_matrix(std::move(src));
  out.tgt = LinearMap::from_matrix(std::move(tgt));
  // Gamma(r (x) s) = (r (x) 1) (x) (1 (x) s), then normalized.
  Matrix raw(f, n * n, n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      raw.set_col(a * m + b, kron(kron(r.basis(a), r.unit()), kron(r.unit(), r.basis(b))));
    }
  }
  out.gamma = LinearMap::from_matrix(raw);
  out.gamma = LinearMap::from_matrix(balancing_projector(out, s) * raw);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Matrix c(f, m, m);
      for (std::size_t x = 0; x < m; ++x) c.set_col(x, r.multiply(r.multiply(r.basis(a), r.basis(x)), r.basis(b)));
      out.counit_c.push_back(std::move(c));
      out.basis_names.push_back(rname(a) + "|" + rname(b));
    }
  }
  CheckReport chk = check_bialgebroid(out);
  if (!chk.overall()) throw AxiomFailure("enveloping bialgebroid fails " + chk.failed_ids().front());
  return out;
}

namespace fixtures {

WeakBialgebra pg(std::size_t objects, FieldSpec f) { return groupoid_algebra(pair_groupoid(objects), f); }

WeakBialgebra k2(FieldSpec f) { return groupoid_algebra(cyclic_group(2), f); }

WeakBialgebra mx(FieldSpec f) { return monoid_bialgebra({{0, 1}, {1, 1}}, f, {"1", "x"}); }

FinDimAlgebra r2(FieldSpec f) { return split_algebra(f, 2); }

FsBialgebroid eb2(FieldSpec f) { return enveloping_bialgebroid(trace_ifs_commutative(r2(f)), {"p1", "p2"}); }

FrobeniusSystem m2_scaled_trace(FieldSpec f) {
  return matrix_ifs(2, Matrix::from_ints(f, {{2, 0}, {0, 2}}), f);
}

FrobeniusSystem m2_second_ifs(FieldSpec f) {
  Matrix u(f, 2, 2);
  u(0, 0) = Scalar(f, 3);
  u(1, 1) = Scalar(f, 3, 2);
  return matrix_ifs(2, u, f);
}

FsBialgebroid ebm2(FieldSpec f) {
  return enveloping_bialgebroid(m2_scaled_trace(f), {"E11", "E12", "E21", "E22"});
}

}  // namespace fixtures

}  // namespace wqg
