#include "wqg/weak.hpp"

#include "wqg/errors.hpp"

namespace wqg {

namespace {

// P(a, b) = eps(e_a e_b)
Matrix eps_products(const WeakBialgebra& h) {
  const std::size_t n = h.dim();
  Matrix p(h.field(), n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Scalar acc = Scalar::zero(h.field());
      for (const auto& [k, c] : h.algebra.basis_product(a, b)) acc += c * h.coalgebra.counit()[k];
      p(a, b) = acc;
    }
  }
  return p;
}

Vector times2(const WeakBialgebra& h, const Vector& u, const Vector& v) { return h.algebra.multiply_tensor(u, v, 2); }

bool same_columns_space(const Matrix& m, const Subspace& s) { return Subspace::column_space(m) == s; }

}  // namespace

Vector delta_one(const WeakBialgebra& h) { return h.delta(h.one()); }

CheckReport check_weak_bialgebra(const WeakBialgebra& h, const CheckOptions& opts) {
  CheckReport report = check_algebra(h.algebra, opts);
  report.append(check_coalgebra(h.coalgebra, opts));
  const std::size_t n = h.dim();
  const FieldSpec f = h.field();
  const Matrix& dm = h.coalgebra.comul_matrix();
  {
    ItemRecorder rec(report, "delta-multiplicative", opts);
    for (std::size_t i = 0; i < n && rec.keep_going(); ++i) {
      for (std::size_t j = 0; j < n && rec.keep_going(); ++j) {
        rec.expect_equal(h.delta(h.mul(h.basis(i), h.basis(j))), times2(h, dm.col(i), dm.col(j)), {i, j});
      }
    }
  }
  Matrix p = eps_products(h);
  // eps(fgh) for all triples, via (fg)_k P(k, h).
  auto eps3 = [&](std::size_t a, std::size_t b, std::size_t c) {
    Scalar acc = Scalar::zero(f);
    for (const auto& [k, v] : h.algebra.basis_product(a, b)) acc += v * p(k, c);
    return acc;
  };
  for (bool op : {false, true}) {
    ItemRecorder rec(report, op ? "counit-weak-mult-op" : "counit-weak-mult", opts);
    for (std::size_t a = 0; a < n && rec.keep_going(); ++a) {
      for (std::size_t b = 0; b < n && rec.keep_going(); ++b) {
        // counit-weak-mult: eps(a b_1) eps(b_2 c); counit-weak-mult-op: eps(a b_2) eps(b_1 c)
        Vector weight = zero_vector(f, n);
        Vector db = dm.col(b);
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            const Scalar& d = db[j * n + k];
            if (d.is_zero()) continue;
            if (!op) {
              if (!p(a, j).is_zero()) weight[k] += d * p(a, j);
            } else if (!p(a, k).is_zero()) {
              weight[j] += d * p(a, k);
            }
          }
        }
        for (std::size_t c = 0; c < n && rec.keep_going(); ++c) {
          Scalar rhs = Scalar::zero(f);
          for (std::size_t k = 0; k < n; ++k) {
            if (!weight[k].is_zero()) rhs += weight[k] * p(k, c);
          }
          rec.expect_equal(eps3(a, b, c), rhs, {a, b, c});
        }
      }
    }
  }
  Vector d1 = delta_one(h);
  Vector one = h.one();
  Vector d11 = apply_axis(dm, d1, 1, n, n);  // 1_1 (x) 1_2 (x) 1_3
  Vector left = kron(d1, one), right = kron(one, d1);
  {
    ItemRecorder rec(report, "unit-weak-comult", opts);
    rec.expect_equal(d11, h.algebra.multiply_tensor(left, right, 3), {});
  }
  {
    ItemRecorder rec(report, "unit-weak-comult-op", opts);
    rec.expect_equal(d11, h.algebra.multiply_tensor(right, left, 3), {});
  }
  {
    // eps(1) = 1 need not hold (PG2 has eps(1) = 2); eps_t(1) = 1 does.
    ItemRecorder rec(report, "eps-t-unit", opts);
    Vector et = zero_vector(f, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!d1[j * n + k].is_zero()) et[k] += d1[j * n + k] * h.coalgebra.counit()[j];
      }
    }
    rec.expect_equal(et, one, {});
  }
  return report;
}

CounitalData counital_data_unchecked(const WeakBialgebra& h) {
  const std::size_t n = h.dim();
  const FieldSpec f = h.field();
  Matrix p = eps_products(h);
  Vector d1 = delta_one(h);
  CounitalData cd{Matrix(f, n, n), Matrix(f, n, n), Matrix(f, n, n), Matrix(f, n, n), {}, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& d = d1[j * n + k];
        if (d.is_zero()) continue;
        cd.eps_s(j, i) += d * p(i, k);        // 1_1 eps(h 1_2)
        cd.eps_t(k, i) += d * p(j, i);        // eps(1_1 h) 1_2
        cd.eps_s_prime(j, i) += d * p(k, i);  // 1_1 eps(1_2 h)
        cd.eps_t_prime(k, i) += d * p(i, j);  // eps(h 1_1) 1_2
      }
    }
  }
  cd.H_s = Subspace::column_space(cd.eps_s);
  cd.H_t = Subspace::column_space(cd.eps_t);

  const Subspace& ht = cd.H_t;
  const std::size_t m = ht.dim();
  FinDimAlgebra rt;
  try {
    rt = restrict_algebra(h.algebra, ht);
  } catch (const InvalidInput& e) {
    throw AxiomFailure(std::string("target counital subspace: ") + e.what());
  }
  Vector phi;
  for (const auto& b : ht.basis()) phi.push_back(h.eps(b));
  Vector w = apply_axis(cd.eps_t, d1, 1, n, n);
  Matrix e(f, m, m);
  Vector rebuilt = zero_vector(f, n * n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      e(a, b) = w[ht.pivots()[a] * n + ht.pivots()[b]];
      if (!e(a, b).is_zero()) axpy(rebuilt, e(a, b), kron(ht.basis()[a], ht.basis()[b]));
    }
  }
  if (!(rebuilt == w)) throw AxiomFailure("(eps_t (x) id) Delta(1) is not in H_t (x) H_t");
  cd.ifs_t = FrobeniusSystem{std::move(rt), std::move(phi), std::move(e)};
  return cd;
}

CounitalData counital_data(const WeakBialgebra& h) {
  CheckReport r = check_weak_bialgebra(h);
  if (!r.overall()) throw InvalidInput("not a weak bialgebra (" + r.failed_ids().front() + ")");
  return counital_data_unchecked(h);
}

WeakBialgebra variant(const WeakBialgebra& h, Variant which) {
  CheckReport r = check_weak_bialgebra(h);
  if (!r.overall()) throw InvalidInput("not a weak bialgebra (" + r.failed_ids().front() + ")");
  return variant_unchecked(h, which);
}

CheckReport verify_counital_identities(const WeakBialgebra& h, const CheckOptions& opts) {
  CheckReport pre = check_weak_bialgebra(h);
  if (!pre.overall()) throw InvalidInput("not a weak bialgebra (" + pre.failed_ids().front() + ")");
  const CounitalData cd = counital_data_unchecked(h);
  const std::size_t n = h.dim();
  const FieldSpec f = h.field();
  const Matrix& dm = h.coalgebra.comul_matrix();
  const Vector one = h.one();
  const Vector d1 = delta_one(h);
  CheckReport report;

  struct Form {
    const char* id;
    int kind;
  };
  // counit-absorb: h_1 eps_s(h_2) = eps_t(h_1) h_2 = eps'_s(h_2) h_1 = h_2 eps'_t(h_1) = h
  for (const Form& form : {Form{"counit-absorb-s", 0}, Form{"counit-absorb-t", 1}, Form{"counit-absorb-s-prime", 2}, Form{"counit-absorb-t-prime", 3}}) {
    ItemRecorder rec(report, form.id, opts);
    for (std::size_t i = 0; i < n && rec.keep_going(); ++i) {
      Vector d = dm.col(i);
      Vector acc = zero_vector(f, n);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& c = d[j * n + k];
          if (c.is_zero()) continue;
          switch (form.kind) {
            case 0: axpy(acc, c, h.mul(h.basis(j), cd.eps_s.col(k))); break;
            case 1: axpy(acc, c, h.mul(cd.eps_t.col(j), h.basis(k))); break;
            case 2: axpy(acc, c, h.mul(cd.eps_s_prime.col(k), h.basis(j))); break;
            default: axpy(acc, c, h.mul(h.basis(k), cd.eps_t_prime.col(j))); break;
          }
        }
      }
      rec.expect_equal(acc, h.basis(i), {i});
    }
  }
  {
    ItemRecorder rec(report, "Ht-delta", opts);
    for (std::size_t p = 0; p < cd.H_t.dim() && rec.keep_going(); ++p) {
      const Vector& x = cd.H_t.basis()[p];
      Vector dx = h.delta(x);
      rec.expect_equal(dx, times2(h, kron(x, one), d1), {p}, "x 1_1 (x) 1_2");
      rec.expect_equal(dx, times2(h, d1, kron(x, one)), {p}, "1_1 x (x) 1_2");
    }
  }
  {
    ItemRecorder rec(report, "Hs-delta", opts);
    for (std::size_t p = 0; p < cd.H_s.dim() && rec.keep_going(); ++p) {
      const Vector& y = cd.H_s.basis()[p];
      Vector dy = h.delta(y);
      rec.expect_equal(dy, times2(h, kron(one, y), d1), {p}, "1_1 (x) y 1_2");
      rec.expect_equal(dy, times2(h, d1, kron(one, y)), {p}, "1_1 (x) 1_2 y");
    }
  }
  {
    // eps(gh) = eps(g 1_2) eps(1_1 h) = eps(g eps_t(h))
    ItemRecorder rec(report, "counit-factor", opts);
    for (std::size_t g = 0; g < n && rec.keep_going(); ++g) {
      for (std::size_t k = 0; k < n && rec.keep_going(); ++k) {
        Scalar lhs = h.eps(h.mul(h.basis(g), h.basis(k)));
        Scalar mid = Scalar::zero(f);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            const Scalar& c = d1[a * n + b];
            if (!c.is_zero()) mid += c * h.eps(h.mul(h.basis(g), h.basis(b))) * h.eps(h.mul(h.basis(a), h.basis(k)));
          }
        }
        rec.expect_equal(lhs, mid, {g, k}, "eps(g 1_2) eps(1_1 h)");
        rec.expect_equal(lhs, h.eps(h.mul(h.basis(g), cd.eps_t.col(k))), {g, k}, "eps(g eps_t(h))");
      }
    }
  }
  {
    ItemRecorder rec(report, "eps-t-absorb", opts);
    for (std::size_t g = 0; g < n && rec.keep_going(); ++g) {
      for (std::size_t k = 0; k < n && rec.keep_going(); ++k) {
        rec.expect_equal(cd.eps_t.apply(h.mul(h.basis(g), h.basis(k))),
                         cd.eps_t.apply(h.mul(h.basis(g), cd.eps_t.col(k))), {g, k});
      }
    }
  }
  {
    ItemRecorder rec(report, "Ht-linear", opts);
    for (std::size_t p = 0; p < cd.H_t.dim() && rec.keep_going(); ++p) {
      const Vector& x = cd.H_t.basis()[p];
      for (std::size_t k = 0; k < n && rec.keep_going(); ++k) {
        rec.expect_equal(h.mul(x, cd.eps_t.col(k)), cd.eps_t.apply(h.mul(x, h.basis(k))), {p, k});
      }
    }
  }
  {
    ItemRecorder rec(report, "eps-t-eps-s-prime", opts);
    Matrix a = cd.eps_t * cd.eps_s_prime, b = cd.eps_s_prime * cd.eps_t;
    for (std::size_t i = 0; i < n && rec.keep_going(); ++i) {
      rec.expect_equal(a.col(i), cd.eps_t.col(i), {i}, "eps_t eps'_s = eps_t");
      rec.expect_equal(b.col(i), cd.eps_s_prime.col(i), {i}, "eps'_s eps_t = eps'_s");
    }
  }
  const Vector w = apply_axis(cd.eps_t, d1, 1, n, n);  // eps_t(1_1) (x) 1_2
  {
    ItemRecorder rec(report, "Ht-casimir", opts);
    for (std::size_t p = 0; p < cd.H_t.dim() && rec.keep_going(); ++p) {
      const Vector& x = cd.H_t.basis()[p];
      rec.expect_equal(times2(h, kron(x, one), w), times2(h, w, kron(one, x)), {p});
    }
  }
  {
    const Vector v = apply_axis(cd.eps_s, d1, n, n, 1);  // 1_1 (x) eps_s(1_2)
    ItemRecorder rec(report, "Hs-casimir", opts);
    for (std::size_t p = 0; p < cd.H_s.dim() && rec.keep_going(); ++p) {
      const Vector& y = cd.H_s.basis()[p];
      rec.expect_equal(times2(h, v, kron(y, one)), times2(h, kron(one, y), v), {p});
    }
  }
  {
    ItemRecorder rec(report, "Ht-slide", opts);
    for (std::size_t p = 0; p < cd.H_t.dim() && rec.keep_going(); ++p) {
      const Vector& x = cd.H_t.basis()[p];
      rec.expect_equal(times2(h, d1, kron(cd.eps_s_prime.apply(x), one)), times2(h, d1, kron(one, x)), {p});
    }
  }
  {
    ItemRecorder rec(report, "commute", opts);
    for (std::size_t g = 0; g < n && rec.keep_going(); ++g) {
      for (std::size_t k = 0; k < n && rec.keep_going(); ++k) {
        rec.expect_equal(h.mul(cd.eps_t.col(g), cd.eps_s.col(k)), h.mul(cd.eps_s.col(k), cd.eps_t.col(g)), {g, k});
      }
    }
  }
  {
    ItemRecorder rec(report, "delta-one-factor", opts);
    rec.expect_equal(apply_axis(cd.eps_t, apply_axis(cd.eps_s, d1, 1, n, n), n, n, 1), d1, {},
                     "eps_s(1_1) (x) eps_t(1_2)");
    rec.expect_equal(apply_axis(cd.eps_t_prime, apply_axis(cd.eps_s_prime, d1, 1, n, n), n, n, 1), d1, {},
                     "eps'_s(1_1) (x) eps'_t(1_2)");
  }
  {
    ItemRecorder rec(report, "membership", opts);
    std::vector<Vector> span;
    for (const auto& y : cd.H_s.basis()) {
      for (const auto& x : cd.H_t.basis()) span.push_back(kron(y, x));
    }
    if (Subspace::span(f, n * n, span).contains(d1)) {
      rec.pass_case();
    } else {
      rec.fail({}, Subspace::span(f, n * n, span).residue(d1), "Delta(1) outside H_s (x) H_t");
    }
  }
  {
    ItemRecorder rec(report, "idempotence", opts);
    const std::pair<const char*, const Matrix*> maps[] = {
        {"eps_s", &cd.eps_s}, {"eps_t", &cd.eps_t}, {"eps'_s", &cd.eps_s_prime}, {"eps'_t", &cd.eps_t_prime}};
    for (std::size_t m = 0; m < 4 && rec.keep_going(); ++m) {
      Matrix sq = *maps[m].second * *maps[m].second;
      for (std::size_t i = 0; i < n && rec.keep_going(); ++i) {
        rec.expect_equal(sq.col(i), maps[m].second->col(i), {m, i}, maps[m].first);
      }
    }
    if (!same_columns_space(cd.eps_t_prime, cd.H_t)) rec.fail({}, {}, "image of eps'_t differs from H_t");
    if (!same_columns_space(cd.eps_s_prime, cd.H_s)) rec.fail({}, {}, "image of eps'_s differs from H_s");
  }
  {
    ItemRecorder rec(report, "counital-unit", opts);
    rec.expect_equal(cd.eps_t.apply(one), one, {}, "eps_t(1) = 1");
    rec.expect_equal(cd.eps_s.apply(one), one, {}, "eps_s(1) = 1");
  }
  {
    ItemRecorder rec(report, "closure", opts);
    for (const Subspace* s : {&cd.H_t, &cd.H_s}) {
      for (std::size_t a = 0; a < s->dim() && rec.keep_going(); ++a) {
        for (std::size_t b = 0; b < s->dim() && rec.keep_going(); ++b) {
          Vector prod = h.mul(s->basis()[a], s->basis()[b]);
          if (s->contains(prod)) {
            rec.pass_case();
          } else {
            rec.fail({a, b}, s->residue(prod), s == &cd.H_t ? "H_t" : "H_s");
          }
        }
      }
    }
  }
  report.append(verify_ifs(cd.ifs_t, opts), "target-ifs/");
  return report;
}

CheckReport antiiso_check(const WeakBialgebra& h, const CheckOptions& opts) {
  const CounitalData cd = counital_data(h);
  CheckReport report;
  auto anti = [&](const char* id, const Subspace& dom, const Subspace& cod, const Matrix& map) {
    ItemRecorder rec(report, id, opts);
    for (std::size_t a = 0; a < dom.dim() && rec.keep_going(); ++a) {
      for (std::size_t b = 0; b < dom.dim() && rec.keep_going(); ++b) {
        const Vector& y = dom.basis()[a];
        const Vector& z = dom.basis()[b];
        rec.expect_equal(map.apply(h.mul(y, z)), h.mul(map.apply(z), map.apply(y)), {a, b});
      }
    }
    rec.expect_equal(map.apply(h.one()), h.one(), {}, "unit");
    std::vector<Vector> images;
    for (const auto& y : dom.basis()) images.push_back(map.apply(y));
    if (!(Subspace::span(h.field(), h.dim(), images) == cod)) rec.fail({}, {}, "image is not the counital subalgebra");
  };
  anti("eps-t-anti", cd.H_s, cd.H_t, cd.eps_t);
  anti("eps-s-prime-anti", cd.H_t, cd.H_s, cd.eps_s_prime);
  {
    ItemRecorder rec(report, "composite-on-Hs", opts);
    for (std::size_t a = 0; a < cd.H_s.dim() && rec.keep_going(); ++a) {
      const Vector& y = cd.H_s.basis()[a];
      rec.expect_equal(cd.eps_s_prime.apply(cd.eps_t.apply(y)), y, {a});
    }
  }
  {
    ItemRecorder rec(report, "composite-on-Ht", opts);
    for (std::size_t a = 0; a < cd.H_t.dim() && rec.keep_going(); ++a) {
      const Vector& x = cd.H_t.basis()[a];
      rec.expect_equal(cd.eps_t.apply(cd.eps_s_prime.apply(x)), x, {a});
    }
  }
  return report;
}

CheckReport check_weak_hom(const LinearMap& f, const WeakBialgebra& b, const WeakBialgebra& h,
                           const CheckOptions& opts) {
  if (f.source_dim != b.dim() || f.target_dim != h.dim()) throw DimensionMismatch("weak bialgebra map shape");
  CheckReport report = check_algebra_hom(f, b.algebra, h.algebra, false, opts);
  const Matrix ff = kron(f.matrix, f.matrix);
  {
    ItemRecorder rec(report, "comultiplicative", opts);
    for (std::size_t i = 0; i < b.dim() && rec.keep_going(); ++i) {
      rec.expect_equal(h.delta(f(b.basis(i))), ff.apply(b.delta(b.basis(i))), {i});
    }
  }
  {
    ItemRecorder rec(report, "counit", opts);
    for (std::size_t i = 0; i < b.dim() && rec.keep_going(); ++i) {
      rec.expect_equal(h.eps(f(b.basis(i))), b.eps(b.basis(i)), {i});
    }
  }
  return report;
}

InducedIso induced_counital_iso(const LinearMap& f, const WeakBialgebra& b, const WeakBialgebra& h) {
  CheckReport hom = check_weak_hom(f, b, h);
  if (!hom.overall()) throw NotAHomomorphism("f fails " + hom.failed_ids().front());
  const CounitalData cb = counital_data(b);
  const CounitalData ch = counital_data(h);
  const std::size_t nb = b.dim(), nh = h.dim();
  const Vector d1 = delta_one(b);
  // g(x) = eps_H(x f(1_1)) 1_2
  Matrix g(h.field(), nb, nh);
  for (std::size_t x = 0; x < nh; ++x) {
    Vector col = zero_vector(h.field(), nb);
    for (std::size_t j = 0; j < nb; ++j) {
      for (std::size_t k = 0; k < nb; ++k) {
        const Scalar& c = d1[j * nb + k];
        if (c.is_zero()) continue;
        Scalar w = h.eps(h.mul(h.basis(x), f(b.basis(j))));
        if (!w.is_zero()) col[k] += c * w;
      }
    }
    g.set_col(x, col);
  }
  InducedIso out{LinearMap::from_matrix(g), {}};
  CheckReport& report = out.report;
  {
    ItemRecorder rec(report, "f-preserves-target", CheckOptions{});
    for (std::size_t a = 0; a < cb.H_t.dim(); ++a) {
      Vector y = f(cb.H_t.basis()[a]);
      if (ch.H_t.contains(y)) {
        rec.pass_case();
      } else {
        rec.fail({a}, ch.H_t.residue(y));
      }
    }
  }
  {
    ItemRecorder rec(report, "g-after-f", CheckOptions{});
    for (std::size_t a = 0; a < cb.H_t.dim(); ++a) {
      const Vector& y = cb.H_t.basis()[a];
      rec.expect_equal(g.apply(f(y)), y, {a});
    }
  }
  {
    ItemRecorder rec(report, "f-after-g", CheckOptions{});
    for (std::size_t a = 0; a < ch.H_t.dim(); ++a) {
      const Vector& x = ch.H_t.basis()[a];
      rec.expect_equal(f(g.apply(x)), x, {a});
    }
  }
  return out;
}

}  // namespace wqg
