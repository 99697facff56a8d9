#include "wqg/bialgebroid.hpp"

#include "wqg/errors.hpp"
#include "wqg/weak.hpp"

namespace wqg {

namespace {

void check_shapes(const FsBialgebroid& l) {
  const std::size_t n = l.dim(), m = l.base_dim();
  if (l.src.source_dim != m || l.src.target_dim != n || l.tgt.source_dim != m || l.tgt.target_dim != n) {
    throw DimensionMismatch("source/target map shape");
  }
  if (l.gamma.source_dim != n || l.gamma.target_dim != n * n) throw DimensionMismatch("gamma shape");
  if (l.counit_c.size() != n) throw DimensionMismatch("one counit matrix per basis element expected");
  for (const auto& c : l.counit_c) {
    if (c.rows() != m || c.cols() != m) throw DimensionMismatch("counit matrix shape");
  }
}

Matrix left_mult_by(const FinDimAlgebra& a, const Vector& x) { return a.left_mult(x); }

}  // namespace

Matrix FsBialgebroid::counit_of(const Vector& h) const {
  Matrix out(field(), base_dim(), base_dim());
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i].is_zero()) continue;
    const Matrix& c = counit_c[i];
    for (std::size_t r = 0; r < base_dim(); ++r) {
      for (std::size_t s = 0; s < base_dim(); ++s) {
        if (!c(r, s).is_zero()) out(r, s) += h[i] * c(r, s);
      }
    }
  }
  return out;
}

Matrix balancing_projector(const FsBialgebroid& l, const FrobeniusSystem& s) {
  const std::size_t n = l.dim(), m = s.dim();
  if (m != l.base_dim()) throw DimensionMismatch("system on a different base");
  Matrix pi(l.field(), n * n, n * n);
  for (std::size_t a = 0; a < m; ++a) {
    Matrix lt = left_mult_by(l.total, l.tgt.matrix.col(a));
    for (std::size_t b = 0; b < m; ++b) {
      if (s.e(a, b).is_zero()) continue;
      Matrix ls = left_mult_by(l.total, l.src.matrix.col(b));
      Matrix k = kron(lt, ls);
      for (std::size_t i = 0; i < n * n; ++i) {
        for (std::size_t j = 0; j < n * n; ++j) {
          if (!k(i, j).is_zero()) pi(i, j) += s.e(a, b) * k(i, j);
        }
      }
    }
  }
  return pi;
}

std::vector<Vector> balancing_relations(const FsBialgebroid& l) {
  const std::size_t n = l.dim();
  std::vector<Vector> rel;
  for (std::size_t a = 0; a < l.base_dim(); ++a) {
    Vector t = l.tgt.matrix.col(a), s = l.src.matrix.col(a);
    for (std::size_t g = 0; g < n; ++g) {
      Vector tg = l.total.multiply(t, l.total.basis(g));
      for (std::size_t h = 0; h < n; ++h) {
        Vector r = kron(tg, l.total.basis(h)) - kron(l.total.basis(g), l.total.multiply(s, l.total.basis(h)));
        if (!is_zero(r)) rel.push_back(std::move(r));
      }
    }
  }
  return rel;
}

TensorOverR tensor_over_r(const FsBialgebroid& l) {
  check_shapes(l);
  CheckReport ifs = verify_ifs(l.base);
  if (!ifs.overall()) throw BadBase("base system is not an IFS (" + ifs.failed_ids().front() + ")");
  Matrix pi = balancing_projector(l, l.base);
  if (!(pi * pi == pi)) throw ProjectorNotIdempotent("Pi o Pi differs from Pi");
  TensorOverR out{pi, Subspace::column_space(pi), quotient_by(l.field(), l.dim() * l.dim(), balancing_relations(l))};
  if (out.image.dim() != out.quotient.dim()) {
    throw ProjectorNotIdempotent("image of Pi and balanced quotient have different dimensions");
  }
  return out;
}

CheckReport check_bialgebroid(const FsBialgebroid& l, const CheckOptions& opts) {
  check_shapes(l);
  const std::size_t n = l.dim(), m = l.base_dim();
  const FieldSpec f = l.field();
  const FinDimAlgebra& H = l.total;
  const FinDimAlgebra& R = l.base.algebra;
  CheckReport report;

  // (a)
  report.append(check_algebra_hom(l.src, R, H, false, opts), "src/");
  report.append(check_algebra_hom(l.tgt, R, H, true, opts), "tgt/");
  {
    ItemRecorder rec(report, "src-tgt-commute", opts);
    for (std::size_t a = 0; a < m && rec.keep_going(); ++a) {
      for (std::size_t b = 0; b < m && rec.keep_going(); ++b) {
        Vector s = l.src.matrix.col(a), t = l.tgt.matrix.col(b);
        rec.expect_equal(H.multiply(s, t), H.multiply(t, s), {a, b});
      }
    }
  }
  const Matrix pi = balancing_projector(l, l.base);
  auto gam = [&](const Vector& h) { return l.gamma(h); };
  // (b)
  {
    ItemRecorder rec(report, "gamma-normalized", opts);
    for (std::size_t h = 0; h < n && rec.keep_going(); ++h) {
      Vector g = l.gamma.matrix.col(h);
      rec.expect_equal(pi.apply(g), g, {h});
    }
  }
  const Vector one = H.unit();
  // (c)
  {
    ItemRecorder rec(report, "takeuchi", opts);
    for (std::size_t h = 0; h < n && rec.keep_going(); ++h) {
      Vector g = l.gamma.matrix.col(h);
      for (std::size_t x = 0; x < m && rec.keep_going(); ++x) {
        Vector lhs = pi.apply(H.multiply_tensor(g, kron(l.tgt.matrix.col(x), one), 2));
        Vector rhs = pi.apply(H.multiply_tensor(g, kron(one, l.src.matrix.col(x)), 2));
        rec.expect_equal(lhs, rhs, {h, x});
      }
    }
  }
  // (d)
  {
    ItemRecorder rec(report, "gamma-multiplicative", opts);
    for (std::size_t g = 0; g < n && rec.keep_going(); ++g) {
      for (std::size_t h = 0; h < n && rec.keep_going(); ++h) {
        Vector lhs = pi.apply(H.multiply_tensor(l.gamma.matrix.col(g), l.gamma.matrix.col(h), 2));
        rec.expect_equal(lhs, gam(H.multiply(H.basis(g), H.basis(h))), {g, h});
      }
    }
  }
  {
    ItemRecorder rec(report, "gamma-unit", opts);
    rec.expect_equal(gam(one), pi.apply(kron(one, one)), {});
  }
  // (e)
  {
    ItemRecorder rec(report, "gamma-Re-linear", opts);
    for (std::size_t a = 0; a < m && rec.keep_going(); ++a) {
      for (std::size_t b = 0; b < m && rec.keep_going(); ++b) {
        Vector s = l.src.matrix.col(a), t = l.tgt.matrix.col(b);
        Vector st = H.multiply(s, t);
        for (std::size_t h = 0; h < n && rec.keep_going(); ++h) {
          Vector lhs = gam(H.multiply(st, H.basis(h)));
          Vector rhs = pi.apply(H.multiply_tensor(kron(s, t), l.gamma.matrix.col(h), 2));
          rec.expect_equal(lhs, rhs, {a, b, h});
        }
      }
    }
  }
  // (f) modulo both middle balancings: Pi_12 Pi_23 kills exactly their sum.
  {
    ItemRecorder rec(report, "coassociativity", opts);
    for (std::size_t h = 0; h < n && rec.keep_going(); ++h) {
      Vector g = l.gamma.matrix.col(h);
      Vector lhs = apply_axis(l.gamma.matrix, g, 1, n, n);
      Vector rhs = apply_axis(l.gamma.matrix, g, n, n, 1);
      Vector d = lhs - rhs;
      d = apply_axis(pi, d, n, n * n, 1);
      d = apply_axis(pi, d, 1, n * n, n);
      rec.expect_equal(d, zero_vector(f, n * n * n), {h});
    }
  }
  // (g)
  const Vector one_r = R.unit();
  {
    ItemRecorder rec(report, "counit-unit", opts);
    Matrix c1 = l.counit_of(one);
    Matrix id = Matrix::identity(f, m);
    for (std::size_t x = 0; x < m && rec.keep_going(); ++x) rec.expect_equal(c1.col(x), id.col(x), {x});
  }
  {
    ItemRecorder rec(report, "counit-multiplicative", opts);
    for (std::size_t g = 0; g < n && rec.keep_going(); ++g) {
      for (std::size_t h = 0; h < n && rec.keep_going(); ++h) {
        Matrix lhs = l.counit_c[g] * l.counit_c[h];
        Matrix rhs = l.counit_of(H.multiply(H.basis(g), H.basis(h)));
        rec.expect_equal(flatten(lhs), flatten(rhs), {g, h});
      }
    }
  }
  {
    ItemRecorder rec(report, "counit-src", opts);
    for (std::size_t a = 0; a < m && rec.keep_going(); ++a) {
      rec.expect_equal(flatten(l.counit_of(l.src.matrix.col(a))), flatten(R.left_mult(R.basis(a))), {a});
    }
  }
  {
    ItemRecorder rec(report, "counit-tgt", opts);
    for (std::size_t a = 0; a < m && rec.keep_going(); ++a) {
      rec.expect_equal(flatten(l.counit_of(l.tgt.matrix.col(a))), flatten(R.right_mult(R.basis(a))), {a});
    }
  }
  {
    // src(C(h^(1))(1)) h^(2) = h and tgt(C(h^(2))(1)) h^(1) = h
    ItemRecorder left(report, "counit-left", opts);
    ItemRecorder right(report, "counit-right", opts);
    std::vector<Vector> c_one;
    for (std::size_t j = 0; j < n; ++j) c_one.push_back(l.counit_c[j].apply(one_r));
    for (std::size_t h = 0; h < n; ++h) {
      Vector g = l.gamma.matrix.col(h);
      Vector accl = zero_vector(f, n), accr = zero_vector(f, n);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& c = g[j * n + k];
          if (c.is_zero()) continue;
          axpy(accl, c, H.multiply(l.src(c_one[j]), H.basis(k)));
          axpy(accr, c, H.multiply(l.tgt(c_one[k]), H.basis(j)));
        }
      }
      if (left.keep_going()) left.expect_equal(accl, H.basis(h), {h});
      if (right.keep_going()) right.expect_equal(accr, H.basis(h), {h});
    }
  }
  return report;
}

FsBialgebroid weak_to_bialgebroid(const WeakBialgebra& h) {
  const CounitalData cd = counital_data(h);
  const std::size_t n = h.dim();
  const Subspace& ht = cd.H_t;
  const std::size_t m = ht.dim();
  FsBialgebroid l;
  l.base = cd.ifs_t;
  l.total = h.algebra;
  l.src = LinearMap::from_matrix(ht.basis_matrix());
  l.tgt = LinearMap::from_matrix(cd.eps_s_prime * ht.basis_matrix());
  l.gamma = LinearMap::from_matrix(h.coalgebra.comul_matrix());
  l.basis_names = h.basis_names;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix c(h.field(), m, m);
    for (std::size_t p = 0; p < m; ++p) {
      c.set_col(p, ht.coordinates(cd.eps_t.apply(h.mul(h.basis(i), ht.basis()[p]))));
    }
    l.counit_c.push_back(std::move(c));
  }
  CheckReport r = check_bialgebroid(l);
  if (!r.overall()) throw AxiomFailure("translated bialgebroid fails " + r.failed_ids().front());
  return l;
}

WeakBialgebra bialgebroid_to_weak(const FsBialgebroid& l, const FrobeniusSystem& s) {
  check_shapes(l);
  if (!(s.algebra == l.base.algebra)) throw BadBase("system is not on the base algebra");
  CheckReport ifs = verify_ifs(s);
  if (!ifs.overall()) throw BadBase("system is not an IFS (" + ifs.failed_ids().front() + ")");
  const std::size_t n = l.dim();
  const FieldSpec f = l.field();
  Matrix delta = balancing_projector(l, s) * l.gamma.matrix;
  Tensor3 comul(f, n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) comul(i, j, k) = delta(j * n + k, i);
    }
  }
  Vector counit;
  for (std::size_t i = 0; i < n; ++i) counit.push_back(s.apply_phi(l.counit_c[i].apply(s.algebra.unit())));
  WeakBialgebra out(l.total, FinDimCoalgebra(f, n, std::move(comul), std::move(counit)), std::nullopt,
                    l.basis_names);
  CheckReport r = check_weak_bialgebra(out);
  if (!r.overall()) throw AxiomFailure("translated weak bialgebra fails " + r.failed_ids().front());
  return out;
}

WeakBialgebra twist_weak(const WeakBialgebra& h, const Vector& t) {
  const CounitalData cd = counital_data(h);
  if (!cd.H_t.contains(t)) throw InvalidInput("twisting element is not in H_t");
  auto tinv = algebra_inverse(h.algebra, t);
  if (!tinv) throw NotInvertible("twisting element is not invertible");
  const std::size_t n = h.dim();
  const FieldSpec f = h.field();
  Vector w = apply_axis(cd.eps_t, delta_one(h), 1, n, n);
  Vector check = zero_vector(f, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!w[j * n + k].is_zero()) axpy(check, w[j * n + k], h.mul(h.mul(h.basis(j), *tinv), h.basis(k)));
    }
  }
  if (!(check == h.one())) throw BadTwist("e^1 t^-1 e^2 = " + to_string(check) + " differs from 1");
  Matrix second = kron(Matrix::identity(f, n), h.algebra.left_mult(*tinv));
  Matrix delta = second * h.coalgebra.comul_matrix();
  Tensor3 comul(f, n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) comul(i, j, k) = delta(j * n + k, i);
    }
  }
  Vector counit;
  for (std::size_t i = 0; i < n; ++i) counit.push_back(h.eps(h.mul(t, h.basis(i))));
  WeakBialgebra out(h.algebra, FinDimCoalgebra(f, n, std::move(comul), std::move(counit)), std::nullopt,
                    h.basis_names);
  CheckReport r = check_weak_bialgebra(out);
  if (!r.overall()) throw AxiomFailure("twisted structure fails " + r.failed_ids().front());
  return out;
}

}  // namespace wqg
