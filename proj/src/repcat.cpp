#include "wqg/repcat.hpp"

#include "wqg/errors.hpp"
#include "wqg/weak.hpp"

namespace wqg {

namespace {

void add_scaled(Matrix& acc, const Scalar& s, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) acc(r, c) += s * m(r, c);
    }
  }
}

Matrix combine(FieldSpec f, std::size_t rows, std::size_t cols, const std::vector<Matrix>& ms, const Vector& x) {
  Matrix out(f, rows, cols);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) add_scaled(out, x[i], ms[i]);
  }
  return out;
}

bool same_shape(const Matrix& a, std::size_t rows, std::size_t cols) { return a.rows() == rows && a.cols() == cols; }

/// sum_jk t(j*n + k) A_j (x) B_k for a tensor t in H (x) H.
Matrix tensor_action(const Vector& t, std::size_t n, const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  const FieldSpec f = t.front().field();
  const std::size_t r = a.front().rows() * b.front().rows(), c = a.front().cols() * b.front().cols();
  Matrix out(f, r, c);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!t[j * n + k].is_zero()) add_scaled(out, t[j * n + k], kron(a[j], b[k]));
    }
  }
  return out;
}

void require_same(const WeakBialgebra& a, const WeakBialgebra& b) {
  if (!a.same_structure(b)) throw InvalidInput("objects live over different weak bialgebras");
}

/// Delta(1) = sum_a x_a (x) r_a with r_a the echelon basis of H_t.
std::vector<Vector> delta_one_left_factors(const WeakBialgebra& h, const Subspace& ht) {
  const std::size_t n = h.dim();
  const Vector d1 = delta_one(h);
  std::vector<Vector> x(ht.dim(), zero_vector(h.field(), n));
  for (std::size_t j = 0; j < n; ++j) {
    Vector row(d1.begin() + static_cast<std::ptrdiff_t>(j * n), d1.begin() + static_cast<std::ptrdiff_t>((j + 1) * n));
    if (is_zero(row)) continue;
    Vector c = ht.coordinates(row);
    for (std::size_t a = 0; a < ht.dim(); ++a) {
      if (!c[a].is_zero()) x[a][j] += c[a];
    }
  }
  return x;
}

void bimodule_items(CheckReport& report, const FinDimAlgebra& r, const std::vector<Matrix>& left,
                    const std::vector<Matrix>& right, std::size_t d, const CheckOptions& opts) {
  const FieldSpec f = r.field();
  const std::size_t m = r.dim();
  auto lof = [&](const Vector& x) { return combine(f, d, d, left, x); };
  auto rof = [&](const Vector& x) { return combine(f, d, d, right, x); };
  const Matrix id = Matrix::identity(f, d);
  {
    ItemRecorder rec(report, "bimodule-unit", opts);
    rec.expect_equal(flatten(lof(r.unit())), flatten(id), {}, "left");
    rec.expect_equal(flatten(rof(r.unit())), flatten(id), {}, "right");
  }
  ItemRecorder la(report, "bimodule-left", opts);
  ItemRecorder ra(report, "bimodule-right", opts);
  ItemRecorder co(report, "bimodule-commute", opts);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      Vector ab = r.multiply(r.basis(a), r.basis(b));
      if (la.keep_going()) la.expect_equal(flatten(left[a] * left[b]), flatten(lof(ab)), {a, b});
      if (ra.keep_going()) ra.expect_equal(flatten(right[b] * right[a]), flatten(rof(ab)), {a, b});
      if (co.keep_going()) co.expect_equal(flatten(left[a] * right[b]), flatten(right[b] * left[a]), {a, b});
    }
  }
}

}  // namespace

Matrix HModule::act(const Vector& x) const { return combine(h.field(), dim, dim, action, x); }

HModule regular_module(const WeakBialgebra& h) {
  HModule m{h, h.dim(), {}};
  for (std::size_t i = 0; i < h.dim(); ++i) m.action.push_back(h.algebra.left_mult(h.basis(i)));
  return m;
}

CheckReport check_module(const HModule& m, const CheckOptions& opts) {
  CheckReport report;
  const std::size_t n = m.h.dim();
  bool shape_ok = m.action.size() == n;
  for (const auto& a : m.action) shape_ok = shape_ok && same_shape(a, m.dim, m.dim) && a.field() == m.h.field();
  report.add_flag("shape", shape_ok);
  if (!shape_ok) return report;
  {
    ItemRecorder rec(report, "unit", opts);
    rec.expect_equal(flatten(m.act(m.h.one())), flatten(Matrix::identity(m.h.field(), m.dim)), {});
  }
  ItemRecorder rec(report, "associativity", opts);
  for (std::size_t i = 0; i < n && rec.keep_going(); ++i) {
    for (std::size_t j = 0; j < n && rec.keep_going(); ++j) {
      rec.expect_equal(flatten(m.action[i] * m.action[j]), flatten(m.act(m.h.mul(m.h.basis(i), m.h.basis(j)))),
                       {i, j});
    }
  }
  return report;
}

Subspace module_tensor_carrier(const HModule& m, const HModule& n) {
  require_same(m.h, n.h);
  return Subspace::column_space(tensor_action(delta_one(m.h), m.h.dim(), m.action, n.action));
}

HModule module_tensor(const HModule& m, const HModule& n) {
  require_same(m.h, n.h);
  for (const HModule* x : {&m, &n}) {
    CheckReport r = check_module(*x);
    if (!r.overall()) throw InvalidInput("not a module (" + r.failed_ids().front() + ")");
  }
  const WeakBialgebra& h = m.h;
  Subspace c = module_tensor_carrier(m, n);
  HModule out{h, c.dim(), {}};
  for (std::size_t i = 0; i < h.dim(); ++i) {
    Matrix a = tensor_action(h.delta(h.basis(i)), h.dim(), m.action, n.action);
    Matrix restricted(h.field(), c.dim(), c.dim());
    for (std::size_t k = 0; k < c.dim(); ++k) {
      Vector w = a.apply(c.basis()[k]);
      if (!c.contains(w)) throw InvalidInput("Delta(1)(M (x) N) is not stable under " + h.name(i));
      restricted.set_col(k, c.coordinates(w));
    }
    out.action.push_back(std::move(restricted));
  }
  return out;
}

CheckReport gamma_monoidal_check(const HModule& m, const HModule& n, const CheckOptions& opts) {
  CheckReport report;
  if (!m.h.same_structure(n.h) || !check_module(m).overall() || !check_module(n).overall()) {
    report.add_flag("modules", false, "inputs are not modules over one weak bialgebra");
    return report;
  }
  FsBialgebroid l;
  try {
    l = weak_to_bialgebroid(m.h);
  } catch (const Error& e) {
    report.add_flag("bialgebroid", false, e.what());
    return report;
  }
  const FieldSpec f = m.h.field();
  const std::size_t hn = m.h.dim(), dm = m.dim, dn = n.dim, d = dm * dn, r = l.base_dim();
  const Subspace carrier = module_tensor_carrier(m, n);

  Matrix pi(f, d, d);
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      if (l.base.e(a, b).is_zero()) continue;
      add_scaled(pi, l.base.e(a, b), kron(m.act(l.tgt.matrix.col(a)), n.act(l.src.matrix.col(b))));
    }
  }
  report.add_flag("projector-image", Subspace::column_space(pi) == carrier);

  std::vector<Vector> rel;
  for (std::size_t a = 0; a < r; ++a) {
    Matrix k = kron(m.act(l.tgt.matrix.col(a)), Matrix::identity(f, dn)) -
               kron(Matrix::identity(f, dm), n.act(l.src.matrix.col(a)));
    for (std::size_t c = 0; c < d; ++c) {
      Vector v = k.col(c);
      if (!is_zero(v)) rel.push_back(std::move(v));
    }
  }
  const QuotientSpace q = quotient_by(f, d, rel);
  std::vector<Matrix> tilde, dot;
  for (std::size_t i = 0; i < hn; ++i) {
    tilde.push_back(tensor_action(l.gamma.matrix.col(i), hn, m.action, n.action));
    dot.push_back(tensor_action(m.h.delta(m.h.basis(i)), hn, m.action, n.action));
  }
  {
    ItemRecorder rec(report, "action-well-defined", opts);
    for (std::size_t i = 0; i < hn && rec.keep_going(); ++i) {
      for (std::size_t k = 0; k < rel.size() && rec.keep_going(); ++k) {
        rec.expect_equal(q.project(tilde[i].apply(rel[k])), zero_vector(f, q.dim()), {i, k});
      }
    }
  }
  const Matrix gamma = q.projection * carrier.basis_matrix();
  report.add_flag("bijective", carrier.dim() == q.dim() && rank(gamma) == carrier.dim(),
                  std::to_string(carrier.dim()) + " vs " + std::to_string(q.dim()));
  {
    ItemRecorder rec(report, "h-linear", opts);
    for (std::size_t i = 0; i < hn && rec.keep_going(); ++i) {
      for (std::size_t k = 0; k < carrier.dim() && rec.keep_going(); ++k) {
        const Vector& v = carrier.basis()[k];
        rec.expect_equal(q.project(dot[i].apply(v)), q.project(tilde[i].apply(q.lift(q.project(v)))), {i, k});
      }
    }
  }
  return report;
}

Matrix BialgebroidComodule::left_of(const Vector& r) const { return combine(l.field(), dim, dim, left_act, r); }
Matrix BialgebroidComodule::right_of(const Vector& r) const { return combine(l.field(), dim, dim, right_act, r); }

CoalgComodule regular_comodule(const WeakBialgebra& h) { return {h, h.dim(), h.coalgebra.comul_matrix()}; }

CoalgComodule one_dim_comodule(const WeakBialgebra& h, const Vector& g) {
  if (g.size() != h.dim()) throw DimensionMismatch("coaction vector length");
  return {h, 1, Matrix::from_columns(h.field(), h.dim(), {g})};
}

CheckReport comodule_check(const CoalgComodule& c, const CheckOptions& opts) {
  CheckReport report;
  const std::size_t n = c.h.dim(), d = c.dim;
  const bool shape_ok = same_shape(c.delta, n * d, d) && c.delta.field() == c.h.field();
  report.add_flag("shape", shape_ok);
  if (!shape_ok) return report;
  const FieldSpec f = c.h.field();
  const Matrix eps = Matrix::from_rows(f, n, {c.h.coalgebra.counit()});
  ItemRecorder co(report, "coassociativity", opts);
  ItemRecorder cu(report, "counit", opts);
  for (std::size_t p = 0; p < d; ++p) {
    Vector v = c.delta.col(p);
    if (co.keep_going()) {
      co.expect_equal(apply_axis(c.h.coalgebra.comul_matrix(), v, 1, n, d), apply_axis(c.delta, v, n, d, 1), {p});
    }
    if (cu.keep_going()) cu.expect_equal(apply_axis(eps, v, 1, n, d), unit_vector(f, d, p), {p});
  }
  return report;
}

Bimodule comodule_bimodule(const CoalgComodule& c) {
  const CounitalData cd = counital_data(c.h);
  const WeakBialgebra& h = c.h;
  const std::size_t n = h.dim(), d = c.dim, m = cd.H_t.dim();
  if (!same_shape(c.delta, n * d, d)) throw InvalidInput("coaction shape");
  Bimodule out;
  for (std::size_t a = 0; a < m; ++a) {
    const Vector& r = cd.H_t.basis()[a];
    Vector el(n, Scalar::zero(h.field())), er = el;
    for (std::size_t i = 0; i < n; ++i) {
      el[i] = h.eps(h.mul(r, h.basis(i)));
      er[i] = h.eps(h.mul(h.basis(i), r));
    }
    const Matrix lm = Matrix::from_rows(h.field(), n, {el}), rm = Matrix::from_rows(h.field(), n, {er});
    Matrix left(h.field(), d, d), right(h.field(), d, d);
    for (std::size_t p = 0; p < d; ++p) {
      left.set_col(p, apply_axis(lm, c.delta.col(p), 1, n, d));
      right.set_col(p, apply_axis(rm, c.delta.col(p), 1, n, d));
    }
    out.left_act.push_back(std::move(left));
    out.right_act.push_back(std::move(right));
  }
  return out;
}

CheckReport check_comodule_identities(const CoalgComodule& c, const CheckOptions& opts) {
  CheckReport report;
  CounitalData cd;
  try {
    cd = counital_data(c.h);
  } catch (const Error& e) {
    report.add_flag("weak-bialgebra", false, e.what());
    return report;
  }
  if (!same_shape(c.delta, c.h.dim() * c.dim, c.dim)) {
    report.add_flag("shape", false);
    return report;
  }
  const WeakBialgebra& h = c.h;
  const FieldSpec f = h.field();
  const std::size_t n = h.dim(), d = c.dim;
  const Bimodule bm = comodule_bimodule(c);
  bimodule_items(report, restrict_algebra(h.algebra, cd.H_t), bm.left_act, bm.right_act, d, opts);

  const std::vector<Vector> x = delta_one_left_factors(h, cd.H_t);
  Matrix absorb(f, n * d, n * d), norm(f, n * d, n * d);
  for (std::size_t a = 0; a < x.size(); ++a) {
    absorb = absorb + kron(h.algebra.right_mult(x[a]), bm.right_act[a]);
    norm = norm + kron(h.algebra.left_mult(x[a]), bm.left_act[a]);
  }
  ItemRecorder ab(report, "absorbs-delta-one", opts);
  ItemRecorder no(report, "lambda-normalized", opts);
  for (std::size_t p = 0; p < d; ++p) {
    Vector v = c.delta.col(p);
    if (ab.keep_going()) ab.expect_equal(absorb.apply(v), v, {p});
    if (no.keep_going()) no.expect_equal(norm.apply(v), v, {p});
  }
  return report;
}

Matrix comodule_projector(const FsBialgebroid& l, const std::vector<Matrix>& left_act, std::size_t dim) {
  const FieldSpec f = l.field();
  const std::size_t n = l.dim(), m = l.base_dim();
  Matrix pi(f, n * dim, n * dim);
  for (std::size_t a = 0; a < m; ++a) {
    Matrix lt = l.total.left_mult(l.tgt.matrix.col(a));
    for (std::size_t b = 0; b < m; ++b) {
      if (l.base.e(a, b).is_zero()) continue;
      add_scaled(pi, l.base.e(a, b), kron(lt, left_act[b]));
    }
  }
  return pi;
}

CheckReport comodule_check(const BialgebroidComodule& c, const CheckOptions& opts) {
  CheckReport report;
  const FsBialgebroid& l = c.l;
  const std::size_t n = l.dim(), m = l.base_dim(), d = c.dim;
  bool shape_ok = c.left_act.size() == m && c.right_act.size() == m && same_shape(c.lambda, n * d, d);
  for (const auto* v : {&c.left_act, &c.right_act}) {
    for (const auto& a : *v) shape_ok = shape_ok && same_shape(a, d, d);
  }
  report.add_flag("shape", shape_ok);
  if (!shape_ok) return report;
  const FieldSpec f = l.field();
  bimodule_items(report, l.base.algebra, c.left_act, c.right_act, d, opts);

  const Matrix pim = comodule_projector(l, c.left_act, d);
  const Matrix pi = balancing_projector(l, l.base);
  {
    ItemRecorder rec(report, "lambda-normalized", opts);
    for (std::size_t p = 0; p < d && rec.keep_going(); ++p) {
      rec.expect_equal(pim.apply(c.lambda.col(p)), c.lambda.col(p), {p});
    }
  }
  {
    // lambda(r m s) = src(r) m_(-1) src(s) (x) m_0
    ItemRecorder rec(report, "lambda-bimodule", opts);
    for (std::size_t a = 0; a < m && rec.keep_going(); ++a) {
      Matrix ls = l.total.left_mult(l.src.matrix.col(a));
      for (std::size_t b = 0; b < m && rec.keep_going(); ++b) {
        Matrix side = kron(ls * l.total.right_mult(l.src.matrix.col(b)), Matrix::identity(f, d));
        Matrix rms = c.left_act[a] * c.right_act[b];
        for (std::size_t p = 0; p < d && rec.keep_going(); ++p) {
          rec.expect_equal(c.lambda.apply(rms.col(p)), pim.apply(side.apply(c.lambda.col(p))), {a, b, p});
        }
      }
    }
  }
  {
    // modulo both middle balancings
    ItemRecorder rec(report, "coassociativity", opts);
    for (std::size_t p = 0; p < d && rec.keep_going(); ++p) {
      Vector v = c.lambda.col(p);
      Vector diff = apply_axis(c.lambda, v, n, d, 1) - apply_axis(l.gamma.matrix, v, 1, n, d);
      diff = apply_axis(pi, diff, 1, n * n, d);
      diff = apply_axis(pim, diff, n, n * d, 1);
      rec.expect_equal(diff, zero_vector(f, n * n * d), {p});
    }
  }
  {
    ItemRecorder rec(report, "counit", opts);
    const Vector one = l.base.algebra.unit();
    std::vector<Matrix> c_one;
    for (std::size_t i = 0; i < n; ++i) c_one.push_back(c.left_of(l.counit_c[i].apply(one)));
    for (std::size_t p = 0; p < d && rec.keep_going(); ++p) {
      Vector v = c.lambda.col(p), acc = zero_vector(f, d);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t q = 0; q < d; ++q) {
          if (!v[i * d + q].is_zero()) axpy(acc, v[i * d + q], c_one[i].col(q));
        }
      }
      rec.expect_equal(acc, unit_vector(f, d, p), {p});
    }
  }
  return report;
}

BialgebroidComodule coalg_comodule_to_bialgebroid(const CoalgComodule& c) {
  CheckReport r = comodule_check(c);
  if (!r.overall()) throw InvalidInput("not a comodule (" + r.failed_ids().front() + ")");
  FsBialgebroid l = weak_to_bialgebroid(c.h);
  Bimodule bm = comodule_bimodule(c);
  Matrix lambda = comodule_projector(l, bm.left_act, c.dim) * c.delta;
  BialgebroidComodule out{std::move(l), c.dim, std::move(bm.left_act), std::move(bm.right_act), std::move(lambda)};
  CheckReport o = comodule_check(out);
  if (!o.overall()) throw AxiomFailure("translated comodule fails " + o.failed_ids().front());
  return out;
}

CoalgComodule bialgebroid_comodule_to_coalg(const BialgebroidComodule& c) {
  CheckReport r = comodule_check(c);
  if (!r.overall()) throw InvalidInput("not a comodule (" + r.failed_ids().front() + ")");
  CoalgComodule out{bialgebroid_to_weak(c.l, c.l.base), c.dim, comodule_projector(c.l, c.left_act, c.dim) * c.lambda};
  CheckReport o = comodule_check(out);
  if (!o.overall()) throw AxiomFailure("translated comodule fails " + o.failed_ids().front());
  return out;
}

ComoduleTensor comodule_tensor(const CoalgComodule& m, const CoalgComodule& n) {
  require_same(m.h, n.h);
  for (const CoalgComodule* x : {&m, &n}) {
    CheckReport r = comodule_check(*x);
    if (!r.overall()) throw InvalidInput("not a comodule (" + r.failed_ids().front() + ")");
  }
  const WeakBialgebra& h = m.h;
  const FieldSpec f = h.field();
  const std::size_t hn = h.dim(), dm = m.dim, dn = n.dim, d = dm * dn;
  const Bimodule bm = comodule_bimodule(m), bn = comodule_bimodule(n);

  std::vector<Vector> rel;
  for (std::size_t a = 0; a < bm.left_act.size(); ++a) {
    Matrix k = kron(bm.right_act[a], Matrix::identity(f, dn)) - kron(Matrix::identity(f, dm), bn.left_act[a]);
    for (std::size_t c = 0; c < d; ++c) {
      Vector v = k.col(c);
      if (!is_zero(v)) rel.push_back(std::move(v));
    }
  }
  QuotientSpace q = quotient_by(f, d, rel);

  // m (x) n -> m_(-1) n_(-1) (x) m_0 (x) n_0 and eps(m_(-1) n_(-1)) m_0 (x) n_0
  Matrix coact(f, hn * d, d), compress(f, d, d);
  for (std::size_t p = 0; p < dm; ++p) {
    Vector u = m.delta.col(p);
    for (std::size_t s = 0; s < dn; ++s) {
      Vector v = n.delta.col(s);
      Vector out = zero_vector(f, hn * d), comp = zero_vector(f, d);
      for (std::size_t i = 0; i < hn; ++i) {
        for (std::size_t pp = 0; pp < dm; ++pp) {
          const Scalar& a = u[i * dm + pp];
          if (a.is_zero()) continue;
          for (std::size_t j = 0; j < hn; ++j) {
            for (std::size_t ss = 0; ss < dn; ++ss) {
              const Scalar& b = v[j * dn + ss];
              if (b.is_zero()) continue;
              Scalar ab = a * b;
              Vector prod = h.mul(h.basis(i), h.basis(j));
              for (std::size_t k = 0; k < hn; ++k) {
                if (!prod[k].is_zero()) out[k * d + pp * dn + ss] += ab * prod[k];
              }
              comp[pp * dn + ss] += ab * h.eps(prod);
            }
          }
        }
      }
      coact.set_col(p * dn + s, out);
      compress.set_col(p * dn + s, comp);
    }
  }

  ComoduleTensor t;
  {
    ItemRecorder rec(t.report, "coaction-well-defined", {});
    for (std::size_t k = 0; k < rel.size() && rec.keep_going(); ++k) {
      rec.expect_equal(apply_axis(q.projection, coact.apply(rel[k]), hn, d, 1), zero_vector(f, hn * q.dim()), {k});
    }
  }
  Matrix qd(f, hn * q.dim(), q.dim());
  for (std::size_t c = 0; c < q.dim(); ++c) {
    qd.set_col(c, apply_axis(q.projection, coact.apply(q.section.col(c)), hn, d, 1));
  }
  t.compressed = Subspace::column_space(compress);
  t.report.add_flag("isomorphism",
                    t.compressed.dim() == q.dim() && rank(q.projection * t.compressed.basis_matrix()) == q.dim(),
                    std::to_string(t.compressed.dim()) + " vs " + std::to_string(q.dim()));
  t.quotient_form = CoalgComodule{h, q.dim(), std::move(qd)};
  t.quotient = std::move(q);
  return t;
}

}  // namespace wqg
