#include "wqg/hopf.hpp"

#include <random>

#include "wqg/errors.hpp"
#include "wqg/weak.hpp"

namespace wqg {

namespace {

// n x n^2 matrix of the multiplication map.
Matrix product_matrix(const FinDimAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix m(a.field(), n, n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& [i, c] : a.basis_product(j, k)) m(i, j * n + k) = c;
    }
  }
  return m;
}

Vector delta2(const WeakBialgebra& h, const Vector& x) {
  const std::size_t n = h.dim();
  return apply_axis(h.coalgebra.comul_matrix(), h.delta(x), 1, n, n);
}

bool full_rank(const Matrix& m, std::size_t d) { return m.rows() == d && m.cols() == d && rank(m) == d; }

Matrix combine(FieldSpec f, std::size_t d, const std::vector<Matrix>& basis, const std::vector<Scalar>& coeff) {
  Matrix out(f, d, d);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeff[i].is_zero()) continue;
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) out(r, c) += coeff[i] * basis[i](r, c);
    }
  }
  return out;
}

}  // namespace

CheckReport verify_antipode(const WeakBialgebra& h, const Matrix& s, const CheckOptions& opts) {
  const std::size_t n = h.dim();
  if (s.rows() != n || s.cols() != n) throw DimensionMismatch("antipode matrix shape");
  CounitalData cd = counital_data_unchecked(h);
  Matrix m = product_matrix(h.algebra);
  CheckReport report;
  auto item = [&](const std::string& id, auto&& lhs, auto&& rhs) {
    ItemRecorder rec(report, id, opts);
    for (std::size_t i = 0; i < n && rec.keep_going(); ++i) rec.expect_equal(lhs(i), rhs(i), {i});
  };
  auto S = [&](std::size_t i) { return s.col(i); };
  item(
      "axiom-source", [&](std::size_t i) { return m.apply(apply_axis(s, h.delta(h.basis(i)), 1, n, n)); },
      [&](std::size_t i) { return cd.eps_s.col(i); });
  item(
      "axiom-target", [&](std::size_t i) { return m.apply(apply_axis(s, h.delta(h.basis(i)), n, n, 1)); },
      [&](std::size_t i) { return cd.eps_t.col(i); });
  item(
      "axiom-middle",
      [&](std::size_t i) {
        Vector v = delta2(h, h.basis(i));
        v = apply_axis(s, apply_axis(s, v, 1, n, n * n), n * n, n, 1);
        return m.apply(apply_axis(m, v, 1, n * n, n));
      },
      S);
  item(
      "absorb-target",
      [&](std::size_t i) {
        return m.apply(apply_axis(cd.eps_t, apply_axis(s, h.delta(h.basis(i)), 1, n, n), n, n, 1));
      },
      S);
  item(
      "absorb-source",
      [&](std::size_t i) {
        return m.apply(apply_axis(s, apply_axis(cd.eps_s, h.delta(h.basis(i)), 1, n, n), n, n, 1));
      },
      S);
  {
    // eps_s(x h_1) S(h_2) = S(h) x for x in H_s
    ItemRecorder rec(report, "source-module", opts);
    for (std::size_t i = 0; i < n && rec.keep_going(); ++i) {
      Vector d = h.delta(h.basis(i));
      for (std::size_t a = 0; a < cd.H_s.dim() && rec.keep_going(); ++a) {
        const Vector& x = cd.H_s.basis()[a];
        Vector v = apply_axis(cd.eps_s * h.algebra.left_mult(x), d, 1, n, n);
        rec.expect_equal(m.apply(apply_axis(s, v, n, n, 1)), h.mul(s.col(i), x), {i, a});
      }
    }
  }
  {
    ItemRecorder rec(report, "anti-multiplicative", opts);
    for (std::size_t i = 0; i < n && rec.keep_going(); ++i) {
      for (std::size_t j = 0; j < n && rec.keep_going(); ++j) {
        rec.expect_equal(s.apply(h.mul(h.basis(i), h.basis(j))), h.mul(s.col(j), s.col(i)), {i, j});
      }
    }
  }
  {
    ItemRecorder rec(report, "unit", opts);
    rec.expect_equal(s.apply(h.one()), h.one(), {});
  }
  {
    ItemRecorder rec(report, "source-to-target", opts);
    for (std::size_t a = 0; a < cd.H_s.dim() && rec.keep_going(); ++a) {
      const Vector& y = cd.H_s.basis()[a];
      rec.expect_equal(s.apply(y), cd.eps_t.apply(y), {a});
    }
  }
  {
    // h_1 (x) h_2 S(h_3) = 1_1 h (x) 1_2
    ItemRecorder rec(report, "reconstruction", opts);
    Vector d1 = delta_one(h);
    for (std::size_t i = 0; i < n && rec.keep_going(); ++i) {
      Vector v = apply_axis(s, delta2(h, h.basis(i)), n * n, n, 1);
      v = apply_axis(m, v, n, n * n, 1);
      rec.expect_equal(v, h.algebra.multiply_tensor(d1, kron(h.basis(i), h.one()), 2), {i});
    }
  }
  return report;
}

BetaData beta_map(const WeakBialgebra& h) {
  const std::size_t n = h.dim();
  const FieldSpec f = h.field();
  CounitalData cd = counital_data_unchecked(h);
  std::vector<Vector> rels;
  for (const auto& y : cd.H_s.basis()) {
    for (std::size_t g = 0; g < n; ++g) {
      Vector gy = h.mul(h.basis(g), y);
      for (std::size_t k = 0; k < n; ++k) {
        Vector r = kron(gy, h.basis(k)) - kron(h.basis(g), h.mul(y, h.basis(k)));
        if (!is_zero(r)) rels.push_back(std::move(r));
      }
    }
  }
  BetaData out;
  out.domain = quotient_by(f, n * n, rels);
  Vector d1 = delta_one(h);
  std::vector<Vector> span;
  out.beta0 = Matrix(f, n * n, n * n);
  for (std::size_t g = 0; g < n; ++g) {
    Vector dg = h.delta(h.basis(g));
    for (std::size_t k = 0; k < n; ++k) {
      out.beta0.set_col(g * n + k, apply_axis(h.algebra.right_mult(h.basis(k)), dg, n, n, 1));
      span.push_back(h.algebra.multiply_tensor(d1, kron(h.basis(g), h.basis(k)), 2));
    }
  }
  out.codomain = Subspace::span(f, n * n, span);
  for (const auto& r : out.domain.relations.basis()) {
    if (!is_zero(out.beta0.apply(r))) throw IllDefined("beta0 does not vanish on the H_s-balancing relations");
  }
  const std::size_t dd = out.domain.dim(), cdim = out.codomain.dim();
  out.matrix = Matrix(f, cdim, dd);
  for (std::size_t q = 0; q < dd; ++q) {
    Vector img = out.beta0.apply(out.domain.section.col(q));
    out.matrix.set_col(q, out.codomain.coordinates(img));
  }
  out.rank = rank(out.matrix);
  out.bijective = dd == cdim && out.rank == dd;
  return out;
}

std::variant<Matrix, NotHopf> solve_antipode(const WeakBialgebra& h) {
  BetaData b = beta_map(h);
  if (!b.bijective) return NotHopf{b.domain.dim(), b.codomain.dim(), b.rank};
  const std::size_t n = h.dim();
  const FieldSpec f = h.field();
  CounitalData cd = counital_data_unchecked(h);
  Matrix pi(f, n, n * n);
  for (std::size_t g = 0; g < n; ++g) {
    Vector sg = cd.eps_s.col(g);
    for (std::size_t k = 0; k < n; ++k) pi.set_col(g * n + k, h.mul(sg, h.basis(k)));
  }
  for (const auto& r : b.domain.relations.basis()) {
    if (!is_zero(pi.apply(r))) throw IllDefined("pi does not vanish on the H_s-balancing relations");
  }
  Matrix inv = inverse(b.matrix);
  Vector d1 = delta_one(h);
  Matrix s(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = h.algebra.multiply_tensor(d1, kron(h.basis(i), h.one()), 2);
    s.set_col(i, pi.apply(b.domain.lift(inv.apply(b.codomain.coordinates(v)))));
  }
  CheckReport r = verify_antipode(h, s);
  if (!r.overall()) throw AxiomFailure("solved antipode fails " + r.failed_ids().front());
  return s;
}

CanonicalMapData tak_canonical_map(const FsBialgebroid& l) {
  CheckReport pre = check_bialgebroid(l);
  if (!pre.overall()) throw InvalidInput("not a bialgebroid (" + pre.failed_ids().front() + ")");
  const std::size_t n = l.dim();
  const FieldSpec f = l.field();
  std::vector<Vector> rels;
  for (std::size_t a = 0; a < l.base_dim(); ++a) {
    Vector t = l.tgt.matrix.col(a);
    for (std::size_t g = 0; g < n; ++g) {
      Vector gt = l.total.multiply(l.total.basis(g), t);
      for (std::size_t k = 0; k < n; ++k) {
        Vector r = kron(gt, l.total.basis(k)) - kron(l.total.basis(g), l.total.multiply(t, l.total.basis(k)));
        if (!is_zero(r)) rels.push_back(std::move(r));
      }
    }
  }
  QuotientSpace domain = quotient_by(f, n * n, rels);
  Matrix pi = balancing_projector(l, l.base);
  Subspace codomain = Subspace::column_space(pi);
  Matrix map(f, n * n, n * n);
  for (std::size_t g = 0; g < n; ++g) {
    Vector gg = l.gamma(l.total.basis(g));
    for (std::size_t k = 0; k < n; ++k) {
      map.set_col(g * n + k, pi.apply(apply_axis(l.total.right_mult(l.total.basis(k)), gg, n, n, 1)));
    }
  }
  for (const auto& r : domain.relations.basis()) {
    if (!is_zero(map.apply(r))) throw IllDefined("canonical map does not vanish on the balancing relations");
  }
  Matrix induced(f, codomain.dim(), domain.dim());
  for (std::size_t q = 0; q < domain.dim(); ++q) {
    induced.set_col(q, codomain.coordinates(map.apply(domain.section.col(q))));
  }
  CanonicalMapData out{domain.dim(), codomain.dim(), rank(induced), false};
  out.bijective = out.domain_dim == out.codomain_dim && out.rank == out.domain_dim;
  return out;
}

bool check_tak_hopf(const FsBialgebroid& l) { return tak_canonical_map(l).bijective; }

IntertwinerResult find_invertible_intertwiner(FieldSpec f, std::size_t d, const std::vector<Matrix>& a,
                                              const std::vector<Matrix>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("action lists differ in length");
  std::vector<Vector> eqs;
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        Vector row = zero_vector(f, d * d);
        for (std::size_t q = 0; q < d; ++q) {
          row[r * d + q] += a[k](q, c);
          row[q * d + c] -= b[k](r, q);
        }
        if (!is_zero(row)) eqs.push_back(std::move(row));
      }
    }
  }
  std::vector<Vector> ker = eqs.empty() ? Subspace::whole(f, d * d).basis() : kernel(Matrix::from_rows(f, d * d, eqs));
  IntertwinerResult out;
  out.space_dim = ker.size();
  if (d == 0) {
    out.decision = Decision::yes;
    out.witness = Matrix(f, 0, 0);
    return out;
  }
  std::vector<Matrix> basis;
  for (const auto& v : ker) basis.push_back(unflatten(f, v, d, d));
  if (basis.empty()) {
    out.decision = Decision::no;
    return out;
  }
  // Every intertwiner kills a common vector, or all images lie in a proper subspace.
  std::vector<Vector> rows, cols;
  for (const auto& m : basis) {
    for (std::size_t i = 0; i < d; ++i) {
      rows.push_back(m.row(i));
      cols.push_back(m.col(i));
    }
  }
  if (Subspace::span(f, d, rows).dim() < d || Subspace::span(f, d, cols).dim() < d) {
    out.decision = Decision::no;
    return out;
  }
  for (const auto& m : basis) {
    if (full_rank(m, d)) {
      out.decision = Decision::yes;
      out.witness = m;
      return out;
    }
  }
  const std::size_t k = basis.size();
  std::vector<Scalar> digits;
  bool whole_field = false;
  if (f.is_rational()) {
    for (std::int64_t v : {0, 1, -1, 2, -2}) digits.emplace_back(f, v);
  } else {
    whole_field = f.modulus() <= 64;
    const std::uint64_t top = whole_field ? f.modulus() : 64;
    for (std::uint64_t v = 0; v < top; ++v) digits.emplace_back(f, static_cast<std::int64_t>(v));
  }
  const std::size_t radix = digits.size();
  auto accept = [&](const std::vector<Scalar>& coeff) {
    Matrix m = combine(f, d, basis, coeff);
    if (!full_rank(m, d)) return false;
    out.decision = Decision::yes;
    out.witness = std::move(m);
    return true;
  };
  constexpr std::size_t kGridCap = 200000;
  std::size_t total = 1;
  bool small = true;
  for (std::size_t i = 0; i < k && small; ++i) {
    if (total > kGridCap / radix) small = false;
    else total *= radix;
  }
  std::vector<Scalar> coeff(k, Scalar::zero(f));
  if (small) {
    std::vector<std::size_t> counter(k, 0);
    for (std::size_t step = 1; step < total; ++step) {
      for (std::size_t i = 0; i < k; ++i) {
        if (++counter[i] < radix) break;
        counter[i] = 0;
      }
      for (std::size_t i = 0; i < k; ++i) coeff[i] = digits[counter[i]];
      if (accept(coeff)) return out;
    }
    // A nonzero determinant has degree at most d in each coefficient; a full
    // grid with more than d points per axis cannot miss it.
    out.decision = radix > d || whole_field ? Decision::no : Decision::undecided;
    return out;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::size_t> pick(0, radix - 1);
  for (std::size_t i = 0; i < k; ++i) coeff[i] = Scalar::one(f);
  if (accept(coeff)) return out;
  for (int attempt = 0; attempt < 256; ++attempt) {
    for (std::size_t i = 0; i < k; ++i) coeff[i] = digits[pick(rng)];
    if (accept(coeff)) return out;
  }
  out.decision = Decision::undecided;
  return out;
}

IntertwinerResult sub_quotient_hopf_criterion(const WeakBialgebra& b) {
  CounitalData cd = counital_data(b);
  std::vector<Matrix> a, c;
  for (const auto& y : cd.H_s.basis()) {
    a.push_back(b.algebra.right_mult(y));
    c.push_back(b.algebra.left_mult(cd.eps_t.apply(y)));
  }
  return find_invertible_intertwiner(b.field(), b.dim(), a, c);
}

WeakBialgebra restrict_weak_bialgebra(const WeakBialgebra& h, const Subspace& sub) {
  const std::size_t n = h.dim(), m = sub.dim();
  const FieldSpec f = h.field();
  FinDimAlgebra alg = restrict_algebra(h.algebra, sub);
  Tensor3 comul(f, m, m, m);
  Vector counit;
  for (std::size_t i = 0; i < m; ++i) {
    const Vector& x = sub.basis()[i];
    Vector d = h.delta(x);
    Vector rebuilt = zero_vector(f, n * n);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t c = 0; c < m; ++c) {
        comul(i, a, c) = d[sub.pivots()[a] * n + sub.pivots()[c]];
        if (!comul(i, a, c).is_zero()) axpy(rebuilt, comul(i, a, c), kron(sub.basis()[a], sub.basis()[c]));
      }
    }
    if (!(rebuilt == d)) throw InvalidInput("subspace is not a subcoalgebra");
    counit.push_back(h.eps(x));
  }
  std::optional<Matrix> s;
  if (h.antipode) {
    Matrix sm(f, m, m);
    bool closed = true;
    for (std::size_t i = 0; i < m && closed; ++i) {
      Vector y = h.antipode->apply(sub.basis()[i]);
      if (!sub.contains(y)) closed = false;
      else sm.set_col(i, sub.coordinates(y));
    }
    if (closed) s = std::move(sm);
  }
  std::vector<std::string> names;
  if (!h.basis_names.empty()) {
    for (std::size_t i = 0; i < m; ++i) {
      const Vector& x = sub.basis()[i];
      std::size_t nz = 0, at = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (!x[j].is_zero()) {
          ++nz;
          at = j;
        }
      }
      names.push_back(nz == 1 && x[at] == Scalar::one(f) ? h.name(at) : "b" + std::to_string(i));
    }
  }
  return WeakBialgebra(std::move(alg), FinDimCoalgebra(f, m, std::move(comul), std::move(counit)), std::move(s),
                       std::move(names));
}

}  // namespace wqg
