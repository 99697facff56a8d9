#include "wqg/frobenius.hpp"

#include "wqg/errors.hpp"

namespace wqg {

namespace {

// phi(x r_b) for every b, as a row.
Vector phi_row_right(const FrobeniusSystem& s, const Vector& x) {
  Vector out;
  out.reserve(s.dim());
  for (std::size_t b = 0; b < s.dim(); ++b) out.push_back(s.apply_phi(s.algebra.multiply(x, s.algebra.basis(b))));
  return out;
}

void require_frobenius(const FrobeniusSystem& s) {
  CheckReport r = verify_frobenius_system(s);
  if (!r.overall()) throw NotFrobenius("dual-basis laws fail (" + r.failed_ids().front() + ")");
}

}  // namespace

Scalar FrobeniusSystem::apply_phi(const Vector& x) const {
  if (x.size() != phi.size()) throw DimensionMismatch("phi argument");
  Scalar acc = Scalar::zero(field());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero() && !phi[i].is_zero()) acc += x[i] * phi[i];
  }
  return acc;
}

Vector FrobeniusSystem::nabla_e() const {
  Vector out = zero_vector(field(), dim());
  for (std::size_t a = 0; a < dim(); ++a) {
    for (std::size_t b = 0; b < dim(); ++b) {
      if (e(a, b).is_zero()) continue;
      for (const auto& [k, c] : algebra.basis_product(a, b)) out[k] += e(a, b) * c;
    }
  }
  return out;
}

CheckReport verify_frobenius_system(const FrobeniusSystem& s, const CheckOptions& opts) {
  const std::size_t n = s.dim();
  if (s.phi.size() != n || s.e.rows() != n || s.e.cols() != n) throw DimensionMismatch("Frobenius system shape");
  const FinDimAlgebra& r = s.algebra;
  CheckReport report;
  {
    // phi(r e^1) e^2 = r
    ItemRecorder rec(report, "dual-basis-left", opts);
    for (std::size_t c = 0; c < n && rec.keep_going(); ++c) {
      Vector acc = zero_vector(s.field(), n);
      for (std::size_t a = 0; a < n; ++a) {
        Scalar w = s.apply_phi(r.multiply(r.basis(c), r.basis(a)));
        if (w.is_zero()) continue;
        for (std::size_t b = 0; b < n; ++b) {
          if (!s.e(a, b).is_zero()) acc[b] += w * s.e(a, b);
        }
      }
      rec.expect_equal(acc, r.basis(c), {c});
    }
  }
  {
    // e^1 phi(e^2 r) = r
    ItemRecorder rec(report, "dual-basis-right", opts);
    for (std::size_t c = 0; c < n && rec.keep_going(); ++c) {
      Vector acc = zero_vector(s.field(), n);
      for (std::size_t b = 0; b < n; ++b) {
        Scalar w = s.apply_phi(r.multiply(r.basis(b), r.basis(c)));
        if (w.is_zero()) continue;
        for (std::size_t a = 0; a < n; ++a) {
          if (!s.e(a, b).is_zero()) acc[a] += w * s.e(a, b);
        }
      }
      rec.expect_equal(acc, r.basis(c), {c});
    }
  }
  {
    ItemRecorder rec(report, "casimir", opts);
    Vector e = s.e_tensor();
    Vector one = r.unit();
    for (std::size_t x = 0; x < n && rec.keep_going(); ++x) {
      Vector lhs = r.multiply_tensor(kron(r.basis(x), one), e, 2);
      Vector rhs = r.multiply_tensor(e, kron(one, r.basis(x)), 2);
      rec.expect_equal(lhs, rhs, {x});
    }
  }
  return report;
}

CheckReport verify_ifs(const FrobeniusSystem& s, const CheckOptions& opts) {
  CheckReport report = verify_frobenius_system(s, opts);
  ItemRecorder rec(report, "nabla-one", opts);
  rec.expect_equal(s.nabla_e(), s.algebra.unit(), {});
  return report;
}

Matrix frobenius_automorphism(const FrobeniusSystem& s) {
  require_frobenius(s);
  const std::size_t n = s.dim();
  Matrix theta(s.field(), n, n);
  // theta(x) = e^1 phi(x e^2)
  for (std::size_t x = 0; x < n; ++x) {
    Vector w = phi_row_right(s, s.algebra.basis(x));
    Vector col = zero_vector(s.field(), n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!s.e(a, b).is_zero() && !w[b].is_zero()) col[a] += s.e(a, b) * w[b];
      }
    }
    theta.set_col(x, col);
  }
  return theta;
}

SymmetryFlags symmetry_flags(const FrobeniusSystem& s) {
  SymmetryFlags flags;
  flags.theta_identity = frobenius_automorphism(s) == Matrix::identity(s.field(), s.dim());
  flags.e_flip_invariant = s.e == s.e.transpose();
  flags.phi_symmetric = true;
  for (std::size_t i = 0; i < s.dim() && flags.phi_symmetric; ++i) {
    for (std::size_t j = i + 1; j < s.dim() && flags.phi_symmetric; ++j) {
      flags.phi_symmetric = s.apply_phi(s.algebra.multiply(s.algebra.basis(i), s.algebra.basis(j))) ==
                            s.apply_phi(s.algebra.multiply(s.algebra.basis(j), s.algebra.basis(i)));
    }
  }
  return flags;
}

Vector compare_frobenius_systems(const FrobeniusSystem& s, const FrobeniusSystem& s2) {
  if (!(s.algebra == s2.algebra)) throw InvalidInput("systems live on different algebras");
  require_frobenius(s);
  require_frobenius(s2);
  const std::size_t n = s.dim();
  // t = psi(e^1) e^2
  Vector t = zero_vector(s.field(), n);
  for (std::size_t a = 0; a < n; ++a) {
    Scalar w = s2.phi[a];
    if (w.is_zero()) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (!s.e(a, b).is_zero()) t[b] += w * s.e(a, b);
    }
  }
  auto tinv = algebra_inverse(s.algebra, t);
  if (!tinv) throw NonInvertibleT("t = " + to_string(t) + " is not invertible");
  FrobeniusSystem predicted = twist_frobenius_system(s, t);
  if (!(predicted.phi == s2.phi) || !(predicted.e == s2.e)) {
    throw AxiomFailure("the second system is not the twist of the first by t");
  }
  if (verify_ifs(s).overall() && verify_ifs(s2).overall()) {
    // e^1 t^-1 e^2 = 1
    Vector acc = zero_vector(s.field(), n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (s.e(a, b).is_zero()) continue;
        axpy(acc, s.e(a, b), s.algebra.multiply(s.algebra.multiply(s.algebra.basis(a), *tinv), s.algebra.basis(b)));
      }
    }
    if (!(acc == s.algebra.unit())) throw AxiomFailure("e^1 t^-1 e^2 differs from 1");
  }
  return t;
}

FrobeniusSystem twist_frobenius_system(const FrobeniusSystem& s, const Vector& t) {
  auto tinv = algebra_inverse(s.algebra, t);
  if (!tinv) throw NotInvertible("twisting element is not invertible");
  const std::size_t n = s.dim();
  FrobeniusSystem out{s.algebra, Vector{}, Matrix(s.field(), n, n)};
  for (std::size_t x = 0; x < n; ++x) out.phi.push_back(s.apply_phi(s.algebra.multiply(t, s.algebra.basis(x))));
  Matrix right = s.algebra.left_mult(*tinv);
  // (1 (x) t^-1) e: apply left multiplication by t^-1 to the second factor.
  out.e = s.e * right.transpose();
  return out;
}

FrobeniusSystem trace_ifs_commutative(const FinDimAlgebra& r) {
  if (!r.is_commutative()) throw NotCommutative("trace construction needs a commutative algebra");
  const std::size_t n = r.dim();
  const FieldSpec f = r.field();
  Vector phi;
  for (std::size_t x = 0; x < n; ++x) {
    Matrix l = r.left_mult(r.basis(x));
    Scalar tr = Scalar::zero(f);
    for (std::size_t i = 0; i < n; ++i) tr += l(i, i);
    phi.push_back(tr);
  }
  FrobeniusSystem s{r, phi, Matrix(f, n, n)};

  // Unknowns E(a, b) at column a*n + b.
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t x = 0; x < n; ++x) {
    // Casimir: (x r_a) (x) r_b - r_a (x) (r_b x), every output coordinate (c, d).
    std::vector<Vector> block(n * n, zero_vector(f, n * n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (const auto& [c, v] : r.basis_product(x, a)) block[c * n + b][a * n + b] += v;
        for (const auto& [d, v] : r.basis_product(b, x)) block[a * n + d][a * n + b] -= v;
      }
    }
    for (auto& row : block) {
      rows.push_back(std::move(row));
      rhs.push_back(Scalar::zero(f));
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    // phi(r_c e^1) e^2 = r_c
    std::vector<Vector> block(n, zero_vector(f, n * n));
    for (std::size_t a = 0; a < n; ++a) {
      Scalar w = s.apply_phi(r.multiply(r.basis(c), r.basis(a)));
      for (std::size_t b = 0; b < n; ++b) block[b][a * n + b] += w;
    }
    for (std::size_t b = 0; b < n; ++b) {
      rows.push_back(std::move(block[b]));
      rhs.push_back(b == c ? Scalar::one(f) : Scalar::zero(f));
    }
  }
  {
    std::vector<Vector> block(n, zero_vector(f, n * n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (const auto& [k, v] : r.basis_product(a, b)) block[k][a * n + b] += v;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      rows.push_back(std::move(block[k]));
      rhs.push_back(r.unit()[k]);
    }
  }
  auto sol = solve_linear(Matrix::from_rows(f, n * n, rows), rhs);
  if (!sol) throw NotSeparable("no separability element dual to the trace form");
  s.e = unflatten(f, *sol, n, n);
  if (!verify_ifs(s).overall()) throw NotSeparable("trace system fails the IFS laws");
  return s;
}

FrobeniusSystem matrix_ifs_candidate(std::size_t n, const Matrix& u, FieldSpec f) {
  if (u.rows() != n || u.cols() != n) throw DimensionMismatch("u must be n x n");
  Matrix uinv = inverse(u);
  FrobeniusSystem s{matrix_algebra(f, n), zero_vector(f, n * n), Matrix(f, n * n, n * n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      s.phi[i * n + j] = u(j, i);  // tr(u E_ij) = u_ji
      // E_ij (x) u^-1 E_ji = sum_k (u^-1)_kj E_ij (x) E_ki
      for (std::size_t k = 0; k < n; ++k) s.e(i * n + j, k * n + i) += uinv(k, j);
    }
  }
  return s;
}

FrobeniusSystem matrix_ifs(std::size_t n, const Matrix& u, FieldSpec f) {
  FrobeniusSystem s = matrix_ifs_candidate(n, u, f);
  Matrix uinv = inverse(u);
  Scalar tr = Scalar::zero(f);
  for (std::size_t i = 0; i < n; ++i) tr += uinv(i, i);
  if (!tr.is_one()) throw BadNormalization("tr(u^-1) = " + tr.to_string() + ", expected 1");
  CheckReport r = verify_ifs(s);
  if (!r.overall()) throw AxiomFailure("matrix system fails " + r.failed_ids().front());
  return s;
}

}  // namespace wqg
