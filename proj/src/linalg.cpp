#include "wqg/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "wqg/errors.hpp"

namespace wqg {

namespace {

void require_same_field(FieldSpec a, FieldSpec b) {
  if (!(a == b)) throw FieldMismatch(a.to_string() + " vs " + b.to_string());
}

void require_same_size(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch(std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

std::vector<std::vector<std::size_t>> row_supports(const Matrix& m) {
  std::vector<std::vector<std::size_t>> nz(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) nz[r].push_back(c);
    }
  }
  return nz;
}

}  // namespace

Vector zero_vector(FieldSpec f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(FieldSpec f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same_size(a, b);
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x = s * x;
  return r;
}

void axpy(Vector& acc, const Scalar& s, const Vector& v) {
  require_same_size(acc, v);
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) acc[i] += s * v[i];
  }
}

std::size_t first_nonzero(const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return i;
  }
  return v.size();
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(FieldSpec f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(FieldSpec f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length");
    for (std::size_t c = 0; c < cols; ++c) {
      require_same_field(f, rows[r][c].field());
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(FieldSpec f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

Matrix Matrix::from_ints(FieldSpec f, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged literal");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(f, rows[r][c]);
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_col(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionMismatch("column length");
  for (std::size_t r = 0; r < rows_; ++r) {
    require_same_field(field_, v[r].field());
    (*this)(r, c) = v[r];
  }
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) {
    throw DimensionMismatch("apply: " + std::to_string(cols_) + " vs " + std::to_string(v.size()));
  }
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
  Matrix c(a.field_, a.rows_, b.cols_);
  auto nz = row_supports(b);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j : nz[k]) c(i, j) += x * b(k, j);
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", " : "") << wqg::to_string(row(r));
  }
  os << ']';
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  Matrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p) {
        for (std::size_t q = 0; q < b.cols(); ++q) {
          const Scalar& y = b(p, q);
          if (!y.is_zero()) k(i * b.rows() + p, j * b.cols() + q) = x * y;
        }
      }
    }
  }
  return k;
}

RrefResult rref(const Matrix& input) {
  Matrix m = input;
  const FieldSpec f = m.field();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) require_same_field(f, m(r, c).field());
  }
  RrefResult res;
  std::size_t rank = 0;
  std::vector<std::size_t> support;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank) {
      for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
    }
    Scalar inv = m(rank, c).inverse();
    support.clear();
    for (std::size_t j = c; j < m.cols(); ++j) {
      if (!m(rank, j).is_zero()) {
        m(rank, j) *= inv;
        support.push_back(j);
      }
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, c).is_zero()) continue;
      Scalar factor = m(r, c);
      for (std::size_t j : support) m(r, j) -= factor * m(rank, j);
    }
    res.pivots.push_back(c);
    ++rank;
  }
  res.rank = rank;
  res.reduced = std::move(m);
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) throw DimensionMismatch("solve_linear: row counts differ");
  const FieldSpec f = a.field();
  Matrix aug(f, a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, a.cols() + c) = b(r, c);
  }
  RrefResult rr = rref(aug);
  Matrix x(f, a.cols(), b.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) {
    std::size_t p = rr.pivots[i];
    if (p >= a.cols()) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(p, c) = rr.reduced(i, a.cols() + c);
  }
  return x;
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  auto x = solve_linear(a, Matrix::from_columns(a.field(), b.size(), {b}));
  if (!x) return std::nullopt;
  return x->col(0);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Singular("non-square matrix");
  auto x = solve_linear(m, Matrix::identity(m.field(), m.rows()));
  if (!x || rank(m) != m.rows()) throw Singular("matrix is not invertible");
  return *x;
}

std::vector<Vector> kernel(const Matrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t fcol = 0; fcol < m.cols(); ++fcol) {
    if (is_pivot[fcol]) continue;
    Vector v = unit_vector(m.field(), m.cols(), fcol);
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.reduced(i, fcol);
    out.push_back(std::move(v));
  }
  return out;
}

Subspace::Subspace(FieldSpec f, std::size_t ambient_dim) : field_(f), ambient_(ambient_dim) {}

Subspace Subspace::span(FieldSpec f, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Subspace s(f, ambient_dim);
  if (vectors.empty()) return s;
  RrefResult rr = rref(Matrix::from_rows(f, ambient_dim, vectors));
  for (std::size_t i = 0; i < rr.rank; ++i) {
    s.basis_.push_back(rr.reduced.row(i));
    s.pivots_.push_back(rr.pivots[i]);
  }
  return s;
}

Subspace Subspace::column_space(const Matrix& m) {
  std::vector<Vector> cols;
  cols.reserve(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.col(c));
  return span(m.field(), m.rows(), cols);
}

Subspace Subspace::whole(FieldSpec f, std::size_t ambient_dim) {
  Subspace s(f, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.basis_.push_back(unit_vector(f, ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vector Subspace::residue(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("subspace residue");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (r[pivots_[i]].is_zero()) continue;
    Scalar c = r[pivots_[i]];
    axpy(r, -c, basis_[i]);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(residue(v)); }

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw InvalidInput("vector " + to_string(v) + " is not in the subspace");
  Vector c;
  c.reserve(basis_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

Vector Subspace::from_coordinates(const Vector& c) const {
  if (c.size() != basis_.size()) throw DimensionMismatch("subspace coordinates");
  Vector v = zero_vector(field_, ambient_);
  for (std::size_t i = 0; i < c.size(); ++i) axpy(v, c[i], basis_[i]);
  return v;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_columns(field_, ambient_, basis_); }

QuotientSpace quotient_by(FieldSpec f, std::size_t ambient_dim, const std::vector<Vector>& relations) {
  for (const auto& r : relations) {
    if (r.size() != ambient_dim) throw DimensionMismatch("relation vector length");
    for (const auto& x : r) require_same_field(f, x.field());
  }
  QuotientSpace q;
  q.ambient_dim = ambient_dim;
  q.relations = Subspace::span(f, ambient_dim, relations);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (auto p : q.relations.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  std::vector<std::size_t> free_pos(ambient_dim, 0);
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    if (!is_pivot[j]) {
      free_pos[j] = free.size();
      free.push_back(j);
    }
  }
  q.projection = Matrix(f, free.size(), ambient_dim);
  q.section = Matrix(f, ambient_dim, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    q.projection(k, free[k]) = Scalar::one(f);
    q.section(free[k], k) = Scalar::one(f);
  }
  const auto& basis = q.relations.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::size_t p = q.relations.pivots()[i];
    for (std::size_t j = 0; j < ambient_dim; ++j) {
      if (!is_pivot[j] && !basis[i][j].is_zero()) q.projection(free_pos[j], p) = -basis[i][j];
    }
  }
  return q;
}

Vector kron(const Vector& a, const Vector& b) {
  if (a.empty() || b.empty()) return {};
  Vector out = zero_vector(a[0].field(), a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
    }
  }
  return out;
}

Vector apply_axis(const Matrix& op, const Vector& v, std::size_t pre, std::size_t mid, std::size_t post) {
  if (op.cols() != mid || v.size() != pre * mid * post) throw DimensionMismatch("apply_axis");
  const std::size_t out_mid = op.rows();
  std::vector<std::vector<std::size_t>> col_nz(mid);
  for (std::size_t i = 0; i < mid; ++i) {
    for (std::size_t o = 0; o < out_mid; ++o) {
      if (!op(o, i).is_zero()) col_nz[i].push_back(o);
    }
  }
  Vector out = zero_vector(op.field(), pre * out_mid * post);
  for (std::size_t p = 0; p < pre; ++p) {
    for (std::size_t i = 0; i < mid; ++i) {
      for (std::size_t q = 0; q < post; ++q) {
        const Scalar& x = v[(p * mid + i) * post + q];
        if (x.is_zero()) continue;
        for (std::size_t o : col_nz[i]) out[(p * out_mid + o) * post + q] += op(o, i) * x;
      }
    }
  }
  return out;
}

Vector flip(const Vector& v, std::size_t n1, std::size_t n2) {
  if (v.size() != n1 * n2) throw DimensionMismatch("flip");
  Vector out = v;
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n2; ++j) out[j * n1 + i] = v[i * n2 + j];
  }
  return out;
}

}  // namespace wqg
