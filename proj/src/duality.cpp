#include "wqg/duality.hpp"

#include "wqg/errors.hpp"
#include "wqg/hopf.hpp"
#include "wqg/weak.hpp"

namespace wqg {

WeakBialgebra dual_weak_bialgebra(const WeakBialgebra& h) {
  CheckReport pre = check_weak_bialgebra(h);
  if (!pre.overall()) throw InvalidInput("not a weak bialgebra (" + pre.failed_ids().front() + ")");
  std::vector<std::string> names;
  if (!h.basis_names.empty()) {
    for (std::size_t i = 0; i < h.dim(); ++i) names.push_back(h.name(i) + "*");
  }
  std::optional<Matrix> s;
  if (h.antipode) s = h.antipode->transpose();
  WeakBialgebra d(dual_algebra(h.coalgebra), dual_coalgebra(h.algebra), s, std::move(names));
  CheckReport post = check_weak_bialgebra(d);
  if (!post.overall()) throw AxiomFailure("dual fails " + post.failed_ids().front());
  if (s) {
    CheckReport r = verify_antipode(d, *s);
    if (!r.overall()) throw AxiomFailure("transposed antipode fails " + r.failed_ids().front());
  }
  return d;
}

Scalar WeakPairing::operator()(const Vector& xi, const Vector& h) const {
  Vector th = tau0.apply(h);
  Scalar acc = Scalar::zero(tau0.field());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (!xi[i].is_zero()) acc += xi[i] * th[i];
  }
  return acc;
}

CheckReport check_weak_skew_pairing(const WeakPairing& p, const CheckOptions& opts) {
  const WeakBialgebra& l = p.lambda_side;
  const WeakBialgebra& h = p.h_side;
  const std::size_t nl = l.dim(), nh = h.dim();
  if (p.tau0.rows() != nl || p.tau0.cols() != nh) throw DimensionMismatch("pairing matrix shape");
  const Matrix& t = p.tau0;
  const FieldSpec f = h.field();
  CheckReport report;
  {
    ItemRecorder rec(report, "mult-in-h", opts);
    for (std::size_t x = 0; x < nl && rec.keep_going(); ++x) {
      Vector dx = l.delta(l.basis(x));
      for (std::size_t g = 0; g < nh && rec.keep_going(); ++g) {
        for (std::size_t k = 0; k < nh && rec.keep_going(); ++k) {
          Scalar rhs = Scalar::zero(f);
          for (std::size_t a = 0; a < nl; ++a) {
            for (std::size_t b = 0; b < nl; ++b) {
              const Scalar& c = dx[a * nl + b];
              if (!c.is_zero()) rhs += c * t(a, g) * t(b, k);
            }
          }
          rec.expect_equal(p(l.basis(x), h.mul(h.basis(g), h.basis(k))), rhs, {x, g, k});
        }
      }
    }
  }
  {
    ItemRecorder rec(report, "unit-h", opts);
    for (std::size_t x = 0; x < nl && rec.keep_going(); ++x) {
      rec.expect_equal(p(l.basis(x), h.one()), l.eps(l.basis(x)), {x});
    }
  }
  {
    ItemRecorder rec(report, "mult-in-xi", opts);
    for (std::size_t x = 0; x < nl && rec.keep_going(); ++x) {
      for (std::size_t z = 0; z < nl && rec.keep_going(); ++z) {
        Vector xz = l.mul(l.basis(x), l.basis(z));
        for (std::size_t k = 0; k < nh && rec.keep_going(); ++k) {
          Vector dk = h.delta(h.basis(k));
          Scalar rhs = Scalar::zero(f);
          for (std::size_t a = 0; a < nh; ++a) {
            for (std::size_t b = 0; b < nh; ++b) {
              const Scalar& c = dk[a * nh + b];
              if (!c.is_zero()) rhs += c * t(z, a) * t(x, b);
            }
          }
          rec.expect_equal(p(xz, h.basis(k)), rhs, {x, z, k});
        }
      }
    }
  }
  {
    ItemRecorder rec(report, "unit-xi", opts);
    for (std::size_t k = 0; k < nh && rec.keep_going(); ++k) {
      rec.expect_equal(p(l.one(), h.basis(k)), h.eps(h.basis(k)), {k});
    }
  }
  return report;
}

EvaluationPairing evaluation_pairing(const WeakBialgebra& h, bool with_op) {
  WeakBialgebra d = dual_weak_bialgebra(h);
  if (with_op) d = variant_unchecked(d, Variant::op);
  Matrix t = Matrix::identity(h.field(), h.dim());
  const std::size_t r = rank(t);
  EvaluationPairing out{WeakPairing{std::move(d), h, std::move(t)}, false, false};
  out.nondegenerate_lambda = r == out.pairing.lambda_side.dim();
  out.nondegenerate_h = r == h.dim();
  return out;
}

Vector BialgebroidPairing::operator()(const Vector& xi, const Vector& h) const {
  const std::size_t nh = h_side.dim();
  Vector out = zero_vector(tau.field(), tau.cols());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    if (xi[i].is_zero()) continue;
    for (std::size_t j = 0; j < nh; ++j) {
      if (!h[j].is_zero()) axpy(out, xi[i] * h[j], tau.row(i * nh + j));
    }
  }
  return out;
}

CheckReport check_bialgebroid_skew_pairing(const BialgebroidPairing& p, const CheckOptions& opts) {
  const FsBialgebroid& l = p.lambda_side;
  const FsBialgebroid& h = p.h_side;
  const std::size_t nl = l.dim(), nh = h.dim(), m = h.base_dim();
  if (l.base_dim() != m || !(l.base.algebra == h.base.algebra)) throw InvalidInput("pairing sides over different bases");
  if (p.tau.rows() != nl * nh || p.tau.cols() != m) throw DimensionMismatch("pairing matrix shape");
  const FinDimAlgebra& base = h.base.algebra;
  const FieldSpec f = h.field();
  auto rb = [&](std::size_t a) { return base.basis(a); };
  CheckReport report;
  {
    // tau(src(r) tgt(s) xi src(t) tgt(u) | h) v = r tau(xi | src(t) tgt(v) h src(u) tgt(s))
    ItemRecorder rec(report, "Re-balanced", opts);
    for (std::size_t r = 0; r < m && rec.keep_going(); ++r) {
      for (std::size_t s = 0; s < m && rec.keep_going(); ++s) {
        Vector ls = l.total.multiply(l.src.matrix.col(r), l.tgt.matrix.col(s));
        for (std::size_t t = 0; t < m && rec.keep_going(); ++t) {
          for (std::size_t u = 0; u < m && rec.keep_going(); ++u) {
            Vector rs = l.total.multiply(l.src.matrix.col(t), l.tgt.matrix.col(u));
            Vector hr = h.total.multiply(h.src.matrix.col(u), h.tgt.matrix.col(s));
            for (std::size_t v = 0; v < m && rec.keep_going(); ++v) {
              Vector hl = h.total.multiply(h.src.matrix.col(t), h.tgt.matrix.col(v));
              for (std::size_t x = 0; x < nl && rec.keep_going(); ++x) {
                Vector xi = l.total.multiply(l.total.multiply(ls, l.total.basis(x)), rs);
                for (std::size_t k = 0; k < nh && rec.keep_going(); ++k) {
                  Vector hh = h.total.multiply(h.total.multiply(hl, h.total.basis(k)), hr);
                  rec.expect_equal(base.multiply(p(xi, h.total.basis(k)), rb(v)),
                                   base.multiply(rb(r), p(l.total.basis(x), hh)), {r, s, t, u, v, x, k});
                }
              }
            }
          }
        }
      }
    }
  }
  {
    // tau(xi | g h) = tau(tgt(tau(xi^(2) | h)) xi^(1) | g)
    ItemRecorder rec(report, "mult-in-h", opts);
    for (std::size_t x = 0; x < nl && rec.keep_going(); ++x) {
      Vector gx = l.gamma(l.total.basis(x));
      for (std::size_t g = 0; g < nh && rec.keep_going(); ++g) {
        for (std::size_t k = 0; k < nh && rec.keep_going(); ++k) {
          Vector rhs = zero_vector(f, m);
          for (std::size_t a = 0; a < nl; ++a) {
            for (std::size_t b = 0; b < nl; ++b) {
              const Scalar& c = gx[a * nl + b];
              if (c.is_zero()) continue;
              Vector r = p(l.total.basis(b), h.total.basis(k));
              Vector xi = l.total.multiply(l.tgt(r), l.total.basis(a));
              axpy(rhs, c, p(xi, h.total.basis(g)));
            }
          }
          rec.expect_equal(p(l.total.basis(x), h.total.multiply(h.total.basis(g), h.total.basis(k))), rhs, {x, g, k});
        }
      }
    }
  }
  {
    ItemRecorder rec(report, "unit-xi", opts);
    for (std::size_t x = 0; x < nl && rec.keep_going(); ++x) {
      rec.expect_equal(p(l.total.basis(x), h.total.unit()), l.counit_c[x].apply(base.unit()), {x});
    }
  }
  {
    // tau(xi zeta | g) = tau(xi | src(tau(zeta | g^(1))) g^(2))
    ItemRecorder rec(report, "mult-in-xi", opts);
    for (std::size_t x = 0; x < nl && rec.keep_going(); ++x) {
      for (std::size_t z = 0; z < nl && rec.keep_going(); ++z) {
        Vector xz = l.total.multiply(l.total.basis(x), l.total.basis(z));
        for (std::size_t g = 0; g < nh && rec.keep_going(); ++g) {
          Vector gg = h.gamma(h.total.basis(g));
          Vector rhs = zero_vector(f, m);
          for (std::size_t a = 0; a < nh; ++a) {
            for (std::size_t b = 0; b < nh; ++b) {
              const Scalar& c = gg[a * nh + b];
              if (c.is_zero()) continue;
              Vector r = p(l.total.basis(z), h.total.basis(a));
              axpy(rhs, c, p(l.total.basis(x), h.total.multiply(h.src(r), h.total.basis(b))));
            }
          }
          rec.expect_equal(p(xz, h.total.basis(g)), rhs, {x, z, g});
        }
      }
    }
  }
  {
    ItemRecorder rec(report, "unit-h", opts);
    for (std::size_t k = 0; k < nh && rec.keep_going(); ++k) {
      rec.expect_equal(p(l.total.unit(), h.total.basis(k)), h.counit_c[k].apply(base.unit()), {k});
    }
  }
  return report;
}

WeakPairing descend_pairing(const BialgebroidPairing& p, const FrobeniusSystem& s) {
  CheckReport r = check_bialgebroid_skew_pairing(p);
  if (!r.overall()) throw AxiomFailure("not a skew pairing (" + r.failed_ids().front() + ")");
  const std::size_t nl = p.lambda_side.dim(), nh = p.h_side.dim();
  Matrix t0(p.tau.field(), nl, nh);
  for (std::size_t i = 0; i < nl; ++i) {
    for (std::size_t j = 0; j < nh; ++j) t0(i, j) = s.apply_phi(p.tau.row(i * nh + j));
  }
  return WeakPairing{bialgebroid_to_weak(p.lambda_side, s), bialgebroid_to_weak(p.h_side, s), std::move(t0)};
}

BialgebroidPairing enveloping_pairing(const FsBialgebroid& l) {
  const std::size_t n = l.dim(), m = l.base_dim();
  if (n != m * m) throw InvalidInput("not an enveloping bialgebroid");
  const FinDimAlgebra& base = l.base.algebra;
  Matrix tau(l.field(), n * n, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t k = 0; k < n; ++k) {
        Vector v = base.multiply(base.basis(a), l.counit_c[k].col(b));
        for (std::size_t c = 0; c < m; ++c) tau((a * m + b) * n + k, c) = v[c];
      }
    }
  }
  return BialgebroidPairing{l, l, std::move(tau)};
}

BialgebroidPairing counit_pairing(const FsBialgebroid& l) {
  const std::size_t n = l.dim(), m = l.base_dim();
  const Vector one = l.base.algebra.unit();
  Matrix tau(l.field(), n * n, m);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t k = 0; k < n; ++k) {
      Vector v = l.counit_of(l.total.multiply(l.total.basis(x), l.total.basis(k))).apply(one);
      for (std::size_t c = 0; c < m; ++c) tau(x * n + k, c) = v[c];
    }
  }
  return BialgebroidPairing{l, l, std::move(tau)};
}

}  // namespace wqg
