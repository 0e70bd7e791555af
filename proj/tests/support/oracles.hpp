#pragma once

// Direct checks written from the Dorroh formulas with explicit index loops.
// They share only the matrix and subspace kernels with the library.

#include <vector>

#include "dorroh/extension.hpp"

namespace testing_support {

using namespace dorroh;

/// Dense structure constants of H ⊕ I, H block first.
struct TotalTensors {
  FieldSpec f;
  std::size_t n;
  std::vector<Scalar> m;  // m[(u*n+v)*n+w]: coefficient of e_w in e_u·e_v
  std::vector<Scalar> d;  // d[(u*n+a)*n+b]: coefficient of e_a⊗e_b in Δ(e_u)

  TotalTensors(FieldSpec field, std::size_t dim)
      : f(field), n(dim), m(dim * dim * dim, field.zero()), d(dim * dim * dim, field.zero()) {}
  Scalar& mul(std::size_t u, std::size_t v, std::size_t w) { return m[(u * n + v) * n + w]; }
  Scalar& del(std::size_t u, std::size_t a, std::size_t b) { return d[(u * n + a) * n + b]; }
};

/// (a,x)(b,y) = (ab, ay + xb + xy).
inline void fill_product(TotalTensors& t, const AlgebraPair& p) {
  std::size_t h = p.h.dim(), i = p.i.dim();
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = 0; b < h; ++b)
      for (std::size_t k = 0; k < h; ++k) t.mul(a, b, k) = p.h.mult(k, a * h + b);
  for (std::size_t k = 0; k < i; ++k) {
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t y = 0; y < i; ++y) {
        t.mul(a, h + y, h + k) = p.act.left(k, a * i + y);
        t.mul(h + y, a, h + k) = p.act.right(k, y * h + a);
      }
    for (std::size_t x = 0; x < i; ++x)
      for (std::size_t y = 0; y < i; ++y) t.mul(h + x, h + y, h + k) = p.i.mult(k, x * i + y);
  }
}

/// Δ(c,0) = Δ_H(c); Δ(0,x) = ρ_l(x) + ρ_r(x) + Δ_I(x) placed in the matching blocks.
inline void fill_coproduct(TotalTensors& t, const CoalgebraPair& p) {
  std::size_t h = p.h.dim(), i = p.i.dim();
  for (std::size_t c = 0; c < h; ++c)
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t b = 0; b < h; ++b) t.del(c, a, b) = p.h.comult(a * h + b, c);
  for (std::size_t x = 0; x < i; ++x) {
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t y = 0; y < i; ++y) {
        t.del(h + x, a, h + y) = p.coact.left(a * i + y, x);
        t.del(h + x, h + y, a) = p.coact.right(y * h + a, x);
      }
    for (std::size_t y = 0; y < i; ++y)
      for (std::size_t z = 0; z < i; ++z) t.del(h + x, h + y, h + z) = p.i.comult(y * i + z, x);
  }
}

inline TotalTensors total_of(const BialgebraPair& p) {
  TotalTensors t(p.field(), p.dim_h() + p.dim_i());
  fill_product(t, p.algebra_pair());
  fill_coproduct(t, p.coalgebra_pair());
  return t;
}
inline TotalTensors total_of(const AlgebraPair& p) {
  TotalTensors t(p.h.field, p.h.dim() + p.i.dim());
  fill_product(t, p);
  return t;
}
inline TotalTensors total_of(const CoalgebraPair& p) {
  TotalTensors t(p.h.field, p.h.dim() + p.i.dim());
  fill_coproduct(t, p);
  return t;
}

/// Δ(uv) = Δ(u)Δ(v) on every pair of basis vectors.
inline bool oracle_delta_multiplicative(TotalTensors& t) {
  std::size_t n = t.n;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<Scalar> lhs(n * n, t.f.zero()), rhs(n * n, t.f.zero());
      for (std::size_t w = 0; w < n; ++w) {
        const Scalar& c = t.mul(u, v, w);
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < n * n; ++k) lhs[k] += c * t.d[w * n * n + k];
      }
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          Scalar du = t.del(u, a, b);
          if (du.is_zero()) continue;
          for (std::size_t c = 0; c < n; ++c)
            for (std::size_t e = 0; e < n; ++e) {
              Scalar dv = t.del(v, c, e);
              if (dv.is_zero()) continue;
              Scalar coef = du * dv;
              for (std::size_t p = 0; p < n; ++p) {
                const Scalar& m1 = t.mul(a, c, p);
                if (m1.is_zero()) continue;
                for (std::size_t q = 0; q < n; ++q) {
                  const Scalar& m2 = t.mul(b, e, q);
                  if (!m2.is_zero()) rhs[p * n + q] += coef * m1 * m2;
                }
              }
            }
        }
      if (lhs != rhs) return false;
    }
  return true;
}

/// Σ S(u1)u2 = Σ u1S(u2) = ε(u)1 for every basis u; s is n x n with columns S(e_u).
inline bool oracle_antipode(TotalTensors& t, const Matrix& s, const Matrix& unit, const Matrix& counit) {
  std::size_t n = t.n;
  for (std::size_t u = 0; u < n; ++u) {
    std::vector<Scalar> left(n, t.f.zero()), right(n, t.f.zero());
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        Scalar c = t.del(u, a, b);
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t w = 0; w < n; ++w) {
            left[w] += c * s(k, a) * t.mul(k, b, w);
            right[w] += c * s(k, b) * t.mul(a, k, w);
          }
      }
    for (std::size_t w = 0; w < n; ++w) {
      Scalar want = counit(0, u) * unit(w, 0);
      if (!(left[w] == want) || !(right[w] == want)) return false;
    }
  }
  return true;
}

inline Matrix basis_vector(FieldSpec f, std::size_t n, std::size_t i) {
  Matrix v(f, n, 1);
  v(i, 0) = f.one();
  return v;
}

/// u·k and k·u stay in K for every basis vector u and every basis vector k of K.
inline bool oracle_is_ideal(TotalTensors& t, const Subspace& k) {
  std::size_t n = t.n;
  for (std::size_t r = 0; r < k.dim(); ++r) {
    Matrix kv = k.vector(r);
    for (std::size_t u = 0; u < n; ++u) {
      Matrix left(t.f, n, 1), right(t.f, n, 1);
      for (std::size_t s = 0; s < n; ++s) {
        if (kv(s, 0).is_zero()) continue;
        for (std::size_t w = 0; w < n; ++w) {
          left(w, 0) += kv(s, 0) * t.mul(u, s, w);
          right(w, 0) += kv(s, 0) * t.mul(s, u, w);
        }
      }
      if (!k.contains(left) || !k.contains(right)) return false;
    }
  }
  return true;
}

/// Δ(t) ∈ T⊗T: writing Δ(t) as an n x n coefficient array W, this holds
/// exactly when every row and every column of W lies in T.
inline bool oracle_is_subcoalgebra(TotalTensors& t, const Subspace& sub) {
  std::size_t n = t.n;
  for (std::size_t r = 0; r < sub.dim(); ++r) {
    Matrix tv = sub.vector(r);
    Matrix w(t.f, n, n);
    for (std::size_t s = 0; s < n; ++s) {
      if (tv(s, 0).is_zero()) continue;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) w(a, b) += tv(s, 0) * t.del(s, a, b);
    }
    for (std::size_t c = 0; c < n; ++c)
      if (!sub.contains(w.col(c)) || !sub.contains(w.row(c))) return false;
  }
  return true;
}

}  // namespace testing_support
