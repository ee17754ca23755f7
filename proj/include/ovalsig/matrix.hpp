#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace ovalsig {

/// Dense matrix over the exact rationals. Small and deliberately minimal:
/// the library only ever solves, inverts and diagonalizes symmetric integer
/// matrices coming from plumbing trees.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

using Vec = std::vector<Rational>;

/// Inertia (n+, n0, n-) of a symmetric matrix.
struct Inertia {
  long n_plus = 0;
  long n_zero = 0;
  long n_minus = 0;

  long signature() const { return n_plus - n_minus; }
  long nullity() const { return n_zero; }
  bool operator==(const Inertia&) const = default;
};

namespace detail {

// Gaussian elimination on an augmented system. The matrices we factor are
// sparse (trees), so the inner loops skip zero multipliers and zero pivot-row
// entries; with a leaves-first vertex order this keeps fill-in negligible.
// Returns false if A is singular. On success `aug` holds the solutions.
inline bool eliminate(Mat& a, Mat& aug) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t r = k; r < n; ++r)
      if (a(r, k) != 0) { piv = r; break; }
    if (piv == n) return false;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(piv, j));
      for (std::size_t j = 0; j < aug.cols(); ++j) std::swap(aug(k, j), aug(piv, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      a(i, k) = 0;
      for (std::size_t j = k + 1; j < n; ++j)
        if (a(k, j) != 0) a(i, j) -= f * a(k, j);
      for (std::size_t j = 0; j < aug.cols(); ++j)
        if (aug(k, j) != 0) aug(i, j) -= f * aug(k, j);
    }
  }
  // Back substitution.
  for (std::size_t kk = n; kk-- > 0;) {
    for (std::size_t j = 0; j < aug.cols(); ++j) {
      Rational v = aug(kk, j);
      for (std::size_t m = kk + 1; m < n; ++m)
        if (a(kk, m) != 0 && aug(m, j) != 0) v -= a(kk, m) * aug(m, j);
      aug(kk, j) = v == 0 ? Rational(0) : v / a(kk, kk);
    }
  }
  return true;
}

}  // namespace detail

/// Solve A x = b exactly. Throws SingularMatrixError when A has no inverse.
inline Vec solve(const Mat& a, const Vec& b) {
  if (a.rows() != a.cols() || b.size() != a.rows())
    throw BadParametersError("solve: dimension mismatch");
  Mat work = a;
  Mat aug(a.rows(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, 0) = b[i];
  if (!detail::eliminate(work, aug)) throw SingularMatrixError();
  Vec x(a.rows());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = aug(i, 0);
  return x;
}

/// Exact inverse. Throws SingularMatrixError when A has no inverse.
inline Mat inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw BadParametersError("inverse: matrix not square");
  Mat work = a;
  Mat aug = Mat::identity(a.rows());
  if (!detail::eliminate(work, aug)) throw SingularMatrixError();
  return aug;
}

/// Inertia of a symmetric matrix by congruence diagonalization.
///
/// Pivot choice is deterministic: the largest-magnitude remaining diagonal
/// entry (smallest index on ties). When every remaining diagonal entry is
/// zero but some off-diagonal entry is not, a hyperbolic 2x2 block
/// [[0,a],[a,0]] is split off, contributing one positive and one negative
/// eigenvalue.
inline Inertia inertia(const Mat& m0) {
  if (!m0.is_symmetric()) throw NotSymmetricError();
  Mat m = m0;
  const std::size_t n = m.rows();
  Inertia res;
  std::vector<std::size_t> live;  // indices still active
  for (std::size_t i = 0; i < n; ++i) live.push_back(i);

  while (!live.empty()) {
    // Largest |diagonal| among live indices.
    std::size_t best = live.size();
    Rational best_abs = 0;
    for (std::size_t t = 0; t < live.size(); ++t) {
      Rational v = boost::multiprecision::abs(m(live[t], live[t]));
      if (v != 0 && (best == live.size() || v > best_abs)) {
        best = t;
        best_abs = v;
      }
    }
    if (best != live.size()) {
      std::size_t k = live[best];
      const Rational piv = m(k, k);
      if (piv > 0) ++res.n_plus; else ++res.n_minus;
      live.erase(live.begin() + best);
      // Symmetric rank-1 update on the remaining block.
      std::vector<Rational> col(live.size());
      bool any = false;
      for (std::size_t t = 0; t < live.size(); ++t) {
        col[t] = m(live[t], k);
        if (col[t] != 0) any = true;
      }
      if (any) {
        for (std::size_t t = 0; t < live.size(); ++t) {
          if (col[t] == 0) continue;
          Rational f = col[t] / piv;
          for (std::size_t u = t; u < live.size(); ++u) {
            if (col[u] == 0) continue;
            m(live[t], live[u]) -= f * col[u];
            m(live[u], live[t]) = m(live[t], live[u]);
          }
        }
      }
      continue;
    }
    // All live diagonals vanish: find largest off-diagonal entry.
    std::size_t bi = live.size(), bj = live.size();
    Rational babs = 0;
    for (std::size_t t = 0; t < live.size(); ++t)
      for (std::size_t u = t + 1; u < live.size(); ++u) {
        Rational v = boost::multiprecision::abs(m(live[t], live[u]));
        if (v != 0 && (bi == live.size() || v > babs)) {
          bi = t; bj = u; babs = v;
        }
      }
    if (bi == live.size()) {
      // Whole remaining block is zero.
      res.n_zero += static_cast<long>(live.size());
      break;
    }
    std::size_t p = live[bi], q = live[bj];
    const Rational a = m(p, q);
    ++res.n_plus;
    ++res.n_minus;
    // Remove p,q (erase larger position first to keep indices valid).
    live.erase(live.begin() + bj);
    live.erase(live.begin() + bi);
    // Schur complement against the block [[0,a],[a,0]].
    std::vector<Rational> cp(live.size()), cq(live.size());
    for (std::size_t t = 0; t < live.size(); ++t) {
      cp[t] = m(live[t], p);
      cq[t] = m(live[t], q);
    }
    for (std::size_t t = 0; t < live.size(); ++t) {
      if (cp[t] == 0 && cq[t] == 0) continue;
      for (std::size_t u = t; u < live.size(); ++u) {
        if (cp[u] == 0 && cq[u] == 0) continue;
        Rational upd = (cq[t] * cp[u] + cp[t] * cq[u]) / a;
        if (upd != 0) {
          m(live[t], live[u]) -= upd;
          m(live[u], live[t]) = m(live[t], live[u]);
        }
      }
    }
  }
  return res;
}

}  // namespace ovalsig
