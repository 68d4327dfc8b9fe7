#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "alglab/rational.hpp"

namespace alglab {

template <class S>
using Vec = std::vector<S>;

// Dense row-major square-or-rectangular matrix over an exact or float scalar.
template <class S>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, scalar_traits<S>::zero()) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = scalar_traits<S>::one();
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  S& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const S& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  Mat& operator+=(const Mat& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  Mat& operator*=(const S& s) {
    for (auto& v : a_) v *= s;
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const S& s) { return a *= s; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    assert(a.cols_ == b.rows_);
    Mat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (scalar_traits<S>::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  Vec<S> operator*(const Vec<S>& v) const {
    assert(static_cast<int>(v.size()) == cols_);
    Vec<S> out(rows_, scalar_traits<S>::zero());
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!scalar_traits<S>::is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Mat transposed() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  S trace() const {
    S t = scalar_traits<S>::zero();
    for (int i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  const std::vector<S>& data() const { return a_; }

 private:
  int rows_, cols_;
  std::vector<S> a_;
};

template <class S>
Vec<S> vec_add(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> c(a);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

template <class S>
Vec<S> vec_sub(const Vec<S>& a, const Vec<S>& b) {
  Vec<S> c(a);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

template <class S>
Vec<S> vec_scale(const Vec<S>& a, const S& s) {
  Vec<S> c(a);
  for (auto& v : c) v *= s;
  return c;
}

template <class S>
bool vec_is_zero(const Vec<S>& a) {
  for (const auto& v : a)
    if (!scalar_traits<S>::is_zero(v)) return false;
  return true;
}

template <class S>
Vec<S> zero_vec(int n) {
  return Vec<S>(n, scalar_traits<S>::zero());
}

template <class S>
Vec<S> basis_vec(int n, int i) {
  Vec<S> v = zero_vec<S>(n);
  v[i] = scalar_traits<S>::one();
  return v;
}

// h-pairing u^T H v
template <class S>
S form_dot(const Mat<S>& h, const Vec<S>& u, const Vec<S>& v) {
  S acc = scalar_traits<S>::zero();
  for (int i = 0; i < h.rows(); ++i) {
    if (scalar_traits<S>::is_zero(u[i])) continue;
    S row = scalar_traits<S>::zero();
    for (int j = 0; j < h.cols(); ++j)
      if (!scalar_traits<S>::is_zero(h(i, j))) row += h(i, j) * v[j];
    acc += u[i] * row;
  }
  return acc;
}

// Gaussian elimination determinant. Exact scalars take the first nonzero
// pivot; floats pivot by magnitude.
template <class S>
S determinant(Mat<S> m) {
  assert(m.rows() == m.cols());
  const int n = m.rows();
  S det = scalar_traits<S>::one();
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    if constexpr (scalar_traits<S>::exact) {
      for (int r = col; r < n; ++r)
        if (!scalar_traits<S>::is_zero(m(r, col))) { piv = r; break; }
    } else {
      double best = 0.0;
      for (int r = col; r < n; ++r) {
        double mag = std::fabs(scalar_traits<S>::to_double(m(r, col)));
        if (mag > best) { best = mag; piv = r; }
      }
    }
    if (piv < 0) return scalar_traits<S>::zero();
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      det = -det;
    }
    det *= m(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (scalar_traits<S>::is_zero(m(r, col))) continue;
      S f = m(r, col) / m(col, col);
      for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

// Row-space rank; float version uses |pivot| > tol relative to largest entry.
template <class S>
int mat_rank(Mat<S> m, double float_tol = 1e-10) {
  const int rows = m.rows(), cols = m.cols();
  double scale = 1.0;
  if constexpr (!scalar_traits<S>::exact) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        scale = std::max(scale, std::fabs(scalar_traits<S>::to_double(m(i, j))));
  }
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    if constexpr (scalar_traits<S>::exact) {
      for (int r = rank; r < rows; ++r)
        if (!scalar_traits<S>::is_zero(m(r, col))) { piv = r; break; }
    } else {
      double best = float_tol * scale;
      for (int r = rank; r < rows; ++r) {
        double mag = std::fabs(scalar_traits<S>::to_double(m(r, col)));
        if (mag > best) { best = mag; piv = r; }
      }
    }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < cols; ++j) std::swap(m(piv, j), m(rank, j));
    for (int r = rank + 1; r < rows; ++r) {
      if (scalar_traits<S>::is_zero(m(r, col))) continue;
      S f = m(r, col) / m(rank, col);
      for (int j = col; j < cols; ++j) m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <class S>
Mat<S> mat_inverse(const Mat<S>& m) {
  const int n = m.rows();
  Mat<S> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = scalar_traits<S>::one();
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    if constexpr (scalar_traits<S>::exact) {
      for (int r = col; r < n; ++r)
        if (!scalar_traits<S>::is_zero(aug(r, col))) { piv = r; break; }
    } else {
      double best = 0.0;
      for (int r = col; r < n; ++r) {
        double mag = std::fabs(scalar_traits<S>::to_double(aug(r, col)));
        if (mag > best) { best = mag; piv = r; }
      }
    }
    assert(piv >= 0 && "singular matrix");
    if (piv != col)
      for (int j = 0; j < 2 * n; ++j) std::swap(aug(piv, j), aug(col, j));
    S d = aug(col, col);
    for (int j = 0; j < 2 * n; ++j) aug(col, j) /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || scalar_traits<S>::is_zero(aug(r, col))) continue;
      S f = aug(r, col);
      for (int j = 0; j < 2 * n; ++j) aug(r, j) -= f * aug(col, j);
    }
  }
  Mat<S> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// Characteristic polynomial coefficients of a square matrix by
// Faddeev-LeVerrier: p(t) = t^n + c[n-1] t^(n-1) + ... + c[0].
template <class S>
std::vector<S> char_poly(const Mat<S>& a) {
  const int n = a.rows();
  std::vector<S> c(n + 1, scalar_traits<S>::zero());
  c[n] = scalar_traits<S>::one();
  Mat<S> m = Mat<S>(n, n);
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    for (int i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    S tr = (a * m).trace();
    c[n - k] = tr / scalar_traits<S>::from_int(-k);
  }
  return c;
}

// Signature of a symmetric matrix with all-real spectrum, from sign changes
// in the characteristic polynomial (exact for rational input).
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

template <class S>
Signature signature_from_char_poly(const std::vector<S>& coeffs) {
  // strip zero roots: lowest nonzero coefficient
  int n = static_cast<int>(coeffs.size()) - 1;
  int low = 0;
  while (low <= n && scalar_traits<S>::is_zero(coeffs[low])) ++low;
  Signature sig;
  sig.zero = low;
  // remaining polynomial has nonzero roots, all real (symmetric matrix):
  // positives = sign variations in coefficient sequence
  int variations = 0;
  int prev = 0;
  for (int i = low; i <= n; ++i) {
    double v = scalar_traits<S>::to_double(coeffs[i]);
    int s;
    if constexpr (scalar_traits<S>::exact)
      s = sgn(coeffs[i]);
    else
      s = (v > 0) - (v < 0);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  sig.positive = variations;
  sig.negative = n - low - variations;
  return sig;
}

}  // namespace alglab
