#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "alglab/linalg.hpp"
#include "alglab/rational.hpp"

namespace alglab {

struct dimension_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invalid_presentation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structure-constant presentation of a bilinear product on F^n:
// e_i * e_j = sum_k c[i][j][k] e_k, stored sparsely. The per-pair rows are
// densified once on first use; the cache is shared between copies and the
// fill is compute-then-publish via call_once.
template <class S>
class Algebra {
 public:
  struct Entry {
    int i, j, k;
    S c;
  };

  Algebra() : dim_(0) {}
  Algebra(int dim, std::vector<Entry> entries, std::vector<std::string> labels = {})
      : dim_(dim), entries_(std::move(entries)), labels_(std::move(labels)),
        cache_(std::make_shared<Cache>()) {
    if (dim_ < 1) throw invalid_presentation("dimension must be >= 1");
    std::map<std::array<int, 3>, bool> seen;
    for (const auto& e : entries_) {
      if (e.i < 0 || e.i >= dim_ || e.j < 0 || e.j >= dim_ || e.k < 0 || e.k >= dim_)
        throw invalid_presentation("structure constant index out of range");
      if (!seen.emplace(std::array<int, 3>{e.i, e.j, e.k}, true).second)
        throw invalid_presentation("duplicate (i,j,k) structure constant");
    }
  }

  int dim() const { return dim_; }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // product rows: row(i,j) lists (k, c) with e_i*e_j = sum c e_k
  using Row = std::vector<std::pair<int, S>>;
  const Row& row(int i, int j) const {
    const auto& rows = rows_cache();
    return rows[static_cast<size_t>(i) * dim_ + j];
  }

  Vec<S> multiply(const Vec<S>& x, const Vec<S>& y) const {
    check_dim(x);
    check_dim(y);
    Vec<S> z = zero_vec<S>(dim_);
    for (int i = 0; i < dim_; ++i) {
      if (scalar_traits<S>::is_zero(x[i])) continue;
      for (int j = 0; j < dim_; ++j) {
        if (scalar_traits<S>::is_zero(y[j])) continue;
        const Row& r = row(i, j);
        if (r.empty()) continue;
        S f = x[i] * y[j];
        for (const auto& [k, c] : r) z[k] += c * f;
      }
    }
    return z;
  }

  // product of a vector with a basis element (hot path in identity checks)
  Vec<S> mul_vec_basis(const Vec<S>& x, int j) const {
    Vec<S> z = zero_vec<S>(dim_);
    for (int i = 0; i < dim_; ++i) {
      if (scalar_traits<S>::is_zero(x[i])) continue;
      for (const auto& [k, c] : row(i, j)) z[k] += c * x[i];
    }
    return z;
  }
  Vec<S> mul_basis_vec(int i, const Vec<S>& y) const {
    Vec<S> z = zero_vec<S>(dim_);
    for (int j = 0; j < dim_; ++j) {
      if (scalar_traits<S>::is_zero(y[j])) continue;
      for (const auto& [k, c] : row(i, j)) z[k] += c * y[j];
    }
    return z;
  }
  Vec<S> basis_product(int i, int j) const {
    Vec<S> z = zero_vec<S>(dim_);
    for (const auto& [k, c] : row(i, j)) z[k] = c;
    return z;
  }

  // L(x) y = x*y
  Mat<S> left_op(const Vec<S>& x) const {
    check_dim(x);
    Mat<S> m(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
      if (scalar_traits<S>::is_zero(x[i])) continue;
      for (int j = 0; j < dim_; ++j)
        for (const auto& [k, c] : row(i, j)) m(k, j) += c * x[i];
    }
    return m;
  }

  // R(x) y = y*x
  Mat<S> right_op(const Vec<S>& x) const {
    check_dim(x);
    Mat<S> m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
      if (scalar_traits<S>::is_zero(x[j])) continue;
      for (int i = 0; i < dim_; ++i)
        for (const auto& [k, c] : row(i, j)) m(k, i) += c * x[j];
    }
    return m;
  }

  std::pair<Mat<S>, Mat<S>> mult_operators(const Vec<S>& x) const {
    return {left_op(x), right_op(x)};
  }

  // [x,y,z] = (x*y)*z - x*(y*z)
  Vec<S> associator(const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) const {
    return vec_sub(multiply(multiply(x, y), z), multiply(x, multiply(y, z)));
  }

  void check_dim(const Vec<S>& v) const {
    if (static_cast<int>(v.size()) != dim_)
      throw dimension_mismatch("element dimension does not match algebra");
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Row> rows;
  };
  const std::vector<Row>& rows_cache() const {
    std::call_once(cache_->once, [this]() {
      std::vector<Row> rows(static_cast<size_t>(dim_) * dim_);
      for (const auto& e : entries_)
        rows[static_cast<size_t>(e.i) * dim_ + e.j].emplace_back(e.k, e.c);
      cache_->rows = std::move(rows);
    });
    return cache_->rows;
  }

  int dim_;
  std::vector<Entry> entries_;
  std::vector<std::string> labels_;
  std::shared_ptr<Cache> cache_;
};

enum class DerivedKind { bracket, symmetrized, adjoint };

// [x,y] = xy - yx ; x o y = xy + yx ; adjoint x*y = -yx
template <class S>
Algebra<S> derived_algebra(const Algebra<S>& a, DerivedKind kind) {
  const int n = a.dim();
  std::map<std::array<int, 3>, S> acc;
  auto add = [&](int i, int j, int k, const S& c) {
    auto key = std::array<int, 3>{i, j, k};
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, c);
    else
      it->second += c;
  };
  for (const auto& e : a.entries()) {
    switch (kind) {
      case DerivedKind::bracket:
        add(e.i, e.j, e.k, e.c);
        add(e.j, e.i, e.k, -e.c);
        break;
      case DerivedKind::symmetrized:
        add(e.i, e.j, e.k, e.c);
        add(e.j, e.i, e.k, e.c);
        break;
      case DerivedKind::adjoint:
        add(e.j, e.i, e.k, -e.c);
        break;
    }
  }
  std::vector<typename Algebra<S>::Entry> entries;
  for (const auto& [key, c] : acc)
    if (!scalar_traits<S>::is_zero(c)) entries.push_back({key[0], key[1], key[2], c});
  return Algebra<S>(n, std::move(entries), a.labels());
}

// Killing form tau(e_i, e_j) = tr L(e_i) L(e_j)
template <class S>
Mat<S> killing_form(const Algebra<S>& a) {
  const int n = a.dim();
  std::vector<Mat<S>> lops;
  lops.reserve(n);
  for (int i = 0; i < n; ++i) lops.push_back(a.left_op(basis_vec<S>(n, i)));
  Mat<S> tau(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      S t = scalar_traits<S>::zero();
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (!scalar_traits<S>::is_zero(lops[i](r, c))) t += lops[i](r, c) * lops[j](c, r);
      tau(i, j) = t;
      tau(j, i) = t;
    }
  return tau;
}

inline Algebra<double> to_float(const Algebra<Rat>& a) {
  std::vector<Algebra<double>::Entry> entries;
  entries.reserve(a.entries().size());
  for (const auto& e : a.entries())
    entries.push_back({e.i, e.j, e.k, rat_double(e.c)});
  return Algebra<double>(a.dim(), std::move(entries), a.labels());
}

inline Mat<double> to_float(const Mat<Rat>& m) {
  Mat<double> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = rat_double(m(i, j));
  return out;
}

inline Vec<double> to_float(const Vec<Rat>& v) {
  Vec<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = rat_double(v[i]);
  return out;
}

}  // namespace alglab
