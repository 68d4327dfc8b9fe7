#pragma once

#include <initializer_list>
#include <string>

#include "alglab/presets.hpp"
#include "alglab/rng.hpp"

namespace alglab::testing {

inline Vec<Rat> rvec(std::initializer_list<long> v) {
  Vec<Rat> out;
  for (long x : v) out.push_back(make_rat(x));
  return out;
}

inline Vec<Rat> rvec_str(std::initializer_list<const char*> v) {
  Vec<Rat> out;
  for (const char* s : v) out.push_back(*parse_rat(s));
  return out;
}

inline Vec<double> fvec(std::initializer_list<double> v) { return Vec<double>(v); }

inline Rat rq(const char* s) { return *parse_rat(s); }

inline Vec<Rat> random_rvec(std::mt19937_64& rng, int n, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Vec<Rat> v;
  for (int i = 0; i < n; ++i) v.push_back(make_rat(d(rng)));
  return v;
}

// random sparse structure constants, entries in {-2..2}
inline Algebra<Rat> random_rational_algebra(std::mt19937_64& rng, int dim, double density = 0.3) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> val(-2, 2);
  std::vector<Algebra<Rat>::Entry> entries;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (u(rng) < density) {
          int c = val(rng);
          if (c != 0) entries.push_back({i, j, k, make_rat(c)});
        }
  return Algebra<Rat>(dim, std::move(entries));
}

// random symmetric nondegenerate rational form
inline Mat<Rat> random_rational_metric(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> val(-2, 2);
  for (;;) {
    Mat<Rat> h(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i; j < dim; ++j) {
        Rat v = make_rat(val(rng));
        h(i, j) = v;
        h(j, i) = v;
      }
    if (!scalar_traits<Rat>::is_zero(determinant(h))) return h;
  }
}

// random metrized algebra: invariant product built from a cyclic-symmetric
// cubic form T via c_ij^k = sum_l T(i,j,l) (h^-1)(l,k)
inline Metrized<Rat> random_metrized_algebra(std::mt19937_64& rng, int dim) {
  Mat<Rat> h = random_rational_metric(rng, dim);
  Mat<Rat> hinv = mat_inverse(h);
  std::uniform_int_distribution<int> val(-2, 2);
  std::vector<Rat> T(static_cast<size_t>(dim) * dim * dim, Rat(0));
  auto at = [&](int i, int j, int k) -> Rat& {
    return T[(static_cast<size_t>(i) * dim + j) * dim + k];
  };
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) at(i, j, k) = make_rat(val(rng));
  // cyclic symmetrization => h(e_i e_j, e_k) = h(e_i, e_j e_k)
  std::vector<Rat> sym = T;
  auto sat = [&](int i, int j, int k) -> Rat& {
    return sym[(static_cast<size_t>(i) * dim + j) * dim + k];
  };
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) sat(i, j, k) = at(i, j, k) + at(j, k, i) + at(k, i, j);
  T = sym;
  std::vector<Algebra<Rat>::Entry> entries;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        Rat c(0);
        for (int l = 0; l < dim; ++l) c += at(i, j, l) * hinv(l, k);
        if (sgn(c) != 0) entries.push_back({i, j, k, c});
      }
  return make_metrized(Algebra<Rat>(dim, std::move(entries)), std::move(h),
                       /*require_invariant=*/true);
}

}  // namespace alglab::testing
