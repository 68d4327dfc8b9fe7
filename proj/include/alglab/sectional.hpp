#pragma once

#include <cstdint>
#include <optional>

#include "alglab/identities.hpp"
#include "alglab/presets.hpp"

namespace alglab {

struct degenerate_plane : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct linear_dependence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct not_euclidean : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// gram = h(x,x)h(y,y) - h(x,y)^2; the plane is usable when it is nonzero
// (float mode: |gram| > 1e-12 h(x,x)h(y,y)).
template <class S>
S plane_gram_checked(const Metrized<S>& M, const Vec<S>& x, const Vec<S>& y) {
  // linear dependence: all 2x2 coordinate minors vanish
  const int n = M.dim();
  S dep_tol = scalar_traits<S>::zero();
  if constexpr (!scalar_traits<S>::exact) {
    double mx = 0.0, my = 0.0;
    for (int i = 0; i < n; ++i) {
      mx = std::max(mx, std::fabs(x[i]));
      my = std::max(my, std::fabs(y[i]));
    }
    dep_tol = 1e-12 * mx * my;
  }
  bool dependent = true;
  for (int i = 0; i < n && dependent; ++i)
    for (int j = i + 1; j < n; ++j) {
      S minor = x[i] * y[j] - x[j] * y[i];
      if (scalar_traits<S>::abs(minor) > dep_tol) {
        dependent = false;
        break;
      }
    }
  if (dependent) throw linear_dependence("x and y are linearly dependent");
  S g = M.gram(x, y);
  if constexpr (scalar_traits<S>::exact) {
    if (scalar_traits<S>::is_zero(g)) throw degenerate_plane("h-degenerate plane");
  } else {
    double bound = 1e-12 * std::fabs(scalar_traits<S>::to_double(M.ip(x, x) * M.ip(y, y)));
    if (std::fabs(scalar_traits<S>::to_double(g)) <= bound)
      throw degenerate_plane("h-degenerate plane");
  }
  return g;
}

// numerator h(x*x, y*y) - h(x*y, y*x); equals h([x,x,y], y) when h is
// invariant. Non-invariant carriers (Hurwitz algebras) use the associator
// form, for which alternativity gives the vanishing the theory asserts.
template <class S>
S sect_numerator(const Metrized<S>& M, const Vec<S>& x, const Vec<S>& y) {
  const Algebra<S>& A = M.alg;
  if (M.invariant()) {
    Vec<S> xx = A.multiply(x, x), yy = A.multiply(y, y);
    Vec<S> xy = A.multiply(x, y), yx = A.multiply(y, x);
    return M.ip(xx, yy) - M.ip(xy, yx);
  }
  return M.ip(A.associator(x, x, y), y);
}

template <class S>
S sect(const Metrized<S>& M, const Vec<S>& x, const Vec<S>& y) {
  S g = plane_gram_checked(M, x, y);
  return sect_numerator(M, x, y) / g;
}

// (sect under the symmetrized product, sect under the bracket); the pair sums
// to 4 sect for the same metric.
template <class S>
std::pair<S, S> sect_split(const Metrized<S>& M, const Vec<S>& x, const Vec<S>& y) {
  S g = plane_gram_checked(M, x, y);
  const Algebra<S>& A = M.alg;
  Vec<S> xy = A.multiply(x, y), yx = A.multiply(y, x);
  Vec<S> xx = A.multiply(x, x), yy = A.multiply(y, y);
  // symmetrized: x o y = xy + yx
  Vec<S> sxx = vec_scale(xx, scalar_traits<S>::from_int(2));
  Vec<S> syy = vec_scale(yy, scalar_traits<S>::from_int(2));
  Vec<S> sxy = vec_add(xy, yx);
  S num_sym = form_dot(M.h, sxx, syy) - form_dot(M.h, sxy, sxy);
  // bracket: [x,x] = 0, numerator reduces to h([x,y],[x,y])
  Vec<S> br = vec_sub(xy, yx);
  S num_br = form_dot(M.h, br, br);
  return {num_sym / g, num_br / g};
}

// Constant sectional nonassociativity certificate: c with
// P(Rflat + Rbarflat) = -2 c (h ^ h), solved from one nonzero Kulkarni entry
// and verified entrywise (exact in rational mode). dim-1 algebras have no
// planes; every c is vacuously constant and 0 is returned.
template <class S>
std::optional<S> constant_sect(const Metrized<S>& M) {
  if (M.dim() < 2) return scalar_traits<S>::zero();
  Rank4<S> t;
  try {
    t = curvature_flat(M);
  } catch (const symmetry_violation&) {
    return std::nullopt;
  }
  auto [p, q] = project_curvature(t);
  Rank4<S> k = kulkarni(M.h);
  const int n = M.dim();
  const S minus2 = scalar_traits<S>::from_int(-2);
  std::optional<S> c;
  for (int i = 0; i < n && !c; ++i)
    for (int j = 0; j < n && !c; ++j)
      for (int a = 0; a < n && !c; ++a)
        for (int b = 0; b < n && !c; ++b)
          if (!scalar_traits<S>::is_zero(k.at(i, j, a, b)))
            c = p.at(i, j, a, b) / (minus2 * k.at(i, j, a, b));
  if (!c) return std::nullopt;  // h ^ h = 0 cannot happen for nondegenerate h, n >= 2
  // verify P = -2c (h^h) entrywise
  S scale = scalar_traits<S>::one();
  if constexpr (!scalar_traits<S>::exact) {
    scale += scalar_traits<S>::abs(p.max_abs()) + scalar_traits<S>::abs(k.max_abs());
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          S defect = p.at(i, j, a, b) - minus2 * (*c) * k.at(i, j, a, b);
          if (!scalar_traits<S>::within_defect_tol(scalar_traits<S>::abs(defect) / scale))
            return std::nullopt;
        }
  return c;
}

// --- float-mode optimization over Gr(2, n) --------------------------------

struct OptimizerConfig {
  int starts = 64;
  int max_iters = 500;
  double grad_tol = 1e-10;
  std::uint64_t seed = 0x5EC7;
  int threads = 0;    // 0 = hardware
  long samples = 0;   // optional random-plane audit
};

struct PlaneWitness {
  Vec<double> x, y;
  double value = 0.0;
  int start_index = -1;
  long iters = 0;
};

struct BoundsReport {
  double bwl = 0.0, bwu = 0.0;
  PlaneWitness lo, hi;
  int starts = 0;
  std::uint64_t seed = 0;
  long iterations = 0;  // total over all starts
  long samples = 0;
  double sample_min = 0.0, sample_max = 0.0;
};

// ambient coordinate gradient of sect at (x, y); matches central finite
// differences of sect_value (checked by the optimizer-health suite)
void sect_gradient(const Metrized<double>& M, const Vec<double>& x, const Vec<double>& y,
                   Vec<double>& gx, Vec<double>& gy);
double sect_value(const Metrized<double>& M, const Vec<double>& x, const Vec<double>& y);

// Multi-start maximization/minimization of sect over the Grassmannian;
// deterministic for fixed (seed, starts) under any thread count.
BoundsReport estimate_extrema(const Metrized<double>& M, const OptimizerConfig& cfg);

struct not_positive_definite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BwReport {
  // sup |xy|^2 / (|x|^2 |y|^2) and sup |xy|^2 / (|x|^2|y|^2 - f(x,y)^2)
  double sup_plain = 0.0, sup_gram = 0.0, gap = 0.0;
  PlaneWitness plain_witness, gram_witness;
  double sample_sup_plain = 0.0, sample_sup_gram = 0.0;
  long samples = 0;
  int starts = 0;
  std::uint64_t seed = 0;
};

// Commutator-norm constant of the (typically bracket) algebra carried by M;
// f = M.h must be positive definite but need not be invariant.
BwReport bw_constant(const Metrized<double>& M, const OptimizerConfig& cfg);

struct CdkReport {
  int n = 0, level = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  bool explore = false;
  // slack1 = 2(|x|^2|y|^2 - f^2) - |[x,y]|^2, slack2 = 2 f(x,y)^2
  double min_slack1 = 0.0;
  double max_ratio = 0.0;  // |[x,y]|^2 / (2(|x|^2|y|^2 - f^2))
  long equality_hits = 0;  // slack1 within 1e-9 of 0 (relative)
  bool holds = false;
  Vec<double> witness_x, witness_y;  // herm coordinates of the tightest pair
};

// Random verification of |[x,y]|^2 <= 2(|x|^2|y|^2 - f(x,y)^2) <= 2|x|^2|y|^2
// on Herm(n, K_level) with the Frobenius form; level 3 requires n = 3 and
// samples diagonal x unless explore is set.
CdkReport cdk_verify(int n, int level, long samples, std::uint64_t seed, bool explore = false);

}  // namespace alglab
