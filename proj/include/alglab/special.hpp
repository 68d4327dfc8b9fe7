#pragma once

#include <complex>
#include <cstdint>

#include "alglab/sectional.hpp"

namespace alglab {

enum class SpecialKind { idempotent, square_zero, complex_idempotent, complex_square_zero };

inline const char* special_kind_name(SpecialKind k) {
  switch (k) {
    case SpecialKind::idempotent: return "idempotent";
    case SpecialKind::square_zero: return "square_zero";
    case SpecialKind::complex_idempotent: return "complex_idempotent";
    case SpecialKind::complex_square_zero: return "complex_square_zero";
  }
  return "?";
}

struct SearchConfig {
  int starts = 256;
  int max_iters = 80;
  double residual_tol = 1e-9;
  double dedup_tol = 1e-6;
  std::uint64_t seed = 0x5EC7;
  int threads = 0;
  int grid = 0;  // dim<=3 exhaustive sphere grid resolution (0 = off)
  long snap_max_den = 10000;
  double snap_tol = 1e-10;
};

struct SpecialElement {
  Vec<double> coords;           // real part a (and the element itself for real kinds)
  Vec<double> coords_imag;      // b for complexified kinds, empty otherwise
  double residual = 0.0;
  double norm = 0.0;            // h(x,x) (real kinds)
  std::vector<std::complex<double>> spectrum;  // eigenvalues of L(x)
  bool exact_verified = false;  // rational snap re-verified exactly
  std::vector<std::string> coords_exact;       // snapped coordinates when exact_verified
  std::optional<std::string> norm_exact;       // snapped h(x,x)
  std::vector<double> residual_history;
  double check_value = 0.0;     // complexified kinds: sect(a,b)
  double check_defect = 0.0;    // complexified kinds: defect of the sect equation
  bool independent = false;     // complexified kinds: a, b span a plane
};

struct SpecialElementSet {
  SpecialKind kind = SpecialKind::idempotent;
  std::vector<SpecialElement> elements;
  long converged_starts = 0;
  std::uint64_t seed = 0;
};

// Newton iteration on F(x) = x*x - x (Jacobian L(x)+R(x)-Id) from seeded
// random starts; optional exact re-verification against the rational algebra.
SpecialElementSet find_idempotents(const Metrized<double>& M, const SearchConfig& cfg,
                                   const Metrized<Rat>* exact = nullptr);

// Gauss-Newton on (x*x, h(x,x)-1); accepted rays are reported with a
// sign-normalized unit representative.
SpecialElementSet find_square_zero(const Metrized<double>& M, const SearchConfig& cfg,
                                   const Metrized<Rat>* exact = nullptr);

struct isotropic_idempotent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OrthogonalSpectrum {
  std::vector<std::complex<double>> values;
  double idempotent_residual = 0.0;
  bool residual_warning = false;
};

// eigenvalues of L(e) restricted to the h-orthocomplement of e
OrthogonalSpectrum orthogonal_spectrum(const Metrized<double>& M, const Vec<double>& e);

struct StructReport {
  bool exact = false;          // tr L(e_i) = 0 for all i
  double max_trace = 0.0;
  bool faithful = false;       // x -> L(x) injective
  int lmap_rank = 0;
};

template <class S>
StructReport structural_report(const Metrized<S>& M);

// whether L(x) is positive semidefinite (cone-of-squares membership test)
bool cone_member(const Metrized<double>& M, const Vec<double>& x, double tol = 1e-9);

// Complexified search: (a + ib)^2 = 0 or = a + ib on a commutative Euclidean
// algebra; each accepted pair carries the sectional check value.
SpecialElementSet complexified_search(const Metrized<double>& M, SpecialKind kind,
                                      const SearchConfig& cfg);

extern template StructReport structural_report<Rat>(const Metrized<Rat>&);
extern template StructReport structural_report<double>(const Metrized<double>&);

}  // namespace alglab
