#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alglab/identities.hpp"
#include "alglab/metric.hpp"

namespace alglab {

// Cayley-Dickson multiplication table: e_i e_j = sign(i,j) e_{index(i,j)}.
// Doubling convention (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)),
// conj (a,b) = (conj a, -b); keeps the norm form positive definite, which is
// verified by composition_check rather than trusted.
struct CDTable {
  int dim = 1;
  std::vector<int> index;
  std::vector<int> sign;
  int idx(int i, int j) const { return index[static_cast<size_t>(i) * dim + j]; }
  int sgn(int i, int j) const { return sign[static_cast<size_t>(i) * dim + j]; }
};

CDTable cayley_dickson(int level);

// K-valued scalars as coordinate vectors over the table
template <class S>
Vec<S> cd_mul(const CDTable& t, const Vec<S>& a, const Vec<S>& b) {
  Vec<S> z = zero_vec<S>(t.dim);
  for (int i = 0; i < t.dim; ++i) {
    if (scalar_traits<S>::is_zero(a[i])) continue;
    for (int j = 0; j < t.dim; ++j) {
      if (scalar_traits<S>::is_zero(b[j])) continue;
      S term = a[i] * b[j];
      if (t.sgn(i, j) < 0)
        z[t.idx(i, j)] -= term;
      else
        z[t.idx(i, j)] += term;
    }
  }
  return z;
}

template <class S>
Vec<S> cd_conj(const Vec<S>& a) {
  Vec<S> z = a;
  for (size_t i = 1; i < z.size(); ++i) z[i] = -z[i];
  return z;
}

struct PresetDescriptor {
  std::string name;
  std::vector<std::string> params;
  std::string canonical;   // normalized "name:p1:p2"
  std::string provenance;  // short human description of the construction
};

struct preset_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A constructed metrized algebra plus construction metadata.
struct Preset {
  PresetDescriptor desc;
  bool rational_mode = true;
  // exact form present iff rational_mode
  std::optional<Metrized<Rat>> exact;
  Metrized<double> flt;  // float form always available
  std::optional<Vec<double>> unit;        // unit (or distinguished idempotent)
  std::optional<Vec<Rat>> unit_exact;
  bool composition_candidate = false;     // q(x) = h(x,x)/2 multiplicative
  bool metric_invariant = false;

  const Metrized<double>& floating() const { return flt; }
};

Preset build_preset(const std::string& spec_string);
std::optional<PresetDescriptor> parse_preset_string(const std::string& s);

struct PresetInfo {
  std::string pattern;
  std::string description;
};
std::vector<PresetInfo> preset_catalog();

struct CompositionReport {
  DefectReport linearized;   // h(xy,wz) + h(wy,xz) = h(x,w)h(y,z)
  DefectReport invariance;   // h(xy,z) = h(x,yz)
  bool passed = false;
};

template <class S>
CompositionReport composition_check(const Algebra<S>& A, const Mat<S>& h);

// Hermitian matrices over the level-d Hurwitz algebra with the symmetrized
// product; basis = n diagonal units, then per pair i<j the d unit companions.
struct HermBasisLayout {
  int n = 0, d = 0, dim = 0;
  int diag(int i) const { return i; }
  int off(int i, int j, int t) const {  // i < j
    int pair = 0;
    for (int r = 0; r < i; ++r) pair += n - r - 1;
    pair += j - i - 1;
    return n + pair * d + t;
  }
};
HermBasisLayout herm_layout(int n, int level);

// element of Herm(n, K) as an n x n matrix of K-coordinates
template <class S>
using KMatrix = std::vector<Vec<S>>;  // row-major n*n entries, each Vec of size d

template <class S>
KMatrix<S> herm_basis_matrix(const HermBasisLayout& lay, int basis_index);

template <class S>
Vec<S> herm_coords_from_matrix(const HermBasisLayout& lay, const KMatrix<S>& m);

template <class S>
KMatrix<S> kmat_mul(const CDTable& t, int n, const KMatrix<S>& a, const KMatrix<S>& b);

extern template CompositionReport composition_check<Rat>(const Algebra<Rat>&, const Mat<Rat>&);
extern template CompositionReport composition_check<double>(const Algebra<double>&, const Mat<double>&);

}  // namespace alglab
