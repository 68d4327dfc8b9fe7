#pragma once

#include <array>
#include <optional>
#include <string>

#include "alglab/algebra.hpp"
#include "alglab/eigen_bridge.hpp"

namespace alglab {

enum class Definiteness { positive, negative, indefinite, degenerate };

inline const char* definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::positive: return "positive_definite";
    case Definiteness::negative: return "negative_definite";
    case Definiteness::indefinite: return "indefinite";
    case Definiteness::degenerate: return "degenerate";
  }
  return "?";
}

struct MetricReport {
  bool symmetric = false;
  bool invariant = false;
  double max_defect = 0.0;            // worst |h(ei*ej,ek) - h(ei,ej*ek)|
  std::array<int, 3> witness{0, 0, 0};
  bool nondegenerate = false;
  double det = 0.0;
  Signature signature;
  Definiteness definiteness = Definiteness::degenerate;
};

// Nondegeneracy threshold: exact in rational mode; float mode compares |det|
// against 1e-12 * max|entry|^n.
template <class S>
MetricReport check_metric(const Algebra<S>& a, const Mat<S>& h) {
  if (h.rows() != a.dim() || h.cols() != a.dim())
    throw dimension_mismatch("metric dimension does not match algebra");
  const int n = a.dim();
  MetricReport rep;

  rep.symmetric = true;
  for (int i = 0; i < n && rep.symmetric; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!scalar_traits<S>::within_defect_tol(scalar_traits<S>::abs(h(i, j) - h(j, i)))) {
        rep.symmetric = false;
        break;
      }

  // invariance: h(e_i*e_j, e_k) = h(e_i, e_j*e_k) on all basis triples
  S worst = scalar_traits<S>::zero();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<S> pij = a.basis_product(i, j);
      for (int k = 0; k < n; ++k) {
        S lhs = scalar_traits<S>::zero();
        for (int m = 0; m < n; ++m)
          if (!scalar_traits<S>::is_zero(pij[m])) lhs += pij[m] * h(m, k);
        S rhs = scalar_traits<S>::zero();
        for (const auto& [m, c] : a.row(j, k)) rhs += c * h(i, m);
        S d = scalar_traits<S>::abs(lhs - rhs);
        if (d > worst) {
          worst = d;
          rep.witness = {i, j, k};
        }
      }
    }
  rep.max_defect = scalar_traits<S>::to_double(worst);
  rep.invariant = scalar_traits<S>::within_defect_tol(worst);

  S det = determinant(h);
  rep.det = scalar_traits<S>::to_double(det);
  if constexpr (scalar_traits<S>::exact) {
    rep.nondegenerate = !scalar_traits<S>::is_zero(det);
  } else {
    double scale = 1.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) scale = std::max(scale, std::fabs(h(i, j)));
    double bound = 1e-12;
    for (int i = 0; i < n; ++i) bound *= scale;
    rep.nondegenerate = std::fabs(rep.det) > bound;
  }

  if constexpr (scalar_traits<S>::exact)
    rep.signature = signature_from_char_poly(char_poly(h));
  else
    rep.signature = float_signature(h);
  if (!rep.nondegenerate || rep.signature.zero > 0)
    rep.definiteness = Definiteness::degenerate;
  else if (rep.signature.positive == n)
    rep.definiteness = Definiteness::positive;
  else if (rep.signature.negative == n)
    rep.definiteness = Definiteness::negative;
  else
    rep.definiteness = Definiteness::indefinite;
  return rep;
}

struct metric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Algebra + invariant nondegenerate symmetric form, with the certificate
// cached. Presets whose form fails invariance (Hurwitz h, Frobenius on
// mat(n,K)) are carried with metric_invariant = false and excluded from the
// operations that need invariance.
template <class S>
struct Metrized {
  Algebra<S> alg;
  Mat<S> h;
  MetricReport cert;
  Mat<S> h_inv;  // empty when degenerate

  int dim() const { return alg.dim(); }
  bool invariant() const { return cert.invariant; }
  bool euclidean() const { return cert.definiteness == Definiteness::positive; }

  S ip(const Vec<S>& x, const Vec<S>& y) const { return form_dot(h, x, y); }
  S gram(const Vec<S>& x, const Vec<S>& y) const {
    return ip(x, x) * ip(y, y) - ip(x, y) * ip(x, y);
  }
};

template <class S>
Metrized<S> make_metrized(Algebra<S> a, Mat<S> h, bool require_invariant = false) {
  MetricReport cert = check_metric(a, h);
  if (!cert.symmetric) throw metric_error("metric is not symmetric");
  if (!cert.nondegenerate) throw metric_error("metric is degenerate");
  if (require_invariant && !cert.invariant)
    throw metric_error("metric is not invariant");
  Mat<S> inv = mat_inverse(h);
  return Metrized<S>{std::move(a), std::move(h), cert, std::move(inv)};
}

inline Metrized<double> to_float(const Metrized<Rat>& m) {
  auto out = make_metrized(to_float(m.alg), to_float(m.h));
  return out;
}

enum class ComposeKind { direct_sum, tensor_product };

template <class S>
Metrized<S> compose(ComposeKind kind, const Metrized<S>& A, const Metrized<S>& B) {
  const int na = A.dim(), nb = B.dim();
  std::vector<typename Algebra<S>::Entry> entries;
  if (kind == ComposeKind::direct_sum) {
    const int n = na + nb;
    for (const auto& e : A.alg.entries()) entries.push_back(e);
    for (const auto& e : B.alg.entries())
      entries.push_back({e.i + na, e.j + na, e.k + na, e.c});
    Mat<S> h(n, n);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j) h(i, j) = A.h(i, j);
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j) h(na + i, na + j) = B.h(i, j);
    return make_metrized(Algebra<S>(n, std::move(entries)), std::move(h));
  }
  // tensor product: (a1 (x) b1)*(a2 (x) b2) = (a1*a2) (x) (b1*b2),
  // h((a1 (x) b1),(a2 (x) b2)) = hA(a1,a2) hB(b1,b2)
  const int n = na * nb;
  auto idx = [nb](int ia, int ib) { return ia * nb + ib; };
  for (const auto& ea : A.alg.entries())
    for (const auto& eb : B.alg.entries())
      entries.push_back({idx(ea.i, eb.i), idx(ea.j, eb.j), idx(ea.k, eb.k), ea.c * eb.c});
  Mat<S> h(n, n);
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < nb; ++j1)
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2)
          h(idx(i1, j1), idx(i2, j2)) = A.h(i1, i2) * B.h(j1, j2);
  return make_metrized(Algebra<S>(n, std::move(entries)), std::move(h));
}

}  // namespace alglab
