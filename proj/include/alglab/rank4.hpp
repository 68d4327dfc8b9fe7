#pragma once

#include <stdexcept>

#include "alglab/metric.hpp"

namespace alglab {

enum class Sym4 { none, s2lambda2, curvature_type, fully_antisymmetric };

inline const char* sym4_name(Sym4 s) {
  switch (s) {
    case Sym4::none: return "none";
    case Sym4::s2lambda2: return "S2Lambda2";
    case Sym4::curvature_type: return "CurvatureType";
    case Sym4::fully_antisymmetric: return "FullyAntisymmetric";
  }
  return "?";
}

struct symmetry_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class S>
class Rank4 {
 public:
  Rank4() : n_(0), sym_(Sym4::none) {}
  Rank4(int n, Sym4 sym)
      : n_(n), sym_(sym),
        a_(static_cast<size_t>(n) * n * n * n, scalar_traits<S>::zero()) {}

  int dim() const { return n_; }
  Sym4 sym() const { return sym_; }
  void set_sym(Sym4 s) { sym_ = s; }

  S& at(int i, int j, int k, int l) {
    return a_[((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l];
  }
  const S& at(int i, int j, int k, int l) const {
    return a_[((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l];
  }

  Rank4& operator+=(const Rank4& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Rank4& operator-=(const Rank4& o) {
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  Rank4& operator*=(const S& s) {
    for (auto& v : a_) v *= s;
    return *this;
  }
  friend Rank4 operator-(Rank4 x, const Rank4& y) { return x -= y; }
  friend Rank4 operator+(Rank4 x, const Rank4& y) { return x += y; }

  S max_abs() const {
    S m = scalar_traits<S>::zero();
    for (const auto& v : a_) {
      S av = scalar_traits<S>::abs(v);
      if (av > m) m = av;
    }
    return m;
  }

  // worst violation of the declared symmetry class
  S symmetry_defect() const {
    S worst = scalar_traits<S>::zero();
    auto upd = [&worst](const S& d) {
      S a = scalar_traits<S>::abs(d);
      if (a > worst) worst = a;
    };
    const int n = n_;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            const S& v = at(i, j, k, l);
            if (sym_ == Sym4::s2lambda2 || sym_ == Sym4::curvature_type) {
              upd(v + at(j, i, k, l));
              upd(v + at(i, j, l, k));
              upd(v - at(k, l, i, j));
              if (sym_ == Sym4::curvature_type)
                upd(v + at(j, k, i, l) + at(k, i, j, l));
            } else if (sym_ == Sym4::fully_antisymmetric) {
              upd(v + at(j, i, k, l));
              upd(v + at(i, j, l, k));
              upd(v + at(i, k, j, l));
            }
          }
    return worst;
  }

  bool symmetry_ok() const {
    return scalar_traits<S>::within_defect_tol(symmetry_defect());
  }

  void validate() const {
    if (!symmetry_ok())
      throw symmetry_violation(std::string("rank-4 tensor violates declared class ") +
                               sym4_name(sym_));
  }

 private:
  int n_;
  Sym4 sym_;
  std::vector<S> a_;
};

// Kulkarni product (h^h)(x,y,z,w) = h(x,z)h(y,w) - h(x,w)h(y,z)
template <class S>
Rank4<S> kulkarni(const Mat<S>& h) {
  const int n = h.rows();
  Rank4<S> t(n, Sym4::curvature_type);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          t.at(i, j, k, l) = h(i, k) * h(j, l) - h(i, l) * h(j, k);
  return t;
}

// Orthogonal projections of S2Lambda2 onto curvature-type + fully
// antisymmetric parts (the 1/3-weighted cyclic formulas).
template <class S>
std::pair<Rank4<S>, Rank4<S>> project_curvature(const Rank4<S>& t) {
  if (t.sym() != Sym4::s2lambda2 && t.sym() != Sym4::curvature_type &&
      t.sym() != Sym4::fully_antisymmetric)
    throw symmetry_violation("projection requires an S2Lambda2 tensor");
  const int n = t.dim();
  Rank4<S> p(n, Sym4::curvature_type), q(n, Sym4::fully_antisymmetric);
  const S third = scalar_traits<S>::one() / scalar_traits<S>::from_int(3);
  const S two = scalar_traits<S>::from_int(2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          S cyc1 = t.at(j, k, i, l);
          S cyc2 = t.at(k, i, j, l);
          p.at(i, j, k, l) = third * (two * t.at(i, j, k, l) - cyc1 - cyc2);
          q.at(i, j, k, l) = third * (t.at(i, j, k, l) + cyc1 + cyc2);
        }
  return {std::move(p), std::move(q)};
}

// complete h-contraction pairing <a,b> = a_ijkl b_i'j'k'l' hinv^..
template <class S>
S rank4_pairing(const Rank4<S>& a, const Rank4<S>& b, const Mat<S>& h_inv) {
  const int n = a.dim();
  // contract one index at a time: cost n^5
  auto contract_last = [&](const Rank4<S>& t) {
    Rank4<S> out(n, Sym4::none);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) {
            S acc = scalar_traits<S>::zero();
            for (int m = 0; m < n; ++m)
              if (!scalar_traits<S>::is_zero(h_inv(l, m))) acc += t.at(i, j, k, m) * h_inv(l, m);
            out.at(i, j, k, l) = acc;
          }
    return out;
  };
  // raise all four indices of b, then full contraction with a
  Rank4<S> r = b;
  for (int pass = 0; pass < 4; ++pass) {
    Rank4<S> rotated(n, Sym4::none);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) rotated.at(j, k, l, i) = r.at(i, j, k, l);
    r = contract_last(rotated);
  }
  S acc = scalar_traits<S>::zero();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) acc += a.at(i, j, k, l) * r.at(i, j, k, l);
  return acc;
}

}  // namespace alglab
