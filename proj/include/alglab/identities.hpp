#pragma once

#include <algorithm>
#include <string>

#include "alglab/rank4.hpp"

namespace alglab {

enum class IdentityName {
  commutative,
  anticommutative,
  associative,
  flexible,
  antiflexible,
  alternative,
  left_symmetric,
  lie_admissible,
  associator_cyclic,
  jordan,
  malcev,
  fourth_power_associative,
};

inline const char* identity_name(IdentityName n) {
  switch (n) {
    case IdentityName::commutative: return "commutative";
    case IdentityName::anticommutative: return "anticommutative";
    case IdentityName::associative: return "associative";
    case IdentityName::flexible: return "flexible";
    case IdentityName::antiflexible: return "antiflexible";
    case IdentityName::alternative: return "alternative";
    case IdentityName::left_symmetric: return "left_symmetric";
    case IdentityName::lie_admissible: return "lie_admissible";
    case IdentityName::associator_cyclic: return "associator_cyclic";
    case IdentityName::jordan: return "jordan";
    case IdentityName::malcev: return "malcev";
    case IdentityName::fourth_power_associative: return "fourth_power_associative";
  }
  return "?";
}

inline std::optional<IdentityName> parse_identity(const std::string& s) {
  static const std::pair<const char*, IdentityName> table[] = {
      {"commutative", IdentityName::commutative},
      {"anticommutative", IdentityName::anticommutative},
      {"associative", IdentityName::associative},
      {"flexible", IdentityName::flexible},
      {"antiflexible", IdentityName::antiflexible},
      {"alternative", IdentityName::alternative},
      {"left_symmetric", IdentityName::left_symmetric},
      {"lie_admissible", IdentityName::lie_admissible},
      {"associator_cyclic", IdentityName::associator_cyclic},
      {"jordan", IdentityName::jordan},
      {"malcev", IdentityName::malcev},
      {"fourth_power_associative", IdentityName::fourth_power_associative},
  };
  for (const auto& [name, id] : table)
    if (s == name) return id;
  return std::nullopt;
}

struct DefectReport {
  std::string identity;
  double max_defect = 0.0;
  std::vector<int> witness;  // basis tuple attaining the max
  bool passed = false;
};

namespace detail {

// Tracks the max coordinate magnitude with lexicographically smallest witness
// (tuples are visited in lex order, so strict improvement suffices).
template <class S>
struct DefectAcc {
  S worst = scalar_traits<S>::zero();
  std::vector<int> witness;
  void update(const Vec<S>& defect, std::initializer_list<int> tuple) {
    for (const auto& v : defect) {
      S a = scalar_traits<S>::abs(v);
      if (a > worst) {
        worst = a;
        witness.assign(tuple);
      }
    }
  }
  void update_scalar(const S& v, std::initializer_list<int> tuple) {
    S a = scalar_traits<S>::abs(v);
    if (a > worst) {
      worst = a;
      witness.assign(tuple);
    }
  }
  DefectReport report_named(const std::string& name) const {
    DefectReport r;
    r.identity = name;
    r.max_defect = scalar_traits<S>::to_double(worst);
    r.witness = witness;
    r.passed = scalar_traits<S>::within_defect_tol(worst);
    return r;
  }
  DefectReport report(IdentityName name) const { return report_named(identity_name(name)); }
};

template <class S>
Vec<S> basis_associator(const Algebra<S>& A, int i, int j, int k) {
  // (e_i e_j) e_k - e_i (e_j e_k)
  Vec<S> left = A.mul_vec_basis(A.basis_product(i, j), k);
  Vec<S> right = A.mul_basis_vec(i, A.basis_product(j, k));
  return vec_sub(left, right);
}

}  // namespace detail

// AT(x1,x2,x3) = sum_{sigma in S3} sign(sigma) [x_s1, x_s2, x_s3]
template <class S>
Vec<S> at_tensor_basis(const Algebra<S>& A, int i, int j, int k) {
  using detail::basis_associator;
  Vec<S> s = basis_associator(A, i, j, k);
  s = vec_add(s, basis_associator(A, j, k, i));
  s = vec_add(s, basis_associator(A, k, i, j));
  s = vec_sub(s, basis_associator(A, j, i, k));
  s = vec_sub(s, basis_associator(A, i, k, j));
  s = vec_sub(s, basis_associator(A, k, j, i));
  return s;
}

template <class S>
Vec<S> at_tensor(const Algebra<S>& A, const Vec<S>& x, const Vec<S>& y, const Vec<S>& z) {
  Vec<S> s = A.associator(x, y, z);
  s = vec_add(s, A.associator(y, z, x));
  s = vec_add(s, A.associator(z, x, y));
  s = vec_sub(s, A.associator(y, x, z));
  s = vec_sub(s, A.associator(x, z, y));
  s = vec_sub(s, A.associator(z, y, x));
  return s;
}

// Identity checks run over all basis tuples (full multilinearization of the
// one-variable-quadratic/cubic identities; valid in characteristic 0).
template <class S>
DefectReport check_identity(const Algebra<S>& A, IdentityName name) {
  using detail::basis_associator;
  const int n = A.dim();
  detail::DefectAcc<S> acc;

  auto assoc = [&](int i, int j, int k) { return basis_associator(A, i, j, k); };

  switch (name) {
    case IdentityName::commutative:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          acc.update(vec_sub(A.basis_product(i, j), A.basis_product(j, i)), {i, j});
      break;
    case IdentityName::anticommutative:
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          acc.update(vec_add(A.basis_product(i, j), A.basis_product(j, i)), {i, j});
      break;
    case IdentityName::associative:
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) acc.update(assoc(i, j, k), {i, j, k});
      break;
    case IdentityName::flexible:
      // [x,y,x] = 0, polarized: [a,y,c] + [c,y,a] = 0
      for (int a = 0; a < n; ++a)
        for (int y = 0; y < n; ++y)
          for (int c = a; c < n; ++c)
            acc.update(vec_add(assoc(a, y, c), assoc(c, y, a)), {a, y, c});
      break;
    case IdentityName::antiflexible:
      for (int a = 0; a < n; ++a)
        for (int y = 0; y < n; ++y)
          for (int c = a; c < n; ++c)
            acc.update(vec_sub(assoc(a, y, c), assoc(c, y, a)), {a, y, c});
      break;
    case IdentityName::alternative:
      // [x,x,y] = 0 and [x,y,y] = 0, polarized
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
          for (int y = 0; y < n; ++y) {
            acc.update(vec_add(assoc(a, b, y), assoc(b, a, y)), {a, b, y});
            acc.update(vec_add(assoc(y, a, b), assoc(y, b, a)), {y, a, b});
          }
      break;
    case IdentityName::left_symmetric:
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          for (int y = 0; y < n; ++y)
            acc.update(vec_sub(assoc(a, b, y), assoc(b, a, y)), {a, b, y});
      break;
    case IdentityName::lie_admissible:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int k = j + 1; k < n; ++k)
            acc.update(at_tensor_basis(A, i, j, k), {i, j, k});
      break;
    case IdentityName::associator_cyclic:
      // every cyclic orbit has a rotation with j <= k
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = j; k < n; ++k)
            acc.update(vec_add(vec_add(assoc(i, j, k), assoc(k, i, j)), assoc(j, k, i)),
                       {i, j, k});
      break;
    case IdentityName::jordan: {
      // commutativity + [x*x, y, x] = 0 polarized over x -> (a,b,c)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          acc.update(vec_sub(A.basis_product(i, j), A.basis_product(j, i)), {i, j});
      // sparse nonzero lists of all basis products, computed once
      std::vector<std::vector<std::pair<int, S>>> prods(static_cast<size_t>(n) * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prods[static_cast<size_t>(i) * n + j] = A.row(i, j);
      auto sparse_mul_basis = [&](const std::vector<std::pair<int, S>>& u, int j) {
        std::vector<std::pair<int, S>> out;
        Vec<S> acc_dense = zero_vec<S>(n);
        for (const auto& [i, ui] : u)
          for (const auto& [k, c] : prods[static_cast<size_t>(i) * n + j]) acc_dense[k] += ui * c;
        for (int k = 0; k < n; ++k)
          if (!scalar_traits<S>::is_zero(acc_dense[k])) out.emplace_back(k, acc_dense[k]);
        return out;
      };
      auto sparse_mul = [&](const std::vector<std::pair<int, S>>& u,
                            const std::vector<std::pair<int, S>>& v) {
        Vec<S> out = zero_vec<S>(n);
        for (const auto& [i, ui] : u)
          for (const auto& [j, vj] : v) {
            S f = ui * vj;
            for (const auto& [k, c] : prods[static_cast<size_t>(i) * n + j]) out[k] += c * f;
          }
        return out;
      };
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
          for (int c = b; c < n; ++c)
            for (int y = 0; y < n; ++y) {
              int perm[6][3] = {{a, b, c}, {a, c, b}, {b, a, c},
                                {b, c, a}, {c, a, b}, {c, b, a}};
              Vec<S> sum = zero_vec<S>(n);
              for (auto& p : perm) {
                // [e_p0 * e_p1, e_y, e_p2]
                const auto& u = prods[static_cast<size_t>(p[0]) * n + p[1]];
                auto uy = sparse_mul_basis(u, y);
                for (const auto& [i, ui] : uy)
                  for (const auto& [k, cc] : prods[static_cast<size_t>(i) * n + p[2]])
                    sum[k] += cc * ui;
                Vec<S> right = sparse_mul(u, prods[static_cast<size_t>(y) * n + p[2]]);
                sum = vec_sub(sum, right);
              }
              acc.update(sum, {a, b, c, y});
            }
      break;
    }
    case IdentityName::malcev: {
      // anticommutativity + the Malcev identity polarized in its quadratic slot
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
          acc.update(vec_add(A.basis_product(i, j), A.basis_product(j, i)), {i, j});
      auto term = [&](int x1, int x2, int y, int z) {
        // (x1*y)*(x2*z) - ((x1*y)*z)*x2 - ((y*z)*x1)*x2 - ((z*x1)*x2)*y
        Vec<S> x1y = A.basis_product(x1, y);
        Vec<S> lhs = A.multiply(x1y, A.basis_product(x2, z));
        Vec<S> t1 = A.mul_vec_basis(A.mul_vec_basis(x1y, z), x2);
        Vec<S> t2 = A.mul_vec_basis(A.mul_vec_basis(A.basis_product(y, z), x1), x2);
        Vec<S> t3 = A.mul_vec_basis(A.mul_vec_basis(A.basis_product(z, x1), x2), y);
        return vec_sub(vec_sub(vec_sub(lhs, t1), t2), t3);
      };
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
          for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
              acc.update(vec_add(term(a, b, y, z), term(b, a, y, z)), {a, b, y, z});
      break;
    }
    case IdentityName::fourth_power_associative: {
      // (x*x)*(x*x) = ((x*x)*x)*x, fully polarized over sorted 4-tuples
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
          for (int c = b; c < n; ++c)
            for (int d = c; d < n; ++d) {
              int v[4] = {a, b, c, d};
              std::sort(v, v + 4);
              Vec<S> sum = zero_vec<S>(n);
              do {
                Vec<S> p01 = A.basis_product(v[0], v[1]);
                Vec<S> sq = A.multiply(p01, A.basis_product(v[2], v[3]));
                Vec<S> cube = A.mul_vec_basis(A.mul_vec_basis(p01, v[2]), v[3]);
                sum = vec_add(sum, vec_sub(sq, cube));
              } while (std::next_permutation(v, v + 4));
              acc.update(sum, {a, b, c, d});
            }
      break;
    }
  }
  return acc.report(name);
}

enum class CurvatureSide { left, right };

// curvature R(x,y) = [L(x),L(y)] - L([x,y]);
// adjoint curvature Rbar(x,y) = [R(x),R(y)] + R([x,y])
template <class S>
Mat<S> curvature(const Algebra<S>& A, CurvatureSide side, const Vec<S>& x, const Vec<S>& y) {
  Vec<S> bracket = vec_sub(A.multiply(x, y), A.multiply(y, x));
  if (side == CurvatureSide::left) {
    Mat<S> lx = A.left_op(x), ly = A.left_op(y);
    return lx * ly - ly * lx - A.left_op(bracket);
  }
  Mat<S> rx = A.right_op(x), ry = A.right_op(y);
  return rx * ry - ry * rx + A.right_op(bracket);
}

// (Rflat + Rbarflat)(x,y,z,w) = h(R(x,y)z + Rbar(x,y)z, w), an S2Lambda2
// element for any metrized algebra; validated before returning.
template <class S>
Rank4<S> curvature_flat(const Metrized<S>& M) {
  const Algebra<S>& A = M.alg;
  const int n = A.dim();
  Rank4<S> t(n, Sym4::s2lambda2);
  for (int i = 0; i < n; ++i) {
    Vec<S> ei = basis_vec<S>(n, i);
    for (int j = i + 1; j < n; ++j) {
      Vec<S> ej = basis_vec<S>(n, j);
      Mat<S> sum = curvature(A, CurvatureSide::left, ei, ej);
      sum += curvature(A, CurvatureSide::right, ei, ej);
      // t(i,j,k,l) = sum_m sum(m,k) h(m,l)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          S v = scalar_traits<S>::zero();
          for (int m = 0; m < n; ++m)
            if (!scalar_traits<S>::is_zero(sum(m, k))) v += sum(m, k) * M.h(m, l);
          t.at(i, j, k, l) = v;
          t.at(j, i, k, l) = -v;
        }
    }
  }
  t.validate();
  return t;
}

}  // namespace alglab
