#include "alglab/presets.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <sstream>

namespace alglab {

CDTable cayley_dickson(int level) {
  if (level < 0 || level > 4) throw preset_error("Cayley-Dickson level must be 0..4");
  CDTable t;
  t.dim = 1;
  t.index = {0};
  t.sign = {1};
  for (int l = 0; l < level; ++l) {
    const CDTable prev = t;
    const int m = prev.dim;
    CDTable next;
    next.dim = 2 * m;
    next.index.assign(static_cast<size_t>(next.dim) * next.dim, 0);
    next.sign.assign(static_cast<size_t>(next.dim) * next.dim, 1);
    auto put = [&](int i, int j, int k, int s) {
      next.index[static_cast<size_t>(i) * next.dim + j] = k;
      next.sign[static_cast<size_t>(i) * next.dim + j] = s;
    };
    // (a,0)(c,0) = (ac, 0); (a,0)(0,d) = (0, da); (0,b)(c,0) = (0, b conj(c));
    // (0,b)(0,d) = (-conj(d) b, 0)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        put(i, j, prev.idx(i, j), prev.sgn(i, j));
        put(i, m + j, m + prev.idx(j, i), prev.sgn(j, i));
        {
          int cs = (j == 0) ? 1 : -1;  // conj(e_j)
          put(m + i, j, m + prev.idx(i, j), cs * prev.sgn(i, j));
        }
        {
          int cs = (j == 0) ? 1 : -1;
          put(m + i, m + j, prev.idx(j, i), -cs * prev.sgn(j, i));
        }
      }
    t = std::move(next);
  }
  return t;
}

namespace {

using REntry = Algebra<Rat>::Entry;
using FEntry = Algebra<double>::Entry;

Mat<Rat> scaled_identity(int n, const Rat& s) {
  Mat<Rat> h(n, n);
  for (int i = 0; i < n; ++i) h(i, i) = s;
  return h;
}

std::vector<std::string> unit_labels(int dim, const char* stem) {
  std::vector<std::string> l(dim);
  for (int i = 0; i < dim; ++i) l[i] = std::string(stem) + std::to_string(i);
  return l;
}

Algebra<Rat> algebra_from_table(const CDTable& t, const char* stem) {
  std::vector<REntry> entries;
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j)
      entries.push_back({i, j, t.idx(i, j), make_rat(t.sgn(i, j))});
  return Algebra<Rat>(t.dim, std::move(entries), unit_labels(t.dim, stem));
}

Preset finish_rational(PresetDescriptor desc, Algebra<Rat> alg, Mat<Rat> h,
                       std::optional<Vec<Rat>> unit, bool composition) {
  Preset p;
  p.desc = std::move(desc);
  p.rational_mode = true;
  p.exact = make_metrized(std::move(alg), std::move(h));
  p.flt = to_float(*p.exact);
  if (unit) {
    p.unit_exact = unit;
    p.unit = to_float(*unit);
  }
  p.composition_candidate = composition;
  p.metric_invariant = p.exact->invariant();
  return p;
}

Preset finish_float(PresetDescriptor desc, Algebra<double> alg, Mat<double> h,
                    std::optional<Vec<double>> unit, bool composition) {
  Preset p;
  p.desc = std::move(desc);
  p.rational_mode = false;
  p.flt = make_metrized(std::move(alg), std::move(h));
  p.unit = std::move(unit);
  p.composition_candidate = composition;
  p.metric_invariant = p.flt.invariant();
  return p;
}

Preset build_hurwitz(PresetDescriptor desc, int level, bool para) {
  CDTable t = cayley_dickson(level);
  Algebra<Rat> alg = algebra_from_table(t, "e");
  if (para) {
    // x o y = conj(x) conj(y)
    std::vector<REntry> entries;
    for (int i = 0; i < t.dim; ++i)
      for (int j = 0; j < t.dim; ++j) {
        int s = t.sgn(i, j);
        if (i > 0) s = -s;
        if (j > 0) s = -s;
        entries.push_back({i, j, t.idx(i, j), make_rat(s)});
      }
    alg = Algebra<Rat>(t.dim, std::move(entries), unit_labels(t.dim, "e"));
  }
  Mat<Rat> h = scaled_identity(t.dim, make_rat(2));  // polarization of q, q(e_i) = 1
  Vec<Rat> unit = basis_vec<Rat>(t.dim, 0);
  return finish_rational(std::move(desc), std::move(alg), std::move(h), unit, true);
}

Preset build_cross(PresetDescriptor desc, int d) {
  std::vector<REntry> entries;
  if (d == 3) {
    int eps[3][3][3] = {};
    eps[0][1][2] = eps[1][2][0] = eps[2][0][1] = 1;
    eps[0][2][1] = eps[2][1][0] = eps[1][0][2] = -1;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          if (eps[i][j][k] != 0) entries.push_back({i, j, k, make_rat(eps[i][j][k])});
  } else if (d == 7) {
    // imaginary octonions, x cross y = half the commutator
    CDTable t = cayley_dickson(3);
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j) {
        if (i == j) continue;
        entries.push_back({i - 1, j - 1, t.idx(i, j) - 1, make_rat(t.sgn(i, j))});
      }
  } else {
    throw preset_error("cross product algebras exist in dimensions 3 and 7");
  }
  Mat<Rat> h = scaled_identity(d, make_rat(1));
  return finish_rational(std::move(desc), Algebra<Rat>(d, std::move(entries)), std::move(h),
                         std::nullopt, false);
}

Preset build_c_epsilon(PresetDescriptor desc, const Rat& eps) {
  Rat a = make_rat(1, 2) - eps;  // f0 f1 and f1 f1 weight
  Rat b = make_rat(1, 2) + eps;  // f0 f2 and f2 f2 weight
  std::vector<REntry> entries = {
      {0, 0, 0, Rat(1)},
      {0, 1, 1, a}, {1, 0, 1, a},
      {0, 2, 2, b}, {2, 0, 2, b},
      {1, 1, 0, a},
      {2, 2, 0, b},
  };
  Mat<Rat> h = scaled_identity(3, Rat(1));
  return finish_rational(std::move(desc), Algebra<Rat>(3, std::move(entries), {"f0", "f1", "f2"}),
                         std::move(h), std::nullopt, false);
}

Preset build_e_algebra(PresetDescriptor desc, int n) {
  if (n < 2) throw preset_error("e_algebra needs n >= 2");
  Rat k = make_rat(n + 1, n - 1);
  Rat r = make_rat(1, n - 1);
  std::vector<REntry> entries;
  // e_i * e_j = k delta_ij e_i - r (e_j + e_i)
  std::map<std::array<int, 3>, Rat> acc;
  auto add = [&](int i, int j, int kk, const Rat& c) {
    acc[{i, j, kk}] += c;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) add(i, j, i, k);
      add(i, j, j, -r);
      add(i, j, i, -r);
    }
  for (const auto& [key, c] : acc)
    if (sgn(c) != 0) entries.push_back({key[0], key[1], key[2], c});
  Algebra<Rat> alg(n, std::move(entries));
  Mat<Rat> h = killing_form(alg);
  return finish_rational(std::move(desc), std::move(alg), std::move(h), std::nullopt, false);
}

Preset build_kosier(PresetDescriptor desc) {
  // x*y = (2 x1 y1 + x2 y3, 2 x1 y2, 2 x3 y1) in 1-based coordinates
  std::vector<REntry> entries = {
      {0, 0, 0, Rat(2)},
      {1, 2, 0, Rat(1)},
      {0, 1, 1, Rat(2)},
      {2, 0, 2, Rat(2)},
  };
  Mat<Rat> h(3, 3);
  h(0, 0) = Rat(1);
  h(1, 2) = make_rat(1, 2);
  h(2, 1) = make_rat(1, 2);
  return finish_rational(std::move(desc), Algebra<Rat>(3, std::move(entries)), std::move(h),
                         std::nullopt, false);
}

Preset build_r3_star(PresetDescriptor desc) {
  // x * y = (x2 y3, x3 y1, x1 y2)
  std::vector<REntry> entries = {
      {1, 2, 0, Rat(1)},
      {2, 0, 1, Rat(1)},
      {0, 1, 2, Rat(1)},
  };
  Mat<Rat> h = scaled_identity(3, Rat(1));
  return finish_rational(std::move(desc), Algebra<Rat>(3, std::move(entries)), std::move(h),
                         std::nullopt, false);
}

Preset build_two_step_double(PresetDescriptor desc) {
  // free 2-step nilpotent Lie algebra on generators x1, x2 with center z,
  // doubled with its dual; basis (x1, x2, z, x1*, x2*, z*)
  std::vector<REntry> entries = {
      {0, 1, 2, Rat(1)},  {1, 0, 2, Rat(-1)},
      {0, 5, 4, Rat(-1)}, {5, 0, 4, Rat(1)},
      {1, 5, 3, Rat(1)},  {5, 1, 3, Rat(-1)},
  };
  Mat<Rat> h(6, 6);
  for (int i = 0; i < 3; ++i) {
    h(i, 3 + i) = Rat(1);
    h(3 + i, i) = Rat(1);
  }
  return finish_rational(std::move(desc),
                         Algebra<Rat>(6, std::move(entries), {"x1", "x2", "z", "x1*", "x2*", "z*"}),
                         std::move(h), std::nullopt, false);
}

Preset build_matrix_lie(PresetDescriptor desc, int n, int level) {
  if (n < 1) throw preset_error("mat needs n >= 1");
  CDTable t = cayley_dickson(level);
  const int d = t.dim;
  const int dim = d * n * n;
  auto bidx = [&](int i, int j, int s) { return (i * n + j) * d + s; };
  std::map<std::array<int, 3>, Rat> acc;
  auto add = [&](int a, int b, int c, const Rat& v) {
    if (sgn(v) != 0) acc[{a, b, c}] += v;
  };
  // [u_s e_ij, u_t e_kl] = delta_jk (u_s u_t) e_il - delta_li (u_t u_s) e_kj
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          for (int s = 0; s < d; ++s)
            for (int u = 0; u < d; ++u) {
              int a = bidx(i, j, s), b = bidx(k, l, u);
              if (j == k) add(a, b, bidx(i, l, t.idx(s, u)), make_rat(t.sgn(s, u)));
              if (l == i) add(a, b, bidx(k, j, t.idx(u, s)), make_rat(-t.sgn(u, s)));
            }
  std::vector<REntry> entries;
  for (const auto& [key, c] : acc)
    if (sgn(c) != 0) entries.push_back({key[0], key[1], key[2], c});
  // Frobenius form Re tr(conj(x)^T y) is the identity on this basis
  Mat<Rat> h = scaled_identity(dim, Rat(1));
  return finish_rational(std::move(desc), Algebra<Rat>(dim, std::move(entries)), std::move(h),
                         std::nullopt, false);
}

Preset build_so(PresetDescriptor desc, int n) {
  if (n < 2) throw preset_error("so needs n >= 2");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  const int dim = static_cast<int>(pairs.size());
  auto find_pair = [&](int i, int j) {  // returns (index, sign)
    if (i == j) return std::pair<int, int>(-1, 0);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    for (int p = 0; p < dim; ++p)
      if (pairs[p] == std::pair<int, int>(i, j)) return std::pair<int, int>(p, flip ? -1 : 1);
    return std::pair<int, int>(-1, 0);
  };
  // [A_ij, A_kl] = d_jk A_il - d_jl A_ik - d_ik A_jl + d_il A_jk
  std::map<std::array<int, 3>, Rat> acc;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      auto [i, j] = pairs[a];
      auto [k, l] = pairs[b];
      auto add = [&](int p, int q, int coeff) {
        auto [idx, s] = find_pair(p, q);
        if (idx >= 0 && coeff * s != 0) acc[{a, b, idx}] += make_rat(coeff * s);
      };
      if (j == k) add(i, l, 1);
      if (j == l) add(i, k, -1);
      if (i == k) add(j, l, -1);
      if (i == l) add(j, k, 1);
    }
  std::vector<REntry> entries;
  for (const auto& [key, c] : acc)
    if (sgn(c) != 0) entries.push_back({key[0], key[1], key[2], c});
  // f(x,y) = tr(x^T y): basis elements have squared norm 2
  Mat<Rat> h = scaled_identity(dim, Rat(2));
  return finish_rational(std::move(desc), Algebra<Rat>(dim, std::move(entries)), std::move(h),
                         std::nullopt, false);
}

using CMat = std::vector<std::complex<double>>;  // n*n row-major

CMat cmul(int n, const CMat& a, const CMat& b) {
  CMat c(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      auto aik = a[i * n + k];
      if (aik == std::complex<double>(0.0)) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

std::complex<double> ctrace(int n, const CMat& a) {
  std::complex<double> t = 0.0;
  for (int i = 0; i < n; ++i) t += a[i * n + i];
  return t;
}

// i * (generalized Gell-Mann) basis of su(n); for n = 3 this is the
// standard Gell-Mann ordering lambda_1..lambda_8.
std::vector<CMat> su_basis(int n) {
  using C = std::complex<double>;
  std::vector<CMat> basis;
  const C I(0.0, 1.0);
  auto zero = [&]() { return CMat(static_cast<size_t>(n) * n, 0.0); };
  for (int k = 1; k < n; ++k) {
    for (int j = 0; j < k; ++j) {
      CMat sym = zero();
      sym[j * n + k] = 1.0;
      sym[k * n + j] = 1.0;
      CMat asym = zero();
      asym[j * n + k] = -I;
      asym[k * n + j] = I;
      for (auto& v : sym) v *= I;
      for (auto& v : asym) v *= I;
      basis.push_back(sym);
      basis.push_back(asym);
    }
    CMat diag = zero();
    double norm = std::sqrt(2.0 / (k * (k + 1.0)));
    for (int r = 0; r < k; ++r) diag[r * n + r] = norm;
    diag[k * n + k] = -k * norm;
    for (auto& v : diag) v *= I;
    basis.push_back(diag);
  }
  return basis;
}

Preset build_su(PresetDescriptor desc, int n) {
  if (n < 2) throw preset_error("su needs n >= 2");
  auto basis = su_basis(n);
  const int dim = static_cast<int>(basis.size());
  std::vector<FEntry> entries;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      CMat ab = cmul(n, basis[a], basis[b]);
      CMat ba = cmul(n, basis[b], basis[a]);
      for (size_t p = 0; p < ab.size(); ++p) ab[p] -= ba[p];
      // coords: c_k = Re tr(conj(B_k)^T Z) / 2 = -Re tr(B_k Z) / 2
      for (int k = 0; k < dim; ++k) {
        auto tr = ctrace(n, cmul(n, basis[k], ab));
        double coeff = -0.5 * tr.real();
        if (std::fabs(coeff) > 1e-12) entries.push_back({a, b, k, coeff});
      }
    }
  Mat<double> h(dim, dim);
  for (int i = 0; i < dim; ++i) h(i, i) = 2.0;
  return finish_float(std::move(desc), Algebra<double>(dim, std::move(entries)), std::move(h),
                      std::nullopt, false);
}

Preset build_okubo(PresetDescriptor desc) {
  const int n = 3;
  auto basis = su_basis(n);
  const int dim = 8;
  using C = std::complex<double>;
  const C omega = std::polar(1.0, 2.0 * std::acos(-1.0) / 3.0);
  const C omega2 = omega * omega;
  const C wfac = (omega - omega2) / 3.0;
  std::vector<FEntry> entries;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      // x * y = omega x y - omega^2 y x + (omega - omega^2)/3 h(x,y) Id,
      // h(x,y) = -tr(xy)
      CMat xy = cmul(n, basis[a], basis[b]);
      CMat yx = cmul(n, basis[b], basis[a]);
      double hxy = -ctrace(n, xy).real();
      CMat z(static_cast<size_t>(n) * n, 0.0);
      for (size_t p = 0; p < z.size(); ++p) z[p] = omega * xy[p] - omega2 * yx[p];
      for (int r = 0; r < n; ++r) z[r * n + r] += wfac * hxy;
      // closure: z must be anti-Hermitian and traceless
      double residue = std::abs(ctrace(n, z));
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          residue = std::max(residue, std::abs(z[r * n + c] + std::conj(z[c * n + r])));
      if (residue > 1e-9) throw preset_error("okubo closure failure");
      for (int k = 0; k < dim; ++k) {
        auto tr = ctrace(n, cmul(n, basis[k], z));
        C coeff = -0.5 * tr;
        if (std::fabs(coeff.imag()) > 1e-9) throw preset_error("okubo imaginary residue");
        if (std::fabs(coeff.real()) > 1e-12) entries.push_back({a, b, k, coeff.real()});
      }
    }
  Mat<double> h(dim, dim);
  for (int i = 0; i < dim; ++i) h(i, i) = 2.0;
  return finish_float(std::move(desc), Algebra<double>(dim, std::move(entries)), std::move(h),
                      std::nullopt, true);
}

Preset build_im_octonion_bracket(PresetDescriptor desc) {
  CDTable t = cayley_dickson(3);
  std::vector<REntry> entries;
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      if (i == j) continue;
      entries.push_back({i - 1, j - 1, t.idx(i, j) - 1, make_rat(2 * t.sgn(i, j))});
    }
  Mat<Rat> h = scaled_identity(7, Rat(1));
  return finish_rational(std::move(desc), Algebra<Rat>(7, std::move(entries)), std::move(h),
                         std::nullopt, false);
}

}  // namespace

HermBasisLayout herm_layout(int n, int level) {
  HermBasisLayout lay;
  lay.n = n;
  lay.d = 1 << level;
  lay.dim = n + lay.d * n * (n - 1) / 2;
  return lay;
}

template <class S>
KMatrix<S> herm_basis_matrix(const HermBasisLayout& lay, int b) {
  const int n = lay.n, d = lay.d;
  KMatrix<S> m(static_cast<size_t>(n) * n, zero_vec<S>(d));
  if (b < n) {
    m[b * n + b][0] = scalar_traits<S>::one();
    return m;
  }
  int rest = b - n;
  int pair = rest / d, t = rest % d;
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (count++ != pair) continue;
      m[i * n + j][t] = scalar_traits<S>::one();
      m[j * n + i][t] = (t == 0) ? scalar_traits<S>::one() : -scalar_traits<S>::one();
      return m;
    }
  throw preset_error("herm basis index out of range");
}

template <class S>
Vec<S> herm_coords_from_matrix(const HermBasisLayout& lay, const KMatrix<S>& m) {
  const int n = lay.n, d = lay.d;
  Vec<S> coords = zero_vec<S>(lay.dim);
  for (int i = 0; i < n; ++i) coords[lay.diag(i)] = m[i * n + i][0];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int t = 0; t < d; ++t) coords[lay.off(i, j, t)] = m[i * n + j][t];
  return coords;
}

template <class S>
KMatrix<S> kmat_mul(const CDTable& tab, int n, const KMatrix<S>& a, const KMatrix<S>& b) {
  KMatrix<S> c(static_cast<size_t>(n) * n, zero_vec<S>(tab.dim));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const Vec<S>& aik = a[i * n + k];
      if (vec_is_zero(aik)) continue;
      for (int j = 0; j < n; ++j) {
        const Vec<S>& bkj = b[k * n + j];
        if (vec_is_zero(bkj)) continue;
        Vec<S> prod = cd_mul(tab, aik, bkj);
        for (int t = 0; t < tab.dim; ++t) c[i * n + j][t] += prod[t];
      }
    }
  return c;
}

template KMatrix<Rat> herm_basis_matrix<Rat>(const HermBasisLayout&, int);
template KMatrix<double> herm_basis_matrix<double>(const HermBasisLayout&, int);
template Vec<Rat> herm_coords_from_matrix<Rat>(const HermBasisLayout&, const KMatrix<Rat>&);
template Vec<double> herm_coords_from_matrix<double>(const HermBasisLayout&, const KMatrix<double>&);
template KMatrix<Rat> kmat_mul<Rat>(const CDTable&, int, const KMatrix<Rat>&, const KMatrix<Rat>&);
template KMatrix<double> kmat_mul<double>(const CDTable&, int, const KMatrix<double>&,
                                          const KMatrix<double>&);

namespace {

Preset build_herm(PresetDescriptor desc, int n, int level) {
  if (n < 2) throw preset_error("herm needs n >= 2");
  if (level < 0 || level > 3) throw preset_error("herm level must be 0..3");
  if (level == 3 && n != 3) throw preset_error("herm over the octonions requires n = 3");
  CDTable tab = cayley_dickson(level);
  HermBasisLayout lay = herm_layout(n, level);
  const int dim = lay.dim;
  std::vector<KMatrix<Rat>> basis;
  basis.reserve(dim);
  for (int b = 0; b < dim; ++b) basis.push_back(herm_basis_matrix<Rat>(lay, b));

  const Rat half = make_rat(1, 2);
  std::vector<REntry> entries;
  Mat<Rat> h(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      KMatrix<Rat> ab = kmat_mul(tab, n, basis[a], basis[b]);
      KMatrix<Rat> ba = kmat_mul(tab, n, basis[b], basis[a]);
      // h(B_a, B_b) = Re tr(B_a B_b) / n
      Rat re_tr(0);
      for (int i = 0; i < n; ++i) re_tr += ab[i * n + i][0];
      h(a, b) = re_tr / make_rat(n);
      KMatrix<Rat> star(static_cast<size_t>(n) * n, zero_vec<Rat>(tab.dim));
      for (size_t p = 0; p < star.size(); ++p)
        for (int t = 0; t < tab.dim; ++t) star[p][t] = half * (ab[p][t] + ba[p][t]);
      Vec<Rat> coords = herm_coords_from_matrix(lay, star);
      for (int k = 0; k < dim; ++k)
        if (sgn(coords[k]) != 0) entries.push_back({a, b, k, coords[k]});
    }
  std::vector<std::string> labels(dim);
  for (int i = 0; i < n; ++i) labels[i] = "E" + std::to_string(i + 1) + std::to_string(i + 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int t = 0; t < tab.dim; ++t)
        labels[lay.off(i, j, t)] =
            "u" + std::to_string(t) + "_" + std::to_string(i + 1) + std::to_string(j + 1);
  Vec<Rat> unit = zero_vec<Rat>(dim);
  for (int i = 0; i < n; ++i) unit[i] = Rat(1);
  return finish_rational(std::move(desc), Algebra<Rat>(dim, std::move(entries), std::move(labels)),
                         std::move(h), unit, false);
}

Preset build_sl2_kosier_bracket(PresetDescriptor desc) {
  Preset kosier = build_preset("kosier");
  Algebra<Rat> bracket = derived_algebra(kosier.exact->alg, DerivedKind::bracket);
  Mat<Rat> h = kosier.exact->h;
  return finish_rational(std::move(desc), std::move(bracket), std::move(h), std::nullopt, false);
}

int parse_int(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    throw preset_error(std::string("bad integer parameter for ") + what + ": " + s);
  }
}

}  // namespace

std::optional<PresetDescriptor> parse_preset_string(const std::string& raw) {
  std::string s = raw;
  if (s.rfind("preset:", 0) == 0) s = s.substr(7);
  if (s.empty()) return std::nullopt;
  PresetDescriptor d;
  std::stringstream ss(s);
  std::string tok;
  bool first = true;
  while (std::getline(ss, tok, ':')) {
    if (first) {
      d.name = tok;
      first = false;
    } else {
      d.params.push_back(tok);
    }
  }
  if (d.name.empty()) return std::nullopt;
  d.canonical = d.name;
  for (const auto& p : d.params) d.canonical += ":" + p;
  return d;
}

std::vector<PresetInfo> preset_catalog() {
  return {
      {"hurwitz:<level 0..3>", "unital composition algebra (R, C, H, O) from Cayley-Dickson doubling"},
      {"para_hurwitz:<level 0..3>", "para-Hurwitz symmetric composition algebra, x o y = conj(x) conj(y)"},
      {"okubo_compact", "compact real Okubo algebra on su(3) (float mode)"},
      {"cross:<3|7>", "cross product algebra with Euclidean metric"},
      {"herm:<n>:<level 0..3>", "Hermitian n x n matrices over the level-d Hurwitz algebra, symmetrized product"},
      {"c_epsilon:<rational eps>", "3-dimensional commutative family with constant sectional nonassociativity 1/4 - eps^2"},
      {"e_algebra:<n>", "modified coordinatewise product on R^n metrized by its Killing form"},
      {"kosier", "3-dimensional antiflexible algebra (Kosier type), sl(2) underlying bracket"},
      {"r3_star", "R^3 with x*y = (x2 y3, x3 y1, x1 y2); bracket is the vector cross product"},
      {"two_step_double", "free 2-step nilpotent Lie algebra on 2 generators doubled with its dual, split metric"},
      {"mat:<n>:<level 0..3>", "real matrix space over the level-d Hurwitz algebra, commutator product, Frobenius form"},
      {"su:<n>", "su(n) commutator algebra on the i*(Gell-Mann) basis, Frobenius form (float mode)"},
      {"so:<n>", "antisymmetric real n x n matrices, commutator product, Frobenius form"},
      {"im_octonion_bracket", "imaginary octonions with the commutator bracket (Malcev, not Lie-admissible)"},
      {"sl2_kosier_bracket", "underlying bracket algebra of the Kosier example with its invariant metric"},
      {"so3_killing", "so(3) as (R^3, cross) with the normalized negative Killing form -B/2"},
  };
}

Preset build_preset(const std::string& spec_string) {
  auto dopt = parse_preset_string(spec_string);
  if (!dopt) throw preset_error("cannot parse preset: " + spec_string);
  PresetDescriptor d = *dopt;
  auto need = [&](size_t k) {
    if (d.params.size() != k)
      throw preset_error("preset " + d.name + " expects " + std::to_string(k) + " parameter(s)");
  };
  if (d.name == "hurwitz" || d.name == "para_hurwitz") {
    need(1);
    int level = parse_int(d.params[0], d.name.c_str());
    if (level < 0 || level > 3) throw preset_error("level must be 0..3");
    d.provenance = d.name == "hurwitz" ? "Cayley-Dickson unital composition algebra"
                                       : "para-Hurwitz symmetric composition algebra";
    return build_hurwitz(std::move(d), level, d.name == "para_hurwitz");
  }
  if (d.name == "okubo_compact") {
    need(0);
    d.provenance = "compact real Okubo algebra";
    return build_okubo(std::move(d));
  }
  if (d.name == "cross") {
    need(1);
    d.provenance = "cross product algebra";
    return build_cross(std::move(d), parse_int(d.params[0], "cross"));
  }
  if (d.name == "herm") {
    need(2);
    d.provenance = "Hermitian matrix Jordan algebra";
    return build_herm(std::move(d), parse_int(d.params[0], "herm"), parse_int(d.params[1], "herm"));
  }
  if (d.name == "c_epsilon") {
    need(1);
    auto eps = parse_rat(d.params[0]);
    if (!eps) throw preset_error("c_epsilon parameter must be rational, e.g. 3/10");
    d.provenance = "one-parameter commutative family with constant sectional nonassociativity";
    return build_c_epsilon(std::move(d), *eps);
  }
  if (d.name == "e_algebra") {
    need(1);
    d.provenance = "modified coordinatewise product metrized by its Killing form";
    return build_e_algebra(std::move(d), parse_int(d.params[0], "e_algebra"));
  }
  if (d.name == "kosier") {
    need(0);
    d.provenance = "antiflexible non-power-associative 3-dimensional algebra";
    return build_kosier(std::move(d));
  }
  if (d.name == "r3_star") {
    need(0);
    d.provenance = "antiflexible product on R^3 with cross-product bracket";
    return build_r3_star(std::move(d));
  }
  if (d.name == "two_step_double") {
    need(0);
    d.provenance = "2-step nilpotent double with split invariant metric";
    return build_two_step_double(std::move(d));
  }
  if (d.name == "mat") {
    need(2);
    d.provenance = "matrix commutator algebra with Frobenius form";
    return build_matrix_lie(std::move(d), parse_int(d.params[0], "mat"),
                            parse_int(d.params[1], "mat"));
  }
  if (d.name == "su") {
    need(1);
    d.provenance = "special unitary commutator algebra";
    return build_su(std::move(d), parse_int(d.params[0], "su"));
  }
  if (d.name == "so") {
    need(1);
    d.provenance = "special orthogonal commutator algebra";
    return build_so(std::move(d), parse_int(d.params[0], "so"));
  }
  if (d.name == "im_octonion_bracket") {
    need(0);
    d.provenance = "imaginary octonion commutator algebra";
    return build_im_octonion_bracket(std::move(d));
  }
  if (d.name == "sl2_kosier_bracket") {
    need(0);
    d.provenance = "bracket algebra of the Kosier example";
    return build_sl2_kosier_bracket(std::move(d));
  }
  if (d.name == "so3_killing") {
    need(0);
    d.provenance = "(R^3, cross) with -B/2 (cross-product normalization of the Killing form)";
    Preset p = build_cross(std::move(d), 3);
    return p;
  }
  throw preset_error("unknown preset: " + d.name);
}

template <class S>
CompositionReport composition_check(const Algebra<S>& A, const Mat<S>& h) {
  const int n = A.dim();
  CompositionReport rep;
  detail::DefectAcc<S> acc;
  for (int x = 0; x < n; ++x)
    for (int w = 0; w < n; ++w)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          S lhs = form_dot(h, A.basis_product(x, y), A.basis_product(w, z));
          lhs += form_dot(h, A.basis_product(w, y), A.basis_product(x, z));
          S rhs = h(x, w) * h(y, z);
          acc.update_scalar(lhs - rhs, {x, w, y, z});
        }
  rep.linearized = acc.report_named("composition_linearized");
  MetricReport mrep = check_metric(A, h);
  rep.invariance.identity = "metric_invariance";
  rep.invariance.max_defect = mrep.max_defect;
  rep.invariance.witness = {mrep.witness[0], mrep.witness[1], mrep.witness[2]};
  rep.invariance.passed = mrep.invariant;
  rep.passed = rep.linearized.passed;
  return rep;
}

template CompositionReport composition_check<Rat>(const Algebra<Rat>&, const Mat<Rat>&);
template CompositionReport composition_check<double>(const Algebra<double>&, const Mat<double>&);

}  // namespace alglab
