#include "alglab/special.hpp"

#include <algorithm>
#include <cmath>

#include "alglab/eigen_bridge.hpp"
#include "alglab/parallel.hpp"
#include "alglab/rng.hpp"

namespace alglab {

namespace {

double h_dist2(const Metrized<double>& M, const Vec<double>& a, const Vec<double>& b) {
  Vec<double> d = vec_sub(a, b);
  return M.ip(d, d);
}

double dot_raw(const Vec<double>& a, const Vec<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct NewtonOut {
  Vec<double> x;
  double residual = 1e300;
  bool converged = false;
  std::vector<double> history;
};

double fnorm(const Metrized<double>& M, const Vec<double>& v) {
  return std::sqrt(std::fabs(M.ip(v, v)));
}

// Newton on F(x) = x*x - x
NewtonOut newton_idempotent(const Metrized<double>& M, Vec<double> x, int max_iters) {
  const auto& A = M.alg;
  const int n = A.dim();
  NewtonOut out;
  for (int it = 0; it < max_iters; ++it) {
    Vec<double> fx = vec_sub(A.multiply(x, x), x);
    double res = fnorm(M, fx);
    out.history.push_back(res);
    if (res < 2e-15) {
      out.x = x;
      out.residual = res;
      out.converged = true;
      return out;
    }
    Mat<double> jac = A.left_op(x) + A.right_op(x);
    for (int i = 0; i < n; ++i) jac(i, i) -= 1.0;
    Vec<double> step = solve_least_squares(jac, fx);
    double snorm = 0.0;
    for (int i = 0; i < n; ++i) {
      x[i] -= step[i];
      snorm += step[i] * step[i];
    }
    if (snorm > 1e8) break;  // diverging
  }
  Vec<double> fx = vec_sub(A.multiply(x, x), x);
  out.x = x;
  out.residual = fnorm(M, fx);
  out.history.push_back(out.residual);
  out.converged = out.residual < 1e-11;
  return out;
}

// Gauss-Newton on stacked (x*x, h(x,x) - 1)
NewtonOut newton_square_zero(const Metrized<double>& M, Vec<double> x, int max_iters) {
  const auto& A = M.alg;
  const int n = A.dim();
  NewtonOut out;
  for (int it = 0; it < max_iters; ++it) {
    Vec<double> sq = A.multiply(x, x);
    double cons = M.ip(x, x) - 1.0;
    double res = std::sqrt(M.ip(sq, sq) + cons * cons);
    out.history.push_back(res);
    if (res < 2e-15) break;
    Mat<double> jac(n + 1, n);
    Mat<double> lr = A.left_op(x) + A.right_op(x);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) jac(r, c) = lr(r, c);
    Vec<double> hx = M.h * x;
    for (int c = 0; c < n; ++c) jac(n, c) = 2.0 * hx[c];
    Vec<double> rhs(n + 1);
    for (int r = 0; r < n; ++r) rhs[r] = sq[r];
    rhs[n] = cons;
    Vec<double> step = solve_least_squares(jac, rhs);
    for (int i = 0; i < n; ++i) x[i] -= step[i];
  }
  Vec<double> sq = A.multiply(x, x);
  out.x = x;
  out.residual = fnorm(M, sq);
  out.history.push_back(out.residual);
  out.converged = out.residual < 1e-11 && std::fabs(M.ip(x, x) - 1.0) < 1e-9;
  return out;
}

std::vector<Vec<double>> search_starts(const Metrized<double>& M, const SearchConfig& cfg) {
  std::vector<Vec<double>> starts;
  const int n = M.dim();
  if (cfg.grid > 0 && n <= 3) {
    // deterministic sphere grid (Fibonacci lattice for n = 3)
    if (n == 3) {
      const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
      const int count = cfg.grid;
      for (int i = 0; i < count; ++i) {
        double z = 1.0 - 2.0 * (i + 0.5) / count;
        double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        double phi = 2.0 * std::acos(-1.0) * i / golden;
        starts.push_back({r * std::cos(phi), r * std::sin(phi), z});
      }
    } else if (n == 2) {
      for (int i = 0; i < cfg.grid; ++i) {
        double a = 2.0 * std::acos(-1.0) * i / cfg.grid;
        starts.push_back({std::cos(a), std::sin(a)});
      }
    } else {
      starts.push_back({1.0});
      starts.push_back({-1.0});
    }
    // scale a few radii around the unit sphere
    std::vector<Vec<double>> scaled;
    for (double rad : {0.5, 1.0, 2.0})
      for (const auto& s : starts) scaled.push_back(vec_scale(s, rad));
    return scaled;
  }
  starts.reserve(cfg.starts);
  for (int s = 0; s < cfg.starts; ++s) {
    std::mt19937_64 rng = stream_for(cfg.seed, s);
    starts.push_back(random_h_unit(rng, M.h));
  }
  return starts;
}

void attach_spectrum(const Metrized<double>& M, SpecialElement& el) {
  el.spectrum = general_eigenvalues(M.alg.left_op(el.coords));
  std::sort(el.spectrum.begin(), el.spectrum.end(), [](auto a, auto b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

void snap_element(const Metrized<Rat>* exact, const Metrized<double>& M, SpecialElement& el,
                  const SearchConfig& cfg, bool square_zero) {
  // norm snap is reported whenever close to a small rational
  if (auto ns = snap_to_rational(el.norm, cfg.snap_max_den, 1e-9))
    el.norm_exact = rat_str(*ns);
  if (!exact) return;
  auto try_snap = [&](double tol) -> std::optional<Vec<Rat>> {
    Vec<Rat> cand = zero_vec<Rat>(static_cast<int>(el.coords.size()));
    for (size_t i = 0; i < el.coords.size(); ++i) {
      auto s = snap_to_rational(el.coords[i], cfg.snap_max_den, tol);
      if (!s) return std::nullopt;
      cand[i] = *s;
    }
    return cand;
  };
  auto verifies = [&](const Vec<Rat>& cand) {
    Vec<Rat> sq = exact->alg.multiply(cand, cand);
    Vec<Rat> want = square_zero ? zero_vec<Rat>(exact->dim()) : cand;
    return vec_is_zero(vec_sub(sq, want));
  };
  std::optional<Vec<Rat>> snapped = try_snap(cfg.snap_tol);
  if (!snapped || !verifies(*snapped)) {
    snapped = try_snap(1e-6);
    if (snapped && !verifies(*snapped)) snapped = std::nullopt;
  }
  if (snapped) {
    const Vec<Rat>& cand = *snapped;
    el.exact_verified = true;
    el.coords_exact.clear();
    for (const auto& c : cand) el.coords_exact.push_back(rat_str(c));
    for (size_t i = 0; i < el.coords.size(); ++i) el.coords[i] = rat_double(cand[i]);
    Rat nrm = form_dot(exact->h, cand, cand);
    el.norm_exact = rat_str(nrm);
    el.norm = rat_double(nrm);
    el.residual = 0.0;
  }
}

void dedup_sorted(const Metrized<double>& M, std::vector<SpecialElement>& els, double tol) {
  std::sort(els.begin(), els.end(), [](const SpecialElement& a, const SpecialElement& b) {
    return a.coords < b.coords;
  });
  std::vector<SpecialElement> keep;
  for (auto& e : els) {
    bool dup = false;
    for (const auto& k : keep)
      if (h_dist2(M, e.coords, k.coords) < tol * tol) {
        dup = true;
        break;
      }
    if (!dup) keep.push_back(std::move(e));
  }
  els = std::move(keep);
}

}  // namespace

SpecialElementSet find_idempotents(const Metrized<double>& M, const SearchConfig& cfg,
                                   const Metrized<Rat>* exact) {
  SpecialElementSet out;
  out.kind = SpecialKind::idempotent;
  out.seed = cfg.seed;
  auto starts = search_starts(M, cfg);
  std::vector<NewtonOut> results(starts.size());
  parallel_for(static_cast<int>(starts.size()), cfg.threads,
               [&](int s) { results[s] = newton_idempotent(M, starts[s], cfg.max_iters); });
  std::vector<SpecialElement> els;
  for (auto& r : results) {
    if (!r.converged || r.residual > cfg.residual_tol) continue;
    ++out.converged_starts;
    if (fnorm(M, r.x) < 1e-6) continue;  // exclude 0
    SpecialElement el;
    el.coords = r.x;
    el.residual = r.residual;
    el.norm = M.ip(r.x, r.x);
    el.residual_history = r.history;
    els.push_back(std::move(el));
  }
  dedup_sorted(M, els, cfg.dedup_tol);
  for (auto& el : els) snap_element(exact, M, el, cfg, false);
  dedup_sorted(M, els, cfg.dedup_tol);
  for (auto& el : els) attach_spectrum(M, el);
  out.elements = std::move(els);
  return out;
}

SpecialElementSet find_square_zero(const Metrized<double>& M, const SearchConfig& cfg,
                                   const Metrized<Rat>* exact) {
  SpecialElementSet out;
  out.kind = SpecialKind::square_zero;
  out.seed = cfg.seed;
  auto starts = search_starts(M, cfg);
  std::vector<NewtonOut> results(starts.size());
  parallel_for(static_cast<int>(starts.size()), cfg.threads,
               [&](int s) { results[s] = newton_square_zero(M, starts[s], cfg.max_iters); });
  std::vector<SpecialElement> els;
  for (auto& r : results) {
    if (!r.converged || r.residual > cfg.residual_tol) continue;
    ++out.converged_starts;
    // rays: normalize sign by the first coordinate above tolerance
    for (size_t i = 0; i < r.x.size(); ++i) {
      if (std::fabs(r.x[i]) > 1e-8) {
        if (r.x[i] < 0)
          for (auto& c : r.x) c = -c;
        break;
      }
    }
    SpecialElement el;
    el.coords = r.x;
    el.residual = r.residual;
    el.norm = M.ip(r.x, r.x);
    el.residual_history = r.history;
    els.push_back(std::move(el));
  }
  dedup_sorted(M, els, cfg.dedup_tol);
  for (auto& el : els) snap_element(exact, M, el, cfg, true);
  dedup_sorted(M, els, cfg.dedup_tol);
  for (auto& el : els) attach_spectrum(M, el);
  out.elements = std::move(els);
  return out;
}

OrthogonalSpectrum orthogonal_spectrum(const Metrized<double>& M, const Vec<double>& e) {
  const int n = M.dim();
  double he = M.ip(e, e);
  if (std::fabs(he) < 1e-12) throw isotropic_idempotent("element is h-isotropic");
  OrthogonalSpectrum out;
  Vec<double> sq = vec_sub(M.alg.multiply(e, e), e);
  out.idempotent_residual = fnorm(M, sq);
  out.residual_warning = out.idempotent_residual > 1e-9;

  // h-orthocomplement basis via Gram-Schmidt, seeded with e itself
  Eigen::MatrixXd B(n, n - 1);
  Vec<double> en = vec_scale(e, 1.0 / std::sqrt(std::fabs(he)));
  std::vector<Vec<double>> ortho{en};
  int col = 0;
  for (int i = 0; i < n && col < n - 1; ++i) {
    Vec<double> v = basis_vec<double>(n, i);
    for (const auto& u : ortho) {
      double c = M.ip(u, v) / M.ip(u, u);
      for (int r = 0; r < n; ++r) v[r] -= c * u[r];
    }
    double nv = std::sqrt(std::fabs(M.ip(v, v)));
    if (nv < 1e-8) continue;
    for (auto& c : v) c /= nv;
    ortho.push_back(v);
    for (int r = 0; r < n; ++r) B(r, col) = v[r];
    ++col;
  }
  if (col != n - 1) throw isotropic_idempotent("could not build orthocomplement basis");

  Eigen::MatrixXd L = to_eigen(M.alg.left_op(e));
  Eigen::MatrixXd H = to_eigen(M.h);
  // restriction in the h-orthonormal complement basis: S_ab = h(b_a, L b_b)
  Eigen::MatrixXd S = B.transpose() * H * L * B;
  Eigen::EigenSolver<Eigen::MatrixXd> es(S, false);
  for (int i = 0; i < S.rows(); ++i) out.values.push_back(es.eigenvalues()(i));
  std::sort(out.values.begin(), out.values.end(), [](auto a, auto b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

template <class S>
StructReport structural_report(const Metrized<S>& M) {
  const auto& A = M.alg;
  const int n = A.dim();
  StructReport rep;
  S worst = scalar_traits<S>::zero();
  for (int i = 0; i < n; ++i) {
    S tr = A.left_op(basis_vec<S>(n, i)).trace();
    S at = scalar_traits<S>::abs(tr);
    if (at > worst) worst = at;
  }
  rep.max_trace = scalar_traits<S>::to_double(worst);
  rep.exact = scalar_traits<S>::within_defect_tol(worst);
  // kernel of x -> L(x): stack L(e_i) columns as rows of an n x n^2 matrix
  Mat<S> stack(n, n * n);
  for (int i = 0; i < n; ++i) {
    Mat<S> li = A.left_op(basis_vec<S>(n, i));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) stack(i, r * n + c) = li(r, c);
  }
  rep.lmap_rank = mat_rank(stack);
  rep.faithful = rep.lmap_rank == n;
  return rep;
}

template StructReport structural_report<Rat>(const Metrized<Rat>&);
template StructReport structural_report<double>(const Metrized<double>&);

bool cone_member(const Metrized<double>& M, const Vec<double>& x, double tol) {
  // L(x) is h-self-adjoint in the Euclidean commutative case, so its
  // eigenvalues are real; nonnegativity is the cone membership test
  auto ev = general_eigenvalues(M.alg.left_op(x));
  for (auto v : ev)
    if (v.real() < -tol) return false;
  return true;
}

SpecialElementSet complexified_search(const Metrized<double>& M, SpecialKind kind,
                                      const SearchConfig& cfg) {
  if (kind != SpecialKind::complex_idempotent && kind != SpecialKind::complex_square_zero)
    throw std::invalid_argument("complexified_search needs a complex kind");
  if (!M.euclidean()) throw not_euclidean("complexified search needs a positive definite metric");
  const bool idem = kind == SpecialKind::complex_idempotent;
  const auto& A = M.alg;
  const int n = A.dim();
  SpecialElementSet out;
  out.kind = kind;
  out.seed = cfg.seed;

  // F(a,b) = (a*a - b*b [- a], a*b + b*a [- b]); the square-zero system is
  // complex-scale invariant, so it is solved Gauss-Newton style with the
  // sphere constraint h(a,a)+h(b,b) = 1 appended to keep iterates off 0
  const int rows = idem ? 2 * n : 2 * n + 1;
  auto F = [&](const Vec<double>& a, const Vec<double>& b) {
    Vec<double> f1 = vec_sub(A.multiply(a, a), A.multiply(b, b));
    Vec<double> f2 = vec_add(A.multiply(a, b), A.multiply(b, a));
    if (idem) {
      f1 = vec_sub(f1, a);
      f2 = vec_sub(f2, b);
    }
    Vec<double> f(rows);
    for (int i = 0; i < n; ++i) {
      f[i] = f1[i];
      f[n + i] = f2[i];
    }
    if (!idem) f[2 * n] = M.ip(a, a) + M.ip(b, b) - 1.0;
    return f;
  };

  std::vector<SpecialElement> els;
  for (int s = 0; s < cfg.starts; ++s) {
    std::mt19937_64 rng = stream_for(cfg.seed, s);
    Vec<double> a = random_h_unit(rng, M.h);
    Vec<double> b = random_h_unit(rng, M.h);
    bool converged = false;
    for (int it = 0; it < cfg.max_iters; ++it) {
      Vec<double> f = F(a, b);
      double res = std::sqrt(dot_raw(f, f));
      if (res < 1e-13) {
        converged = true;
        break;
      }
      Mat<double> jac(rows, 2 * n);
      Mat<double> la = A.left_op(a) + A.right_op(a);
      Mat<double> lb = A.left_op(b) + A.right_op(b);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
          jac(r, c) = la(r, c);
          jac(r, n + c) = -lb(r, c);
          jac(n + r, c) = lb(r, c);
          jac(n + r, n + c) = la(r, c);
        }
      if (idem)
        for (int i = 0; i < 2 * n; ++i) jac(i, i) -= 1.0;
      if (!idem) {
        Vec<double> ha = M.h * a, hb = M.h * b;
        for (int c = 0; c < n; ++c) {
          jac(2 * n, c) = 2.0 * ha[c];
          jac(2 * n, n + c) = 2.0 * hb[c];
        }
      }
      Vec<double> step = solve_least_squares(jac, f);
      double move = 0.0;
      for (int i = 0; i < n; ++i) {
        a[i] -= step[i];
        b[i] -= step[n + i];
        move += step[i] * step[i] + step[n + i] * step[n + i];
      }
      if (move > 1e10) break;
    }
    if (!converged) {
      Vec<double> f = F(a, b);
      if (std::sqrt(dot_raw(f, f)) > cfg.residual_tol) continue;
    }
    ++out.converged_starts;
    double na = M.ip(a, a), nb = M.ip(b, b);
    if (na + nb < 1e-10) continue;  // trivial zero
    SpecialElement el;
    // canonicalize: square-zero pairs carry a circle action; rotate so
    // h(a,b) = 0 and |a| >= |b|, then fix signs
    if (!idem) {
      double hab = M.ip(a, b);
      double theta = 0.5 * std::atan2(2.0 * hab, na - nb);
      double c = std::cos(theta), sn = std::sin(theta);
      Vec<double> ar(n), br(n);
      for (int i = 0; i < n; ++i) {
        ar[i] = c * a[i] + sn * b[i];
        br[i] = -sn * a[i] + c * b[i];
      }
      a = ar;
      b = br;
      if (M.ip(a, a) < M.ip(b, b)) std::swap(a, b);
      for (auto* v : {&a, &b})
        for (size_t i = 0; i < v->size(); ++i) {
          if (std::fabs((*v)[i]) > 1e-8) {
            if ((*v)[i] < 0)
              for (auto& c : *v) c = -c;
            break;
          }
        }
    } else {
      // conjugation freedom only: fix the sign of b
      for (size_t i = 0; i < b.size(); ++i) {
        if (std::fabs(b[i]) > 1e-8) {
          if (b[i] < 0)
            for (auto& c : b) c = -c;
          break;
        }
      }
    }
    el.coords = a;
    el.coords_imag = b;
    Vec<double> f = F(a, b);
    el.residual = std::sqrt(dot_raw(f, f));
    el.norm = M.ip(a, a);
    // independence and the sect check
    bool indep = true;
    try {
      plane_gram_checked(M, a, b);
    } catch (...) {
      indep = false;
    }
    el.independent = indep;
    if (indep) {
      double g = M.gram(a, b);
      double s_val = sect_value(M, a, b);
      double expect;
      if (idem) {
        Vec<double> bb = A.multiply(b, b);
        expect = 0.25 * (4.0 * M.ip(bb, bb) + M.ip(b, b)) / g;
      } else {
        Vec<double> aa = A.multiply(a, a);
        expect = M.ip(aa, aa) / g;
      }
      el.check_value = s_val;
      el.check_defect = std::fabs(s_val - expect);
    }
    els.push_back(std::move(el));
  }
  // dedup on concatenated coordinates
  std::sort(els.begin(), els.end(), [](const SpecialElement& x, const SpecialElement& y) {
    if (x.coords != y.coords) return x.coords < y.coords;
    return x.coords_imag < y.coords_imag;
  });
  std::vector<SpecialElement> keep;
  for (auto& e : els) {
    bool dup = false;
    for (const auto& k : keep) {
      double d = h_dist2(M, e.coords, k.coords) + h_dist2(M, e.coords_imag, k.coords_imag);
      if (d < cfg.dedup_tol * cfg.dedup_tol) {
        dup = true;
        break;
      }
    }
    if (!dup) keep.push_back(std::move(e));
  }
  out.elements = std::move(keep);
  return out;
}

}  // namespace alglab
