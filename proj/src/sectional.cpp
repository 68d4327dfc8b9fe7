#include "alglab/sectional.hpp"

#include <cmath>

#include "alglab/parallel.hpp"
#include "alglab/rng.hpp"

namespace alglab {

namespace {

Vec<double> mat_t_vec(const Mat<double>& m, const Vec<double>& v) {
  Vec<double> out(m.cols(), 0.0);
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i] == 0.0) continue;
    for (int j = 0; j < m.cols(); ++j) out[j] += m(i, j) * v[i];
  }
  return out;
}

Vec<double> h_vec(const Mat<double>& h, const Vec<double>& v) { return h * v; }

double dot(const Vec<double>& a, const Vec<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct SectWork {
  const Metrized<double>& M;
  double numerator(const Vec<double>& x, const Vec<double>& y) const {
    const auto& A = M.alg;
    Mat<double> lx = A.left_op(x), ly = A.left_op(y);
    Vec<double> xx = lx * x, xy = lx * y, yx = ly * x, yy = ly * y;
    return M.ip(xx, yy) - M.ip(xy, yx);
  }
  double value(const Vec<double>& x, const Vec<double>& y) const {
    double g = M.gram(x, y);
    return numerator(x, y) / g;
  }
};

}  // namespace

double sect_value(const Metrized<double>& M, const Vec<double>& x, const Vec<double>& y) {
  return SectWork{M}.value(x, y);
}

void sect_gradient(const Metrized<double>& M, const Vec<double>& x, const Vec<double>& y,
                   Vec<double>& gx, Vec<double>& gy) {
  const auto& A = M.alg;
  const auto& h = M.h;
  Mat<double> lx = A.left_op(x), rx = A.right_op(x);
  Mat<double> ly = A.left_op(y), ry = A.right_op(y);
  Vec<double> xx = lx * x, yy = ly * y, xy = lx * y, yx = ly * x;

  double num = M.ip(xx, yy) - M.ip(xy, yx);
  double hxx = M.ip(x, x), hyy = M.ip(y, y), hxy = M.ip(x, y);
  double g = hxx * hyy - hxy * hxy;

  // dN/dx . u = h(u*x + x*u, yy) - h(u*y, yx) - h(x*y, y*u)
  Vec<double> hyy_v = h_vec(h, yy);
  Vec<double> hyx_v = h_vec(h, yx);
  Vec<double> hxy_v = h_vec(h, xy);
  Vec<double> dnx(x.size(), 0.0), dny(y.size(), 0.0);
  {
    Vec<double> t1 = mat_t_vec(rx, hyy_v);   // u*x term
    Vec<double> t2 = mat_t_vec(lx, hyy_v);   // x*u term
    Vec<double> t3 = mat_t_vec(ry, hyx_v);   // u*y term
    Vec<double> t4 = mat_t_vec(ly, hxy_v);   // y*u term
    for (size_t i = 0; i < dnx.size(); ++i) dnx[i] = t1[i] + t2[i] - t3[i] - t4[i];
  }
  // dN/dy . v = h(xx, v*y + y*v) - h(x*v, yx) - h(xy, v*x)
  Vec<double> hxx_v = h_vec(h, xx);
  {
    Vec<double> t1 = mat_t_vec(ry, hxx_v);
    Vec<double> t2 = mat_t_vec(ly, hxx_v);
    Vec<double> t3 = mat_t_vec(lx, hyx_v);
    Vec<double> t4 = mat_t_vec(rx, hxy_v);
    for (size_t i = 0; i < dny.size(); ++i) dny[i] = t1[i] + t2[i] - t3[i] - t4[i];
  }
  // dG/dx = 2 h(y,y) Hx - 2 h(x,y) Hy ; dG/dy symmetric
  Vec<double> hx = h_vec(h, x), hy = h_vec(h, y);
  gx.assign(x.size(), 0.0);
  gy.assign(y.size(), 0.0);
  for (size_t i = 0; i < gx.size(); ++i) {
    double dgx = 2.0 * hyy * hx[i] - 2.0 * hxy * hy[i];
    double dgy = 2.0 * hxx * hy[i] - 2.0 * hxy * hx[i];
    gx[i] = (dnx[i] * g - num * dgx) / (g * g);
    gy[i] = (dny[i] * g - num * dgy) / (g * g);
  }
}

namespace {

// h-orthonormal retraction: normalize x, project x out of y, renormalize;
// true when the frame was non-degenerate
bool retract_frame(const Metrized<double>& M, Vec<double>& x, Vec<double>& y) {
  double nx = std::sqrt(std::fabs(M.ip(x, x)));
  if (nx < 1e-14) return false;
  for (auto& v : x) v /= nx;
  double c = M.ip(x, y);
  for (size_t i = 0; i < y.size(); ++i) y[i] -= c * x[i];
  double ny = std::sqrt(std::fabs(M.ip(y, y)));
  if (ny < 1e-10) return false;
  for (auto& v : y) v /= ny;
  return true;
}

// remove components of g along the constraint normals of
// {h(x,x)=1, h(y,y)=1, h(x,y)=0} at an orthonormal frame:
// n1 = (hx, 0), n2 = (0, hy), n3 = (hy, hx)
void project_tangent(const Metrized<double>& M, const Vec<double>& x, const Vec<double>& y,
                     Vec<double>& gx, Vec<double>& gy) {
  const int n = M.dim();
  Vec<double> hx = M.h * x, hy = M.h * y;
  double a = dot(hx, hx), b = dot(hy, hy), c = dot(hx, hy);
  double m[3][4] = {
      {a, 0.0, c, dot(gx, hx)},
      {0.0, b, c, dot(gy, hy)},
      {c, c, a + b, dot(gx, hy) + dot(gy, hx)},
  };
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    for (int r = col + 1; r < 3; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    if (std::fabs(m[piv][col]) < 1e-300) return;  // singular; skip projection
    if (piv != col)
      for (int j = 0; j < 4; ++j) std::swap(m[piv][j], m[col][j]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      double f = m[r][col] / m[col][col];
      for (int j = col; j < 4; ++j) m[r][j] -= f * m[col][j];
    }
  }
  double lam1 = m[0][3] / m[0][0], lam2 = m[1][3] / m[1][1], lam3 = m[2][3] / m[2][2];
  for (int i = 0; i < n; ++i) {
    gx[i] -= lam1 * hx[i] + lam3 * hy[i];
    gy[i] -= lam2 * hy[i] + lam3 * hx[i];
  }
}

struct StartResult {
  double value = 0.0;
  Vec<double> x, y;
  long iters = 0;
  bool ok = false;
};

// sect(., y) is a ratio of quadratic forms in the first slot (and is
// invariant under adding multiples of y), so the best partner of y solves a
// generalized symmetric pencil on a complement of span{y}.
Vec<double> sect_best_partner(const Metrized<double>& M, const Vec<double>& y, int direction) {
  const int n = M.dim();
  const auto& A = M.alg;
  Eigen::MatrixXd H = to_eigen(M.h);
  Eigen::VectorXd yv = to_eigen(y);
  Vec<double> yy = A.multiply(y, y);
  Vec<double> hyy = M.h * yy;
  // quadratic numerator: x^T N x with N = sym(T) - sym(Op1^T H Op2)
  Eigen::MatrixXd N = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double t = 0.0;
      for (const auto& [k, c] : A.row(i, j)) t += c * hyy[k];
      N(i, j) += 0.5 * t;
      N(j, i) += 0.5 * t;
    }
  // numerator term h(x*y, y*x): x*y = R(y)x, y*x = L(y)x
  Eigen::MatrixXd Op1 = to_eigen(A.right_op(y));
  Eigen::MatrixXd Op2 = to_eigen(A.left_op(y));
  Eigen::MatrixXd A2 = Op1.transpose() * H * Op2;
  N -= 0.5 * (A2 + A2.transpose());
  double fyy = yv.dot(H * yv);
  Eigen::MatrixXd B = fyy * H - (H * yv) * (H * yv).transpose();
  Eigen::MatrixXd ymat = yv;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(ymat);
  Eigen::MatrixXd C = Eigen::MatrixXd(qr.householderQ()).rightCols(n - 1);
  Eigen::MatrixXd Nr = C.transpose() * N * C;
  Eigen::MatrixXd Br = C.transpose() * B * C;
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(Nr, Br);
  Eigen::VectorXd z = es.eigenvectors().col(direction > 0 ? n - 2 : 0);
  return from_eigen(Eigen::VectorXd(C * z));
}

StartResult run_start(const Metrized<double>& M, std::uint64_t seed, int start_index,
                      int max_iters, double grad_tol, int direction /* +1 max, -1 min */) {
  std::mt19937_64 rng = stream_for(seed, static_cast<std::uint64_t>(start_index));
  SectWork work{M};
  Vec<double> x, y;
  for (int attempt = 0; attempt < 64; ++attempt) {
    x = random_h_unit(rng, M.h);
    y = random_h_unit(rng, M.h);
    if (retract_frame(M, x, y)) break;
  }
  StartResult res;
  double f = work.value(x, y);
  double step = 1.0;
  long it = 0;
  for (; it < max_iters; ++it) {
    Vec<double> gx, gy;
    sect_gradient(M, x, y, gx, gy);
    if (direction < 0)
      for (size_t i = 0; i < gx.size(); ++i) {
        gx[i] = -gx[i];
        gy[i] = -gy[i];
      }
    project_tangent(M, x, y, gx, gy);
    double gnorm2 = dot(gx, gx) + dot(gy, gy);
    if (std::sqrt(gnorm2) < grad_tol) break;
    // Armijo backtracking on the retracted step
    double t = std::min(step * 2.0, 1.0);
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      Vec<double> xn = x, yn = y;
      for (size_t i = 0; i < xn.size(); ++i) {
        xn[i] += t * gx[i];
        yn[i] += t * gy[i];
      }
      if (retract_frame(M, xn, yn)) {
        double fn = work.value(xn, yn);
        double target = f + 1e-4 * t * gnorm2 * direction;
        bool better = direction > 0 ? fn >= target : fn <= target;
        if (better) {
          x = std::move(xn);
          y = std::move(yn);
          f = fn;
          step = t;
          accepted = true;
          break;
        }
      }
      t *= 0.5;
    }
    if (!accepted) break;
  }
  // alternating eigenvector polish (each half-step is the exact optimum of a
  // generalized Rayleigh quotient over planes through the fixed element)
  auto better = [&](double a, double b) { return direction > 0 ? a > b : a < b; };
  for (int round = 0; round < 100; ++round) {
    double before = f;
    Vec<double> xn = sect_best_partner(M, y, direction);
    {
      Vec<double> xc = xn, yc = y;
      if (retract_frame(M, xc, yc)) {
        double fx = work.value(xc, yc);
        if (better(fx, f)) {
          x = std::move(xc);
          y = std::move(yc);
          f = fx;
        }
      }
    }
    Vec<double> yn = sect_best_partner(M, x, direction);
    {
      Vec<double> xc = x, yc = yn;
      if (retract_frame(M, xc, yc)) {
        double fy = work.value(xc, yc);
        if (better(fy, f)) {
          x = std::move(xc);
          y = std::move(yc);
          f = fy;
        }
      }
    }
    ++it;
    if (std::fabs(f - before) <= 1e-15 * (1.0 + std::fabs(f))) break;
  }
  res.value = f;
  res.x = std::move(x);
  res.y = std::move(y);
  res.iters = it;
  res.ok = true;
  return res;
}

}  // namespace

BoundsReport estimate_extrema(const Metrized<double>& M, const OptimizerConfig& cfg) {
  if (!M.euclidean()) throw not_euclidean("extrema estimation needs a positive definite metric");
  if (!M.invariant()) throw metric_error("extrema estimation needs an invariant metric");

  BoundsReport rep;
  rep.starts = cfg.starts;
  rep.seed = cfg.seed;

  std::vector<StartResult> maxr(cfg.starts), minr(cfg.starts);
  parallel_for(cfg.starts, cfg.threads, [&](int s) {
    maxr[s] = run_start(M, cfg.seed, s, cfg.max_iters, cfg.grad_tol, +1);
    minr[s] = run_start(M, cfg.seed ^ 0x9e3779b97f4a7c15ULL, s, cfg.max_iters, cfg.grad_tol, -1);
  });

  int best_hi = 0, best_lo = 0;
  long iter_total = 0;
  for (int s = 0; s < cfg.starts; ++s) {
    iter_total += maxr[s].iters + minr[s].iters;
    if (maxr[s].value > maxr[best_hi].value) best_hi = s;
    if (minr[s].value < minr[best_lo].value) best_lo = s;
  }
  rep.iterations = iter_total;
  rep.bwu = maxr[best_hi].value;
  rep.hi = {maxr[best_hi].x, maxr[best_hi].y, maxr[best_hi].value, best_hi, maxr[best_hi].iters};
  rep.bwl = minr[best_lo].value;
  rep.lo = {minr[best_lo].x, minr[best_lo].y, minr[best_lo].value, best_lo, minr[best_lo].iters};

  if (cfg.samples > 0) {
    rep.samples = cfg.samples;
    const int chunks = 64;  // fixed so reports do not depend on thread count
    const long per = (cfg.samples + chunks - 1) / chunks;
    std::vector<double> lo(chunks, 1e300), hi(chunks, -1e300);
    SectWork work{M};
    parallel_for(chunks, cfg.threads, [&](int c) {
      std::mt19937_64 rng = stream_for(cfg.seed ^ 0xabcdef1234567890ULL, c);
      long count = std::min(per, cfg.samples - static_cast<long>(c) * per);
      for (long i = 0; i < count; ++i) {
        Vec<double> x = random_h_unit(rng, M.h);
        Vec<double> y = random_h_unit(rng, M.h);
        double hxy = M.ip(x, y);
        double g = 1.0 - hxy * hxy;
        if (g < 1e-8) continue;
        double v = work.numerator(x, y) / g;
        lo[c] = std::min(lo[c], v);
        hi[c] = std::max(hi[c], v);
      }
    });
    rep.sample_min = 1e300;
    rep.sample_max = -1e300;
    for (int c = 0; c < chunks; ++c) {
      rep.sample_min = std::min(rep.sample_min, lo[c]);
      rep.sample_max = std::max(rep.sample_max, hi[c]);
    }
  }
  return rep;
}

namespace {

struct BwWork {
  const Metrized<double>& M;
  bool gram_form;
  double value(const Vec<double>& x, const Vec<double>& y) const {
    const auto& A = M.alg;
    Vec<double> xy = A.multiply(x, y);
    double num = M.ip(xy, xy);
    double hxx = M.ip(x, x), hyy = M.ip(y, y);
    double den = gram_form ? hxx * hyy - M.ip(x, y) * M.ip(x, y) : hxx * hyy;
    if (den < 1e-12) return -1e300;
    return num / den;
  }
  void gradient(const Vec<double>& x, const Vec<double>& y, Vec<double>& gx,
                Vec<double>& gy) const {
    const auto& A = M.alg;
    const auto& h = M.h;
    Mat<double> lx = A.left_op(x), ry = A.right_op(y);
    Vec<double> xy = lx * y;
    double num = M.ip(xy, xy);
    double hxx = M.ip(x, x), hyy = M.ip(y, y), hxy = M.ip(x, y);
    double den = gram_form ? hxx * hyy - hxy * hxy : hxx * hyy;
    Vec<double> hv = h * xy;
    Vec<double> dnx = mat_t_vec(ry, hv);  // d/dx |x*y|^2 . u = 2 h(u*y, xy)
    Vec<double> dny = mat_t_vec(lx, hv);
    Vec<double> hx = h * x, hy = h * y;
    gx.assign(x.size(), 0.0);
    gy.assign(y.size(), 0.0);
    for (size_t i = 0; i < gx.size(); ++i) {
      double ddx = 2.0 * hyy * hx[i], ddy = 2.0 * hxx * hy[i];
      if (gram_form) {
        ddx -= 2.0 * hxy * hy[i];
        ddy -= 2.0 * hxy * hx[i];
      }
      gx[i] = (2.0 * dnx[i] * den - num * ddx) / (den * den);
      gy[i] = (2.0 * dny[i] * den - num * ddy) / (den * den);
    }
  }
};

// One alternating maximization round: given y, the best x solves the
// generalized symmetric pencil (R(y)^T H R(y)) x = lambda B x with
// B = f(y,y) H (plain) or f(y,y) H - (Hy)(Hy)^T restricted off y (gram).
Vec<double> bw_best_partner(const Metrized<double>& M, bool gram_form, const Vec<double>& y,
                            bool y_is_left) {
  const int n = M.dim();
  Mat<double> op = y_is_left ? M.alg.left_op(y) : M.alg.right_op(y);
  Eigen::MatrixXd H = to_eigen(M.h);
  Eigen::MatrixXd O = to_eigen(op);
  Eigen::MatrixXd A = O.transpose() * H * O;
  Eigen::VectorXd yv = to_eigen(y);
  double fyy = yv.dot(H * yv);
  Eigen::MatrixXd B = fyy * H;
  if (!gram_form) {
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(A, B);
    Eigen::VectorXd x = es.eigenvectors().col(n - 1);
    return from_eigen(x);
  }
  B -= (H * yv) * (H * yv).transpose();
  // the ratio descends to the quotient by span{y}; restrict to a complement
  Eigen::MatrixXd yc = yv;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(yc);
  Eigen::MatrixXd Q = qr.householderQ();
  Eigen::MatrixXd C = Q.rightCols(n - 1);
  Eigen::MatrixXd Ar = C.transpose() * A * C;
  Eigen::MatrixXd Br = C.transpose() * B * C;
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(Ar, Br);
  Eigen::VectorXd z = es.eigenvectors().col(n - 2);
  Eigen::VectorXd x = C * z;
  return from_eigen(x);
}

StartResult run_bw_start(const Metrized<double>& M, bool gram_form, std::uint64_t seed,
                         int start_index, int max_iters, double grad_tol) {
  std::mt19937_64 rng = stream_for(seed, static_cast<std::uint64_t>(start_index));
  BwWork work{M, gram_form};
  Vec<double> x = random_h_unit(rng, M.h);
  Vec<double> y = random_h_unit(rng, M.h);
  StartResult res;
  double f = work.value(x, y);
  double step = 1.0;
  long it = 0;
  auto normalize = [&](Vec<double>& v) {
    double nv = std::sqrt(std::fabs(M.ip(v, v)));
    if (nv < 1e-14) return false;
    for (auto& c : v) c /= nv;
    return true;
  };
  for (; it < max_iters; ++it) {
    Vec<double> gx, gy;
    work.gradient(x, y, gx, gy);
    // project onto sphere tangents
    Vec<double> hx = M.h * x, hy = M.h * y;
    double l1 = dot(gx, hx) / dot(hx, hx);
    double l2 = dot(gy, hy) / dot(hy, hy);
    for (size_t i = 0; i < gx.size(); ++i) {
      gx[i] -= l1 * hx[i];
      gy[i] -= l2 * hy[i];
    }
    double gnorm2 = dot(gx, gx) + dot(gy, gy);
    if (std::sqrt(gnorm2) < grad_tol) break;
    double t = std::min(step * 2.0, 1.0);
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      Vec<double> xn = x, yn = y;
      for (size_t i = 0; i < xn.size(); ++i) {
        xn[i] += t * gx[i];
        yn[i] += t * gy[i];
      }
      if (normalize(xn) && normalize(yn)) {
        double fn = work.value(xn, yn);
        if (fn >= f + 1e-4 * t * gnorm2) {
          x = std::move(xn);
          y = std::move(yn);
          f = fn;
          step = t;
          accepted = true;
          break;
        }
      }
      t *= 0.5;
    }
    if (!accepted) break;
  }
  // alternating eigenvector polish: each half-step globally maximizes over
  // one argument, so the value is nondecreasing and converges fast
  for (int round = 0; round < 200; ++round) {
    Vec<double> xn = bw_best_partner(M, gram_form, y, /*y_is_left=*/false);
    if (normalize(xn)) {
      double fx = work.value(xn, y);
      if (fx >= f) {
        x = std::move(xn);
        f = fx;
      }
    }
    Vec<double> yn = bw_best_partner(M, gram_form, x, /*y_is_left=*/true);
    double before = f;
    if (normalize(yn)) {
      double fy = work.value(x, yn);
      if (fy >= f) {
        y = std::move(yn);
        f = fy;
      }
    }
    ++it;
    if (f - before <= 1e-15 * (1.0 + std::fabs(f))) break;
  }
  res.value = f;
  res.x = std::move(x);
  res.y = std::move(y);
  res.iters = it;
  res.ok = true;
  return res;
}

}  // namespace

BwReport bw_constant(const Metrized<double>& M, const OptimizerConfig& cfg) {
  if (M.cert.definiteness != Definiteness::positive)
    throw not_positive_definite("bw needs a positive definite form");
  BwReport rep;
  rep.seed = cfg.seed;
  rep.starts = cfg.starts;

  std::vector<StartResult> plain(cfg.starts), gram(cfg.starts);
  parallel_for(cfg.starts, cfg.threads, [&](int s) {
    plain[s] = run_bw_start(M, false, cfg.seed, s, cfg.max_iters, cfg.grad_tol);
    gram[s] = run_bw_start(M, true, cfg.seed ^ 0x5bf03635ULL, s, cfg.max_iters, cfg.grad_tol);
  });
  int bp = 0, bg = 0;
  for (int s = 0; s < cfg.starts; ++s) {
    if (plain[s].value > plain[bp].value) bp = s;
    if (gram[s].value > gram[bg].value) bg = s;
  }
  rep.sup_plain = plain[bp].value;
  rep.plain_witness = {plain[bp].x, plain[bp].y, plain[bp].value, bp, plain[bp].iters};
  rep.sup_gram = gram[bg].value;
  rep.gram_witness = {gram[bg].x, gram[bg].y, gram[bg].value, bg, gram[bg].iters};
  rep.gap = std::fabs(rep.sup_plain - rep.sup_gram);

  long samples = cfg.samples > 0 ? cfg.samples : 1000000;
  rep.samples = samples;
  const int chunks = 64;  // fixed so reports do not depend on thread count
  const long per = (samples + chunks - 1) / chunks;
  std::vector<double> sp(chunks, -1e300), sg(chunks, -1e300);
  BwWork wp{M, false}, wg{M, true};
  parallel_for(chunks, cfg.threads, [&](int c) {
    std::mt19937_64 rng = stream_for(cfg.seed ^ 0x00c0ffee1234ULL, c);
    long count = std::min(per, samples - static_cast<long>(c) * per);
    for (long i = 0; i < count; ++i) {
      Vec<double> x = random_h_unit(rng, M.h);
      Vec<double> y = random_h_unit(rng, M.h);
      sp[c] = std::max(sp[c], wp.value(x, y));
      double g = wg.value(x, y);
      if (g < 1e299) sg[c] = std::max(sg[c], g);
    }
  });
  for (int c = 0; c < chunks; ++c) {
    rep.sample_sup_plain = std::max(rep.sample_sup_plain, sp[c]);
    rep.sample_sup_gram = std::max(rep.sample_sup_gram, sg[c]);
  }
  return rep;
}

CdkReport cdk_verify(int n, int level, long samples, std::uint64_t seed, bool explore) {
  if (level < 0 || level > 3) throw preset_error("cdk level must be 0..3");
  if (level == 3 && n != 3)
    throw preset_error("cdk over the octonions requires n = 3");
  if (n < 2) throw preset_error("cdk needs n >= 2");

  CDTable tab = cayley_dickson(level);
  HermBasisLayout lay = herm_layout(n, level);
  std::vector<KMatrix<double>> basis;
  for (int b = 0; b < lay.dim; ++b) basis.push_back(herm_basis_matrix<double>(lay, b));

  auto matrix_from_coords = [&](const Vec<double>& c) {
    KMatrix<double> m(static_cast<size_t>(n) * n, zero_vec<double>(tab.dim));
    for (int b = 0; b < lay.dim; ++b) {
      if (c[b] == 0.0) continue;
      for (size_t p = 0; p < m.size(); ++p)
        for (int t = 0; t < tab.dim; ++t) m[p][t] += c[b] * basis[b][p][t];
    }
    return m;
  };
  auto frob = [&](const KMatrix<double>& a, const KMatrix<double>& b) {
    double s = 0.0;
    for (size_t p = 0; p < a.size(); ++p)
      for (int t = 0; t < tab.dim; ++t) s += a[p][t] * b[p][t];
    return s;
  };

  CdkReport rep;
  rep.n = n;
  rep.level = level;
  rep.samples = samples;
  rep.seed = seed;
  rep.explore = explore;
  rep.min_slack1 = 1e300;
  rep.max_ratio = 0.0;

  std::mt19937_64 rng = stream_for(seed, 0);
  const bool diag_x = (level == 3) && !explore;
  for (long s = 0; s < samples; ++s) {
    Vec<double> cx = zero_vec<double>(lay.dim), cy = zero_vec<double>(lay.dim);
    if (diag_x) {
      for (int i = 0; i < n; ++i) cx[i] = uniform_pm1(rng);
    } else {
      cx = random_coords(rng, lay.dim);
    }
    cy = random_coords(rng, lay.dim);
    KMatrix<double> x = matrix_from_coords(cx), y = matrix_from_coords(cy);
    KMatrix<double> xy = kmat_mul(tab, n, x, y), yx = kmat_mul(tab, n, y, x);
    for (size_t p = 0; p < xy.size(); ++p)
      for (int t = 0; t < tab.dim; ++t) xy[p][t] -= yx[p][t];
    double comm2 = frob(xy, xy);
    double fxx = frob(x, x), fyy = frob(y, y), fxy = frob(x, y);
    double mid = 2.0 * (fxx * fyy - fxy * fxy);
    double scale = std::max(1.0, fxx * fyy);
    double slack = (mid - comm2) / scale;
    if (slack < rep.min_slack1) {
      rep.min_slack1 = slack;
      rep.witness_x = cx;
      rep.witness_y = cy;
    }
    if (mid > 1e-12) rep.max_ratio = std::max(rep.max_ratio, comm2 / mid);
    if (std::fabs(slack) <= 1e-9) ++rep.equality_hits;
  }
  rep.holds = rep.min_slack1 >= -1e-9;
  return rep;
}

}  // namespace alglab
