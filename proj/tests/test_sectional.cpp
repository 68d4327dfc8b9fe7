#include <doctest.h>

#include "alglab/sectional.hpp"
#include "helpers.hpp"

using namespace alglab;
using namespace alglab::testing;

TEST_CASE("sect: herm(3,0) witness plane attains 3/2 exactly") {
  Preset p = build_preset("herm:3:0");
  // x = e11 - e33, y = e13 + e31 in the documented basis order
  Vec<Rat> x = rvec({1, 0, -1, 0, 0, 0});
  Vec<Rat> y = rvec({0, 0, 0, 0, 1, 0});
  CHECK(sect(*p.exact, x, y) == make_rat(3, 2));
}

TEST_CASE("sect: herm(4,0) witness plane attains 2 exactly") {
  Preset p = build_preset("herm:4:0");
  HermBasisLayout lay = herm_layout(4, 0);
  Vec<Rat> x = zero_vec<Rat>(lay.dim);
  x[0] = Rat(1);
  x[3] = Rat(-1);
  Vec<Rat> y = zero_vec<Rat>(lay.dim);
  y[lay.off(0, 3, 0)] = Rat(1);
  CHECK(sect(*p.exact, x, y) == Rat(2));
}

TEST_CASE("sect: octonions vanish on random planes (alternative law)") {
  Preset p = build_preset("hurwitz:3");
  std::mt19937_64 rng = stream_for(101, 0);
  int checked = 0;
  while (checked < 10) {
    Vec<Rat> x = random_rvec(rng, 8), y = random_rvec(rng, 8);
    try {
      CHECK(sgn(sect(*p.exact, x, y)) == 0);
      ++checked;
    } catch (const linear_dependence&) {
    }
  }
}

TEST_CASE("sect: cross3 gives 1 on any valid plane") {
  Preset p = build_preset("cross:3");
  std::mt19937_64 rng = stream_for(103, 0);
  for (int t = 0; t < 10; ++t) {
    Vec<Rat> x = random_rvec(rng, 3), y = random_rvec(rng, 3);
    try {
      CHECK(sect(*p.exact, x, y) == Rat(1));
    } catch (const linear_dependence&) {
    }
  }
}

TEST_CASE("sect: c_epsilon(3/10) gives 4/25 on random planes") {
  Preset p = build_preset("c_epsilon:3/10");
  std::mt19937_64 rng = stream_for(107, 0);
  for (int t = 0; t < 10; ++t) {
    Vec<Rat> x = random_rvec(rng, 3), y = random_rvec(rng, 3);
    try {
      CHECK(sect(*p.exact, x, y) == make_rat(4, 25));
    } catch (const linear_dependence&) {
    }
  }
}

TEST_CASE("sect: errors on dependent and degenerate input") {
  Preset p = build_preset("c_epsilon:1");
  CHECK_THROWS_AS(sect(*p.exact, rvec({1, 2, 0}), rvec({2, 4, 0})), linear_dependence);
  Preset split = build_preset("two_step_double");
  // x1 and x2 are isotropic and mutually orthogonal: degenerate plane
  Vec<Rat> x = basis_vec<Rat>(6, 0), y = basis_vec<Rat>(6, 1);
  CHECK_THROWS_AS(sect(*split.exact, x, y), degenerate_plane);
}

TEST_CASE("sect: plane invariance under rational basis change, exact") {
  for (const char* name : {"kosier", "herm:3:0", "e_algebra:4"}) {
    Preset p = build_preset(name);
    CAPTURE(name);
    std::mt19937_64 rng = stream_for(109, 1);
    const int n = p.exact->dim();
    int done = 0;
    while (done < 5) {
      Vec<Rat> x = random_rvec(rng, n), y = random_rvec(rng, n);
      Rat a = make_rat(2), b = make_rat(-1, 3), c = make_rat(1, 2), d = make_rat(3);
      // ad - bc = 6 + 1/6 != 0
      Vec<Rat> xb = vec_add(vec_scale(x, a), vec_scale(y, b));
      Vec<Rat> yb = vec_add(vec_scale(x, c), vec_scale(y, d));
      try {
        CHECK(sect(*p.exact, x, y) == sect(*p.exact, xb, yb));
        ++done;
      } catch (const linear_dependence&) {
      } catch (const degenerate_plane&) {
      }
    }
  }
}

TEST_CASE("sect equals the associator form on invariant presets") {
  for (const char* name : {"kosier", "herm:2:1", "c_epsilon:2", "so:4"}) {
    Preset p = build_preset(name);
    CAPTURE(name);
    std::mt19937_64 rng = stream_for(113, 2);
    const int n = p.exact->dim();
    int done = 0;
    while (done < 5) {
      Vec<Rat> x = random_rvec(rng, n), y = random_rvec(rng, n);
      try {
        Rat g = plane_gram_checked(*p.exact, x, y);
        Rat via_assoc = form_dot(p.exact->h, p.exact->alg.associator(x, x, y), y) / g;
        CHECK(sect(*p.exact, x, y) == via_assoc);
        ++done;
      } catch (const linear_dependence&) {
      } catch (const degenerate_plane&) {
      }
    }
  }
}

TEST_CASE("sect_split: r3_star splits into (-1, 1)") {
  Preset p = build_preset("r3_star");
  std::mt19937_64 rng = stream_for(127, 0);
  for (int t = 0; t < 10; ++t) {
    Vec<Rat> x = random_rvec(rng, 3), y = random_rvec(rng, 3);
    try {
      auto [s_sym, s_br] = sect_split(*p.exact, x, y);
      CHECK(s_sym == Rat(-1));
      CHECK(s_br == Rat(1));
      CHECK(s_sym + s_br == Rat(4) * sect(*p.exact, x, y));
    } catch (const linear_dependence&) {
    }
  }
}

TEST_CASE("sect_split: commutative preset has zero bracket part") {
  Preset p = build_preset("c_epsilon:1");
  std::mt19937_64 rng = stream_for(131, 0);
  Vec<Rat> x = random_rvec(rng, 3), y = random_rvec(rng, 3);
  auto [s_sym, s_br] = sect_split(*p.exact, x, y);
  CHECK(sgn(s_br) == 0);
  CHECK(s_sym == Rat(4) * sect(*p.exact, x, y));
}

TEST_CASE("sect_split: anticommutative preset has zero symmetrized part") {
  Preset p = build_preset("cross:7");
  std::mt19937_64 rng = stream_for(137, 0);
  Vec<Rat> x = random_rvec(rng, 7), y = random_rvec(rng, 7);
  auto [s_sym, s_br] = sect_split(*p.exact, x, y);
  CHECK(sgn(s_sym) == 0);
  CHECK(s_br == Rat(4) * sect(*p.exact, x, y));
}

TEST_CASE("kulkarni: orthonormal pair value, gram identity, Q projection") {
  Preset p = build_preset("c_epsilon:0");
  Rank4<Rat> k = kulkarni(p.exact->h);
  CHECK(k.at(0, 1, 0, 1) == Rat(1));
  std::mt19937_64 rng = stream_for(139, 0);
  Vec<Rat> x = random_rvec(rng, 3), y = random_rvec(rng, 3);
  Rat val(0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) val += k.at(i, j, a, b) * x[i] * y[j] * x[a] * y[b];
  CHECK(val == p.exact->gram(x, y));
  k.set_sym(Sym4::s2lambda2);
  auto [pk, qk] = project_curvature(k);
  CHECK(sgn(qk.max_abs()) == 0);
}

TEST_CASE("constant_sect: c_epsilon family gives 1/4 - eps^2 exactly") {
  for (const char* eps : {"0", "3/10", "1", "2"}) {
    Preset p = build_preset(std::string("c_epsilon:") + eps);
    auto c = constant_sect(*p.exact);
    REQUIRE(c.has_value());
    CHECK(*c == make_rat(1, 4) - rq(eps) * rq(eps));
  }
}

TEST_CASE("constant_sect: cross algebras give 1") {
  for (const char* name : {"cross:3", "cross:7", "so3_killing"}) {
    Preset p = build_preset(name);
    CAPTURE(name);
    auto c = constant_sect(*p.exact);
    REQUIRE(c.has_value());
    CHECK(*c == Rat(1));
  }
}

TEST_CASE("constant_sect: hurwitz chain gives 0") {
  for (int level : {0, 1, 2, 3}) {
    Preset p = build_preset("hurwitz:" + std::to_string(level));
    CAPTURE(level);
    auto c = constant_sect(*p.exact);
    REQUIRE(c.has_value());
    CHECK(sgn(*c) == 0);
  }
}

TEST_CASE("constant_sect: r3_star derived algebras give -1 and 1") {
  Preset p = build_preset("r3_star");
  Metrized<Rat> sym = make_metrized(derived_algebra(p.exact->alg, DerivedKind::symmetrized),
                                    p.exact->h);
  Metrized<Rat> br = make_metrized(derived_algebra(p.exact->alg, DerivedKind::bracket),
                                   p.exact->h);
  auto cs = constant_sect(sym);
  auto cb = constant_sect(br);
  REQUIRE(cs.has_value());
  REQUIRE(cb.has_value());
  CHECK(*cs == Rat(-1));
  CHECK(*cb == Rat(1));
  // and the star product itself is flat
  auto c0 = constant_sect(*p.exact);
  REQUIRE(c0.has_value());
  CHECK(sgn(*c0) == 0);
}

TEST_CASE("constant_sect: e_algebra(n) gives -1/(n-1), cross-checked by brute force") {
  for (int n : {4, 5, 6}) {
    Preset p = build_preset("e_algebra:" + std::to_string(n));
    CAPTURE(n);
    // oracle: the disjoint-support plane (e1 - e2, e3 - e4)
    Vec<Rat> x = zero_vec<Rat>(n), y = zero_vec<Rat>(n);
    x[0] = Rat(1);
    x[1] = Rat(-1);
    y[2] = Rat(1);
    y[3] = Rat(-1);
    CHECK(sect(*p.exact, x, y) == make_rat(-1, n - 1));
    auto c = constant_sect(*p.exact);
    REQUIRE(c.has_value());
    CHECK(*c == make_rat(-1, n - 1));
    // brute force agreement on random planes
    std::mt19937_64 rng = stream_for(149, n);
    int done = 0;
    while (done < 20) {
      Vec<Rat> u = random_rvec(rng, n), v = random_rvec(rng, n);
      try {
        CHECK(sect(*p.exact, u, v) == *c);
        ++done;
      } catch (const linear_dependence&) {
      }
    }
  }
}

TEST_CASE("constant_sect: para-complex numbers have constant -1") {
  Preset p = build_preset("para_hurwitz:1");
  auto c = constant_sect(*p.exact);
  REQUIRE(c.has_value());
  CHECK(*c == Rat(-1));
}

TEST_CASE("constant_sect: absent for herm(3,0), with witnesses differing") {
  Preset p = build_preset("herm:3:0");
  auto c = constant_sect(*p.exact);
  CHECK_FALSE(c.has_value());
  // two sampled planes indeed give different values
  Vec<Rat> x = rvec({1, 0, -1, 0, 0, 0}), y = rvec({0, 0, 0, 0, 1, 0});
  Vec<Rat> u = rvec({1, 0, 0, 0, 0, 0}), v = rvec({0, 1, 0, 0, 0, 0});
  Rat s1 = sect(*p.exact, x, y);
  Rat s2 = sect(*p.exact, u, v);  // commuting diagonal pair: 0
  CHECK(rat_double(abs(s1 - s2)) > 1e-6);
}

TEST_CASE("okubo identity: sect + 1 = |[x,y]|^2 / gram") {
  Preset p = build_preset("okubo_compact");
  const auto& M = p.flt;
  std::mt19937_64 rng = stream_for(151, 0);
  for (int t = 0; t < 20; ++t) {
    Vec<double> x = random_h_unit(rng, M.h), y = random_h_unit(rng, M.h);
    double g = M.gram(x, y);
    if (g < 1e-6) continue;
    Vec<double> br = vec_sub(M.alg.multiply(x, y), M.alg.multiply(y, x));
    double lhs = sect_value(M, x, y) + 1.0;
    double rhs = M.ip(br, br) / g;
    CHECK(std::fabs(lhs - rhs) <= 1e-9);
  }
}

TEST_CASE("estimate_extrema: para-octonions reach -1 and +1") {
  Preset p = build_preset("para_hurwitz:3");
  OptimizerConfig cfg;
  cfg.starts = 16;
  cfg.seed = 0x5EC7;
  BoundsReport rep = estimate_extrema(p.flt, cfg);
  CHECK(rep.bwl == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(rep.bwu == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rep.bwl <= rep.bwu);
  // witnesses reproduce the reported values
  CHECK(std::fabs(sect_value(p.flt, rep.hi.x, rep.hi.y) - rep.bwu) <= 1e-9);
  CHECK(std::fabs(sect_value(p.flt, rep.lo.x, rep.lo.y) - rep.bwl) <= 1e-9);
}

TEST_CASE("estimate_extrema: compact okubo reaches -1 and +1") {
  Preset p = build_preset("okubo_compact");
  OptimizerConfig cfg;
  cfg.starts = 16;
  BoundsReport rep = estimate_extrema(p.flt, cfg);
  CHECK(rep.bwl == doctest::Approx(-1.0).epsilon(1e-6));
  CHECK(rep.bwu == doctest::Approx(1.0).epsilon(1e-6));
  // the minimizing witness is a commuting pair
  Vec<double> br = vec_sub(p.flt.alg.multiply(rep.lo.x, rep.lo.y),
                           p.flt.alg.multiply(rep.lo.y, rep.lo.x));
  CHECK(std::sqrt(p.flt.ip(br, br)) < 1e-4);
}

TEST_CASE("estimate_extrema: indefinite metric refused") {
  Preset p = build_preset("two_step_double");
  OptimizerConfig cfg;
  CHECK_THROWS_AS(estimate_extrema(p.flt, cfg), not_euclidean);
}

TEST_CASE("estimate_extrema: deterministic across thread counts") {
  Preset p = build_preset("herm:2:1");
  OptimizerConfig cfg;
  cfg.starts = 8;
  cfg.samples = 1000;
  BoundsReport r1, r4, r8;
  cfg.threads = 1;
  r1 = estimate_extrema(p.flt, cfg);
  cfg.threads = 4;
  r4 = estimate_extrema(p.flt, cfg);
  cfg.threads = 8;
  r8 = estimate_extrema(p.flt, cfg);
  CHECK(r1.bwl == r4.bwl);
  CHECK(r1.bwu == r4.bwu);
  CHECK(r1.hi.x == r4.hi.x);
  CHECK(r1.lo.y == r8.lo.y);
  CHECK(r1.sample_min == r8.sample_min);
  CHECK(r1.sample_max == r4.sample_max);
}

TEST_CASE("optimizer gradient matches central finite differences") {
  for (const char* name : {"herm:3:0", "c_epsilon:1", "okubo_compact"}) {
    Preset p = build_preset(name);
    CAPTURE(name);
    const auto& M = p.flt;
    const int n = M.dim();
    std::mt19937_64 rng = stream_for(157, 3);
    int done = 0;
    while (done < 20) {
      Vec<double> x = random_h_unit(rng, M.h), y = random_h_unit(rng, M.h);
      if (M.gram(x, y) < 1e-3) continue;
      Vec<double> gx, gy;
      sect_gradient(M, x, y, gx, gy);
      const double step = 1e-5;
      double worst = 0.0, scale = 1.0;
      for (int i = 0; i < n; ++i) {
        scale = std::max({scale, std::fabs(gx[i]), std::fabs(gy[i])});
        Vec<double> xp = x, xm = x;
        xp[i] += step;
        xm[i] -= step;
        double fd = (sect_value(M, xp, y) - sect_value(M, xm, y)) / (2 * step);
        worst = std::max(worst, std::fabs(fd - gx[i]));
        Vec<double> yp = y, ym = y;
        yp[i] += step;
        ym[i] -= step;
        fd = (sect_value(M, x, yp) - sect_value(M, x, ym)) / (2 * step);
        worst = std::max(worst, std::fabs(fd - gy[i]));
      }
      CHECK(worst / scale <= 1e-6);
      ++done;
    }
  }
}

TEST_CASE("bw_constant: mat(2,C) attains 2, forms agree") {
  Preset p = build_preset("mat:2:1");
  OptimizerConfig cfg;
  cfg.starts = 16;
  cfg.samples = 200000;
  BwReport rep = bw_constant(p.flt, cfg);
  CHECK(rep.sup_plain >= 2.0 - 1e-3);
  CHECK(rep.sup_plain <= 2.0 + 1e-9);
  CHECK(rep.sup_gram <= 2.0 + 1e-9);
  CHECK(rep.gap <= 1e-6);
  CHECK(rep.sample_sup_plain <= 2.0 + 1e-9);
}

TEST_CASE("bw_constant: quaternion witness (i, j) has ratio 4") {
  Preset p = build_preset("mat:1:2");
  // basis of mat(1,H) is (1, i, j, k); the commutator [i,j] = 2k
  const auto& M = p.flt;
  Vec<double> i4 = {0, 1, 0, 0}, j4 = {0, 0, 1, 0};
  Vec<double> comm = M.alg.multiply(i4, j4);
  double ratio = M.ip(comm, comm) / (M.ip(i4, i4) * M.ip(j4, j4));
  CHECK(ratio == doctest::Approx(4.0));
  OptimizerConfig cfg;
  cfg.starts = 16;
  cfg.samples = 100000;
  BwReport rep = bw_constant(p.flt, cfg);
  CHECK(rep.sup_plain >= 4.0 - 1e-3);
  CHECK(rep.sup_plain <= 4.0 + 1e-9);  // Cauchy-Schwarz cap
}

TEST_CASE("bw_constant: so(4) supremum is 1, attained on a self-dual pair") {
  Preset p = build_preset("so:4");
  // pairs order (0,1),(0,2),(0,3),(1,2),(1,3),(2,3); u1 = A12+A34, u2 = A13-A24
  // give [u1,u2] = -2(A14+A23), ratio exactly 1; the two commuting ideals of
  // so(4) cap the ratio at the per-ideal maximum 1
  Vec<double> u1 = {1, 0, 0, 0, 0, 1}, u2 = {0, 1, 0, 0, -1, 0};
  Vec<double> c = p.flt.alg.multiply(u1, u2);
  CHECK(p.flt.ip(c, c) / (p.flt.ip(u1, u1) * p.flt.ip(u2, u2)) == doctest::Approx(1.0));
  OptimizerConfig cfg;
  cfg.starts = 16;
  cfg.samples = 100000;
  BwReport rep = bw_constant(p.flt, cfg);
  CHECK(rep.sup_plain == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(rep.sup_plain <= 2.0 + 1e-9);  // the commutator bound that does hold
  CHECK(rep.gap <= 1e-6);
}

TEST_CASE("bw_constant: refuses an indefinite form") {
  Preset p = build_preset("two_step_double");
  OptimizerConfig cfg;
  CHECK_THROWS_AS(bw_constant(p.flt, cfg), not_positive_definite);
}

TEST_CASE("cdk witness: herm(3,0) equality pair gives |[x,y]|^2 = 8 = 2(|x|^2|y|^2 - f^2)") {
  // direct 3x3 oracle, frozen values
  double x[3][3] = {{1, 0, 0}, {0, 0, 0}, {0, 0, -1}};
  double y[3][3] = {{0, 0, 1}, {0, 0, 0}, {1, 0, 0}};
  double c[3][3] = {};  // [x, y]
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += x[i][k] * y[k][j] - y[i][k] * x[k][j];
  double comm2 = 0, fxx = 0, fyy = 0, fxy = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      comm2 += c[i][j] * c[i][j];
      fxx += x[i][j] * x[i][j];
      fyy += y[i][j] * y[i][j];
      fxy += x[i][j] * y[i][j];
    }
  CHECK(comm2 == 8.0);
  CHECK(2.0 * (fxx * fyy - fxy * fxy) == 8.0);
}

TEST_CASE("cdk_verify: real and quaternionic hermitian sampling holds") {
  for (int level : {0, 2}) {
    CdkReport rep = cdk_verify(3, level, 2000, 0x5EC7);
    CAPTURE(level);
    CHECK(rep.holds);
    CHECK(rep.max_ratio <= 1.0 + 1e-9);
  }
}

TEST_CASE("cdk_verify: herm(3,O) with diagonal x holds over 10^4 samples") {
  CdkReport rep = cdk_verify(3, 3, 10000, 0x5EC7);
  CHECK(rep.holds);
  CHECK(rep.min_slack1 >= -1e-9);
}

TEST_CASE("cdk_verify: invalid (n, level) rejected; explore mode runs") {
  CHECK_THROWS_AS(cdk_verify(4, 3, 10, 1), preset_error);
  CdkReport rep = cdk_verify(3, 3, 200, 7, /*explore=*/true);
  CHECK(rep.explore);
  CHECK(rep.samples == 200);
}

TEST_CASE("direct-sum bounds contain sampled sect of the sum") {
  Preset a = build_preset("c_epsilon:1");   // constant -3/4
  Preset b = build_preset("herm:2:0");      // range [0, 1]
  Metrized<Rat> sum_r = compose(ComposeKind::direct_sum, *a.exact, *b.exact);
  Metrized<double> sum = to_float(sum_r);
  OptimizerConfig cfg;
  cfg.starts = 8;
  BoundsReport ra = estimate_extrema(to_float(*a.exact), cfg);
  BoundsReport rb = estimate_extrema(to_float(*b.exact), cfg);
  double lo = std::min({ra.bwl, rb.bwl, 0.0}) - 1e-6;
  double hi = std::max({ra.bwu, rb.bwu, 0.0}) + 1e-6;
  std::mt19937_64 rng = stream_for(163, 0);
  for (int t = 0; t < 2000; ++t) {
    Vec<double> x = random_h_unit(rng, sum.h), y = random_h_unit(rng, sum.h);
    if (sum.gram(x, y) < 1e-6) continue;
    double v = sect_value(sum, x, y);
    CHECK(v >= lo);
    CHECK(v <= hi);
  }
}

TEST_CASE("tensor product of nonnegative planes stays nonnegative on decomposables") {
  Preset a = build_preset("herm:2:0");
  Metrized<Rat> prod_r = compose(ComposeKind::tensor_product, *a.exact, *a.exact);
  Metrized<double> prod = to_float(prod_r);
  Metrized<double> fa = to_float(*a.exact);
  std::mt19937_64 rng = stream_for(167, 0);
  const int n = a.exact->dim();
  int done = 0;
  while (done < 50) {
    Vec<double> a1 = random_h_unit(rng, fa.h), a1b = random_h_unit(rng, fa.h);
    Vec<double> a2 = random_h_unit(rng, fa.h), a2b = random_h_unit(rng, fa.h);
    if (fa.gram(a1, a1b) < 1e-4 || fa.gram(a2, a2b) < 1e-4) continue;
    double s1 = sect_value(fa, a1, a1b), s2 = sect_value(fa, a2, a2b);
    if (s1 < 0 || s2 < 0) continue;  // herm is nonnegative; guard anyway
    Vec<double> u(n * n), v(n * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        u[i * n + j] = a1[i] * a2[j];
        v[i * n + j] = a1b[i] * a2b[j];
      }
    if (prod.gram(u, v) < 1e-6) continue;
    CHECK(sect_value(prod, u, v) >= -1e-9);
    ++done;
  }
}

TEST_CASE("tensor of Killing-metrized compact Lie algebras: decomposable planes nonpositive") {
  Preset a = build_preset("so:3");
  Metrized<Rat> gg = compose(ComposeKind::tensor_product, *a.exact, *a.exact);
  std::mt19937_64 rng = stream_for(173, 0);
  Metrized<double> fg = to_float(gg);
  Metrized<double> fa = to_float(*a.exact);
  int done = 0;
  while (done < 50) {
    Vec<double> a1 = random_h_unit(rng, fa.h), b1 = random_h_unit(rng, fa.h);
    Vec<double> a2 = random_h_unit(rng, fa.h), b2 = random_h_unit(rng, fa.h);
    Vec<double> u(9), v(9);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        u[i * 3 + j] = a1[i] * a2[j];
        v[i * 3 + j] = b1[i] * b2[j];
      }
    if (fg.gram(u, v) < 1e-6) continue;
    CHECK(sect_value(fg, u, v) <= 1e-9);
    ++done;
  }
}

TEST_CASE("sect works on valid planes of indefinite metrized presets") {
  // split metrics still admit nondegenerate planes; only the optimizer refuses
  Preset p = build_preset("sl2_kosier_bracket");
  auto c = constant_sect(*p.exact);
  REQUIRE(c.has_value());
  CHECK(*c == Rat(-4));
  Vec<Rat> q = basis_vec<Rat>(3, 1), r = basis_vec<Rat>(3, 2);
  CHECK(sect(*p.exact, q, r) == Rat(-4));
}

TEST_CASE("para_hurwitz(2): unit planes give -1, orthogonal pairs give 1") {
  Preset p = build_preset("para_hurwitz:2");
  const auto& M = *p.exact;
  Vec<Rat> e = *p.unit_exact;
  std::mt19937_64 rng = stream_for(401, 0);
  int done = 0;
  while (done < 5) {
    Vec<Rat> x = random_rvec(rng, 4), y = random_rvec(rng, 4);
    x[0] = Rat(0);
    y[0] = Rat(0);
    try {
      CHECK(sect(M, e, x) == Rat(-1));
      CHECK(sect(M, x, y) == Rat(1));
      ++done;
    } catch (const linear_dependence&) {
    }
  }
}

TEST_CASE("constant_sect declines non-invariant non-alternative carriers") {
  // mat(2,C) with the Frobenius form: the flat curvature tensor is not in
  // S2Lambda2, so no constant is certified
  Preset p = build_preset("mat:2:1");
  CHECK_FALSE(constant_sect(*p.exact).has_value());
}

TEST_CASE("sect scaling: product scale s and metric scale r give s^2/r times sect") {
  Preset p = build_preset("kosier");
  Rat s = make_rat(3), r = make_rat(5, 2);
  std::vector<Algebra<Rat>::Entry> scaled;
  for (const auto& e : p.exact->alg.entries()) scaled.push_back({e.i, e.j, e.k, s * e.c});
  Mat<Rat> h = p.exact->h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h(i, j) *= r;
  Metrized<Rat> M2 = make_metrized(Algebra<Rat>(3, std::move(scaled)), std::move(h), true);
  std::mt19937_64 rng = stream_for(409, 0);
  int done = 0;
  while (done < 5) {
    Vec<Rat> x = random_rvec(rng, 3), y = random_rvec(rng, 3);
    try {
      Rat base = sect(*p.exact, x, y);
      CHECK(sect(M2, x, y) == s * s / r * base);
      ++done;
    } catch (const linear_dependence&) {
    } catch (const degenerate_plane&) {
    }
  }
}
