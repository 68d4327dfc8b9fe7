#include <doctest.h>

#include <algorithm>

#include "alglab/special.hpp"
#include "helpers.hpp"

using namespace alglab;
using namespace alglab::testing;

namespace {
bool has_element_near(const SpecialElementSet& s, const Vec<double>& target, double tol = 1e-7) {
  for (const auto& el : s.elements) {
    double d = 0;
    for (size_t i = 0; i < target.size(); ++i)
      d += (el.coords[i] - target[i]) * (el.coords[i] - target[i]);
    if (std::sqrt(d) < tol) return true;
  }
  return false;
}

bool has_ray_near(const SpecialElementSet& s, Vec<double> dir, double tol = 1e-7) {
  double n = 0;
  for (double v : dir) n += v * v;
  for (auto& v : dir) v /= std::sqrt(n);
  for (const auto& el : s.elements) {
    double m = 0;
    for (double v : el.coords) m += v * v;
    double dp = 0;
    for (size_t i = 0; i < dir.size(); ++i) dp += el.coords[i] * dir[i] / std::sqrt(m);
    if (std::fabs(std::fabs(dp) - 1.0) < tol) return true;
  }
  return false;
}
}  // namespace

TEST_CASE("find_idempotents: c_epsilon(1) table with exact norms") {
  Preset p = build_preset("c_epsilon:1");
  SearchConfig cfg;
  cfg.grid = 400;  // exhaustive dim-3 sphere grid + newton polish
  SpecialElementSet s = find_idempotents(p.flt, cfg, &*p.exact);
  // exactly five nontrivial idempotents
  REQUIRE(s.elements.size() == 5);
  // f0 with norm 1
  CHECK(has_element_near(s, {1, 0, 0}));
  // -(f0 +- 2 f1) with norm 5
  CHECK(has_element_near(s, {-1, -2, 0}));
  CHECK(has_element_near(s, {-1, 2, 0}));
  // (1/3)(f0 +- (2/sqrt 3) f2) with norm 7/27
  const double w = 2.0 / (3.0 * std::sqrt(3.0));
  CHECK(has_element_near(s, {1.0 / 3.0, 0, w}));
  CHECK(has_element_near(s, {1.0 / 3.0, 0, -w}));
  // norms snap to {1, 5, 7/27}
  std::vector<std::string> norms;
  for (const auto& el : s.elements) {
    REQUIRE(el.norm_exact.has_value());
    norms.push_back(*el.norm_exact);
  }
  std::sort(norms.begin(), norms.end());
  CHECK(std::count(norms.begin(), norms.end(), "1") == 1);
  CHECK(std::count(norms.begin(), norms.end(), "5") == 2);
  CHECK(std::count(norms.begin(), norms.end(), "7/27") == 2);
  // rational coordinates re-verified exactly where applicable
  int exact_count = 0;
  for (const auto& el : s.elements) exact_count += el.exact_verified;
  CHECK(exact_count == 3);  // f0 and -(f0 +- 2f1); the others have sqrt(3) coords
  for (const auto& el : s.elements) CHECK(el.residual <= 1e-9);
}

TEST_CASE("find_idempotents: c_epsilon(0) has a unique nontrivial idempotent") {
  Preset p = build_preset("c_epsilon:0");
  SearchConfig cfg;
  cfg.grid = 400;
  SpecialElementSet s = find_idempotents(p.flt, cfg, &*p.exact);
  REQUIRE(s.elements.size() == 1);
  CHECK(has_element_near(s, {1, 0, 0}));
}

TEST_CASE("find_idempotents: herm(2,0) recovers identity and the projection circle") {
  Preset p = build_preset("herm:2:0");
  SearchConfig cfg;
  cfg.starts = 200;
  SpecialElementSet s = find_idempotents(p.flt, cfg, &*p.exact);
  // the identity is isolated; rank-1 projections form a circle, reported up
  // to dedup: (a, b, c) with a + b = 1, ab = c^2
  CHECK(has_element_near(s, {1, 1, 0}));
  bool circle_seen = false;
  for (const auto& el : s.elements) {
    CHECK(el.residual <= 1e-9);
    double a = el.coords[0], b = el.coords[1], c = el.coords[2];
    bool is_identity = std::fabs(a - 1) < 1e-7 && std::fabs(b - 1) < 1e-7 && std::fabs(c) < 1e-7;
    if (!is_identity) {
      CHECK(a + b == doctest::Approx(1.0).epsilon(1e-8));
      CHECK(a * b == doctest::Approx(c * c).epsilon(1e-8));
      circle_seen = true;
    }
    // h-norms: projections 1/2, identity 1
    CHECK((std::fabs(el.norm - 0.5) < 1e-6 || std::fabs(el.norm - 1.0) < 1e-6));
  }
  CHECK(circle_seen);
  // e11 and e22 are exact members of the family even if sampling lands elsewhere
  Vec<double> e11 = {1, 0, 0}, e22 = {0, 1, 0};
  for (const auto& e : {e11, e22}) {
    Vec<double> r = vec_sub(p.flt.alg.multiply(e, e), e);
    CHECK(std::sqrt(p.flt.ip(r, r)) <= 1e-15);
  }
}

TEST_CASE("find_idempotents: r3_star finds (1,1,1)") {
  Preset p = build_preset("r3_star");
  SearchConfig cfg;
  cfg.starts = 128;
  SpecialElementSet s = find_idempotents(p.flt, cfg, &*p.exact);
  CHECK(has_element_near(s, {1, 1, 1}));
  for (const auto& el : s.elements) CHECK(el.residual <= 1e-9);
}

TEST_CASE("newton residuals decrease quadratically near convergence") {
  Preset p = build_preset("c_epsilon:1");
  SearchConfig cfg;
  cfg.starts = 64;
  SpecialElementSet s = find_idempotents(p.flt, cfg, &*p.exact);
  REQUIRE_FALSE(s.elements.empty());
  int checked = 0;
  for (const auto& el : s.elements) {
    const auto& h = el.residual_history;
    for (size_t k = 0; k + 1 < h.size(); ++k) {
      if (h[k] < 1e-3 && h[k] > 1e-12 && h[k + 1] > 0) {
        CHECK(h[k + 1] <= std::max(1e-13, 20.0 * h[k] * h[k]));
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("find_square_zero: c_epsilon(1) ray f1 +- (sqrt3/3) f2 with norm law") {
  Preset p = build_preset("c_epsilon:1");
  SearchConfig cfg;
  cfg.grid = 400;
  SpecialElementSet s = find_square_zero(p.flt, cfg, &*p.exact);
  REQUIRE(s.elements.size() == 2);
  const double r = std::sqrt(3.0) / 3.0;
  CHECK(has_ray_near(s, {0, 1, r}));
  CHECK(has_ray_near(s, {0, 1, -r}));
  for (const auto& el : s.elements) {
    CHECK(el.residual <= 1e-9);
    // theta-scaled representative satisfies h(z,z) = (4/3) theta^2
    double theta = el.coords[1];
    CHECK(el.norm == doctest::Approx((4.0 / 3.0) * theta * theta).epsilon(1e-9));
  }
}

TEST_CASE("find_square_zero: herm(3,0) has none") {
  Preset p = build_preset("herm:3:0");
  SearchConfig cfg;
  cfg.starts = 96;
  SpecialElementSet s = find_square_zero(p.flt, cfg, &*p.exact);
  CHECK(s.elements.empty());
}

TEST_CASE("find_square_zero: anticommutative preset returns rays immediately") {
  Preset p = build_preset("cross:3");
  SearchConfig cfg;
  cfg.starts = 16;
  SpecialElementSet s = find_square_zero(p.flt, cfg, &*p.exact);
  CHECK_FALSE(s.elements.empty());
  for (const auto& el : s.elements) CHECK(el.residual <= 1e-12);
}

TEST_CASE("orthogonal_spectrum: c_epsilon f0 gives {1/2 - eps, 1/2 + eps}") {
  for (const char* eps : {"0", "3/10", "1"}) {
    Preset p = build_preset(std::string("c_epsilon:") + eps);
    CAPTURE(eps);
    auto sp = orthogonal_spectrum(p.flt, {1, 0, 0});
    REQUIRE(sp.values.size() == 2);
    double e = rat_double(rq(eps));
    CHECK(sp.values[0].real() == doctest::Approx(0.5 - e).epsilon(1e-10));
    CHECK(sp.values[1].real() == doctest::Approx(0.5 + e).epsilon(1e-10));
    CHECK(std::fabs(sp.values[0].imag()) < 1e-10);
    CHECK_FALSE(sp.residual_warning);
  }
}

TEST_CASE("orthogonal_spectrum: herm identity gives all ones") {
  Preset p = build_preset("herm:3:1");
  auto sp = orthogonal_spectrum(p.flt, *p.unit);
  REQUIRE(sp.values.size() == p.flt.dim() - 1);
  for (auto v : sp.values) CHECK(v.real() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("orthogonal_spectrum: herm(2,0) e11 gives {0, 1/2}") {
  Preset p = build_preset("herm:2:0");
  auto sp = orthogonal_spectrum(p.flt, {1, 0, 0});
  REQUIRE(sp.values.size() == 2);
  CHECK(sp.values[0].real() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sp.values[1].real() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("orthogonal_spectrum: isotropic element rejected, non-idempotent warned") {
  Preset p = build_preset("two_step_double");
  CHECK_THROWS_AS(orthogonal_spectrum(p.flt, basis_vec<double>(6, 0)), isotropic_idempotent);
  Preset q = build_preset("c_epsilon:1");
  auto sp = orthogonal_spectrum(q.flt, {2, 0, 0});  // 2 f0 is not idempotent
  CHECK(sp.residual_warning);
}

TEST_CASE("structural_report: e_algebra is exact, herm is not") {
  for (int n : {4, 5, 6}) {
    Preset p = build_preset("e_algebra:" + std::to_string(n));
    StructReport rep = structural_report(*p.exact);
    CAPTURE(n);
    CHECK(rep.exact);
    CHECK(rep.faithful);
  }
  Preset h = build_preset("herm:3:0");
  StructReport rep = structural_report(*h.exact);
  CHECK_FALSE(rep.exact);
  CHECK(rep.faithful);  // unital
}

TEST_CASE("structural_report: trivial algebra is exact and not faithful") {
  Algebra<Rat> trivial(3, {});
  Metrized<Rat> M{trivial, Mat<Rat>::identity(3), check_metric(trivial, Mat<Rat>::identity(3)),
                  Mat<Rat>::identity(3)};
  StructReport rep = structural_report(M);
  CHECK(rep.exact);
  CHECK_FALSE(rep.faithful);
  CHECK(rep.lmap_rank == 0);
}

TEST_CASE("cone membership: herm identity and squares are members") {
  Preset p = build_preset("herm:2:0");
  CHECK(cone_member(p.flt, *p.unit));
  std::mt19937_64 rng = stream_for(211, 0);
  for (int t = 0; t < 10; ++t) {
    Vec<double> x = random_h_unit(rng, p.flt.h);
    Vec<double> sq = p.flt.alg.multiply(x, x);
    CHECK(cone_member(p.flt, sq));
  }
}

TEST_CASE("complexified_search: trivial algebra gives square-zero with sect 0") {
  Algebra<double> trivial(3, {});
  Metrized<double> M = make_metrized(trivial, Mat<double>::identity(3));
  SearchConfig cfg;
  cfg.starts = 16;
  SpecialElementSet s = complexified_search(M, SpecialKind::complex_square_zero, cfg);
  REQUIRE_FALSE(s.elements.empty());
  for (const auto& el : s.elements) {
    CHECK(el.residual <= 1e-9);
    if (el.independent) {
      CHECK(el.check_value == doctest::Approx(0.0).epsilon(1e-9));
      CHECK(el.check_defect <= 1e-9);
    }
  }
}

TEST_CASE("complexified_search: c_epsilon(0) has complex square-zero f1 + i f2") {
  Preset p = build_preset("c_epsilon:0");
  SearchConfig cfg;
  cfg.starts = 64;
  SpecialElementSet s = complexified_search(p.flt, SpecialKind::complex_square_zero, cfg);
  bool found_indep = false;
  for (const auto& el : s.elements) {
    CHECK(el.residual <= 1e-9);
    if (el.independent) {
      found_indep = true;
      CHECK(el.check_defect <= 1e-9);  // sect(a,b) = |a*a|^2 / gram
    }
  }
  CHECK(found_indep);
}

TEST_CASE("complexified_search: complex idempotents with b != 0 have sect > 0") {
  Preset p = build_preset("c_epsilon:0");
  SearchConfig cfg;
  cfg.starts = 64;
  SpecialElementSet s = complexified_search(p.flt, SpecialKind::complex_idempotent, cfg);
  bool found_indep = false;
  for (const auto& el : s.elements) {
    CHECK(el.residual <= 1e-9);
    if (el.independent) {
      found_indep = true;
      CHECK(el.check_value > 0.0);
      CHECK(el.check_defect <= 1e-9);
    }
  }
  // (1, t, +-it) is a genuine complex idempotent family here
  CHECK(found_indep);
}

TEST_CASE("eigensect bound: 4 sect(e, x) <= 1/h(e,e) for found idempotents") {
  for (const char* name : {"c_epsilon:1", "herm:2:0", "herm:2:1"}) {
    Preset p = build_preset(name);
    CAPTURE(name);
    SearchConfig cfg;
    cfg.starts = 64;
    SpecialElementSet s = find_idempotents(p.flt, cfg);
    std::mt19937_64 rng = stream_for(223, 1);
    for (const auto& el : s.elements) {
      double bound = 1.0 / el.norm + 1e-9;
      int done = 0;
      while (done < 50) {
        Vec<double> x = random_h_unit(rng, p.flt.h);
        if (p.flt.gram(el.coords, x) < 1e-8) continue;
        CHECK(4.0 * sect_value(p.flt, el.coords, x) <= bound);
        ++done;
      }
    }
  }
}

TEST_CASE("orthogonal spectra of herm idempotents stay in [0,1]") {
  Preset p = build_preset("herm:2:1");
  SearchConfig cfg;
  cfg.starts = 96;
  SpecialElementSet s = find_idempotents(p.flt, cfg);
  REQUIRE_FALSE(s.elements.empty());
  for (const auto& el : s.elements) {
    auto sp = orthogonal_spectrum(p.flt, el.coords);
    for (auto v : sp.values) {
      CHECK(v.real() >= -1e-9);
      CHECK(v.real() <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("nonpositive-sect presets have no orthogonal eigenvalues in (0,1)") {
  Preset p = build_preset("e_algebra:4");
  SearchConfig cfg;
  cfg.starts = 128;
  SpecialElementSet s = find_idempotents(p.flt, cfg);
  for (const auto& el : s.elements) {
    auto sp = orthogonal_spectrum(p.flt, el.coords);
    for (auto v : sp.values) {
      bool inside = v.real() > 1e-6 && v.real() < 1.0 - 1e-6;
      CHECK_FALSE(inside);
    }
  }
}

TEST_CASE("square-zero elements see nonpositive sect; zero iff annihilated") {
  Preset p = build_preset("c_epsilon:1");
  SearchConfig cfg;
  cfg.grid = 200;
  SpecialElementSet s = find_square_zero(p.flt, cfg);
  REQUIRE_FALSE(s.elements.empty());
  std::mt19937_64 rng = stream_for(227, 0);
  for (const auto& el : s.elements) {
    int done = 0;
    while (done < 50) {
      Vec<double> y = random_h_unit(rng, p.flt.h);
      if (p.flt.gram(el.coords, y) < 1e-8) continue;
      double sv = sect_value(p.flt, el.coords, y);
      CHECK(sv <= 1e-9);
      Vec<double> zy = p.flt.alg.multiply(el.coords, y);
      double prod_norm = std::sqrt(p.flt.ip(zy, zy));
      if (sv > -1e-12) CHECK(prod_norm <= 1e-5);
      if (prod_norm <= 1e-6) CHECK(std::fabs(sv) <= 1e-9);
      ++done;
    }
  }
}
