#pragma once

#include <gmpxx.h>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace alglab {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) as long as fractions are built through make_rat / parse_rat.
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline std::optional<Rat> parse_rat(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::string buf(s);
  mpq_class q;
  if (q.set_str(buf, 10) != 0) return std::nullopt;
  if (q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return Rat(q);
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline double rat_double(const Rat& q) { return q.get_d(); }

// Shortest decimal that round-trips to the same 64-bit float.
inline std::string double_str(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

// Nearest rational with denominator <= max_den (Stern-Brocot search); empty
// if nothing lands within tol of x.
inline std::optional<Rat> snap_to_rational(double x, long max_den, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  bool neg = x < 0;
  double v = neg ? -x : x;
  // continued fraction expansion of v
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9e17) break;
    long a = static_cast<long>(fl);
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den || q2 < 0) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return std::nullopt;
  double approx = static_cast<double>(p1) / static_cast<double>(q1);
  if (std::fabs(approx - v) > tol) return std::nullopt;
  return make_rat(neg ? -p1 : p1, q1);
}

// --- scalar traits: the exact/float numeric tower -------------------------

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
  static constexpr bool exact = true;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_int(long v) { return Rat(v); }
  static bool is_zero(const Rat& v) { return sgn(v) == 0; }
  static Rat abs(const Rat& v) { return ::abs(v); }
  static double to_double(const Rat& v) { return v.get_d(); }
  static std::string str(const Rat& v) { return rat_str(v); }
  // identity/invariance defects must vanish exactly
  static bool within_defect_tol(const Rat& defect_abs) {
    return sgn(defect_abs) == 0;
  }
  static const char* mode_name() { return "rational"; }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr double defect_tol = 1e-9;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_int(long v) { return static_cast<double>(v); }
  static bool is_zero(double v) { return v == 0.0; }
  static double abs(double v) { return std::fabs(v); }
  static double to_double(double v) { return v; }
  static std::string str(double v) { return double_str(v); }
  static bool within_defect_tol(double defect_abs) {
    return defect_abs <= defect_tol;
  }
  static const char* mode_name() { return "float"; }
};

}  // namespace alglab
