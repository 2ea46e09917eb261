#pragma once

#include <complex>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace pk {

using cplx = std::complex<double>;

// Default tolerances. Region classification and root matching are
// tolerance-based by design: see the factor module notes in README.
inline constexpr double kClassifyTol = 1e-8;    // |.|-1 band counted as the circle
inline constexpr double kRootMergeTol = 1e-7;   // cluster width for repeated roots
inline constexpr double kCancelTol = 1e-8;      // num/den root matching for coprimality
inline constexpr double kMembershipTol = 1e-9;  // span membership residual (relative)
inline constexpr double kPoleGuardTol = 1e-9;   // evaluation distance guard near poles/atoms

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }
inline bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

inline double sqr(double x) { return x * x; }

// Lexicographic order on complex numbers; used for canonical root ordering.
inline bool cplx_less(cplx a, cplx b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

inline std::string fmt_double(double x, const char* fmt = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

// Compact "(re,im)" with short digits; used by the symbol token form.
inline std::string fmt_cplx_token(cplx z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.12g,%.12g)", z.real() + 0.0, z.imag() + 0.0);
  return buf;
}

}  // namespace pk
