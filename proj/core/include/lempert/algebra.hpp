#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace lempert {

using cplx = std::complex<double>;

// Vector in C^2. The pairing used throughout is the bilinear dot product
// w . z = w1*z1 + w2*z2 (no conjugation), matching the duality pairing
// between points and covectors.
using C2 = std::array<cplx, 2>;

inline cplx dot(const C2& a, const C2& b) { return a[0] * b[0] + a[1] * b[1]; }

inline C2 operator+(const C2& a, const C2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline C2 operator-(const C2& a, const C2& b) { return {a[0] - b[0], a[1] - b[1]}; }
inline C2 operator*(cplx s, const C2& a) { return {s * a[0], s * a[1]}; }
inline C2 operator/(const C2& a, cplx s) { return {a[0] / s, a[1] / s}; }

inline double norm2(const C2& a) { return std::sqrt(std::norm(a[0]) + std::norm(a[1])); }

// Stable roots of x^2 - s x + p.  The root of larger modulus is computed from
// the quadratic formula with the sign chosen against cancellation, the other
// from Vieta.  Returns {r1, r2}, unordered.
inline std::array<cplx, 2> quadratic_roots(cplx s, cplx p) {
  const cplx disc = s * s - 4.0 * p;
  cplx sq = std::sqrt(disc);
  // pick the branch aligned with s so s + sq does not cancel
  if (std::real(std::conj(s) * sq) < 0.0) sq = -sq;
  const cplx big = 0.5 * (s + sq);
  if (std::abs(big) == 0.0) return {cplx(0.0), cplx(0.0)};
  return {big, p / big};
}

}  // namespace lempert
