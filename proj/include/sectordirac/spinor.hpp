#pragma once
#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace sectordirac {

using cplx = std::complex<double>;
using Spinor = std::array<cplx, 2>;
using Mat2 = std::array<std::array<cplx, 2>, 2>;

inline constexpr cplx I{0.0, 1.0};

inline Spinor operator+(const Spinor &a, const Spinor &b) {
  return {a[0] + b[0], a[1] + b[1]};
}
inline Spinor operator-(const Spinor &a, const Spinor &b) {
  return {a[0] - b[0], a[1] - b[1]};
}
inline Spinor operator*(cplx s, const Spinor &a) { return {s * a[0], s * a[1]}; }

inline double norm(const Spinor &a) {
  return std::sqrt(std::norm(a[0]) + std::norm(a[1]));
}
inline double norm2(const Spinor &a) { return std::norm(a[0]) + std::norm(a[1]); }
//! <a, b> = conj(a) . b
inline cplx inner(const Spinor &a, const Spinor &b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

inline Spinor operator*(const Mat2 &m, const Spinor &v) {
  return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}
inline Mat2 operator*(const Mat2 &a, const Mat2 &b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}
inline Mat2 operator+(const Mat2 &a, const Mat2 &b) {
  return {{{a[0][0] + b[0][0], a[0][1] + b[0][1]},
           {a[1][0] + b[1][0], a[1][1] + b[1][1]}}};
}
inline Mat2 operator-(const Mat2 &a, const Mat2 &b) {
  return {{{a[0][0] - b[0][0], a[0][1] - b[0][1]},
           {a[1][0] - b[1][0], a[1][1] - b[1][1]}}};
}
inline cplx det(const Mat2 &m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
//! Max-entry norm.
inline double max_abs(const Mat2 &m) {
  double r = 0.0;
  for (const auto &row : m)
    for (const auto &x : row)
      r = std::max(r, std::abs(x));
  return r;
}

} // namespace sectordirac
