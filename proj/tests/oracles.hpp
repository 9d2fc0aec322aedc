#pragma once
// Independent reference computations used only by the tests.
#include "sectordirac/partial_wave.hpp"


#include <cmath>

namespace oracle {

using sectordirac::cplx;
using sectordirac::PolarField;
using sectordirac::Spinor;
using sectordirac::operator*;
using sectordirac::operator+;
using sectordirac::operator-;
constexpr double pi = sectordirac::pi;

//! max{k : k < (omega/pi) sqrt(nu^2 + 1/4) - 1/2} by exhaustive scan; -1 if empty.
inline int brute_force_d(double omega, double nu) {
  const double x = omega / pi * std::sqrt(nu * nu + 0.25) - 0.5;
  int d = -1;
  for (int k = 0; k < 10000; ++k)
    if (k < x)
      d = k;
  return d;
}

inline bool threshold_case_i(double omega, double nu) {
  return nu * nu <= (pi * pi - omega * omega) / (4.0 * omega * omega);
}

//! Rayleigh-Ritz with continuous piecewise-linear elements in s = log r for
//! v = r^{-p} u on [log r_min, log r_max], Dirichlet ends:
//!   A = int w |v_s|^2 ds,  B = int w |v|^2 ds,  w = exp((2p-1) s).
//! Element integrals are evaluated with 8-point Gauss-Legendre. Both forms are
//! tridiagonal, so the lowest eigenvalue of A - mu B is located by bisection
//! on the Sylvester inertia (count of negative LDL^T pivots). A conforming
//! Ritz value bounds the truncated-interval minimum from above.
inline double ritz_hardy(double p, double r_min, double r_max, int elements) {
  const double a = 2.0 * p - 1.0;
  const double s0 = std::log(r_min), s1 = std::log(r_max);
  const double h = (s1 - s0) / elements;
  const int m = elements - 1;
  static const double gx[8] = {-0.9602898564975363, -0.7966664774136267,
                               -0.5255324099163290, -0.1834346424956498,
                               0.1834346424956498,  0.5255324099163290,
                               0.7966664774136267,  0.9602898564975363};
  static const double gw[8] = {0.1012285362903763, 0.2223810344533745,
                               0.3137066458778873, 0.3626837833783620,
                               0.3626837833783620, 0.3137066458778873,
                               0.2223810344533745, 0.1012285362903763};
  // Symmetric diagonal scaling by exp(-a s_i / 2) keeps entries bounded
  // across many decades without changing the eigenvalues.
  std::vector<double> ad(m, 0.0), ao(m > 0 ? m - 1 : 0, 0.0);
  std::vector<double> bd(m, 0.0), bo(m > 0 ? m - 1 : 0, 0.0);
  for (int e = 0; e < elements; ++e) {
    double kab[2][2] = {}, mab[2][2] = {};
    for (int q = 0; q < 8; ++q) {
      const double t = 0.5 * (gx[q] + 1.0);
      const double wq = 0.5 * gw[q] * h;
      const double phi[2] = {1.0 - t, t};
      const double dphi[2] = {-1.0 / h, 1.0 / h};
      // w(s) relative to sqrt(w(left) w(right))
      const double weight_rel = std::exp(a * (t - 0.5) * h);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          kab[i][j] += wq * weight_rel * dphi[i] * dphi[j];
          mab[i][j] += wq * weight_rel * phi[i] * phi[j];
        }
    }
    // scaled entry for nodes (gi, gj): w_mid * kab * exp(-a (s_gi + s_gj) / 2)
    const double rel[2] = {std::exp(0.5 * a * h), std::exp(-0.5 * a * h)};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const int gi = e - 1 + i, gj = e - 1 + j;
        if (gi < 0 || gj < 0 || gi >= m || gj >= m)
          continue;
        const double f = std::sqrt(rel[i] * rel[j]);
        if (gi == gj) {
          ad[gi] += f * kab[i][j];
          bd[gi] += f * mab[i][j];
        } else if (gi < gj) {
          ao[gi] += f * kab[i][j];
          bo[gi] += f * mab[i][j];
        }
      }
  }
  auto negatives = [&](double mu) {
    int count = 0;
    double d = ad[0] - mu * bd[0];
    if (d < 0)
      ++count;
    for (int i = 1; i < m; ++i) {
      const double o = ao[i - 1] - mu * bo[i - 1];
      d = ad[i] - mu * bd[i] - o * o / d;
      if (d < 0)
        ++count;
    }
    return count;
  };
  double lo = 0.0, hi = 1.0;
  while (negatives(hi) == 0)
    hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (negatives(mid) == 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

//! Second-order finite differences for d/dr (through s = log r) and d/dtheta
//! on a polar tensor grid. One-sided at the edges.
struct PolarDerivatives {
  std::vector<Spinor> dr, dtheta;
};

inline PolarDerivatives polar_derivatives(const PolarField &f) {
  const int nr = f.nr(), nt = f.ntheta();
  const double hs = f.r_grid->step();
  const auto &th = f.theta_grid.nodes;
  PolarDerivatives d{std::vector<Spinor>(f.values.size()),
                     std::vector<Spinor>(f.values.size())};
  for (int i = 0; i < nr; ++i) {
    const double r = (*f.r_grid)[i];
    for (int j = 0; j < nt; ++j) {
      Spinor ds{};
      if (i == 0)
        ds = cplx(1.0 / (2 * hs)) *
             (cplx(-3.0) * f.at(0, j) + cplx(4.0) * f.at(1, j) - f.at(2, j));
      else if (i == nr - 1)
        ds = cplx(1.0 / (2 * hs)) * (cplx(3.0) * f.at(i, j) - cplx(4.0) * f.at(i - 1, j) +
                                    f.at(i - 2, j));
      else
        ds = cplx(1.0 / (2 * hs)) * (f.at(i + 1, j) - f.at(i - 1, j));
      d.dr[i * nt + j] = cplx(1.0 / r) * ds;

      Spinor dt{};
      const double ht = th[1] - th[0];
      if (j == 0)
        dt = cplx(1.0 / (2 * ht)) *
             (cplx(-3.0) * f.at(i, 0) + cplx(4.0) * f.at(i, 1) - f.at(i, 2));
      else if (j == nt - 1)
        dt = cplx(1.0 / (2 * ht)) * (cplx(3.0) * f.at(i, j) - cplx(4.0) * f.at(i, j - 1) +
                                    f.at(i, j - 2));
      else
        dt = cplx(1.0 / (2 * ht)) * (f.at(i, j + 1) - f.at(i, j - 1));
      d.dtheta[i * nt + j] = dt;
    }
  }
  return d;
}

//! -i sigma.grad psi written with d_x -/+ i d_y = e^{-/+ i theta}(d_r -/+ (i/r) d_theta):
//! component 1 = -i (d_x - i d_y) psi_2, component 2 = -i (d_x + i d_y) psi_1.
inline std::vector<Spinor> dirac_2d(const PolarField &f, double nu) {
  const auto d = polar_derivatives(f);
  const cplx i1{0.0, 1.0};
  std::vector<Spinor> out(f.values.size());
  for (int i = 0; i < f.nr(); ++i) {
    const double r = (*f.r_grid)[i];
    for (int j = 0; j < f.ntheta(); ++j) {
      const std::size_t idx = static_cast<std::size_t>(i) * f.ntheta() + j;
      const double th = f.theta_grid.nodes[j];
      const cplx minus = std::exp(-i1 * th) * (d.dr[idx][1] - i1 / r * d.dtheta[idx][1]);
      const cplx plus = std::exp(i1 * th) * (d.dr[idx][0] + i1 / r * d.dtheta[idx][0]);
      out[idx] = {-i1 * minus + nu / r * f.values[idx][0],
                  -i1 * plus + nu / r * f.values[idx][1]};
    }
  }
  return out;
}

//! int |sigma.grad psi|^2 dx with r dr dtheta trapezoid quadrature.
inline double sigma_grad_energy(const PolarField &f) {
  const auto g = dirac_2d(f, 0.0);
  const auto wr = f.r_grid->dr_weights();
  const auto &wt = f.theta_grid.weights;
  double total = 0.0;
  for (int i = 0; i < f.nr(); ++i)
    for (int j = 0; j < f.ntheta(); ++j)
      total += wr[i] * (*f.r_grid)[i] * wt[j] *
               sectordirac::norm2(g[static_cast<std::size_t>(i) * f.ntheta() + j]);
  return total;
}

} // namespace oracle
