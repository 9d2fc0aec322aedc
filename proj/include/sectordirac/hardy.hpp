#pragma once
#include "sectordirac/angular.hpp"
#include "sectordirac/grid.hpp"

namespace sectordirac {

struct ChannelCoefficients;

struct QuotientResult {
  double value;
  RadialSample minimizer;
  double analytic_constant;
  double relative_gap;
  // diagnostics
  int iterations;
  double min_pivot;
};

//! Smallest generalized eigenvalue of the discretised channel Hardy quotient
//!
//!   A[u] = int |d/dr (r^{-p} u)|^2 r^{2p} dr,   B[u] = int |u|^2 / r^2 dr,
//!
//! with p = +lambda for the "+" channel and p = -lambda for "-", and Dirichlet
//! data at both grid ends. The continuum infimum is (p - 1/2)^2. Solved by
//! shifted inverse iteration on the symmetric tridiagonal B^{-1/2} A B^{-1/2}.
QuotientResult min_hardy_quotient(double lambda, Sign sign, const LogGrid &grid);

//! The tridiagonal matrix behind min_hardy_quotient (diagonal, off-diagonal),
//! exposed for independent eigen-solvers.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
};
Tridiagonal hardy_pencil(double lambda, Sign sign, const LogGrid &grid);

//! sum_k int |(d/dr - l_k/r) u_k^+|^2 + |(d/dr + l_k/r) u_k^-|^2 dr, which
//! equals int |sigma . grad psi|^2 over the sector for the reconstructed psi.
double hardy_quotient_2d_channel_sum(const ChannelCoefficients &coeffs,
                                     StencilOrder order = StencilOrder::Fourth);

//! sum_k int (|u_k^+|^2 + |u_k^-|^2) / r^2 dr = int |psi|^2/|x|^2.
double weighted_channel_norm(const ChannelCoefficients &coeffs);

} // namespace sectordirac
