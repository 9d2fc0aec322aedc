#pragma once
#include "sectordirac/angular.hpp"
#include "sectordirac/grid.hpp"
#include "sectordirac/params.hpp"

#include <vector>

namespace sectordirac {

//==============================================================================
//! Two-component field on the (r, theta) tensor grid of the sector, stored
//! row-major with theta fastest.
struct PolarField {
  GridPtr r_grid;
  AngularGrid theta_grid;
  std::vector<Spinor> values;

  static PolarField zeros(GridPtr r_grid, AngularGrid theta_grid);
  int nr() const { return r_grid->size(); }
  int ntheta() const { return static_cast<int>(theta_grid.size()); }
  Spinor &at(int i, int j) { return values[static_cast<std::size_t>(i) * ntheta() + j]; }
  const Spinor &at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * ntheta() + j];
  }
};

//! Radial channel profiles; channel k stores (u_k^+, u_k^-) as the two
//! components of one RadialSample so d_{nu,k} acts on it directly.
struct ChannelCoefficients {
  double omega;
  GridPtr grid;
  std::vector<RadialSample> channels;
  //! ||psi||^2 - sum_k (||u_k^+||^2 + ||u_k^-||^2): energy outside the first
  //! K channels (zero for fields built by reconstruct).
  double tail_energy = 0.0;

  static ChannelCoefficients zeros(double omega, GridPtr grid, int K);
  int channel_count() const { return static_cast<int>(channels.size()); }
};

//! u_k^{+/-}(r) = sqrt(r) <f_k^{+/-}, psi(r, .)> by theta quadrature.
ChannelCoefficients decompose(const PolarField &field, int K);

//! psi(r, theta) = r^{-1/2} sum_k [u_k^+ f_k^+ + u_k^- f_k^-].
PolarField reconstruct(const ChannelCoefficients &coeffs,
                       const AngularGrid &theta_grid);

namespace serial {
ChannelCoefficients decompose(const PolarField &field, int K);
PolarField reconstruct(const ChannelCoefficients &coeffs,
                       const AngularGrid &theta_grid);
} // namespace serial

//! (u~_k^+, u~_k^-) = d_{nu,k} (u_k^+, u_k^-); the partial-wave image of
//! -i sigma.grad + nu/|x|. Throws MassError when sc.mass != 0.
ChannelCoefficients apply_operator_channelwise(const ChannelCoefficients &coeffs,
                                               const SectorCoupling &sc,
                                               StencilOrder order = StencilOrder::Fourth);

//! int |psi|^2 dx with r dr dtheta trapezoid quadrature.
double field_norm2(const PolarField &field);
//! sum_k int (|u_k^+|^2 + |u_k^-|^2) dr.
double channel_norm2(const ChannelCoefficients &coeffs);

//! Infinite-mass edge residual: max over r of |psi_1 - psi_2| at theta = 0
//! and |psi_2 + e^{i omega} psi_1| at theta = omega.
double edge_condition_residual(const PolarField &field);

} // namespace sectordirac
