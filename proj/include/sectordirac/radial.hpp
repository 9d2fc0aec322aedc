#pragma once
#include "sectordirac/grid.hpp"
#include "sectordirac/params.hpp"
#include "sectordirac/spinor.hpp"

#include <optional>

namespace sectordirac {

//! d_{nu,k} = (( nu/r, -d/dr - lambda/r ), ( d/dr - lambda/r, nu/r )).
struct RadialExpression {
  double nu;
  double lambda;
};

//==============================================================================
//! Boundary data of channel k: the matrix P, Q or R that shapes the model
//! functions u^(alpha) near the vertex, and the intertwiners M1, M2 that
//! conjugate d_{nu,k} to the off-diagonal expression with lambda_tilde.
struct BoundaryModel {
  ChannelClassification channel;
  //! P (subcritical), Q (critical) or R (supercritical); empty when the
  //! channel is essentially self-adjoint.
  std::optional<Mat2> matrix;
  //! sqrt(delta), 0 or i sqrt(-delta): the exponent of the model functions.
  cplx root;
  Mat2 m1;
  Mat2 m2;
  cplx lambda_tilde;

  //! Throws RegimeError in essentially self-adjoint channels.
  const Mat2 &boundary_matrix() const;
};

BoundaryModel boundary_model(const SectorCoupling &sc, int k);

//! Smooth nonincreasing cutoff: 1 on r <= 1, 0 on r >= 2, built from the
//! exp(-1/t) mollifier.
double cutoff_chi(double r);

//! Apply d_{nu,k}; derivatives through the s = log r stencil.
RadialSample apply_d(const RadialExpression &expr, const RadialSample &u,
                     StencilOrder order = StencilOrder::Fourth);

//! The diagonalised expression ((0, d/dr - lt/r), (-d/dr - lt/r, 0)) with a
//! possibly imaginary lt = lambda_tilde. Satisfies M1 d_{nu,k} = (this) M2.
RadialSample apply_d_tilde(cplx lambda_tilde, const RadialSample &u,
                           StencilOrder order = StencilOrder::Fourth);

namespace serial {
RadialSample apply_d(const RadialExpression &expr, const RadialSample &u,
                     StencilOrder order = StencilOrder::Fourth);
}

//! u^(alpha)(r) including the cutoff; exactly zero for r >= 2.
Spinor eval_u_alpha(const SectorCoupling &sc, int k, double alpha, double r);
Spinor eval_u_alpha(const BoundaryModel &model, double alpha, double r);

RadialSample sample_u_alpha(const SectorCoupling &sc, int k, double alpha,
                            GridPtr grid);

//! max_i |r_i (d u)(r_i)| / max_i |u(r_i)| over interior nodes, on a grid
//! inside (0, 1] where the cutoff is identically 1.
double zero_mode_residual(const SectorCoupling &sc, int k, double alpha,
                          GridPtr grid,
                          StencilOrder order = StencilOrder::Fourth);

//! max |M1 (d u) - d_tilde (M2 u)| over nodes.
double intertwining_residual(const SectorCoupling &sc, int k,
                             const RadialSample &u,
                             StencilOrder order = StencilOrder::Fourth);

} // namespace sectordirac
