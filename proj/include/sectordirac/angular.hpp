#pragma once
#include "sectordirac/spinor.hpp"

#include <string_view>
#include <vector>

namespace sectordirac {

enum class Sign { Plus, Minus };
std::string_view to_string(Sign s);
inline double sign_value(Sign s) { return s == Sign::Plus ? 1.0 : -1.0; }
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

//==============================================================================
//! Eigenfunction f_k^{+/-} of the spin-orbit operator K = 1/2 - i sigma_3 d/dtheta
//! on (0, omega) with infinite-mass edge conditions.
//!
//!   f_k^+ = (e^{ i(l-1/2)t}, e^{-i(l-1/2)t}) / sqrt(2 omega)
//!   f_k^- = -i (e^{-i(l+1/2)t}, e^{ i(l+1/2)t}) / sqrt(2 omega)
//!
//! with K f_k^{+/-} = +/- lambda_k f_k^{+/-}. The exponents are built from the
//! cached lambda, so a mode with a corrupted lambda is still evaluable (and
//! fails the identity checks).
struct AngularMode {
  int k;
  Sign sign;
  double omega;
  double lambda;

  static AngularMode make(int k, Sign sign, double omega);
};

//! Quadrature on [0, omega]; composite trapezoid by default.
struct AngularGrid {
  double omega;
  std::vector<double> nodes;
  std::vector<double> weights;

  static AngularGrid uniform(double omega, int n);
  //! Trapezoid weights on arbitrary increasing nodes spanning [0, omega].
  static AngularGrid from_nodes(double omega, std::vector<double> nodes);
  std::size_t size() const { return nodes.size(); }
};

Spinor eval_mode(const AngularMode &mode, double theta);
//! Exact theta-derivative of eval_mode.
Spinor eval_mode_derivative(const AngularMode &mode, double theta);

//! K f = f/2 - i sigma_3 f', with f' taken analytically.
Spinor apply_spin_orbit(const AngularMode &mode, double theta);

//! -i (sigma . e_r) v with sigma . e_r = ((0, e^{-it}), (e^{it}, 0)).
Spinor apply_radial_sigma(const Spinor &v, double theta);

struct ModeResiduals {
  double boundary; // |phi_2(w) + e^{iw} phi_1(w)| + |phi_1(0) - phi_2(0)|
  double eigen;    // max |K f - (+/- lambda_k) f|, lambda_k from (k, omega)
  double map;      // max |-i(sigma.e_r) f^{+/-} -/+ f^{-/+}|
  double max() const;
};

ModeResiduals check_mode_identities(const AngularMode &mode,
                                    const AngularGrid &grid);

//! Minimum nodes per period of e^{i lambda theta} required by gram/decompose.
inline constexpr double min_nodes_per_period = 8.0;

//! Throws ResolutionError if the grid cannot resolve channels 0..K-1.
void require_resolution(const AngularGrid &grid, int K);

//! Gram matrix of (f_0^+, f_0^-, ..., f_{K-1}^+, f_{K-1}^-), row-major 2K x 2K.
std::vector<cplx> gram(double omega, int K, const AngularGrid &grid);

} // namespace sectordirac
