#pragma once
#include "sectordirac/spinor.hpp"

#include <memory>
#include <vector>

namespace sectordirac {

//==============================================================================
//! Geometric radial grid r_i = r_min * q^i. Stencils work in s = log r, where
//! the grid is uniform with step h = log(q).
class LogGrid {
public:
  LogGrid(double r_min, double r_max, int n);

  //! r in [1e-6, 1e3], 4000 nodes; shooting, zero modes, fields.
  static LogGrid default_radial();
  //! r in [1e-20, 1e20], 8000 nodes; Hardy quotients need many decades
  //! because the truncation floor is (pi / log(r_max/r_min))^2.
  static LogGrid default_hardy();

  double r_min() const { return r_min_; }
  double r_max() const { return r_max_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  double step() const { return h_; } // in s = log r
  double operator[](int i) const { return nodes_[i]; }
  const std::vector<double> &nodes() const { return nodes_; }
  double log_node(int i) const { return s0_ + h_ * i; }

  //! Trapezoid weights for the integral dr (= r ds).
  std::vector<double> dr_weights() const;

private:
  double r_min_, r_max_, s0_, h_;
  std::vector<double> nodes_;
};

using GridPtr = std::shared_ptr<const LogGrid>;
GridPtr make_grid(double r_min, double r_max, int n);

//! Two-component complex profile on a LogGrid.
struct RadialSample {
  GridPtr grid;
  std::vector<Spinor> values;

  static RadialSample zeros(GridPtr g);
  int size() const { return static_cast<int>(values.size()); }
};

enum class StencilOrder { Second = 2, Fourth = 4 };

//! d/ds of nodal values on a uniform grid of step h. Centered in the
//! interior, one-sided at the ends (same formal order).
std::vector<cplx> derivative_s(const std::vector<cplx> &f, double h,
                               StencilOrder order = StencilOrder::Fourth);

//! Number of end nodes on each side that use one-sided formulas.
int boundary_width(StencilOrder order);

} // namespace sectordirac
