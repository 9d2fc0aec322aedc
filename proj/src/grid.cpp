#include "sectordirac/grid.hpp"
#include "sectordirac/errors.hpp"

#include <cmath>

namespace sectordirac {

LogGrid::LogGrid(double r_min, double r_max, int n)
    : r_min_(r_min), r_max_(r_max) {
  if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max))
    throw DomainError("log grid needs 0 < r_min < r_max");
  if (n < 16)
    throw ResolutionError("log grid needs at least 16 nodes");
  s0_ = std::log(r_min);
  h_ = (std::log(r_max) - s0_) / (n - 1);
  nodes_.resize(n);
  for (int i = 0; i < n; ++i)
    nodes_[i] = std::exp(s0_ + h_ * i);
  nodes_.front() = r_min;
  nodes_.back() = r_max;
}

LogGrid LogGrid::default_radial() { return {1e-6, 1e3, 4000}; }
LogGrid LogGrid::default_hardy() { return {1e-20, 1e20, 8000}; }

std::vector<double> LogGrid::dr_weights() const {
  std::vector<double> w(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    w[i] = h_ * nodes_[i];
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

GridPtr make_grid(double r_min, double r_max, int n) {
  return std::make_shared<const LogGrid>(r_min, r_max, n);
}

RadialSample RadialSample::zeros(GridPtr g) {
  const int n = g->size();
  return {std::move(g), std::vector<Spinor>(n, Spinor{})};
}

int boundary_width(StencilOrder order) {
  return order == StencilOrder::Second ? 1 : 2;
}

std::vector<cplx> derivative_s(const std::vector<cplx> &f, double h,
                               StencilOrder order) {
  const int n = static_cast<int>(f.size());
  if (n < 5)
    throw ResolutionError("derivative stencil needs at least 5 nodes");
  std::vector<cplx> d(n);
  if (order == StencilOrder::Second) {
    const double c = 1.0 / (2.0 * h);
    for (int i = 1; i < n - 1; ++i)
      d[i] = c * (f[i + 1] - f[i - 1]);
    d[0] = c * (-3.0 * f[0] + 4.0 * f[1] - f[2]);
    d[n - 1] = c * (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]);
    return d;
  }
  const double c = 1.0 / (12.0 * h);
  for (int i = 2; i < n - 2; ++i)
    d[i] = c * (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]);
  d[0] = c * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] -
              3.0 * f[4]);
  d[1] = c * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
  d[n - 1] = -c * (-25.0 * f[n - 1] + 48.0 * f[n - 2] - 36.0 * f[n - 3] +
                   16.0 * f[n - 4] - 3.0 * f[n - 5]);
  d[n - 2] = -c * (-3.0 * f[n - 1] - 10.0 * f[n - 2] + 18.0 * f[n - 3] -
                   6.0 * f[n - 4] + f[n - 5]);
  return d;
}

} // namespace sectordirac
