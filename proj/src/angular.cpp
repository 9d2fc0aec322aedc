#include "sectordirac/angular.hpp"
#include "sectordirac/errors.hpp"
#include "sectordirac/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace sectordirac {

std::string_view to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

AngularMode AngularMode::make(int k, Sign sign, double omega) {
  return {k, sign, omega, lambda_of(omega, k)};
}

AngularGrid AngularGrid::uniform(double omega, int n) {
  if (n < 2)
    throw ResolutionError("angular grid needs at least 2 nodes");
  std::vector<double> nodes(n);
  for (int j = 0; j < n; ++j)
    nodes[j] = omega * j / (n - 1);
  nodes.back() = omega;
  return from_nodes(omega, std::move(nodes));
}

AngularGrid AngularGrid::from_nodes(double omega, std::vector<double> nodes) {
  SectorCoupling{omega, 0.0}.validate();
  if (nodes.size() < 2)
    throw ResolutionError("angular grid needs at least 2 nodes");
  const double tol = 1e-12 * omega;
  if (std::abs(nodes.front()) > tol || std::abs(nodes.back() - omega) > tol)
    throw DomainError("angular nodes must span [0, omega]");
  std::vector<double> w(nodes.size(), 0.0);
  for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
    const double h = nodes[j + 1] - nodes[j];
    if (!(h > 0.0))
      throw DomainError("angular nodes must be strictly increasing");
    w[j] += 0.5 * h;
    w[j + 1] += 0.5 * h;
  }
  return {omega, std::move(nodes), std::move(w)};
}

Spinor eval_mode(const AngularMode &m, double theta) {
  const double tol = 1e-12 * m.omega;
  if (!(theta >= -tol && theta <= m.omega + tol))
    throw DomainError("theta outside [0, omega]");
  const double amp = 1.0 / std::sqrt(2.0 * m.omega);
  if (m.sign == Sign::Plus) {
    const double phase = (m.lambda - 0.5) * theta;
    return {amp * std::exp(I * phase), amp * std::exp(-I * phase)};
  }
  const double phase = (m.lambda + 0.5) * theta;
  return {-I * amp * std::exp(-I * phase), -I * amp * std::exp(I * phase)};
}

Spinor eval_mode_derivative(const AngularMode &m, double theta) {
  const Spinor f = eval_mode(m, theta);
  const double a = m.sign == Sign::Plus ? m.lambda - 0.5 : -(m.lambda + 0.5);
  return {I * a * f[0], -I * a * f[1]};
}

Spinor apply_spin_orbit(const AngularMode &m, double theta) {
  const Spinor f = eval_mode(m, theta);
  const Spinor df = eval_mode_derivative(m, theta);
  // sigma_3 = diag(1, -1)
  return {0.5 * f[0] - I * df[0], 0.5 * f[1] + I * df[1]};
}

Spinor apply_radial_sigma(const Spinor &v, double theta) {
  return {-I * std::exp(-I * theta) * v[1], -I * std::exp(I * theta) * v[0]};
}

double ModeResiduals::max() const { return std::max({boundary, eigen, map}); }

ModeResiduals check_mode_identities(const AngularMode &m,
                                    const AngularGrid &grid) {
  ModeResiduals res{};
  const Spinor at0 = eval_mode(m, 0.0);
  const Spinor atw = eval_mode(m, m.omega);
  res.boundary = std::abs(atw[1] + std::exp(I * m.omega) * atw[0]) +
                 std::abs(at0[0] - at0[1]);

  const double eigenvalue = sign_value(m.sign) * lambda_of(m.omega, m.k);
  AngularMode partner = m;
  partner.sign = flip(m.sign);
  for (double t : grid.nodes) {
    const Spinor f = eval_mode(m, t);
    const Spinor kf = apply_spin_orbit(m, t);
    res.eigen = std::max(res.eigen, norm(kf - cplx(eigenvalue) * f));
    const Spinor mapped = apply_radial_sigma(f, t);
    const Spinor expected = cplx(sign_value(m.sign)) * eval_mode(partner, t);
    res.map = std::max(res.map, norm(mapped - expected));
  }
  return res;
}

void require_resolution(const AngularGrid &grid, int K) {
  if (K < 1)
    throw DomainError("channel count K must be >= 1");
  const double lambda_top = lambda_of(grid.omega, K - 1) + 0.5;
  const double periods = lambda_top * grid.omega / (2.0 * pi);
  const double needed = min_nodes_per_period * periods;
  if (static_cast<double>(grid.size() - 1) < needed)
    throw ResolutionError("angular grid has " + std::to_string(grid.size()) +
                          " nodes; channel " + std::to_string(K - 1) +
                          " needs at least " +
                          std::to_string(static_cast<int>(std::ceil(needed)) + 1));
}

std::vector<cplx> gram(double omega, int K, const AngularGrid &grid) {
  if (std::abs(grid.omega - omega) > 1e-14 * omega)
    throw DomainError("grid omega does not match");
  require_resolution(grid, K);
  const int n = 2 * K;
  std::vector<AngularMode> modes;
  modes.reserve(n);
  for (int k = 0; k < K; ++k) {
    modes.push_back(AngularMode::make(k, Sign::Plus, omega));
    modes.push_back(AngularMode::make(k, Sign::Minus, omega));
  }
  std::vector<std::vector<Spinor>> samples(n);
  for (int a = 0; a < n; ++a) {
    samples[a].reserve(grid.size());
    for (double t : grid.nodes)
      samples[a].push_back(eval_mode(modes[a], t));
  }
  std::vector<cplx> g(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      cplx s = 0.0;
      for (std::size_t j = 0; j < grid.size(); ++j)
        s += grid.weights[j] * inner(samples[a][j], samples[b][j]);
      g[a * n + b] = s;
    }
  return g;
}

} // namespace sectordirac
