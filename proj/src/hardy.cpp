#include "sectordirac/hardy.hpp"
#include "sectordirac/errors.hpp"
#include "sectordirac/params.hpp"
#include "sectordirac/partial_wave.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace sectordirac {

namespace {

constexpr int max_inverse_iterations = 500;
constexpr double rayleigh_tolerance = 1e-15;
// Rayleigh quotients carry roundoff of order eps * max|T_ii| from
// cancellation between the diagonal and off-diagonal terms.
constexpr double roundoff_factor = 16.0 * std::numeric_limits<double>::epsilon();

double signed_exponent(double lambda, Sign sign) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw DomainError("lambda must be positive");
  return sign == Sign::Plus ? lambda : -lambda;
}

// LDL^T solve of (T - shift) x = b in place; returns the smallest |pivot|.
double solve_shifted(const Tridiagonal &t, double shift, std::vector<double> &b) {
  const std::size_t n = t.diag.size();
  std::vector<double> d(n), l(n, 0.0);
  d[0] = t.diag[0] - shift;
  double min_pivot = std::abs(d[0]);
  for (std::size_t i = 1; i < n; ++i) {
    l[i] = t.off[i - 1] / d[i - 1];
    d[i] = t.diag[i] - shift - l[i] * t.off[i - 1];
    min_pivot = std::min(min_pivot, std::abs(d[i]));
  }
  if (!(min_pivot > 0.0) || !std::isfinite(min_pivot))
    throw SolverError("singular pivot in shifted tridiagonal solve");
  for (std::size_t i = 1; i < n; ++i)
    b[i] -= l[i] * b[i - 1];
  b[n - 1] /= d[n - 1];
  for (std::size_t i = n - 1; i-- > 0;)
    b[i] = b[i] / d[i] - l[i + 1] * b[i + 1];
  return min_pivot;
}

double rayleigh(const Tridiagonal &t, const std::vector<double> &x) {
  const std::size_t n = x.size();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double tx = t.diag[i] * x[i];
    if (i > 0)
      tx += t.off[i - 1] * x[i - 1];
    if (i + 1 < n)
      tx += t.off[i] * x[i + 1];
    num += x[i] * tx;
    den += x[i] * x[i];
  }
  return num / den;
}

} // namespace

Tridiagonal hardy_pencil(double lambda, Sign sign, const LogGrid &grid) {
  const double p = signed_exponent(lambda, sign);
  const double a = 2.0 * p - 1.0; // weight r^{2p-1} in s = log r
  const int n = grid.size();
  const int m = n - 2; // interior unknowns
  // Work with log-weights: A = sum w_{i+1/2} (v_{i+1}-v_i)^2 / h_i,
  // B = sum w_i v_i^2 hbar_i, w = exp(a s), geometric midpoints.
  std::vector<double> s(n);
  for (int i = 0; i < n; ++i)
    s[i] = std::log(grid[i]);
  auto hb = [&](int i) { return 0.5 * (s[i + 1] - s[i - 1]); };

  Tridiagonal t;
  t.diag.resize(m);
  t.off.resize(m > 0 ? m - 1 : 0);
  for (int j = 0; j < m; ++j) {
    const int i = j + 1;
    const double hl = s[i] - s[i - 1], hr = s[i + 1] - s[i];
    const double mid_l = 0.5 * (s[i] + s[i - 1]);
    const double mid_r = 0.5 * (s[i] + s[i + 1]);
    // w_{i-1/2} / w_i and w_{i+1/2} / w_i
    const double wl = std::exp(a * (mid_l - s[i]));
    const double wr = std::exp(a * (mid_r - s[i]));
    t.diag[j] = (wl / hl + wr / hr) / hb(i);
    if (j + 1 < m) {
      // w_{i+1/2} / sqrt(w_i w_{i+1})
      const double wc = std::exp(a * (mid_r - 0.5 * (s[i] + s[i + 1])));
      t.off[j] = -wc / (hr * std::sqrt(hb(i) * hb(i + 1)));
    }
  }
  return t;
}

QuotientResult min_hardy_quotient(double lambda, Sign sign, const LogGrid &grid) {
  const double p = signed_exponent(lambda, sign);
  const double decades = std::log10(grid.r_max() / grid.r_min());
  if (decades < 6.0 || grid.size() < 1000)
    throw ResolutionError("Hardy quotient needs >= 6 decades and >= 1000 nodes");

  const double analytic = (p - 0.5) * (p - 0.5);
  const Tridiagonal t = hardy_pencil(lambda, sign, grid);
  const std::size_t m = t.diag.size();

  // The continuum infimum lies below the whole discrete spectrum, so it is a
  // safe shift that targets the lowest eigenvalue.
  const double shift = analytic;
  std::vector<double> x(m);
  for (std::size_t i = 0; i < m; ++i)
    x[i] = std::sin(pi * (i + 1.0) / (m + 1.0)); // lowest Dirichlet mode
  double value = rayleigh(t, x);
  double min_pivot = std::numeric_limits<double>::infinity();
  double diag_scale = 0.0;
  for (double di : t.diag)
    diag_scale = std::max(diag_scale, std::abs(di));
  const double tol = std::max(rayleigh_tolerance * std::max(1.0, value),
                              roundoff_factor * diag_scale);
  int it = 0;
  for (; it < max_inverse_iterations; ++it) {
    min_pivot = std::min(min_pivot, solve_shifted(t, shift, x));
    const double nrm = std::sqrt(std::inner_product(x.begin(), x.end(),
                                                    x.begin(), 0.0));
    if (!std::isfinite(nrm) || nrm == 0.0)
      throw SolverError("inverse iteration diverged (min pivot " +
                        std::to_string(min_pivot) + ")");
    for (auto &xi : x)
      xi /= nrm;
    const double next = rayleigh(t, x);
    const bool done = std::abs(next - value) <= tol;
    value = next;
    if (done)
      break;
  }
  if (it == max_inverse_iterations)
    throw SolverError("inverse iteration did not converge (min pivot " +
                      std::to_string(min_pivot) + ")");

  // Undo the B^{1/2} scaling and the r^{-p} substitution: u_i = x_i sqrt(r_i/hbar_i)
  auto g = std::make_shared<const LogGrid>(grid);
  RadialSample u = RadialSample::zeros(g);
  for (std::size_t j = 0; j < m; ++j) {
    const int i = static_cast<int>(j) + 1;
    const double hbar = 0.5 * (std::log(grid[i + 1]) - std::log(grid[i - 1]));
    u.values[i] = {x[j] * std::sqrt(grid[i] / hbar), 0.0};
  }
  return {value, std::move(u), analytic,
          (value - analytic) / std::max(analytic, 1e-300), it + 1, min_pivot};
}

double hardy_quotient_2d_channel_sum(const ChannelCoefficients &c,
                                     StencilOrder order) {
  const auto w = c.grid->dr_weights();
  const auto &r = c.grid->nodes();
  const double h = c.grid->step();
  double total = 0.0;
  for (int k = 0; k < c.channel_count(); ++k) {
    const double lambda = lambda_of(c.omega, k);
    const RadialSample &u = c.channels[k];
    std::vector<cplx> plus(u.size()), minus(u.size());
    for (int i = 0; i < u.size(); ++i) {
      plus[i] = u.values[i][0];
      minus[i] = u.values[i][1];
    }
    const auto dp = derivative_s(plus, h, order);
    const auto dm = derivative_s(minus, h, order);
    for (int i = 0; i < u.size(); ++i) {
      const cplx a = (dp[i] - lambda * plus[i]) / r[i];
      const cplx b = (dm[i] + lambda * minus[i]) / r[i];
      total += w[i] * (std::norm(a) + std::norm(b));
    }
  }
  return total;
}

double weighted_channel_norm(const ChannelCoefficients &c) {
  const auto w = c.grid->dr_weights();
  const auto &r = c.grid->nodes();
  double total = 0.0;
  for (const auto &u : c.channels)
    for (int i = 0; i < u.size(); ++i)
      total += w[i] * norm2(u.values[i]) / (r[i] * r[i]);
  return total;
}

} // namespace sectordirac
