#include "sectordirac/shooting.hpp"
#include "sectordirac/errors.hpp"

#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <exception>

namespace sectordirac {

namespace odeint = boost::numeric::odeint;

std::string_view to_string(Integrability v) {
  switch (v) {
  case Integrability::SquareIntegrable:
    return "SquareIntegrable";
  case Integrability::NotSquareIntegrable:
    return "NotSquareIntegrable";
  case Integrability::Indeterminate:
    return "Indeterminate";
  }
  return "?";
}

ExponentFit fit_exponent(const RadialSample &u, std::pair<double, double> window) {
  const auto [lo, hi] = window;
  if (!(lo > 0.0) || !(hi > lo))
    throw DomainError("degenerate fit window");
  std::vector<double> xs, ys;
  for (int i = 0; i < u.size(); ++i) {
    const double r = (*u.grid)[i];
    if (r < lo || r > hi)
      continue;
    const double m = norm(u.values[i]);
    if (!(m > 0.0) || !std::isfinite(m))
      throw DomainError("fit window contains a zero or non-finite sample");
    xs.push_back(std::log(r));
    ys.push_back(std::log(m));
  }
  const int n = static_cast<int>(xs.size());
  if (n < 20)
    throw DomainError("fit window holds fewer than 20 nodes");

  double xm = 0.0, ym = 0.0;
  for (int i = 0; i < n; ++i) {
    xm += xs[i];
    ym += ys[i];
  }
  xm /= n;
  ym /= n;
  // Centered powers for the linear and quadratic fits.
  double s2 = 0.0, s3 = 0.0, s4 = 0.0, sy1 = 0.0, sy2 = 0.0, syy = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = xs[i] - xm, y = ys[i] - ym;
    s2 += x * x;
    s3 += x * x * x;
    s4 += x * x * x * x;
    sy1 += x * y;
    sy2 += x * x * y;
    syy += y * y;
  }
  ExponentFit fit{};
  fit.points = n;
  fit.exponent = sy1 / s2;
  fit.r_squared = syy > 0.0 ? (sy1 * sy1) / (s2 * syy) : 1.0;

  // y = b0 + b1 x + c (x^2 - s2/n): orthogonalised quadratic term.
  const double q2 = s4 - s2 * s2 / n - s3 * s3 / s2;
  const double qy = sy2 - s3 * sy1 / s2;
  fit.curvature = q2 > 0.0 ? qy / q2 : 0.0;

  const double width = xs.back() - xs.front();
  const double slope_mid = fit.exponent;
  const bool significant = std::abs(fit.curvature) * width * width / 4.0 > 1e-2;
  const bool log_like = fit.curvature < 0.0 &&
                        std::abs(2.0 * fit.curvature + slope_mid * slope_mid) <
                            0.5 * slope_mid * slope_mid;
  fit.log_correction = significant && log_like;
  return fit;
}

int analytic_deficiency(const SectorCoupling &sc, int k) {
  return delta_of(sc, k).essentially_self_adjoint() ? 0 : 1;
}

namespace {

using State = std::array<cplx, 2>;

} // namespace

ShootingResult deficiency_index_numeric(const SectorCoupling &sc, int k, int sign,
                                        const ShootingOptions &opt) {
  sc.validate();
  if (sign != 1 && sign != -1)
    throw DomainError("sign must be +1 or -1");
  if (!(opt.r_min > 0.0) || !(opt.r_out > opt.r_min) || opt.samples < 20 ||
      !(opt.window_lo >= 1.0) || !(opt.window_hi > opt.window_lo) ||
      !(opt.window_hi * opt.r_min <= opt.r_out) || !(opt.fit_margin >= 0.0))
    throw DomainError("inconsistent shooting options");
  const double lambda = lambda_of(sc.omega, k);
  const double nu = sc.nu;
  // d u = z u with z = -i (sign +1, i.e. ker(h* + i)) or +i.
  const cplx z = -static_cast<double>(sign) * I;

  // In s = log r:  du1/ds = lambda u1 + (z r - nu) u2,
  //                du2/ds = (nu - z r) u1 - lambda u2.
  auto rhs = [&](const State &u, State &du, double s) {
    const double r = std::exp(s);
    du[0] = lambda * u[0] + (z * r - nu) * u[1];
    du[1] = (nu - z * r) * u[0] - lambda * u[1];
  };

  // Frozen matrix at r_out (in r): ((lambda/R, z - nu/R), (nu/R - z, -lambda/R)).
  // Take the eigenvector of its eigenvalue with negative real part.
  const double R = opt.r_out;
  const cplx a = lambda / R, b = z - nu / R, c = nu / R - z;
  const cplx mu = -std::sqrt(a * a + b * c); // principal sqrt has Re >= 0
  State u0 = std::abs(b) > std::abs(mu - a) ? State{b, mu - a} : State{mu + a, c};
  if (std::real(mu) >= 0.0)
    throw SolverError("frozen system at r_out has no decaying branch");
  const double n0 = norm(u0);
  u0 = {u0[0] / n0, u0[1] / n0};

  auto grid = make_grid(opt.r_min, opt.r_out, opt.samples);
  std::vector<double> times(grid->size());
  for (int i = 0; i < grid->size(); ++i)
    times[i] = std::log((*grid)[grid->size() - 1 - i]); // descending

  RadialSample sol = RadialSample::zeros(grid);
  int idx = grid->size() - 1;
  auto observer = [&](const State &u, double) { sol.values[idx--] = u; };

  auto stepper = odeint::make_controlled(opt.abs_tol, opt.rel_tol,
                                         odeint::runge_kutta_dopri5<State>());
  State state = u0;
  std::size_t steps = 0;
  try {
    steps = odeint::integrate_times(stepper, rhs, state, times.begin(),
                                    times.end(), -1e-3, observer);
  } catch (const std::exception &e) {
    throw SolverError(std::string("inward integration failed: ") + e.what());
  }
  for (const auto &v : sol.values)
    if (!std::isfinite(v[0].real()) || !std::isfinite(v[1].real()) ||
        !std::isfinite(v[0].imag()) || !std::isfinite(v[1].imag()))
      throw SolverError("inward integration produced non-finite values");

  ShootingResult res{};
  res.steps = static_cast<int>(steps);
  res.fit = fit_exponent(sol, {opt.window_lo * opt.r_min, opt.window_hi * opt.r_min});
  // |u| ~ r^a is square integrable at 0 iff a > -1/2.
  const double margin = res.fit.exponent + 0.5;
  if (std::abs(margin) <= opt.fit_margin)
    res.verdict = Integrability::Indeterminate;
  else
    res.verdict = margin > 0.0 ? Integrability::SquareIntegrable
                               : Integrability::NotSquareIntegrable;
  res.l2_integrable_at_zero = res.verdict == Integrability::SquareIntegrable;
  res.index_contribution = res.l2_integrable_at_zero ? 1 : 0;
  res.solution = std::move(sol);
  return res;
}

namespace {
std::vector<ShootingResult> sweep(const std::vector<DeficiencyTask> &tasks,
                                  const ShootingOptions &opt, bool parallel) {
  const int n = static_cast<int>(tasks.size());
  std::vector<ShootingResult> out(n);
  std::vector<std::exception_ptr> errors(n);
  auto one = [&](int i) {
    try {
      out[i] = deficiency_index_numeric(tasks[i].coupling, tasks[i].k,
                                        tasks[i].sign, opt);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i)
      one(i);
  } else {
    for (int i = 0; i < n; ++i)
      one(i);
  }
  for (const auto &e : errors)
    if (e)
      std::rethrow_exception(e);
  return out;
}
} // namespace

std::vector<ShootingResult> deficiency_sweep(const std::vector<DeficiencyTask> &tasks,
                                             const ShootingOptions &opt) {
  return sweep(tasks, opt, true);
}

namespace serial {
std::vector<ShootingResult> deficiency_sweep(const std::vector<DeficiencyTask> &tasks,
                                             const ShootingOptions &opt) {
  return sweep(tasks, opt, false);
}
} // namespace serial

} // namespace sectordirac
