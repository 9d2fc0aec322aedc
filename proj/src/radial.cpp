#include "sectordirac/radial.hpp"
#include "sectordirac/errors.hpp"

#include <cmath>
#include <string>

namespace sectordirac {

const Mat2 &BoundaryModel::boundary_matrix() const {
  if (!matrix)
    throw RegimeError("channel " + std::to_string(channel.k) +
                      " is essentially self-adjoint; no boundary model");
  return *matrix;
}

BoundaryModel boundary_model(const SectorCoupling &sc, int k) {
  BoundaryModel bm{};
  bm.channel = delta_of(sc, k);
  const double lambda = bm.channel.lambda;
  const double delta = bm.channel.delta;
  const double nu = sc.nu;

  switch (bm.channel.regime) {
  case Regime::Critical:
    bm.root = 0.0;
    break;
  case Regime::Supercritical:
    bm.root = I * std::sqrt(-delta);
    break;
  default:
    bm.root = std::sqrt(delta);
    break;
  }
  bm.lambda_tilde = bm.root;

  const cplx c = lambda + bm.lambda_tilde;
  bm.m1 = {{{nu, c}, {c, nu}}};
  bm.m2 = {{{-nu, c}, {c, -nu}}};

  switch (bm.channel.regime) {
  case Regime::Subcritical:
  case Regime::Supercritical: {
    // P and R share one form with root = sqrt(delta) or i sqrt(-delta).
    const cplx s = bm.root;
    const cplx pre = 1.0 / (2.0 * s * (-lambda - s));
    bm.matrix = Mat2{{{pre * (-lambda - s), pre * nu},
                      {pre * (-nu), pre * (lambda + s)}}};
    break;
  }
  case Regime::Critical:
    bm.matrix = Mat2{{{lambda, -nu}, {nu, -lambda}}};
    break;
  default:
    break;
  }
  return bm;
}

double cutoff_chi(double r) {
  if (r <= 1.0)
    return 1.0;
  if (r >= 2.0)
    return 0.0;
  auto bump = [](double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; };
  const double t = r - 1.0;
  const double a = bump(1.0 - t);
  return a / (a + bump(t));
}

namespace {

Spinor model_column(const BoundaryModel &bm, double alpha, double r) {
  const Mat2 &m = bm.boundary_matrix();
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  if (bm.channel.regime == Regime::Critical) {
    const double lr = std::log(r);
    const Mat2 shaped{{{m[0][0] * lr + 1.0, m[0][1] * lr},
                       {m[1][0] * lr, m[1][1] * lr + 1.0}}};
    return shaped * Spinor{ca, sa};
  }
  const cplx up = std::exp(bm.root * std::log(r));
  const cplx down = std::exp(-bm.root * std::log(r));
  return m * Spinor{ca * up, sa * down};
}

template <class Body> void for_nodes(int n, bool parallel, Body &&body) {
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i)
      body(i);
  } else {
    for (int i = 0; i < n; ++i)
      body(i);
  }
}

struct Derivs {
  std::vector<cplx> d1, d2;
};

Derivs component_derivatives(const RadialSample &u, StencilOrder order) {
  const int n = u.size();
  std::vector<cplx> c1(n), c2(n);
  for (int i = 0; i < n; ++i) {
    c1[i] = u.values[i][0];
    c2[i] = u.values[i][1];
  }
  const double h = u.grid->step();
  return {derivative_s(c1, h, order), derivative_s(c2, h, order)};
}

RadialSample apply_d_impl(const RadialExpression &e, const RadialSample &u,
                          StencilOrder order, bool parallel) {
  const Derivs d = component_derivatives(u, order);
  RadialSample out = RadialSample::zeros(u.grid);
  const auto &r = u.grid->nodes();
  for_nodes(u.size(), parallel, [&](int i) {
    const Spinor &v = u.values[i];
    const double inv_r = 1.0 / r[i];
    // d/dr = (1/r) d/ds
    out.values[i] = {inv_r * (e.nu * v[0] - d.d2[i] - e.lambda * v[1]),
                     inv_r * (d.d1[i] - e.lambda * v[0] + e.nu * v[1])};
  });
  return out;
}

RadialSample transform(const Mat2 &m, const RadialSample &u) {
  RadialSample out = RadialSample::zeros(u.grid);
  for (int i = 0; i < u.size(); ++i)
    out.values[i] = m * u.values[i];
  return out;
}

} // namespace

RadialSample apply_d(const RadialExpression &expr, const RadialSample &u,
                     StencilOrder order) {
  return apply_d_impl(expr, u, order, true);
}

namespace serial {
RadialSample apply_d(const RadialExpression &expr, const RadialSample &u,
                     StencilOrder order) {
  return apply_d_impl(expr, u, order, false);
}
} // namespace serial

RadialSample apply_d_tilde(cplx lt, const RadialSample &u, StencilOrder order) {
  const Derivs d = component_derivatives(u, order);
  RadialSample out = RadialSample::zeros(u.grid);
  const auto &r = u.grid->nodes();
  for_nodes(u.size(), true, [&](int i) {
    const Spinor &v = u.values[i];
    const double inv_r = 1.0 / r[i];
    out.values[i] = {inv_r * (d.d2[i] - lt * v[1]),
                     inv_r * (-d.d1[i] - lt * v[0])};
  });
  return out;
}

Spinor eval_u_alpha(const BoundaryModel &bm, double alpha, double r) {
  if (!(r > 0.0))
    throw DomainError("u_alpha needs r > 0");
  const double chi = cutoff_chi(r);
  if (chi == 0.0) {
    bm.boundary_matrix(); // regime check still applies
    return {0.0, 0.0};
  }
  return cplx(chi) * model_column(bm, alpha, r);
}

Spinor eval_u_alpha(const SectorCoupling &sc, int k, double alpha, double r) {
  return eval_u_alpha(boundary_model(sc, k), alpha, r);
}

RadialSample sample_u_alpha(const SectorCoupling &sc, int k, double alpha,
                            GridPtr grid) {
  const BoundaryModel bm = boundary_model(sc, k);
  RadialSample u = RadialSample::zeros(grid);
  for (int i = 0; i < u.size(); ++i)
    u.values[i] = eval_u_alpha(bm, alpha, (*grid)[i]);
  return u;
}

double zero_mode_residual(const SectorCoupling &sc, int k, double alpha,
                          GridPtr grid, StencilOrder order) {
  if (grid->r_max() > 1.0)
    throw DomainError("zero-mode grid must lie inside (0, 1]");
  const BoundaryModel bm = boundary_model(sc, k);
  const RadialSample u = sample_u_alpha(sc, k, alpha, grid);
  const RadialSample du = apply_d({sc.nu, bm.channel.lambda}, u, order);
  const int skip = boundary_width(order);
  double num = 0.0, den = 0.0;
  for (int i = 0; i < u.size(); ++i) {
    den = std::max(den, norm(u.values[i]));
    if (i < skip || i >= u.size() - skip)
      continue;
    num = std::max(num, (*grid)[i] * norm(du.values[i]));
  }
  return num / den;
}

double intertwining_residual(const SectorCoupling &sc, int k,
                             const RadialSample &u, StencilOrder order) {
  const BoundaryModel bm = boundary_model(sc, k);
  const RadialSample lhs =
      transform(bm.m1, apply_d({sc.nu, bm.channel.lambda}, u, order));
  const RadialSample rhs =
      apply_d_tilde(bm.lambda_tilde, transform(bm.m2, u), order);
  double res = 0.0;
  for (int i = 0; i < u.size(); ++i)
    res = std::max(res, norm(lhs.values[i] - rhs.values[i]));
  return res;
}

} // namespace sectordirac
