#include "sectordirac/partial_wave.hpp"
#include "sectordirac/errors.hpp"
#include "sectordirac/radial.hpp"

#include <cmath>

namespace sectordirac {

PolarField PolarField::zeros(GridPtr r_grid, AngularGrid theta_grid) {
  const std::size_t n = static_cast<std::size_t>(r_grid->size()) * theta_grid.size();
  return {std::move(r_grid), std::move(theta_grid), std::vector<Spinor>(n)};
}

ChannelCoefficients ChannelCoefficients::zeros(double omega, GridPtr grid, int K) {
  ChannelCoefficients c{omega, grid, {}, 0.0};
  c.channels.assign(K, RadialSample::zeros(grid));
  return c;
}

namespace {

// Mode samples on the theta nodes: modes[2k + s][j] with s = 0 for "+".
struct ModeTable {
  std::vector<std::vector<Spinor>> modes;
};

ModeTable tabulate(double omega, int K, const AngularGrid &g) {
  ModeTable t;
  t.modes.resize(2 * K);
  for (int k = 0; k < K; ++k)
    for (int s = 0; s < 2; ++s) {
      const auto mode = AngularMode::make(k, s == 0 ? Sign::Plus : Sign::Minus, omega);
      auto &col = t.modes[2 * k + s];
      col.reserve(g.size());
      for (double th : g.nodes)
        col.push_back(eval_mode(mode, th));
    }
  return t;
}

ChannelCoefficients decompose_impl(const PolarField &f, int K, bool parallel) {
  require_resolution(f.theta_grid, K);
  const double omega = f.theta_grid.omega;
  const ModeTable t = tabulate(omega, K, f.theta_grid);
  ChannelCoefficients c = ChannelCoefficients::zeros(omega, f.r_grid, K);
  const int nr = f.nr(), nt = f.ntheta();
  const auto &w = f.theta_grid.weights;
  const auto &r = f.r_grid->nodes();

  auto row = [&](int i) {
    const double sr = std::sqrt(r[i]);
    for (int k = 0; k < K; ++k) {
      cplx up = 0.0, um = 0.0;
      for (int j = 0; j < nt; ++j) {
        const Spinor &psi = f.at(i, j);
        up += w[j] * inner(t.modes[2 * k][j], psi);
        um += w[j] * inner(t.modes[2 * k + 1][j], psi);
      }
      c.channels[k].values[i] = {sr * up, sr * um};
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < nr; ++i)
      row(i);
  } else {
    for (int i = 0; i < nr; ++i)
      row(i);
  }
  c.tail_energy = field_norm2(f) - channel_norm2(c);
  return c;
}

PolarField reconstruct_impl(const ChannelCoefficients &c, const AngularGrid &g,
                            bool parallel) {
  if (std::abs(g.omega - c.omega) > 1e-14 * c.omega)
    throw DomainError("theta grid omega does not match the coefficients");
  const int K = c.channel_count();
  require_resolution(g, K);
  const ModeTable t = tabulate(c.omega, K, g);
  PolarField f = PolarField::zeros(c.grid, g);
  const int nr = f.nr(), nt = f.ntheta();
  const auto &r = c.grid->nodes();

  auto row = [&](int i) {
    const double inv_sr = 1.0 / std::sqrt(r[i]);
    for (int j = 0; j < nt; ++j) {
      Spinor psi{};
      for (int k = 0; k < K; ++k) {
        const Spinor &u = c.channels[k].values[i];
        psi = psi + u[0] * t.modes[2 * k][j] + u[1] * t.modes[2 * k + 1][j];
      }
      f.at(i, j) = cplx(inv_sr) * psi;
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < nr; ++i)
      row(i);
  } else {
    for (int i = 0; i < nr; ++i)
      row(i);
  }
  return f;
}

} // namespace

ChannelCoefficients decompose(const PolarField &field, int K) {
  return decompose_impl(field, K, true);
}
PolarField reconstruct(const ChannelCoefficients &coeffs, const AngularGrid &g) {
  return reconstruct_impl(coeffs, g, true);
}

namespace serial {
ChannelCoefficients decompose(const PolarField &field, int K) {
  return decompose_impl(field, K, false);
}
PolarField reconstruct(const ChannelCoefficients &coeffs, const AngularGrid &g) {
  return reconstruct_impl(coeffs, g, false);
}
} // namespace serial

ChannelCoefficients apply_operator_channelwise(const ChannelCoefficients &c,
                                               const SectorCoupling &sc,
                                               StencilOrder order) {
  sc.validate();
  if (sc.mass != 0.0)
    throw MassError("channelwise action requires mass = 0; the mass term "
                    "couples partial waves");
  if (std::abs(sc.omega - c.omega) > 1e-14 * c.omega)
    throw DomainError("coupling omega does not match the coefficients");
  ChannelCoefficients out = ChannelCoefficients::zeros(c.omega, c.grid, c.channel_count());
  out.tail_energy = 0.0;
  for (int k = 0; k < c.channel_count(); ++k)
    out.channels[k] = apply_d({sc.nu, lambda_of(c.omega, k)}, c.channels[k], order);
  return out;
}

double field_norm2(const PolarField &f) {
  const auto wr = f.r_grid->dr_weights();
  const auto &r = f.r_grid->nodes();
  const auto &wt = f.theta_grid.weights;
  double total = 0.0;
  for (int i = 0; i < f.nr(); ++i) {
    double ring = 0.0;
    for (int j = 0; j < f.ntheta(); ++j)
      ring += wt[j] * norm2(f.at(i, j));
    total += wr[i] * r[i] * ring;
  }
  return total;
}

double channel_norm2(const ChannelCoefficients &c) {
  const auto w = c.grid->dr_weights();
  double total = 0.0;
  for (const auto &u : c.channels)
    for (int i = 0; i < u.size(); ++i)
      total += w[i] * norm2(u.values[i]);
  return total;
}

double edge_condition_residual(const PolarField &f) {
  const cplx phase = std::exp(I * f.theta_grid.omega);
  const int last = f.ntheta() - 1;
  double res = 0.0;
  for (int i = 0; i < f.nr(); ++i) {
    const Spinor &a = f.at(i, 0);
    const Spinor &b = f.at(i, last);
    res = std::max({res, std::abs(a[0] - a[1]), std::abs(b[1] + phase * b[0])});
  }
  return res;
}

} // namespace sectordirac
