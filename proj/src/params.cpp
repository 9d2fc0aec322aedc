#include "sectordirac/params.hpp"
#include "sectordirac/errors.hpp"

#include <cmath>
#include <sstream>

namespace sectordirac {

void SectorCoupling::validate() const {
  if (!std::isfinite(omega) || !(omega > 0.0) || omega > 2.0 * pi)
    throw DomainError("omega must lie in (0, 2pi]");
  if (!std::isfinite(nu))
    throw DomainError("nu must be finite");
  if (!std::isfinite(mass) || mass < 0.0)
    throw DomainError("mass must be finite and >= 0");
}

SectorCoupling SectorCoupling::make(double omega, double nu, double mass) {
  SectorCoupling sc{omega, nu, mass};
  sc.validate();
  return sc;
}

std::string_view to_string(Regime r) {
  switch (r) {
  case Regime::EssentiallySelfAdjointStrict:
    return "EssentiallySelfAdjointStrict";
  case Regime::EssentiallySelfAdjointBorderline:
    return "EssentiallySelfAdjointBorderline";
  case Regime::Subcritical:
    return "Subcritical";
  case Regime::Critical:
    return "Critical";
  case Regime::Supercritical:
    return "Supercritical";
  }
  return "?";
}

bool is_essentially_self_adjoint(Regime r) {
  return r == Regime::EssentiallySelfAdjointStrict ||
         r == Regime::EssentiallySelfAdjointBorderline;
}

std::string_view to_string(SelfAdjointness c) {
  return c == SelfAdjointness::EssentiallySelfAdjoint ? "EssentiallySelfAdjoint"
                                                      : "ManyExtensions";
}

std::string_view to_string(DistinguishedKind d) {
  switch (d) {
  case DistinguishedKind::UniqueDistinguished:
    return "UniqueDistinguished";
  case DistinguishedKind::UniqueDistinguishedLogWeight:
    return "UniqueDistinguishedLogWeight";
  case DistinguishedKind::NoDistinguished:
    return "NoDistinguished";
  case DistinguishedKind::NotApplicable:
    return "NotApplicable";
  }
  return "?";
}

namespace {
void check_omega(double omega) {
  if (!std::isfinite(omega) || !(omega > 0.0) || omega > 2.0 * pi)
    throw DomainError("omega must lie in (0, 2pi]");
}

Regime bucket(double delta) {
  if (std::abs(delta) < regime_tolerance)
    return Regime::Critical;
  if (std::abs(delta - 0.25) < regime_tolerance)
    return Regime::EssentiallySelfAdjointBorderline;
  if (delta > 0.25)
    return Regime::EssentiallySelfAdjointStrict;
  if (delta > 0.0)
    return Regime::Subcritical;
  return Regime::Supercritical;
}
} // namespace

double lambda_of(double omega, int k) {
  check_omega(omega);
  if (k < 0)
    throw DomainError("channel index k must be >= 0");
  return (2.0 * k + 1.0) * pi / (2.0 * omega);
}

ChannelClassification delta_of(const SectorCoupling &sc, int k) {
  sc.validate();
  const double lambda = lambda_of(sc.omega, k);
  const double delta = lambda * lambda - sc.nu * sc.nu;
  return {k, lambda, delta, bucket(delta)};
}

double hardy_constant(double omega) {
  check_omega(omega);
  const double t = pi - omega;
  return t * t / (4.0 * omega * omega);
}

double kato_rellich_threshold(double omega) {
  check_omega(omega);
  return (pi - omega) / (2.0 * omega);
}

int count_non_self_adjoint_channels(const SectorCoupling &sc) {
  sc.validate();
  // lambda_k grows with k, so the non-ESA set {k : delta_k < 1/4} is an
  // initial segment.
  int count = 0;
  while (!delta_of(sc, count).essentially_self_adjoint())
    ++count;
  return count;
}

DistinguishedReport distinguished_report(const SectorCoupling &sc) {
  const auto ch0 = delta_of(sc, 0);
  if (ch0.essentially_self_adjoint())
    return {DistinguishedKind::NotApplicable, std::nullopt};
  switch (ch0.regime) {
  case Regime::Subcritical:
    return {DistinguishedKind::UniqueDistinguished, 0.5 + std::sqrt(ch0.delta)};
  case Regime::Critical:
    return {DistinguishedKind::UniqueDistinguishedLogWeight, 0.5};
  default:
    return {DistinguishedKind::NoDistinguished, std::nullopt};
  }
}

GlobalClassification classify(const SectorCoupling &sc, int max_channels) {
  sc.validate();
  if (max_channels < 1)
    throw DomainError("max_channels must be >= 1");

  GlobalClassification g{};
  g.hardy_constant = hardy_constant(sc.omega);
  g.kato_rellich_threshold = kato_rellich_threshold(sc.omega);
  g.kato_rellich_applicable = sc.omega < pi;

  g.d_defining_quantity =
      sc.omega / pi * std::sqrt(sc.nu * sc.nu + 0.25) - 0.5;
  g.d_near_integer_warning =
      std::abs(g.d_defining_quantity - std::round(g.d_defining_quantity)) <
      near_integer_tolerance;

  const int non_esa = count_non_self_adjoint_channels(sc);
  if (non_esa == 0) {
    g.self_adjointness = SelfAdjointness::EssentiallySelfAdjoint;
    g.extension_family_real_dim = 0;
  } else {
    g.self_adjointness = SelfAdjointness::ManyExtensions;
    g.d = non_esa - 1;
    g.extension_family_real_dim = non_esa * non_esa;
  }

  g.distinguished = distinguished_report(sc);
  if (g.self_adjointness == SelfAdjointness::ManyExtensions) {
    const double lambda0 = lambda_of(sc.omega, 0);
    const double gap = lambda0 * lambda0 - sc.nu * sc.nu;
    g.sobolev_exponent_sup =
        gap > regime_tolerance ? 0.5 + std::sqrt(gap) : 0.5;
  }

  g.channels.reserve(max_channels);
  for (int k = 0; k < max_channels; ++k)
    g.channels.push_back(delta_of(sc, k));
  return g;
}

std::string essential_spectrum_text(double mass) {
  std::ostringstream os;
  os.precision(17);
  const double lower = mass == 0.0 ? 0.0 : -mass;
  os << "(-inf, " << lower << "] U [" << mass << ", +inf)";
  return os.str();
}

} // namespace sectordirac
