#pragma once
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sectordirac {

inline constexpr double pi = 3.14159265358979323846;

// Bucket tolerance for the measure-zero cases delta = 0 and delta = 1/4.
inline constexpr double regime_tolerance = 1e-12;
// Distance to an integer below which the extension count is flagged.
inline constexpr double near_integer_tolerance = 1e-9;
inline constexpr int default_max_channels = 16;

//==============================================================================
//! Opening angle omega of the sector, Coulomb coupling nu and mass m.
struct SectorCoupling {
  double omega;
  double nu;
  double mass = 0.0;

  //! Throws DomainError unless 0 < omega <= 2 pi, mass >= 0, nu finite.
  void validate() const;
  static SectorCoupling make(double omega, double nu, double mass = 0.0);
};

enum class Regime {
  EssentiallySelfAdjointStrict,     // delta > 1/4
  EssentiallySelfAdjointBorderline, // delta = 1/4
  Subcritical,                      // 0 < delta < 1/4
  Critical,                         // delta = 0
  Supercritical                     // delta < 0
};

std::string_view to_string(Regime r);
bool is_essentially_self_adjoint(Regime r);

//! One partial-wave channel k: lambda_k, delta = lambda_k^2 - nu^2, regime.
struct ChannelClassification {
  int k;
  double lambda;
  double delta;
  Regime regime;

  bool essentially_self_adjoint() const {
    return is_essentially_self_adjoint(regime);
  }
};

enum class SelfAdjointness { EssentiallySelfAdjoint, ManyExtensions };
std::string_view to_string(SelfAdjointness c);

enum class DistinguishedKind {
  UniqueDistinguished,
  UniqueDistinguishedLogWeight,
  NoDistinguished,
  NotApplicable
};
std::string_view to_string(DistinguishedKind d);

struct DistinguishedReport {
  DistinguishedKind exists;
  //! Supremum of the admissible weight exponents a in |x|^{-a} (or the
  //! log-weighted variant); absent when no extension is singled out.
  std::optional<double> weight_exponent_sup;
};

struct GlobalClassification {
  SelfAdjointness self_adjointness;
  //! Largest non-essentially-self-adjoint channel; deficiency indices are d+1.
  std::optional<int> d;
  //! Real dimension (d+1)^2 of U(d+1), zero in the essentially self-adjoint case.
  int extension_family_real_dim;
  double hardy_constant;
  double kato_rellich_threshold;
  bool kato_rellich_applicable; // omega < pi
  DistinguishedReport distinguished;
  std::optional<double> sobolev_exponent_sup;
  //! (omega/pi) sqrt(nu^2 + 1/4) - 1/2, the quantity bounding k.
  double d_defining_quantity;
  bool d_near_integer_warning;
  std::vector<ChannelClassification> channels;
};

//! lambda_k = (2k+1) pi / (2 omega).
double lambda_of(double omega, int k);

ChannelClassification delta_of(const SectorCoupling &sc, int k);

//! Sharp Dirac-Hardy constant (pi - omega)^2 / (4 omega^2) on the sector.
double hardy_constant(double omega);

//! (pi - omega) / (2 omega); only meaningful as a Kato-Rellich bound when
//! omega < pi.
double kato_rellich_threshold(double omega);

//! Number of channels k with delta_k < 1/4, found by an upward scan.
int count_non_self_adjoint_channels(const SectorCoupling &sc);

DistinguishedReport distinguished_report(const SectorCoupling &sc);

GlobalClassification classify(const SectorCoupling &sc,
                              int max_channels = default_max_channels);

//! Text form of the essential spectrum of every self-adjoint extension.
std::string essential_spectrum_text(double mass);

} // namespace sectordirac
