#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "sectordirac/errors.hpp"
#include "sectordirac/params.hpp"

#include <cmath>

using namespace sectordirac;

TEST_CASE("lambda_of closed form") {
  CHECK(lambda_of(pi, 0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(lambda_of(pi / 2, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lambda_of(2 * pi, 1) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(lambda_of(1.0, 3) > lambda_of(1.0, 2));
  CHECK(lambda_of(1.0, 3) > lambda_of(1.1, 3));
  CHECK_THROWS_AS(lambda_of(0.0, 0), DomainError);
  CHECK_THROWS_AS(lambda_of(2 * pi + 1e-9, 0), DomainError);
  CHECK_THROWS_AS(lambda_of(-1.0, 0), DomainError);
  CHECK_THROWS_AS(lambda_of(1.0, -1), DomainError);
  CHECK_NOTHROW(lambda_of(2 * pi, 0));
}

TEST_CASE("SectorCoupling validation") {
  CHECK_THROWS_AS(SectorCoupling::make(1.0, 0.0, -0.1), DomainError);
  CHECK_THROWS_AS(SectorCoupling::make(1.0, NAN), DomainError);
  CHECK_THROWS_AS(SectorCoupling::make(7.0, 0.0), DomainError);
  CHECK_NOTHROW(SectorCoupling::make(2 * pi, -4.0, 1.0));
}

TEST_CASE("delta_of buckets") {
  SUBCASE("omega = 2pi, nu = 0: subcritical") {
    const auto c = delta_of({2 * pi, 0.0}, 0);
    CHECK(c.lambda == doctest::Approx(0.25));
    CHECK(c.delta == doctest::Approx(1.0 / 16));
    CHECK(c.regime == Regime::Subcritical);
  }
  SUBCASE("nu = lambda_0 is critical") {
    const auto c = delta_of({pi, 0.5}, 0);
    CHECK(c.delta == 0.0);
    CHECK(c.regime == Regime::Critical);
    // a value off by rounding still lands in the critical bucket
    CHECK(delta_of({3.14159265358979, 0.5}, 0).regime == Regime::Critical);
  }
  SUBCASE("omega = pi/2, nu = 0: strictly ESA") {
    const auto c = delta_of({pi / 2, 0.0}, 0);
    CHECK(c.delta == doctest::Approx(1.0));
    CHECK(c.regime == Regime::EssentiallySelfAdjointStrict);
  }
  SUBCASE("delta = 1/4 is borderline") {
    CHECK(delta_of({pi, 0.0}, 0).regime == Regime::EssentiallySelfAdjointBorderline);
  }
  SUBCASE("supercritical") {
    CHECK(delta_of({pi, 2.0}, 0).regime == Regime::Supercritical);
  }
  SUBCASE("brute-force bucket scan agrees") {
    for (double omega : {0.3, 1.0, pi / 2, pi, 4.0, 2 * pi})
      for (double nu : {0.0, 0.1, 0.37, 1.0, 2.5})
        for (int k = 0; k < 6; ++k) {
          const auto c = delta_of({omega, nu}, k);
          const double l = (2 * k + 1) * pi / (2 * omega);
          const double d = l * l - nu * nu;
          Regime expect = d > 0.25 + 1e-12   ? Regime::EssentiallySelfAdjointStrict
                          : d > 0.25 - 1e-12 ? Regime::EssentiallySelfAdjointBorderline
                          : d > 1e-12        ? Regime::Subcritical
                          : d > -1e-12       ? Regime::Critical
                                             : Regime::Supercritical;
          CHECK(c.regime == expect);
        }
  }
}

TEST_CASE("hardy_constant values") {
  CHECK(hardy_constant(pi) == 0.0);
  CHECK(hardy_constant(pi / 2) == doctest::Approx(0.25));
  CHECK(hardy_constant(2 * pi) == doctest::Approx(1.0 / 16));
  CHECK_THROWS_AS(hardy_constant(0.0), DomainError);
}

TEST_CASE("hardy constant never exceeds the k = 0 channel constant") {
  for (int i = 1; i <= 200; ++i) {
    const double omega = 2 * pi * i / 200.0;
    const double l0 = lambda_of(omega, 0);
    CHECK(hardy_constant(omega) <= (l0 - 0.5) * (l0 - 0.5) * (1 + 1e-14) + 1e-15);
    // and min over channels/signs of (lambda_k +/- 1/2)^2 is exactly it
    double mn = INFINITY;
    for (int k = 0; k < 50; ++k) {
      const double l = lambda_of(omega, k);
      mn = std::min({mn, (l - 0.5) * (l - 0.5), (l + 0.5) * (l + 0.5)});
    }
    CHECK(mn == doctest::Approx(hardy_constant(omega)).epsilon(1e-12));
  }
}

TEST_CASE("classify examples") {
  SUBCASE("omega = pi, nu = 0") {
    const auto g = classify({pi, 0.0});
    CHECK(g.self_adjointness == SelfAdjointness::EssentiallySelfAdjoint);
    CHECK_FALSE(g.d.has_value());
    CHECK(g.extension_family_real_dim == 0);
    CHECK(g.distinguished.exists == DistinguishedKind::NotApplicable);
    CHECK_FALSE(g.sobolev_exponent_sup.has_value());
  }
  SUBCASE("omega = 2pi, nu = 0") {
    const auto g = classify({2 * pi, 0.0});
    CHECK(g.self_adjointness == SelfAdjointness::ManyExtensions);
    REQUIRE(g.d.has_value());
    CHECK(*g.d == 0);
    CHECK(g.extension_family_real_dim == 1);
    CHECK(g.distinguished.exists == DistinguishedKind::UniqueDistinguished);
    CHECK(*g.distinguished.weight_exponent_sup == doctest::Approx(0.75));
    CHECK(*g.sobolev_exponent_sup == doctest::Approx(0.75));
    CHECK(g.hardy_constant == doctest::Approx(1.0 / 16));
    CHECK_FALSE(g.kato_rellich_applicable);
    CHECK(g.kato_rellich_threshold == doctest::Approx(-0.25));
  }
  SUBCASE("omega = pi, nu = 3") {
    const auto g = classify({pi, 3.0});
    CHECK(*g.d == 2);
    CHECK(g.extension_family_real_dim == 9);
    CHECK(g.d_defining_quantity == doctest::Approx(std::sqrt(9.25) - 0.5));
    CHECK(g.distinguished.exists == DistinguishedKind::NoDistinguished);
    CHECK(*g.sobolev_exponent_sup == 0.5);
  }
  SUBCASE("channel table length and argument checks") {
    CHECK(classify({1.0, 0.2}, 5).channels.size() == 5);
    CHECK_THROWS_AS(classify({1.0, 0.2}, 0), DomainError);
  }
  SUBCASE("near-integer warning") {
    // (omega/pi) sqrt(nu^2 + 1/4) - 1/2 = 1 exactly when omega = pi, nu^2 = 2
    const auto g = classify({pi, std::sqrt(2.0)});
    CHECK(g.d_near_integer_warning);
    CHECK(*g.d == 0);
  }
}

TEST_CASE("classify matches the brute-force k-scan on a lattice") {
  for (int i = 1; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j) {
      const double omega = 2 * pi * i / 40.0;
      const double nu = 0.137 * j;
      const auto g = classify({omega, nu});
      if (g.d_near_integer_warning)
        continue;
      const int d = oracle::brute_force_d(omega, nu);
      CHECK(g.d.value_or(-1) == d);
      CHECK((g.self_adjointness == SelfAdjointness::EssentiallySelfAdjoint) ==
            (d < 0));
      // case (ii) iff channel 0 is non-ESA iff delta_0 < 1/4
      CHECK((g.self_adjointness == SelfAdjointness::ManyExtensions) ==
            !g.channels[0].essentially_self_adjoint());
    }
}

TEST_CASE("d is monotone in |nu| and omega") {
  for (int i = 1; i <= 24; ++i) {
    const double omega = 2 * pi * i / 24.0;
    int prev = -1;
    for (int j = 0; j <= 60; ++j) {
      const auto g = classify({omega, 0.1 * j});
      const int d = g.d.value_or(-1);
      CHECK(d >= prev);
      prev = d;
      CHECK(classify({omega, -0.1 * j}).d.value_or(-1) == d);
    }
  }
  for (double nu : {0.3, 1.0, 2.7}) {
    int prev = -1;
    for (int i = 1; i <= 100; ++i) {
      const int d = classify({2 * pi * i / 100.0, nu}).d.value_or(-1);
      CHECK(d >= prev);
      prev = d;
    }
  }
}

TEST_CASE("threshold boundary belongs to the essentially self-adjoint case") {
  for (double omega : {0.5, 1.0, 2.0, 3.0}) {
    const double nu = std::sqrt((pi * pi - omega * omega) / (4 * omega * omega));
    const auto g = classify({omega, nu});
    CHECK(g.self_adjointness == SelfAdjointness::EssentiallySelfAdjoint);
    CHECK(g.channels[0].regime == Regime::EssentiallySelfAdjointBorderline);
    CHECK(classify({omega, nu * (1 + 1e-6)}).self_adjointness ==
          SelfAdjointness::ManyExtensions);
  }
}

TEST_CASE("distinguished buckets at omega = pi") {
  CHECK(distinguished_report({pi, 0.3}).exists == DistinguishedKind::UniqueDistinguished);
  CHECK(distinguished_report({pi, 0.5}).exists ==
        DistinguishedKind::UniqueDistinguishedLogWeight);
  CHECK(distinguished_report({pi, 0.7}).exists == DistinguishedKind::NoDistinguished);
  CHECK(*distinguished_report({pi, 0.3}).weight_exponent_sup ==
        doctest::Approx(0.5 + std::sqrt(0.25 - 0.09)));
}

TEST_CASE("essential spectrum text") {
  CHECK(essential_spectrum_text(0.0) == "(-inf, 0] U [0, +inf)");
  CHECK(essential_spectrum_text(1.5) == "(-inf, -1.5] U [1.5, +inf)");
}
