#pragma once
#include <stdexcept>
#include <string>

namespace sectordirac {

//! Parameter outside its admissible range (angle, mass, theta, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

//! Operation requested in a channel regime where it is undefined.
class RegimeError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

//! Grid or quadrature too coarse for the requested quantity.
class ResolutionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Eigensolver or integrator failure.
class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! The channelwise action only diagonalises the massless operator.
class MassError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace sectordirac
