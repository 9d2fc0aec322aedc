#pragma once
#include "sectordirac/partial_wave.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace sectordirac {

//! Malformed CSV input; carries the 1-based row and column.
class CsvError : public std::runtime_error {
public:
  CsvError(const std::string &msg, int row, int column);
  int row() const { return row_; }
  int column() const { return column_; }

private:
  int row_, column_;
};

inline constexpr const char *radial_csv_header = "r,re_u1,im_u1,re_u2,im_u2";
inline constexpr const char *polar_csv_header =
    "r,theta,re_psi1,im_psi1,re_psi2,im_psi2";

//! Shortest round-trip decimal form.
std::string format_double(double x);

void write_radial_csv(std::ostream &os, const RadialSample &u);
//! Rows must be strictly increasing in r and form a geometric progression.
RadialSample read_radial_csv(std::istream &is);

void write_polar_csv(std::ostream &os, const PolarField &f);
//! Row-major (r, theta) tensor grid, theta fastest; theta spans [0, omega]
//! where omega is the last theta value.
PolarField read_polar_csv(std::istream &is);

} // namespace sectordirac
