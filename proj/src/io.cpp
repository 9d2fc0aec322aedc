#include "sectordirac/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string_view>

namespace sectordirac {

CsvError::CsvError(const std::string &msg, int row, int column)
    : std::runtime_error("row " + std::to_string(row) + ", column " +
                         std::to_string(column) + ": " + msg),
      row_(row), column_(column) {}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

constexpr double geometric_tolerance = 1e-9;

std::string strip(std::string line) {
  if (!line.empty() && line.back() == '\r')
    line.pop_back();
  return line;
}

std::vector<double> parse_row(const std::string &line, int row, std::size_t columns) {
  std::vector<double> out;
  std::string_view rest(line);
  for (std::size_t col = 1;; ++col) {
    const auto comma = rest.find(',');
    const std::string_view cell = rest.substr(0, comma);
    double v = 0.0;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (cell.empty() || res.ec != std::errc() || res.ptr != cell.data() + cell.size() ||
        !std::isfinite(v))
      throw CsvError("not a finite number: '" + std::string(cell) + "'", row,
                     static_cast<int>(col));
    out.push_back(v);
    if (comma == std::string_view::npos)
      break;
    rest.remove_prefix(comma + 1);
  }
  if (out.size() != columns)
    throw CsvError("expected " + std::to_string(columns) + " columns, got " +
                       std::to_string(out.size()),
                   row, static_cast<int>(std::min(out.size(), columns) + 1));
  return out;
}

void expect_header(std::istream &is, const char *header) {
  std::string line;
  if (!std::getline(is, line) || strip(line) != header)
    throw CsvError(std::string("expected header '") + header + "'", 1, 1);
}

// Rebuild a LogGrid from explicit nodes, insisting on a geometric progression.
GridPtr grid_from_nodes(const std::vector<double> &r, const std::vector<int> &rows) {
  const int n = static_cast<int>(r.size());
  if (n < 16)
    throw CsvError("need at least 16 radial nodes", rows.empty() ? 1 : rows.back(), 1);
  for (int i = 0; i < n; ++i) {
    if (!(r[i] > 0.0))
      throw CsvError("r must be positive", rows[i], 1);
    if (i > 0 && !(r[i] > r[i - 1]))
      throw CsvError("r must be strictly increasing", rows[i], 1);
  }
  auto g = make_grid(r.front(), r.back(), n);
  for (int i = 0; i < n; ++i)
    if (std::abs((*g)[i] - r[i]) > geometric_tolerance * r[i])
      throw CsvError("r nodes are not a geometric progression", rows[i], 1);
  return g;
}

} // namespace

void write_radial_csv(std::ostream &os, const RadialSample &u) {
  os << radial_csv_header << '\n';
  for (int i = 0; i < u.size(); ++i) {
    const Spinor &v = u.values[i];
    os << format_double((*u.grid)[i]) << ',' << format_double(v[0].real()) << ','
       << format_double(v[0].imag()) << ',' << format_double(v[1].real()) << ','
       << format_double(v[1].imag()) << '\n';
  }
}

RadialSample read_radial_csv(std::istream &is) {
  expect_header(is, radial_csv_header);
  std::vector<double> r;
  std::vector<int> rows;
  std::vector<Spinor> vals;
  std::string line;
  int row = 1;
  while (std::getline(is, line)) {
    ++row;
    line = strip(line);
    if (line.empty())
      continue;
    const auto v = parse_row(line, row, 5);
    r.push_back(v[0]);
    rows.push_back(row);
    vals.push_back({cplx(v[1], v[2]), cplx(v[3], v[4])});
  }
  return {grid_from_nodes(r, rows), std::move(vals)};
}

void write_polar_csv(std::ostream &os, const PolarField &f) {
  os << polar_csv_header << '\n';
  for (int i = 0; i < f.nr(); ++i)
    for (int j = 0; j < f.ntheta(); ++j) {
      const Spinor &v = f.at(i, j);
      os << format_double((*f.r_grid)[i]) << ','
         << format_double(f.theta_grid.nodes[j]) << ','
         << format_double(v[0].real()) << ',' << format_double(v[0].imag()) << ','
         << format_double(v[1].real()) << ',' << format_double(v[1].imag()) << '\n';
    }
}

PolarField read_polar_csv(std::istream &is) {
  expect_header(is, polar_csv_header);
  struct Row {
    std::vector<double> v;
    int line;
  };
  std::vector<Row> data;
  std::string line;
  int row = 1;
  while (std::getline(is, line)) {
    ++row;
    line = strip(line);
    if (line.empty())
      continue;
    data.push_back({parse_row(line, row, 6), row});
  }
  if (data.empty())
    throw CsvError("no data rows", row, 1);

  // theta runs fastest: the first block shares the first r value.
  std::size_t nt = 0;
  while (nt < data.size() && data[nt].v[0] == data[0].v[0])
    ++nt;
  if (data.size() % nt != 0)
    throw CsvError("row count is not a multiple of the theta block size " +
                       std::to_string(nt),
                   data.back().line, 1);
  const std::size_t nr = data.size() / nt;

  std::vector<double> theta(nt);
  for (std::size_t j = 0; j < nt; ++j)
    theta[j] = data[j].v[1];
  std::vector<double> r(nr);
  std::vector<int> rows(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    r[i] = data[i * nt].v[0];
    rows[i] = data[i * nt].line;
    for (std::size_t j = 0; j < nt; ++j) {
      const Row &d = data[i * nt + j];
      if (d.v[0] != r[i])
        throw CsvError("r changes inside a theta block", d.line, 1);
      if (d.v[1] != theta[j])
        throw CsvError("theta nodes differ between blocks", d.line, 2);
    }
  }
  for (std::size_t j = 1; j < nt; ++j)
    if (!(theta[j] > theta[j - 1]))
      throw CsvError("theta must be strictly increasing", data[j].line, 2);
  if (nt < 2 || theta.front() != 0.0)
    throw CsvError("theta nodes must start at 0", data[0].line, 2);

  const double omega = theta.back();
  AngularGrid tg;
  try {
    tg = AngularGrid::from_nodes(omega, theta);
  } catch (const std::exception &e) {
    throw CsvError(e.what(), data[nt - 1].line, 2);
  }
  PolarField f = PolarField::zeros(grid_from_nodes(r, rows), std::move(tg));
  for (std::size_t k = 0; k < data.size(); ++k) {
    const auto &v = data[k].v;
    f.values[k] = {cplx(v[2], v[3]), cplx(v[4], v[5])};
  }
  return f;
}

} // namespace sectordirac
