#include "sectordirac/cli.hpp"
#include "sectordirac/angular.hpp"
#include "sectordirac/errors.hpp"
#include "sectordirac/hardy.hpp"
#include "sectordirac/io.hpp"
#include "sectordirac/params.hpp"
#include "sectordirac/partial_wave.hpp"
#include "sectordirac/radial.hpp"
#include "sectordirac/shooting.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

namespace sectordirac::cli {

using json = nlohmann::ordered_json;

namespace {

struct Flags {
  double omega = 0.0;
  double nu = 0.0;
  double mass = 0.0;
  int k = 0;
  double alpha = 0.0;
  int channels = 0;
  int max_channels = default_max_channels;
  std::optional<double> grid_min, grid_max;
  std::optional<int> grid_n;
  std::optional<int> theta_n;
  std::string input, output;
  bool degrees = false;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};
class Indeterminate : public std::runtime_error {
public:
  Indeterminate(const std::string &msg, json report)
      : std::runtime_error(msg), report(std::move(report)) {}
  json report;
};

json envelope(const std::string &command, json parameters) {
  json j;
  j["command"] = command;
  j["parameters"] = std::move(parameters);
  j["results"] = json::object();
  j["diagnostics"] = json::array();
  j["schema_version"] = schema_version;
  return j;
}

json opt(const std::optional<double> &v) { return v ? json(*v) : json(nullptr); }

double to_radians(double x, bool degrees) { return degrees ? x * pi / 180.0 : x; }

// Decimal renderings of 2 pi such as 6.28318530717959 overshoot the double
// 2 pi by a few ulps; values that close are taken to mean the full plane.
double omega_of(const Flags &f) {
  const double omega = to_radians(f.omega, f.degrees);
  return omega > 2 * pi && omega <= 2 * pi * (1 + 1e-12) ? 2 * pi : omega;
}

SectorCoupling coupling(const Flags &f) {
  return SectorCoupling::make(omega_of(f), f.nu, f.mass);
}

json channel_json(const ChannelClassification &c) {
  json j;
  j["k"] = c.k;
  j["lambda"] = c.lambda;
  j["delta"] = c.delta;
  j["regime"] = std::string(to_string(c.regime));
  j["deficiency_analytic"] = c.essentially_self_adjoint() ? 0 : 1;
  return j;
}

std::ofstream open_output(const std::string &path) {
  std::ofstream os(path);
  if (!os)
    throw UsageError("cannot open output file '" + path + "'");
  return os;
}

//------------------------------------------------------------------------------
json cmd_classify(const Flags &f) {
  const SectorCoupling sc = coupling(f);
  json j = envelope("classify", {{"omega", sc.omega},
                                 {"nu", sc.nu},
                                 {"mass", sc.mass},
                                 {"max_channels", f.max_channels}});
  const GlobalClassification g = classify(sc, f.max_channels);
  json &r = j["results"];
  r["case"] = std::string(to_string(g.self_adjointness));
  r["threshold_nu_squared"] =
      (pi * pi - sc.omega * sc.omega) / (4.0 * sc.omega * sc.omega);
  r["d"] = g.d ? json(*g.d) : json(nullptr);
  r["deficiency_indices"] = g.d ? *g.d + 1 : 0;
  r["extension_family"] = g.d ? "U(" + std::to_string(*g.d + 1) + ")" : "none";
  r["extension_family_real_dim"] = g.extension_family_real_dim;
  r["d_defining_quantity"] = g.d_defining_quantity;
  r["hardy_constant"] = g.hardy_constant;
  r["kato_rellich_threshold"] = g.kato_rellich_threshold;
  r["kato_rellich_applicable"] = g.kato_rellich_applicable;
  r["distinguished"] = {
      {"exists", std::string(to_string(g.distinguished.exists))},
      {"weight_exponent_sup", opt(g.distinguished.weight_exponent_sup)}};
  r["sobolev_exponent_sup"] = opt(g.sobolev_exponent_sup);
  r["essential_spectrum"] = essential_spectrum_text(sc.mass);
  json table = json::array();
  for (const auto &c : g.channels)
    table.push_back(channel_json(c));
  r["channels"] = std::move(table);
  if (g.d_near_integer_warning)
    j["diagnostics"].push_back("d_defining_quantity is within 1e-9 of an integer");
  if (!g.kato_rellich_applicable)
    j["diagnostics"].push_back("Kato-Rellich threshold inapplicable for omega >= pi");
  return j;
}

//------------------------------------------------------------------------------
json cmd_hardy(const Flags &f) {
  const double omega = omega_of(f);
  SectorCoupling{omega, 0.0}.validate();
  const LogGrid def = LogGrid::default_hardy();
  const LogGrid grid(f.grid_min.value_or(def.r_min()), f.grid_max.value_or(def.r_max()),
                     f.grid_n.value_or(def.size()));
  const int channels = f.channels > 0 ? f.channels : 1;
  json j = envelope("hardy", {{"omega", omega},
                              {"channels", channels},
                              {"grid_min", grid.r_min()},
                              {"grid_max", grid.r_max()},
                              {"grid_n", grid.size()}});
  json rows = json::array();
  double global_numeric = INFINITY;
  std::string csv = "k,sign,analytic,numeric,relative_gap\n";
  for (int k = 0; k < channels; ++k)
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const QuotientResult q = min_hardy_quotient(lambda_of(omega, k), s, grid);
      global_numeric = std::min(global_numeric, q.value);
      rows.push_back({{"k", k},
                      {"sign", std::string(to_string(s))},
                      {"analytic", q.analytic_constant},
                      {"numeric", q.value},
                      {"relative_gap", q.relative_gap},
                      {"iterations", q.iterations}});
      csv += std::to_string(k) + "," + std::string(to_string(s)) + "," +
             format_double(q.analytic_constant) + "," + format_double(q.value) + "," +
             format_double(q.relative_gap) + "\n";
    }
  json &r = j["results"];
  r["hardy_constant"] = hardy_constant(omega);
  r["min_numeric_over_channels"] = global_numeric;
  r["rows"] = std::move(rows);
  r["csv"] = csv;
  if (!f.output.empty()) {
    auto os = open_output(f.output);
    os << csv;
  }
  return j;
}

//------------------------------------------------------------------------------
json cmd_deficiency(const Flags &f) {
  const SectorCoupling sc = coupling(f);
  json j = envelope("deficiency",
                    {{"omega", sc.omega}, {"nu", sc.nu}, {"mass", sc.mass}, {"k", f.k}});
  const ChannelClassification ch = delta_of(sc, f.k);
  const int analytic = analytic_deficiency(sc, f.k);
  json &r = j["results"];
  r["lambda"] = ch.lambda;
  r["delta"] = ch.delta;
  r["regime"] = std::string(to_string(ch.regime));
  r["analytic_index"] = analytic;

  bool indeterminate = false;
  std::optional<int> numeric;
  bool agree_signs = true;
  json per_sign = json::object();
  for (int sign : {+1, -1}) {
    const ShootingResult s = deficiency_index_numeric(sc, f.k, sign);
    per_sign[sign > 0 ? "+i" : "-i"] = {
        {"verdict", std::string(to_string(s.verdict))},
        {"index", s.index_contribution},
        {"fitted_exponent", s.fit.exponent},
        {"r_squared", s.fit.r_squared},
        {"log_flag", s.fit.log_correction},
        {"steps", s.steps}};
    if (s.verdict == Integrability::Indeterminate)
      indeterminate = true;
    else if (!numeric)
      numeric = s.index_contribution;
    else if (*numeric != s.index_contribution)
      agree_signs = false;
    if (sign > 0) {
      r["fitted_exponent"] = s.fit.exponent;
      r["log_flag"] = s.fit.log_correction;
      r["reference_exponent"] =
          ch.regime == Regime::Subcritical || ch.essentially_self_adjoint()
              ? json(-std::sqrt(ch.delta))
              : json(0.0);
    }
  }
  r["numeric_index"] = indeterminate || !agree_signs ? json(nullptr) : json(*numeric);
  r["agreement"] = !indeterminate && agree_signs && *numeric == analytic;
  r["per_sign"] = std::move(per_sign);
  if (indeterminate) {
    j["diagnostics"].push_back(
        "fitted exponent within fit margin of -1/2; verdict Indeterminate");
    throw Indeterminate("deficiency verdict is Indeterminate", std::move(j));
  }
  if (!agree_signs)
    j["diagnostics"].push_back("+i and -i verdicts differ");
  return j;
}

//------------------------------------------------------------------------------
json cmd_modes(const Flags &f) {
  const double omega = omega_of(f);
  SectorCoupling{omega, 0.0}.validate();
  const int K = f.channels > 0 ? f.channels : 4;
  const double top = lambda_of(omega, K - 1) + 0.5;
  const int needed = static_cast<int>(std::ceil(min_nodes_per_period * top * omega / (2 * pi))) + 1;
  const int n = f.theta_n.value_or(std::max(2001, 4 * needed));
  const AngularGrid grid = AngularGrid::uniform(omega, n);
  json j = envelope("modes", {{"omega", omega}, {"K", K}, {"theta_n", n}});
  json rows = json::array();
  double worst = 0.0;
  for (int k = 0; k < K; ++k)
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const ModeResiduals res = check_mode_identities(AngularMode::make(k, s, omega), grid);
      worst = std::max(worst, res.max());
      rows.push_back({{"k", k},
                      {"sign", std::string(to_string(s))},
                      {"lambda", lambda_of(omega, k)},
                      {"boundary_residual", res.boundary},
                      {"eigen_residual", res.eigen},
                      {"map_residual", res.map}});
    }
  const auto g = gram(omega, K, grid);
  double dev = 0.0;
  for (int a = 0; a < 2 * K; ++a)
    for (int b = 0; b < 2 * K; ++b)
      dev = std::max(dev, std::abs(g[a * 2 * K + b] - cplx(a == b ? 1.0 : 0.0)));
  json &r = j["results"];
  r["modes"] = std::move(rows);
  r["max_residual"] = worst;
  r["gram_deviation"] = dev;
  r["gram_reference"] = "identity";
  return j;
}

//------------------------------------------------------------------------------
json cmd_zero_modes(const Flags &f) {
  const SectorCoupling sc = coupling(f);
  const double alpha = to_radians(f.alpha, f.degrees);
  if (!(alpha >= 0.0 && alpha < pi))
    throw DomainError("alpha must lie in [0, pi)");
  auto grid = make_grid(f.grid_min.value_or(1e-4), f.grid_max.value_or(0.9),
                        f.grid_n.value_or(2000));
  json j = envelope("zero-modes", {{"omega", sc.omega},
                                   {"nu", sc.nu},
                                   {"k", f.k},
                                   {"alpha", alpha},
                                   {"grid_min", grid->r_min()},
                                   {"grid_max", grid->r_max()},
                                   {"grid_n", grid->size()}});
  const BoundaryModel bm = boundary_model(sc, f.k);
  const Mat2 &m = bm.boundary_matrix();
  const double residual = zero_mode_residual(sc, f.k, alpha, grid);
  json &r = j["results"];
  r["regime"] = std::string(to_string(bm.channel.regime));
  r["lambda"] = bm.channel.lambda;
  r["delta"] = bm.channel.delta;
  json mat = json::array();
  for (const auto &row : m)
    mat.push_back({{{"re", row[0].real()}, {"im", row[0].imag()}},
                   {{"re", row[1].real()}, {"im", row[1].imag()}}});
  r["boundary_matrix"] = std::move(mat);
  r["residual"] = residual;
  r["residual_reference"] = 0.0;
  if (!f.output.empty()) {
    auto os = open_output(f.output);
    write_radial_csv(os, sample_u_alpha(sc, f.k, alpha, grid));
    r["profile_csv"] = f.output;
  }
  return j;
}

//------------------------------------------------------------------------------
json cmd_decompose(const Flags &f) {
  if (f.input.empty())
    throw UsageError("decompose needs --input");
  std::ifstream is(f.input);
  if (!is)
    throw UsageError("cannot open input file '" + f.input + "'");
  const PolarField field = read_polar_csv(is);
  const int K = f.channels > 0 ? f.channels : 4;
  const double omega = field.theta_grid.omega;
  if (f.omega > 0.0 && std::abs(omega_of(f) - omega) > 1e-6 * omega)
    throw UsageError("--omega does not match the theta range of the input");
  json j = envelope("decompose", {{"omega", omega},
                                  {"channels", K},
                                  {"input", f.input},
                                  {"nr", field.nr()},
                                  {"ntheta", field.ntheta()}});
  const ChannelCoefficients c = decompose(field, K);
  const PolarField back = reconstruct(c, field.theta_grid);
  const double total = field_norm2(field);
  double scale = 0.0, err = 0.0;
  for (std::size_t i = 0; i < field.values.size(); ++i) {
    scale = std::max(scale, norm(field.values[i]));
    err = std::max(err, norm(field.values[i] - back.values[i]));
  }
  json &r = j["results"];
  r["field_norm2"] = total;
  r["channel_norm2"] = channel_norm2(c);
  r["parseval_residual"] = std::abs(c.tail_energy) / std::max(total, 1e-300);
  r["tail_energy"] = c.tail_energy;
  r["reconstruction_error"] = err / std::max(scale, 1e-300);
  json norms = json::array();
  const auto w = c.grid->dr_weights();
  for (int k = 0; k < K; ++k) {
    double np = 0.0, nm = 0.0;
    for (int i = 0; i < c.grid->size(); ++i) {
      np += w[i] * std::norm(c.channels[k].values[i][0]);
      nm += w[i] * std::norm(c.channels[k].values[i][1]);
    }
    norms.push_back({{"k", k}, {"norm2_plus", np}, {"norm2_minus", nm}});
  }
  r["channel_norms"] = std::move(norms);
  if (!f.output.empty()) {
    json files = json::array();
    for (int k = 0; k < K; ++k) {
      const std::string path = f.output + "_k" + std::to_string(k) + ".csv";
      auto os = open_output(path);
      write_radial_csv(os, c.channels[k]);
      files.push_back(path);
    }
    r["coefficient_csvs"] = std::move(files);
  }
  return j;
}

//------------------------------------------------------------------------------
// Band-limited test field: channel k carries Gaussian bumps in log r with
// k-dependent centres and phases.
json cmd_synth_field(const Flags &f) {
  const double omega = omega_of(f);
  SectorCoupling{omega, 0.0}.validate();
  const int K = f.channels > 0 ? f.channels : 4;
  auto grid = make_grid(f.grid_min.value_or(1e-2), f.grid_max.value_or(1e2),
                        f.grid_n.value_or(200));
  const double top = lambda_of(omega, K - 1) + 0.5;
  const int needed = static_cast<int>(std::ceil(min_nodes_per_period * top * omega / (2 * pi))) + 1;
  const int nt = f.theta_n.value_or(std::max(129, 2 * needed));
  ChannelCoefficients c = ChannelCoefficients::zeros(omega, grid, K);
  for (int k = 0; k < K; ++k)
    for (int i = 0; i < grid->size(); ++i) {
      const double s = std::log((*grid)[i]);
      const double gp = std::exp(-std::pow(s - 0.3 * k, 2));
      const double gm = std::exp(-std::pow(s + 0.2 * k - 0.5, 2) / 1.5);
      c.channels[k].values[i] = {gp * std::exp(I * (0.7 * k + 0.1)),
                                 0.5 * gm * std::exp(-I * (0.4 * k + 0.3))};
    }
  const PolarField field = reconstruct(c, AngularGrid::uniform(omega, nt));
  if (f.output.empty())
    throw UsageError("synth-field needs --output");
  auto os = open_output(f.output);
  write_polar_csv(os, field);
  json j = envelope("synth-field", {{"omega", omega},
                                    {"channels", K},
                                    {"grid_min", grid->r_min()},
                                    {"grid_max", grid->r_max()},
                                    {"grid_n", grid->size()},
                                    {"theta_n", nt}});
  j["results"]["output"] = f.output;
  j["results"]["field_norm2"] = field_norm2(field);
  return j;
}

void emit(std::ostream &out, const json &j) { out << j.dump(2) << '\n'; }

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Spectral toolkit for Dirac-Coulomb operators on sectors with "
               "infinite-mass boundary conditions",
               "sectordirac"};
  app.require_subcommand(1);
  Flags f;

  auto angle = [&](CLI::App *c, bool required) {
    auto *o = c->add_option("--omega", f.omega, "sector opening angle (radians)");
    if (required)
      o->required();
    c->add_flag("--degrees", f.degrees, "read angles in degrees");
  };
  auto grid = [&](CLI::App *c) {
    c->add_option("--grid-min", f.grid_min, "smallest radial node");
    c->add_option("--grid-max", f.grid_max, "largest radial node");
    c->add_option("--grid-n", f.grid_n, "number of radial nodes");
  };

  auto *classify_cmd = app.add_subcommand("classify", "self-adjointness classification");
  angle(classify_cmd, true);
  classify_cmd->add_option("--nu", f.nu, "Coulomb coupling")->required();
  classify_cmd->add_option("--mass", f.mass, "mass m >= 0");
  classify_cmd->add_option("--max-channels", f.max_channels, "channels in the table");

  auto *hardy_cmd = app.add_subcommand("hardy", "channel Hardy quotients");
  angle(hardy_cmd, true);
  hardy_cmd->add_option("--channels", f.channels, "number of channels k");
  grid(hardy_cmd);
  hardy_cmd->add_option("--output", f.output, "CSV table path");

  auto *def_cmd = app.add_subcommand("deficiency", "numeric deficiency index of one channel");
  angle(def_cmd, true);
  def_cmd->add_option("--nu", f.nu, "Coulomb coupling")->required();
  def_cmd->add_option("--mass", f.mass, "mass m >= 0 (does not affect the index)");
  def_cmd->add_option("--k", f.k, "channel index")->required();

  auto *modes_cmd = app.add_subcommand("modes", "spin-orbit eigenbasis identity checks");
  angle(modes_cmd, true);
  modes_cmd->add_option("--channels,--K", f.channels, "number of channels");
  modes_cmd->add_option("--theta-n", f.theta_n, "angular nodes");

  auto *zero_cmd = app.add_subcommand("zero-modes", "boundary model function u^(alpha)");
  angle(zero_cmd, true);
  zero_cmd->add_option("--nu", f.nu, "Coulomb coupling")->required();
  zero_cmd->add_option("--mass", f.mass, "mass m >= 0");
  zero_cmd->add_option("--k", f.k, "channel index")->required();
  zero_cmd->add_option("--alpha", f.alpha, "extension parameter in [0, pi)");
  grid(zero_cmd);
  zero_cmd->add_option("--output", f.output, "profile CSV path");

  auto *dec_cmd = app.add_subcommand("decompose", "partial-wave decomposition of a polar field");
  angle(dec_cmd, false);
  dec_cmd->add_option("--channels", f.channels, "number of channels K");
  dec_cmd->add_option("--input", f.input, "polar field CSV")->required();
  dec_cmd->add_option("--output", f.output, "prefix for coefficient CSVs");

  auto *synth_cmd = app.add_subcommand("synth-field", "write a band-limited polar field CSV");
  angle(synth_cmd, true);
  synth_cmd->add_option("--channels", f.channels, "number of channels K");
  grid(synth_cmd);
  synth_cmd->add_option("--theta-n", f.theta_n, "angular nodes");
  synth_cmd->add_option("--output", f.output, "polar field CSV path")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::Success &) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  try {
    json j;
    if (*classify_cmd)
      j = cmd_classify(f);
    else if (*hardy_cmd)
      j = cmd_hardy(f);
    else if (*def_cmd)
      j = cmd_deficiency(f);
    else if (*modes_cmd)
      j = cmd_modes(f);
    else if (*zero_cmd)
      j = cmd_zero_modes(f);
    else if (*dec_cmd)
      j = cmd_decompose(f);
    else
      j = cmd_synth_field(f);
    emit(out, j);
    return ok;
  } catch (const Indeterminate &e) {
    emit(out, e.report);
    err << "indeterminate: " << e.what() << '\n';
    return indeterminate;
  } catch (const SolverError &e) {
    err << "solver failure: " << e.what() << '\n';
    return solver_failure;
  } catch (const CsvError &e) {
    err << "malformed CSV: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
}

} // namespace sectordirac::cli
