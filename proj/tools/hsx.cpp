// Command-line surface: verification suites, boundary decomposition of
// sampled signals, and Galerkin spectrum clouds.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hsx/boundary.hpp"
#include "hsx/operator_lab.hpp"
#include "hsx/verify.hpp"

using nlohmann::json;
using namespace hsx;

namespace {

constexpr int kSchemaVersion = 1;

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open output file: " + path);
  out << text;
}

json record_to_json(const CheckRecord& r) {
  return json{{"theorem_tag", r.theorem_tag},
              {"inputs", r.inputs},
              {"measured", r.measured},
              {"bound_or_target", r.bound_or_target},
              {"pass", r.pass},
              {"criterion", r.criterion}};
}

std::string records_to_csv(const std::vector<CheckRecord>& records) {
  std::ostringstream os;
  os << "theorem_tag,inputs,measured,bound_or_target,pass\n";
  for (const auto& r : records) {
    std::string inputs = r.inputs;
    for (char& c : inputs) {
      if (c == ',') c = ';';
    }
    os.precision(12);
    os << r.theorem_tag << "," << inputs << "," << r.measured << ","
       << r.bound_or_target << "," << (r.pass ? "true" : "false") << "\n";
  }
  return os.str();
}

int run_verify(const std::string& suite, const VerifyConfig& config,
               const std::string& out_path, const std::string& format) {
  std::vector<CheckRecord> records;
  try {
    records = run_suite(suite, config);
  } catch (const InvalidInput& e) {
    return fail_usage(e.what());
  }
  bool all_pass = true;
  for (const auto& r : records) all_pass = all_pass && r.pass;

  if (format == "json") {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "verify";
    doc["suite"] = suite;
    doc["all_pass"] = all_pass;
    doc["records"] = json::array();
    for (const auto& r : records) doc["records"].push_back(record_to_json(r));
    write_text(out_path, doc.dump(2) + "\n");
  } else {
    write_text(out_path, records_to_csv(records));
  }
  return all_pass ? 0 : 1;
}

struct SignalFile {
  RealGrid grid;
  ArrayXc values;
};

SignalFile read_signal_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open input file: " + path);
  std::string line;
  std::vector<Real> xs;
  std::vector<Complex> vs;
  bool header_done = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (!header_done) {
      header_done = true;
      if (line.rfind("x,", 0) == 0) continue;  // header row
    }
    std::istringstream row(line);
    std::string cell;
    Real vals[3] = {0.0, 0.0, 0.0};
    for (int c = 0; c < 3; ++c) {
      if (!std::getline(row, cell, ',')) {
        throw InvalidInput("signal row needs three comma-separated columns (x, re, im)");
      }
      vals[c] = std::stod(cell);
    }
    xs.push_back(vals[0]);
    vs.emplace_back(vals[1], vals[2]);
  }
  if (xs.size() < 8) throw InvalidInput("signal too short (need at least 8 rows)");
  const Real h = (xs.back() - xs.front()) / static_cast<Real>(xs.size() - 1);
  // tolerate printing jitter; the nodes snap to the exact uniform grid below
  for (std::size_t j = 1; j < xs.size(); ++j) {
    if (std::abs((xs[j] - xs[j - 1]) - h) > 1e-4 * std::abs(h)) {
      throw InvalidInput("signal grid is not uniform");
    }
  }
  if (xs.size() % 2 != 0) throw InvalidInput("signal length must be even");
  const Real half_width = -xs[0];
  SignalFile f;
  f.grid = make_real_grid(half_width, static_cast<Eigen::Index>(xs.size()));
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (std::abs(f.grid.nodes[static_cast<Eigen::Index>(j)] - xs[j]) >
        1e-3 * std::max(1.0, std::abs(h))) {
      throw InvalidInput("signal grid is not symmetric about zero");
    }
  }
  f.values.resize(static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) {
    f.values[static_cast<Eigen::Index>(j)] = vs[j];
  }
  return f;
}

std::string signal_to_csv(const RealGrid& grid, const ArrayXc& values) {
  std::ostringstream os;
  os.precision(15);
  os << "x,re,im\n";
  for (Eigen::Index j = 0; j < grid.point_count; ++j) {
    os << grid.nodes[j] << "," << values[j].real() << "," << values[j].imag() << "\n";
  }
  return os.str();
}

int run_decompose(const std::string& input, int order, Real exponent,
                  const std::string& out_prefix) {
  SignalFile sig;
  BoundarySample sample;
  DecompositionResult dec;
  try {
    sig = read_signal_csv(input);
    sample = lift_to_sobolev(sig.values, sig.grid, order, exponent);
    dec = plemelj_split(sample);
  } catch (const InvalidInput& e) {
    return fail_usage(e.what());
  } catch (const std::exception& e) {
    return fail_usage(std::string("malformed input: ") + e.what());
  }
  write_text(out_prefix + "_plus.csv", signal_to_csv(sig.grid, dec.plus.stack[0]));
  write_text(out_prefix + "_minus.csv", signal_to_csv(sig.grid, dec.minus.stack[0]));
  json summary;
  summary["schema_version"] = kSchemaVersion;
  summary["command"] = "decompose";
  summary["reconstruction_error"] = dec.reconstruction_error;
  summary["hardy_residual_plus"] = dec.hardy_residual_plus;
  summary["hardy_residual_minus"] = dec.hardy_residual_minus;
  if (dec.orthogonality_defect) {
    summary["orthogonality_defect"] = *dec.orthogonality_defect;
  }
  summary["ftc_defect"] = sample.ftc_defect;
  write_text(out_prefix + "_summary.json", summary.dump(2) + "\n");
  return 0;
}

AnalyticSymbol symbol_from_json(const json& doc) {
  const std::string kind = doc.at("kind").get<std::string>();
  auto get_complex = [&](const char* key) {
    const auto& v = doc.at(key);
    return Complex(v.at(0).get<Real>(), v.at(1).get<Real>());
  };
  if (kind == "constant") return constant_symbol(get_complex("value"));
  if (kind == "affine") return affine_symbol(get_complex("slope"), get_complex("offset"));
  if (kind == "moebius-to-disk") return moebius_to_disk_symbol();
  if (kind == "shifted-moebius") return shifted_moebius_symbol(get_complex("shift"));
  if (kind == "cayley-exp") return cayley_exp_symbol(doc.at("a").get<Real>());
  if (kind == "rational") {
    auto read_poly = [&](const char* key) {
      const auto& arr = doc.at(key);
      VectorXc p(arr.size());
      for (std::size_t j = 0; j < arr.size(); ++j) {
        p[static_cast<Eigen::Index>(j)] =
            Complex(arr[j].at(0).get<Real>(), arr[j].at(1).get<Real>());
      }
      return p;
    };
    return rational_symbol(read_poly("numerator"), read_poly("denominator"));
  }
  throw InvalidInput("unknown symbol kind: " + kind);
}

int run_spectrum(const std::string& symbol_path, int order, Eigen::Index galerkin_dim,
                 const std::string& out_path) {
  json doc;
  std::optional<AnalyticSymbol> symbol;
  GalerkinOperator op;
  SpectrumReport rep;
  try {
    std::ifstream in(symbol_path);
    if (!in) throw InvalidInput("cannot open symbol file: " + symbol_path);
    in >> doc;
    symbol = symbol_from_json(doc);
    const GalerkinBasis basis = build_onb(order, galerkin_dim);
    op = assemble_multiplication(*symbol, basis);
    rep = spectrum_check(op, *symbol);
  } catch (const InvalidInput& e) {
    return fail_usage(e.what());
  } catch (const json::exception& e) {
    return fail_usage(std::string("symbol file does not match the registry schema: ") +
                      e.what());
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }

  std::ostringstream os;
  os.precision(15);
  os << "re,im,tag\n";
  for (Eigen::Index i = 0; i < rep.eigenvalues.size(); ++i) {
    os << rep.eigenvalues[i].real() << "," << rep.eigenvalues[i].imag() << ",eig\n";
  }
  for (const Complex& r : rep.range_samples) {
    os << r.real() << "," << r.imag() << ",range\n";
  }
  write_text(out_path, os.str());

  json summary;
  summary["schema_version"] = kSchemaVersion;
  summary["command"] = "spectrum";
  summary["inclusion_pass"] = rep.inclusion_pass;
  summary["range_hull_distance"] = rep.range_hull_distance;
  summary["multiplier_plausible"] = op.multiplier_plausible;
  summary["worst_level_residual"] = op.worst_level_residual;
  std::cout << summary.dump(2) << "\n";
  return 0;
}

}  // namespace

void apply_config_file(const std::string& path, VerifyConfig& config) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open config file: " + path);
  json doc;
  in >> doc;
  for (const auto& [key, value] : doc.items()) {
    if (key == "grid_L") {
      config.grid_half_width = value.get<Real>();
    } else if (key == "grid_N") {
      config.grid_points = value.get<Eigen::Index>();
    } else if (key == "quad_M") {
      config.quad_nodes = value.get<Eigen::Index>();
    } else if (key == "galerkin_M") {
      config.galerkin_dim = value.get<Eigen::Index>();
    } else if (key == "tol") {
      config.tolerance_scale = value.get<Real>();
    } else {
      throw InvalidInput("unknown config key: " + key);
    }
  }
}

int main(int argc, char** argv) {
  CLI::App app{"Sobolev-Hardy half-plane toolkit"};
  app.require_subcommand(1);

  VerifyConfig config;
  int order = 1;
  Real exponent = 2.0;
  std::string out_path;
  std::string format = "json";
  Real tol_scale = 1.0;
  std::string config_path;

  auto add_grid_flags = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file (flags win)");
    cmd->add_option("--grid-L", config.grid_half_width, "half-width of the line grid");
    cmd->add_option("--grid-N", config.grid_points, "line grid point count");
    cmd->add_option("--quad-M", config.quad_nodes, "half-line quadrature node count");
    cmd->add_option("--order", order, "derivative order n");
    cmd->add_option("--p", exponent, "exponent p");
    cmd->add_option("--tol", tol_scale, "tolerance scale factor");
    cmd->add_option("--out", out_path, "output path ('-' for stdout)");
    cmd->add_option("--format", format, "output format: json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  std::string suite = "all";
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "all | boundary | pw | kernel | algebra | spectrum | composition");
  add_grid_flags(verify);

  std::string input_csv;
  std::string out_prefix = "decomposition";
  CLI::App* decompose =
      app.add_subcommand("decompose", "split a sampled signal into half-plane traces");
  decompose->add_option("input", input_csv, "CSV with header x,re,im")->required();
  decompose->add_option("--order", order, "derivative order n");
  decompose->add_option("--p", exponent, "exponent p (1 < p < inf)");
  decompose->add_option("--out", out_prefix, "output prefix");

  std::string symbol_path;
  Eigen::Index galerkin_dim = 16;
  std::string cloud_path = "spectrum.csv";
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "eigenvalue cloud of a multiplication operator");
  spectrum->add_option("symbol", symbol_path, "symbol registry JSON")->required();
  spectrum->add_option("--order", order, "space order n");
  spectrum->add_option("--galerkin-M", galerkin_dim, "truncation dimension (<= 48)");
  spectrum->add_option("--out", cloud_path, "cloud CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  config.tolerance_scale = tol_scale;
  try {
    if (verify->parsed()) {
      if (!config_path.empty()) {
        // layering: defaults, then the config file, then explicit flags
        const VerifyConfig from_flags = config;
        config = VerifyConfig{};
        apply_config_file(config_path, config);
        if (verify->count("--grid-L")) config.grid_half_width = from_flags.grid_half_width;
        if (verify->count("--grid-N")) config.grid_points = from_flags.grid_points;
        if (verify->count("--quad-M")) config.quad_nodes = from_flags.quad_nodes;
        if (verify->count("--tol")) config.tolerance_scale = tol_scale;
      }
      return run_verify(suite, config, out_path, format);
    }
    if (decompose->parsed()) return run_decompose(input_csv, order, exponent, out_prefix);
    if (spectrum->parsed()) return run_spectrum(symbol_path, order, galerkin_dim, cloud_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
