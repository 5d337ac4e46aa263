// csr: fit, denoise, synthesize, and diagnose functional time series with
// the trigonometric eigenbases of the unit interval.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "csr/csv.hpp"
#include "csr/diagnostics.hpp"
#include "csr/svg.hpp"
#include "csr/synth.hpp"
#include "csr/transform.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Command-line misuse that CLI11's own validators cannot catch; exit code 2.
struct CliUsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string output;
  int degree = 59;
  std::string basis = "cosine";
  bool normalize = false;
  std::uint64_t seed = 0;
  std::string tau;
  double sigma_e = 0.0;
  std::string mean = "zero";
  int samples = 0; // 0 = subcommand default (synth 1200, gibbs max(1024, 8k))
  int series = 1;
  bool plot = false;
  std::string plot_size = "960x320";
  std::string select;
  double delta = 0.05;
  std::string signal = "ramp";
  bool normal_equations = false;
};

struct LoadedBatch {
  csr::SampleGrid grid;
  csr::SeriesBatch batch;
  bool had_time = false;
  std::vector<double> timestamps; // sorted original units (synth index or file t)
};

bool is_time_header(const std::string& h) {
  std::string s = h;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s == "t" || s == "time";
}

LoadedBatch load_batch(const std::string& path) {
  const csr::io::Csv csv = csr::io::read_csv(path);
  if (csv.rows() < 2) throw csr::DataError("'" + path + "' needs at least 2 data rows");

  LoadedBatch out;
  out.had_time = is_time_header(csv.header.front());
  const int first_series = out.had_time ? 1 : 0;
  const int p = csv.cols() - first_series;
  if (p < 1) throw csr::DataError("'" + path + "' has no series columns");
  const int n = csv.rows();

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  if (out.had_time) {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return csv.data(a, 0) < csv.data(b, 0); });
    out.timestamps.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      out.timestamps[static_cast<std::size_t>(i)] = csv.data(order[static_cast<std::size_t>(i)], 0);
    out.grid = csr::make_grid(out.timestamps);
  } else {
    out.grid = csr::uniform_grid(n);
    out.timestamps.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.timestamps[static_cast<std::size_t>(i)] = i;
  }

  out.batch.values = csr::Matrix(n, p);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < p; ++j)
      out.batch.values(i, j) = csv.data(order[static_cast<std::size_t>(i)], first_series + j);
  out.batch.labels.assign(csv.header.begin() + first_series, csv.header.end());
  out.batch.preprocess.assign(static_cast<std::size_t>(p), {});
  return out;
}

// Per-series z-score: stored = (raw - mean)/sd, population sd; constant
// series keep scale 1 so the transform stays invertible.
void zscore(csr::SeriesBatch& batch) {
  const int n = batch.samples();
  const int p = batch.series();
  for (int j = 0; j < p; ++j) {
    double mean = 0.0;
    for (int i = 0; i < n; ++i) mean += batch.values(i, j);
    mean /= n;
    double var = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = batch.values(i, j) - mean;
      var += d * d;
    }
    const double sd = std::sqrt(var / n);
    const double scale = sd > 0.0 ? sd : 1.0;
    for (int i = 0; i < n; ++i) batch.values(i, j) = (batch.values(i, j) - mean) / scale;
    batch.preprocess[static_cast<std::size_t>(j)] = {mean, scale};
  }
}

csr::BasisSpec spec_from(const RunConfig& cfg) {
  return {csr::family_from_name(cfg.basis), cfg.degree};
}

fs::path with_suffix(const fs::path& p, const std::string& suffix) {
  fs::path out = p;
  out.replace_extension(suffix);
  return out;
}

std::vector<double> parse_number_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(cur, &used);
      if (used != cur.size()) throw std::invalid_argument(cur);
      out.push_back(v);
    } catch (const std::exception&) {
      throw csr::DataError("cannot parse " + what + " entry '" + cur + "'");
    }
  }
  if (out.empty()) throw csr::DataError(what + " list is empty");
  return out;
}

struct TauSpec {
  std::vector<double> variances;
  std::optional<csr::Matrix> correlation_factor;
  std::optional<double> residual_sigma;
};

TauSpec parse_tau(const std::string& arg) {
  TauSpec out;
  if (arg.empty()) return out;
  if (arg.front() == '@') {
    const std::string path = arg.substr(1);
    std::ifstream in(path);
    if (!in) throw csr::DataError("cannot open tau spec file '" + path + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw csr::DataError("tau spec file '" + path + "': " + e.what());
    }
    if (!j.contains("variances") || !j["variances"].is_array())
      throw csr::DataError("tau spec file '" + path + "' needs a 'variances' array");
    out.variances = j["variances"].get<std::vector<double>>();
    if (j.contains("residual_sigma")) out.residual_sigma = j["residual_sigma"].get<double>();
    if (j.contains("correlation_factor")) {
      const auto& rows = j["correlation_factor"];
      const int m = static_cast<int>(rows.size());
      csr::Matrix l(m, m);
      for (int i = 0; i < m; ++i) {
        const auto row = rows[static_cast<std::size_t>(i)].get<std::vector<double>>();
        if (static_cast<int>(row.size()) != m)
          throw csr::DataError("correlation_factor must be square");
        for (int c = 0; c < m; ++c) l(i, c) = row[static_cast<std::size_t>(c)];
      }
      out.correlation_factor = std::move(l);
    }
    return out;
  }
  out.variances = parse_number_list(arg, "tau");
  return out;
}

// Mean expressions: zero | const:A | cos:L[:amp] | sin:L[:amp], joined by
// '+'. cos/sin terms are the normalized eigenfunctions sqrt(2)·cos(L·pi·t).
std::function<double(double)> parse_mean(const std::string& expr) {
  struct Term {
    int kind; // 0 const, 1 cos, 2 sin
    double a = 1.0;
    int l = 0;
  };
  std::vector<Term> terms;
  std::istringstream is(expr);
  std::string tok;
  while (std::getline(is, tok, '+')) {
    if (tok.empty() || tok == "zero") continue;
    std::vector<std::string> parts;
    std::istringstream ts(tok);
    std::string piece;
    while (std::getline(ts, piece, ':')) parts.push_back(piece);
    try {
      if (parts[0] == "const" && parts.size() == 2) {
        terms.push_back({0, std::stod(parts[1]), 0});
      } else if ((parts[0] == "cos" || parts[0] == "sin") &&
                 (parts.size() == 2 || parts.size() == 3)) {
        Term t;
        t.kind = parts[0] == "cos" ? 1 : 2;
        t.l = std::stoi(parts[1]);
        if (parts.size() == 3) t.a = std::stod(parts[2]);
        if (t.l < 0) throw std::invalid_argument("negative harmonic");
        terms.push_back(t);
      } else {
        throw std::invalid_argument(tok);
      }
    } catch (const std::exception&) {
      throw CliUsageError("bad mean term '" + tok +
                          "' (expected zero|const:A|cos:L[:amp]|sin:L[:amp])");
    }
  }
  return [terms](double t) {
    double v = 0.0;
    for (const Term& term : terms) {
      switch (term.kind) {
        case 0: v += term.a; break;
        case 1: v += term.a * std::sqrt(2.0) * std::cos(term.l * std::numbers::pi * t); break;
        case 2: v += term.a * std::sqrt(2.0) * std::sin(term.l * std::numbers::pi * t); break;
      }
    }
    return v;
  };
}

std::pair<int, int> parse_plot_size(const std::string& s) {
  const auto x = s.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(s);
    const int w = std::stoi(s.substr(0, x));
    const int h = std::stoi(s.substr(x + 1));
    if (w < 200 || h < 120) throw std::invalid_argument(s);
    return {w, h};
  } catch (const std::exception&) {
    throw CliUsageError("bad --plot-size '" + s + "' (expected WIDTHxHEIGHT, at least 200x120)");
  }
}

std::vector<int> selected_series(const RunConfig& cfg, int p) {
  std::vector<int> sel;
  if (cfg.select.empty()) {
    for (int i = 0; i < p; ++i) sel.push_back(i);
    return sel;
  }
  for (double v : parse_number_list(cfg.select, "series selection")) {
    const int idx = static_cast<int>(v);
    if (idx < 1 || idx > p)
      throw csr::DataError("series selection " + std::to_string(idx) + " out of range 1.." +
                           std::to_string(p));
    sel.push_back(idx - 1);
  }
  return sel;
}

void print_warnings(const csr::CoefficientSet& cs) {
  for (const std::string& w : cs.warnings) std::cerr << "csr: warning: " << w << "\n";
}

json grid_json(const csr::SampleGrid& grid) {
  return {{"n", grid.size()},
          {"t_min", grid.t_min},
          {"t_max", grid.t_max},
          {"offset", grid.offset},
          {"scale", grid.scale}};
}

json basis_json(const csr::BasisSpec& spec) {
  return {{"family", csr::family_name(spec.family)},
          {"degree", spec.degree},
          {"functions", spec.function_count()}};
}

// ---- subcommands ----

int cmd_fit(const RunConfig& cfg) {
  LoadedBatch in = load_batch(cfg.input);
  if (cfg.normalize) zscore(in.batch);
  const csr::BasisSpec spec = spec_from(cfg);
  const csr::DesignMatrix dm = csr::build_design(spec, in.grid);
  const csr::CoefficientSet cs = csr::fit_batch(
      dm, in.batch, cfg.normal_equations ? csr::FitMethod::NormalEquations : csr::FitMethod::Qr);
  print_warnings(cs);

  const int m = cs.basis_count();
  const int p = cs.series();
  csr::Matrix table(m, p + 1);
  for (int l = 0; l < m; ++l) {
    table(l, 0) = l;
    for (int j = 0; j < p; ++j) table(l, j + 1) = cs.coeffs(l, j);
  }
  std::vector<std::string> header{"index"};
  for (int j = 0; j < p; ++j) header.push_back(in.batch.label(j));
  const std::string meta = csr::io::make_metadata_line(
      "coefficients", {{"basis", csr::family_name(spec.family)},
                       {"degree", std::to_string(spec.degree)},
                       {"n", std::to_string(in.grid.size())},
                       {"t_min", csr::io::format_double(in.grid.t_min)},
                       {"t_max", csr::io::format_double(in.grid.t_max)},
                       {"normalize", cfg.normalize ? "zscore" : "none"}});
  csr::io::write_csv(cfg.output, {meta}, header, table);

  json report;
  report["command"] = "fit";
  report["basis"] = basis_json(spec);
  report["grid"] = grid_json(in.grid);
  report["normalize"] = cfg.normalize ? "zscore" : "none";
  report["series"] = json::array();
  for (int j = 0; j < p; ++j) {
    report["series"].push_back(
        {{"label", in.batch.label(j)},
         {"rss", cs.residual_norms[static_cast<std::size_t>(j)]},
         {"offset", in.batch.preprocess[static_cast<std::size_t>(j)].offset},
         {"scale", in.batch.preprocess[static_cast<std::size_t>(j)].scale}});
  }
  report["warnings"] = cs.warnings;
  csr::io::write_text_atomic(with_suffix(cfg.output, ".report.json"), report.dump(2) + "\n");
  return 0;
}

int cmd_denoise(const RunConfig& cfg) {
  LoadedBatch in = load_batch(cfg.input);
  const csr::Matrix raw = in.batch.values;
  if (cfg.normalize) zscore(in.batch);
  const csr::BasisSpec spec = spec_from(cfg);
  csr::Reconstruction rec = csr::denoise(in.batch, in.grid, spec);

  // Back to the input units.
  for (int j = 0; j < rec.series(); ++j) {
    const auto& pp = in.batch.preprocess[static_cast<std::size_t>(j)];
    for (int i = 0; i < rec.samples(); ++i)
      rec.values(i, j) = rec.values(i, j) * pp.scale + pp.offset;
  }

  const int n = rec.samples();
  const int p = rec.series();
  std::vector<std::string> header;
  csr::Matrix table;
  if (in.had_time) {
    header.push_back("t");
    table = csr::Matrix(n, p + 1);
    for (int i = 0; i < n; ++i) {
      table(i, 0) = in.timestamps[static_cast<std::size_t>(i)];
      for (int j = 0; j < p; ++j) table(i, j + 1) = rec.values(i, j);
    }
  } else {
    table = rec.values;
  }
  for (int j = 0; j < p; ++j) header.push_back(in.batch.label(j));
  const std::string meta = csr::io::make_metadata_line(
      "denoised", {{"basis", csr::family_name(spec.family)},
                   {"degree", std::to_string(spec.degree)},
                   {"normalize", cfg.normalize ? "zscore" : "none"}});
  csr::io::write_csv(cfg.output, {meta}, header, table);

  if (cfg.plot) {
    const auto [w, h] = parse_plot_size(cfg.plot_size);
    std::vector<csr::io::PlotLine> lines;
    for (int j : selected_series(cfg, p)) {
      csr::io::PlotLine rawline{in.batch.label(j) + " raw", raw.column(j), 1.0, "#94a3b8"};
      csr::io::PlotLine fitline{in.batch.label(j) + " fit", rec.values.column(j), 2.5,
                                csr::io::series_color(j)};
      lines.push_back(std::move(rawline));
      lines.push_back(std::move(fitline));
    }
    csr::io::PlotOptions opts{w, h,
                              "denoise " + csr::family_name(spec.family) +
                                  " k=" + std::to_string(spec.degree)};
    csr::io::write_line_plot(with_suffix(cfg.output, ".svg"), in.timestamps, lines, opts);
  }
  return 0;
}

int cmd_synth(const RunConfig& cfg) {
  const csr::BasisSpec spec = spec_from(cfg);
  const int m = spec.function_count();
  TauSpec tau = parse_tau(cfg.tau);
  if (static_cast<int>(tau.variances.size()) > m)
    throw csr::DataError("tau list has " + std::to_string(tau.variances.size()) +
                         " entries but the basis has only " + std::to_string(m) +
                         " functions");
  tau.variances.resize(static_cast<std::size_t>(m), 0.0);

  csr::NoiseModel model;
  model.spec = spec;
  model.variances = tau.variances;
  model.residual_sigma = tau.residual_sigma.value_or(cfg.sigma_e);
  model.seed = cfg.seed;
  model.correlation_factor = std::move(tau.correlation_factor);

  const csr::SampleGrid grid = csr::uniform_grid(cfg.samples);
  const auto mean = parse_mean(cfg.mean);
  const csr::SeriesBatch batch = csr::sample_observation(mean, model, grid, cfg.series);

  const int n = grid.size();
  const int p = cfg.series;
  std::vector<std::string> header{"t"};
  for (int j = 0; j < p; ++j) header.push_back("series" + std::to_string(j + 1));

  std::string tau_str;
  for (std::size_t i = 0; i < model.variances.size(); ++i)
    tau_str += (i ? "," : "") + csr::io::format_double(model.variances[i]);
  const std::string meta = csr::io::make_metadata_line(
      "synthetic", {{"seed", std::to_string(cfg.seed)},
                    {"rng", std::string(csr::kRngAlgorithm)},
                    {"basis", csr::family_name(spec.family)},
                    {"degree", std::to_string(spec.degree)},
                    {"sigma_e", csr::io::format_double(model.residual_sigma)},
                    {"mean", cfg.mean},
                    {"tau", tau_str}});

  csr::Matrix obs(n, p + 1);
  csr::Matrix clean(n, p + 1);
  for (int i = 0; i < n; ++i) {
    const double mu = mean(grid.points[static_cast<std::size_t>(i)]);
    obs(i, 0) = i;
    clean(i, 0) = i;
    for (int j = 0; j < p; ++j) {
      obs(i, j + 1) = batch.values(i, j);
      clean(i, j + 1) = mu;
    }
  }
  csr::io::write_csv(cfg.output, {meta}, header, obs);
  csr::io::write_csv(with_suffix(cfg.output, ".clean.csv"), {meta}, header, clean);
  return 0;
}

int cmd_gibbs(const RunConfig& cfg) {
  std::function<double(double)> signal;
  std::string name = cfg.signal;
  if (cfg.signal == "ramp") {
    signal = [](double t) { return t; };
  } else if (cfg.signal == "const") {
    signal = [](double) { return 1.0; };
  } else if (cfg.signal.rfind("cos:", 0) == 0) {
    int l = 0;
    try {
      l = std::stoi(cfg.signal.substr(4));
    } catch (const std::exception&) {
      throw CliUsageError("bad --signal '" + cfg.signal + "'");
    }
    signal = [l](double t) { return std::sqrt(2.0) * std::cos(l * std::numbers::pi * t); };
  } else {
    throw CliUsageError("unknown --signal '" + cfg.signal + "' (expected ramp|const|cos:L)");
  }

  const int n = std::max(cfg.samples, 8 * cfg.degree);
  const csr::SampleGrid grid = csr::uniform_grid(n);
  const csr::GibbsReport rep = csr::gibbs_compare(signal, cfg.degree, grid, cfg.delta, name);

  json out;
  out["command"] = "gibbs";
  out["signal"] = rep.test_signal;
  out["degree"] = rep.degree;
  out["delta"] = rep.delta;
  out["grid_points"] = n;
  out["families"] = json::array();
  for (const csr::FamilyGibbs* fg : {&rep.cosine, &rep.sine, &rep.fourier}) {
    out["families"].push_back({{"family", csr::family_name(fg->family)},
                               {"functions", fg->function_count},
                               {"boundary_error", fg->boundary_error},
                               {"interior_error", fg->interior_error}});
  }
  csr::io::write_text_atomic(cfg.output, out.dump(2) + "\n");

  if (cfg.plot) {
    const auto [w, h] = parse_plot_size(cfg.plot_size);
    csr::SeriesBatch one;
    one.values = csr::Matrix(n, 1);
    for (int i = 0; i < n; ++i)
      one.values(i, 0) = signal(grid.points[static_cast<std::size_t>(i)]);
    std::vector<csr::io::PlotLine> lines;
    lines.push_back({"signal", one.values.column(0), 2.5, "#334155"});
    const csr::BasisSpec specs[] = {{csr::BasisFamily::Cosine, cfg.degree},
                                    {csr::BasisFamily::Sine, cfg.degree},
                                    {csr::BasisFamily::FullFourier, cfg.degree / 2}};
    for (int i = 0; i < 3; ++i) {
      const csr::Reconstruction rec = csr::denoise(one, grid, specs[i]);
      lines.push_back({csr::family_name(specs[i].family), rec.values.column(0), 1.2,
                       csr::io::series_color(i)});
    }
    csr::io::PlotOptions opts{w, h, "gibbs " + name + " k=" + std::to_string(cfg.degree)};
    csr::io::write_line_plot(with_suffix(cfg.output, ".svg"), grid.points, lines, opts);
  }
  return 0;
}

int cmd_reconstruct(const RunConfig& cfg) {
  const csr::io::Csv csv = csr::io::read_csv(cfg.input);
  const auto meta = csr::io::metadata(csv, "coefficients");
  if (meta.empty())
    throw csr::DataError("'" + cfg.input + "' has no csr:coefficients metadata line");
  if (csv.header.empty() || csv.header.front() != "index")
    throw csr::DataError("'" + cfg.input + "' is not a coefficient file (missing index column)");

  csr::BasisSpec spec;
  spec.family = csr::family_from_name(meta.at("basis"));
  spec.degree = std::stoi(meta.at("degree"));
  const int m = spec.function_count();
  if (csv.rows() != m)
    throw csr::DataError("coefficient file has " + std::to_string(csv.rows()) +
                         " rows, basis needs " + std::to_string(m));

  csr::CoefficientSet cs;
  cs.spec = spec;
  cs.grid_id = "file:" + cfg.input;
  const int p = csv.cols() - 1;
  cs.coeffs = csr::Matrix(m, p);
  for (int l = 0; l < m; ++l)
    for (int j = 0; j < p; ++j) cs.coeffs(l, j) = csv.data(l, j + 1);
  cs.residual_norms.assign(static_cast<std::size_t>(p), 0.0);

  const int n = cfg.samples > 0 ? cfg.samples : std::stoi(meta.at("n"));
  const csr::SampleGrid grid = csr::uniform_grid(n);
  const csr::Reconstruction rec = csr::reconstruct(cs, grid);

  const double t_min = meta.count("t_min") ? std::stod(meta.at("t_min")) : 0.0;
  const double t_max = meta.count("t_max") ? std::stod(meta.at("t_max")) : 1.0;
  csr::Matrix table(n, p + 1);
  for (int i = 0; i < n; ++i) {
    table(i, 0) = t_min + grid.points[static_cast<std::size_t>(i)] * (t_max - t_min);
    for (int j = 0; j < p; ++j) table(i, j + 1) = rec.values(i, j);
  }
  std::vector<std::string> header{"t"};
  header.insert(header.end(), csv.header.begin() + 1, csv.header.end());
  const std::string out_meta = csr::io::make_metadata_line(
      "reconstruction", {{"basis", csr::family_name(spec.family)},
                         {"degree", std::to_string(spec.degree)},
                         {"n", std::to_string(n)}});
  csr::io::write_csv(cfg.output, {out_meta}, header, table);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"cosine series representation toolkit"};
  app.require_subcommand(1);

  auto add_basis_opts = [&cfg](CLI::App* sub) {
    sub->add_option("--degree", cfg.degree, "expansion degree k")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sub->add_option("--basis", cfg.basis, "basis family")
        ->check(CLI::IsMember({"cosine", "sine", "fourier"}))
        ->capture_default_str();
  };
  auto add_plot_opts = [&cfg](CLI::App* sub) {
    sub->add_flag("--plot", cfg.plot, "also write an SVG plot next to the output");
    sub->add_option("--plot-size", cfg.plot_size, "SVG size WIDTHxHEIGHT")
        ->capture_default_str();
    sub->add_option("--select", cfg.select, "1-based series to plot, e.g. 1,3");
  };

  CLI::App* fit = app.add_subcommand("fit", "estimate expansion coefficients of a CSV batch");
  fit->add_option("--input", cfg.input, "input CSV")->required();
  fit->add_option("--output", cfg.output, "coefficient CSV to write")->required();
  add_basis_opts(fit);
  fit->add_flag("--normalize", cfg.normalize, "z-score each series before fitting");
  fit->add_flag("--normal-equations", cfg.normal_equations,
                "solve via explicit normal equations instead of QR");

  CLI::App* den = app.add_subcommand("denoise", "fit and reconstruct a CSV batch");
  den->add_option("--input", cfg.input, "input CSV")->required();
  den->add_option("--output", cfg.output, "reconstruction CSV to write")->required();
  add_basis_opts(den);
  den->add_flag("--normalize", cfg.normalize, "z-score before fitting, map back after");
  add_plot_opts(den);

  CLI::App* syn = app.add_subcommand("synth", "generate synthetic observations");
  syn->add_option("--output", cfg.output, "observation CSV to write")->required();
  add_basis_opts(syn);
  syn->add_option("--samples", cfg.samples, "samples per series")
      ->check(CLI::Range(2, 1 << 24))
      ->capture_default_str();
  syn->add_option("--series", cfg.series, "number of series")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  syn->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
  syn->add_option("--tau", cfg.tau, "mode variances tau^2 as LIST or @FILE (JSON)");
  syn->add_option("--sigma-e", cfg.sigma_e, "white residual noise sigma")
      ->capture_default_str();
  syn->add_option("--mean", cfg.mean, "mean signal, e.g. cos:3 or cos:3+const:0.5")
      ->capture_default_str();

  CLI::App* gib = app.add_subcommand("gibbs", "boundary-artifact comparison across bases");
  gib->add_option("--output", cfg.output, "JSON report to write")->required();
  add_basis_opts(gib);
  gib->add_option("--delta", cfg.delta, "boundary width")
      ->check(CLI::Range(1e-6, 0.499999))
      ->capture_default_str();
  gib->add_option("--signal", cfg.signal, "test signal: ramp|const|cos:L")
      ->capture_default_str();
  gib->add_option("--samples", cfg.samples, "grid points (raised to 8k if smaller)")
      ->check(CLI::Range(2, 1 << 24))
      ->capture_default_str();
  add_plot_opts(gib);

  CLI::App* rec = app.add_subcommand("reconstruct", "evaluate a coefficient CSV on a grid");
  rec->add_option("--input", cfg.input, "coefficient CSV from 'csr fit'")->required();
  rec->add_option("--output", cfg.output, "reconstruction CSV to write")->required();
  rec->add_option("--samples", cfg.samples, "target grid size (default: fitting grid size)")
      ->check(CLI::Range(2, 1 << 24));

  cfg.samples = 0; // so reconstruct can tell "not given" apart; synth resets below
  syn->parse_complete_callback([&cfg] {
    if (cfg.samples == 0) cfg.samples = 1200;
  });
  gib->parse_complete_callback([&cfg] {
    if (cfg.samples == 0) cfg.samples = 1024;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "csr: " << e.what() << "\n";
    return 2;
  }

  try {
    if (fit->parsed()) return cmd_fit(cfg);
    if (den->parsed()) return cmd_denoise(cfg);
    if (syn->parsed()) return cmd_synth(cfg);
    if (gib->parsed()) return cmd_gibbs(cfg);
    if (rec->parsed()) return cmd_reconstruct(cfg);
    std::cerr << "csr: no subcommand\n";
    return 2;
  } catch (const CliUsageError& e) {
    std::cerr << "csr: " << e.what() << "\n";
    return 2;
  } catch (const csr::NumericalError& e) {
    std::cerr << "csr: numerical error: " << e.what() << "\n";
    return 4;
  } catch (const csr::DataError& e) {
    std::cerr << "csr: data error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "csr: " << e.what() << "\n";
    return 1;
  }
}
