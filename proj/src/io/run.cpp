// Copyright 2026 The lambdaspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "lambdaspec/io/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <random>

#include <json.hpp>

#include "lambdaspec/core/errors.hpp"
#include "lambdaspec/core/fock.hpp"
#include "lambdaspec/kernels/kernels.hpp"
#include "lambdaspec/model/audit.hpp"
#include "lambdaspec/model/lambda_system.hpp"
#include "lambdaspec/spectrum/checks.hpp"
#include "lambdaspec/spectrum/traces.hpp"

#ifndef LAMBDASPEC_VERSION
#define LAMBDASPEC_VERSION "0.0.0"
#endif

namespace lambdaspec {
namespace {

using ojson = nlohmann::ordered_json;

constexpr int kWindowPoints = 241;
constexpr double kWindowHalfWidths = 12.0;

// Non-finite values become null; dump() prints round-trip precision.
ojson number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

ojson complex_pair(Complex z) { return ojson::array({number(z.real()), number(z.imag())}); }

ojson params_json(const ModelParams& p) {
  ojson j;
  j["omega1"] = number(p.omega1);
  j["omega2"] = number(p.omega2);
  j["delta"] = number(p.delta);
  j["gamma1"] = number(p.gamma1);
  j["gamma2"] = number(p.gamma2);
  j["eta1"] = number(p.eta1);
  j["eta2"] = number(p.eta2);
  j["phi1"] = number(p.phi1);
  j["phi2"] = number(p.phi2);
  j["psi"] = number(p.psi);
  j["pattern"] = std::string(pattern_name(p.pattern));
  j["beta"] = number(p.beta());
  j["n_max"] = p.n_max;
  return j;
}

std::string finish(const ojson& j, std::string_view metadata_json) {
  ojson doc = j;
  if (!metadata_json.empty()) doc["metadata"] = ojson::parse(metadata_json);
  return doc.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

void prepare_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) throw IoError("cannot create output directory " + dir.string());
}

double mean_phonon_number(const Operator& rho) {
  const Operator mu = trace_internal(rho);
  const FockOperators f = build_fock_operators(mu.space().n_max());
  return ((f.a_dag * f.a) * mu).trace().real();
}

SidebandComparison compare_line(const Analysis& analysis, const OracleSpectrum& o, double c) {
  SidebandComparison s;
  s.center_expected = c;
  const double span = kWindowHalfWidths * analysis.sideband.half_width;
  s.oracle = fit_peak(o.omega, o.s, c - span, c + span);
  const SpectrumResult p = spectrum_on_grid(analysis, o.omega);
  const PeakFit pf = fit_peak(p.omega, p.s_total, c - span, c + span);
  s.perturbative_peak = pf.height;
  s.height_deviation = s.oracle.ok && pf.ok ? std::abs(s.oracle.height - pf.height) / pf.height : NAN;
  return s;
}

ojson line_json(const SidebandComparison& s, double hw) {
  ojson j;
  j["center_expected"] = number(s.center_expected);
  j["center_oracle"] = number(s.oracle.center);
  j["peak_perturbative"] = number(s.perturbative_peak);
  j["peak_oracle"] = number(s.oracle.height);
  j["peak_relative_deviation"] = number(s.height_deviation);
  j["half_width_oracle"] = number(s.oracle.half_width);
  j["half_width_over_gamma_s"] = number(s.oracle.ok ? s.oracle.half_width / (2.0 * hw) : NAN);
  j["fit_ok"] = s.oracle.ok;
  return j;
}

void add(std::vector<SelftestLine>& out, std::string name, double value, double tol) {
  out.push_back({std::move(name), value, tol, std::isfinite(value) && value <= tol});
}

double rel(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string metadata_block() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &tm);
  ojson j;
  j["tool"] = "lambdaspec";
  j["version"] = LAMBDASPEC_VERSION;
  j["kernel_backend"] = std::string(kernels::backend_name(kernels::active_backend()));
  j["created_utc"] = stamp;
  return j.dump();
}

ModelParams resolved_params(const RunConfig& config) {
  ModelParams p = config.params;
  if (config.n_max_explicit) return p;
  const ExpansionOperators probe(p);
  p.n_max = default_n_max(phonon_coefficients(probe).n_bar);
  return p;
}

std::vector<double> window_grid(double c, double span, int points) {
  std::vector<double> w = linear_grid(c - span, c + span, points);
  return w;
}

std::vector<double> spectrum_grid(const RunConfig& config, const Analysis& analysis) {
  std::vector<double> grid = linear_grid(config.grid.omega_min, config.grid.omega_max, config.grid.points);
  if (!config.grid.refine_sidebands) return grid;
  const double span = kWindowHalfWidths * analysis.sideband.half_width;
  for (double c : {-analysis.sideband.center, analysis.sideband.center}) {
    for (double w : window_grid(c, span, kWindowPoints))
      if (w >= config.grid.omega_min && w <= config.grid.omega_max) grid.push_back(w);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::string summary_json(const Analysis& a, std::string_view metadata_json) {
  const PhononCoefficients& c = a.coefficients;
  ojson j;
  j["n_bar"] = number(c.n_bar);
  j["A_plus"] = number(c.a_plus);
  j["A_minus"] = number(c.a_minus);
  j["gamma_S"] = number(c.gamma_s);
  j["nu_bar"] = number(c.nu_bar);
  j["s0"] = number(a.sideband.s0);
  j["elastic_weight"] = number(a.elastic_weight);
  ojson li = ojson::array();
  for (Complex z : a.internal_eigenvalues) li.push_back(complex_pair(z));
  j["lambda_I"] = li;
  j["s_plus"] = complex_pair(c.s_plus);
  j["s_minus"] = complex_pair(c.s_minus);
  j["sideband_center"] = number(a.sideband.center);
  j["sideband_half_width"] = number(a.sideband.half_width);
  j["sideband_peak_height"] = number(std::max(a.sideband.peak_plus, a.sideband.peak_minus));
  j["sideband_weight_plus"] = number(a.sideband.weight_plus);
  j["sideband_weight_minus"] = number(a.sideband.weight_minus);
  j["s0_alt"] = number(a.sideband.s0_alt);
  j["s0_alt_deviation"] = number(a.sideband.s0_alt_deviation);
  j["detuning_convention"] = kDetuningConvention == DetuningConvention::GroundShift ? "ground_shift" : "excited_shift";
  j["params"] = params_json(a.params);
  return finish(j, metadata_json);
}

std::string spectrum_csv(const SpectrumResult& s) {
  std::string out = "omega,S_total,S_SB,S_M\n";
  out.reserve(out.size() + s.omega.size() * 96);
  for (std::size_t k = 0; k < s.omega.size(); ++k) {
    out += format_number(s.omega[k]);
    out += ',';
    out += format_number(s.s_total[k]);
    out += ',';
    out += format_number(s.s_sb[k]);
    out += ',';
    out += format_number(s.s_m[k]);
    out += '\n';
  }
  return out;
}

std::string oracle_csv(const OracleSpectrum& s) {
  std::string out = "omega,S_oracle\n";
  for (std::size_t k = 0; k < s.omega.size(); ++k) {
    out += format_number(s.omega[k]);
    out += ',';
    out += std::isfinite(s.s[k]) ? format_number(s.s[k]) : std::string("nan");
    out += '\n';
  }
  return out;
}

std::string plot_script(const Analysis& a, const GridConfig& grid, std::string_view csv_name,
                        std::string_view image_name) {
  // Inset on the Stokes line, the stronger of the two.
  const double c = -a.sideband.center;
  const double span = kWindowHalfWidths * a.sideband.half_width;
  std::string s;
  s += "# gnuplot script, run as: gnuplot spectrum.gp\n";
  s += "set terminal pngcairo size 960,680 enhanced\n";
  s += "set output '" + std::string(image_name) + "'\n";
  s += "set datafile separator ','\n";
  s += "set key autotitle columnhead\n";
  s += "set multiplot\n";
  s += "set xlabel '({/Symbol w} - {/Symbol w}_{L1}) / {/Symbol n}'\n";
  s += "set ylabel 'S({/Symbol w})'\n";
  s += "set logscale y\n";
  s += "set format y '10^{%L}'\n";
  s += "set xrange [" + format_number(grid.omega_min) + ":" + format_number(grid.omega_max) + "]\n";
  s += "set key top left\n";
  s += "plot '" + std::string(csv_name) + "' using 1:2 with lines lw 1.5 lc rgb 'black', \\\n";
  s += "     '' using 1:3 with lines lc rgb 'red', \\\n";
  s += "     '' using 1:4 with lines dt 2 lc rgb 'blue'\n";
  s += "set origin 0.56,0.50\n";
  s += "set size 0.40,0.42\n";
  s += "unset logscale y\n";
  s += "set format y '%g'\n";
  s += "unset xlabel\n";
  s += "unset ylabel\n";
  s += "unset key\n";
  s += "set xrange [" + format_number(c - span) + ":" + format_number(c + span) + "]\n";
  s += "set xtics " + format_number(span / 2) + "\n";
  s += "set arrow 1 from " + format_number(c) + ", graph 0 to " + format_number(c) + ", graph 1 nohead dt 3\n";
  s += "plot '" + std::string(csv_name) + "' using 1:2 with lines lw 1.5 lc rgb 'black', \\\n";
  s += "     '' using 1:3 with lines lc rgb 'red'\n";
  s += "unset multiplot\n";
  return s;
}

Comparison compare_with_oracle(const RunConfig& config, const Analysis& analysis) {
  Comparison cmp;
  cmp.n_bar = analysis.coefficients.n_bar;
  cmp.elastic_weight = analysis.elastic_weight;
  cmp.half_width_expected = analysis.sideband.half_width;
  cmp.oracle_n_bar = cmp.oracle_elastic_weight = cmp.background_deviation = cmp.cutoff_population = NAN;

  const double c = analysis.sideband.center;
  const double span = kWindowHalfWidths * analysis.sideband.half_width;
  cmp.stokes.center_expected = -c;
  cmp.anti_stokes.center_expected = c;

  ModelParams op = analysis.params;
  op.n_max = config.oracle.n_max;
  try {
    const FullLiouvillian full = build_full_liouvillian(op, config.oracle.quadrature_nodes);
    const Operator rho = steady_state(full);
    cmp.oracle_n_bar = mean_phonon_number(rho);

    std::vector<double> grid = linear_grid(config.grid.omega_min, config.grid.omega_max, config.grid.points);
    for (double x : {-c, c})
      for (double w : window_grid(x, span, kWindowPoints)) grid.push_back(w);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    const OracleSpectrum o = oracle_spectrum(full, rho, grid, op.psi);
    cmp.oracle_elastic_weight = o.elastic_weight;
    cmp.cutoff_population = o.cutoff_population;
    cmp.warnings = o.warnings;
    cmp.failed_points = static_cast<int>(
        std::count_if(o.errors.begin(), o.errors.end(), [](const std::string& e) { return !e.empty(); }));
    cmp.stokes = compare_line(analysis, o, -c);
    cmp.anti_stokes = compare_line(analysis, o, c);

    const SpectrumResult p = spectrum_on_grid(analysis, grid);
    double dmax = 0.0, smax = 0.0;
    for (std::size_t k = 0; k < grid.size(); ++k) {
      // One- and two-phonon lines are narrow; the two-phonon interference
      // dips of the full model lie beyond second order.
      const double a = std::abs(grid[k]);
      if (std::abs(a - c) < span || std::abs(a - 2.0 * c) < span || !std::isfinite(o.s[k])) continue;
      dmax = std::max(dmax, std::abs(o.s[k] - p.s_total[k]));
      smax = std::max(smax, std::abs(p.s_total[k]));
    }
    cmp.background_deviation = smax > 0.0 ? dmax / smax : NAN;
  } catch (const NumericalFailure& e) {
    cmp.oracle_error = e.what();
  }
  return cmp;
}

std::string compare_json(const RunConfig& config, const Analysis& analysis, const Comparison& cmp,
                         std::string_view metadata_json) {
  ojson j;
  j["n_bar"] = number(cmp.n_bar);
  j["oracle_n_bar"] = number(cmp.oracle_n_bar);
  j["n_bar_relative_deviation"] = number(std::abs(cmp.oracle_n_bar - cmp.n_bar) / cmp.n_bar);
  j["sideband_center"] = number(analysis.sideband.center);
  j["elastic_weight"] = number(cmp.elastic_weight);
  j["oracle_elastic_weight"] = number(cmp.oracle_elastic_weight);
  j["sideband_half_width"] = number(cmp.half_width_expected);
  j["stokes"] = line_json(cmp.stokes, cmp.half_width_expected);
  j["anti_stokes"] = line_json(cmp.anti_stokes, cmp.half_width_expected);
  j["background_relative_deviation"] = number(cmp.background_deviation);
  j["background_excluded_half_span"] = number(kWindowHalfWidths * cmp.half_width_expected);
  j["oracle_n_max"] = config.oracle.n_max;
  j["oracle_quadrature_nodes"] = config.oracle.quadrature_nodes;
  j["oracle_cutoff_population"] = number(cmp.cutoff_population);
  j["oracle_failed_points"] = cmp.failed_points;
  j["warnings"] = cmp.warnings;
  j["oracle_error"] = cmp.oracle_error.empty() ? ojson(nullptr) : ojson(cmp.oracle_error);
  if (config.reference) {
    ojson r;
    r["n_bar_reference"] = number(config.reference->n_bar);
    r["n_bar_computed"] = number(analysis.coefficients.n_bar);
    r["relative_deviation"] =
        number(std::abs(analysis.coefficients.n_bar - config.reference->n_bar) / config.reference->n_bar);
    r["source"] = config.reference->source;
    j["reference"] = r;
  }
  j["params"] = params_json(analysis.params);
  return finish(j, metadata_json);
}

std::vector<SelftestLine> selftest(const RunConfig& config, const Analysis& a) {
  std::vector<SelftestLine> out;
  const ModelParams& p = a.params;
  const PhononCoefficients& c = a.coefficients;

  const DetuningAudit audit = detuning_sign_audit(p);
  add(out, "detuning convention matches audit", audit.preferred == kDetuningConvention ? 0.0 : 1.0, 0.0);
  add(out, "s(+nu) closed form", rel(c.s_plus, coupling_closed_form(p, 1.0)), 1e-9);
  add(out, "s(-nu) closed form", rel(c.s_minus, coupling_closed_form(p, -1.0)), 1e-9);
  add(out, "sideband peak heights equal", std::abs(a.sideband.peak_plus / a.sideband.peak_minus - 1.0), 1e-9);
  add(out, "sideband peak equals 2 s0", std::abs(a.sideband.peak_minus / (2.0 * a.sideband.s0) - 1.0), 1e-9);
  add(out, "s0 alternative form", a.sideband.s0_alt_deviation, 1e-8);

  for (const LineShapeTerm& t : a.terms) {
    if (t.component != Component::Sideband) continue;
    const double expect = t.ell > 0 ? a.sideband.weight_plus : a.sideband.weight_minus;
    add(out, t.ell > 0 ? "sideband weight ell=+1" : "sideband weight ell=-1", rel(t.weight, expect), 1e-8);
  }

  const PhononRates rates = effective_rates(c);
  const std::vector<int> levels{0, 1, 2, 3};
  const std::vector<int> ells{-2, -1, 0, 1, 2};
  // Truncate where the thermal tail falls below 1e-12 so the doubling check
  // converges. Beyond a few hundred levels the birth-death generator is too
  // non-normal for 1e-8 eigenvalues; the check is skipped there.
  const double q = c.n_bar / (1.0 + c.n_bar);
  const int n_phonon = q > 0.0 ? std::max(40, static_cast<int>(std::ceil(std::log(1e-12) / std::log(q)))) : 40;
  const Operator mu = thermal_mu(c.n_bar, std::min(n_phonon, 1500));
  for (int ell : {-1, 0, 1}) {
    const ExternalTraces e = external_trace_identities(c.n_bar, ell);
    const ExternalTraces n = external_traces_numeric(mu, ell);
    const double d = std::max({rel(e.mu_x, n.mu_x), rel(e.commutator, n.commutator), rel(e.x2_mu, n.x2_mu)});
    add(out, "external traces ell=" + std::to_string(ell), d, 1e-8);
  }

  if (n_phonon <= 400) {
    // Higher modes have heavier tails than the thermal state; double until
    // the truncation check is met.
    for (int n = n_phonon;; n *= 2) {
      try {
        double worst = 0.0;
        for (const PhononMode& m : phonon_effective_eigensystem(rates, n, levels, ells))
          worst = std::max(worst, std::abs(m.eigenvalue - m.closed_form) / c.gamma_s);
        add(out, "phonon generator eigenvalues (n_max " + std::to_string(n) + ")", worst, 1e-6);
        break;
      } catch (const TruncationError&) {
        if (n > 400) throw;
      }
    }
  } else {
    out.push_back({"phonon generator eigenvalues (needs n_max " + std::to_string(n_phonon) + ")", NAN, 1e-6, true, true});
  }

  {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::vector<double> omega(257);
    std::vector<Complex> poles(13), weights(13);
    for (double& w : omega) w = u(rng);
    for (auto& z : poles) z = Complex(-std::abs(u(rng)) - 0.01, u(rng));
    for (auto& z : weights) z = Complex(u(rng), u(rng));
    std::vector<double> a1(omega.size()), a2(omega.size());
    kernels::scalar::accumulate_pole_sum(omega, poles, weights, a1);
    kernels::accumulate_pole_sum(omega, poles, weights, a2);
    double d = 0.0;
    for (std::size_t k = 0; k < omega.size(); ++k) d = std::max(d, std::abs(a1[k] - a2[k]) / (1.0 + std::abs(a1[k])));
    add(out, std::string("pole-sum kernel ") + std::string(kernels::backend_name(kernels::active_backend())) +
                 " vs scalar", d, 1e-12);
  }

  ModelParams small = p;
  small.n_max = std::min(p.n_max, 8);
  const VanishingReport v = vanishing_order_checks(small);
  for (const CheckEntry& e : v.entries) add(out, "vanishing: " + e.name, e.value, e.tolerance);

  (void)config;
  return out;
}

int run_command(std::string_view command, const RunConfig& config, const RunOptions& options) {
  std::ostream& out = options.out ? *options.out : std::cout;
  std::ostream& err = options.err ? *options.err : std::cerr;
  const std::string meta = options.metadata ? metadata_block() : std::string();
  try {
    if (command != "summary" && command != "spectrum" && command != "oracle" && command != "compare" &&
        command != "selftest") {
      err << "error: unknown command '" << command << "'\n";
      return static_cast<int>(ExitCode::Config);
    }
    RunConfig cfg = config;
    cfg.params = resolved_params(config);
    const Analysis analysis = analyze(cfg.params);

    if (command == "selftest") {
      bool ok = true;
      for (const SelftestLine& l : selftest(cfg, analysis)) {
        out << (l.skipped ? "skip " : l.passed ? "ok   " : "FAIL ") << l.name << "  " << format_number(l.value) << " (tol "
            << format_number(l.tolerance) << ")\n";
        ok = ok && l.passed;
      }
      return static_cast<int>(ok ? ExitCode::Ok : ExitCode::Numerical);
    }

    prepare_dir(options.out_dir);
    if (command == "summary") {
      write_file(options.out_dir / "summary.json", summary_json(analysis, meta));
    } else if (command == "spectrum") {
      const SpectrumResult s = spectrum_on_grid(analysis, spectrum_grid(cfg, analysis));
      write_file(options.out_dir / "summary.json", summary_json(analysis, meta));
      write_file(options.out_dir / "spectrum.csv", spectrum_csv(s));
      write_file(options.out_dir / "spectrum.gp", plot_script(analysis, cfg.grid, "spectrum.csv", "spectrum.png"));
    } else if (command == "oracle") {
      ModelParams op = cfg.params;
      op.n_max = cfg.oracle.n_max;
      const FullLiouvillian full = build_full_liouvillian(op, cfg.oracle.quadrature_nodes);
      const Operator rho = steady_state(full);
      const OracleSpectrum o = oracle_spectrum(full, rho, spectrum_grid(cfg, analysis), op.psi);
      write_file(options.out_dir / "oracle.csv", oracle_csv(o));
      for (const std::string& w : o.warnings) err << "warning: " << w << "\n";
      int failed = 0;
      for (std::size_t k = 0; k < o.errors.size(); ++k)
        if (!o.errors[k].empty()) {
          ++failed;
          err << "error: omega=" << format_number(o.omega[k]) << ": " << o.errors[k] << "\n";
        }
      if (failed > 0) return static_cast<int>(ExitCode::Numerical);
    } else {
      const Comparison cmp = compare_with_oracle(cfg, analysis);
      for (const std::string& w : cmp.warnings) err << "warning: " << w << "\n";
      write_file(options.out_dir / "compare.json", compare_json(cfg, analysis, cmp, meta));
      if (!cmp.oracle_error.empty()) {
        err << "numerical failure: oracle: " << cmp.oracle_error << "\n";
        return static_cast<int>(ExitCode::Numerical);
      }
    }
    return static_cast<int>(ExitCode::Ok);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Config);
  } catch (const InvalidArgument& e) {
    err << "config error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Config);
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Io);
  } catch (const HeatingRegime& e) {
    err << "heating regime: " << e.what() << " (A_plus=" << format_number(e.a_plus())
        << ", A_minus=" << format_number(e.a_minus()) << ")\n";
    return static_cast<int>(ExitCode::Heating);
  } catch (const NumericalFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Numerical);
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Numerical);
  }
}

int run_command_file(std::string_view command, const std::filesystem::path& config_path,
                     const RunOptions& options) {
  std::ostream& err = options.err ? *options.err : std::cerr;
  try {
    return run_command(command, load_config(config_path), options);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Config);
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Io);
  }
}

}  // namespace lambdaspec
