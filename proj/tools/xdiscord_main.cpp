// Command-line front end: discord computation for a single state plus the
// figure-ready data files (region maps, X_m curve, J-D diagram, random search).

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "xdiscord/explorer.hpp"
#include "xdiscord/povm.hpp"
#include "xdiscord/serialization.hpp"
#include "xdiscord/version.hpp"

namespace xd = xdiscord;
using nlohmann::json;

namespace {

std::vector<double> parse_doubles(const std::string& text, std::size_t expect,
                                  const std::string& what) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      vals.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw xd::DomainError(what + ": cannot parse '" + tok + "' as a number");
    }
  }
  if (vals.size() != expect)
    throw xd::DomainError(what + ": expected " + std::to_string(expect) +
                          " comma-separated values");
  return vals;
}

json load_json_input(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw xd::DomainError("cannot open input file: " + arg);
  json j;
  in >> j;
  return j;
}

xd::CanonicalXState state_from_input(const json& j) {
  if (j.contains("x")) {
    const auto p = j.get<xd::BlochParams>();
    return xd::from_bloch_params(p, xd::kUserInputTol);
  }
  if (j.contains("rho00")) {
    const auto raw = j.get<xd::RawXState>();
    return xd::canonicalize(raw, xd::kUserInputTol);
  }
  throw xd::DomainError("state JSON must contain BlochParams (x,y,t,s,u) or "
                        "RawXState (rho00..rho33, rho03, rho12) fields");
}

void write_or_print(const std::string& path, const std::string& payload,
                    const std::string& summary) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw xd::DomainError("cannot open output file: " + path);
  out << payload;
  std::cout << summary << "\n";
}

// Config file knob: flags win, so only options the user did not pass on the
// command line are overridden.
template <typename T>
void config_fill(const json& cfg, const CLI::Option* opt, const char* key, T& var) {
  if (opt && opt->count() == 0 && cfg.contains(key)) var = cfg.at(key).get<T>();
}

struct MinimizeFlags {
  int grid = 201;
  double refine_tol = 1e-12;
  bool force_scan = false;

  xd::MinimizeOptions options() const {
    xd::MinimizeOptions o;
    o.grid_points = grid;
    o.refine_tol = refine_tol;
    o.fast_path = !force_scan;
    return o;
  }
};

CLI::Option* add_minimize_flags(CLI::App* cmd, MinimizeFlags& f) {
  cmd->add_option("--grid", f.grid, "Coarse scan grid points over nz in [0,1]")
      ->check(CLI::Range(2, 10000000));
  cmd->add_option("--refine-tol", f.refine_tol, "Golden-section width tolerance in nz");
  return cmd->add_flag("--force-scan", f.force_scan,
                       "Always use the numeric scan, even when the analytic classifier applies");
}

int run(int argc, char** argv) {
  CLI::App app{"Quantum discord of two-qubit X-states"};
  app.set_version_flag("--version", xd::kVersion);
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON config file mirroring the flags (flags win)");

  // compute
  auto* compute = app.add_subcommand("compute", "Discord of a single state (JSON to stdout)");
  std::string x3_arg, params_arg, input_arg, compute_out;
  auto* opt_x3 = compute->add_option("--x3", x3_arg, "X3 family point as m,eps");
  auto* opt_params = compute->add_option("--params", params_arg, "Correlations as x,y,t,s,u");
  auto* opt_input = compute->add_option("--input", input_arg,
                                        "State as JSON: a file path or an inline object");
  opt_x3->excludes(opt_params)->excludes(opt_input);
  opt_params->excludes(opt_input);
  MinimizeFlags compute_min;
  add_minimize_flags(compute, compute_min);
  compute->add_option("-o,--output", compute_out, "Write the result JSON here instead of stdout");

  // region-map
  auto* region = app.add_subcommand("region-map", "Classifier map over an (m, eps) window");
  std::string window = "fig1", cells = "", region_out;
  std::string m_range, eps_range;
  region->add_option("--window", window, "Preset window: fig1 (full view) or fig2 (zoom)")
      ->check(CLI::IsMember({"fig1", "fig2"}));
  region->add_option("--m-range", m_range, "Override m range as lo,hi");
  region->add_option("--eps-range", eps_range, "Override eps range as lo,hi");
  region->add_option("--cells", cells, "Grid size as NMxNE, e.g. 40x40");
  MinimizeFlags region_min;
  add_minimize_flags(region, region_min);
  region->add_option("-o,--output", region_out, "Output CSV path (stdout if omitted)");

  // xm-curve
  auto* xm = app.add_subcommand("xm-curve", "X_m curve: eps(m), theta_opt, delta, delta_tilde");
  int xm_points = 201;
  std::string xm_out;
  xm->add_option("--points", xm_points, "Number of m samples on (0, 1/2]")
      ->check(CLI::Range(1, 1000000));
  MinimizeFlags xm_min;
  add_minimize_flags(xm, xm_min);
  xm->add_option("-o,--output", xm_out, "Output CSV path (stdout if omitted)");

  // jd-diagram
  auto* jd = app.add_subcommand("jd-diagram", "Classical correlation vs discord along X_m");
  int jd_points = 201;
  std::string jd_out;
  jd->add_option("--points", jd_points, "Number of m samples on (0, 1/2]")
      ->check(CLI::Range(1, 1000000));
  MinimizeFlags jd_min;
  add_minimize_flags(jd, jd_min);
  jd->add_option("-o,--output", jd_out, "Output CSV path (stdout if omitted)");

  // search
  auto* search = app.add_subcommand("search", "Random search for two-case-rule violations");
  std::uint64_t n = 1000000;
  std::string constraint = "s_equals_u", search_out, format = "json";
  double gap_tol = 1e-6;
  std::uint64_t seed = 20120515;
  int threads = 0;
  auto* opt_n = search->add_option("-n,--samples", n, "Number of random states");
  search->add_option("--constraint", constraint, "Sampling constraint")
      ->check(CLI::IsMember({"s_equals_u", "none"}));
  search->add_option("--gap-tol", gap_tol, "Violation threshold in bits");
  search->add_option("--seed", seed, "RNG seed");
  search->add_option("--threads", threads,
                     "Worker threads (0: XDISCORD_THREADS env or hardware)");
  search->add_option("--format", format, "Report format")->check(CLI::IsMember({"json"}));
  MinimizeFlags search_min;
  add_minimize_flags(search, search_min);
  search->add_option("-o,--output", search_out, "Output JSON path (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  json cfg = json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw xd::DomainError("cannot open config file: " + config_path);
    in >> cfg;
  }

  if (compute->parsed()) {
    config_fill(cfg, compute->get_option("--grid"), "grid", compute_min.grid);
    config_fill(cfg, compute->get_option("--refine-tol"), "refine-tol", compute_min.refine_tol);
    config_fill(cfg, compute->get_option("--force-scan"), "force-scan", compute_min.force_scan);

    xd::CanonicalXState st;
    if (opt_x3->count() > 0) {
      const auto v = parse_doubles(x3_arg, 2, "--x3");
      st = xd::x3_state({v[0], v[1]});
    } else if (opt_params->count() > 0) {
      const auto v = parse_doubles(params_arg, 5, "--params");
      st = xd::from_bloch_params({v[0], v[1], v[2], v[3], v[4]}, xd::kUserInputTol);
    } else if (opt_input->count() > 0) {
      st = state_from_input(load_json_input(input_arg));
    } else {
      throw xd::DomainError("compute needs one of --x3, --params, --input");
    }

    const xd::DiscordEvaluator ev(st);
    const xd::DiscordResult res = ev.minimize(compute_min.options());
    const double dz = ev.discord_sigma_z();
    const double dx = ev.discord_sigma_x();
    json out = res;
    out["theta_opt"] = res.optimal_theta();
    out["discord_sigma_z"] = dz;
    out["discord_sigma_x"] = dx;
    out["gap"] = std::min(dz, dx) - res.discord;
    out["analytic_class"] = xd::to_string(xd::classify_analytic(ev.state()));
    out["state"] = ev.state();
    out["params"] = ev.params();
    write_or_print(compute_out, out.dump(2) + "\n", "result written to " + compute_out);
    return 0;
  }

  if (region->parsed()) {
    config_fill(cfg, region->get_option("--window"), "window", window);
    config_fill(cfg, region->get_option("--m-range"), "m-range", m_range);
    config_fill(cfg, region->get_option("--eps-range"), "eps-range", eps_range);
    config_fill(cfg, region->get_option("--cells"), "cells", cells);
    config_fill(cfg, region->get_option("--grid"), "grid", region_min.grid);
    config_fill(cfg, region->get_option("--force-scan"), "force-scan", region_min.force_scan);

    double m_lo = 0.0, m_hi = 0.5, e_lo = 0.0, e_hi = 0.4;
    int nm = 100, ne = 100;
    if (window == "fig2") {
      m_lo = 0.1;
      m_hi = 0.102;
      e_lo = 0.227;
      e_hi = 0.229;
      nm = ne = 40;
    }
    if (!m_range.empty()) {
      const auto v = parse_doubles(m_range, 2, "--m-range");
      m_lo = v[0];
      m_hi = v[1];
    }
    if (!eps_range.empty()) {
      const auto v = parse_doubles(eps_range, 2, "--eps-range");
      e_lo = v[0];
      e_hi = v[1];
    }
    if (!cells.empty()) {
      const auto xpos = cells.find('x');
      if (xpos == std::string::npos)
        throw xd::DomainError("--cells must look like 40x40");
      nm = std::stoi(cells.substr(0, xpos));
      ne = std::stoi(cells.substr(xpos + 1));
      if (nm < 1 || ne < 1) throw xd::DomainError("--cells counts must be >= 1");
    }

    const auto cellvec = xd::region_map(m_lo, m_hi, e_lo, e_hi, nm, ne, region_min.options());
    xd::Metadata meta = xd::base_metadata();
    meta.emplace_back("command", "region-map");
    meta.emplace_back("window", window);
    meta.emplace_back("m_range", xd::format_double(m_lo) + ".." + xd::format_double(m_hi));
    meta.emplace_back("eps_range", xd::format_double(e_lo) + ".." + xd::format_double(e_hi));
    meta.emplace_back("cells", std::to_string(nm) + "x" + std::to_string(ne));
    meta.emplace_back("scan_grid", std::to_string(region_min.grid));
    meta.emplace_back("refine_tol", xd::format_double(region_min.refine_tol));
    std::ostringstream os;
    xd::write_region_map_csv(os, cellvec, meta);

    double max_delta = 0.0;
    for (const auto& c : cellvec) max_delta = std::max(max_delta, c.delta);
    std::ostringstream sum;
    sum << "rows=" << cellvec.size() << " max_delta=" << xd::format_double(max_delta)
        << " -> " << region_out;
    write_or_print(region_out, os.str(), sum.str());
    return 0;
  }

  if (xm->parsed() || jd->parsed()) {
    CLI::App* cmd = xm->parsed() ? xm : jd;
    int& points = xm->parsed() ? xm_points : jd_points;
    MinimizeFlags& mf = xm->parsed() ? xm_min : jd_min;
    std::string& outpath = xm->parsed() ? xm_out : jd_out;
    config_fill(cfg, cmd->get_option("--points"), "points", points);
    config_fill(cfg, cmd->get_option("--grid"), "grid", mf.grid);
    config_fill(cfg, cmd->get_option("--refine-tol"), "refine-tol", mf.refine_tol);

    const auto curve = xd::scan_xm_curve(xd::xm_default_grid(points), mf.options());
    xd::Metadata meta = xd::base_metadata();
    meta.emplace_back("command", xm->parsed() ? "xm-curve" : "jd-diagram");
    meta.emplace_back("points", std::to_string(points));
    meta.emplace_back("scan_grid", std::to_string(mf.grid));
    meta.emplace_back("refine_tol", xd::format_double(mf.refine_tol));
    meta.emplace_back("residual_tol", "1e-10");

    std::size_t imax = 0;
    for (std::size_t i = 0; i < curve.size(); ++i)
      if (curve[i].delta > curve[imax].delta) imax = i;
    std::ostringstream os, sum;
    if (xm->parsed()) {
      xd::write_xm_csv(os, curve, meta);
      sum << "rows=" << curve.size();
      if (!curve.empty())
        sum << " max_delta=" << xd::format_double(curve[imax].delta)
            << " at eps=" << xd::format_double(curve[imax].eps)
            << " (m=" << xd::format_double(curve[imax].m) << ")";
      sum << " -> " << outpath;
    } else {
      xd::write_jd_csv(os, xd::jd_diagram(curve), meta);
      sum << "rows=" << curve.size() << " -> " << outpath;
    }
    write_or_print(outpath, os.str(), sum.str());
    return 0;
  }

  if (search->parsed()) {
    config_fill(cfg, opt_n, "n", n);
    config_fill(cfg, search->get_option("--constraint"), "constraint", constraint);
    config_fill(cfg, search->get_option("--gap-tol"), "gap_tol", gap_tol);
    config_fill(cfg, search->get_option("--seed"), "seed", seed);
    config_fill(cfg, search->get_option("--threads"), "threads", threads);
    config_fill(cfg, search->get_option("--grid"), "grid", search_min.grid);

    if (opt_n->count() > 0 && n < 1) throw xd::DomainError("n must be >= 1");
    if (n < 1) throw xd::DomainError("n must be >= 1");

    xd::SearchOptions so;
    so.constraint = constraint == "none" ? xd::SampleConstraint::None
                                         : xd::SampleConstraint::SEqualsU;
    so.gap_tol = gap_tol;
    so.seed = seed;
    so.threads = threads;
    so.minimize = search_min.options();
    const xd::SearchReport rep = xd::random_search(n, so);

    json out = rep;
    out["version"] = xd::kVersion;
    out["scan_grid"] = search_min.grid;
    out["refine_tol"] = search_min.refine_tol;
    std::ostringstream sum;
    sum << "samples=" << rep.samples << " violations=" << rep.violations
        << " rate=" << xd::format_double(100.0 * rep.violation_rate)
        << "% max_gap=" << xd::format_double(rep.max_gap)
        << " probe_gap=" << xd::format_double(rep.probe_gap) << " -> " << search_out;
    write_or_print(search_out, out.dump(2) + "\n", sum.str());
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const xd::NoRoot& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const xd::InvalidState& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const xd::InvalidPovm& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const xd::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
