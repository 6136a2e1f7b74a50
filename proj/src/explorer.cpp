#include "xdiscord/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "xdiscord/povm.hpp"
#include "xdiscord/version.hpp"

namespace xdiscord {

namespace {

constexpr std::uint64_t kMaxRejections = 1000000;
constexpr std::uint64_t kChunkSize = 65536;

// The published counterexample to the two-case rule; u is not stated there
// but the surrounding search used s = u.
constexpr BlochParams kProbeParams{-0.8812, 0.9407, -0.9383, 0.2898, 0.2898};

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  return splitmix64(seed ^ splitmix64(chunk + 1));
}

bool positive(const BlochParams& p) {
  return (1.0 + p.t) * (1.0 + p.t) >=
             (p.x + p.y) * (p.x + p.y) + (p.s - p.u) * (p.s - p.u) &&
         (1.0 - p.t) * (1.0 - p.t) >=
             (p.x - p.y) * (p.x - p.y) + (p.s + p.u) * (p.s + p.u);
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("XDISCORD_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

struct GapResult {
  double gap;
  double nz;
};

// min(D_0, D_{pi/2}) - D_scan. Gaps that could cross the violation threshold
// are re-measured on a grid 10x finer so the decision does not hinge on the
// coarse scan, and the refined value is the one reported.
GapResult measure_gap(const DiscordEvaluator& ev, const MinimizeOptions& scan_opts,
                      double gap_tol) {
  MinimizeOptions forced = scan_opts;
  forced.fast_path = false;
  DiscordResult r = ev.minimize(forced);
  const double ends = std::min(ev.discord_sigma_z(), ev.discord_sigma_x());
  double gap = ends - r.discord;
  if (gap > 0.5 * gap_tol) {
    MinimizeOptions fine = forced;
    fine.grid_points = forced.grid_points * 10;
    r = ev.minimize(fine);
    gap = ends - r.discord;
  }
  return {gap, r.optimal_nz};
}

struct ChunkResult {
  std::uint64_t violations = 0;
  std::uint64_t attempts = 0;
  double max_gap = -1.0;
  BlochParams max_params{};
};

ChunkResult run_chunk(std::uint64_t seed, std::uint64_t chunk, std::uint64_t count,
                      const SearchOptions& opts) {
  SampleRng rng(chunk_seed(seed, chunk));
  ChunkResult res;
  for (std::uint64_t i = 0; i < count; ++i) {
    const BlochParams p = sample_random_xstate(rng, opts.constraint, &res.attempts);
    const DiscordEvaluator ev(p);
    const GapResult g = measure_gap(ev, opts.minimize, opts.gap_tol);
    if (g.gap > opts.gap_tol) {
      ++res.violations;
      if (g.gap > res.max_gap) {
        res.max_gap = g.gap;
        res.max_params = ev.params();
      }
    }
  }
  return res;
}

void append_kv(std::ostream& os, const Metadata& meta) {
  for (const auto& [k, v] : meta) os << "# " << k << ": " << v << "\n";
}

}  // namespace

const char* to_string(SampleConstraint c) {
  return c == SampleConstraint::SEqualsU ? "s_equals_u" : "none";
}

BlochParams sample_random_xstate(SampleRng& rng, SampleConstraint constraint,
                                 std::uint64_t* attempts) {
  for (std::uint64_t tries = 0; tries < kMaxRejections; ++tries) {
    BlochParams p;
    p.x = rng.uniform_pm1();
    p.y = rng.uniform_pm1();
    p.t = rng.uniform_pm1();
    p.s = rng.uniform_pm1();
    p.u = constraint == SampleConstraint::SEqualsU ? p.s : rng.uniform_pm1();
    if (attempts) ++*attempts;
    if (positive(p)) return p;
  }
  throw std::runtime_error("rejection sampling failed to find a valid state");
}

SearchReport random_search(std::uint64_t n, const SearchOptions& opts) {
  if (n < 1) throw DomainError("random_search requires n >= 1");

  const std::uint64_t chunks = (n + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkResult> results(chunks);

  const int threads = std::min<int>(resolve_threads(opts.threads),
                                    static_cast<int>(std::min<std::uint64_t>(chunks, 64)));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      const std::uint64_t count = std::min(kChunkSize, n - c * kChunkSize);
      results[c] = run_chunk(opts.seed, c, count, opts);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SearchReport rep;
  rep.samples = n;
  rep.seed = opts.seed;
  rep.constraint = to_string(opts.constraint);
  rep.gap_tol = opts.gap_tol;
  rep.sampling_law =
      "uniform rejection sampling of (x,y,t,s,u) on [-1,1]; the reference "
      "search did not specify its measure, so rates are comparable only in "
      "order of magnitude";
  std::uint64_t attempts = 0;
  for (std::uint64_t c = 0; c < chunks; ++c) {  // merge in chunk order
    const ChunkResult& r = results[c];
    rep.violations += r.violations;
    attempts += r.attempts;
    if (r.max_gap > rep.max_gap) {
      rep.max_gap = r.max_gap;
      rep.max_gap_params = r.max_params;
    }
  }
  rep.violation_rate = static_cast<double>(rep.violations) / static_cast<double>(n);
  rep.acceptance_rate =
      attempts > 0 ? static_cast<double>(n) / static_cast<double>(attempts) : 0.0;

  rep.probe_params = kProbeParams;
  rep.probe_gap = measure_gap(DiscordEvaluator(kProbeParams), opts.minimize, opts.gap_tol).gap;
  return rep;
}

std::vector<RegionCell> region_map(double m_lo, double m_hi, double eps_lo, double eps_hi,
                                   int nm, int neps, const MinimizeOptions& opts) {
  if (nm < 1 || neps < 1) throw DomainError("region_map grid counts must be >= 1");
  MinimizeOptions forced = opts;
  forced.fast_path = false;

  std::vector<RegionCell> cells;
  cells.reserve(static_cast<std::size_t>(nm) * neps);
  for (int i = 0; i < nm; ++i) {
    const double m = nm == 1 ? m_lo : m_lo + (m_hi - m_lo) * i / (nm - 1);
    for (int j = 0; j < neps; ++j) {
      const double eps = neps == 1 ? eps_lo : eps_lo + (eps_hi - eps_lo) * j / (neps - 1);
      const CanonicalXState st = x3_state({m, eps});
      const DiscordEvaluator ev(st);
      const DiscordResult scan = ev.minimize(forced);
      RegionCell cell;
      cell.m = m;
      cell.eps = eps;
      cell.cls = classify_analytic(st);
      cell.theta_opt = scan.optimal_theta();
      cell.delta = std::min(ev.discord_sigma_z(), ev.discord_sigma_x()) - scan.discord;
      cells.push_back(cell);
    }
  }
  return cells;
}

std::vector<double> xm_default_grid(int points) {
  if (points < 1) throw DomainError("xm grid needs at least one point");
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) grid[i] = 0.5 * (i + 1) / points;
  return grid;
}

std::vector<XmPoint> scan_xm_curve(const std::vector<double>& m_grid,
                                   const MinimizeOptions& opts) {
  std::vector<XmPoint> pts;
  pts.reserve(m_grid.size());
  std::optional<double> hint;
  for (double m : m_grid) {
    pts.push_back(solve_xm(m, opts, hint));
    hint = pts.back().theta_opt;
  }
  return pts;
}

std::vector<JdPoint> jd_diagram(const std::vector<XmPoint>& points) {
  std::vector<JdPoint> out;
  out.reserve(points.size());
  for (const XmPoint& pt : points) {
    const DiscordEvaluator ev(x3_state({pt.m, pt.eps}));
    const double mi = ev.mutual_information();
    JdPoint jd;
    jd.m = pt.m;
    jd.eps = pt.eps;
    jd.d0 = std::min(ev.discord_sigma_z(), ev.discord_sigma_x());
    jd.d_vn = jd.d0 - pt.delta;
    jd.d_povm_upper = jd.d0 - pt.delta_tilde;
    jd.j0 = mi - jd.d0;
    jd.j_vn = mi - jd.d_vn;
    jd.j_povm_lower = mi - jd.d_povm_upper;
    out.push_back(jd);
  }
  return out;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Metadata base_metadata() {
  return {{"version", kVersion}};
}

void write_region_map_csv(std::ostream& os, const std::vector<RegionCell>& cells,
                          const Metadata& meta) {
  append_kv(os, meta);
  os << "m,eps,class,theta_opt,delta\n";
  for (const RegionCell& c : cells)
    os << format_double(c.m) << ',' << format_double(c.eps) << ',' << to_string(c.cls)
       << ',' << format_double(c.theta_opt) << ',' << format_double(c.delta) << '\n';
}

void write_xm_csv(std::ostream& os, const std::vector<XmPoint>& points, const Metadata& meta) {
  append_kv(os, meta);
  os << "m,eps,theta_opt,delta,delta_tilde\n";
  for (const XmPoint& p : points)
    os << format_double(p.m) << ',' << format_double(p.eps) << ','
       << format_double(p.theta_opt) << ',' << format_double(p.delta) << ','
       << format_double(p.delta_tilde) << '\n';
}

void write_jd_csv(std::ostream& os, const std::vector<JdPoint>& points, const Metadata& meta) {
  append_kv(os, meta);
  os << "m,eps,j0,d0,j_vn,d_vn,j_povm_lower,d_povm_upper\n";
  for (const JdPoint& p : points)
    os << format_double(p.m) << ',' << format_double(p.eps) << ',' << format_double(p.j0)
       << ',' << format_double(p.d0) << ',' << format_double(p.j_vn) << ','
       << format_double(p.d_vn) << ',' << format_double(p.j_povm_lower) << ','
       << format_double(p.d_povm_upper) << '\n';
}

}  // namespace xdiscord
