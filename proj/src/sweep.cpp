#include "spp/sweep.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <thread>

#include "spp/constants.hpp"
#include "spp/dispersion.hpp"
#include "spp/errors.hpp"
#include "spp/kernels.hpp"
#include "spp/propagation.hpp"

namespace spp {

namespace {

constexpr const char* kVersion = "0.1.0";

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

double grid_point(double lo, double hi, int count, int i) {
  if (count == 1) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

// Deterministic static chunking; worker w handles [w*chunk, ...).
void parallel_for(int n, int jobs, const std::function<void(int)>& body) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  const int chunk = (n + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    const int lo = w * chunk;
    const int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body] {
      for (int i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::string geometry_name(Geometry g) {
  return to_string(g);
}

}  // namespace

std::string format_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

void SweepConfig::apply(const ConfigFile::Section& s) {
  if (s.has("material")) material = s.get_string("material");
  if (s.has("eps1")) eps1 = s.get_double("eps1");
  if (s.has("geometry")) geometry = geometry_from_string(s.get_string("geometry"));
  if (s.has("omega_min")) omega_min = s.get_double("omega_min");
  if (s.has("omega_max")) omega_max = s.get_double("omega_max");
  if (s.has("omega_count")) omega_count = static_cast<int>(s.get_long("omega_count"));
  if (s.has("d_min")) d_min = s.get_double("d_min");
  if (s.has("d_max")) d_max = s.get_double("d_max");
  if (s.has("d_count")) d_count = static_cast<int>(s.get_long("d_count"));
  if (s.has("x_min")) x_min = s.get_double("x_min");
  if (s.has("x_max")) x_max = s.get_double("x_max");
  if (s.has("x_count")) x_count = static_cast<int>(s.get_long("x_count"));
  if (s.has("delta_lambda")) delta_lambda = s.get_double("delta_lambda");
  if (s.has("mu")) mu = s.get_double("mu");
  if (s.has("n")) n = static_cast<int>(s.get_long("n"));
}

void SweepConfig::validate() const {
  if (!(eps1 > 1.0)) throw domain_error("sweep: eps1 must be > 1");
  if (!(omega_min > 0.0) || !(omega_max > omega_min))
    throw domain_error("sweep: omega range must be positive and ordered");
  if (!(d_min > 0.0) || !(d_max > d_min)) throw domain_error("sweep: d range must be positive and ordered");
  if (!(x_min >= 0.0) || !(x_max > x_min)) throw domain_error("sweep: x range must be ordered, x_min >= 0");
  if (omega_count < 2 || d_count < 2 || x_count < 2)
    throw domain_error("sweep: grid counts must be >= 2");
  if (mu < 0.0 || mu > 1.0) throw domain_error("sweep: mu must lie in [0, 1]");
  if (n < 1) throw domain_error("sweep: n must be >= 1");
  if (jobs < 1) throw domain_error("sweep: jobs must be >= 1");
  if (format != "csv" && format != "json") throw domain_error("sweep: format must be csv|json");
}

RunManifest RunManifest::make(const std::string& command, const SweepConfig& cfg) {
  RunManifest m;
  m.version = kVersion;
  m.command = command;
  m.echo = "command=" + command + ";material=" + cfg.material + ";eps1=" + format_sci(cfg.eps1) +
           ";geometry=" + geometry_name(cfg.geometry) + ";omega=[" + format_sci(cfg.omega_min) +
           "," + format_sci(cfg.omega_max) + "," + std::to_string(cfg.omega_count) + "];d=[" +
           format_sci(cfg.d_min) + "," + format_sci(cfg.d_max) + "," +
           std::to_string(cfg.d_count) + "];x=[" + format_sci(cfg.x_min) + "," +
           format_sci(cfg.x_max) + "," + std::to_string(cfg.x_count) +
           "];delta_lambda=" + format_sci(cfg.delta_lambda) + ";mu=" + format_sci(cfg.mu) +
           ";n=" + std::to_string(cfg.n);
  m.digest = fnv1a64(m.echo);
  return m;
}

std::string RunManifest::digest_hex() const {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

void write_table(std::ostream& os, const Table& t, const RunManifest& m,
                 const std::string& format) {
  if (format == "json") {
    os << "{\n  \"manifest\": {\"tool\": \"sppsim\", \"version\": \"" << m.version
       << "\", \"command\": \"" << m.command << "\", \"digest\": \"" << m.digest_hex()
       << "\", \"params\": \"" << m.echo << "\"},\n  \"columns\": [";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      os << (i ? ", " : "") << '"' << t.columns[i] << '"';
    os << "],\n  \"rows\": [\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      os << "    [";
      for (std::size_t c = 0; c < t.rows[r].size(); ++c) {
        const std::string& cell = t.rows[r][c];
        os << (c ? ", " : "") << (cell.empty() ? "null" : cell);
      }
      os << (r + 1 < t.rows.size() ? "],\n" : "]\n");
    }
    os << "  ]\n}\n";
    return;
  }
  os << "# sppsim " << m.version << " " << m.command << " digest=" << m.digest_hex() << "\n";
  os << "# params: " << m.echo << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
    os << "\n";
  }
}

Table sweep_dispersion(const PermittivityModel& metal, const SweepConfig& cfg) {
  Table t;
  t.columns = {"omega", "k_spp", "k_light", "theta_match_deg"};
  const int n = cfg.omega_count;
  std::vector<double> w(n), k(n), nu(n), nu0(n), sin2(n);
  for (int i = 0; i < n; ++i) w[i] = grid_point(cfg.omega_min, cfg.omega_max, n, i);
  kernels::spp_dispersion(kernels::params_of(metal), cfg.eps1, w.data(), k.data(),
                          nu.data(), nu0.data(), sin2.data(), n);
  t.rows.resize(n);
  for (int i = 0; i < n; ++i) {
    auto& row = t.rows[i];
    row.resize(4);
    row[0] = format_sci(w[i]);
    row[1] = std::isnan(k[i]) ? "" : format_sci(k[i]);
    row[2] = format_sci(w[i] / speed_of_light);
    row[3] = std::isnan(sin2[i])
                 ? ""
                 : format_sci(std::asin(std::sqrt(sin2[i])) * 180.0 / pi);
  }
  return t;
}

Table sweep_coupling_map(const PermittivityModel& metal, const SweepConfig& cfg) {
  Table t;
  t.columns = {"omega", "d", "g_tilde", "penetration", "feasible"};
  const int nw = cfg.omega_count, nd = cfg.d_count;
  const int total = nw * nd;
  t.rows.resize(total);
  parallel_for(total, cfg.jobs, [&](int idx) {
    const int iw = idx / nd, id = idx % nd;
    const double w = grid_point(cfg.omega_min, cfg.omega_max, nw, iw);
    const double d = std::exp(grid_point(std::log(cfg.d_min), std::log(cfg.d_max), nd, id));
    auto& row = t.rows[idx];
    row.assign(5, "");
    row[0] = format_sci(w);
    row[1] = format_sci(d);
    if (!is_bound_mode(metal, w)) {
      row[4] = "0";
      return;
    }
    const LayerStack stack(cfg.geometry, cfg.eps1, d, metal);
    const double pen = penetration_factor(stack, w);
    row[3] = format_sci(pen);
    if (!is_matchable(metal, stack.eps1, w)) {
      row[4] = "0";
      return;
    }
    const TransferCoefficients tc = transfer_coefficients(stack, w);
    row[2] = format_sci(tc.g_tilde);
    row[4] = pen <= 1.0 ? "1" : "0";
  });
  return t;
}

Table sweep_optimize(const PermittivityModel& metal, const SweepConfig& cfg) {
  Table t;
  t.columns = {"omega", "d_opt", "g_tilde_opt"};
  const int nw = cfg.omega_count;
  t.rows.resize(nw);
  parallel_for(nw, cfg.jobs, [&](int iw) {
    const double w = grid_point(cfg.omega_min, cfg.omega_max, nw, iw);
    auto& row = t.rows[iw];
    row.assign(3, "");
    row[0] = format_sci(w);
    if (!is_matchable(metal, cfg.eps1, w)) return;
    const LayerStack tmpl(cfg.geometry, cfg.eps1, cfg.d_min, metal);
    try {
      const auto [d_opt, tc] = optimize_thickness(tmpl, w, {cfg.d_min, cfg.d_max});
      row[1] = format_sci(d_opt);
      row[2] = format_sci(tc.g_tilde);
    } catch (const infeasible_error&) {
      // recorded as empty cells; the sweep continues
    }
  });
  return t;
}

Table sweep_propagate(const PermittivityModel& metal, const SweepConfig& cfg) {
  Table t;
  t.columns = {"omega", "x", "me_over_n"};
  const int nw = cfg.omega_count, nx = cfg.x_count;
  std::vector<double> xs(nx);
  for (int i = 0; i < nx; ++i) xs[i] = grid_point(cfg.x_min, cfg.x_max, nx, i);
  t.rows.resize(nw * nx);
  parallel_for(nw, cfg.jobs, [&](int iw) {
    const double w = grid_point(cfg.omega_min, cfg.omega_max, nw, iw);
    std::vector<std::string> me(nx, "");
    if (is_matchable(metal, cfg.eps1, w)) {
      const LayerStack tmpl(cfg.geometry, cfg.eps1, cfg.d_min, metal);
      try {
        const auto [d_opt, tc] = optimize_thickness(tmpl, w, {cfg.d_min, cfg.d_max});
        (void)d_opt;
        const double kappa0 = spp_wavevector_lossy(metal, w).kappa;
        const double beta2 = std::norm(tc.beta);
        std::vector<double> vals(nx);
        kernels::decay_law(cfg.mu * beta2, 2.0 * kappa0, xs.data(), vals.data(), nx);
        for (int i = 0; i < nx; ++i) me[i] = format_sci(vals[i]);
      } catch (const infeasible_error&) {
      }
    }
    for (int i = 0; i < nx; ++i) {
      auto& row = t.rows[iw * nx + i];
      row = {format_sci(w), format_sci(xs[i]), me[i]};
    }
  });
  return t;
}

}  // namespace spp
