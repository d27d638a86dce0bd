#include "gmhd/io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "gmhd/errors.hpp"
#include "gmhd/gevrey.hpp"

namespace gmhd {

namespace {

namespace pt = boost::property_tree;
namespace fs = std::filesystem;

const std::map<std::string, std::set<std::string>> kSchema = {
    {"grid", {"n"}},
    {"initial", {"kind", "seed", "kmax", "amplitude", "decay"}},
    {"time", {"t_end", "dt", "cfl", "cadence"}},
    {"gevrey", {"r", "s", "tau0"}},
    {"radius", {"C", "C_tilde"}},
    {"diagnostics", {"sup_refine", "blowup_factor"}},
    {"output", {"dir", "csv", "spectrum", "checkpoint_every"}},
};

class Reader {
 public:
  explicit Reader(const pt::ptree& tree) : tree_(tree) {}

  bool has(const std::string& key) const { return tree_.get_child_optional(pt::ptree::path_type(key, '.')).has_value(); }

  std::string text(const std::string& key) const { return tree_.get<std::string>(pt::ptree::path_type(key, '.')); }

  void require(const std::string& key) {
    if (!has(key)) missing_.push_back(key);
  }

  double number(const std::string& key, double fallback) const {
    if (!has(key)) return fallback;
    const std::string v = trim(text(key));
    double x = 0.0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size() || !std::isfinite(x)) {
      throw ConfigError(key + ": expected a number, got '" + v + "'");
    }
    return x;
  }

  long integer(const std::string& key, long fallback) const {
    if (!has(key)) return fallback;
    const std::string v = trim(text(key));
    long x = 0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size()) {
      throw ConfigError(key + ": expected an integer, got '" + v + "'");
    }
    return x;
  }

  std::string string(const std::string& key, const std::string& fallback) const {
    return has(key) ? trim(text(key)) : fallback;
  }

  void finish_required() const {
    if (missing_.empty()) return;
    std::string msg = "missing required keys:";
    for (const auto& k : missing_) msg += " " + k;
    throw ConfigError(msg);
  }

 private:
  static std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  }
  const pt::ptree& tree_;
  std::vector<std::string> missing_;
};

void check_keys(const pt::ptree& tree) {
  for (const auto& [section, body] : tree) {
    const auto it = kSchema.find(section);
    if (it == kSchema.end()) {
      if (!body.data().empty()) throw ConfigError("unknown key '" + section + "' outside any section");
      throw ConfigError("unknown section [" + section + "]");
    }
    for (const auto& [key, value] : body) {
      if (!it->second.count(key)) throw ConfigError("unknown key " + section + "." + key);
    }
  }
}

void put_le(std::ostream& out, std::uint64_t bits, int bytes) {
  char buf[8];
  for (int i = 0; i < bytes; ++i) buf[i] = static_cast<char>((bits >> (8 * i)) & 0xff);
  out.write(buf, bytes);
}

std::uint64_t get_le(std::istream& in, int bytes, const char* what) {
  unsigned char buf[8];
  if (!in.read(reinterpret_cast<char*>(buf), bytes)) throw CheckpointError(std::string("truncated checkpoint (") + what + ")");
  std::uint64_t v = 0;
  for (int i = 0; i < bytes; ++i) v |= std::uint64_t(buf[i]) << (8 * i);
  return v;
}

void put_f64(std::ostream& out, double x) { put_le(out, std::bit_cast<std::uint64_t>(x), 8); }
double get_f64(std::istream& in, const char* what) { return std::bit_cast<double>(get_le(in, 8, what)); }

// Flat indices in k-lexicographic order.
template <class F>
void for_each_lex(const Grid& g, F&& f) {
  const int n = g.n();
  for (int k1 = -n / 2 + 1; k1 <= n / 2; ++k1)
    for (int k2 = -n / 2 + 1; k2 <= n / 2; ++k2)
      for (int k3 = -n / 2 + 1; k3 <= n / 2; ++k3) f(g.flat_of({k1, k2, k3}));
}

std::string numbered(const fs::path& dir, const std::string& stem, std::size_t idx, const char* ext) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "_%04zu", idx);
  return (dir / (stem + buf + ext)).string();
}

}  // namespace

RunConfig parse_config(std::istream& in, const std::string& source) {
  pt::ptree tree;
  try {
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(source + ": " + e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  check_keys(tree);

  Reader r(tree);
  RunConfig cfg;
  r.require("grid.n");
  r.require("initial.kind");
  r.require("time.t_end");
  r.require("time.cadence");
  r.require("gevrey.tau0");
  r.require("radius.C");
  const std::string kind = r.string("initial.kind", "");
  if (kind == "random_band") {
    r.require("initial.seed");
    r.require("initial.kmax");
    r.require("initial.amplitude");
  }
  if (!r.has("time.dt") && !r.has("time.cfl")) r.require("time.dt|time.cfl");
  r.finish_required();

  const long n = r.integer("grid.n", 0);
  if (n < 8 || n > 512 || (n & (n - 1)) != 0) {
    throw ConfigError("grid.n: must be a power of two in [8, 512], got " + std::to_string(n));
  }
  cfg.n = int(n);

  if (kind == "taylor_green") {
    cfg.initial.kind = InitKind::taylor_green_mhd;
  } else if (kind == "orszag_tang") {
    cfg.initial.kind = InitKind::orszag_tang_3d;
  } else if (kind == "random_band") {
    cfg.initial.kind = InitKind::random_band;
  } else {
    throw ConfigError("initial.kind: expected taylor_green, orszag_tang or random_band, got '" + kind + "'");
  }
  if (kind != "random_band") {
    for (const char* k : {"initial.seed", "initial.kmax", "initial.amplitude", "initial.decay"}) {
      if (r.has(k)) throw ConfigError(std::string(k) + ": only valid for kind = random_band");
    }
  } else {
    const long seed = r.integer("initial.seed", 0);
    if (seed < 0) throw ConfigError("initial.seed: must be >= 0");
    cfg.initial.band.seed = std::uint64_t(seed);
    cfg.initial.band.kmax = int(r.integer("initial.kmax", 0));
    if (cfg.initial.band.kmax < 1 || 3 * cfg.initial.band.kmax >= cfg.n) {
      throw ConfigError("initial.kmax: must satisfy 1 <= kmax and 3 kmax < n");
    }
    cfg.initial.band.amplitude = r.number("initial.amplitude", 0.0);
    cfg.initial.band.decay = r.number("initial.decay", 0.0);
    if (cfg.initial.band.decay < 0.0) throw ConfigError("initial.decay: must be >= 0");
  }

  RunSettings& run = cfg.run;
  run.t_end = r.number("time.t_end", 0.0);
  if (!(run.t_end > 0.0)) throw ConfigError("time.t_end: must be > 0");
  run.cadence = r.number("time.cadence", 0.0);
  if (!(run.cadence > 0.0)) throw ConfigError("time.cadence: must be > 0");
  if (r.has("time.dt") && r.has("time.cfl")) throw ConfigError("time.dt and time.cfl are mutually exclusive");
  if (r.has("time.dt")) {
    run.dt = r.number("time.dt", 0.0);
    if (!(run.dt > 0.0)) throw ConfigError("time.dt: must be > 0");
  } else {
    run.dt = 0.0;
    run.cfl = r.number("time.cfl", 0.0);
    if (!(run.cfl > 0.0)) throw ConfigError("time.cfl: must be > 0");
  }

  run.gevrey.r = r.number("gevrey.r", 4.5);
  run.gevrey.s = r.number("gevrey.s", 1.0);
  run.gevrey.tau = r.number("gevrey.tau0", 0.0);
  if (!(run.gevrey.tau > 0.0)) throw ConfigError("gevrey.tau0: must be > 0");
  if (!(run.gevrey.s >= 1.0)) throw ConfigError("gevrey.s: must be >= 1");
  if (!(run.gevrey.r >= 1.0)) throw ConfigError("gevrey.r: must be >= 1");
  if (!above_threshold(run.gevrey)) {
    cfg.warnings.push_back("gevrey.r = " + format_double(run.gevrey.r) +
                           " is not above 5/2 + 3/(2s); the radius bound is not backed by theory");
  }

  const std::string c = r.string("radius.C", "");
  if (c == "fit") {
    run.fit_C = true;
  } else {
    run.C = r.number("radius.C", 0.0);
    if (!(run.C > 0.0)) throw ConfigError("radius.C: must be > 0 or 'fit'");
  }
  run.C_tilde = r.number("radius.C_tilde", 1.0);
  if (!(run.C_tilde > 0.0)) throw ConfigError("radius.C_tilde: must be > 0");

  run.sup_refine = int(r.integer("diagnostics.sup_refine", 1));
  if (run.sup_refine < 1 || run.sup_refine > 4) throw ConfigError("diagnostics.sup_refine: must be 1..4");
  run.blowup_factor = r.number("diagnostics.blowup_factor", 1e6);
  if (!(run.blowup_factor > 1.0)) throw ConfigError("diagnostics.blowup_factor: must be > 1");

  OutputConfig& out = cfg.output;
  out.dir = r.string("output.dir", out.dir);
  out.csv = r.string("output.csv", out.csv);
  out.spectrum = r.string("output.spectrum", "");
  out.checkpoint_every = int(r.integer("output.checkpoint_every", 0));
  if (out.checkpoint_every < 0) throw ConfigError("output.checkpoint_every: must be >= 0");
  if (out.csv.empty()) throw ConfigError("output.csv: must not be empty");
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  return parse_config(in, path);
}

void apply_environment(RunConfig& cfg) {
  const char* dir = std::getenv("GMHD_OUTPUT_DIR");
  if (dir != nullptr && *dir != '\0') cfg.output.dir = dir;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_timeseries(std::ostream& out, const std::vector<DiagnosticsRecord>& records) {
  out << kTimeseriesHeader << '\n';
  for (const DiagnosticsRecord& r : records) {
    const double row[] = {r.t,      r.energy, r.cross_helicity, r.bkm_integrand, r.grad_sum, r.hr_norm,
                          r.x_norm, r.y_norm, r.tau,            r.tau_fit,       r.tau_lower};
    for (std::size_t i = 0; i < std::size(row); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

void write_spectrum(std::ostream& out, const MHDState& s) {
  const Grid& g = s.u.grid();
  const int qmax = 3 * (g.n() / 2);
  std::vector<double> peak(qmax + 1, 0.0), sum2(qmax + 1, 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Vec3c a = s.u.at(i), b = s.h.at(i);
    double m2 = 0.0;
    for (int c = 0; c < 3; ++c) m2 += std::norm(a[c]) + std::norm(b[c]);
    const int q = g.wave(i).l1();
    peak[q] = std::max(peak[q], std::sqrt(m2));
    sum2[q] += m2;
  }
  out << kSpectrumHeader << '\n';
  for (int q = 1; q <= qmax; ++q) {
    out << q << ',' << q << ',' << format_double(peak[q]) << ',' << format_double(std::sqrt(sum2[q])) << '\n';
  }
}

void write_checkpoint(std::ostream& out, const MHDState& s, const GevreyParams& p) {
  require_same_grid(s.u, s.h, "checkpoint");
  const Grid& g = s.u.grid();
  out.write("GMHD", 4);
  put_le(out, kCheckpointVersion, 4);
  put_le(out, std::uint32_t(g.n()), 4);
  for (double x : {s.t, p.r, p.s, p.tau}) put_f64(out, x);
  for (const SpectralField* f : {&s.u, &s.h}) {
    for (int c = 0; c < 3; ++c) {
      const auto comp = f->component(c);
      for_each_lex(g, [&](std::size_t i) {
        put_f64(out, comp[i].real());
        put_f64(out, comp[i].imag());
      });
    }
  }
  if (!out) throw CheckpointError("checkpoint write failed");
}

Checkpoint read_checkpoint(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4)) throw CheckpointError("truncated checkpoint (magic)");
  if (std::memcmp(magic, "GMHD", 4) != 0) throw CheckpointError("not a checkpoint: bad magic");
  const auto version = std::uint32_t(get_le(in, 4, "version"));
  if (version != kCheckpointVersion) {
    throw CheckpointError("checkpoint version " + std::to_string(version) + ", expected " +
                          std::to_string(kCheckpointVersion));
  }
  const auto n = std::uint32_t(get_le(in, 4, "grid size"));
  if (n < 8 || n > 4096 || n % 2 != 0) throw CheckpointError("checkpoint grid size " + std::to_string(n) + " is invalid");
  const Grid g{int(n)};
  const double t = get_f64(in, "header");
  GevreyParams p;
  p.r = get_f64(in, "header");
  p.s = get_f64(in, "header");
  p.tau = get_f64(in, "header");
  Checkpoint cp{MHDState{SpectralField(g), SpectralField(g), t}, p};
  for (SpectralField* f : {&cp.state.u, &cp.state.h}) {
    for (int c = 0; c < 3; ++c) {
      auto comp = f->component(c);
      for_each_lex(g, [&](std::size_t i) {
        const double re = get_f64(in, "coefficients");
        const double im = get_f64(in, "coefficients");
        comp[i] = Complex(re, im);
      });
    }
  }
  return cp;
}

void save_checkpoint(const std::string& path, const MHDState& s, const GevreyParams& p) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CheckpointError("cannot create checkpoint '" + path + "'");
  write_checkpoint(out, s, p);
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot open checkpoint '" + path + "'");
  return read_checkpoint(in);
}

RunResult run_with_outputs(const RunConfig& cfg, const MHDState& initial, RunArtifacts* artifacts) {
  const fs::path dir(cfg.output.dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("output.dir: cannot create '" + dir.string() + "': " + ec.message());
  RunArtifacts local;
  RunArtifacts& art = artifacts ? *artifacts : local;

  const SampleHook hook = [&](const MHDState& s, std::size_t idx, double tau) {
    if (!cfg.output.spectrum.empty()) {
      const std::string path = numbered(dir, cfg.output.spectrum, idx, ".csv");
      std::ofstream out(path);
      if (!out) throw ConfigError("cannot write spectrum '" + path + "'");
      write_spectrum(out, s);
      art.spectra.push_back(path);
    }
    if (cfg.output.checkpoint_every > 0 && idx > 0 && idx % std::size_t(cfg.output.checkpoint_every) == 0) {
      const std::string path = numbered(dir, "checkpoint", idx, ".gmhd");
      GevreyParams p = cfg.run.gevrey;
      p.tau = tau;
      save_checkpoint(path, s, p);
      art.checkpoints.push_back(path);
    }
  };

  RunResult result = run(initial, cfg.run, hook);
  art.csv = (dir / cfg.output.csv).string();
  std::ofstream out(art.csv);
  if (!out) throw ConfigError("output.csv: cannot write '" + art.csv + "'");
  write_timeseries(out, result.records);
  return result;
}

int exit_code(RunStatus status) { return status == RunStatus::completed ? 0 : 2; }

}  // namespace gmhd
