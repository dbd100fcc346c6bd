#pragma once

// Deterministic grid sweeps over initial-state parameters and time.
//
// A sweep is a Cartesian grid of named axes (outermost first) plus fixed
// parameter values. Each grid point is evolved with the closed-form dynamics
// and reduced to the requested quantities. Records always come out in
// lexicographic grid order, whether or not worker threads are used.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "mdi/dynamics.hpp"
#include "mdi/measures.hpp"
#include "mdi/model.hpp"
#include "mdi/states.hpp"

namespace mdi {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { pure, mixed_x, mixed_z, ent, depol };
enum class Quantity { concurrence, coherence_a, coherence_b, purity };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::pure: return "pure";
    case Family::mixed_x: return "mixed-x";
    case Family::mixed_z: return "mixed-z";
    case Family::ent: return "ent";
    case Family::depol: return "depol";
  }
  return "?";
}

inline Family parse_family(std::string_view s) {
  if (s == "pure") return Family::pure;
  if (s == "mixed-x" || s == "mixed_x") return Family::mixed_x;
  if (s == "mixed-z" || s == "mixed_z") return Family::mixed_z;
  if (s == "ent") return Family::ent;
  if (s == "depol") return Family::depol;
  throw ConfigError("unknown family '" + std::string(s) + "' (pure, mixed-x, mixed-z, ent, depol)");
}

inline std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::concurrence: return "concurrence";
    case Quantity::coherence_a: return "coherence_a";
    case Quantity::coherence_b: return "coherence_b";
    case Quantity::purity: return "purity";
  }
  return "?";
}

inline Quantity parse_quantity(std::string_view s) {
  if (s == "concurrence") return Quantity::concurrence;
  if (s == "coherence_a") return Quantity::coherence_a;
  if (s == "coherence_b") return Quantity::coherence_b;
  if (s == "purity") return Quantity::purity;
  throw ConfigError("unknown quantity '" + std::string(s) + "'");
}

/// State parameters a family needs, excluding time.
inline std::vector<std::string> family_parameters(Family f) {
  switch (f) {
    case Family::pure: return {"theta_a", "theta_b"};
    case Family::mixed_x:
    case Family::mixed_z: return {"ra", "rb"};
    case Family::ent: return {"w"};
    case Family::depol: return {"w", "p"};
  }
  return {};
}

/// Closed interval sampled at `count` equally spaced points, endpoints included.
struct GridAxis {
  std::string name;
  double start = 0.0;
  double stop = 1.0;
  std::size_t count = 2;

  double at(std::size_t k) const {
    if (k + 1 == count) return stop;
    return start + static_cast<double>(k) * (stop - start) / static_cast<double>(count - 1);
  }

  bool symmetric_about(double center, double tol = 1e-12) const {
    return std::abs(0.5 * (start + stop) - center) <= tol;
  }
};

struct SweepConfig {
  Family family = Family::pure;
  std::map<std::string, double> fixed;
  std::vector<GridAxis> axes;
  DipoleAxis hamiltonian_axis = DipoleAxis::z();
  std::vector<Quantity> quantities{Quantity::concurrence};
  unsigned threads = 1;
};

struct SweepRecord {
  std::vector<double> values;  // grid coordinates, then quantities
};

struct SweepTable {
  std::vector<std::string> columns;
  std::vector<SweepRecord> records;
};

inline void validate(const SweepConfig& cfg) {
  std::set<std::string> allowed;
  for (auto& p : family_parameters(cfg.family)) allowed.insert(p);
  allowed.insert("t");

  std::set<std::string> seen;
  for (const auto& ax : cfg.axes) {
    if (!allowed.count(ax.name))
      throw ConfigError("axis '" + ax.name + "' is not a parameter of family " + to_string(cfg.family));
    if (!seen.insert(ax.name).second) throw ConfigError("axis '" + ax.name + "' listed twice");
    if (ax.count < 2) throw ConfigError("axis '" + ax.name + "' needs at least 2 points");
    if (!(ax.start < ax.stop) || !std::isfinite(ax.start) || !std::isfinite(ax.stop))
      throw ConfigError("axis '" + ax.name + "' needs start < stop");
  }
  for (const auto& [name, value] : cfg.fixed) {
    if (!allowed.count(name))
      throw ConfigError("fixed parameter '" + name + "' is not a parameter of family " + to_string(cfg.family));
    if (seen.count(name)) throw ConfigError("parameter '" + name + "' is both fixed and swept");
    if (!std::isfinite(value)) throw ConfigError("fixed parameter '" + name + "' is not finite");
  }
  for (const auto& name : allowed)
    if (!seen.count(name) && !cfg.fixed.count(name))
      throw ConfigError("parameter '" + name + "' is neither fixed nor swept");
  if (cfg.quantities.empty()) throw ConfigError("no quantities requested");

  // Range checks on the extreme grid values and fixed values.
  auto check = [&](const std::string& name, double v) {
    try {
      if (name == "theta_a" || name == "theta_b")
        detail::require_range(v, 0.0, 2.0 * kPi, name.c_str());
      else if (name == "ra" || name == "rb")
        detail::require_range(v, -1.0, 1.0, name.c_str());
      else if (name == "w" || name == "p")
        detail::require_range(v, 0.0, 1.0, name.c_str());
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  };
  for (const auto& ax : cfg.axes) {
    check(ax.name, ax.at(0));
    check(ax.name, ax.at(ax.count - 1));
  }
  for (const auto& [name, value] : cfg.fixed) check(name, value);
}

inline std::size_t grid_size(const SweepConfig& cfg) {
  std::size_t n = 1;
  for (const auto& ax : cfg.axes) n *= ax.count;
  return n;
}

inline std::vector<std::string> columns(const SweepConfig& cfg) {
  std::vector<std::string> cols;
  for (const auto& ax : cfg.axes) cols.push_back(ax.name);
  for (auto q : cfg.quantities) cols.push_back(to_string(q));
  return cols;
}

/// Builds the state description for a set of named parameter values.
inline StateSpec make_state_spec(Family family, const std::map<std::string, double>& params) {
  auto get = [&](const char* n) { return params.at(n); };
  switch (family) {
    case Family::pure: return PureProduct{get("theta_a"), get("theta_b")};
    case Family::mixed_x: return BlochMixed{BlochAxis::x, get("ra"), get("rb")};
    case Family::mixed_z: return BlochMixed{BlochAxis::z, get("ra"), get("rb")};
    case Family::ent: return PartialEntangled{get("w")};
    case Family::depol: return Depolarized{get("w"), get("p")};
  }
  throw ConfigError("unknown family");
}

inline std::vector<double> evaluate_quantities(const EvolvedResult& r, const std::vector<Quantity>& qs) {
  const ComplexMatrix rho = r.rho();
  std::vector<double> out;
  out.reserve(qs.size());
  for (auto q : qs) {
    switch (q) {
      case Quantity::concurrence:
        out.push_back(r.is_pure() ? concurrence_pure(r.pure()) : concurrence_mixed(rho));
        break;
      case Quantity::coherence_a: out.push_back(l1_coherence(partial_trace(rho, Subsystem::first))); break;
      case Quantity::coherence_b: out.push_back(l1_coherence(partial_trace(rho, Subsystem::second))); break;
      case Quantity::purity: out.push_back(purity(rho)); break;
    }
  }
  return out;
}

namespace detail {

inline SweepRecord evaluate_point(const SweepConfig& cfg, std::size_t flat) {
  std::map<std::string, double> params = cfg.fixed;
  SweepRecord rec;
  rec.values.resize(cfg.axes.size());
  std::size_t rem = flat;
  for (std::size_t k = cfg.axes.size(); k-- > 0;) {
    const auto& ax = cfg.axes[k];
    const double v = ax.at(rem % ax.count);
    rem /= ax.count;
    rec.values[k] = v;
    params[ax.name] = v;
  }
  const double t = params.at("t");
  const EvolvedResult r = evolve(make_state_spec(cfg.family, params), cfg.hamiltonian_axis, t);
  for (double q : evaluate_quantities(r, cfg.quantities)) rec.values.push_back(q);
  return rec;
}

}  // namespace detail

/// Evaluates every grid point; `sink` receives records in grid order.
inline void run_sweep(const SweepConfig& cfg, const std::function<void(const SweepRecord&)>& sink) {
  validate(cfg);
  const std::size_t total = grid_size(cfg);
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(total)));

  if (workers == 1) {
    for (std::size_t i = 0; i < total; ++i) sink(detail::evaluate_point(cfg, i));
    return;
  }

  // Evaluate in blocks; each block is split across workers, buffered, then
  // emitted in order.
  constexpr std::size_t kBlock = 4096;
  std::vector<SweepRecord> buffer;
  for (std::size_t begin = 0; begin < total; begin += kBlock) {
    const std::size_t end = std::min(total, begin + kBlock);
    buffer.assign(end - begin, SweepRecord{});
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = begin + w; i < end; i += workers) buffer[i - begin] = detail::evaluate_point(cfg, i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (const auto& rec : buffer) sink(rec);
  }
}

inline SweepTable run_sweep(const SweepConfig& cfg) {
  SweepTable table;
  table.columns = columns(cfg);
  table.records.reserve(grid_size(cfg));
  run_sweep(cfg, [&](const SweepRecord& r) { table.records.push_back(r); });
  return table;
}

// ---------------------------------------------------------------------------
// Named sweep presets

inline std::vector<std::string> preset_names() {
  return {"fig1", "fig2-rho3", "fig2-rho1", "fig3", "fig3-depol", "fig4-coherence"};
}

inline SweepConfig preset(std::string_view name) {
  SweepConfig cfg;
  const GridAxis theta_a{"theta_a", 0.0, 2.0 * kPi, 101};
  const GridAxis time{"t", 0.0, kPi, 101};
  if (name == "fig1") {
    // Concurrence vs (theta_a, t) for a fixed dipole-b state.
    cfg.family = Family::pure;
    cfg.fixed = {{"theta_b", kPi / 2.0}};
    cfg.axes = {theta_a, time};
  } else if (name == "fig2-rho3") {
    cfg.family = Family::mixed_z;
    cfg.fixed = {{"t", kPi / 4.0}};
    cfg.axes = {{"ra", -1.0, 1.0, 101}, {"rb", -1.0, 1.0, 101}};
  } else if (name == "fig2-rho1") {
    cfg.family = Family::mixed_x;
    cfg.fixed = {{"t", kPi / 4.0}};
    cfg.axes = {{"ra", -1.0, 1.0, 101}, {"rb", -1.0, 1.0, 101}};
  } else if (name == "fig3") {
    cfg.family = Family::ent;
    cfg.axes = {time, {"w", 0.0, 1.0, 101}};
  } else if (name == "fig3-depol") {
    cfg.family = Family::depol;
    cfg.fixed = {{"t", kPi / 4.0}};
    cfg.axes = {{"w", 0.0, 1.0, 101}, {"p", 0.0, 1.0, 101}};
  } else if (name == "fig4-coherence") {
    cfg.family = Family::pure;
    cfg.fixed = {{"theta_b", kPi / 2.0}};
    cfg.axes = {theta_a, time};
    cfg.quantities = {Quantity::coherence_a};
  } else {
    throw ConfigError("unknown preset '" + std::string(name) + "'");
  }
  return cfg;
}

/// Replaces a fixed value, or pins a swept axis to a single value.
inline void set_fixed(SweepConfig& cfg, const std::string& name, double value) {
  std::erase_if(cfg.axes, [&](const GridAxis& ax) { return ax.name == name; });
  cfg.fixed[name] = value;
}

// ---------------------------------------------------------------------------
// Config text: key=value lines, '#' comments.
//
//   family = pure
//   fix.theta_b = 1.5707963267948966
//   grid.theta_a = 0:6.283185307179586:101
//   grid.t = 0:3.141592653589793:101
//   quantities = concurrence,coherence_a
//   axis = 0,0,1
//   coupling_d = 1
//   threads = 4

namespace detail {

inline std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    parts.push_back(trim(s.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

inline double number_or_throw(std::string_view text, const std::string& what) {
  const auto v = parse_double(text);
  if (!v) throw ConfigError(what + ": invalid number '" + std::string(text) + "'");
  return *v;
}

}  // namespace detail

/// Parses "start:stop:count".
inline GridAxis parse_grid_axis(const std::string& name, std::string_view spec) {
  const auto parts = detail::split(spec, ':');
  if (parts.size() != 3) throw ConfigError("grid." + name + ": expected start:stop:count");
  GridAxis ax;
  ax.name = name;
  ax.start = detail::number_or_throw(parts[0], "grid." + name);
  ax.stop = detail::number_or_throw(parts[1], "grid." + name);
  const double count = detail::number_or_throw(parts[2], "grid." + name);
  if (count < 2 || count != std::floor(count) || count > 1e7)
    throw ConfigError("grid." + name + ": count must be an integer >= 2");
  ax.count = static_cast<std::size_t>(count);
  return ax;
}

inline Vec3 parse_vec3(std::string_view text) {
  const auto parts = detail::split(text, ',');
  if (parts.size() != 3) throw ConfigError("axis: expected three comma-separated components");
  Vec3 v{};
  for (int i = 0; i < 3; ++i) v[i] = detail::number_or_throw(parts[i], "axis");
  return v;
}

inline std::vector<Quantity> parse_quantities(std::string_view text) {
  std::vector<Quantity> qs;
  for (const auto& q : detail::split(text, ',')) qs.push_back(parse_quantity(q));
  return qs;
}

inline SweepConfig parse_sweep_config(std::string_view text) {
  SweepConfig cfg;
  cfg.quantities.clear();
  std::optional<Vec3> axis;
  double coupling = 1.0;
  bool have_family = false;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string body = detail::trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = detail::trim(std::string_view(body).substr(0, eq));
    const std::string value = detail::trim(std::string_view(body).substr(eq + 1));

    if (key == "family") {
      cfg.family = parse_family(value);
      have_family = true;
    } else if (key.rfind("fix.", 0) == 0) {
      cfg.fixed[key.substr(4)] = detail::number_or_throw(value, key);
    } else if (key.rfind("grid.", 0) == 0) {
      cfg.axes.push_back(parse_grid_axis(key.substr(5), value));
    } else if (key == "quantities") {
      cfg.quantities = parse_quantities(value);
    } else if (key == "axis") {
      axis = parse_vec3(value);
    } else if (key == "coupling_d") {
      coupling = detail::number_or_throw(value, key);
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(std::max(1.0, detail::number_or_throw(value, key)));
    } else {
      throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!have_family) throw ConfigError("config is missing 'family'");
  if (cfg.quantities.empty()) cfg.quantities = {Quantity::concurrence};
  try {
    cfg.hamiltonian_axis = DipoleAxis(axis ? normalized(*axis) : Vec3{0.0, 0.0, 1.0}, coupling);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  validate(cfg);
  return cfg;
}

// ---------------------------------------------------------------------------
// Symmetry checks on sweep surfaces

enum class Symmetry { period_pi, theta_b_reflection, quarter_turn, rho1_reflection, rz_covariance };

inline constexpr double kSymmetryTol = 1e-8;

inline std::string to_string(Symmetry s) {
  switch (s) {
    case Symmetry::period_pi: return "period-pi";
    case Symmetry::theta_b_reflection: return "theta_b-reflection";
    case Symmetry::quarter_turn: return "quarter-turn";
    case Symmetry::rho1_reflection: return "rho1-reflection";
    case Symmetry::rz_covariance: return "rz-covariance";
  }
  return "?";
}

struct SymmetryReport {
  Symmetry symmetry;
  double max_mismatch = 0.0;
  std::size_t points = 0;
  bool passed = false;
};

namespace detail {

/// Concurrence surface in flat grid order.
inline std::vector<double> concurrence_surface(SweepConfig cfg) {
  cfg.quantities = {Quantity::concurrence};
  std::vector<double> out;
  out.reserve(grid_size(cfg));
  run_sweep(cfg, [&](const SweepRecord& r) { out.push_back(r.values.back()); });
  return out;
}

inline std::optional<std::size_t> axis_index(const SweepConfig& cfg, std::string_view name) {
  for (std::size_t k = 0; k < cfg.axes.size(); ++k)
    if (cfg.axes[k].name == name) return k;
  return std::nullopt;
}

inline std::vector<std::size_t> unflatten(const SweepConfig& cfg, std::size_t flat) {
  std::vector<std::size_t> idx(cfg.axes.size());
  for (std::size_t k = cfg.axes.size(); k-- > 0;) {
    idx[k] = flat % cfg.axes[k].count;
    flat /= cfg.axes[k].count;
  }
  return idx;
}

inline std::size_t flatten(const SweepConfig& cfg, const std::vector<std::size_t>& idx) {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < cfg.axes.size(); ++k) flat = flat * cfg.axes[k].count + idx[k];
  return flat;
}

inline const GridAxis& require_symmetric_axis(const SweepConfig& cfg, std::string_view name, double center) {
  const auto k = axis_index(cfg, name);
  if (!k) throw ConfigError("symmetry check needs a swept '" + std::string(name) + "' axis");
  const GridAxis& ax = cfg.axes[*k];
  if (!ax.symmetric_about(center))
    throw ConfigError("axis '" + std::string(name) + "' is not symmetric about " + format_double(center));
  return ax;
}

inline SymmetryReport compare(Symmetry s, const std::vector<double>& a, const std::vector<double>& b,
                              const std::function<std::size_t(std::size_t)>& map) {
  SymmetryReport rep{s};
  rep.points = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) rep.max_mismatch = std::max(rep.max_mismatch, std::abs(a[i] - b[map(i)]));
  rep.passed = rep.max_mismatch < kSymmetryTol;
  return rep;
}

}  // namespace detail

/// Compares a concurrence surface with its transformed counterpart.
inline SymmetryReport verify_symmetry(const SweepConfig& cfg, Symmetry symmetry) {
  validate(cfg);
  using detail::axis_index;
  switch (symmetry) {
    case Symmetry::period_pi: {
      SweepConfig shifted = cfg;
      if (const auto k = axis_index(cfg, "t")) {
        shifted.axes[*k].start += kPi;
        shifted.axes[*k].stop += kPi;
      } else {
        shifted.fixed["t"] += kPi;
      }
      const auto a = detail::concurrence_surface(cfg);
      const auto b = detail::concurrence_surface(shifted);
      return detail::compare(symmetry, a, b, [](std::size_t i) { return i; });
    }
    case Symmetry::theta_b_reflection: {
      if (cfg.family != Family::pure) throw ConfigError("theta_b reflection applies to the pure family");
      detail::require_symmetric_axis(cfg, "theta_a", kPi);
      const std::size_t ka = *axis_index(cfg, "theta_a");
      const auto kb = axis_index(cfg, "theta_b");
      const auto a = detail::concurrence_surface(cfg);
      if (kb) {
        detail::require_symmetric_axis(cfg, "theta_b", kPi);
        return detail::compare(symmetry, a, a, [&](std::size_t i) {
          auto idx = detail::unflatten(cfg, i);
          idx[ka] = cfg.axes[ka].count - 1 - idx[ka];
          idx[*kb] = cfg.axes[*kb].count - 1 - idx[*kb];
          return detail::flatten(cfg, idx);
        });
      }
      SweepConfig mirrored = cfg;
      mirrored.fixed["theta_b"] = 2.0 * kPi - cfg.fixed.at("theta_b");
      const auto b = detail::concurrence_surface(mirrored);
      return detail::compare(symmetry, a, b, [&](std::size_t i) {
        auto idx = detail::unflatten(cfg, i);
        idx[ka] = cfg.axes[ka].count - 1 - idx[ka];
        return detail::flatten(cfg, idx);
      });
    }
    case Symmetry::quarter_turn: {
      if (cfg.family != Family::pure) throw ConfigError("quarter-turn relation applies to the pure family");
      const GridAxis& xa = detail::require_symmetric_axis(cfg, "theta_a", kPi);
      const GridAxis& xb = detail::require_symmetric_axis(cfg, "theta_b", kPi);
      if (xa.count != xb.count || std::abs((xa.stop - xa.start) - (xb.stop - xb.start)) > 1e-12)
        throw ConfigError("quarter-turn relation needs identical theta_a and theta_b grids");
      SweepConfig base;
      base.family = Family::pure;
      base.axes = {xa, xb};
      base.hamiltonian_axis = cfg.hamiltonian_axis;
      base.threads = cfg.threads;
      SweepConfig early = base, late = base;
      early.fixed["t"] = kPi / 8.0;
      late.fixed["t"] = 3.0 * kPi / 8.0;
      const auto a = detail::concurrence_surface(early);
      const auto b = detail::concurrence_surface(late);
      const std::size_t n = xa.count;
      // (u, v) -> (v, -u) about the center (pi, pi).
      return detail::compare(symmetry, a, b, [n](std::size_t flat) {
        const std::size_t i = flat / n, j = flat % n;
        return j * n + (n - 1 - i);
      });
    }
    case Symmetry::rho1_reflection: {
      if (cfg.family != Family::mixed_x) throw ConfigError("rho1 reflection applies to the mixed-x family");
      detail::require_symmetric_axis(cfg, "ra", 0.0);
      detail::require_symmetric_axis(cfg, "rb", 0.0);
      const std::size_t ka = *axis_index(cfg, "ra"), kb = *axis_index(cfg, "rb");
      const auto a = detail::concurrence_surface(cfg);
      // E(ra, -rb) against E(-ra, rb).
      SymmetryReport rep{symmetry};
      rep.points = a.size();
      for (std::size_t i = 0; i < a.size(); ++i) {
        auto left = detail::unflatten(cfg, i);
        auto right = left;
        left[kb] = cfg.axes[kb].count - 1 - left[kb];
        right[ka] = cfg.axes[ka].count - 1 - right[ka];
        rep.max_mismatch = std::max(rep.max_mismatch,
                                    std::abs(a[detail::flatten(cfg, left)] - a[detail::flatten(cfg, right)]));
      }
      rep.passed = rep.max_mismatch < kSymmetryTol;
      return rep;
    }
    case Symmetry::rz_covariance: {
      if (cfg.family != Family::pure) throw ConfigError("R_z covariance check applies to the pure family");
      const ComplexMatrix h = build_hamiltonian(cfg.hamiltonian_axis);
      SymmetryReport rep{symmetry};
      constexpr double kAngles[] = {0.37, 1.9, 4.4};
      SweepConfig base = cfg;
      base.quantities = {Quantity::concurrence};
      const std::size_t total = grid_size(base);
      for (std::size_t i = 0; i < total; ++i) {
        const SweepRecord rec = detail::evaluate_point(base, i);
        std::map<std::string, double> params = cfg.fixed;
        for (std::size_t k = 0; k < cfg.axes.size(); ++k) params[cfg.axes[k].name] = rec.values[k];
        const PureState psi0 = initial_pure_state(make_state_spec(cfg.family, params));
        for (double delta : kAngles) {
          const ComplexMatrix rr = kron(rz(delta), rz(delta));
          const double rotated = concurrence_pure(evolve_pure_numeric(apply(rr, psi0), h, params.at("t")).pure());
          rep.max_mismatch = std::max(rep.max_mismatch, std::abs(rotated - rec.values.back()));
          ++rep.points;
        }
      }
      rep.passed = rep.max_mismatch < kSymmetryTol;
      return rep;
    }
  }
  throw ConfigError("unknown symmetry");
}

}  // namespace mdi
