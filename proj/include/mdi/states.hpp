#pragma once

// Initial-state families for the dipole pair.
//
//   pure:theta_a=..,theta_b=..      cos(theta/2)|0> + sin(theta/2)|1> per dipole
//   mixed:axis=x|z,ra=..,rb=..      (1 + r sigma_axis)/2 per dipole
//   ent:w=..                        sqrt(w)|01> + sqrt(1-w)|10>
//   depol:w=..,p=..                 (1-p) I/4 + p |ent(w)><ent(w)|

#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mdi/linalg.hpp"
#include "mdi/model.hpp"

namespace mdi {

enum class BlochAxis { x, z };
enum class BellKind { psi_plus, psi_minus, phi_plus, phi_minus };

namespace detail {

inline void require_range(double v, double lo, double hi, const char* name) {
  if (!(v >= lo && v <= hi) || !std::isfinite(v)) {
    std::ostringstream os;
    os << name << " = " << v << " outside [" << lo << ", " << hi << "]";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace detail

inline PureState pure_qubit(double theta) {
  detail::require_range(theta, 0.0, 2.0 * kPi, "theta");
  return PureState{std::cos(0.5 * theta), std::sin(0.5 * theta)};
}

inline PureState product_state(const PureState& a, const PureState& b) { return kron(a, b); }

inline ComplexMatrix bloch_mixed(BlochAxis axis, double r) {
  detail::require_range(r, -1.0, 1.0, "r");
  const ComplexMatrix sj = axis == BlochAxis::x ? pauli::s1() : pauli::s3();
  return 0.5 * (pauli::s0() + r * sj);
}

inline PureState partial_entangled(double w) {
  detail::require_range(w, 0.0, 1.0, "w");
  return PureState{0.0, std::sqrt(w), std::sqrt(1.0 - w), 0.0};
}

inline ComplexMatrix depolarize(const ComplexMatrix& rho, double p) {
  detail::require_range(p, 0.0, 1.0, "p");
  if (rho.dim() != 4) throw std::invalid_argument("depolarize: operator must be 4x4");
  return (0.25 * (1.0 - p)) * ComplexMatrix::identity(4) + p * rho;
}

inline PureState bell_state(BellKind kind) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case BellKind::psi_plus: return PureState{0.0, h, h, 0.0};
    case BellKind::psi_minus: return PureState{0.0, h, -h, 0.0};
    case BellKind::phi_plus: return PureState{h, 0.0, 0.0, h};
    case BellKind::phi_minus: return PureState{h, 0.0, 0.0, -h};
  }
  throw std::invalid_argument("bell_state: unknown kind");
}

/// Applies V to each dipole of a product input. Stands in for a relative
/// phase in the single-dipole amplitudes.
inline PureState pre_rotate(const PureState& psi, const LocalRotation& va, const LocalRotation& vb) {
  return apply(kron(su2_matrix(va), su2_matrix(vb)), psi);
}

// ---------------------------------------------------------------------------
// StateSpec

struct PureProduct {
  double theta_a = 0.0;
  double theta_b = 0.0;
};
struct BlochMixed {
  BlochAxis axis = BlochAxis::z;
  double ra = 0.0;
  double rb = 0.0;
};
struct PartialEntangled {
  double w = 0.5;
};
struct Depolarized {
  double w = 0.5;
  double p = 1.0;
};

using StateSpec = std::variant<PureProduct, BlochMixed, PartialEntangled, Depolarized>;

inline void validate(const StateSpec& spec) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PureProduct>) {
          detail::require_range(s.theta_a, 0.0, 2.0 * kPi, "theta_a");
          detail::require_range(s.theta_b, 0.0, 2.0 * kPi, "theta_b");
        } else if constexpr (std::is_same_v<T, BlochMixed>) {
          detail::require_range(s.ra, -1.0, 1.0, "ra");
          detail::require_range(s.rb, -1.0, 1.0, "rb");
        } else if constexpr (std::is_same_v<T, PartialEntangled>) {
          detail::require_range(s.w, 0.0, 1.0, "w");
        } else {
          detail::require_range(s.w, 0.0, 1.0, "w");
          detail::require_range(s.p, 0.0, 1.0, "p");
        }
      },
      spec);
}

/// True when the spec describes a pure state (pure products and ent).
inline bool is_pure(const StateSpec& spec) {
  return std::holds_alternative<PureProduct>(spec) || std::holds_alternative<PartialEntangled>(spec);
}

inline PureState initial_pure_state(const StateSpec& spec) {
  validate(spec);
  if (const auto* s = std::get_if<PureProduct>(&spec))
    return product_state(pure_qubit(s->theta_a), pure_qubit(s->theta_b));
  if (const auto* s = std::get_if<PartialEntangled>(&spec)) return partial_entangled(s->w);
  throw std::invalid_argument("initial_pure_state: spec does not describe a pure state");
}

inline ComplexMatrix initial_density(const StateSpec& spec) {
  validate(spec);
  if (is_pure(spec)) return initial_pure_state(spec).projector();
  if (const auto* s = std::get_if<BlochMixed>(&spec))
    return kron(bloch_mixed(s->axis, s->ra), bloch_mixed(s->axis, s->rb));
  const auto& d = std::get<Depolarized>(spec);
  return depolarize(partial_entangled(d.w).projector(), d.p);
}

// ---------------------------------------------------------------------------
// Text form

/// Shortest decimal string that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

/// Strict decimal parse; rejects trailing garbage and non-finite values.
inline std::optional<double> parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size() || !std::isfinite(v))
    return std::nullopt;
  return v;
}

inline std::string to_string(BlochAxis a) { return a == BlochAxis::x ? "x" : "z"; }

inline std::string format_state_spec(const StateSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PureProduct>)
          return "pure:theta_a=" + format_double(s.theta_a) + ",theta_b=" + format_double(s.theta_b);
        else if constexpr (std::is_same_v<T, BlochMixed>)
          return "mixed:axis=" + to_string(s.axis) + ",ra=" + format_double(s.ra) + ",rb=" + format_double(s.rb);
        else if constexpr (std::is_same_v<T, PartialEntangled>)
          return "ent:w=" + format_double(s.w);
        else
          return "depol:w=" + format_double(s.w) + ",p=" + format_double(s.p);
      },
      spec);
}

/// Error raised for malformed text specs; message names the offending field.
class SpecParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::map<std::string, std::string> split_fields(std::string_view body, std::string_view family) {
  std::map<std::string, std::string> fields;
  std::size_t pos = 0;
  while (pos <= body.size() && !body.empty()) {
    const std::size_t comma = body.find(',', pos);
    const std::string_view item = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw SpecParseError("state '" + std::string(family) + "': malformed field '" + std::string(item) +
                           "' (expected name=value)");
    std::string key(item.substr(0, eq));
    if (fields.count(key)) throw SpecParseError("state '" + std::string(family) + "': duplicate field '" + key + "'");
    fields.emplace(std::move(key), std::string(item.substr(eq + 1)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return fields;
}

inline double take_number(std::map<std::string, std::string>& fields, const std::string& name,
                          std::string_view family) {
  const auto it = fields.find(name);
  if (it == fields.end())
    throw SpecParseError("state '" + std::string(family) + "': missing field '" + name + "'");
  const auto v = parse_double(it->second);
  if (!v) throw SpecParseError("state '" + std::string(family) + "': field '" + name + "' has invalid value '" + it->second + "'");
  fields.erase(it);
  return *v;
}

inline void reject_leftovers(const std::map<std::string, std::string>& fields, std::string_view family) {
  if (!fields.empty())
    throw SpecParseError("state '" + std::string(family) + "': unknown field '" + fields.begin()->first + "'");
}


}  // namespace detail

inline StateSpec parse_state_spec(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw SpecParseError("state spec '" + std::string(text) + "' lacks a family prefix (pure:, mixed:, ent:, depol:)");
  const std::string_view family = text.substr(0, colon);
  auto fields = detail::split_fields(text.substr(colon + 1), family);

  StateSpec spec;
  if (family == "pure") {
    PureProduct s;
    s.theta_a = detail::take_number(fields, "theta_a", family);
    s.theta_b = detail::take_number(fields, "theta_b", family);
    spec = s;
  } else if (family == "mixed") {
    BlochMixed s;
    const auto it = fields.find("axis");
    if (it == fields.end()) throw SpecParseError("state 'mixed': missing field 'axis'");
    if (it->second == "x")
      s.axis = BlochAxis::x;
    else if (it->second == "z")
      s.axis = BlochAxis::z;
    else
      throw SpecParseError("state 'mixed': field 'axis' must be x or z, got '" + it->second + "'");
    fields.erase(it);
    s.ra = detail::take_number(fields, "ra", family);
    s.rb = detail::take_number(fields, "rb", family);
    spec = s;
  } else if (family == "ent") {
    spec = PartialEntangled{detail::take_number(fields, "w", family)};
  } else if (family == "depol") {
    Depolarized s;
    s.w = detail::take_number(fields, "w", family);
    s.p = detail::take_number(fields, "p", family);
    spec = s;
  } else {
    throw SpecParseError("unknown state family '" + std::string(family) + "'");
  }
  detail::reject_leftovers(fields, family);
  try {
    validate(spec);
  } catch (const std::invalid_argument& e) {
    throw SpecParseError("state '" + std::string(family) + "': " + e.what());
  }
  return spec;
}

}  // namespace mdi
