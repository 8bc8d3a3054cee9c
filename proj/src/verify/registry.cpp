#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "checks.hpp"

namespace besselxi::verify {

namespace {

struct Entry {
  CheckId id;
  std::string_view name;
};

constexpr std::array<Entry, 19> kRegistry = {{
    {CheckId::eq_1_1, "eq_1_1"},
    {CheckId::thm_1_1, "thm_1_1"},
    {CheckId::thm_1_2, "thm_1_2"},
    {CheckId::thm_1_2_r0, "thm_1_2_r0"},
    {CheckId::thm_1_3, "thm_1_3"},
    {CheckId::asym_remark, "asym_remark"},
    {CheckId::heat_pde, "heat_pde"},
    {CheckId::bvp_i, "bvp_i"},
    {CheckId::bvp_ii, "bvp_ii"},
    {CheckId::bessel_derivs, "bessel_derivs"},
    {CheckId::parseval, "parseval"},
    {CheckId::mellin_3_3, "mellin_3_3"},
    {CheckId::residue_3_5, "residue_3_5"},
    {CheckId::contour_3_6, "contour_3_6"},
    {CheckId::reflect_3_7, "reflect_3_7"},
    {CheckId::beta_3_8, "beta_3_8"},
    {CheckId::kummer_3_9, "kummer_3_9"},
    {CheckId::muntz_3_11, "muntz_3_11"},
    {CheckId::chain_3_12, "chain_3_12"},
}};

ParamPoint point(std::initializer_list<std::pair<const char*, double>> values) {
  ParamPoint p;
  for (const auto& [k, v] : values) p.emplace_back(k, v);
  return p;
}

Grid cross(const std::vector<ParamPoint>& base, const char* axis, const std::vector<double>& values) {
  Grid out;
  for (const auto& b : base) {
    for (double v : values) {
      ParamPoint p = b;
      p.emplace_back(axis, v);
      out.push_back(std::move(p));
    }
  }
  return out;
}

bool same_value(const ParamValue& a, const ParamValue& b) { return a == b; }

}  // namespace

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> v;
    for (const auto& e : kRegistry) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string_view check_name(CheckId id) {
  for (const auto& e : kRegistry)
    if (e.id == id) return e.name;
  throw InvariantError("check_name: unknown id");
}

std::optional<CheckId> parse_check_id(std::string_view name) {
  for (const auto& e : kRegistry)
    if (e.name == name) return e.id;
  return std::nullopt;
}

std::string_view mode_name(CheckMode m) { return m == CheckMode::exact ? "exact" : "calibrate"; }

std::optional<CheckMode> parse_mode(std::string_view name) {
  if (name == "exact" || name == "EXACT") return CheckMode::exact;
  if (name == "calibrate" || name == "CALIBRATE") return CheckMode::calibrate;
  return std::nullopt;
}

GridOverrides parse_grid_spec(std::string_view spec) {
  GridOverrides out;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(';', pos);
    if (end == std::string_view::npos) end = spec.size();
    const std::string_view item = spec.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) throw DomainError("grid: expected name=values in '" + std::string(item) + "'");
    std::string name(item.substr(0, eq));
    std::vector<double> values;
    std::string_view rest = item.substr(eq + 1);
    std::size_t vpos = 0;
    while (vpos <= rest.size()) {
      std::size_t comma = rest.find(',', vpos);
      if (comma == std::string_view::npos) comma = rest.size();
      std::string token(rest.substr(vpos, comma - vpos));
      vpos = comma + 1;
      if (token.empty()) throw DomainError("grid: empty value for '" + name + "'");
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        throw DomainError("grid: bad number '" + token + "'");
      }
      if (used != token.size() || !std::isfinite(v)) throw DomainError("grid: bad number '" + token + "'");
      values.push_back(v);
    }
    out.emplace_back(std::move(name), std::move(values));
  }
  return out;
}

Grid apply_overrides(const Grid& defaults, const GridOverrides& overrides) {
  if (overrides.empty()) return defaults;
  std::vector<ParamPoint> base;
  for (const auto& p : defaults) {
    ParamPoint kept;
    for (const auto& kv : p) {
      const bool overridden = std::any_of(overrides.begin(), overrides.end(),
                                          [&](const auto& o) { return o.first == kv.first; });
      if (!overridden) kept.push_back(kv);
    }
    const bool seen = std::any_of(base.begin(), base.end(), [&](const ParamPoint& b) {
      if (b.size() != kept.size()) return false;
      for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i].first != kept[i].first || !same_value(b[i].second, kept[i].second)) return false;
      return true;
    });
    if (!seen) base.push_back(std::move(kept));
  }
  if (base.empty()) base.emplace_back();
  for (const auto& [axis, values] : overrides) base = cross(base, axis.c_str(), values);
  return base;
}

std::optional<double> find_param(const ParamPoint& p, std::string_view name) {
  for (const auto& [k, v] : p) {
    if (k == name) {
      if (const double* d = std::get_if<double>(&v)) return *d;
      throw DomainError("parameter '" + std::string(name) + "' is not numeric");
    }
  }
  return std::nullopt;
}

double param(const ParamPoint& p, std::string_view name) {
  const auto v = find_param(p, name);
  if (!v) throw DomainError("missing parameter '" + std::string(name) + "'");
  return *v;
}

CheckDefaults check_defaults(CheckId id) {
  const double pi = kPi;
  switch (id) {
    case CheckId::eq_1_1:
      return {CheckMode::exact, 1e-8, cross({ParamPoint{}}, "x", {0.0, 0.5, 1.0, 2.0})};
    case CheckId::thm_1_1: {
      const std::vector<ParamPoint> rt = {point({{"r", 0.0}, {"t", pi}}), point({{"r", 0.5}, {"t", 1.0}}),
                                          point({{"r", 1.0}, {"t", 2.0}})};
      return {CheckMode::calibrate, 1e-5, cross(rt, "x", {0.0, 0.2, -0.2, 0.4, -0.4})};
    }
    case CheckId::thm_1_2:
      return {CheckMode::calibrate, 1e-4,
              cross({point({{"r", 0.5}, {"imag_r", 1.0}, {"t", 1.0}})}, "x", {3.5, 4.0, 5.0, 6.0})};
    case CheckId::thm_1_2_r0:
      return {CheckMode::exact, 1e-8, cross({point({{"t", 1.0}})}, "x", {3.5, 4.0, 5.0, 6.0})};
    case CheckId::thm_1_3: {
      const std::vector<ParamPoint> r = cross({point({{"t", pi}})}, "r", {0.0, 0.5, 1.0});
      return {CheckMode::calibrate, 1e-5, cross(r, "x", {0.0, 0.3, -0.3})};
    }
    case CheckId::asym_remark:
      return {CheckMode::exact, 1.0, cross({point({{"t", 0.1}, {"kappa", 1.0}})}, "r", {20.0, 40.0, 80.0, 160.0})};
    case CheckId::heat_pde:
      return {CheckMode::exact, 1e-6,
              {point({{"r", 0.5}, {"t", 0.5}, {"kappa", 1.0}}), point({{"r", 1.0}, {"t", 1.0}, {"kappa", 1.0}}),
               point({{"r", 3.0}, {"t", 0.3}, {"kappa", 1.0}})}};
    case CheckId::bvp_i:
      return {CheckMode::exact, 1e-10, cross({ParamPoint{}}, "t", {0.1, 0.5, 1.0, 2.0, 5.0})};
    case CheckId::bvp_ii:
      return {CheckMode::exact, 1e-4, cross({ParamPoint{}}, "r", {1.0, pi, 5.0, 7.0, 9.0})};
    case CheckId::bessel_derivs:
      return {CheckMode::exact, 1e-8, cross(cross({ParamPoint{}}, "n", {1.0, 2.0, 3.0}), "r", {0.1, 0.5, 1.0, 2.5, 5.0})};
    case CheckId::parseval:
      return {CheckMode::exact, 1e-8, cross({ParamPoint{}}, "pair", {1.0, 2.0})};
    case CheckId::mellin_3_3: {
      Grid g;
      for (double v : {0.0, 1.0})
        for (auto [sr, si] : std::array<std::pair<double, double>, 3>{{{1.2, 0.0}, {1.7, 0.0}, {0.5, 0.3}}})
          for (double r : {0.5, 1.0})
            for (double t : {0.5, 1.0})
              g.push_back(point({{"v", v}, {"s_re", sr}, {"s_im", si}, {"r", r}, {"t", t}}));
      return {CheckMode::exact, 1e-8, g};
    }
    case CheckId::residue_3_5: {
      const std::vector<ParamPoint> rt = {point({{"r", 0.0}, {"t", 1.0}}), point({{"r", 0.5}, {"t", 1.0}}),
                                          point({{"r", 1.0}, {"t", 2.0}})};
      return {CheckMode::exact, 1e-8, cross(rt, "y", {0.5, 1.0, 2.0})};
    }
    case CheckId::contour_3_6:
      return {CheckMode::calibrate, 1e-4, cross({point({{"r", 0.5}, {"t", 1.0}})}, "x", {0.0, 0.2, -0.2, 0.4, -0.4})};
    case CheckId::reflect_3_7:
      return {CheckMode::exact, 1e-8, cross({point({{"r", 0.5}, {"t", 1.0}, {"p", 0.3}})}, "x", {0.5, 1.0, 2.0})};
    case CheckId::beta_3_8: {
      const Grid a = cross({point({{"c", 1.0}})}, "a", {-0.5, 1.0});
      return {CheckMode::exact, 1e-8, cross(a, "y", {0.5, 0.99, 2.0})};
    }
    case CheckId::kummer_3_9:
      return {CheckMode::exact, 1e-8, cross(cross({ParamPoint{}}, "s", {0.5, 1.5}), "x", {0.25, 1.0})};
    case CheckId::muntz_3_11:
      return {CheckMode::exact, 1e-8,
              cross(cross({point({{"r", 0.5}, {"imag_r", 1.0}, {"t", 1.0}})}, "kernel", {1.0, 2.0}), "s", {0.3, 0.5, 0.7})};
    case CheckId::chain_3_12:
      return {CheckMode::calibrate, 1e-4,
              cross({point({{"r", 0.5}, {"imag_r", 1.0}, {"t", 1.0}})}, "x", {3.5, 4.0, 5.0, 6.0})};
  }
  throw InvariantError("check_defaults: unknown id");
}

namespace detail {

BesselScale scale_of(const ParamPoint& p) {
  const double r = find_param(p, "r").value_or(0.0);
  const bool imag = find_param(p, "imag_r").value_or(0.0) != 0.0;
  return imag ? BesselScale::imaginary(r) : BesselScale::real(r);
}

PhysParams phys_of(const ParamPoint& p) {
  PhysParams out;
  out.x = find_param(p, "x").value_or(0.0);
  out.r = scale_of(p);
  out.t = find_param(p, "t").value_or(1.0);
  out.kappa = find_param(p, "kappa").value_or(1.0);
  out.validate();
  return out;
}

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string format_number(Complex v) {
  if (std::fabs(v.imag()) <= 1e-12 * std::max(1.0, std::fabs(v.real()))) return format_number(v.real());
  return format_number(v.real()) + (v.imag() < 0 ? "" : "+") + format_number(v.imag()) + "i";
}

}  // namespace detail

}  // namespace besselxi::verify
