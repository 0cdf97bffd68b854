#include "casimir/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace casimir {

std::string_view to_string(GeometryKind kind) noexcept {
  switch (kind) {
    case GeometryKind::pair:
      return "pair";
    case GeometryKind::surface:
      return "surface";
    case GeometryKind::slab:
      return "slab";
  }
  return "unknown";
}

std::string_view to_string(SweepScale scale) noexcept {
  return scale == SweepScale::log ? "log" : "linear";
}

std::string_view to_string(OutputFormat format) noexcept {
  return format == OutputFormat::json ? "json" : "csv";
}

std::string_view to_string(PairAbsorption absorption) noexcept {
  return absorption == PairAbsorption::medium ? "medium" : "none";
}

std::string_view distance_axis_name(GeometryKind kind) noexcept {
  switch (kind) {
    case GeometryKind::pair:
      return "R";
    case GeometryKind::surface:
      return "z0";
    case GeometryKind::slab:
      return "L";
  }
  return "x";
}

SweepScale effective_scale(const RunConfig& config) noexcept {
  if (config.range && config.range->scale) return *config.range->scale;
  return config.axis == SweepAxis::temperature ? SweepScale::linear
                                               : SweepScale::log;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct LineContext {
  std::string_view source;
  int line;
  std::string key;

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << source << ":" << line << ": " << key << ": " << what;
    throw ConfigError(os.str());
  }
};

double parse_double(std::string_view text, const LineContext& ctx) {
  const std::string s(text);
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE ||
      !std::isfinite(v)) {
    ctx.fail("expected a finite number, got '" + s + "'");
  }
  return v;
}

std::int64_t parse_int(std::string_view text, const LineContext& ctx) {
  const std::string s(text);
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE) {
    ctx.fail("expected an integer, got '" + s + "'");
  }
  return v;
}

template <class Enum>
Enum parse_choice(std::string_view text,
                  std::initializer_list<std::pair<std::string_view, Enum>> map,
                  const LineContext& ctx) {
  std::string allowed;
  for (const auto& [name, value] : map) {
    if (text == name) return value;
    if (!allowed.empty()) allowed += "|";
    allowed += name;
  }
  ctx.fail("expected one of " + allowed + ", got '" + std::string(text) + "'");
}

using Setter = std::function<void(RunConfig&, std::string_view,
                                  const LineContext&)>;

SweepRange& range_of(RunConfig& c) {
  if (!c.range) c.range = SweepRange{};
  return *c.range;
}

void add_species_keys(std::map<std::string, Setter, std::less<>>& keys,
                      const std::string& prefix,
                      SpeciesParams RunConfig::*member) {
  keys[prefix + ".omega"] = [member](RunConfig& c, std::string_view v,
                                     const LineContext& x) {
    (c.*member).omega = parse_double(v, x);
  };
  keys[prefix + ".d2"] = [member](RunConfig& c, std::string_view v,
                                  const LineContext& x) {
    (c.*member).d2 = parse_double(v, x);
  };
  keys[prefix + ".gamma"] = [member](RunConfig& c, std::string_view v,
                                     const LineContext& x) {
    (c.*member).gamma = parse_double(v, x);
  };
  keys[prefix + ".density"] = [member](RunConfig& c, std::string_view v,
                                       const LineContext& x) {
    (c.*member).density = parse_double(v, x);
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const auto table = [] {
    std::map<std::string, Setter, std::less<>> k;
    k["geometry"] = [](RunConfig& c, std::string_view v, const LineContext& x) {
      c.geometry = parse_choice<GeometryKind>(
          v,
          {{"pair", GeometryKind::pair},
           {"surface", GeometryKind::surface},
           {"slab", GeometryKind::slab}},
          x);
    };
    k["state"] = [](RunConfig& c, std::string_view v, const LineContext& x) {
      c.state = parse_choice<PairState>(
          v, {{"ground", PairState::ground}, {"a_excited", PairState::a_excited}},
          x);
    };
    k["temperature"] = [](RunConfig& c, std::string_view v,
                          const LineContext& x) {
      c.temperature = parse_double(v, x);
    };
    add_species_keys(k, "a", &RunConfig::a);
    add_species_keys(k, "b", &RunConfig::b);
    k["absorption"] = [](RunConfig& c, std::string_view v,
                         const LineContext& x) {
      c.absorption = parse_choice<PairAbsorption>(
          v, {{"none", PairAbsorption::none}, {"medium", PairAbsorption::medium}},
          x);
    };
    k["slab.l_ph"] = [](RunConfig& c, std::string_view v, const LineContext& x) {
      c.l_ph_a = c.l_ph_b = parse_double(v, x);
    };
    k["slab.l_ph_a"] = [](RunConfig& c, std::string_view v,
                          const LineContext& x) {
      c.l_ph_a = parse_double(v, x);
    };
    k["slab.l_ph_b"] = [](RunConfig& c, std::string_view v,
                          const LineContext& x) {
      c.l_ph_b = parse_double(v, x);
    };
    k["separation"] = [](RunConfig& c, std::string_view v,
                         const LineContext& x) {
      c.separation = parse_double(v, x);
    };
    k["sweep.axis"] = [](RunConfig& c, std::string_view v,
                         const LineContext& x) {
      c.axis = parse_choice<SweepAxis>(v,
                                       {{"distance", SweepAxis::distance},
                                        {"R", SweepAxis::distance},
                                        {"z0", SweepAxis::distance},
                                        {"L", SweepAxis::distance},
                                        {"T", SweepAxis::temperature},
                                        {"temperature", SweepAxis::temperature}},
                                       x);
    };
    k["sweep.min"] = [](RunConfig& c, std::string_view v, const LineContext& x) {
      range_of(c).min = parse_double(v, x);
    };
    k["sweep.max"] = [](RunConfig& c, std::string_view v, const LineContext& x) {
      range_of(c).max = parse_double(v, x);
    };
    k["sweep.points"] = [](RunConfig& c, std::string_view v,
                           const LineContext& x) {
      const auto n = parse_int(v, x);
      if (n < 1 || n > 10'000'000) x.fail("points out of range");
      range_of(c).points = static_cast<int>(n);
    };
    k["sweep.scale"] = [](RunConfig& c, std::string_view v,
                          const LineContext& x) {
      range_of(c).scale = parse_choice<SweepScale>(
          v, {{"log", SweepScale::log}, {"linear", SweepScale::linear}}, x);
    };
    k["lifshitz_variant"] = [](RunConfig& c, std::string_view v,
                               const LineContext& x) {
      c.lifshitz_variant = parse_choice<LifshitzVariant>(
          v,
          {{"tan", LifshitzVariant::as_printed_tan},
           {"tanh", LifshitzVariant::tanh_variant}},
          x);
    };
    k["format"] = [](RunConfig& c, std::string_view v, const LineContext& x) {
      c.format = parse_choice<OutputFormat>(
          v, {{"csv", OutputFormat::csv}, {"json", OutputFormat::json}}, x);
    };
    k["output"] = [](RunConfig& c, std::string_view v, const LineContext& x) {
      if (v.empty()) x.fail("empty path");
      c.output = std::string(v);
    };
    k["matsubara.n_max"] = [](RunConfig& c, std::string_view v,
                              const LineContext& x) {
      c.n_max = parse_int(v, x);
    };
    k["matsubara.tail_tol"] = [](RunConfig& c, std::string_view v,
                                 const LineContext& x) {
      c.tail_tol = parse_double(v, x);
    };
    return k;
  }();
  return table;
}

}  // namespace

RunConfig parse_config(std::istream& in, std::string_view source) {
  RunConfig config;
  std::set<std::string, std::less<>> seen;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    LineContext ctx{source, line_no, std::string(trim(line.substr(0, eq)))};
    if (eq == std::string_view::npos) ctx.fail("expected 'key = value'");
    if (ctx.key.empty()) ctx.fail("missing key");
    const std::string_view value = trim(line.substr(eq + 1));
    const auto& table = setters();
    const auto it = table.find(ctx.key);
    if (it == table.end()) ctx.fail("unknown key");
    if (!seen.insert(ctx.key).second) ctx.fail("duplicate key");
    it->second(config, value, ctx);
  }
  return config;
}

RunConfig parse_config_text(std::string_view text, std::string_view source) {
  std::istringstream in{std::string(text)};
  return parse_config(in, source);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in, path);
}

std::vector<std::pair<std::string, std::string>> config_entries(
    const RunConfig& c) {
  std::vector<std::pair<std::string, std::string>> out;
  auto num = [&](std::string key, double v) {
    out.emplace_back(std::move(key), format_number(v));
  };
  auto text = [&](std::string key, std::string_view v) {
    out.emplace_back(std::move(key), std::string(v));
  };
  if (c.geometry) text("geometry", to_string(*c.geometry));
  text("state", to_string(c.state));
  num("temperature", c.temperature);
  for (const auto& [prefix, s] : {std::pair{"a", c.a}, std::pair{"b", c.b}}) {
    num(std::string(prefix) + ".omega", s.omega);
    num(std::string(prefix) + ".d2", s.d2);
    num(std::string(prefix) + ".gamma", s.gamma);
    num(std::string(prefix) + ".density", s.density);
  }
  text("absorption", to_string(c.absorption));
  if (c.l_ph_a) num("slab.l_ph_a", *c.l_ph_a);
  if (c.l_ph_b) num("slab.l_ph_b", *c.l_ph_b);
  if (c.separation) num("separation", *c.separation);
  text("sweep.axis", c.axis == SweepAxis::temperature ? "T" : "distance");
  if (c.range) {
    num("sweep.min", c.range->min);
    num("sweep.max", c.range->max);
    out.emplace_back("sweep.points", std::to_string(c.range->points));
    text("sweep.scale", to_string(effective_scale(c)));
  }
  text("lifshitz_variant", to_string(c.lifshitz_variant));
  text("format", to_string(c.format));
  out.emplace_back("matsubara.n_max", std::to_string(c.n_max));
  num("matsubara.tail_tol", c.tail_tol);
  return out;
}

}  // namespace casimir
