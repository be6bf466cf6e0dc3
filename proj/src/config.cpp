#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "holo/error.hpp"
#include "holo/experiment.hpp"

namespace holo {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

double parse_number(std::string_view text, std::size_t line) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty() || !std::isfinite(v))
    fail(line, "malformed number '" + std::string(text) + "'");
  return v;
}

std::vector<double> parse_list(std::string_view text, std::size_t line) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_number(text.substr(0, comma), line));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::size_t parse_count(std::string_view text, std::size_t line) {
  const double v = parse_number(text, line);
  if (v < 0.0 || v != std::floor(v) || v > 1e9) fail(line, "expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

bool parse_bool(std::string_view text, std::size_t line) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  fail(line, "expected a boolean");
}

struct Entry {
  std::string value;
  std::size_t line = 0;
};

const char* const kKnownKeys[] = {"dim",      "kappa",         "k",        "omega",       "s",           "source",
                                  "h",        "n",             "strategy", "alpha",       "eps",         "fallback_axis",
                                  "lookup",   "refine2d",      "noise_level", "noise_seed", "out",       "region_b",
                                  "probe",    "rates_s"};

}  // namespace

void ExperimentConfig::validate() const {
  if (dim != 2 && dim != 3) throw Error(ErrorKind::InvalidParameter, "dim must be 2 or 3");
  if (k.dim() != dim || omega.dim() != dim) throw Error(ErrorKind::InvalidInput, "vector dimension mismatch");
  WaveParams::make(kappa, k);
  RadiationField::make(dim, sources);
  make_frame(omega, s);
  if (n < 2) throw Error(ErrorKind::InvalidParameter, "n must be at least 2");
  if (!(h > 0.0)) throw Error(ErrorKind::InvalidParameter, "h must be positive");
  if (!(region_b > 0.0)) throw Error(ErrorKind::InvalidParameter, "region_b must be positive");
  if (!(noise_level >= 0.0)) throw Error(ErrorKind::InvalidParameter, "noise_level must be >= 0");
  strategy.validate(kappa, dim);
  if (rate_ladder.size() < 3) throw Error(ErrorKind::InvalidParameter, "rates_s needs at least 3 values");
  for (double v : rate_ladder)
    if (!(v > 0.0)) throw Error(ErrorKind::InvalidParameter, "rates_s values must be positive");
}

ExperimentConfig parse_config(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::vector<Entry> source_entries;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (std::find(std::begin(kKnownKeys), std::end(kKnownKeys), key) == std::end(kKnownKeys))
      fail(line_no, "unknown key '" + key + "'");
    if (value.empty()) fail(line_no, "missing value for '" + key + "'");
    if (key == "source") {
      source_entries.push_back({value, line_no});
    } else {
      if (entries.count(key)) fail(line_no, "duplicate key '" + key + "'");
      entries[key] = {value, line_no};
    }
  }

  auto get = [&](const char* key) -> const Entry* {
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : &it->second;
  };
  auto line_of = [&](const char* key) -> std::size_t {
    const Entry* e = get(key);
    return e ? e->line : 0;
  };
  auto vector_of = [&](const Entry& e, std::size_t dim) {
    const std::vector<double> v = parse_list(e.value, e.line);
    if (v.size() != dim) fail(e.line, "expected " + std::to_string(dim) + " components");
    return Vec(std::span<const double>(v));
  };

  ExperimentConfig cfg;
  if (const Entry* e = get("dim")) {
    cfg.dim = parse_count(e->value, e->line);
    if (cfg.dim != 2 && cfg.dim != 3) fail(e->line, "dim must be 2 or 3");
  }
  const std::size_t d = cfg.dim;
  if (const Entry* e = get("kappa")) cfg.kappa = parse_number(e->value, e->line);
  if (!(cfg.kappa > 0.0)) fail(line_of("kappa"), "kappa must be positive");
  cfg.k = Vec::unit(d, 0) * cfg.kappa;
  if (const Entry* e = get("k")) cfg.k = vector_of(*e, d);
  cfg.omega = Vec::unit(d, 0);
  if (const Entry* e = get("omega")) cfg.omega = vector_of(*e, d);
  {
    Vec x0(d);
    x0[1] = 2.5;
    cfg.sources = {{cplx(1.0, 0.0), x0}};
  }
  if (!source_entries.empty()) {
    cfg.sources.clear();
    for (const Entry& e : source_entries) {
      const std::vector<double> v = parse_list(e.value, e.line);
      if (v.size() != d + 2) fail(e.line, "source needs Re c, Im c and " + std::to_string(d) + " coordinates");
      cfg.sources.push_back({cplx(v[0], v[1]), Vec(std::span<const double>(v).subspan(2))});
    }
  }
  if (const Entry* e = get("s")) cfg.s = parse_number(e->value, e->line);
  if (const Entry* e = get("h")) cfg.h = parse_number(e->value, e->line);
  if (const Entry* e = get("n")) cfg.n = parse_count(e->value, e->line);
  if (const Entry* e = get("strategy")) {
    if (e->value == "sqrt") cfg.strategy.kind = StrategyKind::SqrtScaled;
    else if (e->value == "bounded") cfg.strategy.kind = StrategyKind::BoundedOffset;
    else if (e->value == "hybrid") cfg.strategy.kind = StrategyKind::Hybrid;
    else fail(e->line, "strategy must be sqrt, bounded or hybrid");
  }
  if (const Entry* e = get("alpha")) cfg.strategy.alpha = parse_number(e->value, e->line);
  if (const Entry* e = get("eps")) cfg.strategy.eps = parse_number(e->value, e->line);
  if (const Entry* e = get("fallback_axis")) cfg.strategy.fallback_axis = parse_count(e->value, e->line);
  if (const Entry* e = get("lookup")) {
    if (e->value == "analytic") cfg.lookup = LookupMode::Analytic;
    else if (e->value == "bilinear") cfg.lookup = LookupMode::Bilinear;
    else fail(e->line, "lookup must be analytic or bilinear");
  }
  if (const Entry* e = get("refine2d")) cfg.refine2d = parse_bool(e->value, e->line);
  if (const Entry* e = get("noise_level")) cfg.noise_level = parse_number(e->value, e->line);
  if (const Entry* e = get("noise_seed")) cfg.noise_seed = parse_count(e->value, e->line);
  if (const Entry* e = get("out")) cfg.out_dir = e->value;
  if (const Entry* e = get("region_b")) cfg.region_b = parse_number(e->value, e->line);
  if (const Entry* e = get("probe")) {
    if (e->value == "auto") cfg.probe = RateProbe::Auto;
    else if (e->value == "annulus") cfg.probe = RateProbe::Annulus;
    else if (e->value == "singular") cfg.probe = RateProbe::Singular;
    else fail(e->line, "probe must be auto, annulus or singular");
  }
  if (const Entry* e = get("rates_s")) cfg.rate_ladder = parse_list(e->value, e->line);

  // Attribute invariant violations to the line that most plausibly caused them.
  auto check = [&](auto&& fn, std::initializer_list<const char*> keys) {
    try {
      fn();
    } catch (const Error& err) {
      std::size_t line = 0;
      for (const char* key : keys) line = std::max(line, line_of(key));
      if (keys.size() == 1 && std::string(*keys.begin()) == "source" && !source_entries.empty())
        line = source_entries.back().line;
      fail(line, err.what());
    }
  };
  check([&] { WaveParams::make(cfg.kappa, cfg.k); }, {"k", "kappa"});
  check([&] { RadiationField::make(d, cfg.sources); }, {"source"});
  check([&] { make_frame(cfg.omega, cfg.s); }, {"omega", "s"});
  check([&] { cfg.strategy.validate(cfg.kappa, d); }, {"strategy", "alpha", "eps", "fallback_axis"});
  check([&] { cfg.validate(); }, {"n", "h", "region_b", "noise_level", "rates_s"});
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace holo
