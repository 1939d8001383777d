#include "uavsec/config.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>

namespace uavsec {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_double(std::string_view v, int line) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError(line, "expected a number, got '" + std::string(v) + "'");
  }
  return out;
}

std::int64_t parse_int(std::string_view v, int line) {
  std::int64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError(line, "expected an integer, got '" + std::string(v) + "'");
  }
  return out;
}

std::uint64_t parse_uint(std::string_view v, int line) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError(line, "expected an unsigned integer, got '" + std::string(v) + "'");
  }
  return out;
}

}  // namespace

double RunConfig::effective_lambda_db() const {
  if (lambda_db) return *lambda_db;
  return link == Link::uplink ? 1.25 : 5.0;
}

double RunConfig::tx_snr_linear() const { return std::pow(10.0, effective_lambda_db() / 10.0); }

UplinkScenario RunConfig::uplink_scenario() const {
  UplinkScenario sc;
  sc.chord = {chord_b, chord_l};
  sc.radius_g = radius_g;
  sc.path_loss_exp = path_loss_exp;
  sc.tx_snr = std::pow(10.0, (lambda_db ? *lambda_db : 1.25) / 10.0);
  sc.gain_main = gain_main;
  sc.gain_eve = gain_eve;
  sc.rate_bits = rate_bits;
  sc.validate();
  return sc;
}

DownlinkScenario RunConfig::downlink_scenario() const {
  DownlinkScenario sc;
  sc.cap = {radius_s, height_h};
  sc.path_loss_exp = path_loss_exp;
  sc.tx_snr = std::pow(10.0, (lambda_db ? *lambda_db : 5.0) / 10.0);
  sc.gain_main = gain_main;
  sc.gain_eve = gain_eve;
  sc.rate_bits = rate_bits;
  sc.validate();
  return sc;
}

QuadratureConfig RunConfig::quadrature() const {
  QuadratureConfig q;
  q.rel_tol = quad_rel_tol;
  return q;
}

void RunConfig::check() const {
  const auto fail = [](const std::string& msg) { throw ConfigError(0, msg); };
  if (!(path_loss_exp >= 2.0)) fail("violated invariant: n >= 2");
  if (!(rate_bits >= 0.0)) fail("violated invariant: rs_bits >= 0");
  if (!(gain_main > 0.0)) fail("violated invariant: g_main > 0");
  if (!(gain_eve > 0.0)) fail("violated invariant: g_eve > 0");
  if (!(radius_g > 0.0)) fail("violated invariant: r_g > 0");
  if (!(chord_l > 0.0)) fail("violated invariant: chord_l > 0");
  if (!(chord_b > 0.0)) fail("violated invariant: chord_b > 0");
  if (!(chord_l <= 2.0 * chord_b)) fail("violated invariant: chord_l <= 2*chord_b");
  if (!(chord_b <= radius_g)) fail("violated invariant: chord_b <= r_g");
  if (!(chord_l <= 2.0 * radius_g)) fail("violated invariant: chord_l <= 2*r_g");
  if (!(radius_s > 0.0)) fail("violated invariant: r_s > 0");
  if (!(height_h >= 0.0)) fail("violated invariant: height_h >= 0");
  if (!(height_h <= radius_s)) fail("violated invariant: height_h <= r_s");
  if (!(mc_samples >= 1000)) fail("violated invariant: mc_samples >= 1000");
  if (!(quad_rel_tol > 0.0)) fail("violated invariant: quad_rel_tol > 0");
}

RunConfig parse_config_text(std::string_view text) {
  RunConfig cfg;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "expected key=value");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(line_no, "empty key");
    if (value.empty()) throw ConfigError(line_no, "empty value for key '" + std::string(key) + "'");

    if (key == "link") {
      if (value == "uplink") {
        cfg.link = Link::uplink;
      } else if (value == "downlink") {
        cfg.link = Link::downlink;
      } else {
        throw ConfigError(line_no, "link must be 'uplink' or 'downlink'");
      }
    } else if (key == "n") {
      cfg.path_loss_exp = parse_double(value, line_no);
    } else if (key == "rs_bits") {
      cfg.rate_bits = parse_double(value, line_no);
    } else if (key == "lambda_db") {
      cfg.lambda_db = parse_double(value, line_no);
    } else if (key == "g_main") {
      cfg.gain_main = parse_double(value, line_no);
    } else if (key == "g_eve") {
      cfg.gain_eve = parse_double(value, line_no);
    } else if (key == "r_g") {
      cfg.radius_g = parse_double(value, line_no);
    } else if (key == "chord_l") {
      cfg.chord_l = parse_double(value, line_no);
    } else if (key == "chord_b") {
      cfg.chord_b = parse_double(value, line_no);
    } else if (key == "r_s") {
      cfg.radius_s = parse_double(value, line_no);
    } else if (key == "height_h") {
      cfg.height_h = parse_double(value, line_no);
    } else if (key == "mc_samples") {
      cfg.mc_samples = parse_int(value, line_no);
    } else if (key == "seed") {
      cfg.seed = parse_uint(value, line_no);
    } else if (key == "quad_rel_tol") {
      cfg.quad_rel_tol = parse_double(value, line_no);
    } else {
      throw ConfigError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  cfg.check();
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(0, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

}  // namespace uavsec
