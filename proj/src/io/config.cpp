// Copyright 2026 The lambdaspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "lambdaspec/io/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "lambdaspec/core/errors.hpp"

namespace lambdaspec {
namespace {

using nlohmann::json;

std::string join(std::string_view prefix, std::string_view key) {
  return prefix.empty() ? std::string(key) : std::string(prefix) + "." + std::string(key);
}

void reject_unknown(const json& obj, std::string_view prefix, std::initializer_list<std::string_view> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || item.key() == a;
    if (!known) throw ConfigError(join(prefix, item.key()), "unknown key");
  }
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  return j;
}

double read_number(const json& obj, std::string_view prefix, std::string_view key, std::optional<double> fallback) {
  const std::string path = join(prefix, key);
  auto it = obj.find(std::string(key));
  if (it == obj.end()) {
    if (!fallback) throw ConfigError(path, "required");
    return *fallback;
  }
  if (!it->is_number()) throw ConfigError(path, "expected a number");
  return it->get<double>();
}

int read_int(const json& obj, std::string_view prefix, std::string_view key, int fallback) {
  const std::string path = join(prefix, key);
  auto it = obj.find(std::string(key));
  if (it == obj.end()) return fallback;
  if (!it->is_number_integer()) throw ConfigError(path, "expected an integer");
  const auto v = it->get<long long>();
  if (v < -1000000 || v > 1000000) throw ConfigError(path, "out of range");
  return static_cast<int>(v);
}

// Model parameters live at the top level of the document.
ModelParams read_params(const json& root, bool& n_max_explicit) {
  ModelParams p;
  p.omega1 = read_number(root, "", "omega1", std::nullopt);
  p.omega2 = read_number(root, "", "omega2", std::nullopt);
  p.delta = read_number(root, "", "delta", std::nullopt);
  p.gamma1 = read_number(root, "", "gamma1", std::nullopt);
  p.gamma2 = read_number(root, "", "gamma2", std::nullopt);
  p.eta1 = read_number(root, "", "eta1", std::nullopt);
  p.eta2 = read_number(root, "", "eta2", std::nullopt);
  p.phi1 = read_number(root, "", "phi1", p.phi1);
  p.phi2 = read_number(root, "", "phi2", p.phi2);
  p.psi = read_number(root, "", "psi", p.psi);

  if (auto it = root.find("pattern"); it != root.end()) {
    if (!it->is_string()) throw ConfigError("pattern", "expected a string");
    auto pat = parse_pattern(it->get<std::string>());
    if (!pat) throw ConfigError("pattern", "expected isotropic, dipole or custom");
    p.pattern = *pat;
  }
  if (root.contains("beta")) {
    if (p.pattern != EmissionPattern::Custom) throw ConfigError("beta", "only allowed with pattern \"custom\"");
    p.custom_beta = read_number(root, "", "beta", std::nullopt);
  } else if (p.pattern == EmissionPattern::Custom) {
    throw ConfigError("beta", "required with pattern \"custom\"");
  }

  n_max_explicit = root.contains("n_max");
  p.n_max = read_int(root, "", "n_max", p.n_max);

  try {
    p.validate();
  } catch (const InvalidArgument& e) {
    // validate() names the field first; keep its message intact.
    const std::string msg = e.what();
    const auto colon = msg.find(':');
    std::string field = colon == std::string::npos ? std::string() : msg.substr(0, colon);
    if (field == "custom_beta") field = "beta";
    throw ConfigError("", field.empty() ? msg : field + msg.substr(colon));
  }
  return p;
}

}  // namespace

RunConfig parse_config_text(std::string_view text, std::string_view default_name) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("not valid JSON: ") + e.what());
  }
  require_object(root, "(root)");
  reject_unknown(root, "",
                 {"name", "omega1", "omega2", "delta", "gamma1", "gamma2", "eta1", "eta2", "phi1", "phi2", "psi",
                  "pattern", "beta", "n_max", "grid", "oracle", "reference"});

  RunConfig cfg;
  cfg.name = std::string(default_name);
  if (auto it = root.find("name"); it != root.end()) {
    if (!it->is_string() || it->get<std::string>().empty()) throw ConfigError("name", "expected a non-empty string");
    cfg.name = it->get<std::string>();
    for (char c : cfg.name)
      if (c == '/' || c == '\\') throw ConfigError("name", "must not contain path separators");
  }
  cfg.params = read_params(root, cfg.n_max_explicit);

  if (auto it = root.find("grid"); it != root.end()) {
    const json& g = require_object(*it, "grid");
    reject_unknown(g, "grid", {"omega_min", "omega_max", "points", "refine_sidebands"});
    cfg.grid.omega_min = read_number(g, "grid", "omega_min", cfg.grid.omega_min);
    cfg.grid.omega_max = read_number(g, "grid", "omega_max", cfg.grid.omega_max);
    cfg.grid.points = read_int(g, "grid", "points", cfg.grid.points);
    if (auto r = g.find("refine_sidebands"); r != g.end()) {
      if (!r->is_boolean()) throw ConfigError("grid.refine_sidebands", "expected true or false");
      cfg.grid.refine_sidebands = r->get<bool>();
    }
  }
  if (!std::isfinite(cfg.grid.omega_min) || !std::isfinite(cfg.grid.omega_max))
    throw ConfigError("grid", "bounds must be finite");
  if (!(cfg.grid.omega_min < cfg.grid.omega_max)) throw ConfigError("grid.omega_max", "must exceed grid.omega_min");
  if (cfg.grid.points < 2) throw ConfigError("grid.points", "must be at least 2");

  if (auto it = root.find("oracle"); it != root.end()) {
    const json& o = require_object(*it, "oracle");
    reject_unknown(o, "oracle", {"n_max", "quadrature_nodes"});
    cfg.oracle.n_max = read_int(o, "oracle", "n_max", cfg.oracle.n_max);
    cfg.oracle.quadrature_nodes = read_int(o, "oracle", "quadrature_nodes", cfg.oracle.quadrature_nodes);
  }
  if (cfg.oracle.n_max < 1) throw ConfigError("oracle.n_max", "must be at least 1");
  if (cfg.oracle.quadrature_nodes < 1) throw ConfigError("oracle.quadrature_nodes", "must be at least 1");

  if (auto it = root.find("reference"); it != root.end()) {
    const json& r = require_object(*it, "reference");
    reject_unknown(r, "reference", {"n_bar", "source"});
    ReferenceValue ref;
    ref.n_bar = read_number(r, "reference", "n_bar", std::nullopt);
    if (auto s = r.find("source"); s != r.end()) {
      if (!s->is_string()) throw ConfigError("reference.source", "expected a string");
      ref.source = s->get<std::string>();
    }
    cfg.reference = ref;
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read config " + path.string());
  return parse_config_text(buf.str(), path.stem().string());
}

}  // namespace lambdaspec
