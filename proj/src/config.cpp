#include "gchlab/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "json.hpp"

namespace gchlab {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::string& prefix,
                         const std::set<std::string>& allowed) {
  for (const auto& item : obj.items())
    if (!allowed.contains(item.key()))
      throw config_error("unknown key \"" + prefix + item.key() + "\"");
}

const json* find(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

const json& require(const json& obj, const std::string& path,
                    const std::string& key) {
  const json* p = find(obj, key);
  if (!p) throw config_error("missing required key \"" + path + key + "\"");
  return *p;
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number())
    throw config_error("key \"" + path + "\" must be a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer())
    throw config_error("key \"" + path + "\" must be an integer");
  return v.get<int>();
}

bool as_bool(const json& v, const std::string& path) {
  if (!v.is_boolean())
    throw config_error("key \"" + path + "\" must be a boolean");
  return v.get<bool>();
}

std::string as_string(const json& v, const std::string& path) {
  if (!v.is_string())
    throw config_error("key \"" + path + "\" must be a string");
  return v.get<std::string>();
}

InitialSpec parse_initial(const json& obj) {
  if (!obj.is_object()) throw config_error("\"initial\" must be an object");
  InitialSpec spec;
  const std::string kind = as_string(require(obj, "initial.", "kind"),
                                     "initial.kind");
  if (kind == "gaussian") {
    spec.kind = InitialSpec::Kind::Gaussian;
    reject_unknown_keys(obj, "initial.", {"kind", "a", "x0", "sigma",
                                          "mollify_n"});
    spec.a = as_number(require(obj, "initial.", "a"), "initial.a");
    spec.x0 = as_number(require(obj, "initial.", "x0"), "initial.x0");
    spec.sigma = as_number(require(obj, "initial.", "sigma"), "initial.sigma");
    if (!(spec.sigma > 0.0))
      throw config_error("key \"initial.sigma\" must be positive");
  } else if (kind == "sech_momentum") {
    spec.kind = InitialSpec::Kind::SechMomentum;
    reject_unknown_keys(obj, "initial.", {"kind", "a", "x0", "mollify_n"});
    spec.a = as_number(require(obj, "initial.", "a"), "initial.a");
    spec.x0 = as_number(require(obj, "initial.", "x0"), "initial.x0");
  } else if (kind == "dp_peakon_pullback") {
    spec.kind = InitialSpec::Kind::DpPeakonPullback;
    reject_unknown_keys(obj, "initial.", {"kind", "c", "x0", "mollify_n"});
    spec.c = as_number(require(obj, "initial.", "c"), "initial.c");
    spec.x0 = as_number(require(obj, "initial.", "x0"), "initial.x0");
  } else if (kind == "from_file") {
    spec.kind = InitialSpec::Kind::FromFile;
    reject_unknown_keys(obj, "initial.", {"kind", "path", "mollify_n"});
    spec.path = as_string(require(obj, "initial.", "path"), "initial.path");
  } else {
    throw config_error("key \"initial.kind\" must be one of gaussian, "
                       "sech_momentum, dp_peakon_pullback, from_file");
  }
  if (const json* m = find(obj, "mollify_n")) {
    spec.mollify_n = as_int(*m, "initial.mollify_n");
    if (*spec.mollify_n < 1)
      throw config_error("key \"initial.mollify_n\" must be >= 1");
  }
  return spec;
}

RunConfig parse_json(const json& root) {
  if (!root.is_object()) throw config_error("config root must be an object");
  reject_unknown_keys(root, "", {"grid", "backend", "time", "initial",
                                 "output"});

  RunConfig cfg;

  const json& grid = require(root, "", "grid");
  if (!grid.is_object()) throw config_error("\"grid\" must be an object");
  reject_unknown_keys(grid, "grid.", {"L", "N"});
  cfg.grid_half_width = as_number(require(grid, "grid.", "L"), "grid.L");
  cfg.grid_n = as_int(require(grid, "grid.", "N"), "grid.N");
  if (!(cfg.grid_half_width > 0.0))
    throw config_error("key \"grid.L\" must be positive");
  if (cfg.grid_n < 8 || cfg.grid_n % 2 != 0)
    throw config_error("key \"grid.N\" must be even and at least 8");

  const std::string backend =
      as_string(require(root, "", "backend"), "backend");
  if (backend == "spectral")
    cfg.backend = BackendKind::Spectral;
  else if (backend == "fd2")
    cfg.backend = BackendKind::Fd2;
  else
    throw config_error("key \"backend\" must be \"spectral\" or \"fd2\"");

  const json& time = require(root, "", "time");
  if (!time.is_object()) throw config_error("\"time\" must be an object");
  reject_unknown_keys(time, "time.", {"t_end", "cfl", "dt_min", "blow_factor",
                                      "snapshot_stride", "dealias"});
  cfg.t_end = as_number(require(time, "time.", "t_end"), "time.t_end");
  if (!(cfg.t_end > 0.0))
    throw config_error("key \"time.t_end\" must be positive");
  if (const json* v = find(time, "cfl")) {
    cfg.cfl = as_number(*v, "time.cfl");
    if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0))
      throw config_error("key \"time.cfl\" must lie in (0, 1]");
  }
  if (const json* v = find(time, "dt_min")) {
    cfg.dt_min = as_number(*v, "time.dt_min");
    if (!(cfg.dt_min > 0.0))
      throw config_error("key \"time.dt_min\" must be positive");
  }
  if (const json* v = find(time, "blow_factor")) {
    cfg.blow_factor = as_number(*v, "time.blow_factor");
    if (!(cfg.blow_factor > 1.0))
      throw config_error("key \"time.blow_factor\" must exceed 1");
  }
  if (const json* v = find(time, "snapshot_stride")) {
    cfg.snapshot_stride = as_int(*v, "time.snapshot_stride");
    if (cfg.snapshot_stride < 1)
      throw config_error("key \"time.snapshot_stride\" must be >= 1");
  }
  if (const json* v = find(time, "dealias"))
    cfg.dealias = as_bool(*v, "time.dealias");

  cfg.initial = parse_initial(require(root, "", "initial"));
  if (cfg.initial.kind != InitialSpec::Kind::FromFile &&
      !(std::abs(cfg.initial.x0) < cfg.grid_half_width))
    throw config_error("key \"initial.x0\" must satisfy |x0| < grid.L");

  if (const json* output = find(root, "output")) {
    if (!output->is_object())
      throw config_error("\"output\" must be an object");
    reject_unknown_keys(*output, "output.", {"dir", "write_snapshots"});
    if (const json* v = find(*output, "dir"))
      cfg.output_dir = as_string(*v, "output.dir");
    if (const json* v = find(*output, "write_snapshots"))
      cfg.write_snapshots = as_bool(*v, "output.write_snapshots");
  }
  return cfg;
}

} // namespace

const char* to_string(InitialSpec::Kind k) {
  switch (k) {
    case InitialSpec::Kind::Gaussian: return "gaussian";
    case InitialSpec::Kind::SechMomentum: return "sech_momentum";
    case InitialSpec::Kind::DpPeakonPullback: return "dp_peakon_pullback";
    case InitialSpec::Kind::FromFile: return "from_file";
  }
  return "?";
}

SolverConfig RunConfig::solver() const {
  SolverConfig cfg;
  cfg.backend = backend;
  cfg.cfl = cfl;
  cfg.t_end = t_end;
  cfg.dt_min = dt_min;
  cfg.blow_factor = blow_factor;
  cfg.dealias = dealias;
  cfg.snapshot_stride = snapshot_stride;
  cfg.record_snapshots = write_snapshots;
  return cfg;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_config_text(text);
}

RunConfig parse_config_text(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_json(root);
}

std::string config_to_json(const RunConfig& cfg) {
  json initial{{"kind", to_string(cfg.initial.kind)}};
  switch (cfg.initial.kind) {
    case InitialSpec::Kind::Gaussian:
      initial["a"] = cfg.initial.a;
      initial["x0"] = cfg.initial.x0;
      initial["sigma"] = cfg.initial.sigma;
      break;
    case InitialSpec::Kind::SechMomentum:
      initial["a"] = cfg.initial.a;
      initial["x0"] = cfg.initial.x0;
      break;
    case InitialSpec::Kind::DpPeakonPullback:
      initial["c"] = cfg.initial.c;
      initial["x0"] = cfg.initial.x0;
      break;
    case InitialSpec::Kind::FromFile:
      initial["path"] = cfg.initial.path;
      break;
  }
  if (cfg.initial.mollify_n) initial["mollify_n"] = *cfg.initial.mollify_n;

  const json root{
      {"grid", {{"L", cfg.grid_half_width}, {"N", cfg.grid_n}}},
      {"backend", to_string(cfg.backend)},
      {"time",
       {{"t_end", cfg.t_end},
        {"cfl", cfg.cfl},
        {"dt_min", cfg.dt_min},
        {"blow_factor", cfg.blow_factor},
        {"snapshot_stride", cfg.snapshot_stride},
        {"dealias", cfg.dealias}}},
      {"initial", initial},
      {"output",
       {{"dir", cfg.output_dir}, {"write_snapshots", cfg.write_snapshots}}}};
  return root.dump(2);
}

} // namespace gchlab
