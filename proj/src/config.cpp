#include "wusim/config.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace wusim {

SimConfig default_paper_config() {
  // All values from the reference experimental setting; C, D and the source
  // shape are desk-scale replacements for the image task.
  SimConfig cfg;
  cfg.L_max = 60;
  cfg.L_sig = 40;
  cfg.L_w = 2;
  cfg.L_d = 3;
  cfg.L_p = 2;
  cfg.L_b = 8;
  cfg.delta_wake = 2;
  cfg.N_T = 10;
  cfg.N_R = 2;
  cfg.N_P = 4;
  cfg.snr_db = 10.0;
  cfg.P_on = 1.0;
  cfg.C = 4;
  cfg.D = 16;
  cfg.gamma = 10.0;
  cfg.alpha = 0.2;
  cfg.delta = 0.05;
  cfg.class_sep = 3.0;
  cfg.signal_noise_scale = 1.0;
  cfg.seed = 1;
  return cfg;
}

HyperGrid default_paper_grid() {
  HyperGrid g;
  g.values_s = {0.0, 1.0, 2.0, 3.0, 4.0};
  g.values_w = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  g.values_d = {1.0, 3.0, 5.0, 7.0, 9.0};
  return g;
}

namespace {

using Setter = std::function<void(const std::string&)>;

int parse_int(const std::string& v) {
  std::size_t pos = 0;
  int out;
  try {
    out = std::stoi(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("expected integer, got '" + v + "'");
  }
  if (pos != v.size()) throw ConfigError("expected integer, got '" + v + "'");
  return out;
}

std::uint64_t parse_u64(const std::string& v) {
  std::size_t pos = 0;
  std::uint64_t out;
  try {
    out = std::stoull(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("expected unsigned integer, got '" + v + "'");
  }
  if (pos != v.size())
    throw ConfigError("expected unsigned integer, got '" + v + "'");
  return out;
}

double parse_real(const std::string& v) {
  std::size_t pos = 0;
  double out;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    throw ConfigError("expected real, got '" + v + "'");
  }
  if (pos != v.size()) throw ConfigError("expected real, got '" + v + "'");
  return out;
}

std::vector<double> parse_list(const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    // trim
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(parse_real(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw ConfigError("expected comma-separated reals, got '" + v + "'");
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

// section.key -> setter
std::map<std::string, Setter> make_setters(SimConfig& sim, HyperGrid& grid) {
  std::map<std::string, Setter> m;
  auto si = [&](const char* k, int& field) {
    m["sim." + std::string(k)] = [&field](const std::string& v) { field = parse_int(v); };
  };
  auto sr = [&](const char* k, double& field) {
    m["sim." + std::string(k)] = [&field](const std::string& v) { field = parse_real(v); };
  };
  si("l_max", sim.L_max);
  si("l_sig", sim.L_sig);
  si("l_w", sim.L_w);
  si("l_d", sim.L_d);
  si("l_p", sim.L_p);
  si("l_b", sim.L_b);
  si("delta_wake", sim.delta_wake);
  si("n_t", sim.N_T);
  si("n_r", sim.N_R);
  si("n_p", sim.N_P);
  si("c", sim.C);
  si("d", sim.D);
  sr("snr_db", sim.snr_db);
  sr("p_on", sim.P_on);
  sr("gamma", sim.gamma);
  sr("alpha", sim.alpha);
  sr("delta", sim.delta);
  sr("class_sep", sim.class_sep);
  sr("signal_noise_scale", sim.signal_noise_scale);
  m["sim.seed"] = [&sim](const std::string& v) { sim.seed = parse_u64(v); };
  m["grid.values_s"] = [&grid](const std::string& v) { grid.values_s = parse_list(v); };
  m["grid.values_w"] = [&grid](const std::string& v) { grid.values_w = parse_list(v); };
  m["grid.values_d"] = [&grid](const std::string& v) { grid.values_d = parse_list(v); };
  return m;
}

}  // namespace

void load_config_file(const std::string& path, SimConfig& sim, HyperGrid& grid) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  auto setters = make_setters(sim, grid);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = trim(t.substr(1, t.size() - 2));
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
    const std::string key = section + "." + trim(t.substr(0, eq));
    const std::string val = trim(t.substr(eq + 1));
    const auto it = setters.find(key);
    if (it == setters.end())
      throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    it->second(val);
  }
}

void apply_env_overrides(SimConfig& sim, HyperGrid& grid) {
  auto setters = make_setters(sim, grid);
  for (auto& [key, setter] : setters) {
    // sim.l_max -> WUSIM_SIM_L_MAX
    std::string env = "WUSIM_";
    for (char c : key) env += (c == '.') ? '_' : static_cast<char>(std::toupper(c));
    if (const char* v = std::getenv(env.c_str())) setter(v);
  }
}

void save_config_file(const std::string& path, const SimConfig& sim,
                      const HyperGrid& grid) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write config file: " + path);
  char buf[64];
  auto real = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return std::string(buf);
  };
  auto list = [&](const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += real(v[i]);
    }
    return s;
  };
  out << "[sim]\n";
  out << "l_max = " << sim.L_max << "\n";
  out << "l_sig = " << sim.L_sig << "\n";
  out << "l_w = " << sim.L_w << "\n";
  out << "l_d = " << sim.L_d << "\n";
  out << "l_p = " << sim.L_p << "\n";
  out << "l_b = " << sim.L_b << "\n";
  out << "delta_wake = " << sim.delta_wake << "\n";
  out << "n_t = " << sim.N_T << "\n";
  out << "n_r = " << sim.N_R << "\n";
  out << "n_p = " << sim.N_P << "\n";
  out << "c = " << sim.C << "\n";
  out << "d = " << sim.D << "\n";
  out << "snr_db = " << real(sim.snr_db) << "\n";
  out << "p_on = " << real(sim.P_on) << "\n";
  out << "gamma = " << real(sim.gamma) << "\n";
  out << "alpha = " << real(sim.alpha) << "\n";
  out << "delta = " << real(sim.delta) << "\n";
  out << "class_sep = " << real(sim.class_sep) << "\n";
  out << "signal_noise_scale = " << real(sim.signal_noise_scale) << "\n";
  out << "seed = " << sim.seed << "\n";
  out << "\n[grid]\n";
  out << "values_s = " << list(grid.values_s) << "\n";
  out << "values_w = " << list(grid.values_w) << "\n";
  out << "values_d = " << list(grid.values_d) << "\n";
  if (!out) throw IoError("failed writing config file: " + path);
}

}  // namespace wusim
