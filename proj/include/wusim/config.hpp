#pragma once

// Shared domain types and experiment configuration.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace wusim {

// Raised for semantically invalid configurations (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for file I/O failures (CLI exit code 3).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The threshold triple under calibration. The secure state stands for
// (inf, inf, inf); it is kept as a flag so that serialized output never
// contains floating-point infinities.
struct Hyperparams {
  double lambda_s = 0.0;  // change-detection threshold at the Tx
  double lambda_w = 0.0;  // matched-filter threshold at the wake-up Rx
  double lambda_d = 0.0;  // log-loss score threshold for set prediction
  bool secure = false;

  static Hyperparams make(double s, double w, double d) {
    return Hyperparams{s, w, d, false};
  }
  static Hyperparams make_secure() {
    return Hyperparams{0.0, 0.0, 0.0, true};
  }

  // Effective values used in comparisons: the secure triple behaves as +inf.
  double s() const {
    return secure ? std::numeric_limits<double>::infinity() : lambda_s;
  }
  double w() const {
    return secure ? std::numeric_limits<double>::infinity() : lambda_w;
  }
  double d() const {
    return secure ? std::numeric_limits<double>::infinity() : lambda_d;
  }

  bool operator==(const Hyperparams& o) const {
    if (secure != o.secure) return false;
    if (secure) return true;
    return lambda_s == o.lambda_s && lambda_w == o.lambda_w &&
           lambda_d == o.lambda_d;
  }

  // Lexicographic order on (s, w, d) with secure greatest; used only as a
  // deterministic tie-breaker.
  bool lex_less(const Hyperparams& o) const {
    if (secure != o.secure) return !secure;
    if (secure) return false;
    if (lambda_s != o.lambda_s) return lambda_s < o.lambda_s;
    if (lambda_w != o.lambda_w) return lambda_w < o.lambda_w;
    return lambda_d < o.lambda_d;
  }

  void validate() const {
    if (secure) return;
    if (!(lambda_s >= 0.0) || !(lambda_w >= 0.0) || !(lambda_d >= 0.0) ||
        !std::isfinite(lambda_s) || !std::isfinite(lambda_w) ||
        !std::isfinite(lambda_d))
      throw ConfigError("hyperparameters must be finite and non-negative");
  }
};

// Channel model used by either the physical link or the digital twin.
struct ChannelModelSpec {
  int n_paths = 4;
  bool rician = false;   // false: Rayleigh
  double k_db = 0.0;     // Rice factor in dB, used when rician

  void validate() const {
    if (n_paths < 1) throw ConfigError("channel n_paths must be >= 1");
  }
};

struct SimConfig {
  // Timing (in sensing time steps unless noted).
  int L_max = 60;       // sensor observation window
  int L_sig = 40;       // duration of the signal of interest
  int L_w = 2;          // wake-up signal length
  int L_d = 3;          // delay between WUS end and pilot start
  int L_p = 2;          // pilot length
  int L_b = 8;          // chips per time step (bandwidth expansion)
  int delta_wake = 2;   // main-radio turn-on latency

  // Radio front end.
  int N_T = 10;         // transmit antennas (= encoder readout neurons)
  int N_R = 2;          // receive antennas
  int N_P = 4;          // physical-channel path count
  double snr_db = 10.0;
  double P_on = 1.0;    // main-radio energy per active time step

  // Task and calibration targets.
  int C = 4;            // classes (desk scale; the source study used 10)
  int D = 16;           // sensed sample dimension
  double gamma = 10.0;  // set-size weight in the design objective
  double alpha = 0.2;   // target expected miscoverage
  double delta = 0.05;  // allowed probability of exceeding alpha

  // Synthetic source shape.
  double class_sep = 3.0;           // norm of the per-class mean vector
  double signal_noise_scale = 1.0;  // stddev of per-column signal noise

  std::uint64_t seed = 1;

  void validate() const {
    if (L_max < 1 || L_sig < 1 || L_w < 1 || L_d < 0 || L_p < 0 || L_b < 1)
      throw ConfigError("window lengths must be positive");
    if (L_sig > L_max) throw ConfigError("L_sig must not exceed L_max");
    if (delta_wake < 0 || delta_wake > L_d)
      throw ConfigError("delta_wake must lie in [0, L_d]");
    if (L_w + L_d + L_p >= L_max)
      throw ConfigError("L_w + L_d + L_p must be < L_max");
    if (N_T < 1 || N_R < 1 || N_P < 1) throw ConfigError("antenna/path counts must be >= 1");
    if (N_P > L_d * L_b)
      throw ConfigError("channel spread N_P must not exceed the guard delay L_d*L_b");
    if (C < 2) throw ConfigError("need at least 2 classes");
    if (D < C) throw ConfigError("D must be >= C for orthogonal class means");
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("alpha must be in (0,1)");
    if (!(delta > 0.0 && delta < 1.0)) throw ConfigError("delta must be in (0,1)");
    if (gamma < 0.0) throw ConfigError("gamma must be >= 0");
    if (P_on < 0.0) throw ConfigError("P_on must be >= 0");
    if (signal_noise_scale < 0.0) throw ConfigError("signal_noise_scale must be >= 0");
  }
};

// Calibration grid: one candidate per element of the cartesian product.
struct HyperGrid {
  std::vector<double> values_s;
  std::vector<double> values_w;
  std::vector<double> values_d;

  std::size_t count() const {
    return values_s.size() * values_w.size() * values_d.size();
  }

  std::vector<Hyperparams> enumerate() const {
    std::vector<Hyperparams> all;
    all.reserve(count());
    for (double s : values_s)
      for (double w : values_w)
        for (double d : values_d) all.push_back(Hyperparams::make(s, w, d));
    return all;
  }

  void validate() const {
    auto check = [](const std::vector<double>& v, const char* name) {
      if (v.empty()) throw ConfigError(std::string(name) + " must be non-empty");
      for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (!(v[i] < v[i + 1]))
          throw ConfigError(std::string(name) + " must be strictly increasing");
      for (double x : v)
        if (!(x >= 0.0) || !std::isfinite(x))
          throw ConfigError(std::string(name) + " must be finite and >= 0");
    };
    check(values_s, "grid values_s");
    check(values_w, "grid values_w");
    check(values_d, "grid values_d");
  }
};

// Experimental configuration from the source study, desk-scale task sizes.
SimConfig default_paper_config();

// Threshold grid from the source study: 5 x 6 x 5 = 150 candidates.
HyperGrid default_paper_grid();

// key = value configuration file with [sim] and [grid] sections, one key per
// SimConfig / HyperGrid field. Unknown keys are rejected. After the file is
// read, WUSIM_SIM_* / WUSIM_GRID_* environment variables override.
void load_config_file(const std::string& path, SimConfig& sim, HyperGrid& grid);
void apply_env_overrides(SimConfig& sim, HyperGrid& grid);
void save_config_file(const std::string& path, const SimConfig& sim,
                      const HyperGrid& grid);

}  // namespace wusim
