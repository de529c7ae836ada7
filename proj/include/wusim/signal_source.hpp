#pragma once

// Synthetic labeled sources and the Gaussian models driving change detection.
//
// Each example is a D x L_max matrix: standard-normal noise everywhere except
// a window of L_sig columns starting at a uniformly drawn onset, where the
// class mean vector (plus per-column noise) is presented repeatedly.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wusim/config.hpp"
#include "wusim/matrix.hpp"
#include "wusim/rng.hpp"

namespace wusim {

struct LabeledExample {
  Matrix u;        // D x L_max sensed samples
  int label = 0;   // class in [0, C)
  int l_start = 1; // onset time step, 1-based, in [1, L_max - L_sig]
};

struct GaussianModel {
  std::vector<double> mu;      // D
  Matrix sigma;                // D x D covariance (regularized SPD)
  // Cached factorization for density evaluation; filled by finalize().
  Matrix chol;                 // lower-triangular L with sigma = L L^T
  double log_norm = 0.0;       // -(D/2) log(2 pi) - (1/2) log det sigma

  void finalize();             // computes chol and log_norm; throws on non-SPD
  double log_pdf(const double* x) const;
};

GaussianModel standard_normal_model(int dim);

enum class SplitTag { train, DT, PT, test };
const char* split_name(SplitTag t);
SplitTag split_from_name(const std::string& s);

struct Dataset {
  std::vector<LabeledExample> examples;
  SplitTag tag = SplitTag::train;
};

// Mean vector of class c: class_sep * e_c (orthogonal class arrangement).
std::vector<double> class_mean(int cls, const SimConfig& cfg);

// One example of the given class; onset, signal noise and ambient noise all
// drawn from `stream`.
LabeledExample generate_example(int cls, const SimConfig& cfg, RngStream& stream);

// count i.i.d. examples with uniform labels; example k uses the substream
// (cfg.seed, "data-<split>", index_offset + k), so splits and repetitions
// stay disjoint by construction.
Dataset generate_dataset(std::size_t count, SplitTag tag, const SimConfig& cfg,
                         std::uint64_t index_offset = 0);

// Pooled signal model over all signal-region columns (single model shared by
// every class) and the fixed standard-normal noise model.
std::pair<GaussianModel, GaussianModel> fit_gaussian(const Dataset& data,
                                                     const SimConfig& cfg);

// log f_s(u_l) - log f_n(u_l).
double log_likelihood_ratio(const double* u_col, const GaussianModel& signal,
                            const GaussianModel& noise);

// Flat binary container (little-endian doubles) + JSON sidecar with labels,
// onsets and the split tag. `path` is the binary file; sidecar is path+".json".
void save_dataset(const std::string& path, const Dataset& data);
Dataset load_dataset(const std::string& path);
void export_dataset_csv(const std::string& path, const Dataset& data);

// Import hook for externally produced raw matrices (no labels/onsets file
// needed): reads the same binary layout and assigns the given labels/onsets.
Dataset import_raw_matrix(const std::string& path, std::vector<int> labels,
                          std::vector<int> onsets, SplitTag tag);

}  // namespace wusim
