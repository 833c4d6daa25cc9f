#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "galton/traversal.hpp"

namespace galton {

// Target density of states for the m_s=+1 manifold.
struct DosSpec {
  enum class Kind { gaussian, explicit_levels };
  Kind kind = Kind::gaussian;
  double mean = 0.0;   // MHz
  double sigma = 1.0;  // MHz (gaussian)
  std::optional<std::vector<double>> levels;  // explicit, sorted ascending

  // Width given as full width at half maximum.
  static DosSpec gaussian_fwhm(double mean, double fwhm);
  static DosSpec gaussian_sigma(double mean, double sigma);
  static DosSpec from_levels(std::vector<double> levels);
  // Normalized density at x (gaussian: analytic; explicit: kernel estimate).
  double density(double x) const;
  void validate() const;
};

struct DosBoardOptions {
  // m_s=0 level spread relative to the DOS width.  Kept tiny so window
  // membership is governed by the columns alone (the board tilt plays no
  // role in the column-wise evaluation).
  double tilt_scale = 1e-3;
  double p_exp = 1.1;
  // When set, levels are drawn from the distribution instead of placed at
  // quantiles (robustness studies).
  std::optional<std::uint64_t> sample_seed;
};

// Board whose 2^N column energies E_k^(1)(0) sit at the quantiles
// (i+0.5)/2^N of the DOS; rows follow the power-law model, scaled small.
Checkerboard place_levels_by_dos(int n_nuclei, const DosSpec& dos,
                                 const DosBoardOptions& opts = {});

struct SpectralProfile {
  std::vector<double> centers;  // f0 values, strictly increasing
  std::vector<double> polarization_fwd;
  std::vector<double> polarization_rev;
  double bandwidth = 0.0;
  double max_conservation_error = 0.0;
};

struct ScanDirections {
  bool forward = true;
  bool reverse = false;
};

// One windowed sweep + laser reset per center from a fresh mixed state;
// centers are processed independently (optionally on several threads) and
// recorded in center order.
SpectralProfile scan_profile(const Checkerboard& board, const TunnelingTable& table,
                             double bandwidth, const std::vector<double>& centers,
                             const ScanDirections& directions = {}, int threads = 1);

// Pearson correlation between the polarization magnitude profile
// (|forward| + |reverse|, whichever directions were scanned) and the DOS
// density sampled at the window centers.
double correlation_with_dos(const SpectralProfile& profile, const DosSpec& dos);

// Full width at half maximum of the |P| profile (linear interpolation across
// the half-maximum crossings).
double profile_fwhm(const std::vector<double>& centers,
                    const std::vector<double>& values);

}  // namespace galton
