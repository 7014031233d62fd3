#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pauliseq/schedule.hpp"

namespace pauliseq {

enum class NoiseMode { None, Dc, Filtered };

NoiseMode parse_noise_mode(const std::string& s);
std::string noise_mode_name(NoiseMode m);

/// Multiplicative control-noise parameters. sigma_f is the fractional
/// standard deviation; bandwidth is the 4th-order low-pass cutoff in the
/// same frequency units as 1/time (GHz with ns grids).
struct NoiseSpec {
  NoiseMode mode = NoiseMode::None;
  double sigma_f = 0.0;
  double bandwidth = 0.2;
  std::uint64_t seed = 0;
  bool per_line_independent = true;

  void check() const;
};

/// Deterministic splitmix64 stream; the Gaussian draws use Box-Muller so the
/// sequence is a pure function of the seed on any IEEE-754 platform.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : state_(seed) {}
  double uniform();  // in (0, 1)
  double normal();   // standard normal

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t run_index,
                             std::uint64_t line_index);

/// 4th-order Butterworth magnitude response, |H(B)| = 1/sqrt(2).
double butterworth4_magnitude(double freq, double bandwidth);

/// Per-line multiplier arrays m_i[t_k] for one Monte Carlo run.
///
/// none: all 1. dc: 1 + delta_i with one Normal(0, sigma^2) draw per line.
/// filtered: N standard normals filtered in the Fourier domain by the
/// zero-phase Butterworth magnitude, normalized by the deterministic RMS
/// filter gain so the per-sample marginal deviation equals sigma_f for every
/// bandwidth, then scaled and offset to 1 + sigma_f * n(t).
std::vector<std::vector<double>> generate_multipliers(const NoiseSpec& spec,
                                                      const std::vector<double>& grid,
                                                      int n_lines, std::uint64_t run_index);

/// g~_i[t_k] = g_i[t_k] * m_i[t_k]; exact zeros stay exact zeros. Negative
/// strengths are allowed (noise may momentarily reverse a weak field).
ControlTrace apply_noise(const ControlTrace& trace,
                         const std::vector<std::vector<double>>& multipliers);

}  // namespace pauliseq
