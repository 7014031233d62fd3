#include "pauliseq/noise.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

namespace pauliseq {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

NoiseMode parse_noise_mode(const std::string& s) {
  if (s == "none") return NoiseMode::None;
  if (s == "dc") return NoiseMode::Dc;
  if (s == "filtered") return NoiseMode::Filtered;
  throw std::invalid_argument("unknown noise mode '" + s + "'");
}

std::string noise_mode_name(NoiseMode m) {
  switch (m) {
    case NoiseMode::None: return "none";
    case NoiseMode::Dc: return "dc";
    case NoiseMode::Filtered: return "filtered";
  }
  return "?";
}

void NoiseSpec::check() const {
  if (sigma_f < 0) throw std::invalid_argument("noise.sigma must be nonnegative");
  if (mode == NoiseMode::Filtered && bandwidth <= 0) {
    throw std::invalid_argument("noise.bandwidth must be positive in filtered mode");
  }
}

double GaussianStream::uniform() {
  // 53-bit mantissa, offset by half an ulp so 0 and 1 are excluded.
  return (static_cast<double>(splitmix64(state_) >> 11) + 0.5) * 0x1.0p-53;
}

double GaussianStream::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t run_index,
                             std::uint64_t line_index) {
  std::uint64_t x = seed;
  x ^= 0x9E3779B97F4A7C15ULL * (run_index + 1);
  (void)splitmix64(x);
  x ^= 0xBF58476D1CE4E5B9ULL * (line_index + 1);
  (void)splitmix64(x);
  return x;
}

double butterworth4_magnitude(double freq, double bandwidth) {
  const double x = freq / bandwidth;
  const double x4 = x * x * x * x;
  return 1.0 / std::sqrt(1.0 + x4 * x4);
}

std::vector<std::vector<double>> generate_multipliers(const NoiseSpec& spec,
                                                      const std::vector<double>& grid,
                                                      int n_lines, std::uint64_t run_index) {
  spec.check();
  const int n = static_cast<int>(grid.size());
  if (n < 256) throw std::invalid_argument("noise grid needs at least 256 samples");
  std::vector<std::vector<double>> m(n_lines, std::vector<double>(n, 1.0));
  if (spec.mode == NoiseMode::None || spec.sigma_f == 0.0) return m;

  if (spec.mode == NoiseMode::Dc) {
    for (int line = 0; line < n_lines; ++line) {
      const std::uint64_t line_key = spec.per_line_independent ? line : 0;
      GaussianStream rng(substream_seed(spec.seed, run_index, line_key));
      const double delta = spec.sigma_f * rng.normal();
      for (double& v : m[line]) v = 1.0 + delta;
    }
    return m;
  }

  // Filtered: white Gaussian samples shaped by the zero-phase Butterworth
  // magnitude in the Fourier domain. Dividing by the RMS filter gain keeps
  // the stationary per-sample deviation at sigma_f for every bandwidth
  // (shot-to-shot power fluctuations survive; only the filter's mean
  // attenuation is compensated).
  const double dt = grid[1] - grid[0];
  const double df = 1.0 / (n * dt);
  std::vector<double> mag(n);
  double power = 0.0;
  for (int j = 0; j < n; ++j) {
    const double f = df * (j <= n / 2 ? j : n - j);
    mag[j] = butterworth4_magnitude(f, spec.bandwidth);
    power += mag[j] * mag[j];
  }
  const double rms_gain = std::sqrt(power / n);

  Eigen::FFT<double> fft;
  for (int line = 0; line < n_lines; ++line) {
    const std::uint64_t line_key = spec.per_line_independent ? line : 0;
    GaussianStream rng(substream_seed(spec.seed, run_index, line_key));
    std::vector<std::complex<double>> x(n), freq_domain(n);
    for (int k = 0; k < n; ++k) x[k] = rng.normal();
    fft.fwd(freq_domain, x);
    for (int j = 0; j < n; ++j) freq_domain[j] *= mag[j];
    fft.inv(x, freq_domain);
    auto& line_m = m[line];
    for (int k = 0; k < n; ++k) {
      line_m[k] = 1.0 + spec.sigma_f * x[k].real() / rms_gain;
    }
  }
  return m;
}

ControlTrace apply_noise(const ControlTrace& trace,
                         const std::vector<std::vector<double>>& multipliers) {
  if (static_cast<int>(multipliers.size()) != trace.n_stages()) {
    throw std::invalid_argument("noise multipliers: line count != stage count");
  }
  ControlTrace noisy = trace;
  for (int s = 0; s < trace.n_stages(); ++s) {
    if (static_cast<int>(multipliers[s].size()) != trace.n_samples()) {
      throw std::invalid_argument("noise multipliers: sample count mismatch");
    }
    for (int k = 0; k < trace.n_samples(); ++k) {
      noisy.strengths[s][k] = trace.strengths[s][k] * multipliers[s][k];
    }
  }
  return noisy;
}

}  // namespace pauliseq
