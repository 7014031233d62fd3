#include <doctest.h>

#include <cmath>

#include "pauliseq/gates.hpp"
#include "pauliseq/schedule.hpp"

using namespace pauliseq;

namespace {

PulseSpec default_pulse() {
  PulseSpec p;
  p.gap = 5.0;
  p.gate_time = 10.0;
  return p;
}

}  // namespace

TEST_CASE("theta hits the leg endpoints and midpoint exactly") {
  const PulseSpec p = default_pulse();
  const double t_leg = 10.0 / 2;
  CHECK(leg_theta(p, t_leg, -t_leg / 2) == 0.0);
  CHECK(leg_theta(p, t_leg, t_leg / 2) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-15));
  CHECK(leg_theta(p, t_leg, 0.0) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-15));
}

TEST_CASE("crossfade keeps the gap constant within a leg") {
  const ControlTrace trace = build_schedule(get_gate("move").sequence, default_pulse());
  for (int k = 0; k < trace.n_samples(); ++k) {
    double sq = 0.0;
    int active = 0;
    for (int s = 0; s < trace.n_stages(); ++s) {
      const double g = trace.strengths[s][k];
      sq += g * g;
      if (g != 0.0) ++active;
    }
    CHECK(std::sqrt(sq) == doctest::Approx(5.0).epsilon(1e-12));
    CHECK(active <= 2);
  }
}

TEST_CASE("at most two consecutive stages are active at any sample") {
  const ControlTrace trace = build_schedule(get_gate("cnot1").sequence, default_pulse());
  for (int k = 0; k < trace.n_samples(); ++k) {
    int first = -1, last = -1;
    for (int s = 0; s < trace.n_stages(); ++s) {
      if (trace.strengths[s][k] != 0.0) {
        if (first < 0) first = s;
        last = s;
      }
    }
    CHECK(last - first <= 1);
  }
}

TEST_CASE("boundary strengths") {
  const ControlTrace trace = build_schedule(get_gate("cnot1").sequence, default_pulse());
  const int n = trace.n_samples();
  CHECK(trace.strengths[0][0] == 5.0);          // stage 1 full at t = 0
  CHECK(trace.strengths[3][n - 1] == 5.0);      // last stage full at t = t_g
  // Interior stages reach the full strength at their leg boundary.
  const int third = (n - 1) / 3;
  CHECK(trace.strengths[1][third] == doctest::Approx(5.0).epsilon(1e-9));
  // Continuity across leg boundaries.
  for (int k : {third, 2 * third}) {
    for (int s = 0; s < 4; ++s) {
      const double jump = std::abs(trace.strengths[s][k + 1] - trace.strengths[s][k]);
      CHECK(jump < 5.0 * 5.0 / n);
    }
  }
}

TEST_CASE("theta is monotone along each leg") {
  for (PulseShape shape : {PulseShape::RosenZener, PulseShape::Erf}) {
    PulseSpec p = default_pulse();
    p.shape = shape;
    const double t_leg = p.gate_time / 2;
    double prev = -1.0;
    for (int k = 0; k <= 500; ++k) {
      const double s = -t_leg / 2 + t_leg * k / 500.0;
      const double th = leg_theta(p, t_leg, s);
      CHECK(th >= prev);
      prev = th;
    }
  }
}

TEST_CASE("dimensionless rescaling invariance") {
  PulseSpec a = default_pulse();
  PulseSpec b = default_pulse();
  b.gate_time = 7.0 * a.gate_time;
  b.gap = a.gap / 7.0;
  const ControlTrace ta = build_schedule(3, a);
  const ControlTrace tb = build_schedule(3, b);
  for (int k = 0; k < ta.n_samples(); k += 97) {
    for (int s = 0; s < 3; ++s) {
      const double pa = ta.strengths[s][k] * a.gate_time;
      const double pb = tb.strengths[s][k] * b.gate_time;
      CHECK(pa == doctest::Approx(pb).epsilon(1e-12));
    }
  }
}

TEST_CASE("leg too short is rejected") {
  PulseSpec p = default_pulse();
  p.rz_ratio = 0.3;  // tau = 3 > t_leg/2 = 1.67 for a 4-stage gate
  CHECK_THROWS_AS(build_schedule(4, p), std::invalid_argument);
}

TEST_CASE("pulse spec validation") {
  PulseSpec p = default_pulse();
  p.samples = 100;
  CHECK_THROWS_AS(p.check(), std::invalid_argument);
  p = default_pulse();
  p.rz_ratio = 0.7;
  CHECK_THROWS_AS(p.check(), std::invalid_argument);
}

TEST_CASE("dtheta_max scaling and peak position") {
  PulseSpec p = default_pulse();
  const double base = dtheta_max(p);
  PulseSpec fast = p;
  fast.gate_time = p.gate_time / 2;
  CHECK(dtheta_max(fast) == doctest::Approx(2.0 * base).epsilon(1e-6));

  // Peak sits at the leg centre: theta' there exceeds theta' anywhere else.
  const double t_leg = p.gate_time / 2;
  const double h = t_leg / 4096;
  const double centre =
      (leg_theta(p, t_leg, h) - leg_theta(p, t_leg, -h)) / (2 * h);
  CHECK(base == doctest::Approx(centre).epsilon(1e-3));
}

TEST_CASE("wide erf pulses emit a truncation warning") {
  PulseSpec wide = default_pulse();
  wide.shape = PulseShape::Erf;
  wide.erf_width = 2.5;  // t_leg = 5 for a 3-stage gate: heavy clipping
  const ControlTrace noisy_trace = build_schedule(3, wide);
  CHECK_FALSE(noisy_trace.warnings.empty());

  const ControlTrace rz_trace = build_schedule(3, default_pulse());
  CHECK(rz_trace.warnings.empty());

  PulseSpec erf_default = default_pulse();
  erf_default.shape = PulseShape::Erf;
  CHECK(build_schedule(3, erf_default).warnings.empty());
}

TEST_CASE("trace CSV round-trips the column count") {
  PulseSpec p = default_pulse();
  p.samples = 256;
  const ControlTrace trace = build_schedule(3, p);
  const std::string csv = trace.to_csv();
  CHECK(csv.rfind("t,g_1,g_2,g_3\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 257);
}

TEST_CASE("refinement halves the step and keeps endpoints") {
  PulseSpec p = default_pulse();
  p.samples = 256;
  const ControlTrace trace = build_schedule(3, p);
  const ControlTrace fine = trace.refined();
  CHECK(fine.n_samples() == 2 * 256 - 1);
  CHECK(fine.grid.front() == trace.grid.front());
  CHECK(fine.grid.back() == trace.grid.back());
  CHECK(fine.strengths[0][2] == trace.strengths[0][1]);
}
