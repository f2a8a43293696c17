#pragma once

#include <array>

#include "cagen/model.hpp"
#include "cagen/rng.hpp"

namespace cagen {

// The four position-update operators. The integer encoding doubles as the
// Q-table index, so it must stay stable.
enum class OperatorKind : int { Sine = 0, Cosine = 1, LevyFlight = 2, Crossover = 3 };

inline constexpr int kOperatorCount = 4;
inline constexpr std::array<const char*, 4> kOperatorNames{
    "sine", "cosine", "levy", "crossover"};

// Constants shared by the update operators for one run.
struct ScheduleParams {
  double magnitude = 3.0;   // peak search radius
  int max_iterations = 100;
  double levy_beta = 1.5;   // heavy-tail exponent, in (1, 2]
  double sigma_u = 0.0;     // Mantegna scale of the step numerator
  double sigma_v = 1.0;

  // Computes sigma_u from levy_beta and validates every field.
  static ScheduleParams make(double magnitude, int max_iterations,
                             double levy_beta = 1.5);
};

// Mantegna scale factor for the heavy-tailed step numerator:
//   | Gamma(1+b) sin(pi b / 2) / (Gamma((1+b)/2) b 2^((b-1)/2)) | ^ (1/b)
double mantegna_sigma_u(double beta);

// Linearly shrinking search radius magnitude * (1 - t/T). Requires
// 0 <= iteration <= max_iterations.
double radius(int iteration, const ScheduleParams& sched);

// Round half away from zero, then wrap into [0, cardinality-1] by Euclidean
// modulo (absorbing wall). Throws on non-finite input.
int clamp_absorbing(double value, int cardinality);

// Scalar kernels behind the vector updates, exposed for direct testing.
// phase spans a full period [0, 2*pi); pull weights the attractor in [0, 2].
double sine_step(double x, double best, double radius, double phase, double pull);
double cosine_step(double x, double best, double radius, double phase, double pull);

// Per dimension: draw phase and pull, displace by
// radius * sin/cos(phase) * |pull*best_i - x_i|, round, wrap.
TestCase sine_update(const TestCase& x, const TestCase& best, double radius,
                     Rng& rng, const CAConfig& cfg);
TestCase cosine_update(const TestCase& x, const TestCase& best, double radius,
                       Rng& rng, const CAConfig& cfg);

// The step kernel u / |v|^(1/beta); v must be nonzero.
double levy_step_value(double u, double v, double beta);

// One heavy-tailed step with u ~ N(0, sigma_u^2) and v ~ N(0, sigma_v^2);
// v == 0 is redrawn. Unbounded by design.
double levy_step(Rng& rng, const ScheduleParams& sched);

// Adds an independent heavy-tailed step per dimension, then rounds and wraps.
TestCase levy_update(const TestCase& x, Rng& rng, const ScheduleParams& sched,
                     const CAConfig& cfg);

// Single-cut crossover: cut drawn uniformly over [0, k]; positions [0, cut)
// come from xj, the rest from xi.
TestCase crossover_update(const TestCase& xi, const TestCase& xj, Rng& rng);

}  // namespace cagen
