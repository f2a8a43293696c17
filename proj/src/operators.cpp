#include "cagen/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cagen {

double mantegna_sigma_u(double beta) {
  const double num = std::tgamma(1.0 + beta) * std::sin(Rng::kPi * beta / 2.0);
  const double den = std::tgamma((1.0 + beta) / 2.0) * beta *
                     std::pow(2.0, (beta - 1.0) / 2.0);
  return std::pow(std::abs(num / den), 1.0 / beta);
}

ScheduleParams ScheduleParams::make(double magnitude, int max_iterations,
                                    double levy_beta) {
  if (magnitude <= 0.0) throw std::invalid_argument("magnitude must be > 0");
  if (max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
  if (!(levy_beta > 1.0 && levy_beta <= 2.0)) {
    throw std::invalid_argument("levy_beta must lie in (1, 2]");
  }
  ScheduleParams p;
  p.magnitude = magnitude;
  p.max_iterations = max_iterations;
  p.levy_beta = levy_beta;
  p.sigma_u = mantegna_sigma_u(levy_beta);
  p.sigma_v = 1.0;
  return p;
}

double radius(int iteration, const ScheduleParams& sched) {
  if (iteration < 0 || iteration > sched.max_iterations) {
    throw std::logic_error("radius iteration " + std::to_string(iteration) +
                           " outside [0, " +
                           std::to_string(sched.max_iterations) + "]");
  }
  return sched.magnitude *
         (1.0 - static_cast<double>(iteration) /
                    static_cast<double>(sched.max_iterations));
}

int clamp_absorbing(double value, int cardinality) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("clamp_absorbing got a non-finite value");
  }
  if (cardinality < 2) {
    throw std::invalid_argument("cardinality must be >= 2");
  }
  // std::round rounds halfway cases away from zero. fmod keeps the wrap
  // exact even for magnitudes past the integer range.
  const double rounded = std::round(value);
  double m = std::fmod(rounded, static_cast<double>(cardinality));
  if (m < 0.0) m += static_cast<double>(cardinality);
  return static_cast<int>(m);
}

double sine_step(double x, double best, double radius, double phase,
                 double pull) {
  return x + radius * std::sin(phase) * std::abs(pull * best - x);
}

double cosine_step(double x, double best, double radius, double phase,
                   double pull) {
  return x + radius * std::cos(phase) * std::abs(pull * best - x);
}

namespace {

template <typename Kernel>
TestCase trig_update(const TestCase& x, const TestCase& best, double radius,
                     Rng& rng, const CAConfig& cfg, Kernel kernel) {
  TestCase out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double phase = rng.uniform(0.0, 2.0 * Rng::kPi);
    const double pull = rng.uniform(0.0, 2.0);
    out[i] = clamp_absorbing(kernel(x[i], best[i], radius, phase, pull),
                             cfg.cardinalities[i]);
  }
  return out;
}

}  // namespace

TestCase sine_update(const TestCase& x, const TestCase& best, double radius,
                     Rng& rng, const CAConfig& cfg) {
  return trig_update(x, best, radius, rng, cfg, sine_step);
}

TestCase cosine_update(const TestCase& x, const TestCase& best, double radius,
                       Rng& rng, const CAConfig& cfg) {
  return trig_update(x, best, radius, rng, cfg, cosine_step);
}

double levy_step_value(double u, double v, double beta) {
  return u / std::pow(std::abs(v), 1.0 / beta);
}

double levy_step(Rng& rng, const ScheduleParams& sched) {
  const double u = rng.normal(0.0, sched.sigma_u);
  double v = rng.normal(0.0, sched.sigma_v);
  while (v == 0.0) v = rng.normal(0.0, sched.sigma_v);
  return levy_step_value(u, v, sched.levy_beta);
}

TestCase levy_update(const TestCase& x, Rng& rng, const ScheduleParams& sched,
                     const CAConfig& cfg) {
  TestCase out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = clamp_absorbing(x[i] + levy_step(rng, sched),
                             cfg.cardinalities[i]);
  }
  return out;
}

TestCase crossover_update(const TestCase& xi, const TestCase& xj, Rng& rng) {
  if (xi.size() != xj.size()) {
    throw std::invalid_argument("crossover parents have different lengths");
  }
  const int cut = rng.uniform_int(0, static_cast<int>(xi.size()));
  TestCase out(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) {
    out[i] = static_cast<int>(i) < cut ? xj[i] : xi[i];
  }
  return out;
}

}  // namespace cagen
