#include "imbandit/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace imbandit {

namespace {

void check_inputs(int m, double dt, double horizon) {
  if (m < 1) throw std::invalid_argument("phase index must be >= 1");
  if (!(dt > 0.0 && dt <= 1.0))
    throw std::invalid_argument("delta_tilde must lie in (0, 1]");
  if (!(horizon >= 2.0)) throw std::invalid_argument("horizon must be >= 2");
}

}  // namespace

double delta_tilde(int m) { return std::ldexp(1.0, 1 - m); }

long long nm_known_support(int m, double delta_tilde_m, double horizon,
                           int d_max) {
  check_inputs(m, delta_tilde_m, horizon);
  if (d_max < 0) throw std::invalid_argument("d_max must be >= 0");
  const double lnT = std::log(horizon);
  return static_cast<long long>(
             std::ceil(4.0 * lnT / (delta_tilde_m * delta_tilde_m))) +
         static_cast<long long>(m) * d_max;
}

double schedule_z(int m, double horizon, double expected_d) {
  const double lnT = std::log(horizon);
  return std::sqrt(4.0 * lnT * lnT / 9.0 + 4.0 * m * expected_d * lnT);
}

long long nm_known_expectation(int m, double delta_tilde_m, double horizon,
                               double expected_d) {
  check_inputs(m, delta_tilde_m, horizon);
  if (expected_d < 0.0) throw std::invalid_argument("expected_d must be >= 0");
  const double lnT = std::log(horizon);
  const double z = schedule_z(m, horizon, expected_d);
  const double dt = delta_tilde_m;
  const double inner =
      std::sqrt(lnT) + std::sqrt(lnT + 4.0 * dt * lnT / 3.0 + 2.0 * dt * z);
  return static_cast<long long>(std::ceil(inner * inner / (dt * dt)));
}

double nm_known_expectation_upper(int m, double delta_tilde_m, double horizon,
                                  double expected_d) {
  check_inputs(m, delta_tilde_m, horizon);
  const double lnT = std::log(horizon);
  const double dt = delta_tilde_m;
  return 1.0 + 4.0 * lnT / (dt * dt) + 16.0 * lnT / (3.0 * dt) +
         8.0 * std::sqrt(m * expected_d * lnT) / dt;
}

double compute_wm(long long n_m, int m, double horizon, double expected_d) {
  if (n_m < 1) throw std::invalid_argument("n_m must be >= 1");
  const double lnT = std::log(horizon);
  const double n = static_cast<double>(n_m);
  return std::sqrt(lnT / n) + 2.0 * lnT / (3.0 * n) +
         schedule_z(m, horizon, expected_d) / n;
}

ScheduleFn known_support_schedule(double horizon, int d_max) {
  return [horizon, d_max](int m, double dt) {
    return nm_known_support(m, dt, horizon, d_max);
  };
}

ScheduleFn known_expectation_schedule(double horizon, double expected_d) {
  return [horizon, expected_d](int m, double dt) {
    return nm_known_expectation(m, dt, horizon, expected_d);
  };
}

}  // namespace imbandit
