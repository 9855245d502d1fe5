#pragma once

#include <functional>

namespace imbandit {

// Elimination threshold for phase m: 2^(1-m).
double delta_tilde(int m);

// Per-arm cumulative sample target for phase m when the impairment support
// bound d_max is known: ceil(4 ln T / dt^2) + m * d_max.
long long nm_known_support(int m, double delta_tilde_m, double horizon,
                           int d_max);

// z term shared by the known-expectation schedule and w_m.
double schedule_z(int m, double horizon, double expected_d);

// Smallest n satisfying (dt/2) n - sqrt(n ln T) - (2/3) ln T - z >= 0; exact
// ceiling of the closed-form root, not the looser reporting bound below.
long long nm_known_expectation(int m, double delta_tilde_m, double horizon,
                               double expected_d);

// Looser closed-form upper bound on nm_known_expectation, kept for bound
// reporting: 1 + 4 lnT/dt^2 + 16 lnT/(3 dt) + 8 sqrt(m E[d] lnT)/dt.
double nm_known_expectation_upper(int m, double delta_tilde_m, double horizon,
                                  double expected_d);

// Estimation-error radius achieved after n_m samples:
// sqrt(lnT/n) + 2 lnT/(3n) + z/n.
double compute_wm(long long n_m, int m, double horizon, double expected_d);

// Cumulative schedule as a function of (phase, threshold).
using ScheduleFn = std::function<long long(int m, double delta_tilde_m)>;

ScheduleFn known_support_schedule(double horizon, int d_max);
ScheduleFn known_expectation_schedule(double horizon, double expected_d);

}  // namespace imbandit
