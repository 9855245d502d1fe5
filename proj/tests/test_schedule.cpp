#include <doctest.h>

#include <cmath>

#include "imbandit/schedule.hpp"

using namespace imbandit;

namespace {

// Left side of the quadratic requirement the known-expectation schedule must
// satisfy at n and violate at n-1.
double quad(long long n, double dt, double horizon, double z) {
  const double lnT = std::log(horizon);
  return dt / 2.0 * static_cast<double>(n) -
         std::sqrt(static_cast<double>(n) * lnT) - 2.0 * lnT / 3.0 - z;
}

}  // namespace

TEST_CASE("delta_tilde halves from one") {
  CHECK(delta_tilde(1) == 1.0);
  CHECK(delta_tilde(2) == 0.5);
  CHECK(delta_tilde(11) == doctest::Approx(std::pow(2.0, -10)));
}

TEST_CASE("known-support schedule: frozen values") {
  CHECK(nm_known_support(1, 1.0, 5000, 3) == 38);    // ceil(4 ln 5000) + 3
  CHECK(nm_known_support(2, 0.5, 5000, 3) == 143);   // ceil(136.27...) + 6
  CHECK(nm_known_support(1, 1.0, 5000, 0) == 35);    // no impairment term
  CHECK(nm_known_support(2, 0.5, 5000, 0) == 137);
}

TEST_CASE("known-expectation schedule: frozen values and the quadratic") {
  CHECK(nm_known_expectation(1, 1.0, 10000, 2.0) == 92);
  const double z = schedule_z(1, 10000, 2.0);
  CHECK(z == doctest::Approx(10.553914417845704));
  CHECK(quad(92, 1.0, 10000, z) >= 0.0);
  CHECK(quad(91, 1.0, 10000, z) < 0.0);

  // Hand-evaluated point at ln T = 1: z = 2/3, n = ceil((1 + sqrt(11/3))^2).
  const double e = std::exp(1.0);
  CHECK(schedule_z(1, e, 0.0) == doctest::Approx(2.0 / 3.0));
  CHECK(nm_known_expectation(1, 1.0, e, 0.0) == 9);
}

TEST_CASE("w_m frozen values and limits") {
  CHECK(compute_wm(92, 1, 10000, 2.0) ==
        doctest::Approx(0.49786348671997116));
  CHECK(compute_wm(92, 1, 10000, 2.0) <= 0.5);
  CHECK(compute_wm(1000000000, 1, 10000, 2.0) < 1e-3);
  // With no impairment and huge n the sqrt term dominates.
  const double w = compute_wm(100000000, 1, 10000, 0.0);
  const double lead = std::sqrt(std::log(10000.0) / 1e8);
  CHECK(w / lead < 1.01);
  CHECK(w >= lead);
}

TEST_CASE("known-expectation schedule solves the quadratic exactly on the grid") {
  for (double horizon : {1000.0, 10000.0}) {
    for (double ed : {0.0, 2.0, 6.0, 14.0}) {
      for (int m = 1; m <= 20; ++m) {
        const double dt = delta_tilde(m);
        const long long n = nm_known_expectation(m, dt, horizon, ed);
        const double z = schedule_z(m, horizon, ed);
        CHECK(quad(n, dt, horizon, z) >= 0.0);
        CHECK(quad(n - 1, dt, horizon, z) < 0.0);
        // Dominated by the looser reporting expression.
        CHECK(static_cast<double>(n) <=
              nm_known_expectation_upper(m, dt, horizon, ed));
      }
    }
  }
}

TEST_CASE("schedules increase in m and in the impairment parameter") {
  for (double horizon : {1000.0, 10000.0}) {
    long long prev_s = 0, prev_e = 0;
    for (int m = 1; m <= 20; ++m) {
      const double dt = delta_tilde(m);
      const long long ns = nm_known_support(m, dt, horizon, 3);
      const long long ne = nm_known_expectation(m, dt, horizon, 2.0);
      CHECK(ns > prev_s);
      CHECK(ne > prev_e);
      prev_s = ns;
      prev_e = ne;
      CHECK(nm_known_support(m, dt, horizon, 5) >=
            nm_known_support(m, dt, horizon, 3));
      CHECK(nm_known_expectation(m, dt, horizon, 6.0) >=
            nm_known_expectation(m, dt, horizon, 2.0));
    }
  }
}

TEST_CASE("schedule preconditions") {
  CHECK_THROWS(nm_known_support(0, 1.0, 100, 0));
  CHECK_THROWS(nm_known_support(1, 0.0, 100, 0));
  CHECK_THROWS(nm_known_support(1, 2.0, 100, 0));
  CHECK_THROWS(nm_known_expectation(1, 1.0, 100, -1.0));
  CHECK_THROWS(compute_wm(0, 1, 100, 0.0));
}
