#include "imbandit/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace imbandit {

namespace {

void check_lambda(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("lambda must lie in (0, 1)");
}

double small_gap_tail(const std::vector<double>& g, double lambda, double T) {
  double worst = 0.0;
  for (double gap : g)
    if (gap > 0.0 && gap < lambda && gap > worst) worst = gap;
  return worst * T;
}

}  // namespace

double phased_se_bound(const BanditInstance& instance, double horizon,
                      double lambda, int d_max) {
  check_lambda(lambda);
  const double T = horizon;
  const double lnT = std::log(T);
  const double eps = epsilon(instance);
  const double coef = eps >= 0.5 ? 4.0 : 1.0 / ((1.0 - eps) * (1.0 - eps));
  const GapInfo info = gaps(instance);
  double total = 0.0;
  for (double gap : info.gaps) {
    if (gap > lambda) {
      total += 4.0 * gap / T;
      total += gap + 16.0 * lnT / gap * coef +
               2.0 * gap * std::log(4.0 / gap) * d_max;
    }
    if (gap > 0.0) total += 16.0 / T;
  }
  return total + small_gap_tail(info.gaps, lambda, T);
}

double ucbr_bound(const BanditInstance& instance, double horizon,
                    double lambda, int d_max) {
  check_lambda(lambda);
  const double T = horizon;
  const double lnT = std::log(T);
  const GapInfo info = gaps(instance);
  double total = 0.0;
  for (double gap : info.gaps) {
    if (gap > lambda) {
      total += 2.0 * gap / T;
      total += gap + 64.0 * lnT / gap + 2.0 * gap * std::log(4.0 / gap) * d_max;
    }
    if (gap > 0.0) total += 16.0 / T;
  }
  return total + small_gap_tail(info.gaps, lambda, T);
}

double ucbr_plus_bound(const BanditInstance& instance, double horizon,
                      double lambda, double expected_d) {
  check_lambda(lambda);
  const double T = horizon;
  const double lnT = std::log(T);
  const GapInfo info = gaps(instance);
  double total = 0.0;
  for (double gap : info.gaps) {
    if (gap > lambda) {
      total += 2.0 * gap / T;
      total += gap + 64.0 * lnT / gap + 64.0 * lnT / 3.0 +
               32.0 * std::sqrt(std::log(4.0 / gap) * expected_d * lnT);
    }
    if (gap > 0.0) total += 32.0 / T;
  }
  return total + small_gap_tail(info.gaps, lambda, T);
}

double reference_lambda(int num_arms, double horizon) {
  return std::sqrt(num_arms * std::log(horizon) / horizon);
}

OrderScaleBounds order_scale_bounds(int num_arms, double horizon, int d_max,
                                 double expected_d) {
  if (!(horizon > num_arms))
    throw std::invalid_argument("order-scale bounds need horizon > num_arms");
  const double K = num_arms;
  const double T = horizon;
  const double lnT = std::log(T);
  OrderScaleBounds out;
  const double leading = std::sqrt(K * T * lnT);
  out.support_known = leading + std::sqrt(K * K * K * lnT * lnT * lnT / T) * d_max;
  out.expectation_known = leading + K * std::sqrt(lnT * lnT * expected_d);
  return out;
}

}  // namespace imbandit
