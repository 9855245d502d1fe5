#pragma once

#include "imbandit/instance.hpp"

namespace imbandit {

// Closed-form regret upper bounds. Gaps come from the true instance means
// (these are instance-dependent guarantees, not data-dependent estimates);
// every log is natural. The arm sets are
//   K'  = { i : gap_i > lambda }   and   K'' = { i : gap_i > 0 }.

// Bucketed phase algorithm:
//   sum_{K'} 4 gap/T
// + sum_{K'} ( gap + 16 lnT/gap * min{1/(1-eps)^2, 4} + 2 gap ln(4/gap) d_max )
// + sum_{K''} 16/T + max_{K'', gap < lambda} gap * T.
double phased_se_bound(const BanditInstance& instance, double horizon,
                      double lambda, int d_max);

// Unbucketed variant of the above: the 16 lnT/gap coefficient saturates to 64
// and the first tail carries 2 gap/T.
double ucbr_bound(const BanditInstance& instance, double horizon,
                    double lambda, int d_max);

// Consecutive-block algorithm with known expected impairment:
//   sum_{K'} ( gap + 64 lnT/gap + 64 lnT/3 + 32 sqrt(ln(4/gap) E[d] lnT) )
// + sum_{K'} 2 gap/T + sum_{K''} 32/T + max_{K'', gap < lambda} gap * T.
double ucbr_plus_bound(const BanditInstance& instance, double horizon,
                      double lambda, double expected_d);

// Reference lambda for the instance-independent bounds: sqrt(K lnT / T).
double reference_lambda(int num_arms, double horizon);

struct OrderScaleBounds {
  double support_known = 0.0;      // sqrt(KT lnT) + sqrt(K^3 ln^3 T / T) d_max
  double expectation_known = 0.0;  // sqrt(KT lnT) + K sqrt(ln^2 T E[d])
};

// Order-scale values with unit leading constants; used for plots and sanity
// overlays, never as exact guarantees. Throws when horizon <= num_arms.
OrderScaleBounds order_scale_bounds(int num_arms, double horizon, int d_max,
                                 double expected_d);

}  // namespace imbandit
