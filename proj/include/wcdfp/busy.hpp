#pragma once

#include <vector>

#include "wcdfp/taskset.hpp"

namespace wcdfp {

// Truncated distribution of the synchronous-periodic busy-period length.
// `dist` holds the finalized (stable) mass, all at values <= truncation_point;
// `residual` is the unresolved mass that would have extended past the
// truncating release, counted into every tail query for safety.
struct BusyPeriodDist {
  DiscreteDist dist;
  Prob residual = 0.0;
  Time truncation_point = 0;
  bool horizon_exhausted = false;  // cap hit while residual was still >= epsilon
};

// Release times of higher-priority jobs under the synchronous-periodic
// pattern: multiples m*T_j <= horizon for each j < k, merged ascending, ties
// by task index. The time-0 jobs (including the analyzed one) seed the
// recursion directly and are not listed.
std::vector<std::pair<Time, int>> sync_periodic_releases(const TaskSet& ts,
                                                         int k, Time horizon);

// One recursion step: the part of `state` longer than `release_time` absorbs
// `workload`; the rest is unaffected.
DiscreteDist advance_busy_state(const DiscreteDist& state, Time release_time,
                                const DiscreteDist& workload);

// Busy-period length distribution starting from the simultaneous release of
// tasks 1..k, folding in each later higher-priority job in release order.
// Stops once the mass still running at the next release drops below epsilon,
// or that release exceeds horizon_cap (then horizon_exhausted is set).
BusyPeriodDist busy_period_distribution(const TaskSet& ts, int k, Prob epsilon,
                                        Time horizon_cap);

// Conservative P(length >= t): stable tail plus residual, clamped to [0,1].
Prob busy_tail(const BusyPeriodDist& b, Time t);

// Default recursion horizon: 64 periods of the slowest task involved.
Time default_horizon_cap(const TaskSet& ts, int k);

}  // namespace wcdfp
