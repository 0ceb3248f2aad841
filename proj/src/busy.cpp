#include "wcdfp/busy.hpp"

#include <algorithm>
#include <stdexcept>

namespace wcdfp {

std::vector<std::pair<Time, int>> sync_periodic_releases(const TaskSet& ts,
                                                         int k, Time horizon) {
  if (k < 1 || k > ts.size())
    throw std::invalid_argument("sync_periodic_releases: k out of range");
  std::vector<std::pair<Time, int>> out;
  for (int j = 1; j < k; ++j) {
    const Time t_j = ts.task(j).period;
    for (Time t = t_j; t <= horizon; t += t_j) out.emplace_back(t, j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiscreteDist advance_busy_state(const DiscreteDist& state, Time release_time,
                                const DiscreteDist& workload) {
  auto [stable, unstable] = split_at(state, release_time);
  return coalesce(stable, convolve(unstable, workload));
}

Time default_horizon_cap(const TaskSet& ts, int k) {
  Time max_period = 0;
  for (int j = 1; j <= k; ++j)
    max_period = std::max(max_period, ts.task(j).period);
  return 64 * max_period;
}

BusyPeriodDist busy_period_distribution(const TaskSet& ts, int k, Prob epsilon,
                                        Time horizon_cap) {
  if (k < 1 || k > ts.size())
    throw std::invalid_argument("busy_period_distribution: k out of range");
  if (epsilon < 0.0)
    throw std::invalid_argument("busy_period_distribution: epsilon < 0");

  // All time-0 jobs: the analyzed one plus one per higher-priority task.
  DiscreteDist state = ts.task(k).pwcet;
  for (int j = 1; j < k; ++j) state = convolve(state, ts.task(j).pwcet);

  BusyPeriodDist res;

  if (k == 1) {
    // No interfering releases; the busy period is the analyzed execution.
    res.dist = std::move(state);
    res.residual = 0.0;
    res.truncation_point = res.dist.max_value();
    return res;
  }

  // Next release per higher-priority task; advance eagerly in time order,
  // ties resolved by task index. The periodic sequence never ends, so the
  // loop exits only via the epsilon or horizon condition.
  std::vector<Time> next(static_cast<std::size_t>(k), 0);
  for (int j = 1; j < k; ++j) next[j] = ts.task(j).period;

  while (true) {
    int j_min = 1;
    for (int j = 2; j < k; ++j)
      if (next[j] < next[j_min]) j_min = j;
    const Time t_rel = next[j_min];

    Prob unstable_mass = exceed_gt(state, t_rel);
    if (unstable_mass < epsilon || t_rel > horizon_cap) {
      res.horizon_exhausted = (t_rel > horizon_cap && unstable_mass >= epsilon);
      res.residual = unstable_mass;
      res.truncation_point = t_rel;
      res.dist = split_at(state, t_rel).first;
      return res;
    }

    state = advance_busy_state(state, t_rel, ts.task(j_min).pwcet);
    next[j_min] += ts.task(j_min).period;
  }
}

Prob busy_tail(const BusyPeriodDist& b, Time t) {
  return std::clamp(tail_geq(b.dist, t, b.residual), 0.0, 1.0);
}

}  // namespace wcdfp
