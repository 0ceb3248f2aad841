#include "wcdfp/taskset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wcdfp {

std::vector<Violation> validate(const TaskSet& ts) {
  std::vector<Violation> out;
  for (int i = 0; i < ts.size(); ++i) {
    const Task& t = ts.tasks[i];
    if (t.index != i + 1)
      out.push_back({t.index, "priority indices must be contiguous 1..n"});
    if (t.period < 1) out.push_back({t.index, "period must be >= 1"});
    if (t.deadline < 1) out.push_back({t.index, "deadline must be >= 1"});
    if (t.deadline > t.period)
      out.push_back({t.index, "deadline exceeds period"});
    if (t.pwcet.empty()) {
      out.push_back({t.index, "empty pWCET"});
      continue;
    }
    if (t.pwcet.min_value() < 1)
      out.push_back({t.index, "pWCET values must be >= 1"});
    if (!t.pwcet.is_complete())
      out.push_back({t.index, "incomplete pWCET"});
  }
  return out;
}

std::vector<double> uunifast(int n, double u_sum, Rng& rng) {
  if (n < 1 || !(u_sum > 0.0) || u_sum > 1.0)
    throw std::invalid_argument("uunifast: need n >= 1 and 0 < u_sum <= 1");
  std::vector<double> u(n);
  double sum = u_sum;
  for (int i = 1; i < n; ++i) {
    double next = sum * std::pow(rng.uniform01(), 1.0 / (n - i));
    u[i - 1] = sum - next;
    sum = next;
  }
  u[n - 1] = sum;
  return u;
}

namespace {

Time round_half_up(double x) {
  double r = std::floor(x + 0.5);
  return r < 1.0 ? 1 : static_cast<Time>(r);
}

Time draw_log_uniform_period(Rng& rng, Time lo, Time hi) {
  double t = std::exp(std::log(static_cast<double>(lo)) +
                      rng.uniform01() * (std::log(static_cast<double>(hi)) -
                                         std::log(static_cast<double>(lo))));
  return round_half_up(t);
}

}  // namespace

GenResult generate(const GenParams& p) {
  if (!(p.abnormal_prob > 0.0) || !(p.abnormal_prob < 1.0))
    throw std::invalid_argument("generate: abnormal_prob must be in (0,1)");
  if (p.abnormal_ratio < 1.0)
    throw std::invalid_argument("generate: abnormal_ratio must be >= 1");
  if (p.period_min < 1 || p.period_max < p.period_min)
    throw std::invalid_argument("generate: bad period range");

  Rng rng(derive_seed(p.seed, "taskset-gen", 0));
  GenResult res;
  int attempts = 0;

  while (true) {
    if (++attempts > p.max_attempts)
      throw std::runtime_error("generate: no admissible task set within attempt budget");

    std::vector<double> util = uunifast(p.n, p.u_sum, rng);
    std::vector<Task> drafts;
    drafts.reserve(p.n);
    bool set_ok = true;
    double realized_u = 0.0;

    for (int i = 0; i < p.n && set_ok; ++i) {
      // Redraw the period while the abnormal time would exceed it; such a
      // task could miss its deadline with no interference at all.
      bool task_ok = false;
      for (int tries = 0; tries < 100; ++tries) {
        Time period = draw_log_uniform_period(rng, p.period_min, p.period_max);
        Time c_n = round_half_up(util[i] * static_cast<double>(period));
        Time c_a = round_half_up(p.abnormal_ratio * static_cast<double>(c_n));
        if (c_a > period) {
          ++res.rejected_overload;
          continue;
        }
        Task t;
        t.period = period;
        t.deadline = period;  // implicit deadline
        if (c_n == c_a) {
          t.pwcet = DiscreteDist::point(c_n, 1.0);
        } else {
          t.pwcet = DiscreteDist({{c_n, 1.0 - p.abnormal_prob},
                                  {c_a, p.abnormal_prob}});
        }
        realized_u += static_cast<double>(c_n) / static_cast<double>(period);
        drafts.push_back(std::move(t));
        task_ok = true;
        break;
      }
      if (!task_ok) set_ok = false;
    }

    if (!set_ok) continue;
    if (std::abs(realized_u - p.u_sum) > p.utilization_tol * p.u_sum) {
      ++res.rejected_utilization;
      continue;
    }

    // Rate-monotonic order, generation index breaking period ties.
    std::stable_sort(drafts.begin(), drafts.end(),
                     [](const Task& a, const Task& b) { return a.period < b.period; });
    for (int i = 0; i < p.n; ++i) drafts[i].index = i + 1;
    res.ts.tasks = std::move(drafts);
    return res;
  }
}

}  // namespace wcdfp
