#include "wcdfp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wcdfp {

StartingPointTable starting_point_counts(const TaskSet& ts, int k) {
  if (k < 1 || k > ts.size())
    throw std::invalid_argument("starting_point_counts: k out of range");
  StartingPointTable table;
  table.n_i.assign(static_cast<std::size_t>(k), 0);
  Time deadline_sum = 0;
  // Walk i downward so the deadline suffix sum_{j=i..k-1} D_j accumulates.
  for (int i = k - 1; i >= 1; --i) {
    deadline_sum += ts.task(i).deadline;
    const Time t_i = ts.task(i).period;
    table.n_i[i] = (deadline_sum + t_i - 1) / t_i;
  }
  table.total = 1;
  for (int i = 1; i < k; ++i) table.total += table.n_i[i];
  return table;
}

namespace {

BoundReport assemble(const TaskSet& ts, int k, const RhoResult& rho,
                     const BusyPeriodDist& bw) {
  BoundReport rep;
  rep.rho = rho;
  rep.method = rho.method;
  rep.busy = bw;
  rep.counts = starting_point_counts(ts, k);

  const Time d_k = ts.task(k).deadline;
  double sum_min = rho.rho;  // the analyzed release contributes rho
  double sum_b1 = 0.0;
  rep.m = 1;  // the analyzed release is always counted as a rho term

  for (int i = 1; i < k; ++i) {
    const Time t_i = ts.task(i).period;
    for (Time j = 1; j <= rep.counts.n_i[i]; ++j) {
      BoundTerm term;
      term.i = i;
      term.j = j;
      term.window = (j - 1) * t_i + d_k;
      term.busy_tail = busy_tail(bw, term.window);
      if (term.busy_tail < rho.rho) {
        term.chosen = TermClass::B1;
        sum_b1 += term.busy_tail;
        sum_min += term.busy_tail;
      } else {
        term.chosen = TermClass::B2;
        ++rep.m;
        sum_min += rho.rho;
      }
      rep.terms.push_back(term);
    }
  }

  rep.bound_basic = std::clamp(sum_min, 0.0, 1.0);
  const double joint_b2 =
      1.0 - std::pow(1.0 - rho.rho, static_cast<double>(rep.m));
  rep.bound_improved = std::clamp(sum_b1 + joint_b2, 0.0, 1.0);
  return rep;
}

}  // namespace

BoundReport bound_basic(const TaskSet& ts, int k, const RhoResult& rho,
                        const BusyPeriodDist& bw) {
  return assemble(ts, k, rho, bw);
}

BoundReport bound_improved(const TaskSet& ts, int k, const RhoResult& rho,
                           const BusyPeriodDist& bw) {
  return assemble(ts, k, rho, bw);
}

BoundReport analyze(const TaskSet& ts, int k, RhoMethod method,
                    const EpsilonPolicy& policy) {
  RhoResult rho = method == RhoMethod::convolution ? rho_convolution(ts, k)
                                                   : rho_chernoff(ts, k);
  const Prob eps = policy.value(rho.rho);
  BusyPeriodDist bw =
      busy_period_distribution(ts, k, eps, default_horizon_cap(ts, k));
  BoundReport rep = assemble(ts, k, rho, bw);
  rep.epsilon = eps;
  return rep;
}

}  // namespace wcdfp
