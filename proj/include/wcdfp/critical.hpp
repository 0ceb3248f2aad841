#pragma once

#include <vector>

#include "wcdfp/taskset.hpp"

namespace wcdfp {

enum class RhoMethod { convolution, chernoff };

// Deadline-failure probability at the critical instant: the infimum over
// t in (0, D_k] of P(W(t) > t), where W(t) is the analyzed execution time
// plus ceil(t/T_j) interfering executions per higher-priority task.
struct RhoResult {
  Prob rho = 0.0;
  Time argmin_t = 0;  // in (0, D_k]
  RhoMethod method = RhoMethod::convolution;
  std::vector<std::pair<Time, Prob>> per_point;  // (t, evaluated bound at t)
};

// Evaluation points for the infimum: interference is piecewise constant
// between release multiples, and for fixed interference the exceed
// probability shrinks as t grows, so the infimum over (0, D_k] is attained
// on the right endpoints { m*T_j <= D_k } plus D_k itself.
std::vector<Time> candidate_points(const TaskSet& ts, int k);

// Exact evaluation by convolution; self-convolutions are grown incrementally
// as t ascends so each interfering job is convolved once.
RhoResult rho_convolution(const TaskSet& ts, int k);

// Debug mode: evaluates every integer t in (0, D_k] instead of only the
// candidate points. Must agree with rho_convolution.
RhoResult rho_convolution_full_sweep(const TaskSet& ts, int k);

// Moment-generating-function tail bound: for each candidate t, minimizes
// exp(-s t) * M_k(s) * prod_j M_j(s)^ceil(t/T_j) over s on a geometric grid
// refined by golden-section search, all in the log domain.
// Throws std::runtime_error("chernoff overflow") on non-finite accumulation.
RhoResult rho_chernoff(const TaskSet& ts, int k);

}  // namespace wcdfp
