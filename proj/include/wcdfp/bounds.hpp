#pragma once

#include <vector>

#include "wcdfp/busy.hpp"
#include "wcdfp/critical.hpp"
#include "wcdfp/taskset.hpp"

namespace wcdfp {

// Maximum number of distinct busy-period starting points per release pattern:
// n_i = ceil(sum_{j=i..k-1} D_j / T_i) candidates per higher-priority task,
// plus the analyzed release itself.
struct StartingPointTable {
  std::vector<Time> n_i;  // counts for i = 1..k-1 (n_i[0] unused, 1-based)
  Time total = 0;         // N = sum n_i + 1
};

StartingPointTable starting_point_counts(const TaskSet& ts, int k);

// Which of the two per-starting-point bounds is the smaller one: the busy
// tail (B1) or the critical-instant probability (B2, tail >= rho).
enum class TermClass { B1, B2 };

struct BoundTerm {
  int i = 0;       // higher-priority task index
  Time j = 0;      // candidate number, 1..n_i
  Time window = 0; // (j-1)*T_i + D_k
  Prob busy_tail = 0.0;
  TermClass chosen = TermClass::B1;
};

struct BoundReport {
  RhoResult rho;
  StartingPointTable counts;
  std::vector<BoundTerm> terms;  // the i = k term is implicit (always B2)
  Time m = 1;                    // B2 terms including the analyzed release
  Prob bound_basic = 0.0;        // sum of min{tail, rho}, clamped to 1
  Prob bound_improved = 0.0;     // sum of B1 tails + 1 - (1-rho)^m, clamped
  RhoMethod method = RhoMethod::convolution;
  Prob epsilon = 0.0;            // recursion threshold actually used
  BusyPeriodDist busy;           // kept for audit
};

// Sum over all starting points of min{busy tail at the window, rho}.
BoundReport bound_basic(const TaskSet& ts, int k, const RhoResult& rho,
                        const BusyPeriodDist& bw);

// Replaces the rho terms with the joint bound 1 - (1-rho)^m. The analyzed
// release always counts toward m, so both reports share one classification
// and each carries both bounds.
BoundReport bound_improved(const TaskSet& ts, int k, const RhoResult& rho,
                           const BusyPeriodDist& bw);

struct EpsilonPolicy {
  double factor = 1e-4;     // epsilon = factor * rho
  double floor = 1e-16;     // used when rho == 0 so the recursion terminates
  Prob value(Prob rho) const { return rho > 0.0 ? factor * rho : floor; }
};

// Full pipeline: rho by the chosen method, busy-period recursion with the
// epsilon policy, then both bound assemblies.
BoundReport analyze(const TaskSet& ts, int k, RhoMethod method,
                    const EpsilonPolicy& policy = {});

}  // namespace wcdfp
