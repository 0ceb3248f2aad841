#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wcdfp/dist.hpp"
#include "wcdfp/rng.hpp"

namespace wcdfp {

// Sporadic task: execution-time distribution, constrained relative deadline,
// minimum inter-arrival time. `index` is the priority rank, 1 = highest.
struct Task {
  int index = 0;
  DiscreteDist pwcet;  // complete distribution, values >= 1
  Time deadline = 0;   // D_i <= T_i
  Time period = 0;     // minimum inter-arrival
};

struct TaskSet {
  std::vector<Task> tasks;  // ascending priority index, contiguous 1..n

  int size() const { return static_cast<int>(tasks.size()); }
  const Task& task(int index_1based) const { return tasks.at(index_1based - 1); }
};

struct Violation {
  int task_index;  // 0 for set-level problems
  std::string message;
};

// Checks every model invariant and returns all violations (empty == ok):
// contiguous unique priorities, D <= T, D >= 1, T >= 1, pwcet complete with
// values >= 1.
std::vector<Violation> validate(const TaskSet& ts);

// Synthetic-generation parameters for the two-point execution model: a
// normal time with probability 1 - abnormal_prob and an abnormal time
// abnormal_ratio times longer.
struct GenParams {
  int n = 5;
  double u_sum = 0.6;               // total utilization, in (0, 1]
  Time period_min = 1;
  Time period_max = 100;
  double abnormal_ratio = 1.83;     // r >= 1
  double abnormal_prob = 0.025;     // in (0, 1)
  std::uint64_t seed = 1;
  // Realized sum of c_N/T must land within utilization_tol * u_sum of u_sum;
  // integer rounding can miss that, so offending draws are rejected.
  double utilization_tol = 0.02;
  int max_attempts = 100000;
};

struct GenResult {
  TaskSet ts;
  int rejected_overload = 0;     // tasks redrawn because c_A exceeded T
  int rejected_utilization = 0;  // whole-set redraws for rounding drift
};

// Classic UUniFast: n utilizations summing to u_sum, each in (0, u_sum].
std::vector<double> uunifast(int n, double u_sum, Rng& rng);

// Generates a task set: log-uniform integer periods, c_N = round(U*T),
// c_A = round(r*c_N), implicit deadlines, rate-monotonic priority order.
// Throws std::runtime_error if no admissible set is found within
// max_attempts (e.g. u_sum forces c_A > T for every draw).
GenResult generate(const GenParams& params);

}  // namespace wcdfp
