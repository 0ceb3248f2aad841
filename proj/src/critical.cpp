#include "wcdfp/critical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wcdfp {

std::vector<Time> candidate_points(const TaskSet& ts, int k) {
  if (k < 1 || k > ts.size())
    throw std::invalid_argument("candidate_points: k out of range");
  const Time d_k = ts.task(k).deadline;
  std::vector<Time> pts;
  for (int j = 1; j < k; ++j) {
    const Time t_j = ts.task(j).period;
    for (Time t = t_j; t <= d_k; t += t_j) pts.push_back(t);
  }
  pts.push_back(d_k);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

namespace {

Time ceil_div(Time a, Time b) { return (a + b - 1) / b; }

RhoResult rho_convolution_at(const TaskSet& ts, int k,
                             const std::vector<Time>& points) {
  RhoResult res;
  res.method = RhoMethod::convolution;
  res.rho = std::numeric_limits<Prob>::infinity();

  // Running product C_k (x) C_1^{n_1} (x) ... ; counts only grow with t,
  // so ascending evaluation reuses every partial product.
  DiscreteDist workload = ts.task(k).pwcet;
  std::vector<Time> counts(static_cast<std::size_t>(k), 0);

  for (Time t : points) {
    for (int j = 1; j < k; ++j) {
      Time want = ceil_div(t, ts.task(j).period);
      while (counts[j] < want) {
        workload = convolve(workload, ts.task(j).pwcet);
        ++counts[j];
      }
    }
    Prob p = exceed_gt(workload, t);
    res.per_point.emplace_back(t, p);
    if (p < res.rho) {
      res.rho = p;
      res.argmin_t = t;
    }
  }
  return res;
}

}  // namespace

RhoResult rho_convolution(const TaskSet& ts, int k) {
  return rho_convolution_at(ts, k, candidate_points(ts, k));
}

RhoResult rho_convolution_full_sweep(const TaskSet& ts, int k) {
  if (k < 1 || k > ts.size())
    throw std::invalid_argument("rho_convolution_full_sweep: k out of range");
  std::vector<Time> pts;
  for (Time t = 1; t <= ts.task(k).deadline; ++t) pts.push_back(t);
  return rho_convolution_at(ts, k, pts);
}

namespace {

// log M(s) = log sum_m p_m exp(s v_m), stabilized around the largest term.
double log_mgf(const DiscreteDist& d, double s) {
  double hi = -std::numeric_limits<double>::infinity();
  for (const auto& [v, p] : d.entries())
    hi = std::max(hi, std::log(p) + s * static_cast<double>(v));
  double acc = 0.0;
  for (const auto& [v, p] : d.entries())
    acc += std::exp(std::log(p) + s * static_cast<double>(v) - hi);
  return hi + std::log(acc);
}

constexpr int kChernoffGridExp = 64;
constexpr double kGoldenRelWidth = 1e-6;

}  // namespace

RhoResult rho_chernoff(const TaskSet& ts, int k) {
  if (k < 1 || k > ts.size())
    throw std::invalid_argument("rho_chernoff: k out of range");

  Time max_exec = ts.task(k).pwcet.max_value();
  for (int j = 1; j < k; ++j)
    max_exec = std::max(max_exec, ts.task(j).pwcet.max_value());
  const double s0 = 1.0 / static_cast<double>(max_exec);

  RhoResult res;
  res.method = RhoMethod::chernoff;
  res.rho = std::numeric_limits<Prob>::infinity();

  for (Time t : candidate_points(ts, k)) {
    std::vector<Time> counts(static_cast<std::size_t>(k), 0);
    for (int j = 1; j < k; ++j)
      counts[j] = ceil_div(t, ts.task(j).period);

    auto log_bound = [&](double s) {
      double lb = -s * static_cast<double>(t) + log_mgf(ts.task(k).pwcet, s);
      for (int j = 1; j < k; ++j)
        lb += static_cast<double>(counts[j]) * log_mgf(ts.task(j).pwcet, s);
      if (std::isnan(lb) || lb == std::numeric_limits<double>::infinity())
        throw std::runtime_error("chernoff overflow");
      return lb;
    };

    int best_e = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int e = 0; e <= kChernoffGridExp; ++e) {
      double lb = log_bound(s0 * std::exp2(e));
      if (lb < best) {
        best = lb;
        best_e = e;
      }
    }

    // Golden-section refinement between the grid neighbors of the minimum
    // (the log bound is convex in s, so the bracket contains the optimum
    // whenever the grid straddles it).
    double lo = s0 * std::exp2(std::max(0, best_e - 1));
    double hi = s0 * std::exp2(std::min(kChernoffGridExp, best_e + 1));
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = log_bound(x1), f2 = log_bound(x2);
    while ((b - a) > kGoldenRelWidth * b) {
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - inv_phi * (b - a);
        f1 = log_bound(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + inv_phi * (b - a);
        f2 = log_bound(x2);
      }
    }
    best = std::min({best, f1, f2});

    Prob p = best >= 0.0 ? 1.0 : std::exp(best);
    res.per_point.emplace_back(t, p);
    if (p < res.rho) {
      res.rho = p;
      res.argmin_t = t;
    }
  }
  return res;
}

}  // namespace wcdfp
