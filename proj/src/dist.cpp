#include "wcdfp/dist.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace wcdfp {

namespace {

Prob sum_mass(const std::vector<std::pair<Time, Prob>>& entries) {
  Prob m = 0.0;
  for (const auto& [v, p] : entries) m += p;
  return m;
}

}  // namespace

DiscreteDist::DiscreteDist(std::vector<std::pair<Time, Prob>> entries)
    : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!(entries_[i].second > 0.0))
      throw std::invalid_argument("DiscreteDist: probabilities must be > 0");
    if (i > 0 && entries_[i].first <= entries_[i - 1].first)
      throw std::invalid_argument("DiscreteDist: values must be strictly ascending");
  }
  mass_ = sum_mass(entries_);
  if (mass_ > 1.0 + kMassTol)
    throw std::invalid_argument("DiscreteDist: total mass exceeds 1");
}

DiscreteDist DiscreteDist::from_sorted(std::vector<std::pair<Time, Prob>> entries) {
  DiscreteDist d;
  d.entries_ = std::move(entries);
  d.mass_ = sum_mass(d.entries_);
  return d;
}

DiscreteDist DiscreteDist::point(Time value, Prob p) {
  return DiscreteDist({{value, p}});
}

Time DiscreteDist::min_value() const {
  if (entries_.empty()) throw std::logic_error("min_value of empty distribution");
  return entries_.front().first;
}

Time DiscreteDist::max_value() const {
  if (entries_.empty()) throw std::logic_error("max_value of empty distribution");
  return entries_.back().first;
}

bool DiscreteDist::is_complete(double tol) const {
  return std::abs(mass_ - 1.0) <= tol;
}

Prob DiscreteDist::at(Time value) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                             [](const auto& e, Time v) { return e.first < v; });
  if (it != entries_.end() && it->first == value) return it->second;
  return 0.0;
}

DiscreteDist convolve(const DiscreteDist& a, const DiscreteDist& b) {
  if (a.empty() || b.empty()) return DiscreteDist();
  // Exact accumulation over all value pairs; supports stay small in this
  // analysis so the ordered map is not a bottleneck.
  std::map<Time, Prob> acc;
  for (const auto& [va, pa] : a.entries_)
    for (const auto& [vb, pb] : b.entries_) acc[va + vb] += pa * pb;
  std::vector<std::pair<Time, Prob>> out(acc.begin(), acc.end());
  return DiscreteDist::from_sorted(std::move(out));
}

DiscreteDist coalesce(const DiscreteDist& a, const DiscreteDist& b) {
  if (a.mass() + b.mass() > 1.0 + kMassTol)
    throw std::invalid_argument("coalesce: combined mass exceeds 1");
  std::vector<std::pair<Time, Prob>> out;
  out.reserve(a.size() + b.size());
  auto ia = a.entries_.begin(), ea = a.entries_.end();
  auto ib = b.entries_.begin(), eb = b.entries_.end();
  while (ia != ea && ib != eb) {
    if (ia->first < ib->first) {
      out.push_back(*ia++);
    } else if (ib->first < ia->first) {
      out.push_back(*ib++);
    } else {
      out.emplace_back(ia->first, ia->second + ib->second);
      ++ia;
      ++ib;
    }
  }
  out.insert(out.end(), ia, ea);
  out.insert(out.end(), ib, eb);
  return DiscreteDist::from_sorted(std::move(out));
}

std::pair<DiscreteDist, DiscreteDist> split_at(const DiscreteDist& d, Time t) {
  auto it = std::upper_bound(
      d.entries_.begin(), d.entries_.end(), t,
      [](Time v, const auto& e) { return v < e.first; });
  std::vector<std::pair<Time, Prob>> lo(d.entries_.begin(), it);
  std::vector<std::pair<Time, Prob>> hi(it, d.entries_.end());
  return {DiscreteDist::from_sorted(std::move(lo)),
          DiscreteDist::from_sorted(std::move(hi))};
}

Prob tail_geq(const DiscreteDist& d, Time t, Prob residual) {
  Prob s = residual;
  const auto& es = d.entries();
  for (auto it = es.rbegin(); it != es.rend() && it->first >= t; ++it)
    s += it->second;
  return s;
}

Prob exceed_gt(const DiscreteDist& d, Time t, Prob residual) {
  Prob s = residual;
  const auto& es = d.entries();
  for (auto it = es.rbegin(); it != es.rend() && it->first > t; ++it)
    s += it->second;
  return s;
}

}  // namespace wcdfp
