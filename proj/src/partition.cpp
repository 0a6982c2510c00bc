#include "icetab/partition.hpp"

#include <numeric>

#include "icetab/errors.hpp"

namespace icetab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw InvalidInput("partition parts must be non-negative and sorted");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw InvalidInput("partition parts must be weakly decreasing");
  }
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  if (!parts_.empty()) {
    conj.resize(parts_.front(), 0);
    for (int p : parts_)
      for (int q = 0; q < p; ++q) ++conj[q];
  }
  return Partition(std::move(conj));
}

StrictPartition::StrictPartition(std::vector<int> parts)
    : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw InvalidInput("strict partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])
      throw InvalidInput("strict partition parts must be strictly decreasing");
  }
}

int StrictPartition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool StrictPartition::has_part(int q) const {
  for (int p : parts_)
    if (p == q) return true;
  return false;
}

StrictPartition staircase(int n) {
  if (n < 0) throw InvalidInput("staircase size must be non-negative");
  std::vector<int> parts(n);
  for (int i = 0; i < n; ++i) parts[i] = n - i;
  return StrictPartition(std::move(parts));
}

StrictPartition add_staircase(const Partition& lam, int n) {
  if (n <= 0) throw InvalidInput("add_staircase requires a positive rank");
  if (lam.length() > n)
    throw InvalidInput("partition is longer than the staircase rank");
  std::vector<int> parts(n);
  for (int i = 0; i < n; ++i) parts[i] = lam.part(i) + (n - i);
  return StrictPartition(std::move(parts));
}

DiagonalProfile diagonal_profile(const StrictPartition& mu) {
  return DiagonalProfile{mu.as_partition().conjugate().parts()};
}

bool profile_steps_ok(const DiagonalProfile& d, const StrictPartition& mu) {
  for (int q = 1; q < mu.m(); ++q) {
    int expect = mu.has_part(q) ? d.length(q) - 1 : d.length(q);
    if (d.length(q + 1) != expect) return false;
  }
  return true;
}

}  // namespace icetab
