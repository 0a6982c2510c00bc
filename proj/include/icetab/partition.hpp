#ifndef ICETAB_PARTITION_HPP
#define ICETAB_PARTITION_HPP

#include <initializer_list>
#include <vector>

namespace icetab {

// Weakly decreasing sequence of positive integers. Trailing zeros are
// stripped on construction so equality is structural and the empty
// partition is the unique zero.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  // 0-based; parts beyond the length read as 0
  int part(int i) const {
    return (i >= 0 && i < length()) ? parts_[i] : 0;
  }

  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Strictly decreasing sequence of positive integers; indexes shifted
// shapes and the columns with non-zero sum in U-turn matrices.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(std::vector<int> parts);
  StrictPartition(std::initializer_list<int> parts)
      : StrictPartition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return static_cast<int>(parts_.size()); }
  int m() const { return parts_.empty() ? 0 : parts_.front(); }
  int weight() const;
  int part(int i) const {
    return (i >= 0 && i < n()) ? parts_[i] : 0;
  }
  bool has_part(int q) const;

  Partition as_partition() const { return Partition(parts_); }

  friend bool operator==(const StrictPartition&, const StrictPartition&) =
      default;

 private:
  std::vector<int> parts_;
};

// Lengths of the successive diagonals of the shifted frame of a strict
// partition; equivalently its conjugate.
struct DiagonalProfile {
  std::vector<int> lengths;  // lengths[q-1], q = 1..m

  int length(int q) const {  // 1-based, 0 beyond the frame
    return (q >= 1 && q <= static_cast<int>(lengths.size()))
               ? lengths[q - 1]
               : 0;
  }
};

StrictPartition staircase(int n);

// Componentwise lam + (n, n-1, ..., 1); requires length(lam) <= n and
// always emits exactly n (distinct) parts.
StrictPartition add_staircase(const Partition& lam, int n);

DiagonalProfile diagonal_profile(const StrictPartition& mu);

// Successive diagonal lengths drop by one exactly at the parts of mu.
bool profile_steps_ok(const DiagonalProfile& d, const StrictPartition& mu);

}  // namespace icetab

#endif
