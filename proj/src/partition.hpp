#pragma once

// Integer partitions: weakly decreasing positive parts. The empty partition
// is the unique partition of 0. Trailing zeros are normalized away, so two
// inputs differing only in trailing zeros compare equal.

#include <compare>
#include <string>
#include <vector>

#include "arith.hpp"

namespace genarr {

class Partition {
 public:
  Partition() = default;

  // Accepts any nonnegative values; sorts decreasing and drops zeros.
  static Partition normalized(std::vector<int> values);

  // Requires already weakly decreasing positive parts.
  explicit Partition(std::vector<int> parts);

  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }
  const std::vector<int>& parts() const { return parts_; }

  // m_s: number of parts equal to s.
  int multiplicity(int s) const;

  // |Stab_{S_l}(gamma)| = prod_s m_s!
  BigInt stabilizer_order() const;

  // "(2^2 1)" in text, "(2^{2} 1)" in LaTeX, "()" for the empty partition.
  std::string to_string() const;
  std::string latex_label() const;

  bool operator==(const Partition&) const = default;
  std::strong_ordering operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All partitions of exactly d, lexicographically decreasing:
// d=3 -> (3), (2,1), (1,1,1).
std::vector<Partition> partitions_of(int d);

// All partitions of every weight 0..d, weights ascending, lexicographically
// decreasing within each weight. Starts with the empty partition.
std::vector<Partition> partitions_up_to(int d);

}  // namespace genarr
