#pragma once

#include <vector>

namespace cfree {

/// Partition of {1..n} into disjoint nonempty blocks. Blocks are sorted
/// internally and listed by their minima; this is the canonical form all
/// enumerators produce.
struct SetPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  /// Index of the block containing the element (1-based element).
  int block_of(int element) const;

  friend bool operator==(const SetPartition& a,
                         const SetPartition& b) = default;
};

/// Enumerators reject n above this bound unless allow_large is set; the
/// bound keeps accidental Catalan/Bell blowups out of test runs.
inline constexpr int kEnumerationCap = 14;

/// Every set partition of {1..n} (test oracle for the fast enumerators).
std::vector<SetPartition> enumerate_all(int n, bool allow_large = false);

/// Non-crossing partitions of {1..n}, each exactly once, in a
/// deterministic lexicographic order.
std::vector<SetPartition> enumerate_nc(int n, bool allow_large = false);

/// Partitions of {1..n} into consecutive blocks (2^{n-1} of them).
std::vector<SetPartition> enumerate_interval(int n, bool allow_large = false);

/// Non-crossing partitions with 1 and n in the same block.
std::vector<SetPartition> enumerate_nc_prime(int n, bool allow_large = false);

bool is_noncrossing(const SetPartition& p);

/// Outer/inner split of the blocks of a non-crossing partition (indices
/// into p.blocks). A block is inner when another block has elements on
/// both sides of it.
struct BlockClasses {
  std::vector<int> outer;
  std::vector<int> inner;
};
BlockClasses classify_blocks(const SetPartition& p);

/// Indices of singleton blocks.
std::vector<int> singleton_blocks(const SetPartition& p);

/// True when p refines s and the endpoints of every block of s are joined
/// already in p.
bool is_ll(const SetPartition& p, const SetPartition& s);

}  // namespace cfree
