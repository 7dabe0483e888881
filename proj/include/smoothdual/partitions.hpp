#pragma once

#include <cstdint>
#include <vector>

namespace smoothdual {

/// Weakly decreasing list of positive integers.
using Partition = std::vector<int>;
/// One partition per block.
using Multipartition = std::vector<Partition>;

/// All partitions of n in ascending lexicographic order: (1,...,1) first, (n) last.
/// n == 0 yields the single empty partition.
std::vector<Partition> partitions_of(int n);

/// Cartesian product of partitions_of(e_i), lexicographic with block 0 most significant.
std::vector<Multipartition> multipartitions_of(const std::vector<int> &sizes);

/// Number of partitions of n by Euler's pentagonal recurrence (independent of the enumerator).
std::uint64_t partition_count(int n);

/// Run-length form of a partition: (part size, multiplicity), part sizes descending.
std::vector<std::pair<int, int>> part_multiplicities(const Partition &p);

/// Order of the centralizer in S_n of a permutation with cycle type p: prod_i i^{m_i} m_i!.
std::uint64_t centralizer_order(const Partition &p);

std::uint64_t factorial(int n);

} // namespace smoothdual
