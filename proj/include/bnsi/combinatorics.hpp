#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace bnsi {

// Binomial coefficient, saturating at UINT64_MAX on overflow.
std::uint64_t binomial(unsigned n, unsigned k);

// All k-subsets of {0,...,n-1} in lexicographic order of sorted index lists:
// {0,1,2} < {0,1,3} < ... < {n-3,n-2,n-1}.
void for_each_combination_lex(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

// Same subsets in colexicographic order: {0,1} < {0,2} < {1,2} < {0,3} < ...
void for_each_combination_colex(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

// Set partitions of {0,...,n-1} via restricted growth strings in lexicographic
// RGS order. Blocks are handed over as lists of element indices; block b holds
// the elements whose RGS digit is b, so blocks are ordered by first occurrence.
// Returning false from the callback stops enumeration.
void for_each_set_partition(int n, const std::function<bool(const std::vector<std::vector<int>>&)>& fn);

// Subsets of {0,...,n-1} as bitmasks, by descending popcount; within one size
// in lexicographic order of the sorted index lists. Returning false stops.
void for_each_subset_desc_size(int n, const std::function<bool(std::uint32_t)>& fn);

}  // namespace bnsi
