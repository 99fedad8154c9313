#pragma once

// Binomials, Stirling numbers of both kinds, and elementary / complete
// homogeneous symmetric functions evaluated at integer points.

#include "stirdet/exact.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace stirdet {

ExactInt binomial(int n, int k);

/// Unsigned Stirling number of the first kind: permutations of n elements with k cycles.
ExactInt stirling1_unsigned(int n, int k);

/// Stirling number of the second kind: partitions of an n-set into k blocks.
ExactInt stirling2(int n, int k);

/// Ordered list of values substituted for the variables of a symmetric function.
struct Alphabet {
    std::vector<ExactInt> values;

    std::size_t size() const { return values.size(); }
    bool pairwise_distinct() const;

    /// (1, 2, ..., a)
    static Alphabet canonical(int a);

    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

enum class SymKind { elementary, complete };

/// e_m or h_m at `alphabet`. 1 for m == 0, 0 for m < 0.
ExactInt sym_spec(SymKind kind, int m, const Alphabet& alphabet);

/// (e_0, ..., e_max_m) or (h_0, ..., h_max_m) at `alphabet` in one pass.
std::vector<ExactInt> sym_spec_sequence(SymKind kind, int max_m, const Alphabet& alphabet);

/// Calls `visit` with every k-subset of {1, ..., n} in lexicographic order.
/// The span holds the chosen elements in increasing order.
void for_each_subset(int n, int k, const std::function<void(std::span<const int>)>& visit);

}  // namespace stirdet
