#pragma once

#include <cstdint>
#include <vector>

#include "ddchrom/cover.hpp"
#include "ddchrom/graph.hpp"
#include "ddchrom/rational.hpp"

namespace ddchrom {

/// Independent ground truth at desk scale. Everything here is exhaustive
/// and deliberately simple; the rest of the library is tested against it.

/// All stable sets of g (or only the inclusion-maximal ones) as sorted
/// vertex lists, in lexicographic order. Guard: n <= 30.
std::vector<std::vector<int>> enumerate_stable_sets(const Graph& g, bool maximal_only = false);

/// Number of stable sets of g, including the empty set. Guard: n <= 30.
std::uint64_t count_stable_sets(const Graph& g);

struct FractionalChromaticResult {
    Rational value;
    WeightedCover cover;  // an optimal basic solution of the set-cover LP
};

/// Exact fractional chromatic number by solving the stable-set cover LP over
/// the enumerated sets. Restricting columns to maximal sets preserves the
/// optimum of a covering LP; pass maximal_only = false to cross-check that.
FractionalChromaticResult brute_force_fractional_chromatic(const Graph& g,
                                                           bool maximal_only = true);

/// Exact chromatic number by iterative-deepening k-coloring search seeded
/// with a greedy clique lower bound. Guard: n <= 20.
int brute_force_chromatic_number(const Graph& g);

}  // namespace ddchrom
