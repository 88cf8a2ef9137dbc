#pragma once

#include <string>
#include <vector>

#include "ddchrom/graph.hpp"
#include "ddchrom/rational.hpp"

namespace ddchrom {

/// Stable sets with rational weights; a feasible cover puts total weight
/// >= 1 on every vertex.
struct WeightedCover {
    struct Entry {
        std::vector<int> set;  // sorted vertex ids
        Rational weight;
    };
    std::vector<Entry> entries;

    Rational total_weight() const;
    /// Sums weights of entries with identical vertex sets; drops zero-weight
    /// entries. Keeps first-occurrence order.
    void merge_duplicates();

    /// One line per set, `w=<p>/<q> S={v1,v2,...}` with 1-based ids, then a
    /// `total=<p>/<q>` line.
    std::string to_text() const;
    static WeightedCover from_text(const std::string& text);
};

/// Per-vertex color assignment with contiguous 0-based color ids.
struct Coloring {
    std::vector<int> color;
    int color_count = 0;
};

bool is_proper_coloring(const Graph& g, const Coloring& c);

/// DIMACS-style solution text: a summary line, then `s <vertex> <color>`
/// lines with 1-based ids.
std::string coloring_to_text(const Graph& g, const Coloring& c);

struct CoverReport {
    bool all_sets_stable = false;
    std::vector<int> unstable_entries;       // indices into cover.entries
    bool all_vertices_covered = false;
    std::vector<int> uncovered_vertices;
    std::vector<Rational> coverage;          // per-vertex weight sum
    Rational total_weight;
    bool pass() const { return all_sets_stable && all_vertices_covered; }
};

/// Checks that every set is stable in g and that per-vertex coverage sums
/// reach 1 exactly; duplicates are merged before checking.
CoverReport verify_cover(const Graph& g, const WeightedCover& z);

/// Turns an integral feasible cover into a proper coloring: each vertex takes
/// the color of the first entry containing it; unused colors are compacted.
/// Throws if some vertex is uncovered or a weight is not a positive integer.
Coloring extract_coloring(const Graph& g, const WeightedCover& z);

/// Brelaz' DSATUR heuristic. Vertex choice: maximum saturation (distinct
/// neighbor colors), ties by most uncolored neighbors, then lowest id; each
/// vertex gets the smallest feasible color.
Coloring dsatur(const Graph& g);

}  // namespace ddchrom
