#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ddchrom/rational.hpp"

namespace ddchrom {

/// Simple undirected graph with contiguous 0-based vertex ids. No self-loops,
/// no parallel edges; adjacency lists are kept sorted and symmetric.
/// Immutable once populated, safe for concurrent reads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, std::string name = "");

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    /// Inserts {u, v}; a duplicate is a no-op. Throws on self-loops and
    /// out-of-range ids.
    void add_edge(int u, int v);

    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

    /// All edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edge_list() const;

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    /// Structural equality (vertex count and edge set); names are ignored.
    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
    std::string name_;
};

/// Error raised by the DIMACS reader; the message names the offending line.
class DimacsParseError : public std::runtime_error {
public:
    DimacsParseError(int line, const std::string& what)
        : std::runtime_error("DIMACS parse error, line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Reads DIMACS .col text: one `p edge <n> <m>` line (`p col` accepted),
/// `e <u> <v>` edge lines with 1-based ids, `c` comments. Duplicate edges and
/// reversed orientations collapse to one edge. The declared edge count is not
/// validated; a mismatch is appended to `warnings` when given.
Graph parse_dimacs(std::istream& in, std::string name = "",
                   std::vector<std::string>* warnings = nullptr);
Graph parse_dimacs_file(const std::filesystem::path& path,
                        std::vector<std::string>* warnings = nullptr);

/// Canonical writer: `p edge n m`, then `e u v` lines with u < v, 1-based,
/// sorted. parse_dimacs(write_dimacs(g)) == g.
std::string write_dimacs(const Graph& g);

Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_petersen();

/// G(n, p) with exact edge probability p in [0, 1]. Deterministic: a
/// std::mt19937_64 seeded with `seed` feeds one rejection-sampled Bernoulli
/// draw per pair (u, v), u < v, in lexicographic order, so equal
/// (n, p, seed) give bit-identical graphs on every platform.
Graph make_gnp(int n, const Rational& p, std::uint64_t seed);

/// Mycielski construction: n original vertices, n shadows, one apex.
/// Raises the chromatic number by one while keeping the graph triangle-free
/// when the input is.
Graph make_mycielski(const Graph& g);

/// Iterated Mycielskian starting from a single edge; level 2 is C5, level 3
/// the 11-vertex Grötzsch graph, matching the DIMACS mycielN family.
Graph make_mycielski_level(int level);

/// Queen graph on a rows x cols board, row-major vertex order: squares are
/// adjacent when they share a row, column, or diagonal.
Graph make_queen(int rows, int cols);

/// Mapping from decision-diagram layer to original vertex: layer j (1-based)
/// decides vertex perm[j-1]. Always a bijection on 0..n-1.
class VertexOrdering {
public:
    explicit VertexOrdering(std::vector<int> perm);

    static VertexOrdering identity(int n);
    static VertexOrdering reversed(int n);
    /// Degree-descending, ties by lowest vertex id.
    static VertexOrdering degree_descending(const Graph& g);

    int size() const { return static_cast<int>(perm_.size()); }
    /// Vertex decided on layer j, j in [1, n].
    int vertex_at_layer(int j) const { return perm_.at(j - 1); }
    const std::vector<int>& perm() const { return perm_; }

private:
    std::vector<int> perm_;
};

}  // namespace ddchrom
