#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddchrom/graph.hpp"
#include "ddchrom/rational.hpp"

namespace ddchrom {

/// Eligible-vertex set of a diagram node: bit v set means vertex v can still
/// be added individually to the partial stable set.
using NodeState = boost::dynamic_bitset<std::uint64_t>;

struct DdArc {
    std::int32_t tail = -1;
    std::int32_t head = -1;
    std::uint8_t label = 0;  // 0-arc or 1-arc
};

/// Layered DAG over n+1 layers whose r-t paths are in bijection with the
/// stable sets of the compiled graph. Layer j (1-based) decides vertex
/// ordering[j]; node ids are dense in creation order, arcs are grouped by
/// tail layer. Immutable once built.
class DecisionDiagram {
public:
    int layer_count() const { return static_cast<int>(layers_.size()); }
    int node_count() const { return static_cast<int>(node_layer_.size()); }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    int root() const { return layers_.front().front(); }
    int terminal() const { return layers_.back().front(); }

    const std::vector<std::vector<int>>& layers() const { return layers_; }
    int node_layer(int id) const { return node_layer_.at(id); }
    const NodeState& node_state(int id) const { return node_state_.at(id); }

    const std::vector<DdArc>& arcs() const { return arcs_; }
    std::span<const int> out_arcs(int node) const;
    std::span<const int> in_arcs(int node) const;

    const VertexOrdering& ordering() const { return ordering_; }

    /// Assembles a diagram from raw parts without structural checks; meant
    /// for tests and diagnostics (validate() is the checker).
    static DecisionDiagram from_raw_parts(std::vector<std::vector<int>> layers,
                                          std::vector<int> node_layer,
                                          std::vector<NodeState> node_state,
                                          std::vector<DdArc> arcs, VertexOrdering ordering);

private:
    friend DecisionDiagram compile_exact_diagram(const Graph&, const VertexOrdering&,
                                                 std::int64_t);
    DecisionDiagram(VertexOrdering ordering) : ordering_(std::move(ordering)) {}
    void freeze();  // builds the in/out arc index

    std::vector<std::vector<int>> layers_;
    std::vector<int> node_layer_;
    std::vector<NodeState> node_state_;
    std::vector<DdArc> arcs_;
    VertexOrdering ordering_;

    std::vector<int> out_start_, out_ids_;
    std::vector<int> in_start_, in_ids_;
};

class NodeLimitExceeded : public std::runtime_error {
public:
    NodeLimitExceeded(int layer, std::int64_t nodes)
        : std::runtime_error("decision diagram node limit exceeded at layer " +
                             std::to_string(layer) + " with " + std::to_string(nodes) +
                             " nodes"),
          layer_(layer),
          nodes_(nodes) {}
    int layer() const { return layer_; }
    std::int64_t nodes() const { return nodes_; }

private:
    int layer_;
    std::int64_t nodes_;
};

inline constexpr std::int64_t kDefaultNodeLimit = 2'000'000;

/// Top-down compilation of the exact reduced diagram of all stable sets:
/// from a node with eligible set S deciding vertex v, the 0-arc leads to
/// S \ {v} and the 1-arc (present iff v in S) to S \ ({v} + N(v)); equal
/// states on a layer are merged. The node limit is checked after each
/// completed layer. Throws NodeLimitExceeded, and std::invalid_argument for
/// an empty graph.
DecisionDiagram compile_exact_diagram(const Graph& g, const VertexOrdering& ordering,
                                      std::int64_t node_limit = kDefaultNodeLimit);

/// Number of distinct r-t paths (= stable sets for an exact diagram), by one
/// bottom-up pass.
Integer count_paths(const DecisionDiagram& d);

class PathLimitExceeded : public std::runtime_error {
public:
    explicit PathLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// All r-t paths as sorted original-vertex sets (the 1-arc layers mapped
/// through the ordering). Throws PathLimitExceeded when count_paths > limit.
std::vector<std::vector<int>> enumerate_paths(const DecisionDiagram& d,
                                              std::int64_t limit = 1'000'000);

struct DdValidationReport {
    std::vector<std::string> violations;
    bool semantic_checked = false;
    bool pass() const { return violations.empty(); }
};

/// Structural checks (layer arithmetic, reducedness, the one-0-arc degree
/// rule, full r-t reachability, root/terminal states) plus, when the path
/// count is within semantic_cap and n <= 30, semantic exactness against
/// exhaustive stable-set enumeration.
DdValidationReport validate_diagram(const DecisionDiagram& d, const Graph& g,
                                    std::int64_t semantic_cap = 200'000);

/// Text dump, one `node <id> <layer> <state-hex>` line per node and one
/// `arc <tail> <head> <label>` line per arc.
std::string dump_diagram(const DecisionDiagram& d);

}  // namespace ddchrom
