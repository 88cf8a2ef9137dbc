#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "ddchrom/cover.hpp"
#include "ddchrom/dd.hpp"
#include "ddchrom/graph.hpp"
#include "ddchrom/lp.hpp"

namespace ddchrom {

/// Min-flow coloring model over a diagram: one variable per arc in [0, n],
/// one covering row per layer (>= 1 unit through the layer's 1-arcs), one
/// conservation row per internal node, objective = flow out of the root.
/// With integral arc variables the optimum is the chromatic number; relaxed,
/// it is the fractional chromatic number.
struct FlowModel {
    LpModel lp;
    int vertex_count = 0;
    std::vector<int> arc_var;                        // arc id -> variable (identity)
    std::vector<std::vector<int>> layer_one_arcs;    // layer j (1-based) -> 1-arc vars
    std::vector<int> covering_row;                   // layer j (1-based) -> row
    std::vector<int> conservation_row;               // node id -> row, -1 for root/terminal
    std::vector<int> integer_vars;                   // all arcs when integral, else empty
};

/// relax == true builds the LP relaxation; relax == false marks every arc
/// variable integral with domain {0,...,n}.
FlowModel build_flow_model(const DecisionDiagram& d, const Graph& g, bool relax);

struct FractionalFlowResult {
    Rational chi_f;
    std::vector<Rational> arc_flow;
    LpSolution lp;
};

/// Exact optimum of the relaxed flow model; on an exact diagram this is the
/// fractional chromatic number of g.
FractionalFlowResult solve_fractional(const DecisionDiagram& d, const Graph& g);

struct IntegralFlowResult {
    enum class Status { Optimal, TimeLimit };
    Status status = Status::Optimal;
    std::optional<int> chi;                  // incumbent objective, optimal when status says so
    std::vector<Integer> arc_flow;           // incumbent flow, empty without one
    std::optional<Rational> dual_bound;
    std::int64_t nodes_explored = 0;
};

/// Solves the integral flow model by branch and bound; on an exact diagram
/// the optimum is the chromatic number of g.
IntegralFlowResult solve_integral(
    const DecisionDiagram& d, const Graph& g,
    std::chrono::duration<double> time_limit = std::chrono::duration<double>(3600.0));

class DiagramExactnessError : public std::runtime_error {
public:
    explicit DiagramExactnessError(const std::string& what) : std::runtime_error(what) {}
};

/// Routes each weighted stable set along its unique r-t path (1-arc on the
/// set's layers, 0-arc elsewhere) and accumulates the weights on the arcs.
/// The result satisfies conservation, and covering wherever the cover does.
/// Throws DiagramExactnessError when a needed 1-arc is missing, which proves
/// the diagram is not exact for the set's graph (or the set is not stable).
std::vector<Rational> cover_to_flow(const WeightedCover& z, const DecisionDiagram& d);

class FlowDecompositionError : public std::runtime_error {
public:
    explicit FlowDecompositionError(const std::string& what) : std::runtime_error(what) {}
};

/// Path decomposition of a conservative nonnegative flow: repeatedly traces
/// an r-t path through positive residuals (1-arc preferred at every node),
/// subtracts the bottleneck, and records the path's vertex set with it.
/// Duplicate sets are merged; total weight equals the flow value. Throws
/// FlowDecompositionError on conservation violations, negative values, or
/// stranded positive flow.
WeightedCover flow_to_cover(const std::vector<Rational>& arc_flow, const DecisionDiagram& d);

}  // namespace ddchrom
