#include <algorithm>
#include <string>

#include "ddchrom/flow.hpp"

namespace ddchrom {

FlowModel build_flow_model(const DecisionDiagram& d, const Graph& g, bool relax) {
    const int n = g.vertex_count();
    if (d.layer_count() != n + 1)
        throw std::invalid_argument("build_flow_model: diagram layer count does not match graph");

    FlowModel fm;
    fm.vertex_count = n;
    fm.arc_var.resize(d.arc_count());
    fm.layer_one_arcs.assign(n + 1, {});
    fm.covering_row.assign(n + 1, -1);
    fm.conservation_row.assign(d.node_count(), -1);

    const Rational ub(n);
    for (int a = 0; a < d.arc_count(); ++a) {
        const DdArc& arc = d.arcs()[a];
        const bool leaves_root = arc.tail == d.root();
        fm.arc_var[a] = fm.lp.add_variable(Rational(0), ub, Rational(leaves_root ? 1 : 0));
        if (arc.label == 1) fm.layer_one_arcs[d.node_layer(arc.tail)].push_back(fm.arc_var[a]);
        if (!relax) fm.integer_vars.push_back(fm.arc_var[a]);
    }

    // covering rows first: layer j's 1-arcs carry >= 1 unit, which covers the
    // original vertex ordering[j]
    for (int j = 1; j <= n; ++j) {
        std::vector<std::pair<int, Rational>> coeffs;
        coeffs.reserve(fm.layer_one_arcs[j].size());
        for (int var : fm.layer_one_arcs[j]) coeffs.emplace_back(var, Rational(1));
        fm.covering_row[j] = static_cast<int>(fm.lp.rows.size());
        fm.lp.add_row(std::move(coeffs), RowSense::GreaterEqual, Rational(1));
    }

    // conservation rows: inflow - outflow = 0 for every internal node
    for (int u = 0; u < d.node_count(); ++u) {
        if (u == d.root() || u == d.terminal()) continue;
        std::vector<std::pair<int, Rational>> coeffs;
        for (int a : d.in_arcs(u)) coeffs.emplace_back(fm.arc_var[a], Rational(1));
        for (int a : d.out_arcs(u)) coeffs.emplace_back(fm.arc_var[a], Rational(-1));
        fm.conservation_row[u] = static_cast<int>(fm.lp.rows.size());
        fm.lp.add_row(std::move(coeffs), RowSense::Equal, Rational(0));
    }
    return fm;
}

FractionalFlowResult solve_fractional(const DecisionDiagram& d, const Graph& g) {
    FlowModel fm = build_flow_model(d, g, /*relax=*/true);
    LpSolution sol = lp_solve(fm.lp);
    if (sol.status != LpStatus::Optimal)
        throw std::logic_error(
            "solve_fractional: flow relaxation must be feasible and bounded on an exact diagram");
    FractionalFlowResult res;
    res.chi_f = sol.objective;
    res.arc_flow.resize(d.arc_count());
    for (int a = 0; a < d.arc_count(); ++a) res.arc_flow[a] = sol.values[fm.arc_var[a]];
    res.lp = std::move(sol);
    return res;
}

IntegralFlowResult solve_integral(const DecisionDiagram& d, const Graph& g,
                                  std::chrono::duration<double> time_limit) {
    FlowModel fm = build_flow_model(d, g, /*relax=*/false);
    IlpResult ilp = ilp_solve(fm.lp, fm.integer_vars, time_limit);
    IntegralFlowResult res;
    res.nodes_explored = ilp.nodes_explored;
    res.dual_bound = ilp.dual_bound;
    if (ilp.status == IlpResult::Status::Optimal)
        res.status = IntegralFlowResult::Status::Optimal;
    else if (ilp.status == IlpResult::Status::TimeLimit)
        res.status = IntegralFlowResult::Status::TimeLimit;
    else
        throw std::logic_error("solve_integral: integral flow model must be feasible");
    if (ilp.has_incumbent) {
        if (!ilp.objective.is_integer())
            throw std::logic_error("solve_integral: integral model produced fractional value");
        res.chi = static_cast<int>(ilp.objective.num().get_si());
        res.arc_flow.resize(d.arc_count());
        for (int a = 0; a < d.arc_count(); ++a) res.arc_flow[a] = ilp.values[fm.arc_var[a]].num();
    }
    return res;
}

std::vector<Rational> cover_to_flow(const WeightedCover& z, const DecisionDiagram& d) {
    const int n = d.layer_count() - 1;
    std::vector<Rational> flow(d.arc_count(), Rational(0));
    for (const auto& entry : z.entries) {
        std::vector<char> in_set(n, 0);
        for (int v : entry.set) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("cover_to_flow: vertex id out of range");
            in_set[v] = 1;
        }
        // walk the unique path taking the 1-arc exactly on the set's layers
        int node = d.root();
        for (int j = 1; j <= n; ++j) {
            const int want = in_set[d.ordering().vertex_at_layer(j)] ? 1 : 0;
            int found = -1;
            for (int a : d.out_arcs(node))
                if (d.arcs()[a].label == want) {
                    found = a;
                    break;
                }
            if (found < 0)
                throw DiagramExactnessError(
                    "cover_to_flow: no " + std::to_string(want) + "-arc at layer " +
                    std::to_string(j) +
                    "; the diagram is not exact for this set (or the set is not stable)");
            flow[found] += entry.weight;
            node = d.arcs()[found].head;
        }
    }
    return flow;
}

WeightedCover flow_to_cover(const std::vector<Rational>& arc_flow, const DecisionDiagram& d) {
    if (static_cast<int>(arc_flow.size()) != d.arc_count())
        throw std::invalid_argument("flow_to_cover: arc value count mismatch");
    for (int a = 0; a < d.arc_count(); ++a)
        if (arc_flow[a].sign() < 0)
            throw FlowDecompositionError("flow_to_cover: negative flow on arc " +
                                         std::to_string(a));
    for (int u = 0; u < d.node_count(); ++u) {
        if (u == d.root() || u == d.terminal()) continue;
        Rational balance(0);
        for (int a : d.in_arcs(u)) balance += arc_flow[a];
        for (int a : d.out_arcs(u)) balance -= arc_flow[a];
        if (!balance.is_zero())
            throw FlowDecompositionError("flow_to_cover: conservation violated at node " +
                                         std::to_string(u));
    }

    std::vector<Rational> residual = arc_flow;
    Rational remaining(0);
    for (int a : d.out_arcs(d.root())) remaining += residual[a];

    WeightedCover cover;
    const int n = d.layer_count() - 1;
    while (remaining.sign() > 0) {
        // trace one r-t path through positive residuals, 1-arc first
        std::vector<int> path;
        std::vector<int> vertices;
        int node = d.root();
        for (int j = 1; j <= n; ++j) {
            int pick = -1;
            for (int want = 1; want >= 0 && pick < 0; --want)
                for (int a : d.out_arcs(node))
                    if (d.arcs()[a].label == want && residual[a].sign() > 0) {
                        pick = a;
                        break;
                    }
            if (pick < 0)
                throw FlowDecompositionError(
                    "flow_to_cover: positive flow remains but no r-t path is traceable");
            path.push_back(pick);
            if (d.arcs()[pick].label == 1)
                vertices.push_back(d.ordering().vertex_at_layer(j));
            node = d.arcs()[pick].head;
        }
        Rational bottleneck = residual[path.front()];
        for (int a : path) bottleneck = std::min(bottleneck, residual[a]);
        for (int a : path) residual[a] -= bottleneck;
        remaining -= bottleneck;
        std::sort(vertices.begin(), vertices.end());
        cover.entries.push_back({std::move(vertices), bottleneck});
    }
    cover.merge_duplicates();
    return cover;
}

}  // namespace ddchrom
