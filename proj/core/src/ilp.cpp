#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ddchrom/lp.hpp"
#include "simplex_solver.hpp"

namespace ddchrom {

namespace {

struct BnbNode {
    // cumulative bound tightenings from the root
    std::vector<std::tuple<int, Rational, Rational>> changes;  // var, lo, up
    std::optional<Rational> parent_bound;
};

}  // namespace

IlpResult ilp_solve(const LpModel& model, const std::vector<int>& integer_vars,
                    std::chrono::duration<double> time_limit, const SimplexOptions& options) {
    model.validate();
    for (int v : integer_vars) {
        if (v < 0 || v >= model.num_vars)
            throw std::invalid_argument("ilp_solve: integer variable index out of range");
        if (!model.upper[v])
            throw std::invalid_argument("ilp_solve: integer variables need finite bounds");
    }
    std::vector<char> is_int(model.num_vars, 0);
    for (int v : integer_vars) is_int[v] = 1;

    // objective provably integral on mixed-integer-feasible points?
    bool integral_objective = true;
    for (int j = 0; j < model.num_vars; ++j)
        if (!model.objective[j].is_zero() && (!is_int[j] || !model.objective[j].is_integer()))
            integral_objective = false;

    const auto deadline = SimplexSolver::Clock::now() +
                          std::chrono::duration_cast<SimplexSolver::Clock::duration>(time_limit);

    SimplexSolver solver(model, options);
    IlpResult res;

    std::vector<BnbNode> stack;
    stack.push_back(BnbNode{});
    bool first_solve = true;
    bool timed_out = false;

    auto prunable = [&](const Rational& bound) {
        if (!res.has_incumbent) return false;
        if (integral_objective) return bound > res.objective - Rational(1);
        return bound >= res.objective;
    };

    while (!stack.empty()) {
        if (SimplexSolver::Clock::now() > deadline) {
            timed_out = true;
            break;
        }
        BnbNode node = std::move(stack.back());
        stack.pop_back();
        if (node.parent_bound && prunable(*node.parent_bound)) continue;

        solver.reset_var_bounds();
        for (const auto& [v, lo, up] : node.changes) solver.set_var_bounds(v, lo, up);

        const SimplexSolver::Run run = solver.solve(&deadline, /*warm=*/!first_solve);
        first_solve = false;
        ++res.nodes_explored;

        if (run == SimplexSolver::Run::Aborted) {
            stack.push_back(std::move(node));  // unexplored; keeps its bound
            timed_out = true;
            break;
        }
        if (run == SimplexSolver::Run::Infeasible) continue;
        if (run == SimplexSolver::Run::Unbounded) {
            // only reachable at the root: children are more constrained
            res.status = IlpResult::Status::Unbounded;
            return res;
        }

        const Rational obj = solver.objective_value();
        if (!node.parent_bound) res.dual_bound = obj;  // root relaxation
        if (prunable(obj)) continue;

        // most fractional integer variable, ties by lowest index
        int branch_var = -1;
        Rational best_score;
        for (int v = 0; v < model.num_vars; ++v) {
            if (!is_int[v]) continue;
            const Rational x = solver.value_of(v);
            if (x.is_integer()) continue;
            const Rational frac = x - Rational(x.floor());
            const Rational score = std::min(frac, Rational(1) - frac);
            if (branch_var < 0 || score > best_score) {
                branch_var = v;
                best_score = score;
            }
        }

        if (branch_var < 0) {
            if (!res.has_incumbent || obj < res.objective) {
                res.has_incumbent = true;
                res.objective = obj;
                res.values.resize(model.num_vars);
                for (int j = 0; j < model.num_vars; ++j) res.values[j] = solver.value_of(j);
            }
            continue;
        }

        const Rational x = solver.value_of(branch_var);
        Rational lo = model.lower[branch_var];
        Rational up = *model.upper[branch_var];
        for (const auto& [v, l, u] : node.changes)
            if (v == branch_var) {
                lo = l;
                up = u;
            }

        BnbNode ceil_child = node;
        ceil_child.parent_bound = obj;
        ceil_child.changes.emplace_back(branch_var, Rational(x.ceil()), up);
        BnbNode floor_child = std::move(node);
        floor_child.parent_bound = obj;
        floor_child.changes.emplace_back(branch_var, lo, Rational(x.floor()));
        stack.push_back(std::move(ceil_child));
        stack.push_back(std::move(floor_child));  // explored first
    }

    if (timed_out) {
        res.status = IlpResult::Status::TimeLimit;
        std::optional<Rational> bound;
        if (res.has_incumbent) bound = res.objective;
        for (const auto& n : stack) {
            if (!n.parent_bound) {
                bound.reset();  // root LP unfinished: no global bound
                break;
            }
            if (!bound || *n.parent_bound < *bound) bound = *n.parent_bound;
        }
        res.dual_bound = bound;
        return res;
    }

    if (res.has_incumbent) {
        res.status = IlpResult::Status::Optimal;
        res.dual_bound = res.objective;
    } else {
        res.status = IlpResult::Status::Infeasible;
        res.dual_bound.reset();
    }
    return res;
}

}  // namespace ddchrom
