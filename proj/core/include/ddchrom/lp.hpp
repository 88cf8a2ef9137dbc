#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddchrom/rational.hpp"

namespace ddchrom {

enum class RowSense { LessEqual, GreaterEqual, Equal };

/// Sparse minimization LP with exact rational data. Lower bounds are finite;
/// an absent upper bound means +infinity.
struct LpModel {
    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<Rational> lower;
    std::vector<std::optional<Rational>> upper;

    struct Row {
        std::vector<std::pair<int, Rational>> coeffs;
        RowSense sense = RowSense::LessEqual;
        Rational rhs;
    };
    std::vector<Row> rows;

    /// Returns the new variable's index.
    int add_variable(Rational lo, std::optional<Rational> up, Rational obj);
    void add_row(std::vector<std::pair<int, Rational>> coeffs, RowSense sense, Rational rhs);

    /// Throws std::invalid_argument on out-of-range indices or size mismatches.
    void validate() const;

    /// CPLEX-style LP text with exact `p/q` coefficients, for external
    /// cross-checks.
    std::string to_lp_text() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Exact basic solution. At Optimal, plugging `values` into every row and
/// bound satisfies it with zero tolerance, and `objective` equals
/// `dual_objective` exactly.
struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    std::vector<Rational> values;        // one per variable
    std::vector<Rational> row_duals;     // one per row
    std::vector<Rational> reduced_costs; // one per variable
    Rational dual_objective;
    std::vector<int> basis;              // basic variable indices; >= num_vars means row slack
    std::int64_t iterations = 0;
};

struct SimplexOptions {
    /// Dantzig (most negative reduced cost) pivots before switching to
    /// Bland's rule, which guarantees termination.
    std::int64_t dantzig_pivot_limit = 20000;
    int refactor_interval = 64;
};

/// Exact primal simplex over the rationals; two phases, bounded variables,
/// product-form basis updates. Deterministic.
LpSolution lp_solve(const LpModel& model, const SimplexOptions& options = {});

struct IlpResult {
    enum class Status { Optimal, Infeasible, Unbounded, TimeLimit };
    Status status = Status::Infeasible;
    bool has_incumbent = false;
    Rational objective;                   // incumbent objective, if any
    std::vector<Rational> values;         // incumbent point, integral on integer vars
    std::optional<Rational> dual_bound;   // global lower bound; empty if root LP unfinished
    std::int64_t nodes_explored = 0;
};

/// Depth-first branch and bound on the exact LP relaxation. Branches on the
/// most fractional integer variable (ties by lowest index), floor child
/// first. Integer variables must have finite bounds. On timeout, reports the
/// best incumbent and the global dual bound.
IlpResult ilp_solve(const LpModel& model, const std::vector<int>& integer_vars,
                    std::chrono::duration<double> time_limit = std::chrono::duration<double>(3600.0),
                    const SimplexOptions& options = {});

}  // namespace ddchrom
