#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ddchrom/lp.hpp"

namespace ddchrom {

// Bounded-variable primal simplex over exact rationals, shared by lp_solve
// and the branch-and-bound driver. The basis inverse is kept as a product
// of eta matrices, rebuilt from scratch every refactor_interval pivots.
class SimplexSolver {
public:
    enum class Run { Optimal, Infeasible, Unbounded, Aborted };
    using Clock = std::chrono::steady_clock;

    SimplexSolver(const LpModel& model, SimplexOptions opts);

    void set_var_bounds(int var, const Rational& lo, const std::optional<Rational>& up);
    void reset_var_bounds();

    /// warm == true reuses the current basis (bounds may have changed since).
    Run solve(const Clock::time_point* deadline, bool warm);

    Rational value_of(int var) const;
    Rational objective_value() const;
    void extract(LpSolution& out) const;
    std::int64_t iterations() const { return iterations_; }
    int num_structural() const { return nstruct_; }

private:
    enum class VarState : std::uint8_t { Basic, AtLower, AtUpper };
    struct Bound {
        bool lo_finite = true;
        Rational lo;
        bool up_finite = false;
        Rational up;
    };
    struct Eta {
        int slot = -1;
        Rational pivot;
        std::vector<std::pair<int, Rational>> others;
    };

    static constexpr std::int64_t kIterationSafetyCap = 200'000'000;

    void reset_basis();
    Rational nb_value(int var) const;
    void ftran(std::vector<Rational>& v) const;
    void btran(std::vector<Rational>& v) const;
    void compute_basic_values();
    void push_eta(int slot, const std::vector<Rational>& dense);
    void refactorize();
    bool is_fixed(int var) const;
    int violation_direction(int slot) const;
    bool has_violation() const;
    Run phase_loop(bool phase1, const Clock::time_point* deadline);

    SimplexOptions opts_;
    int m_ = 0;        // rows
    int nstruct_ = 0;  // structural variables
    int ncols_ = 0;    // structural + slacks

    std::vector<std::vector<std::pair<int, Rational>>> cols_;
    std::vector<Rational> rhs_;
    std::vector<Rational> cost_;
    std::vector<Bound> model_bounds_;
    std::vector<Bound> bounds_;

    std::vector<int> basic_var_;     // slot -> variable
    std::vector<int> pos_in_basis_;  // variable -> slot, -1 if nonbasic
    std::vector<VarState> state_;
    std::vector<Rational> xb_;  // basic values by slot

    std::vector<Eta> etas_;
    int base_eta_count_ = 0;

    std::int64_t pivots_ = 0;      // per solve, drives the Dantzig->Bland switch
    std::int64_t iterations_ = 0;  // lifetime
};

}  // namespace ddchrom
