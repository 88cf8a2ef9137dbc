#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "ddchrom/lp.hpp"
#include "simplex_solver.hpp"

namespace ddchrom {

SimplexSolver::SimplexSolver(const LpModel& model, SimplexOptions opts)
    : opts_(opts) {
    model.validate();
    nstruct_ = model.num_vars;
    m_ = static_cast<int>(model.rows.size());
    ncols_ = nstruct_ + m_;
    cols_.resize(ncols_);
    cost_.assign(ncols_, Rational(0));
    for (int j = 0; j < nstruct_; ++j) cost_[j] = model.objective[j];
    rhs_.resize(m_);

    // structural columns, duplicate coefficients merged
    std::vector<std::vector<std::pair<int, Rational>>> col_entries(nstruct_);
    for (int i = 0; i < m_; ++i) {
        const auto& row = model.rows[i];
        rhs_[i] = row.rhs;
        for (const auto& [j, a] : row.coeffs) col_entries[j].emplace_back(i, a);
    }
    for (int j = 0; j < nstruct_; ++j) {
        auto& entries = col_entries[j];
        std::sort(entries.begin(), entries.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        auto& col = cols_[j];
        for (auto& e : entries) {
            if (!col.empty() && col.back().first == e.first)
                col.back().second += e.second;
            else
                col.push_back(e);
        }
        std::erase_if(col, [](const auto& e) { return e.second.is_zero(); });
    }

    // one slack per row; its bounds encode the row sense (row written as
    // a.x + s = b)
    model_bounds_.resize(ncols_);
    for (int j = 0; j < nstruct_; ++j) {
        Bound b;
        b.lo_finite = true;
        b.lo = model.lower[j];
        if (model.upper[j]) {
            b.up_finite = true;
            b.up = *model.upper[j];
        }
        model_bounds_[j] = b;
    }
    for (int i = 0; i < m_; ++i) {
        const int sj = nstruct_ + i;
        cols_[sj].emplace_back(i, Rational(1));
        Bound b;
        switch (model.rows[i].sense) {
            case RowSense::LessEqual:
                b.lo_finite = true;
                b.lo = 0;
                b.up_finite = false;
                break;
            case RowSense::GreaterEqual:
                b.lo_finite = false;
                b.up_finite = true;
                b.up = 0;
                break;
            case RowSense::Equal:
                b.lo_finite = true;
                b.lo = 0;
                b.up_finite = true;
                b.up = 0;
                break;
        }
        model_bounds_[sj] = b;
    }
    bounds_ = model_bounds_;
    state_.assign(ncols_, VarState::AtLower);
    basic_var_.assign(m_, -1);
    pos_in_basis_.assign(ncols_, -1);
    xb_.assign(m_, Rational(0));
    reset_basis();
}

void SimplexSolver::set_var_bounds(int var, const Rational& lo,
                                   const std::optional<Rational>& up) {
    Bound b;
    b.lo_finite = true;
    b.lo = lo;
    if (up) {
        b.up_finite = true;
        b.up = *up;
    }
    bounds_[var] = b;
}

void SimplexSolver::reset_var_bounds() {
    std::copy(model_bounds_.begin(), model_bounds_.begin() + nstruct_, bounds_.begin());
}

void SimplexSolver::reset_basis() {
    etas_.clear();
    for (int j = 0; j < ncols_; ++j) {
        pos_in_basis_[j] = -1;
        state_[j] = bounds_[j].lo_finite ? VarState::AtLower : VarState::AtUpper;
    }
    for (int i = 0; i < m_; ++i) {
        basic_var_[i] = nstruct_ + i;
        pos_in_basis_[nstruct_ + i] = i;
        state_[nstruct_ + i] = VarState::Basic;
    }
}

Rational SimplexSolver::nb_value(int var) const {
    const Bound& b = bounds_[var];
    if (state_[var] == VarState::AtLower) return b.lo;
    return b.up;
}

void SimplexSolver::ftran(std::vector<Rational>& v) const {
    for (const Eta& e : etas_) {
        Rational& vp = v[e.slot];
        if (vp.is_zero()) continue;
        const Rational t = vp / e.pivot;
        for (const auto& [r, dv] : e.others) v[r] -= t * dv;
        vp = t;
    }
}

void SimplexSolver::btran(std::vector<Rational>& v) const {
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
        Rational t = v[it->slot];
        for (const auto& [r, dv] : it->others)
            if (!v[r].is_zero()) t -= dv * v[r];
        v[it->slot] = t / it->pivot;
    }
}

void SimplexSolver::compute_basic_values() {
    std::vector<Rational> v = rhs_;
    for (int j = 0; j < ncols_; ++j) {
        if (state_[j] == VarState::Basic) continue;
        const Rational val = nb_value(j);
        if (val.is_zero()) continue;
        for (const auto& [i, a] : cols_[j]) v[i] -= a * val;
    }
    ftran(v);
    xb_ = std::move(v);
}

void SimplexSolver::push_eta(int slot, const std::vector<Rational>& dense) {
    Eta e;
    e.slot = slot;
    e.pivot = dense[slot];
    for (int i = 0; i < m_; ++i)
        if (i != slot && !dense[i].is_zero()) e.others.emplace_back(i, dense[i]);
    etas_.push_back(std::move(e));
}

void SimplexSolver::refactorize() {
    etas_.clear();
    std::vector<int> members = basic_var_;
    std::vector<char> slot_used(m_, 0);
    std::fill(basic_var_.begin(), basic_var_.end(), -1);

    // slack members keep their own row as slot; their eta is the identity
    std::vector<int> structural;
    for (int var : members) {
        if (var >= nstruct_) {
            const int r = var - nstruct_;
            basic_var_[r] = var;
            pos_in_basis_[var] = r;
            slot_used[r] = 1;
        } else {
            structural.push_back(var);
        }
    }
    std::sort(structural.begin(), structural.end(), [this](int a, int b) {
        if (cols_[a].size() != cols_[b].size()) return cols_[a].size() < cols_[b].size();
        return a < b;
    });
    std::vector<Rational> d(m_);
    for (int var : structural) {
        std::fill(d.begin(), d.end(), Rational(0));
        for (const auto& [i, a] : cols_[var]) d[i] = a;
        ftran(d);
        int slot = -1;
        for (int p = 0; p < m_; ++p) {
            if (slot_used[p] || d[p].is_zero()) continue;
            if (slot < 0) slot = p;
            if (abs(d[p]) == Rational(1)) {
                slot = p;
                break;
            }
        }
        if (slot < 0) throw std::logic_error("simplex: singular basis in refactorization");
        push_eta(slot, d);
        slot_used[slot] = 1;
        basic_var_[slot] = var;
        pos_in_basis_[var] = slot;
    }
    base_eta_count_ = static_cast<int>(etas_.size());
    compute_basic_values();
}

bool SimplexSolver::is_fixed(int var) const {
    const Bound& b = bounds_[var];
    return b.lo_finite && b.up_finite && b.lo == b.up;
}

int SimplexSolver::violation_direction(int slot) const {
    const Bound& b = bounds_[basic_var_[slot]];
    if (b.up_finite && xb_[slot] > b.up) return +1;
    if (b.lo_finite && xb_[slot] < b.lo) return -1;
    return 0;
}

bool SimplexSolver::has_violation() const {
    for (int i = 0; i < m_; ++i)
        if (violation_direction(i) != 0) return true;
    return false;
}

// One simplex phase. In phase 1 the cost is +1/-1 on basic variables outside
// their bounds and the loop ends once all basics are inside; in phase 2 it is
// the model objective.
SimplexSolver::Run SimplexSolver::phase_loop(bool phase1, const Clock::time_point* deadline) {
    std::vector<Rational> y(m_), w(m_);
    for (;;) {
        if (deadline && (iterations_ & 63) == 0 && Clock::now() > *deadline)
            return Run::Aborted;

        if (phase1 && !has_violation()) return Run::Optimal;

        // duals for the phase cost
        for (int i = 0; i < m_; ++i) {
            if (phase1)
                y[i] = Rational(violation_direction(i));
            else
                y[i] = cost_[basic_var_[i]];
        }
        btran(y);

        const bool bland = pivots_ >= opts_.dantzig_pivot_limit;
        int enter = -1;
        int sigma = 0;
        Rational best_score;
        for (int j = 0; j < ncols_; ++j) {
            if (state_[j] == VarState::Basic || is_fixed(j)) continue;
            Rational d = phase1 ? Rational(0) : cost_[j];
            for (const auto& [i, a] : cols_[j]) {
                if (!y[i].is_zero()) d -= y[i] * a;
            }
            int dir = 0;
            if (state_[j] == VarState::AtLower && d.sign() < 0) dir = +1;
            else if (state_[j] == VarState::AtUpper && d.sign() > 0) dir = -1;
            if (dir == 0) continue;
            if (bland) {
                enter = j;
                sigma = dir;
                break;
            }
            Rational score = abs(d);
            if (enter < 0 || score > best_score) {
                enter = j;
                sigma = dir;
                best_score = score;
            }
        }
        if (enter < 0) {
            // no improving column: phase-1 stuck with violations means the
            // model is infeasible
            return phase1 ? Run::Infeasible : Run::Optimal;
        }

        std::fill(w.begin(), w.end(), Rational(0));
        for (const auto& [i, a] : cols_[enter]) w[i] = a;
        ftran(w);

        // ratio test
        bool have_block = false;
        Rational t_block;
        int block_slot = -1;
        bool block_to_upper = false;
        Rational block_pivot_abs;
        for (int i = 0; i < m_; ++i) {
            if (w[i].is_zero()) continue;
            const Rational rate = Rational(-sigma) * w[i];
            const int viol = phase1 ? violation_direction(i) : 0;
            const Bound& b = bounds_[basic_var_[i]];
            Rational tc;
            bool to_upper = false;
            if (viol > 0) {
                // above its upper bound; blocks only when moving down to it
                if (rate.sign() >= 0) continue;
                tc = (xb_[i] - b.up) / -rate;
                to_upper = true;
            } else if (viol < 0) {
                if (rate.sign() <= 0) continue;
                tc = (b.lo - xb_[i]) / rate;
                to_upper = false;
            } else if (rate.sign() > 0) {
                if (!b.up_finite) continue;
                tc = (b.up - xb_[i]) / rate;
                to_upper = true;
            } else {
                if (!b.lo_finite) continue;
                tc = (xb_[i] - b.lo) / -rate;
                to_upper = false;
            }
            bool better;
            if (!have_block) {
                better = true;
            } else if (tc != t_block) {
                better = tc < t_block;
            } else if (bland) {
                better = basic_var_[i] < basic_var_[block_slot];
            } else {
                better = abs(w[i]) > block_pivot_abs;
            }
            if (better) {
                have_block = true;
                t_block = tc;
                block_slot = i;
                block_to_upper = to_upper;
                block_pivot_abs = abs(w[i]);
            }
        }
        const Bound& eb = bounds_[enter];
        const bool own_finite = eb.lo_finite && eb.up_finite;
        Rational t_own;
        if (own_finite) t_own = eb.up - eb.lo;

        if (!have_block && !own_finite) {
            if (phase1) throw std::logic_error("simplex: unbounded phase-1 step");
            return Run::Unbounded;
        }

        const bool flip = own_finite && (!have_block || t_own <= t_block);
        const Rational t = flip ? t_own : t_block;

        if (!t.is_zero()) {
            for (int i = 0; i < m_; ++i) {
                if (w[i].is_zero()) continue;
                xb_[i] += Rational(-sigma) * w[i] * t;
            }
        }
        if (flip) {
            state_[enter] =
                state_[enter] == VarState::AtLower ? VarState::AtUpper : VarState::AtLower;
        } else {
            const int leave = basic_var_[block_slot];
            const Rational enter_value = nb_value(enter) + Rational(sigma) * t;
            state_[leave] = block_to_upper ? VarState::AtUpper : VarState::AtLower;
            pos_in_basis_[leave] = -1;
            basic_var_[block_slot] = enter;
            pos_in_basis_[enter] = block_slot;
            state_[enter] = VarState::Basic;
            xb_[block_slot] = enter_value;
            push_eta(block_slot, w);
            if (static_cast<int>(etas_.size()) - base_eta_count_ > opts_.refactor_interval)
                refactorize();
        }
        ++pivots_;
        ++iterations_;
        if (iterations_ > kIterationSafetyCap)
            throw std::logic_error("simplex: iteration safety cap exceeded");
    }
}

SimplexSolver::Run SimplexSolver::solve(const Clock::time_point* deadline, bool warm) {
    pivots_ = 0;
    if (!warm) reset_basis();

    // box infeasibility and stale nonbasic states after bound changes
    for (int j = 0; j < ncols_; ++j) {
        const Bound& b = bounds_[j];
        if (b.lo_finite && b.up_finite && b.lo > b.up) return Run::Infeasible;
        if (state_[j] == VarState::Basic) continue;
        if (state_[j] == VarState::AtLower && !b.lo_finite) state_[j] = VarState::AtUpper;
        if (state_[j] == VarState::AtUpper && !b.up_finite) state_[j] = VarState::AtLower;
    }
    compute_basic_values();

    if (has_violation()) {
        const Run r = phase_loop(true, deadline);
        if (r != Run::Optimal) return r;
    }
    return phase_loop(false, deadline);
}

Rational SimplexSolver::value_of(int var) const {
    if (state_[var] == VarState::Basic) return xb_[pos_in_basis_[var]];
    return nb_value(var);
}

Rational SimplexSolver::objective_value() const {
    Rational obj(0);
    for (int j = 0; j < nstruct_; ++j) {
        if (cost_[j].is_zero()) continue;
        obj += cost_[j] * value_of(j);
    }
    return obj;
}

void SimplexSolver::extract(LpSolution& out) const {
    out.values.resize(nstruct_);
    for (int j = 0; j < nstruct_; ++j) out.values[j] = value_of(j);
    out.objective = objective_value();

    std::vector<Rational> y(m_);
    for (int i = 0; i < m_; ++i) y[i] = cost_[basic_var_[i]];
    btran(y);
    out.row_duals = y;

    out.reduced_costs.resize(nstruct_);
    Rational dual_obj(0);
    for (int i = 0; i < m_; ++i)
        if (!y[i].is_zero()) dual_obj += y[i] * rhs_[i];
    for (int j = 0; j < ncols_; ++j) {
        Rational d = cost_[j];
        for (const auto& [i, a] : cols_[j])
            if (!y[i].is_zero()) d -= y[i] * a;
        if (j < nstruct_) out.reduced_costs[j] = d;
        if (state_[j] != VarState::Basic && !d.is_zero()) {
            const Rational v = nb_value(j);
            if (!v.is_zero()) dual_obj += d * v;
        }
    }
    out.dual_objective = dual_obj;
    out.basis = basic_var_;
    out.iterations = iterations_;
}

LpSolution lp_solve(const LpModel& model, const SimplexOptions& options) {
    SimplexSolver solver(model, options);
    const SimplexSolver::Run run = solver.solve(nullptr, /*warm=*/false);
    LpSolution sol;
    sol.iterations = solver.iterations();
    switch (run) {
        case SimplexSolver::Run::Optimal:
            sol.status = LpStatus::Optimal;
            solver.extract(sol);
            break;
        case SimplexSolver::Run::Infeasible:
            sol.status = LpStatus::Infeasible;
            break;
        case SimplexSolver::Run::Unbounded:
            sol.status = LpStatus::Unbounded;
            break;
        case SimplexSolver::Run::Aborted:
            throw std::logic_error("lp_solve: aborted without a deadline");
    }
    return sol;
}

}  // namespace ddchrom
