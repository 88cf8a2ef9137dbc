#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "ddchrom/bruteforce.hpp"
#include "ddchrom/lp.hpp"

namespace ddchrom {

namespace {

constexpr int kEnumerationGuard = 30;
constexpr int kChromaticGuard = 20;

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(g.vertex_count(), 0);
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) adj[u] |= std::uint64_t(1) << v;
    return adj;
}

}  // namespace

std::vector<std::vector<int>> enumerate_stable_sets(const Graph& g, bool maximal_only) {
    const int n = g.vertex_count();
    if (n > kEnumerationGuard)
        throw std::domain_error("enumerate_stable_sets: size guard exceeded (n > 30)");
    const auto adj = adjacency_masks(g);
    const std::uint64_t full = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;

    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // preorder over increasing vertex ids = lexicographic by sorted elements
    auto rec = [&](auto&& self, int start, std::uint64_t members, std::uint64_t dominated) -> void {
        if (!maximal_only || dominated == full) out.push_back(cur);
        for (int v = start; v < n; ++v) {
            if (members & adj[v]) continue;
            cur.push_back(v);
            self(self, v + 1, members | (std::uint64_t(1) << v), dominated | adj[v] | (std::uint64_t(1) << v));
            cur.pop_back();
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

std::uint64_t count_stable_sets(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kEnumerationGuard)
        throw std::domain_error("count_stable_sets: size guard exceeded (n > 30)");
    const auto adj = adjacency_masks(g);
    std::uint64_t count = 0;
    auto rec = [&](auto&& self, int start, std::uint64_t members) -> void {
        ++count;
        for (int v = start; v < n; ++v) {
            if (members & adj[v]) continue;
            self(self, v + 1, members | (std::uint64_t(1) << v));
        }
    };
    rec(rec, 0, 0);
    return count;
}

FractionalChromaticResult brute_force_fractional_chromatic(const Graph& g, bool maximal_only) {
    const int n = g.vertex_count();
    FractionalChromaticResult res;
    if (n == 0) {
        res.value = Rational(0);
        return res;
    }
    auto sets = enumerate_stable_sets(g, maximal_only);
    std::erase_if(sets, [](const auto& s) { return s.empty(); });

    LpModel lp;
    for (size_t s = 0; s < sets.size(); ++s)
        lp.add_variable(Rational(0), Rational(1), Rational(1));
    std::vector<std::vector<std::pair<int, Rational>>> row_coeffs(n);
    for (size_t s = 0; s < sets.size(); ++s)
        for (int v : sets[s]) row_coeffs[v].emplace_back(static_cast<int>(s), Rational(1));
    for (int v = 0; v < n; ++v)
        lp.add_row(std::move(row_coeffs[v]), RowSense::GreaterEqual, Rational(1));

    const LpSolution sol = lp_solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw std::logic_error("set-cover LP must be feasible and bounded");
    res.value = sol.objective;
    for (size_t s = 0; s < sets.size(); ++s)
        if (sol.values[s].sign() > 0)
            res.cover.entries.push_back({sets[s], sol.values[s]});
    return res;
}

namespace {

struct ColoringSearch {
    const Graph& g;
    int k = 0;
    std::vector<int> color;
    int max_used = -1;

    bool dfs(int colored) {
        const int n = g.vertex_count();
        if (colored == n) return true;
        // most constrained vertex first: fewest allowed colors, then highest
        // degree, then lowest id
        int pick = -1, pick_feasible = 0;
        std::uint32_t pick_mask = 0;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            std::uint32_t neighbor_colors = 0;
            for (int u : g.neighbors(v))
                if (color[u] >= 0) neighbor_colors |= std::uint32_t(1) << color[u];
            const int cap = std::min(k, max_used + 2);
            const std::uint32_t feas = ~neighbor_colors & ((std::uint32_t(1) << cap) - 1);
            const int nfeas = std::popcount(feas);
            if (nfeas == 0) return false;
            if (pick < 0 || nfeas < pick_feasible ||
                (nfeas == pick_feasible && g.degree(v) > g.degree(pick))) {
                pick = v;
                pick_feasible = nfeas;
                pick_mask = feas;
            }
        }
        for (std::uint32_t m = pick_mask; m != 0; m &= m - 1) {
            const int c = std::countr_zero(m);
            const int old_max = max_used;
            color[pick] = c;
            max_used = std::max(max_used, c);
            if (dfs(colored + 1)) return true;
            color[pick] = -1;
            max_used = old_max;
        }
        return false;
    }
};

std::vector<int> greedy_clique(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&g](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    std::vector<int> best;
    for (int start : order) {
        std::vector<int> clique{start};
        for (int u : order) {
            if (u == start) continue;
            bool ok = true;
            for (int w : clique)
                if (!g.adjacent(u, w)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(u);
        }
        if (clique.size() > best.size()) best = clique;
    }
    return best;
}

int greedy_coloring_bound(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&g](int a, int b) {
        return g.degree(a) > g.degree(b);
    });
    std::vector<int> color(n, -1);
    int used = 0;
    for (int v : order) {
        std::uint32_t taken = 0;
        for (int u : g.neighbors(v))
            if (color[u] >= 0) taken |= std::uint32_t(1) << color[u];
        int c = std::countr_one(taken);
        color[v] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

bool k_colorable(const Graph& g, int k, const std::vector<int>& clique) {
    if (static_cast<int>(clique.size()) > k) return false;
    ColoringSearch search{g, k, std::vector<int>(g.vertex_count(), -1), -1};
    for (size_t i = 0; i < clique.size(); ++i) {
        search.color[clique[i]] = static_cast<int>(i);
        search.max_used = static_cast<int>(i);
    }
    return search.dfs(static_cast<int>(clique.size()));
}

}  // namespace

int brute_force_chromatic_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kChromaticGuard)
        throw std::domain_error("brute_force_chromatic_number: size guard exceeded (n > 20)");
    if (n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    const std::vector<int> clique = greedy_clique(g);
    const int ub = greedy_coloring_bound(g);
    for (int k = static_cast<int>(clique.size()); k < ub; ++k)
        if (k_colorable(g, k, clique)) return k;
    return ub;
}

}  // namespace ddchrom
