#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "ddchrom/bruteforce.hpp"
#include "ddchrom/dd.hpp"

namespace ddchrom {

namespace {

struct StateHash {
    std::size_t operator()(const NodeState& s) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        std::vector<std::uint64_t> blocks(s.num_blocks());
        boost::to_block_range(s, blocks.begin());
        for (std::uint64_t b : blocks) {
            h ^= b;
            h *= 0x100000001b3ULL;
        }
        return h;
    }
};

}  // namespace

std::span<const int> DecisionDiagram::out_arcs(int node) const {
    return {out_ids_.data() + out_start_[node], out_ids_.data() + out_start_[node + 1]};
}

std::span<const int> DecisionDiagram::in_arcs(int node) const {
    return {in_ids_.data() + in_start_[node], in_ids_.data() + in_start_[node + 1]};
}

void DecisionDiagram::freeze() {
    const int nn = node_count();
    out_start_.assign(nn + 1, 0);
    in_start_.assign(nn + 1, 0);
    for (const DdArc& a : arcs_) {
        ++out_start_[a.tail + 1];
        ++in_start_[a.head + 1];
    }
    for (int i = 0; i < nn; ++i) {
        out_start_[i + 1] += out_start_[i];
        in_start_[i + 1] += in_start_[i];
    }
    out_ids_.resize(arcs_.size());
    in_ids_.resize(arcs_.size());
    std::vector<int> op(out_start_.begin(), out_start_.end() - 1);
    std::vector<int> ip(in_start_.begin(), in_start_.end() - 1);
    for (int a = 0; a < arc_count(); ++a) {
        out_ids_[op[arcs_[a].tail]++] = a;
        in_ids_[ip[arcs_[a].head]++] = a;
    }
}

DecisionDiagram DecisionDiagram::from_raw_parts(std::vector<std::vector<int>> layers,
                                                std::vector<int> node_layer,
                                                std::vector<NodeState> node_state,
                                                std::vector<DdArc> arcs,
                                                VertexOrdering ordering) {
    DecisionDiagram d(std::move(ordering));
    d.layers_ = std::move(layers);
    d.node_layer_ = std::move(node_layer);
    d.node_state_ = std::move(node_state);
    d.arcs_ = std::move(arcs);
    d.freeze();
    return d;
}

DecisionDiagram compile_exact_diagram(const Graph& g, const VertexOrdering& ordering,
                                      std::int64_t node_limit) {
    const int n = g.vertex_count();
    if (n == 0)
        throw std::invalid_argument("compile_exact_diagram: empty graph has no layers");
    if (ordering.size() != n)
        throw std::invalid_argument("compile_exact_diagram: ordering size mismatch");
    if (node_limit < 1)
        throw std::invalid_argument("compile_exact_diagram: node limit must be >= 1");

    std::vector<NodeState> neighbor_mask(n, NodeState(n));
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) neighbor_mask[u].set(v);

    DecisionDiagram d(ordering);
    d.layers_.resize(n + 1);

    auto add_node = [&d](int layer, NodeState state) {
        const int id = d.node_count();
        d.node_layer_.push_back(layer);
        d.node_state_.push_back(std::move(state));
        d.layers_[layer - 1].push_back(id);
        return id;
    };

    NodeState root_state(n);
    root_state.set();  // nothing decided: every vertex is still eligible
    add_node(1, std::move(root_state));

    for (int j = 1; j <= n; ++j) {
        const int decided = ordering.vertex_at_layer(j);
        std::unordered_map<NodeState, int, StateHash> next_ids;
        const bool terminal_layer = (j == n);
        int terminal_id = -1;
        auto child = [&](NodeState state) {
            if (terminal_layer) {
                // layer n+1 decides nothing; all residual states collapse
                if (terminal_id < 0) terminal_id = add_node(j + 1, NodeState(n));
                return terminal_id;
            }
            auto it = next_ids.find(state);
            if (it != next_ids.end()) return it->second;
            const int id = add_node(j + 1, state);
            next_ids.emplace(std::move(state), id);
            return id;
        };
        for (const int u : d.layers_[j - 1]) {
            NodeState zero_state = d.node_state_[u];
            const bool one_arc = zero_state.test(decided);
            zero_state.reset(decided);
            if (one_arc) {
                NodeState one_state = zero_state - neighbor_mask[decided];
                d.arcs_.push_back({u, static_cast<std::int32_t>(child(std::move(one_state))),
                                   std::uint8_t{1}});
            }
            d.arcs_.push_back({u, static_cast<std::int32_t>(child(std::move(zero_state))),
                               std::uint8_t{0}});
        }
        if (d.node_count() > node_limit)
            throw NodeLimitExceeded(j + 1, d.node_count());
    }
    d.freeze();
    return d;
}

Integer count_paths(const DecisionDiagram& d) {
    std::vector<Integer> paths_to_t(d.node_count(), 0);
    paths_to_t[d.terminal()] = 1;
    for (int layer = d.layer_count() - 1; layer >= 1; --layer) {
        for (int u : d.layers()[layer - 1]) {
            if (u == d.terminal()) continue;
            Integer total = 0;
            for (int a : d.out_arcs(u)) total += paths_to_t[d.arcs()[a].head];
            paths_to_t[u] = total;
        }
    }
    return paths_to_t[d.root()];
}

std::vector<std::vector<int>> enumerate_paths(const DecisionDiagram& d, std::int64_t limit) {
    const Integer total = count_paths(d);
    if (total > limit)
        throw PathLimitExceeded("enumerate_paths: " + total.get_str() +
                                " paths exceed limit " + std::to_string(limit));
    std::vector<std::vector<int>> out;
    out.reserve(total.get_ui());
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int node) -> void {
        if (node == d.terminal()) {
            std::vector<int> set = chosen;
            std::sort(set.begin(), set.end());
            out.push_back(std::move(set));
            return;
        }
        for (int a : d.out_arcs(node)) {
            const DdArc& arc = d.arcs()[a];
            if (arc.label == 1) chosen.push_back(d.ordering().vertex_at_layer(d.node_layer(node)));
            self(self, arc.head);
            if (arc.label == 1) chosen.pop_back();
        }
    };
    rec(rec, d.root());
    return out;
}

DdValidationReport validate_diagram(const DecisionDiagram& d, const Graph& g,
                                    std::int64_t semantic_cap) {
    DdValidationReport rep;
    auto fail = [&rep](std::string msg) { rep.violations.push_back(std::move(msg)); };

    const int n = g.vertex_count();
    if (d.layer_count() != n + 1) {
        fail("layer count != n+1");
        return rep;
    }
    if (d.layers().front().size() != 1) fail("first layer must hold exactly the root");
    if (d.layers().back().size() != 1) fail("last layer must hold exactly the terminal");

    for (int layer = 1; layer <= d.layer_count(); ++layer)
        for (int u : d.layers()[layer - 1])
            if (d.node_layer(u) != layer)
                fail("node " + std::to_string(u) + " filed under wrong layer");

    for (int a = 0; a < d.arc_count(); ++a) {
        const DdArc& arc = d.arcs()[a];
        if (arc.tail < 0 || arc.tail >= d.node_count() || arc.head < 0 ||
            arc.head >= d.node_count()) {
            fail("arc " + std::to_string(a) + " endpoint out of range");
            continue;
        }
        if (d.node_layer(arc.head) != d.node_layer(arc.tail) + 1)
            fail("arc " + std::to_string(a) + " does not go to the next layer");
        if (arc.label > 1) fail("arc " + std::to_string(a) + " has label outside {0,1}");
    }

    for (int u = 0; u < d.node_count(); ++u) {
        if (u == d.terminal()) {
            if (!d.out_arcs(u).empty()) fail("terminal has outgoing arcs");
            continue;
        }
        int zeros = 0, ones = 0;
        for (int a : d.out_arcs(u)) (d.arcs()[a].label == 0 ? zeros : ones)++;
        if (zeros != 1)
            fail("node " + std::to_string(u) + " has " + std::to_string(zeros) +
                 " outgoing 0-arcs (want exactly 1)");
        if (ones > 1) fail("node " + std::to_string(u) + " has multiple outgoing 1-arcs");
    }

    for (int layer = 1; layer <= d.layer_count(); ++layer) {
        std::unordered_map<NodeState, int, StateHash> seen;
        for (int u : d.layers()[layer - 1]) {
            auto [it, fresh] = seen.emplace(d.node_state(u), u);
            if (!fresh)
                fail("layer " + std::to_string(layer) + ": nodes " + std::to_string(it->second) +
                     " and " + std::to_string(u) + " share a state (not reduced)");
        }
    }

    // every node and arc must lie on some r-t path; sweep arcs by tail layer
    // so this works for arbitrary arc order in injected diagrams
    std::vector<int> by_layer(d.arc_count());
    for (int a = 0; a < d.arc_count(); ++a) by_layer[a] = a;
    std::stable_sort(by_layer.begin(), by_layer.end(), [&d](int a, int b) {
        return d.node_layer(d.arcs()[a].tail) < d.node_layer(d.arcs()[b].tail);
    });
    std::vector<char> fwd(d.node_count(), 0), bwd(d.node_count(), 0);
    fwd[d.root()] = 1;
    for (int a : by_layer)
        if (fwd[d.arcs()[a].tail]) fwd[d.arcs()[a].head] = 1;
    bwd[d.terminal()] = 1;
    for (auto it = by_layer.rbegin(); it != by_layer.rend(); ++it)
        if (bwd[d.arcs()[*it].head]) bwd[d.arcs()[*it].tail] = 1;
    for (int u = 0; u < d.node_count(); ++u)
        if (!fwd[u] || !bwd[u]) fail("node " + std::to_string(u) + " is not on any r-t path");

    if (NodeState full = NodeState(n).set(); d.node_state(d.root()) != full)
        fail("root state is not the full eligible set");
    if (d.node_state(d.terminal()).any()) fail("terminal state is not canonical-empty");

    if (!rep.pass()) return rep;

    if (n <= 30) {
        const Integer paths = count_paths(d);
        if (paths <= semantic_cap) {
            rep.semantic_checked = true;
            auto enumerated = enumerate_paths(d, semantic_cap);
            for (const auto& set : enumerated)
                for (size_t i = 0; i < set.size(); ++i)
                    for (size_t k = i + 1; k < set.size(); ++k)
                        if (g.adjacent(set[i], set[k])) {
                            fail("path set {" + std::to_string(set[i] + 1) + "," +
                                 std::to_string(set[k] + 1) + ",...} is not stable");
                            i = set.size();
                            break;
                        }
            std::sort(enumerated.begin(), enumerated.end());
            if (std::adjacent_find(enumerated.begin(), enumerated.end()) != enumerated.end())
                fail("two r-t paths encode the same vertex set");
            if (Integer(count_stable_sets(g)) != paths)
                fail("path count " + paths.get_str() + " != stable-set count " +
                     std::to_string(count_stable_sets(g)));
        }
    }
    return rep;
}

std::string dump_diagram(const DecisionDiagram& d) {
    std::ostringstream os;
    for (int u = 0; u < d.node_count(); ++u) {
        std::string hex = "0";
        if (d.node_state(u).any()) {
            Integer big = 0;
            std::vector<std::uint64_t> blocks(d.node_state(u).num_blocks());
            boost::to_block_range(d.node_state(u), blocks.begin());
            for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
                big <<= 64;
                big += Integer(static_cast<unsigned long>(*it));
            }
            hex = big.get_str(16);
        }
        os << "node " << u << " " << d.node_layer(u) << " " << hex << "\n";
    }
    for (const DdArc& a : d.arcs())
        os << "arc " << a.tail << " " << a.head << " " << int(a.label) << "\n";
    return os.str();
}

}  // namespace ddchrom
