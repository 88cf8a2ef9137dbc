#include <algorithm>
#include <map>
#include <sstream>

#include "ddchrom/cover.hpp"

namespace ddchrom {

Rational WeightedCover::total_weight() const {
    Rational t(0);
    for (const auto& e : entries) t += e.weight;
    return t;
}

void WeightedCover::merge_duplicates() {
    std::map<std::vector<int>, size_t> first_at;
    std::vector<Entry> merged;
    for (const auto& e : entries) {
        std::vector<int> key = e.set;
        std::sort(key.begin(), key.end());
        auto [it, fresh] = first_at.emplace(std::move(key), merged.size());
        if (fresh) {
            merged.push_back(e);
            std::sort(merged.back().set.begin(), merged.back().set.end());
        } else {
            merged[it->second].weight += e.weight;
        }
    }
    std::erase_if(merged, [](const Entry& e) { return e.weight.is_zero(); });
    entries = std::move(merged);
}

std::string WeightedCover::to_text() const {
    std::ostringstream os;
    for (const auto& e : entries) {
        os << "w=" << e.weight.to_fraction_string() << " S={";
        for (size_t i = 0; i < e.set.size(); ++i)
            os << (i ? "," : "") << (e.set[i] + 1);
        os << "}\n";
    }
    os << "total=" << total_weight().to_fraction_string() << "\n";
    return os.str();
}

WeightedCover WeightedCover::from_text(const std::string& text) {
    WeightedCover cover;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.rfind("total=", 0) == 0) continue;
        const auto err = [&lineno](const std::string& what) {
            return std::invalid_argument("cover text, line " + std::to_string(lineno) + ": " + what);
        };
        if (line.rfind("w=", 0) != 0) throw err("expected 'w=<p>/<q> S={...}'");
        const auto sp = line.find(" S={");
        if (sp == std::string::npos || line.back() != '}') throw err("missing 'S={...}'");
        Entry e;
        e.weight = Rational::from_string(line.substr(2, sp - 2));
        std::string body = line.substr(sp + 4, line.size() - sp - 5);
        std::istringstream items(body);
        std::string tok;
        while (std::getline(items, tok, ',')) {
            if (tok.empty()) continue;
            e.set.push_back(std::stoi(tok) - 1);
        }
        std::sort(e.set.begin(), e.set.end());
        cover.entries.push_back(std::move(e));
    }
    return cover;
}

bool is_proper_coloring(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.color.size()) != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.color[v] < 0 || c.color[v] >= c.color_count) return false;
    for (auto [u, v] : g.edge_list())
        if (c.color[u] == c.color[v]) return false;
    return true;
}

std::string coloring_to_text(const Graph& g, const Coloring& c) {
    std::ostringstream os;
    os << "c colors " << c.color_count << "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "s " << (v + 1) << " " << (c.color[v] + 1) << "\n";
    return os.str();
}

CoverReport verify_cover(const Graph& g, const WeightedCover& z) {
    WeightedCover merged = z;
    merged.merge_duplicates();

    CoverReport rep;
    rep.total_weight = merged.total_weight();
    rep.coverage.assign(g.vertex_count(), Rational(0));
    rep.all_sets_stable = true;
    for (size_t i = 0; i < merged.entries.size(); ++i) {
        const auto& e = merged.entries[i];
        bool stable = true;
        for (size_t a = 0; a < e.set.size() && stable; ++a) {
            if (e.set[a] < 0 || e.set[a] >= g.vertex_count()) {
                stable = false;
                break;
            }
            for (size_t b = a + 1; b < e.set.size(); ++b)
                if (g.adjacent(e.set[a], e.set[b])) {
                    stable = false;
                    break;
                }
        }
        if (!stable) {
            rep.all_sets_stable = false;
            rep.unstable_entries.push_back(static_cast<int>(i));
            continue;
        }
        for (int v : e.set) rep.coverage[v] += e.weight;
    }
    rep.all_vertices_covered = true;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (rep.coverage[v] < Rational(1)) {
            rep.all_vertices_covered = false;
            rep.uncovered_vertices.push_back(v);
        }
    return rep;
}

Coloring extract_coloring(const Graph& g, const WeightedCover& z) {
    for (const auto& e : z.entries)
        if (!e.weight.is_integer() || e.weight.sign() <= 0)
            throw std::invalid_argument("extract_coloring: weights must be positive integers");
    const int n = g.vertex_count();
    Coloring c;
    c.color.assign(n, -1);
    // first covering set wins, in serialized order; a set with weight w
    // stands for w identical color classes but one is enough
    for (size_t i = 0; i < z.entries.size(); ++i)
        for (int v : z.entries[i].set)
            if (v >= 0 && v < n && c.color[v] < 0) c.color[v] = static_cast<int>(i);
    for (int v = 0; v < n; ++v)
        if (c.color[v] < 0)
            throw std::invalid_argument("extract_coloring: vertex " + std::to_string(v + 1) +
                                        " is uncovered");
    // compact color ids
    std::vector<int> remap(z.entries.size(), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (remap[c.color[v]] < 0) remap[c.color[v]] = next++;
        c.color[v] = remap[c.color[v]];
    }
    c.color_count = next;
    return c;
}

Coloring dsatur(const Graph& g) {
    const int n = g.vertex_count();
    Coloring c;
    c.color.assign(n, -1);
    std::vector<std::vector<char>> sat(n);  // sat[v][k]: neighbor of v has color k
    std::vector<int> sat_deg(n, 0), uncolored_deg(n, 0);
    for (int v = 0; v < n; ++v) {
        sat[v].assign(n, 0);
        uncolored_deg[v] = g.degree(v);
    }
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (c.color[v] >= 0) continue;
            if (pick < 0 || sat_deg[v] > sat_deg[pick] ||
                (sat_deg[v] == sat_deg[pick] && uncolored_deg[v] > uncolored_deg[pick]))
                pick = v;
        }
        int col = 0;
        while (col < n && sat[pick][col]) ++col;
        c.color[pick] = col;
        used = std::max(used, col + 1);
        for (int u : g.neighbors(pick)) {
            --uncolored_deg[u];
            if (c.color[u] < 0 && !sat[u][col]) {
                sat[u][col] = 1;
                ++sat_deg[u];
            }
        }
    }
    c.color_count = used;
    return c;
}

}  // namespace ddchrom
