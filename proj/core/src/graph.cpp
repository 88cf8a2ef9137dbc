#include "ddchrom/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

namespace ddchrom {

Graph::Graph(int n, std::string name) : name_(std::move(name)) {
    if (n < 0)
        throw std::invalid_argument("Graph: negative vertex count");
    adj_.resize(n);
}

void Graph::add_edge(int u, int v) {
    const int n = vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::out_of_range("Graph::add_edge: vertex id out of range");
    if (u == v)
        throw std::invalid_argument("Graph::add_edge: self-loop");
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v)
        return;  // duplicate
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
}

bool Graph::adjacent(int u, int v) const {
    const auto& au = adj_.at(u);
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

bool parse_int(const std::string& s, long& out) {
    try {
        size_t pos = 0;
        out = std::stol(s, &pos);
        return pos == s.size();
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

Graph parse_dimacs(std::istream& in, std::string name,
                   std::vector<std::string>* warnings) {
    Graph g;
    bool have_problem = false;
    long declared_m = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0];
        if (head == "c" || head[0] == 'c')
            continue;
        if (head == "p") {
            if (have_problem)
                throw DimacsParseError(lineno, "duplicate problem line");
            if (toks.size() < 4 || (toks[1] != "edge" && toks[1] != "col"))
                throw DimacsParseError(lineno, "expected 'p edge <n> <m>'");
            long n = 0;
            if (!parse_int(toks[2], n) || n < 0)
                throw DimacsParseError(lineno, "bad vertex count '" + toks[2] + "'");
            if (!parse_int(toks[3], declared_m) || declared_m < 0)
                throw DimacsParseError(lineno, "bad edge count '" + toks[3] + "'");
            g = Graph(static_cast<int>(n), name);
            have_problem = true;
        } else if (head == "e") {
            if (!have_problem)
                throw DimacsParseError(lineno, "edge line before problem line");
            if (toks.size() < 3)
                throw DimacsParseError(lineno, "expected 'e <u> <v>'");
            long u = 0, v = 0;
            if (!parse_int(toks[1], u) || !parse_int(toks[2], v))
                throw DimacsParseError(lineno, "unparseable vertex token");
            if (u < 1 || u > g.vertex_count() || v < 1 || v > g.vertex_count())
                throw DimacsParseError(lineno, "vertex index out of range");
            if (u == v)
                throw DimacsParseError(lineno, "self-loop");
            g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw DimacsParseError(lineno, "unparseable line '" + head + " ...'");
        }
    }
    if (!have_problem)
        throw DimacsParseError(lineno, "missing problem line");
    if (warnings && declared_m != g.edge_count())
        warnings->push_back("declared edge count " + std::to_string(declared_m) +
                            " differs from parsed " + std::to_string(g.edge_count()));
    return g;
}

Graph parse_dimacs_file(const std::filesystem::path& path,
                        std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open file: " + path.string());
    return parse_dimacs(in, path.stem().string(), warnings);
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream os;
    os << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edge_list())
        os << "e " << (u + 1) << " " << (v + 1) << "\n";
    return os.str();
}

Graph make_cycle(int n) {
    if (n < 1)
        throw std::invalid_argument("make_cycle: n must be >= 1");
    Graph g(n, "c" + std::to_string(n));
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    for (int v = 0; n >= 3 && v < n; ++v)
        g.add_edge(v, (v + 1) % n);
    return g;
}

Graph make_complete(int n) {
    if (n < 1)
        throw std::invalid_argument("make_complete: n must be >= 1");
    Graph g(n, "k" + std::to_string(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            g.add_edge(u, v);
    return g;
}

Graph make_petersen() {
    Graph g(10, "petersen");
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);           // outer cycle
        g.add_edge(i, i + 5);                 // spokes
        g.add_edge(i + 5, (i + 2) % 5 + 5);   // inner pentagram
    }
    return g;
}

namespace {

// Exact uniform draw from [0, bound) by rejection on 64-bit words.
Integer draw_below(std::mt19937_64& rng, const Integer& bound) {
    const size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const size_t words = (bits + 63) / 64;
    Integer span = Integer(1) << (64 * words);
    Integer limit = span - span % bound;  // multiples of bound only
    for (;;) {
        Integer x = 0;
        for (size_t w = 0; w < words; ++w) {
            x <<= 64;
            x += Integer(static_cast<unsigned long>(rng()));
        }
        if (x < limit) return x % bound;
    }
}

}  // namespace

Graph make_gnp(int n, const Rational& p, std::uint64_t seed) {
    if (n < 0)
        throw std::invalid_argument("make_gnp: negative n");
    if (p < Rational(0) || p > Rational(1))
        throw std::invalid_argument("make_gnp: p outside [0, 1]");
    Graph g(n, "gnp_" + std::to_string(n) + "_" + std::to_string(seed));
    std::mt19937_64 rng(seed);
    const Integer num = p.num(), den = p.den();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (den == 1) {
                if (num == 1) g.add_edge(u, v);
                continue;
            }
            if (draw_below(rng, den) < num) g.add_edge(u, v);
        }
    }
    return g;
}

Graph make_mycielski(const Graph& g) {
    const int n = g.vertex_count();
    Graph m(2 * n + 1, g.name() + "_mycielski");
    for (auto [u, v] : g.edge_list()) {
        m.add_edge(u, v);
        m.add_edge(u + n, v);
        m.add_edge(u, v + n);
    }
    for (int v = 0; v < n; ++v)
        m.add_edge(v + n, 2 * n);
    return m;
}

Graph make_mycielski_level(int level) {
    if (level < 1)
        throw std::invalid_argument("make_mycielski_level: level must be >= 1");
    Graph g = make_complete(2);  // level 1: K2
    for (int i = 1; i < level; ++i)
        g = make_mycielski(g);
    g.set_name("myciel" + std::to_string(level));
    return g;
}

Graph make_queen(int rows, int cols) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("make_queen: board must be nonempty");
    Graph g(rows * cols, "queen" + std::to_string(rows) + "_" + std::to_string(cols));
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r1 = 0; r1 < rows; ++r1)
        for (int c1 = 0; c1 < cols; ++c1)
            for (int r2 = r1; r2 < rows; ++r2)
                for (int c2 = (r2 == r1 ? c1 + 1 : 0); c2 < cols; ++c2)
                    if (r1 == r2 || c1 == c2 || std::abs(r1 - r2) == std::abs(c1 - c2))
                        g.add_edge(id(r1, c1), id(r2, c2));
    return g;
}

VertexOrdering::VertexOrdering(std::vector<int> perm) : perm_(std::move(perm)) {
    const int n = static_cast<int>(perm_.size());
    std::vector<char> seen(n, 0);
    for (int v : perm_) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("VertexOrdering: not a permutation of 0..n-1");
        seen[v] = 1;
    }
}

VertexOrdering VertexOrdering::identity(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    return VertexOrdering(std::move(p));
}

VertexOrdering VertexOrdering::reversed(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
    return VertexOrdering(std::move(p));
}

VertexOrdering VertexOrdering::degree_descending(const Graph& g) {
    std::vector<int> p(g.vertex_count());
    for (size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
    std::stable_sort(p.begin(), p.end(), [&g](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    return VertexOrdering(std::move(p));
}

}  // namespace ddchrom
