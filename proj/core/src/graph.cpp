#include "rcsim/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "rcsim/errors.hpp"

namespace rcsim {

namespace {

// Sampling helpers on top of mt19937. The std distributions are
// implementation-defined, so seed-reproducible graphs roll their own.

// Uniform draw from [0, bound) without modulo bias (Lemire's method).
std::uint32_t bounded(std::mt19937& gen, std::uint32_t bound) {
    std::uint64_t m = static_cast<std::uint64_t>(gen()) * bound;
    auto low = static_cast<std::uint32_t>(m);
    if (low < bound) {
        const std::uint32_t threshold = (0u - bound) % bound;
        while (low < threshold) {
            m = static_cast<std::uint64_t>(gen()) * bound;
            low = static_cast<std::uint32_t>(m);
        }
    }
    return static_cast<std::uint32_t>(m >> 32);
}

// Uniform double in [0,1) with 53 random bits.
double unit_real(std::mt19937& gen) {
    const std::uint64_t hi = gen() >> 5;  // 27 bits
    const std::uint64_t lo = gen() >> 6;  // 26 bits
    return (static_cast<double>(hi) * 67108864.0 + static_cast<double>(lo)) *
           (1.0 / 9007199254740992.0);
}

}  // namespace

DirectedGraph::DirectedGraph(int n, std::string label)
    : n_(n), label_(std::move(label)) {
    if (n < 1) throw std::domain_error("graph must have at least one node");
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

void DirectedGraph::check_node(int v) const {
    if (v < 0 || v >= n_)
        throw std::domain_error("node index " + std::to_string(v) + " out of range [0," +
                                std::to_string(n_ - 1) + "]");
}

void DirectedGraph::add_edge(int from, int to) {
    check_node(from);
    check_node(to);
    if (from == to) throw std::domain_error("self-loop rejected at node " + std::to_string(from));
    adj_[index(from, to)] = 1;
}

void DirectedGraph::add_undirected_edge(int a, int b) {
    add_edge(a, b);
    add_edge(b, a);
}

void DirectedGraph::remove_undirected_edge(int a, int b) {
    check_node(a);
    check_node(b);
    adj_[index(a, b)] = 0;
    adj_[index(b, a)] = 0;
}

std::vector<std::pair<int, int>> DirectedGraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (adj_[index(i, j)]) out.emplace_back(i, j);
    return out;
}

std::size_t DirectedGraph::arc_count() const {
    return static_cast<std::size_t>(
        std::accumulate(adj_.begin(), adj_.end(), std::size_t{0}));
}

std::size_t DirectedGraph::undirected_edge_count() const {
    std::size_t count = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adj_[index(i, j)] && adj_[index(j, i)]) ++count;
    return count;
}

bool DirectedGraph::is_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adj_[index(i, j)] != adj_[index(j, i)]) return false;
    return true;
}

std::vector<std::vector<std::int32_t>> DirectedGraph::in_lists() const {
    std::vector<std::vector<std::int32_t>> in(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i)
            if (adj_[index(j, i)]) in[static_cast<std::size_t>(i)].push_back(j);
    return in;
}

DirectedGraph named_small_graph(int index) {
    if (index < 1 || index > 9)
        throw std::domain_error("named graph index must be in 1..9, got " +
                                std::to_string(index));
    struct Entry {
        int n;
        std::vector<std::pair<int, int>> edges;
        const char* name;
    };
    static const std::vector<Entry> catalog = {
        {2, {{0, 1}}, "G1 (K2)"},
        {3, {{0, 1}, {1, 2}}, "G2 (P3)"},
        {3, {{0, 1}, {1, 2}, {0, 2}}, "G3 (C3)"},
        {4, {{0, 1}, {1, 2}, {2, 3}}, "G4 (P4)"},
        {4, {{0, 1}, {0, 2}, {0, 3}}, "G5 (K1,3)"},
        {4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, "G6 (C4)"},
        {4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}, "G7 (paw)"},
        {4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}}, "G8 (diamond)"},
        {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, "G9 (K4)"},
    };
    const Entry& e = catalog[static_cast<std::size_t>(index - 1)];
    DirectedGraph g(e.n, e.name);
    for (auto [a, b] : e.edges) g.add_undirected_edge(a, b);
    return g;
}

DirectedGraph watts_strogatz(int n, int k, double p, std::uint32_t seed) {
    if (k < 2 || k % 2 != 0)
        throw std::domain_error("watts_strogatz requires even k >= 2, got k=" +
                                std::to_string(k));
    if (n <= k)
        throw std::domain_error("watts_strogatz requires n > k, got n=" + std::to_string(n) +
                                ", k=" + std::to_string(k));
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("watts_strogatz rewiring probability must be in [0,1]");

    DirectedGraph g(n, "ws(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= k / 2; ++j) g.add_undirected_edge(i, (i + j) % n);

    std::mt19937 gen(seed);
    // Rewire ring by ring, nodes in ascending order: the far endpoint of each
    // surviving lattice edge (i, i+j) is replaced by a uniform non-neighbor.
    for (int j = 1; j <= k / 2; ++j) {
        for (int i = 0; i < n; ++i) {
            const int v = (i + j) % n;
            if (!g.edge(i, v)) continue;  // already rewired away
            if (unit_real(gen) >= p) continue;
            int w = i;
            bool found = false;
            for (int attempt = 0; attempt < 16 * n && !found; ++attempt) {
                w = static_cast<int>(bounded(gen, static_cast<std::uint32_t>(n)));
                found = (w != i) && !g.edge(i, w);
            }
            if (!found) continue;  // node saturated; keep the lattice edge
            g.remove_undirected_edge(i, v);
            g.add_undirected_edge(i, w);
        }
    }
    return g;
}

DirectedGraph barabasi_albert(int n, int m, std::uint32_t seed) {
    if (m < 1)
        throw std::domain_error("barabasi_albert requires m >= 1, got m=" + std::to_string(m));
    if (n <= m)
        throw std::domain_error("barabasi_albert requires n > m, got n=" + std::to_string(n) +
                                ", m=" + std::to_string(m));

    DirectedGraph g(n, "ba(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")");
    // One entry per endpoint of every undirected edge; sampling an entry
    // uniformly is preferential attachment.
    std::vector<std::int32_t> stubs;
    stubs.reserve(2 * static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
    for (int a = 0; a < m; ++a) {
        for (int b = a + 1; b < m; ++b) {
            g.add_undirected_edge(a, b);
            stubs.push_back(a);
            stubs.push_back(b);
        }
    }

    std::mt19937 gen(seed);
    std::vector<std::int32_t> targets;
    targets.reserve(static_cast<std::size_t>(m));
    for (int v = m; v < n; ++v) {
        targets.clear();
        while (static_cast<int>(targets.size()) < m) {
            std::int32_t t;
            if (stubs.empty()) {
                // only for m == 1 and the very first arrival
                t = static_cast<std::int32_t>(bounded(gen, static_cast<std::uint32_t>(v)));
            } else {
                t = stubs[bounded(gen, static_cast<std::uint32_t>(stubs.size()))];
            }
            if (std::find(targets.begin(), targets.end(), t) == targets.end())
                targets.push_back(t);
        }
        for (std::int32_t t : targets) {
            g.add_undirected_edge(v, t);
            stubs.push_back(v);
            stubs.push_back(t);
        }
    }
    return g;
}

DirectedGraph load_edge_list(const std::string& path, bool symmetric) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");

    struct Line {
        std::size_t number;
        int u, v;
    };
    std::vector<Line> lines;
    int declared_n = -1;
    int max_node = -1;

    std::string raw;
    std::size_t lineno = 0;
    bool saw_payload = false;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        std::string text = hash == std::string::npos ? raw : raw.substr(0, hash);
        std::istringstream ls(text);
        std::string first;
        if (!(ls >> first)) continue;  // blank or comment-only

        if (first == "nodes") {
            if (saw_payload || declared_n >= 0)
                throw ParseError(path, lineno, "'nodes' directive must come first");
            long long ncount;
            std::string trailing;
            std::istringstream ds(text);
            ds >> first;
            if (!(ds >> ncount) || (ds >> trailing) || ncount < 1)
                throw ParseError(path, lineno, "malformed 'nodes' directive");
            declared_n = static_cast<int>(ncount);
            continue;
        }

        long long u, v;
        std::string trailing;
        std::istringstream es(text);
        if (!(es >> u >> v) || (es >> trailing))
            throw ParseError(path, lineno, "expected 'u v' edge line, got '" + text + "'");
        if (u < 0 || v < 0) throw ParseError(path, lineno, "negative node index");
        if (u == v) throw ParseError(path, lineno, "self-loop " + std::to_string(u));
        if (declared_n >= 0 && (u >= declared_n || v >= declared_n))
            throw ParseError(path, lineno, "node index exceeds declared 'nodes " +
                                               std::to_string(declared_n) + "'");
        saw_payload = true;
        lines.push_back({lineno, static_cast<int>(u), static_cast<int>(v)});
        max_node = std::max(max_node, static_cast<int>(std::max(u, v)));
    }

    const int n = declared_n >= 0 ? declared_n : max_node + 1;
    if (n < 1) throw ParseError(path, 0, "no nodes (empty edge list without 'nodes' directive)");

    DirectedGraph g(n, path);
    for (const Line& l : lines) {
        g.add_edge(l.u, l.v);
        if (symmetric) g.add_edge(l.v, l.u);
    }
    return g;
}

void save_edge_list(const DirectedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path, 0, "cannot open file for writing");
    if (!g.label().empty()) out << "# " << g.label() << "\n";
    out << "nodes " << g.n() << "\n";
    for (auto [u, v] : g.arcs()) out << u << " " << v << "\n";
    if (!out) throw ParseError(path, 0, "write failed");
}

std::string graph_to_json(const DirectedGraph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.arcs()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    j["label"] = g.label();
    return j.dump();
}

DirectedGraph graph_from_json(const std::string& text, const std::string& source) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(source, 0, e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError(source, 0, "graph JSON must be {\"n\":..,\"edges\":[..]}");
    for (const auto& item : j.items())
        if (item.key() != "n" && item.key() != "edges" && item.key() != "label")
            throw ParseError(source, 0, "unknown key '" + item.key() + "' in graph JSON");

    const int n = j.at("n").get<int>();
    DirectedGraph g(n, j.value("label", std::string{}));
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw ParseError(source, 0, "each edge must be a [u,v] pair");
        try {
            g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
        } catch (const std::domain_error& err) {
            throw ParseError(source, 0, err.what());
        }
    }
    return g;
}

void save_graph_json(const DirectedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError(path, 0, "cannot open file for writing");
    out << graph_to_json(g) << "\n";
    if (!out) throw ParseError(path, 0, "write failed");
}

DirectedGraph load_graph_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return graph_from_json(buf.str(), path);
}

}  // namespace rcsim
