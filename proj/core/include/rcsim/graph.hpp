#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rcsim {

// Directed graph over nodes 0..n-1, stored as a dense 0/1 adjacency matrix.
// edge(i,j) == true means node i influences node j. Self-loops are rejected.
// Graphs are meant to be built once and then shared read-only; none of the
// spreading code mutates them.
class DirectedGraph {
public:
    explicit DirectedGraph(int n, std::string label = "");

    int n() const { return n_; }
    const std::string& label() const { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    bool edge(int from, int to) const { return adj_[index(from, to)] != 0; }

    void add_edge(int from, int to);             // directed arc
    void add_undirected_edge(int a, int b);      // both arcs
    void remove_undirected_edge(int a, int b);

    // Directed arcs in (from, to) lexicographic order.
    std::vector<std::pair<int, int>> arcs() const;
    std::size_t arc_count() const;

    // Number of {i,j} pairs connected in both directions.
    std::size_t undirected_edge_count() const;

    bool is_symmetric() const;

    bool operator==(const DirectedGraph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

    // In-neighbors of every node in ascending order; in_lists()[i] holds all j
    // with edge(j,i). This is the summation order used by the dynamics.
    std::vector<std::vector<std::int32_t>> in_lists() const;

private:
    void check_node(int v) const;
    std::size_t index(int from, int to) const {
        return static_cast<std::size_t>(from) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(to);
    }

    int n_;
    std::string label_;
    std::vector<std::uint8_t> adj_;
};

// Catalog of the nine connected graphs on two to four nodes (up to
// isomorphism), as symmetric directed graphs. Ordered by node count, then
// edge count, then degree sequence:
//   1: K2    2: P3     3: C3 (triangle)
//   4: P4    5: K1,3 (star)   6: C4
//   7: paw (triangle + pendant)   8: diamond (K4 minus an edge)   9: K4
DirectedGraph named_small_graph(int index);

// Watts-Strogatz small-world graph: ring lattice with k neighbors per node
// (k even), each lattice edge rewired with probability p. Symmetric, no
// self-loops or duplicate edges, undirected edge count always n*k/2.
// Identical (n, k, p, seed) give an identical graph.
DirectedGraph watts_strogatz(int n, int k, double p, std::uint32_t seed);

// Barabasi-Albert preferential-attachment graph grown from an m-clique; every
// arriving node attaches to m distinct existing nodes with probability
// proportional to degree. Symmetric and connected. Deterministic per seed.
DirectedGraph barabasi_albert(int n, int m, std::uint32_t seed);

// Edge-list text format: one "u v" pair per line (0-indexed), '#' starts a
// comment, blank lines ignored, optional leading directive "nodes N". With
// symmetric=true each line also adds the reverse arc.
DirectedGraph load_edge_list(const std::string& path, bool symmetric = false);
void save_edge_list(const DirectedGraph& g, const std::string& path);

// JSON form: {"n": int, "edges": [[u,v],...], "label": str}
std::string graph_to_json(const DirectedGraph& g);
DirectedGraph graph_from_json(const std::string& text, const std::string& source = "<json>");
void save_graph_json(const DirectedGraph& g, const std::string& path);
DirectedGraph load_graph_json(const std::string& path);

}  // namespace rcsim
