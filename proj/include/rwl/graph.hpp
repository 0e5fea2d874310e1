#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rwl/bigmath.hpp"

namespace rwl {

using Vertex = int;

// Family coordinate, 1-based except for tree depth. Meaning per family:
//   trees:     (depth, position within the depth, left to right)
//   comb:      (tooth i, position j along the tooth)
//   torus:     (row 1..2, column 1..n)
//   twocycles: (row 1..3, position along that row's path)
//   path/cycle:(1, position)
struct Coord {
    int row = 0;
    int col = 0;
    auto operator<=>(const Coord&) const = default;
};

std::string to_string(const Coord& c);

struct PerfectTree {
    int h = 0;
    int m = 2;
};
// T_{h,m} minus one depth-(k+1) child and its subtree.
struct TreeMinusChild {
    int h = 1;
    int m = 2;
    int k = 0;
};
struct Comb {
    int m = 1;
    int n = 2;
    int k = 1;
};
struct Torus {
    int n = 1;
};
struct TwoCycles {
    int a1 = 2;
    int a2 = 2;
    int a3 = 2;
};
struct Path {
    int n = 1;
};
struct Cycle {
    int n = 3;
};

using FamilySpec = std::variant<PerfectTree, TreeMinusChild, Comb, Torus, TwoCycles, Path, Cycle>;

std::string family_name(const FamilySpec& spec);

// Throws "invalid family parameters" if a bound is violated.
void validate(const FamilySpec& spec);

// Undirected simple graph; immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int size() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const;
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    bool adjacent(Vertex u, Vertex v) const;
    std::vector<int> degrees() const;
    bool connected() const;

    // Named vertices ("root", "parent", "left-middle", ...).
    const std::map<std::string, Vertex, std::less<>>& marks() const { return marks_; }
    std::optional<Coord> coord_of(Vertex v) const;
    bool has_coords() const { return !coords_.empty(); }

    friend class GraphBuilder;
    friend Vertex vertex_at(const Graph& g, const Coord& c);
    friend Vertex vertex_at(const Graph& g, std::string_view mark);

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Coord> coords_;
    std::map<Coord, Vertex> index_;
    std::map<std::string, Vertex, std::less<>> marks_;
};

// Collects edges and labels, then freezes them into a Graph with sorted,
// duplicate-free adjacency.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    // Self-loops throw; repeated edges collapse.
    void add_edge(Vertex u, Vertex v);
    void set_coord(Vertex v, Coord c);
    void mark(std::string name, Vertex v);
    Graph build() &&;

private:
    Graph g_;
};

Graph build_family(const FamilySpec& spec);

// First non-comment line: vertex count. Then one "u v" pair per line.
// Lines whose first non-blank character is '#' are comments.
Graph parse_edge_list(std::string_view text);

std::string to_edge_list(const Graph& g);

Vertex vertex_at(const Graph& g, const Coord& c);
Vertex vertex_at(const Graph& g, std::string_view mark);

} // namespace rwl
