#include "rwl/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace rwl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

[[noreturn]] void invalid()
{
    throw Error("invalid family parameters");
}

// Vertices of T_{h,m}; throws if it would not fit comfortably in an int.
long long tree_vertices(int h, int m)
{
    long long total = 0;
    long long level = 1;
    for (int d = 0; d <= h; ++d) {
        total += level;
        if (total > (1LL << 26)) {
            invalid();
        }
        level *= m;
    }
    return total;
}

// BFS construction of a perfect tree, optionally giving one vertex a
// single child fewer. Coordinates are (depth, position in depth).
Graph build_tree(int h, int m, std::optional<int> bereaved_depth)
{
    struct Node {
        int depth;
        int pos;
    };
    std::vector<Node> nodes{{0, 1}};
    std::vector<std::pair<int, int>> edges;
    std::vector<int> level_count(h + 1, 0);
    level_count[0] = 1;
    int bereaved = -1;
    if (bereaved_depth) {
        // Last vertex of that depth in BFS order.
        long long first = 0;
        long long width = 1;
        for (int d = 0; d < *bereaved_depth; ++d) {
            first += width;
            width *= m;
        }
        bereaved = static_cast<int>(first + width - 1);
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const Node parent = nodes[i];
        if (parent.depth == h) {
            continue;
        }
        int children = (static_cast<int>(i) == bereaved) ? m - 1 : m;
        for (int c = 0; c < children; ++c) {
            int child = static_cast<int>(nodes.size());
            int depth = parent.depth + 1;
            nodes.push_back({depth, ++level_count[depth]});
            edges.emplace_back(static_cast<int>(i), child);
        }
    }
    GraphBuilder b(static_cast<int>(nodes.size()));
    for (auto [u, v] : edges) {
        b.add_edge(u, v);
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        b.set_coord(static_cast<int>(i), {nodes[i].depth, nodes[i].pos});
    }
    b.mark("root", 0);
    if (bereaved >= 0) {
        b.mark("parent", bereaved);
    }
    return std::move(b).build();
}

Graph build_comb(const Comb& c)
{
    GraphBuilder b(c.m * c.n);
    auto id = [&](int i, int j) { return (i - 1) * c.n + (j - 1); };
    for (int i = 1; i <= c.m; ++i) {
        for (int j = 1; j <= c.n; ++j) {
            b.set_coord(id(i, j), {i, j});
            if (j < c.n) {
                b.add_edge(id(i, j), id(i, j + 1));
            }
        }
        if (i < c.m) {
            b.add_edge(id(i, c.k), id(i + 1, c.k));
        }
    }
    return std::move(b).build();
}

Graph build_torus(int n)
{
    GraphBuilder b(2 * n);
    auto id = [&](int row, int col) { return (row - 1) * n + (col - 1); };
    for (int row = 1; row <= 2; ++row) {
        for (int col = 1; col <= n; ++col) {
            b.set_coord(id(row, col), {row, col});
            int next = col % n + 1;
            if (next != col) {
                b.add_edge(id(row, col), id(row, next));
            }
        }
    }
    for (int col = 1; col <= n; ++col) {
        b.add_edge(id(1, col), id(2, col));
    }
    return std::move(b).build();
}

Graph build_two_cycles(const TwoCycles& t)
{
    const int len[3] = {t.a1, t.a2, t.a3};
    const int offset[3] = {0, t.a1, t.a1 + t.a2};
    GraphBuilder b(t.a1 + t.a2 + t.a3);
    auto id = [&](int row, int col) { return offset[row - 1] + col - 1; };
    for (int row = 1; row <= 3; ++row) {
        for (int col = 1; col <= len[row - 1]; ++col) {
            b.set_coord(id(row, col), {row, col});
            if (col < len[row - 1]) {
                b.add_edge(id(row, col), id(row, col + 1));
            }
        }
    }
    for (int row = 1; row <= 2; ++row) {
        b.add_edge(id(row, 1), id(row + 1, 1));
        b.add_edge(id(row, len[row - 1]), id(row + 1, len[row]));
    }
    b.mark("left-middle", id(2, 1));
    b.mark("right-middle", id(2, t.a2));
    return std::move(b).build();
}

Graph build_path(int n, bool closed)
{
    GraphBuilder b(n);
    for (int j = 1; j <= n; ++j) {
        b.set_coord(j - 1, {1, j});
        if (j < n) {
            b.add_edge(j - 1, j);
        }
    }
    if (closed) {
        b.add_edge(n - 1, 0);
    }
    return std::move(b).build();
}

} // namespace

std::string to_string(const Coord& c)
{
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

std::string family_name(const FamilySpec& spec)
{
    return std::visit(overloaded{
                          [](const PerfectTree&) { return std::string("tree"); },
                          [](const TreeMinusChild&) { return std::string("tree-minus-child"); },
                          [](const Comb&) { return std::string("comb"); },
                          [](const Torus&) { return std::string("torus"); },
                          [](const TwoCycles&) { return std::string("twocycles"); },
                          [](const Path&) { return std::string("path"); },
                          [](const Cycle&) { return std::string("cycle"); },
                      },
                      spec);
}

void validate(const FamilySpec& spec)
{
    std::visit(overloaded{
                   [](const PerfectTree& t) {
                       if (t.h < 0 || t.m < 2) invalid();
                       tree_vertices(t.h, t.m);
                   },
                   [](const TreeMinusChild& t) {
                       if (t.h < 1 || t.m < 2 || t.k < 0 || t.k > t.h - 1) invalid();
                       tree_vertices(t.h, t.m);
                   },
                   [](const Comb& c) {
                       if (c.m < 1 || c.n < 2 || c.k < 1 || c.k > c.n) invalid();
                       if (static_cast<long long>(c.m) * c.n > (1LL << 26)) invalid();
                   },
                   [](const Torus& t) {
                       if (t.n < 1 || t.n > (1 << 25)) invalid();
                   },
                   [](const TwoCycles& t) {
                       if (t.a1 < 2 || t.a2 < 2 || t.a3 < 2) invalid();
                       if (static_cast<long long>(t.a1) + t.a2 + t.a3 > (1LL << 26)) invalid();
                   },
                   [](const Path& p) {
                       if (p.n < 1 || p.n > (1 << 26)) invalid();
                   },
                   [](const Cycle& c) {
                       if (c.n < 3 || c.n > (1 << 26)) invalid();
                   },
               },
               spec);
}

Graph::Graph(int n)
    : adj_(static_cast<std::size_t>(n))
{
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& nb : adj_) {
        twice += nb.size();
    }
    return twice / 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> d;
    d.reserve(adj_.size());
    for (const auto& nb : adj_) {
        d.push_back(static_cast<int>(nb.size()));
    }
    return d;
}

bool Graph::connected() const
{
    if (adj_.empty()) {
        return false;
    }
    std::vector<char> seen(adj_.size(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == adj_.size();
}

std::optional<Coord> Graph::coord_of(Vertex v) const
{
    if (coords_.empty() || v < 0 || v >= size()) {
        return std::nullopt;
    }
    return coords_[v];
}

GraphBuilder::GraphBuilder(int n)
    : g_(n)
{
}

void GraphBuilder::add_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= g_.size() || v >= g_.size()) {
        throw Error("vertex index out of range");
    }
    if (u == v) {
        throw Error("self-loop");
    }
    g_.adj_[u].push_back(v);
    g_.adj_[v].push_back(u);
}

void GraphBuilder::set_coord(Vertex v, Coord c)
{
    if (g_.coords_.empty()) {
        g_.coords_.resize(g_.adj_.size());
    }
    g_.coords_.at(v) = c;
    g_.index_[c] = v;
}

void GraphBuilder::mark(std::string name, Vertex v)
{
    g_.marks_[std::move(name)] = v;
}

Graph GraphBuilder::build() &&
{
    for (auto& nb : g_.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return std::move(g_);
}

Graph build_family(const FamilySpec& spec)
{
    validate(spec);
    Graph g = std::visit(overloaded{
                             [](const PerfectTree& t) { return build_tree(t.h, t.m, std::nullopt); },
                             [](const TreeMinusChild& t) { return build_tree(t.h, t.m, t.k); },
                             [](const Comb& c) { return build_comb(c); },
                             [](const Torus& t) { return build_torus(t.n); },
                             [](const TwoCycles& t) { return build_two_cycles(t); },
                             [](const Path& p) { return build_path(p.n, false); },
                             [](const Cycle& c) { return build_path(c.n, true); },
                         },
                         spec);
    if (!g.connected()) {
        throw Error("internal: family graph not connected");
    }
    return g;
}

Graph parse_edge_list(std::string_view text)
{
    std::optional<GraphBuilder> builder;
    int n = 0;
    int line_no = 0;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw Error("line " + std::to_string(line_no) + ": " + what);
    };
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#') {
            continue;
        }
        std::vector<long long> fields;
        std::size_t i = first;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
                ++i;
            }
            if (i == line.size()) {
                break;
            }
            long long value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
            if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
                fail("malformed line");
            }
            fields.push_back(value);
            i = static_cast<std::size_t>(ptr - line.data());
        }
        if (!builder) {
            if (fields.size() != 1 || fields[0] < 1 || fields[0] > (1 << 26)) {
                fail("malformed vertex count");
            }
            n = static_cast<int>(fields[0]);
            builder.emplace(n);
            continue;
        }
        if (fields.size() != 2) {
            fail("malformed line");
        }
        if (fields[0] < 0 || fields[1] < 0 || fields[0] >= n || fields[1] >= n) {
            fail("vertex index out of range");
        }
        if (fields[0] == fields[1]) {
            fail("self-loop");
        }
        builder->add_edge(static_cast<Vertex>(fields[0]), static_cast<Vertex>(fields[1]));
    }
    if (!builder) {
        throw Error("line " + std::to_string(line_no) + ": missing vertex count");
    }
    return std::move(*builder).build();
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.size() << '\n';
    for (Vertex u = 0; u < g.size(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            if (u < v) {
                out << u << ' ' << v << '\n';
            }
        }
    }
    return out.str();
}

Vertex vertex_at(const Graph& g, const Coord& c)
{
    auto it = g.index_.find(c);
    if (it == g.index_.end()) {
        throw Error("unknown coordinate " + to_string(c));
    }
    return it->second;
}

Vertex vertex_at(const Graph& g, std::string_view mark)
{
    auto it = g.marks_.find(mark);
    if (it == g.marks_.end()) {
        throw Error("unknown coordinate '" + std::string(mark) + "'");
    }
    return it->second;
}

} // namespace rwl
