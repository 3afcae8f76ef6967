#include "sgzrp/gasket.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "sgzrp/errors.hpp"
#include <nlohmann/json.hpp>

namespace sgzrp {

namespace {

std::uint64_t key_of(const Vertex& v) {
    return (std::uint64_t(std::uint32_t(v.a)) << 32) | std::uint32_t(v.b);
}

} // namespace

std::int32_t GasketGraph::index_of(const Vertex& v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v, vertex_less);
    if (it == vertices.end() || !(*it == v)) return -1;
    return std::int32_t(it - vertices.begin());
}

std::array<double, 2> GasketGraph::embed(std::int32_t index) const {
    const Vertex& v = vertices[index];
    const double scale = std::ldexp(1.0, -level);
    return {(v.a + 0.5 * v.b) * scale, 0.5 * std::sqrt(3.0) * v.b * scale};
}

GasketGraph build_gasket(int level) {
    if (level < 0 || level > kMaxGraphLevel)
        throw CapacityError("build_gasket: level must be in [0, " + std::to_string(kMaxGraphLevel) +
                            "], got " + std::to_string(level));

    // Coordinate pairs only; edges stay as coordinate pairs until the final
    // index pass so the recursion never touches vertex numbering.
    std::vector<Vertex> verts = {{0, 0}, {1, 0}, {0, 1}};
    std::vector<std::pair<Vertex, Vertex>> edges = {
        {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}, {{1, 0}, {0, 1}}};

    for (int lev = 0; lev < level; ++lev) {
        const std::int32_t s = std::int32_t(1) << lev;
        const Vertex offsets[3] = {{0, 0}, {s, 0}, {0, s}};

        std::vector<Vertex> next_verts;
        next_verts.reserve(3 * verts.size());
        std::unordered_map<std::uint64_t, bool> seen;
        seen.reserve(2 * verts.size());

        std::vector<std::pair<Vertex, Vertex>> next_edges;
        next_edges.reserve(3 * edges.size());

        for (const Vertex& off : offsets) {
            for (const Vertex& v : verts) {
                Vertex w{v.a + off.a, v.b + off.b};
                if (seen.emplace(key_of(w), true).second) next_verts.push_back(w);
            }
            // Sub-gaskets overlap only in single vertices, never in edges.
            for (const auto& [u, v] : edges)
                next_edges.push_back({{u.a + off.a, u.b + off.b}, {v.a + off.a, v.b + off.b}});
        }
        verts = std::move(next_verts);
        edges = std::move(next_edges);
    }

    GasketGraph g;
    g.level = level;
    g.vertices = std::move(verts);
    std::sort(g.vertices.begin(), g.vertices.end(), vertex_less);
    g.mass_per_vertex = std::pow(3.0, -level);

    g.edges.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        std::int32_t i = g.index_of(u);
        std::int32_t j = g.index_of(v);
        if (i > j) std::swap(i, j);
        g.edges.push_back({i, j});
    }
    std::sort(g.edges.begin(), g.edges.end());

    const std::size_t n = g.vertices.size();
    g.degree.assign(n, 0);
    for (const auto& [i, j] : g.edges) {
        ++g.degree[i];
        ++g.degree[j];
    }
    g.adj_offset.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) g.adj_offset[i + 1] = g.adj_offset[i] + g.degree[i];
    g.adj.resize(2 * g.edges.size());
    std::vector<std::int32_t> cursor(g.adj_offset.begin(), g.adj_offset.end() - 1);
    for (const auto& [i, j] : g.edges) {
        g.adj[cursor[i]++] = j;
        g.adj[cursor[j]++] = i;
    }
    return g;
}

Vertex rotate120(const Vertex& v, int level) {
    const std::int32_t s = std::int32_t(1) << level;
    return {s - v.a - v.b, v.a};
}

Vertex reflect_ab(const Vertex& v) { return {v.b, v.a}; }

std::int64_t block_point_count(int block_scale) {
    std::int64_t p = 1;
    for (int i = 0; i < block_scale; ++i) p *= 3;
    return 3 * (p + 1) / 2;
}

CellDecomposition::CellDecomposition(const GasketGraph& graph, int block_scale)
    : level_(graph.level), block_scale_(block_scale) {
    if (block_scale < 0 || block_scale > level_)
        throw DomainError("cell decomposition: block scale must be in [0, level]");

    const int depth = level_ - block_scale_;
    const GasketGraph master = build_gasket(block_scale_);
    const std::int32_t cell_side = std::int32_t(1) << block_scale_;

    // Origins of all 3^depth cells: sums of 2^(level-j) offsets over words.
    std::vector<Vertex> origins = {{0, 0}};
    for (int j = 0; j < depth; ++j) {
        const std::int32_t s = std::int32_t(1) << (level_ - 1 - j);
        std::vector<Vertex> next;
        next.reserve(3 * origins.size());
        for (const Vertex& o : origins) {
            next.push_back(o);
            next.push_back({o.a + s, o.b});
            next.push_back({o.a, o.b + s});
        }
        origins = std::move(next);
    }
    std::sort(origins.begin(), origins.end(), vertex_less);

    cells_.reserve(origins.size());
    cells_of_vertex_.assign(graph.vertex_count(), {-1, -1});

    for (const Vertex& origin : origins) {
        Cell cell;
        cell.origin = origin;
        cell.members.reserve(master.vertex_count());
        for (const Vertex& mv : master.vertices) {
            const std::int32_t idx = graph.index_of({origin.a + mv.a, origin.b + mv.b});
            if (idx < 0) throw DomainError("cell decomposition: cell vertex missing from graph");
            cell.members.push_back(idx);
        }
        std::sort(cell.members.begin(), cell.members.end());
        cell.corners = {graph.index_of(origin),
                        graph.index_of({origin.a + cell_side, origin.b}),
                        graph.index_of({origin.a, origin.b + cell_side})};
        cell.representative = cell.corners[2];

        const std::int32_t cell_id = std::int32_t(cells_.size());
        for (std::int32_t m : cell.members) {
            auto& slots = cells_of_vertex_[m];
            if (slots[0] < 0) slots[0] = cell_id;
            else if (slots[1] < 0) slots[1] = cell_id;
            else throw DomainError("cell decomposition: vertex in more than two cells");
        }
        cells_.push_back(std::move(cell));
    }
}

std::int32_t CellDecomposition::cell_index_of(std::int32_t vertex) const {
    const auto& slots = cells_of_vertex_[vertex];
    if (slots[0] < 0) throw DomainError("cell decomposition: vertex outside every cell");
    // Cells are stored in origin order, so the smaller index wins the tie.
    return slots[0];
}

std::vector<std::int32_t> block_triangle(const GasketGraph& graph, std::int32_t vertex, int block_scale) {
    if (vertex < 0 || std::size_t(vertex) >= graph.vertex_count())
        throw DomainError("block_triangle: vertex index out of range");
    CellDecomposition cells(graph, block_scale);
    return cells.cell_containing(vertex).members;
}

std::vector<std::int32_t> block_representatives(const GasketGraph& graph, int block_scale) {
    CellDecomposition cells(graph, block_scale);
    std::vector<std::int32_t> reps;
    reps.reserve(cells.cell_count());
    for (const Cell& c : cells.cells()) reps.push_back(c.representative);
    return reps;
}

void write_graph(std::ostream& out, const GasketGraph& graph, const std::string& config_json) {
    nlohmann::json header = {
        {"format", "sgzrp-gasket"},
        {"version", 1},
        {"level", graph.level},
        {"vertices", graph.vertex_count()},
        {"edges", graph.edge_count()},
        {"mass_per_vertex", graph.mass_per_vertex},
        {"config", nlohmann::json::parse(config_json)},
    };
    out << header.dump() << '\n';
    for (std::size_t i = 0; i < graph.vertex_count(); ++i)
        out << "vertex " << i << ' ' << graph.vertices[i].a << ' ' << graph.vertices[i].b << '\n';
    for (const auto& [i, j] : graph.edges) out << "edge " << i << ' ' << j << '\n';
}

GasketGraph read_graph(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw FormatError("graph file: missing header");
    nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
    if (header.is_discarded() || header.value("format", "") != "sgzrp-gasket")
        throw FormatError("graph file: bad JSON header");

    const int level = header.at("level").get<int>();
    const std::size_t nverts = header.at("vertices").get<std::size_t>();
    const std::size_t nedges = header.at("edges").get<std::size_t>();

    GasketGraph expected = build_gasket(level);
    if (expected.vertex_count() != nverts || expected.edge_count() != nedges)
        throw FormatError("graph file: counts do not match the stated level");

    std::size_t seen_v = 0, seen_e = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "vertex") {
            std::size_t id;
            Vertex v;
            ls >> id >> v.a >> v.b;
            if (!ls || id >= nverts || !(expected.vertices[id] == v))
                throw FormatError("graph file: vertex record mismatch");
            ++seen_v;
        } else if (tag == "edge") {
            std::int32_t i, j;
            ls >> i >> j;
            if (!ls) throw FormatError("graph file: bad edge record");
            if (i > j) std::swap(i, j);
            if (!std::binary_search(expected.edges.begin(), expected.edges.end(), std::make_pair(i, j)))
                throw FormatError("graph file: edge record mismatch");
            ++seen_e;
        } else {
            throw FormatError("graph file: unknown record '" + tag + "'");
        }
    }
    if (seen_v != nverts || seen_e != nedges) throw FormatError("graph file: truncated");
    return expected;
}

} // namespace sgzrp
