#ifndef SGZRP_GASKET_HPP
#define SGZRP_GASKET_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace sgzrp {

// Lattice vertex of the level-n gasket graph. The Euclidean embedding of
// (a,b) at level n is ((a + b/2), b*sqrt(3)/2) / 2^n, so the three corners
// sit at (0,0), (2^n,0) and (0,2^n). Integer coordinates make vertex
// identity exact at every level.
struct Vertex {
    std::int32_t a = 0;
    std::int32_t b = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

// (b,a)-lexicographic order; fixes the vertex numbering of every graph.
inline bool vertex_less(const Vertex& u, const Vertex& v) {
    return u.b != v.b ? u.b < v.b : u.a < v.a;
}

// Level-n approximation graph of the Sierpinski gasket. Vertices are sorted
// by vertex_less, edges are the sides of the 3^n smallest cells (each edge
// has embedded length exactly 2^-n), and every vertex carries mass 3^-n.
class GasketGraph {
public:
    int level = 0;
    std::vector<Vertex> vertices;                              // sorted
    std::vector<std::pair<std::int32_t, std::int32_t>> edges;  // i<j, sorted
    std::vector<std::int32_t> degree;
    std::vector<std::int32_t> adj_offset;  // CSR adjacency
    std::vector<std::int32_t> adj;
    double mass_per_vertex = 1.0;  // 3^-level (correctly rounded double)

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t edge_count() const { return edges.size(); }
    std::int32_t side() const { return std::int32_t(1) << level; }

    // Index of a lattice vertex, or -1 when absent.
    std::int32_t index_of(const Vertex& v) const;

    std::array<double, 2> embed(std::int32_t index) const;

    // Neighbor slice of vertex i in the CSR arrays.
    const std::int32_t* neighbors_begin(std::int32_t i) const { return adj.data() + adj_offset[i]; }
    const std::int32_t* neighbors_end(std::int32_t i) const { return adj.data() + adj_offset[i + 1]; }
};

inline constexpr int kMaxGraphLevel = 12;

// Builds the level-n graph by the IFS recursion V_{n+1} = U_i f_i(V_n)
// (and the same recursion for edges) in integer coordinates.
GasketGraph build_gasket(int level);

// D3 symmetries of the level-n triangle, as lattice maps.
Vertex rotate120(const Vertex& v, int level);
Vertex reflect_ab(const Vertex& v);

// One level-(n-k) cell of the level-n graph: a scaled copy of the level-k
// gasket with b_k = 3(3^k+1)/2 vertices.
struct Cell {
    Vertex origin;                          // (b,a)-smallest corner
    std::array<std::int32_t, 3> corners;    // origin, origin+(2^k,0), origin+(0,2^k)
    std::int32_t representative;            // top corner; resolves to this cell
    std::vector<std::int32_t> members;      // ascending vertex indices
};

// All 3^(n-k) level-(n-k) cells of a level-n graph, with the reverse map
// from vertices to the (at most two) cells containing them. Cells are
// ordered by origin, which is also the tie-break order: a vertex shared by
// two cells belongs to the one with the smaller origin.
class CellDecomposition {
public:
    CellDecomposition(const GasketGraph& graph, int block_scale);

    int level() const { return level_; }
    int block_scale() const { return block_scale_; }
    std::size_t cell_count() const { return cells_.size(); }
    const std::vector<Cell>& cells() const { return cells_; }

    // Index of the cell Delta_n^k(x) under the fixed tie-break.
    std::int32_t cell_index_of(std::int32_t vertex) const;
    const Cell& cell_containing(std::int32_t vertex) const { return cells_[cell_index_of(vertex)]; }

private:
    int level_;
    int block_scale_;
    std::vector<Cell> cells_;
    std::vector<std::array<std::int32_t, 2>> cells_of_vertex_;  // -1 padded
};

// Delta_n^k(x): vertex indices of the level-(n-k) cell containing x.
std::vector<std::int32_t> block_triangle(const GasketGraph& graph, std::int32_t vertex, int block_scale);

// One representative per level-(n-k) cell (the cell's top corner), in cell
// order; block_triangle maps each representative back to its own cell.
std::vector<std::int32_t> block_representatives(const GasketGraph& graph, int block_scale);

// Number of V_n points in a level-(n-k) cell: b_k = 3(3^k+1)/2.
std::int64_t block_point_count(int block_scale);

// Line-oriented text export: a one-line JSON header followed by
// "vertex <id> <a> <b>" and "edge <id1> <id2>" records.
void write_graph(std::ostream& out, const GasketGraph& graph, const std::string& config_json = "{}");
GasketGraph read_graph(std::istream& in);

} // namespace sgzrp

#endif
