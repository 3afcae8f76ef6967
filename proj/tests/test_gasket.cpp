#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "sgzrp/errors.hpp"
#include "sgzrp/gasket.hpp"

using namespace sgzrp;

namespace {

std::int64_t pow3(int n) {
    std::int64_t p = 1;
    for (int i = 0; i < n; ++i) p *= 3;
    return p;
}

double dist(const GasketGraph& g, std::int32_t i, std::int32_t j) {
    const auto p = g.embed(i), q = g.embed(j);
    return std::hypot(p[0] - q[0], p[1] - q[1]);
}

} // namespace

TEST_CASE("vertex and edge counts match the closed forms") {
    for (int n = 0; n <= 10; ++n) {
        const GasketGraph g = build_gasket(n);
        CHECK(std::int64_t(g.vertex_count()) == 3 * (pow3(n) + 1) / 2);
        CHECK(std::int64_t(g.edge_count()) == pow3(n + 1));
    }
}

TEST_CASE("level 0 is the defining triangle") {
    const GasketGraph g = build_gasket(0);
    REQUIRE(g.vertex_count() == 3);
    REQUIRE(g.edge_count() == 3);
    for (auto d : g.degree) CHECK(d == 2);
}

TEST_CASE("level 1 by hand: 6 vertices, 9 edges, degrees 2/4") {
    // f_i images of V_0: corners (0,0),(2,0),(0,2) plus midpoints (1,0),(0,1),(1,1).
    const GasketGraph g = build_gasket(1);
    REQUIRE(g.vertex_count() == 6);
    REQUIRE(g.edge_count() == 9);
    CHECK(std::count(g.degree.begin(), g.degree.end(), 2) == 3);
    CHECK(std::count(g.degree.begin(), g.degree.end(), 4) == 3);
    CHECK(g.index_of({1, 1}) >= 0);
    CHECK(g.index_of({2, 2}) < 0);
}

TEST_CASE("level 4 counts (123 vertices, 243 edges)") {
    const GasketGraph g = build_gasket(4);
    CHECK(g.vertex_count() == 123);
    CHECK(g.edge_count() == 243);
}

TEST_CASE("degrees are 2 exactly at the three corners, else 4") {
    for (int n : {2, 3, 5}) {
        const GasketGraph g = build_gasket(n);
        const std::int32_t s = g.side();
        std::set<std::int32_t> corners = {g.index_of({0, 0}), g.index_of({s, 0}), g.index_of({0, s})};
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            if (corners.count(std::int32_t(i)))
                CHECK(g.degree[i] == 2);
            else
                CHECK(g.degree[i] == 4);
        }
    }
}

TEST_CASE("every edge has embedded length exactly 2^-n") {
    for (int n : {1, 2, 3, 4}) {
        const GasketGraph g = build_gasket(n);
        const double target = std::ldexp(1.0, -n);
        for (const auto& [i, j] : g.edges) CHECK(dist(g, i, j) == doctest::Approx(target).epsilon(1e-12));
    }
}

TEST_CASE("graph is connected") {
    const GasketGraph g = build_gasket(5);
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<std::int32_t> stack = {0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::int32_t x = stack.back();
        stack.pop_back();
        for (const std::int32_t* y = g.neighbors_begin(x); y != g.neighbors_end(x); ++y) {
            if (!seen[*y]) {
                seen[*y] = 1;
                ++count;
                stack.push_back(*y);
            }
        }
    }
    CHECK(count == g.vertex_count());
}

TEST_CASE("scaled copies of V_n nest inside V_{n+1}") {
    for (int n = 0; n <= 8; ++n) {
        const GasketGraph g = build_gasket(n);
        const GasketGraph h = build_gasket(n + 1);
        const std::int32_t s = g.side();
        const Vertex offsets[3] = {{0, 0}, {s, 0}, {0, s}};
        for (const Vertex& off : offsets)
            for (const Vertex& v : g.vertices)
                CHECK(h.index_of({v.a + off.a, v.b + off.b}) >= 0);
    }
}

TEST_CASE("vertex ordering is deterministic and lexicographic by (b,a)") {
    const GasketGraph g = build_gasket(3);
    for (std::size_t i = 0; i + 1 < g.vertex_count(); ++i)
        CHECK(vertex_less(g.vertices[i], g.vertices[i + 1]));
    CHECK(g.vertices.front() == Vertex{0, 0});
    CHECK(g.vertices.back() == Vertex{0, g.side()});
}

TEST_CASE("mass per vertex is 3^-n and total mass tends to 3/2") {
    const GasketGraph g = build_gasket(6);
    CHECK(g.mass_per_vertex == doctest::Approx(std::pow(3.0, -6)).epsilon(1e-15));
    const double total = g.mass_per_vertex * double(g.vertex_count());
    CHECK(total == doctest::Approx(1.5).epsilon(1e-3));
}

TEST_CASE("build_gasket rejects levels above the cap") {
    CHECK_THROWS_AS(build_gasket(kMaxGraphLevel + 1), CapacityError);
    CHECK_THROWS_AS(build_gasket(-1), CapacityError);
}

TEST_CASE("D3 maps are graph automorphisms") {
    for (int n : {1, 2, 4}) {
        const GasketGraph g = build_gasket(n);
        for (const Vertex& v : g.vertices) {
            CHECK(g.index_of(rotate120(v, n)) >= 0);
            CHECK(g.index_of(reflect_ab(v)) >= 0);
        }
        for (const auto& [i, j] : g.edges) {
            const std::int32_t ri = g.index_of(rotate120(g.vertices[i], n));
            const std::int32_t rj = g.index_of(rotate120(g.vertices[j], n));
            const auto e = std::minmax(ri, rj);
            CHECK(std::binary_search(g.edges.begin(), g.edges.end(),
                                     std::make_pair(e.first, e.second)));
        }
    }
}

TEST_CASE("block_triangle: corner cells and whole-gasket cases") {
    const GasketGraph g3 = build_gasket(3);

    SUBCASE("k=0 gives the 3 corners of the smallest cell containing x") {
        const auto cell = block_triangle(g3, g3.index_of({0, 0}), 0);
        REQUIRE(cell.size() == 3);
        CHECK(std::find(cell.begin(), cell.end(), g3.index_of({0, 0})) != cell.end());
        CHECK(std::find(cell.begin(), cell.end(), g3.index_of({1, 0})) != cell.end());
        CHECK(std::find(cell.begin(), cell.end(), g3.index_of({0, 1})) != cell.end());
    }

    SUBCASE("corner cell at n=3, k=1 is the 6-vertex level-2 cell at a0") {
        const auto cell = block_triangle(g3, g3.index_of({0, 0}), 1);
        REQUIRE(cell.size() == 6);
        for (const Vertex v : {Vertex{0, 0}, Vertex{1, 0}, Vertex{0, 1}, Vertex{2, 0}, Vertex{1, 1}, Vertex{0, 2}})
            CHECK(std::find(cell.begin(), cell.end(), g3.index_of(v)) != cell.end());
    }

    SUBCASE("k=n returns all of V_n") {
        const auto cell = block_triangle(g3, 5, 3);
        CHECK(cell.size() == g3.vertex_count());
    }

    SUBCASE("k>n is a domain error") {
        CHECK_THROWS_AS(block_triangle(g3, 0, 4), DomainError);
    }

    SUBCASE("cell size is always b_k") {
        for (int k = 0; k <= 3; ++k) {
            const auto cell = block_triangle(g3, g3.index_of({1, 1}), k);
            CHECK(std::int64_t(cell.size()) == block_point_count(k));
        }
    }
}

TEST_CASE("block_representatives: counts and cell identification") {
    const GasketGraph g = build_gasket(4);

    SUBCASE("k=n gives a single representative") {
        CHECK(block_representatives(g, 4).size() == 1);
    }

    SUBCASE("n=2, k=1 gives 3 representatives") {
        CHECK(block_representatives(build_gasket(2), 1).size() == 3);
    }

    SUBCASE("n=5, k=2 gives 27 representatives") {
        CHECK(block_representatives(build_gasket(5), 2).size() == 27);
    }

    SUBCASE("representatives resolve to pairwise distinct cells covering V_n") {
        for (int k : {0, 1, 2}) {
            CellDecomposition cells(g, k);
            const auto reps = block_representatives(g, k);
            std::set<std::int32_t> cell_ids;
            std::set<std::int32_t> covered;
            for (const std::int32_t r : reps) {
                const std::int32_t id = cells.cell_index_of(r);
                CHECK(cells.cells()[id].representative == r);
                cell_ids.insert(id);
                for (std::int32_t m : cells.cells()[id].members) covered.insert(m);
            }
            CHECK(cell_ids.size() == reps.size());
            CHECK(covered.size() == g.vertex_count());
        }
    }
}

TEST_CASE("cells partition the edge set") {
    const GasketGraph g = build_gasket(4);
    for (int k : {0, 1, 2, 3}) {
        CellDecomposition cells(g, k);
        std::map<std::pair<std::int32_t, std::int32_t>, int> edge_owner_count;
        for (const Cell& cell : cells.cells()) {
            std::set<std::int32_t> members(cell.members.begin(), cell.members.end());
            for (const auto& [i, j] : g.edges)
                if (members.count(i) && members.count(j)) ++edge_owner_count[{i, j}];
        }
        REQUIRE(edge_owner_count.size() == g.edge_count());
        for (const auto& [edge, count] : edge_owner_count) CHECK(count == 1);
    }
}

TEST_CASE("tie-break: shared vertices resolve to the cell with the smaller origin") {
    const GasketGraph g = build_gasket(3);
    CellDecomposition cells(g, 1);
    // (2,0) at level 3 scales the level-2 vertex (1,0): shared between the
    // cell at origin (0,0) and the one at origin (2,0); (0,0) wins.
    const std::int32_t shared = g.index_of({2, 0});
    const Cell& cell = cells.cell_containing(shared);
    CHECK(cell.origin == Vertex{0, 0});
}

TEST_CASE("graph text round trip") {
    const GasketGraph g = build_gasket(3);
    std::stringstream buffer;
    write_graph(buffer, g, "{\"level\":3}");
    const GasketGraph h = read_graph(buffer);
    CHECK(h.level == g.level);
    CHECK(h.vertex_count() == g.vertex_count());
    CHECK(h.edge_count() == g.edge_count());

    std::stringstream bad("not json\n");
    CHECK_THROWS_AS(read_graph(bad), FormatError);
}
