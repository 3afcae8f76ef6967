#include "sgzrp/energy.hpp"

#include <cmath>

#include "sgzrp/errors.hpp"

namespace sgzrp {

namespace {

double renorm_factor(int level) { return std::pow(5.0 / 3.0, level); }

} // namespace

double holder_alpha() { return std::log(5.0 / 3.0) / std::log(4.0); }

double energy_form(const GridFunction& f, const GridFunction& g, const GasketGraph& graph) {
    require_compatible(f, graph, "energy_form");
    require_compatible(g, graph, "energy_form");
    double s = 0.0;
    for (const auto& [i, j] : graph.edges)
        s += (f.values[j] - f.values[i]) * (g.values[j] - g.values[i]);
    return renorm_factor(graph.level) * s;
}

GridFunction discrete_laplacian(const GridFunction& g, const GasketGraph& graph) {
    require_compatible(g, graph, "discrete_laplacian");
    GridFunction out = make_grid_function(graph);
    const double scale = std::pow(5.0, graph.level);
    for (std::size_t x = 0; x < graph.vertex_count(); ++x) {
        double s = 0.0;
        for (const std::int32_t* y = graph.neighbors_begin(std::int32_t(x));
             y != graph.neighbors_end(std::int32_t(x)); ++y)
            s += g.values[*y] - g.values[x];
        out.values[x] = scale * s;
    }
    return out;
}

GridFunction harmonic_extension(const GridFunction& f, const GasketGraph& coarse,
                                const GasketGraph& fine) {
    require_compatible(f, coarse, "harmonic_extension");
    if (fine.level != coarse.level + 1)
        throw DomainError("harmonic_extension: fine graph must be one level deeper");

    GridFunction out = make_grid_function(fine);

    // Old vertices keep their values (coordinates double level to level).
    for (std::size_t i = 0; i < coarse.vertex_count(); ++i) {
        const Vertex& v = coarse.vertices[i];
        const std::int32_t j = fine.index_of({2 * v.a, 2 * v.b});
        out.values[j] = f.values[i];
    }

    // Per level-n cell: each edge midpoint takes 2/5 from its endpoints and
    // 1/5 from the opposite corner. Each midpoint lies in exactly one cell.
    CellDecomposition cells(coarse, 0);
    for (const Cell& cell : cells.cells()) {
        const auto& c = cell.corners;
        const double fp = f.values[c[0]], fq = f.values[c[1]], fr = f.values[c[2]];
        const Vertex p = coarse.vertices[c[0]], q = coarse.vertices[c[1]], r = coarse.vertices[c[2]];
        const auto mid = [&](const Vertex& u, const Vertex& v) {
            return fine.index_of({u.a + v.a, u.b + v.b});
        };
        out.values[mid(p, q)] = (2.0 * fp + 2.0 * fq + fr) / 5.0;
        out.values[mid(p, r)] = (2.0 * fp + 2.0 * fr + fq) / 5.0;
        out.values[mid(q, r)] = (2.0 * fq + 2.0 * fr + fp) / 5.0;
    }
    return out;
}

double holder_ratio(const GridFunction& f, const GasketGraph& graph) {
    require_compatible(f, graph, "holder_ratio");
    const std::size_t n = graph.vertex_count();
    if (n < 2) throw DomainError("holder_ratio: need at least two vertices");
    const double alpha = holder_alpha();

    std::vector<std::array<double, 2>> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = graph.embed(std::int32_t(i));

    double best = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double df = std::fabs(f.values[i] - f.values[j]);
            if (df == 0.0) continue;
            const double dx = pts[i][0] - pts[j][0];
            const double dy = pts[i][1] - pts[j][1];
            const double dist = std::sqrt(dx * dx + dy * dy);
            best = std::max(best, df / std::pow(dist, alpha));
        }
    }
    return best;
}

double variational_gradient_sup(const GridFunction& f, const GasketGraph& graph) {
    require_compatible(f, graph, "variational_gradient_sup");
    const double scale = renorm_factor(graph.level);
    double best = 0.0;
    for (std::size_t x = 0; x < graph.vertex_count(); ++x) {
        double s = 0.0;
        for (const std::int32_t* y = graph.neighbors_begin(std::int32_t(x));
             y != graph.neighbors_end(std::int32_t(x)); ++y) {
            const double d = f.values[*y] - f.values[x];
            s += d * d;
        }
        best = std::max(best, scale * s);
    }
    return best;
}

} // namespace sgzrp
