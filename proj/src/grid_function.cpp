#include "sgzrp/grid_function.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "sgzrp/errors.hpp"

namespace sgzrp {

GridFunction make_grid_function(const GasketGraph& graph, double fill) {
    return {graph.level, std::vector<double>(graph.vertex_count(), fill)};
}

void require_compatible(const GridFunction& f, const GasketGraph& graph, const char* where) {
    if (f.level != graph.level)
        throw DomainError(std::string(where) + ": grid function level " + std::to_string(f.level) +
                          " does not match graph level " + std::to_string(graph.level));
    if (f.values.size() != graph.vertex_count())
        throw DomainError(std::string(where) + ": grid function has wrong length");
}

double l2_inner(const GridFunction& f, const GridFunction& g, const GasketGraph& graph) {
    require_compatible(f, graph, "l2_inner");
    require_compatible(g, graph, "l2_inner");
    double s = 0.0;
    for (std::size_t i = 0; i < f.values.size(); ++i) s += f.values[i] * g.values[i];
    return graph.mass_per_vertex * s;
}

double l2_norm(const GridFunction& f, const GasketGraph& graph) {
    return std::sqrt(l2_inner(f, f, graph));
}

double sup_norm(const GridFunction& f) {
    double m = 0.0;
    for (double v : f.values) m = std::max(m, std::fabs(v));
    return m;
}

void write_grid_function_csv(std::ostream& out, const GridFunction& f) {
    out << "vertex,value\n";
    char buf[40];
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", f.values[i]);
        out << i << ',' << buf << '\n';
    }
}

GridFunction read_grid_function_csv(std::istream& in, const GasketGraph& graph) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("vertex,value", 0) != 0)
        throw FormatError("grid function csv: missing header");
    GridFunction f = make_grid_function(graph);
    std::vector<bool> seen(graph.vertex_count(), false);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::size_t id;
        char comma;
        double value;
        if (!(ls >> id >> comma >> value) || comma != ',' || id >= f.values.size())
            throw FormatError("grid function csv: bad row '" + line + "'");
        f.values[id] = value;
        seen[id] = true;
    }
    for (bool s : seen)
        if (!s) throw FormatError("grid function csv: missing vertices");
    return f;
}

} // namespace sgzrp
