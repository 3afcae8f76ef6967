#ifndef SGZRP_GRID_FUNCTION_HPP
#define SGZRP_GRID_FUNCTION_HPP

#include <iosfwd>
#include <vector>

#include "sgzrp/gasket.hpp"

namespace sgzrp {

// Real-valued function on V_n, values in graph vertex order.
struct GridFunction {
    int level = 0;
    std::vector<double> values;

    double operator()(std::int32_t i) const { return values[i]; }
    std::size_t size() const { return values.size(); }
};

GridFunction make_grid_function(const GasketGraph& graph, double fill = 0.0);

// Checks that f lives on this graph (level and size).
void require_compatible(const GridFunction& f, const GasketGraph& graph, const char* where);

// L2(mu_n) inner product: 3^-n sum f g.
double l2_inner(const GridFunction& f, const GridFunction& g, const GasketGraph& graph);
double l2_norm(const GridFunction& f, const GasketGraph& graph);
double sup_norm(const GridFunction& f);

// CSV exchange format: "vertex,value" header then one row per vertex.
void write_grid_function_csv(std::ostream& out, const GridFunction& f);
GridFunction read_grid_function_csv(std::istream& in, const GasketGraph& graph);

} // namespace sgzrp

#endif
