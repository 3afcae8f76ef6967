#ifndef SGZRP_ENERGY_HPP
#define SGZRP_ENERGY_HPP

#include "sgzrp/gasket.hpp"
#include "sgzrp/grid_function.hpp"

namespace sgzrp {

// Renormalized energy form (5/3)^n sum_<xy> (f(y)-f(x))(g(y)-g(x)).
double energy_form(const GridFunction& f, const GridFunction& g, const GasketGraph& graph);

// Renormalized graph Laplacian: (Delta_n g)(x) = 5^n sum_{y~x} (g(y)-g(x)).
GridFunction discrete_laplacian(const GridFunction& g, const GasketGraph& graph);

// Energy-minimizing extension from V_n to V_{n+1}: the midpoint of edge
// (p,q) in a cell with opposite corner r gets (2f(p)+2f(q)+f(r))/5.
// Preserves the energy form level to level.
GridFunction harmonic_extension(const GridFunction& f, const GasketGraph& coarse,
                                const GasketGraph& fine);

// Holder exponent of the gasket energy estimate: log(5/3)/log 4.
double holder_alpha();

// sup over vertex pairs of |f(x)-f(y)| / |x-y|^alpha in the Euclidean
// embedding; bounded by 6 sqrt(E_n(f,f)).
double holder_ratio(const GridFunction& f, const GasketGraph& graph);

// Largest single-vertex renormalized gradient sum,
// sup_x (5/3)^n sum_{y~x} (f(y)-f(x))^2; decays for energy-limited f.
double variational_gradient_sup(const GridFunction& f, const GasketGraph& graph);

} // namespace sgzrp

#endif
