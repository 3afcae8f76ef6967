#ifndef SGZRP_SPECTRUM_HPP
#define SGZRP_SPECTRUM_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sgzrp/gasket.hpp"
#include "sgzrp/grid_function.hpp"

namespace sgzrp {

// Fourier coefficients of a grid function in a spectral basis.
struct SobolevCoefficients {
    int level = 0;
    std::vector<double> coeffs;
};

// Eigenpairs of -Delta_n (renormalization 5^n included in the eigenvalues),
// orthonormal in L2(mu_n). lambda[0] = 0 exactly, eigenvector 0 constant.
// Inside degenerate eigenspaces individual vectors are convention-dependent;
// only basis-invariant quantities are contract-stable.
struct SpectralBasis {
    int level = 0;
    std::vector<double> eigenvalues;  // ascending
    Eigen::MatrixXd vectors;          // column k = v_k in vertex order

    std::size_t mode_count() const { return eigenvalues.size(); }
    GridFunction eigenvector(int k) const;
};

inline constexpr int kMaxSpectralLevel = 7;

// Dense symmetric eigendecomposition of -Delta_n. Deterministic sign
// convention: the first component of each eigenvector above 1e-12 of its
// max magnitude is positive.
SpectralBasis eigendecompose(const GasketGraph& graph);

// f_k = int f v_k dmu_n = 3^-n sum_x f(x) v_k(x).
SobolevCoefficients project(const GridFunction& f, const SpectralBasis& basis);
GridFunction reconstruct(const SobolevCoefficients& coeffs, const SpectralBasis& basis);

// Sobolev norm (sum_k lambda_k^m f_k^2)^(1/2). The lambda_0 = 0 term
// contributes f_0^2 when m = 0 and nothing otherwise, so ||.||_0 is the
// L2(mu_n) norm and ||.||_m for m > 0 is a seminorm vanishing on constants.
double sobolev_norm(const SobolevCoefficients& coeffs, double m, const SpectralBasis& basis);

// lambda_k^(n) for k <= k_max at each requested level; rows follow the
// input level list. Used for cross-level Cauchy checks of the low modes.
struct EigenvalueTable {
    std::vector<int> levels;
    int k_max = 0;
    std::vector<std::vector<double>> lambda;  // [level index][k]
};
EigenvalueTable renormalized_eigenvalue_table(const std::vector<int>& levels, int k_max);

// Binary cache: magic, version, level, mode count, embedded config JSON,
// then eigenvalues and eigenvectors (row k = v_k) as little-endian doubles.
void save_basis(const std::string& path, const SpectralBasis& basis,
                const std::string& config_json = "{}");
SpectralBasis load_basis(const std::string& path);

} // namespace sgzrp

#endif
