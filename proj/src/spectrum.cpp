#include "sgzrp/spectrum.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

#include "sgzrp/errors.hpp"

namespace sgzrp {

namespace {

constexpr char kMagic[8] = {'S', 'G', 'E', 'I', 'G', 'B', '0', '1'};
constexpr std::uint32_t kCacheVersion = 1;

void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
    const double tol = 1e-12 * v.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::fabs(v[i]) > tol) {
            if (v[i] < 0) v = -v;
            return;
        }
    }
}

} // namespace

GridFunction SpectralBasis::eigenvector(int k) const {
    GridFunction f;
    f.level = level;
    f.values.assign(vectors.col(k).data(), vectors.col(k).data() + vectors.rows());
    return f;
}

SpectralBasis eigendecompose(const GasketGraph& graph) {
    if (graph.level > kMaxSpectralLevel)
        throw CapacityError("eigendecompose: dense solve capped at level " +
                            std::to_string(kMaxSpectralLevel));

    const Eigen::Index n = Eigen::Index(graph.vertex_count());
    const double scale = std::pow(5.0, graph.level);

    // -Delta_n = 5^n (D - A); symmetric because mu_n is uniform.
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index x = 0; x < n; ++x) m(x, x) = scale * graph.degree[x];
    for (const auto& [i, j] : graph.edges) {
        m(i, j) = -scale;
        m(j, i) = -scale;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
    if (solver.info() != Eigen::Success)
        throw ConvergenceError("eigendecompose: dense eigensolver failed");

    SpectralBasis basis;
    basis.level = graph.level;
    basis.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    basis.vectors = solver.eigenvectors();

    // Connected graph: exactly one zero mode; clamp it to the exact value.
    if (std::fabs(basis.eigenvalues[0]) > 1e-7 * std::max(1.0, basis.eigenvalues.back()))
        throw ConvergenceError("eigendecompose: lowest eigenvalue not numerically zero");
    basis.eigenvalues[0] = 0.0;

    // Rescale from Euclidean to L2(mu_n) orthonormality and fix signs.
    const double to_mu = std::pow(3.0, 0.5 * graph.level);
    basis.vectors *= to_mu;
    for (Eigen::Index k = 0; k < n; ++k) fix_sign(basis.vectors.col(k));
    return basis;
}

SobolevCoefficients project(const GridFunction& f, const SpectralBasis& basis) {
    if (f.level != basis.level) throw DomainError("project: level mismatch");
    if (Eigen::Index(f.values.size()) != basis.vectors.rows())
        throw DomainError("project: length mismatch");
    const double mass = std::pow(3.0, -basis.level);
    Eigen::Map<const Eigen::VectorXd> fv(f.values.data(), Eigen::Index(f.values.size()));
    Eigen::VectorXd c = mass * (basis.vectors.transpose() * fv);
    SobolevCoefficients out;
    out.level = basis.level;
    out.coeffs.assign(c.data(), c.data() + c.size());
    return out;
}

GridFunction reconstruct(const SobolevCoefficients& coeffs, const SpectralBasis& basis) {
    if (coeffs.level != basis.level) throw DomainError("reconstruct: level mismatch");
    const Eigen::Index k = Eigen::Index(coeffs.coeffs.size());
    if (k > basis.vectors.cols()) throw DomainError("reconstruct: too many coefficients");
    Eigen::Map<const Eigen::VectorXd> cv(coeffs.coeffs.data(), k);
    Eigen::VectorXd f = basis.vectors.leftCols(k) * cv;
    GridFunction out;
    out.level = basis.level;
    out.values.assign(f.data(), f.data() + f.size());
    return out;
}

double sobolev_norm(const SobolevCoefficients& coeffs, double m, const SpectralBasis& basis) {
    if (coeffs.level != basis.level) throw DomainError("sobolev_norm: level mismatch");
    if (coeffs.coeffs.size() > basis.eigenvalues.size())
        throw DomainError("sobolev_norm: more coefficients than modes");
    double s = 0.0;
    for (std::size_t k = 0; k < coeffs.coeffs.size(); ++k) {
        const double lambda = basis.eigenvalues[k];
        const double fk2 = coeffs.coeffs[k] * coeffs.coeffs[k];
        if (lambda == 0.0) {
            if (m == 0.0) s += fk2;  // 0^0 = 1; otherwise the term is 0
        } else {
            s += std::pow(lambda, m) * fk2;
        }
    }
    return std::sqrt(s);
}

EigenvalueTable renormalized_eigenvalue_table(const std::vector<int>& levels, int k_max) {
    EigenvalueTable table;
    table.levels = levels;
    table.k_max = k_max;
    for (int level : levels) {
        const SpectralBasis basis = eigendecompose(build_gasket(level));
        if (std::size_t(k_max) >= basis.mode_count())
            throw DomainError("eigenvalue table: k_max exceeds mode count at level " +
                              std::to_string(level));
        table.lambda.emplace_back(basis.eigenvalues.begin(),
                                  basis.eigenvalues.begin() + k_max + 1);
    }
    return table;
}

void save_basis(const std::string& path, const SpectralBasis& basis,
                const std::string& config_json) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("save_basis: cannot open '" + path + "'");

    const std::uint32_t level = std::uint32_t(basis.level);
    const std::uint64_t count = basis.mode_count();
    const std::string config = nlohmann::json::parse(config_json).dump();
    const std::uint64_t config_len = config.size();

    out.write(kMagic, sizeof kMagic);
    out.write(reinterpret_cast<const char*>(&kCacheVersion), sizeof kCacheVersion);
    out.write(reinterpret_cast<const char*>(&level), sizeof level);
    out.write(reinterpret_cast<const char*>(&count), sizeof count);
    out.write(reinterpret_cast<const char*>(&config_len), sizeof config_len);
    out.write(config.data(), std::streamsize(config.size()));
    out.write(reinterpret_cast<const char*>(basis.eigenvalues.data()),
              std::streamsize(count * sizeof(double)));
    // Row k = eigenvector k, row-major.
    std::vector<double> row(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        for (std::uint64_t x = 0; x < count; ++x) row[x] = basis.vectors(Eigen::Index(x), Eigen::Index(k));
        out.write(reinterpret_cast<const char*>(row.data()), std::streamsize(count * sizeof(double)));
    }
    if (!out) throw FormatError("save_basis: write failed for '" + path + "'");
}

SpectralBasis load_basis(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("load_basis: cannot open '" + path + "'");

    char magic[8];
    std::uint32_t version = 0, level = 0;
    std::uint64_t count = 0, config_len = 0;
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kMagic, sizeof kMagic) != 0)
        throw FormatError("load_basis: bad magic in '" + path + "'");
    in.read(reinterpret_cast<char*>(&version), sizeof version);
    if (version != kCacheVersion) throw FormatError("load_basis: unsupported cache version");
    in.read(reinterpret_cast<char*>(&level), sizeof level);
    in.read(reinterpret_cast<char*>(&count), sizeof count);
    in.read(reinterpret_cast<char*>(&config_len), sizeof config_len);
    if (!in || config_len > (1u << 20)) throw FormatError("load_basis: corrupt header");
    std::string config(config_len, '\0');
    in.read(config.data(), std::streamsize(config_len));

    SpectralBasis basis;
    basis.level = int(level);
    basis.eigenvalues.resize(count);
    in.read(reinterpret_cast<char*>(basis.eigenvalues.data()),
            std::streamsize(count * sizeof(double)));
    basis.vectors.resize(Eigen::Index(count), Eigen::Index(count));
    std::vector<double> row(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        in.read(reinterpret_cast<char*>(row.data()), std::streamsize(count * sizeof(double)));
        for (std::uint64_t x = 0; x < count; ++x) basis.vectors(Eigen::Index(x), Eigen::Index(k)) = row[x];
    }
    if (!in) throw FormatError("load_basis: truncated file '" + path + "'");
    return basis;
}

} // namespace sgzrp
