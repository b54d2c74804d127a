#pragma once

#include "vxe/graph.hpp"
#include "vxe/matrix.hpp"

#include <cstddef>
#include <vector>

namespace vxe {

inline constexpr std::size_t kDefaultSizeCap = 4096;

enum class EigenSolver {
    // Cyclic Jacobi up to DecomposeOptions::jacobi_max_order. Above that
    // LAPACK, falling back to Eigen if LAPACK fails the residual check.
    automatic,
    jacobi,
    lapack, // throws ConvergenceFailure if the residual check fails
    eigen,
};

struct DecomposeOptions {
    std::size_t size_cap = kDefaultSizeCap;
    EigenSolver solver = EigenSolver::automatic;
    std::size_t jacobi_max_order = 128;
};

struct JacobiResult {
    std::vector<double> values;
    Matrix vectors; // column j pairs with values[j]
    int sweeps = 0;
};

// Cyclic Jacobi rotations on a dense symmetric matrix. Sweeps run row by
// row over the strict upper triangle until the off-diagonal Frobenius norm
// drops to rel_tol * ||a||_F. Results are in matrix order, not sorted.
JacobiResult jacobi_eigen(const Matrix& a, double rel_tol = 1e-12, int max_sweeps = 100);

Matrix adjacency_matrix(const Graph& g);

// A = U diag(lambda) U^T with lambda sorted descending. Each eigenvector is
// scaled so its largest-magnitude entry is positive (lowest index wins a
// tie). weight(i, j) = u_ij^2 is the share of vertex i in eigenvector j.
class SpectralDecomposition {
public:
    SpectralDecomposition() = default;

    // Sorts the pairs and applies the sign convention.
    SpectralDecomposition(std::vector<double> eigenvalues, Matrix eigenvectors);

    std::size_t order() const { return eigenvalues_.size(); }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    const Matrix& eigenvectors() const { return eigenvectors_; }

    double weight(Vertex i, std::size_t j) const
    {
        double u = eigenvectors_(i, j);
        return u * u;
    }
    Matrix weights() const;

    // U diag(lambda) U^T
    Matrix reconstruct() const;

private:
    std::vector<double> eigenvalues_;
    Matrix eigenvectors_;
};

// Throws SizeCapExceeded above options.size_cap, BadParameters for n == 0
// and ConvergenceFailure when the eigensolver stalls. Results from LAPACK
// and Eigen are checked for unit columns and |A u - lambda u| <= 1e-8 max(1, Delta).
SpectralDecomposition decompose(const Graph& g, const DecomposeOptions& options = {});

// Eigenvalues closer than grouping_tolerance() are one group; weights of a
// degenerate eigenspace are only meaningful summed over the group.
struct EigenvalueGroup {
    double value = 0.0; // mean of the members
    std::size_t first = 0;
    std::size_t count = 0;
};

double grouping_tolerance(const SpectralDecomposition& s);
std::vector<EigenvalueGroup> eigenvalue_groups(const SpectralDecomposition& s);
std::vector<double> group_weights(const SpectralDecomposition& s,
                                  const std::vector<EigenvalueGroup>& groups, Vertex v);

struct EnergyVector {
    std::vector<double> per_vertex;
    double total = 0.0; // sum of |lambda_j|
};

double vertex_energy(const SpectralDecomposition& s, Vertex v);
double vertex_energy(const Graph& g, Vertex v, const DecomposeOptions& options = {});

EnergyVector all_vertex_energies(const SpectralDecomposition& s);
EnergyVector all_vertex_energies(const Graph& g, const DecomposeOptions& options = {});

double graph_energy(const SpectralDecomposition& s);

// |A| = U |Lambda| U^T; its diagonal holds the vertex energies.
Matrix absolute_value(const SpectralDecomposition& s);

// sum_j p_vj lambda_j^k, the number of closed walks of length k at v.
double spectral_moment(const SpectralDecomposition& s, Vertex v, unsigned k);

// sum_j p_vj |lambda_j|^s
double abs_moment(const SpectralDecomposition& s, Vertex v, double exponent);

struct EnergySplit {
    double first = 0.0;  // Bipartition::first
    double second = 0.0; // Bipartition::second
};

// Throws NotBipartite.
EnergySplit bipartite_energy_split(const Graph& g, const SpectralDecomposition& s);
EnergySplit bipartite_energy_split(const Graph& g, const DecomposeOptions& options = {});

} // namespace vxe
