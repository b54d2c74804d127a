#pragma once

#include "vxe/graph.hpp"
#include "vxe/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vxe {

// Per-vertex upper bound sqrt(d_i). Attained exactly at star centers.
double upper_sqrt_degree(const Graph& g, Vertex v);

// d_i / Delta. Throws EmptyGraph when g has no edges.
double lower_degree_ratio(const Graph& g, Vertex v);

// sqrt(d_i / Delta). Throws EmptyGraph when g has no edges.
double lower_sqrt_degree_ratio(const Graph& g, Vertex v);

// d_i^{3/2} / sqrt(M_4(v)), with M_4 the exact closed 4-walk count.
// Throws ZeroDegree.
double lower_m4(const Graph& g, Vertex v);

// Hoelder-type lower bound
//
//   phi_v(|A|^k)^q / phi_v(|A|^{p(k-1)+1})^{q/p},   1/p + 1/q = 1,
//
// where phi_v(|A|^s) = sum_j p_vj |lambda_j|^s. With (k, p) = (2, 3) this is
// lower_m4. Throws ZeroDegree, and BadExponent for k < 2 or p <= 1.
double lower_holder(const Graph& g, const SpectralDecomposition& s, Vertex v, unsigned k, double p);

// sqrt(d_i) * sqrt(d_i / (d_i + Delta - 1)) when v lies on no 4-cycle,
// empty otherwise. Throws ZeroDegree.
std::optional<double> lower_quadrangle_free(const Graph& g, Vertex v);

// Weight of the Perron group at v: sum of p_vj over the eigenvalue group of
// lambda_1. This is the p_{i1} used by the Koolen-Moulton type bounds.
double top_group_weight(const SpectralDecomposition& s, Vertex v);

// Weight of every eigenvalue with |lambda| = lambda_1 at v, together with
// the number of such eigenvalues.
struct AbsTopGroup {
    double weight = 0.0;
    std::size_t multiplicity = 0;
};
AbsTopGroup abs_top_group(const SpectralDecomposition& s, Vertex v);

// 1 / (lambda_1^{2r} + lambda_1^{2r-2}), r the eccentricity of v. A lower
// bound on top_group_weight. Throws DisconnectedError, EmptyGraph.
double km_weight_lower_bound(const Graph& g, const SpectralDecomposition& s, Vertex v);

// p|lambda_1| + sqrt((d_i - p lambda_1^2)(1 - p)) with p = top_group_weight.
// Throws DisconnectedError, EmptyGraph, NegativeRadicand.
double km_upper_raw(const Graph& g, const SpectralDecomposition& s, Vertex v);

// alpha = max(sqrt(sum_j d_j^2 / n), sqrt(Delta))
double km_alpha(const Graph& g);

// The purely combinatorial Koolen-Moulton type bound, obtained from
// km_upper_raw by p >= 1/(2 Delta^{2r}) and lambda_1 >= alpha.
// Throws DisconnectedError, EmptyGraph.
double km_upper(const Graph& g, Vertex v);

struct GlobalBounds {
    double sum_sqrt_degrees = 0.0; // E(G) <= sum sqrt(d_i)
    double mcclelland = 0.0;       // sum sqrt(d_i) <= sqrt(2mn)
};
GlobalBounds global_bounds(const Graph& g);

// Bounds on E(G) for bipartite graphs. Part 0 is the smaller part.
struct PartBounds {
    std::vector<Vertex> vertices;
    double lower = 0.0; // (2 / sqrt(Delta)) sum_{V} sqrt(d)
    double upper = 0.0; // 2 sum_{V} sqrt(d)
};

struct BipartiteBounds {
    PartBounds parts[2];
    std::size_t tighter_lower_part = 0;
    std::size_t tighter_upper_part = 0;

    // Part-size bounds, only for connected graphs.
    bool size_bounds_applicable = false;
    double size_upper = 0.0; // 2 sqrt(n_1 m), n_1 the smaller part
    // 2 (n_x - 1 + sqrt(m - n_x + 1)) / sqrt(Delta), evaluated with n_x the
    // size of part 0 and of part 1 respectively.
    double size_lower[2] = {0.0, 0.0};
};

// Throws NotBipartite.
BipartiteBounds bipartite_global_bounds(const Graph& g);

struct BoundValue {
    std::string name;
    double value = 0.0;
    bool applicable = false;
};

struct BoundReport {
    Vertex vertex = 0;
    std::size_t degree = 0;
    double energy = 0.0;
    std::vector<BoundValue> lower_bounds;
    std::vector<BoundValue> upper_bounds;
    std::optional<std::size_t> eccentricity; // connected graphs only
    double alpha = 0.0;
    // Perron-group weight and its eccentricity lower bound (connected only).
    std::optional<double> top_weight;
    std::optional<double> top_weight_lower_bound;

    // Every applicable bound holds within tol.
    bool sandwich_holds(double tol = 1e-8) const;
};

BoundReport bound_report(const Graph& g, const SpectralDecomposition& s, Vertex v);
BoundReport bound_report(const Graph& g, Vertex v, const DecomposeOptions& options = {});

} // namespace vxe
