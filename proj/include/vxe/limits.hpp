#pragma once

#include "vxe/graph.hpp"
#include "vxe/spectral.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace vxe::limits {

// The two-sided infinite path Z.
struct Line {};
// The one-sided infinite path 1, 2, 3, ... seen from vertex `index` (1-based).
struct SemiLine {
    std::size_t index = 1;
};
// The infinite d-regular tree, d >= 3.
struct RegularTree {
    std::size_t d = 3;
};

using LimitModel = std::variant<Line, SemiLine, RegularTree>;

// "line", "semiline:<i>", "tree:<d>". Throws BadParameters.
LimitModel parse_model(std::string_view text);
std::string to_string(const LimitModel& model);
void validate(const LimitModel& model);

// Closed-form vertex energy of the model:
//   Line            4/pi
//   SemiLine(1)     8/(3 pi)
//   SemiLine(i)     4/pi + 4 (-1)^i / (pi (4 i^2 - 1))
//   RegularTree(d)  (2d sqrt(d-1) - d(d-2) atan(2 sqrt(d-1)/(d-2))) / pi
double limit_energy(const LimitModel& model);

// The semiline value from the general-index formula (equal to the
// dedicated SemiLine(1) value at i = 1).
double semiline_limit(std::size_t index);

// Spectral measure of the root: arcsine law on [-2, 2] for the line,
// semicircle law on [-2, 2] for SemiLine(1), Kesten-McKay on
// [-2 sqrt(d-1), 2 sqrt(d-1)] for the tree. Throws UnsupportedModel for
// SemiLine(i > 1).
//
// All three are symmetric with support [-R, R]. `angular` is
// density(R sin t) * R cos t on [0, pi/2], written out so that it stays
// bounded at the endpoints.
struct DensitySpec {
    double lower = 0.0;
    double upper = 0.0;
    std::function<double(double)> density;
    std::function<double(double)> angular;
};
DensitySpec density(const LimitModel& model);

// Integral of density * |x|^abs_power over the support, via x = R sin(t)
// and adaptive Simpson on [0, pi/2] doubled by symmetry.
double density_moment(const LimitModel& model, double abs_power);

// Total mass of the density; 1 up to quadrature error.
double density_mass(const LimitModel& model);

// First absolute moment of the density, i.e. the root energy.
double density_quadrature(const LimitModel& model);

// Radius-r ball of the d-regular tree: root 0 and every internal vertex
// has degree d, the leaves sit at depth r. Vertices are numbered in BFS
// order. Throws SizeCapExceeded when it would exceed `cap` vertices.
Graph regular_tree_ball(std::size_t d, std::size_t radius, std::size_t cap = kDefaultSizeCap);
std::size_t regular_tree_ball_order(std::size_t d, std::size_t radius);

struct TruncationPoint {
    std::size_t size = 0;
    double energy = 0.0;
};

// Finite approximations of the model, evaluated with the spectral module:
//   Line          middle vertex of the path on 2s+1 vertices
//   SemiLine(i)   vertex i (1-based) of the path on s vertices, s >= i
//   RegularTree   root of the radius-s ball
// `sizes` must be ascending. Throws SizeCapExceeded, BadParameters.
std::vector<TruncationPoint> truncation_series(const LimitModel& model, const std::vector<std::size_t>& sizes,
                                               const DecomposeOptions& options = {});

} // namespace vxe::limits
