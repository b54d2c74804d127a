#pragma once

#include "vxe/graph.hpp"
#include "vxe/spectral.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace vxe {

inline constexpr double kHyperThreshold = 2.0;
inline constexpr double kHypoThreshold = 1.0;
inline constexpr double kBorderlineBand = 1e-9;

// Hyperenergetic: energy >= 2. Hypoenergetic: energy < 1. An energy within
// kBorderlineBand of a threshold is read as equal to it (so 2 - 1e-15 is
// hyperenergetic and 1 - 1e-15 is not hypoenergetic) and flagged borderline.
struct VertexClass {
    Vertex vertex = 0;
    double energy = 0.0;
    bool hyperenergetic = false;
    bool hypoenergetic = false;
    bool borderline = false;
};

VertexClass classify_energy(Vertex v, double energy);
VertexClass classify_vertex(const SpectralDecomposition& s, Vertex v);
VertexClass classify_vertex(const Graph& g, Vertex v, const DecomposeOptions& options = {});

enum class Conclusion {
    completely_non_hyperenergetic, // every vertex energy < 2
    completely_hyperenergetic,     // every vertex energy >= 2
    completely_non_hypoenergetic,  // every vertex energy >= 1
    vertices_hypoenergetic,        // the listed vertices have energy < 1
    energy_below_order,            // E(G) < n
};

std::string to_string(Conclusion c);

// A structural sufficient condition and what it guarantees when it holds.
struct Criterion {
    std::string name;
    std::string parameters; // human-readable instantiation, e.g. "d=3"
    bool holds = false;
    Conclusion conclusion;
    std::vector<Vertex> vertices; // for vertices_hypoenergetic
};

// Evaluates every sufficient criterion from structure alone. The
// independent-set criterion uses `independent_set` when given (it is
// checked, never searched for) and the larger bipartition part otherwise.
std::vector<Criterion> criteria_check(const Graph& g,
                                      std::optional<std::span<const Vertex>> independent_set = {});

// Whether the spectral data agrees with a holding criterion's conclusion.
bool conclusion_satisfied(const Criterion& c, const EnergyVector& energies, double tol = 1e-8);

struct GraphClass {
    std::vector<VertexClass> vertices;
    bool completely_hyperenergetic = false;
    bool completely_non_hyperenergetic = false;
    bool completely_hypoenergetic = false;
    bool completely_non_hypoenergetic = false;
    std::vector<Criterion> satisfied_criteria;
};

GraphClass classify_graph(const Graph& g, const SpectralDecomposition& s,
                          std::optional<std::span<const Vertex>> independent_set = {});
GraphClass classify_graph(const Graph& g, const DecomposeOptions& options = {});

} // namespace vxe
