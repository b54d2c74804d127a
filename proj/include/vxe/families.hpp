#pragma once

#include "vxe/graph.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace vxe::families {

struct Complete {
    std::size_t n;
};
struct Cycle {
    std::size_t n;
};
// Vertices 0..n-1 in order; endpoints 0 and n-1.
struct Path {
    std::size_t n;
};
// Center is vertex 0.
struct Star {
    std::size_t n;
};
// First part is 0..n1-1, second part n1..n1+n2-1.
struct CompleteBipartite {
    std::size_t n1;
    std::size_t n2;
};
// Vertex ids are the bit patterns of the coordinate tuples.
struct Hypercube {
    std::size_t dim;
};
// Hub is vertex 0; triangle t uses vertices 2t+1 and 2t+2.
struct Friendship {
    std::size_t k;
};
// Vertex i adjacent to i +- s (mod n) for s in connections.
struct Circulant {
    std::size_t n;
    std::vector<std::size_t> connections;
};

using FamilySpec =
    std::variant<Complete, Cycle, Path, Star, CompleteBipartite, Hypercube, Friendship, Circulant>;

// Parses the CLI notation: "complete:4", "cycle:6", "path:5", "star:5",
// "kbip:2,3", "hypercube:3", "friendship:2", "circulant:17:1,4".
// Throws BadParameters for unknown names, malformed numbers and parameters
// outside the family's range.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

// Throws BadParameters when the parameters are out of range.
void validate(const FamilySpec& spec);

Graph generate(const FamilySpec& spec);

struct Role {
    std::string name;
    std::vector<Vertex> vertices;
    double energy = 0.0;
};

struct RoleEnergies {
    bool has_closed_form = true;
    std::vector<Role> roles;

    // Expands the roles to one energy per vertex.
    std::vector<double> per_vertex(std::size_t n) const;
};

// Closed-form vertex energies. Circulants have none and return
// has_closed_form == false with no roles.
RoleEnergies closed_form_energies(const FamilySpec& spec);

} // namespace vxe::families
