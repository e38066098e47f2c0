#pragma once

#include <optional>
#include <vector>

#include "benz/projective.hpp"

namespace benz {

enum class QKind { Elliptic, Hyperbolic, Cone, HyperovalCone };
enum class PlaneClass { Tangent, Oval, Generated };
enum class ConicPosition { External, Internal, OnConic };

// A quadratic set in PG(3,q): elliptic quadric, hyperbolic quadric, cone over
// a conic, or (q even) the cone extended by the nucleus generator.
struct QuadraticSet {
    QKind kind;
    const ProjSpace* S;
    Bits points;
    std::optional<int32_t> vertex;       // degenerate point of the cone kinds
    std::optional<int32_t> nucleus_line; // HyperovalCone: line <vertex, nucleus>
    std::optional<QuadForm> form;        // Elliptic / Hyperbolic
    int epsilon = 0;                     // -1 elliptic, +1 hyperbolic

    bool has_degenerate(int32_t plane) const {
        return vertex && S->plane_bits(plane).test(*vertex);
    }
};

QuadraticSet build_quadratic_set(QKind kind, const ProjSpace& S3);

PlaneClass classify_plane(const QuadraticSet& set, int32_t plane);

// circles = oval-plane sections, listed in plane-id order
struct OvalCircle {
    int32_t plane;
    std::vector<int32_t> points; // sorted PG point ids
};
std::vector<OvalCircle> oval_circles(const QuadraticSet& set);

// position of a point of an oval plane relative to the section, by counting
// tangent lines through it (2 = external, 0 = internal); odd q
ConicPosition external_internal(const QuadraticSet& set, int32_t plane, int32_t point);

// exhaustive check of the three quadratic-set axioms (tests, small q)
struct QuadSetAxiomReport {
    bool line_trichotomy = false;
    bool tangent_hyperplanes = false;
    bool not_two_subspaces = false;
    bool pass() const { return line_trichotomy && tangent_hyperplanes && not_two_subspaces; }
};
QuadSetAxiomReport check_quadratic_set_axioms(const QuadraticSet& set);

// q+1 points of a plane section, no three collinear (q+2 for a hyperoval)
bool is_oval_section(const QuadraticSet& set, int32_t plane);

} // namespace benz
