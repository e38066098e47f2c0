#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "benz/bitset.hpp"
#include "benz/finite_field.hpp"
#include "benz/quadsets.hpp"

namespace benz {

struct Provenance {
    std::string construction;
    int64_t q = 0;
    int phi = 0;
};

// A finite circle geometry CM(rho,q): Moebius (rho=0), Laguerre (rho=1) or
// Minkowski (rho=2) plane, plus the extended Laguerre plane of even order
// (extended=true, circles of size q+2, intersections 0 or 2).
class CircleGeometry {
public:
    int rho = 0;
    int64_t q = 0;
    bool extended = false;

    std::vector<std::string> point_labels;
    std::vector<std::vector<int32_t>> circles; // sorted point ids
    std::vector<Bits> circle_bits;
    // parallel[rel][cls] = sorted point ids; class_of[rel][point] = cls
    std::vector<std::vector<std::vector<int32_t>>> parallel;
    std::vector<std::vector<int32_t>> class_of;
    std::vector<int8_t> circle_type;  // 0 square / 1 non-square, empty if untyped
    std::vector<int32_t> nucleus_pts; // extended Laguerre: points of the added generator
    Provenance prov;

    int64_t num_points() const { return int64_t(point_labels.size()); }
    int64_t num_circles() const { return int64_t(circles.size()); }
    int64_t circle_size() const { return extended ? q + 2 : q + 1; }

    bool parallel_pts(int32_t a, int32_t b) const {
        for (int r = 0; r < rho_classes(); ++r)
            if (class_of[r][a] == class_of[r][b]) return true;
        return false;
    }
    int rho_classes() const { return int(parallel.size()); }

    const std::vector<int32_t>& pencil(int32_t p) const { return pencils_[p]; }
    const std::vector<int32_t>& circles_through_pair(int32_t a, int32_t b) const {
        return pair_circles_[size_t(a) * point_labels.size() + b];
    }
    int64_t intersection_size(int32_t c1, int32_t c2) const {
        return int64_t(Bits::count_and(circle_bits[c1], circle_bits[c2]));
    }
    bool is_nucleus_point(int32_t p) const;

    std::string name() const;

    // call once after filling the public fields
    void finalize();

private:
    std::vector<std::vector<int32_t>> pencils_;
    std::vector<std::vector<int32_t>> pair_circles_;
};

CircleGeometry from_quadratic_set(const QuadraticSet& set);
CircleGeometry minkowski_sharply3(const FieldSpec& F, int phi_exponent);
CircleGeometry polynomial_laguerre(const FieldSpec& F, bool extended = false);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness; // empty when passing
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return c.name + ": " + c.witness;
        return "";
    }
};

// all five axioms plus the six parameter formulas (the extended Laguerre
// plane swaps the tangency axiom for the 0-or-2 intersection law and uses its
// own parameter set)
VerifyReport verify_geometry(const CircleGeometry& g);

struct Residue {
    int32_t base = -1;
    std::vector<int32_t> points;            // geometry point ids
    std::vector<std::vector<int32_t>> lines; // as geometry point ids
    std::vector<int32_t> line_circle;        // circle id per line, -1 for parallel classes
};

Residue residue_at(const CircleGeometry& g, int32_t p);
VerifyReport verify_affine_plane(const CircleGeometry& g, const Residue& r);

// circles through p grouped into residue parallel classes (mutually tangent
// at p); square-type blocks first when the geometry is typed. The extended
// Laguerre plane has no tangent pairs and yields a single block.
std::vector<std::vector<int32_t>> pencil_blocks(const CircleGeometry& g, int32_t p);

// geometric <-> group description of the ovoidal Minkowski plane: circle of
// the group element M maps to the oval-plane section with pole coordinates
// the entries of M; point (A,B) maps to the quadric point B * sigma(A)
struct MinkowskiIso {
    std::vector<int32_t> point_map;  // sharply3 point id -> quadric geometry point id
    std::vector<int32_t> circle_map; // sharply3 circle id -> quadric geometry circle id
    bool verified = false;
};
MinkowskiIso minkowski_isomorphism(const CircleGeometry& group_model,
                                   const CircleGeometry& quadric_model);

// explicit isomorphism between the polynomial Laguerre model and the cone
// model: (s,1,t,t^2) <-> (t,s), (s,0,0,1) <-> (inf,s)
MinkowskiIso laguerre_isomorphism(const CircleGeometry& poly_model,
                                  const CircleGeometry& cone_model);

} // namespace benz
