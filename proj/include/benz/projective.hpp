#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "benz/bitset.hpp"
#include "benz/error.hpp"
#include "benz/finite_field.hpp"

namespace benz {

using Coords = std::array<int, 4>; // element codes, unused tail = 0

// PG(n,q), n in {1,2,3}. Points and (for n=3) planes are enumerated in
// lexicographic order of their normalized coordinate vectors (first nonzero
// coordinate = 1). Plane k has the dual coordinates of point k.
class ProjSpace {
public:
    ProjSpace(int n, const FieldSpec& F);

    static const ProjSpace& get(int n, int64_t q); // cached

    int n() const { return n_; }
    const FieldSpec& field() const { return *F_; }
    int64_t q() const { return F_->q(); }

    int64_t num_points() const { return int64_t(pts_.size()); }
    int64_t num_lines() const { return int64_t(lines_.size()); }
    int64_t num_planes() const { return int64_t(n_ == 3 ? pts_.size() : 0); }

    const Coords& point(int32_t id) const { return pts_[id]; }
    int32_t point_id(Coords c) const; // normalizes first
    std::string point_label(int32_t id) const;

    const std::vector<int32_t>& line(int32_t id) const { return lines_[id]; }
    const Bits& line_bits(int32_t id) const { return line_bits_[id]; }
    int32_t line_through(int32_t p, int32_t r) const { return line_of_pair_[size_t(p) * pts_.size() + r]; }
    const std::vector<int32_t>& lines_on_point(int32_t p) const { return lines_on_pt_[p]; }

    // n = 3 only
    const Coords& plane_dual(int32_t id) const { return pts_[id]; }
    const Bits& plane_bits(int32_t id) const { return plane_bits_[id]; }
    bool incident(int32_t point, int32_t plane) const { return plane_bits_[plane].test(point); }
    // lines contained in the plane through a given point of it
    std::vector<int32_t> lines_in_plane_through(int32_t plane, int32_t point) const;

    Coords normalize(Coords c) const;
    int dot(const Coords& a, const Coords& b) const;

private:
    int n_;
    const FieldSpec* F_;
    std::vector<Coords> pts_;
    std::vector<int32_t> code_to_id_;
    std::vector<std::vector<int32_t>> lines_;
    std::vector<Bits> line_bits_;
    std::vector<int32_t> line_of_pair_;
    std::vector<std::vector<int32_t>> lines_on_pt_;
    std::vector<Bits> plane_bits_;
};

// Quadratic form kappa(x) = sum_{i<=j} a_ij x_i x_j on F_q^4.
struct QuadForm {
    const FieldSpec* F;
    std::array<std::array<int, 4>, 4> a{}; // upper-triangular codes

    int kappa(const Coords& x) const;
    // polarization b(x,y) = kappa(x+y) - kappa(x) - kappa(y)
    int bilinear(const Coords& x, const Coords& y) const;
    SquareClass kappa_class(const Coords& x) const { return F->square_class(kappa(x)); }
};

// Polarity of PG(3,q) induced by a nondegenerate quadratic form, odd q.
class Polarity {
public:
    Polarity(const ProjSpace& S, const QuadForm& form);

    int32_t point_perp(int32_t point) const;  // -> plane id
    int32_t plane_perp(int32_t plane) const;  // -> point id (the pole)
    int32_t line_perp(int32_t line) const;    // -> line id

    const QuadForm& form() const { return form_; }

private:
    const ProjSpace* S_;
    QuadForm form_;
    std::array<std::array<int, 4>, 4> B_;    // Gram matrix of the bilinear form
    std::array<std::array<int, 4>, 4> Binv_;
};

} // namespace benz
