#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "benz/finite_field.hpp"

namespace benz {

enum class ClassKind { Identity, Unipotent, Split, NonSplit };

// conjugation-invariant label: Split carries the eigenvalue ratio x
// canonicalized under inversion (as a dlog), NonSplit carries the root coset
// r*F_q^* in F_{q^2}^*/F_q^* canonicalized under inversion (as a coset index)
struct ClassLabel {
    ClassKind kind;
    int64_t param = 0;
    friend bool operator==(const ClassLabel& a, const ClassLabel& b) {
        return a.kind == b.kind && a.param == b.param;
    }
    friend bool operator<(const ClassLabel& a, const ClassLabel& b) {
        if (a.kind != b.kind) return int(a.kind) < int(b.kind);
        return a.param < b.param;
    }
};

struct ConjugacyClass {
    ClassLabel label;
    int64_t size = 0;
    int32_t representative = -1; // element index
};

// PGL(2,q) as normalized 2x2 matrices (first nonzero entry in row-major order
// is 1), with its action on PG(1,q).
class PGL2 {
public:
    explicit PGL2(const FieldSpec& F);

    static const PGL2& get(int64_t q); // cached

    const FieldSpec& field() const { return *F_; }
    int64_t order() const { return int64_t(elems_.size()); }
    const std::array<int, 4>& elem(int32_t i) const { return elems_[i]; }

    int32_t id_of(std::array<int, 4> m) const;
    int32_t mul(int32_t a, int32_t b) const;
    int32_t inverse(int32_t a) const;
    int32_t identity() const { return id_; }

    SquareClass det_class(int32_t a) const; // PSL membership test
    bool in_psl(int32_t a) const { return det_class(a) == SquareClass::Square; }

    // image of PG(1,q) point id under the element
    int32_t apply(int32_t a, int32_t pg1_point) const { return perm_[a][pg1_point]; }
    int fixed_point_count(int32_t a) const;

    int64_t num_pg1_points() const { return F_->q() + 1; }
    // PG(1,q) point ids follow ProjSpace(1,q) enumeration
    std::array<int, 2> pg1_point(int32_t id) const;
    int32_t pg1_id(int x0, int x1) const;

    ClassLabel classify(int32_t a) const; // odd q for Split/NonSplit split
    std::vector<ConjugacyClass> conjugacy_classes() const;

private:
    const FieldSpec* F_;
    std::vector<std::array<int, 4>> elems_;
    std::vector<int32_t> code_to_id_;
    std::vector<std::vector<int32_t>> perm_;
    std::vector<std::array<int, 2>> pg1_pts_;
    int32_t id_ = -1;

    std::array<int, 4> normalize(std::array<int, 4> m) const;
    int64_t code_of(const std::array<int, 4>& m) const;
};

struct CharacterTable {
    int64_t q = 0;
    std::vector<ConjugacyClass> classes;                    // canonical order
    std::vector<std::string> row_labels;
    std::vector<std::vector<std::complex<double>>> values;  // rows x classes
    std::vector<int64_t> degrees;

    // max deviation from the first / second orthogonality relations
    double row_orthogonality_error() const;
    double column_orthogonality_error() const;
};

CharacterTable character_table(const FieldSpec& F);

} // namespace benz
