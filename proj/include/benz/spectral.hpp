#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "benz/bitset.hpp"
#include "benz/geometry.hpp"
#include "benz/rational.hpp"

namespace benz {

// Symmetric 01-relations partitioning circle pairs, R0 = identity.
struct RelationFamily {
    int64_t n = 0;
    std::vector<std::string> labels;
    std::vector<std::vector<Bits>> rels; // rels[r][x] = row bitset
    std::vector<std::string> dropped;    // labels of empty relations removed
    std::vector<uint8_t> rel_of;         // n*n -> relation index

    int rel(int32_t x, int32_t y) const { return rel_of[size_t(x) * n + y]; }
    int64_t classes() const { return int64_t(rels.size()) - 1; }
};

// R0..R3 by intersection size q+1, 1, 2, 0 (empty relations dropped)
RelationFamily intersection_relations(const CircleGeometry& g);

// six relations on an odd-order Minkowski plane: intersection size crossed
// with square-type agreement (R2 is empty when q = 3 and gets dropped)
RelationFamily splice_minkowski_odd(const CircleGeometry& g);

struct SchemeData {
    std::vector<std::string> labels;
    std::vector<int64_t> valencies;
    std::vector<std::vector<std::vector<int64_t>>> p; // p[i][j][k]
    std::vector<std::vector<int64_t>> P;              // eigenvalue matrix
    std::vector<int64_t> multiplicities;
    int64_t n = 0;
    int64_t d() const { return int64_t(valencies.size()) - 1; }
};

struct SchemeResult {
    bool ok = false;
    SchemeData data;    // valid when ok
    std::string witness; // (i,j,k)-cell mismatch when not ok
};

// checks A_i A_j = sum_k p_ij^k A_k with p_ij^k = p_ji^k; failure is data
SchemeResult verify_scheme(const RelationFamily& rels);

// exact integer eigenvalue matrix via the intersection-number matrices;
// throws NonIntegerEigenvalue outside the integral case. Row order: valency
// row first, remaining rows lexicographic.
void eigenvalue_matrix(SchemeData& s);

enum class MatrixKind { MobiusEven, LaguerreOdd, MinkowskiEven, ExtendedLaguerre, MinkowskiOddSpliced };

// closed forms for the known families (MinkowskiOddSpliced at q=3 returns the
// degenerate 5x5 with the empty relation and the dimension-0 eigenspace gone)
std::vector<std::vector<int64_t>> reference_matrix(MatrixKind kind, int64_t q);
std::vector<int64_t> reference_multiplicities_6x6(int64_t q);

bool same_rows_up_to_permutation(const std::vector<std::vector<int64_t>>& a,
                                 const std::vector<std::vector<int64_t>>& b);

// ------------------------------------------------------------- G_i graphs ---

struct GiGraph {
    int i = 0;
    std::vector<Bits> adj;
    int64_t degree = -1;   // common degree, -1 if irregular
    bool regular = false;
    std::vector<std::vector<int32_t>> components;
};

GiGraph graph_Gi(const CircleGeometry& g, int i);

struct DezaReport {
    bool ok = false;
    int64_t value_meet = 0;     // common neighbours of vertices meeting in 1 or 2 points
    int64_t value_disjoint = 0; // common neighbours of disjoint vertex pairs
    std::string witness;
};

// exact common-neighbour counts on one G_1 component of an odd Moebius plane
// or CM(2,q,phi); expects {2(q-1), 2(q+1)} split by pair type
DezaReport deza_check(const CircleGeometry& g, const GiGraph& g1,
                      const std::vector<int32_t>& component);

struct G1IsoReport {
    bool ok = false;
    int64_t pairs_checked = 0;
    std::string witness;
};

// M -> f_M between the G_1 graphs of CM(2,q,id) and CM(2,q,phi^k), all pairs
G1IsoReport g1_isomorphism_check(const FieldSpec& F, int k);

// -------------------------------------------------------------- G_P suite ---

struct GPProfile {
    int32_t base = -1;
    std::vector<int32_t> L; // block-ordered circles through the base point
    std::vector<int32_t> R;
    std::vector<std::vector<int32_t>> blocks; // positions into L
    int64_t delta = 0;
    int64_t r_degree = 0;
    bool degrees_ok = false;
    std::vector<std::vector<int64_t>> N; // common-neighbour counts over L
    std::vector<std::pair<int64_t, int64_t>> spectrum; // (eigenvalue, multiplicity) desc
    int64_t lambda2_squared = 0;
    int64_t lambda2_closed_form = -1; // -1 when no closed form applies
    bool eigenvectors_ok = false;     // claimed eigenvector families verified
};

GPProfile gp_profile(const CircleGeometry& g, int32_t p);

// exact spectrum of a symmetric integer matrix whose eigenvalues are integers
// (annihilating-product certificate + modular rank multiplicities); throws
// NonIntegerEigenvalue otherwise
std::vector<std::pair<int64_t, int64_t>> exact_integer_spectrum(
    const std::vector<std::vector<int64_t>>& sym);

struct N00Pair {
    int64_t s = 0;        // |c1 cap c2|
    int64_t n00 = 0;      // common G_P-neighbours
    int64_t n11 = 0;      // circles off P meeting both in exactly one point
    bool formula_ok = false;
    bool same_type = true;
    int64_t resolved = -1; // m1/m2/m3 when the typed closed forms apply
};

N00Pair n00_pair(const CircleGeometry& g, int32_t base, int32_t c1, int32_t c2);

struct SweepReport {
    bool ok = false;
    int64_t checked = 0;
    std::string witness;
};

// all pairs of circles through every base point against the counting formula
SweepReport n00_sweep(const CircleGeometry& g, const std::vector<int32_t>& base_points);

// half of the circles through every point are of square type
SweepReport square_split_check(const CircleGeometry& g);

// closed-form helpers shared with the tests
int64_t closed_m1(int64_t q, int rho);
int64_t closed_m2(int64_t q, int rho);
int64_t closed_m3(int64_t q, int rho);
int64_t closed_p133(int64_t q, int rho);
int64_t closed_p233(int64_t q, int rho);

} // namespace benz
