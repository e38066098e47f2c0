#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "benz/geometry.hpp"
#include "benz/rational.hpp"
#include "benz/spectral.hpp"

namespace benz {

struct IntersectingFamily {
    const CircleGeometry* g = nullptr;
    std::vector<int32_t> ids; // sorted
    int64_t size() const { return int64_t(ids.size()); }
};

struct IntersectWitness {
    bool ok = false;
    int32_t a = -1, b = -1; // first disjoint pair when not ok
};

IntersectWitness is_intersecting(const CircleGeometry& g, const std::vector<int32_t>& ids);
IntersectingFamily make_family(const CircleGeometry& g, std::vector<int32_t> ids);
IntersectingFamily pencil_family(const CircleGeometry& g, int32_t p);

struct MixingRow {
    int32_t point = -1;
    int64_t S = 0, T = 0;
    Rat lhs, rhs, slack;
    bool holds = false;
};

// bipartite mixing inequality at one point, exact rationals
MixingRow mixing_gap_test(const IntersectingFamily& fam, int32_t point);

struct BoundsReport {
    int64_t f = 0;
    int64_t E = 0; // edges of G_1 restricted to the family
    Rat count_bound;
    Rat prop_bound;
    int a = 0;
    int32_t best_point = -1;
    int64_t best_coverage = 0;
    bool count_bound_achieved = false;
    bool prop_achieved = false;
    int64_t hm_threshold = 0;
    bool stability_applies = false; // f >= q^2/sqrt(2) + 2 sqrt(2) q + 8, compared by squaring
    double stability_threshold_approx = 0;
    // per-point mixing rows; empty for a plain even-order Laguerre plane,
    // where the inequality lives on the extended plane instead
    bool mixing_available = false;
    std::vector<MixingRow> mixing;
    bool mixing_all_hold = false;
};

BoundsReport bounds_report(const IntersectingFamily& fam);

// f >= q^2/sqrt(2) + 2 sqrt(2) q + 8, decided exactly by squaring
bool stability_bound_met(int64_t q, int64_t f);

// if some point lies on more than binom(q+2-rho,2) circles of the family, it
// lies on all of them
bool hm_absorption_ok(const IntersectingFamily& fam);

struct RatioBound {
    int64_t k = 0;          // disjointness valency
    int64_t lambda_min = 0;
    Rat bound;              // n(-lambda_min)/(k-lambda_min)
    bool pencil_tight = false;
};

RatioBound ratio_bound(const SchemeData& s, const std::vector<int>& disjoint_rels,
                       int64_t pencil_size);

struct SearchResult {
    int64_t maximum = 0;
    std::vector<std::vector<int32_t>> families; // all maximum families, sorted ids
    bool complete = false;
    int64_t nodes = 0;
    int64_t upper_bound = 0;
};

// exact branch-and-bound maximum-clique search on the meets graph, with
// greedy-colouring bounds; enumerates every maximum family. The progress
// callback, when set, is invoked with (nodes, incumbent) every ~1M nodes.
using SearchProgress = std::function<void(int64_t, int64_t)>;
SearchResult max_families_exact(const CircleGeometry& g, int64_t node_budget = 200'000'000,
                                const SearchProgress& progress = {});

std::vector<int32_t> greedy_family(const CircleGeometry& g);

enum class FamilyClass { Pencil, NucleusPencil, TwoPointMobius3, Other };

struct FamilyClassification {
    FamilyClass cls = FamilyClass::Other;
    int32_t point = -1; // common point for the pencil classes
};

FamilyClassification classify_family(const IntersectingFamily& fam);
std::string family_class_name(FamilyClass c);

} // namespace benz
