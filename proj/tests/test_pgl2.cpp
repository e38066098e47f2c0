#include "doctest.h"

#include <map>
#include <set>

#include "benz/pgl2.hpp"
#include "benz/spectral.hpp"

using namespace benz;

TEST_CASE("group enumeration") {
    CHECK(PGL2::get(5).order() == 120);
    CHECK(PGL2::get(9).order() == 720);
    try {
        PGL2::get(67);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind == Err::TooLarge);
    }
    const PGL2& G = PGL2::get(7);
    int identities = 0;
    for (int32_t a = 0; a < G.order(); ++a)
        if (G.mul(a, G.identity()) == a && G.mul(G.identity(), a) == a &&
            G.classify(a).kind == ClassKind::Identity)
            ++identities;
    CHECK(identities == 1);
    // closure spot-check
    for (int32_t a = 0; a < G.order(); a += 17)
        for (int32_t b = 0; b < G.order(); b += 13) {
            int32_t c = G.mul(a, b);
            CHECK(G.mul(G.inverse(a), c) == b);
        }
}

TEST_CASE("conjugacy classes at q=5") {
    const PGL2& G = PGL2::get(5);
    auto classes = G.conjugacy_classes();
    CHECK(classes.size() == 7); // q+2
    std::multiset<int64_t> sizes;
    int64_t total = 0;
    for (const auto& c : classes) {
        sizes.insert(c.size);
        total += c.size;
    }
    CHECK(total == 120);
    CHECK(sizes == std::multiset<int64_t>{1, 24, 30, 15, 20, 20, 10});
}

TEST_CASE("class sizes follow the table formulas") {
    for (int64_t q : {5, 7}) {
        const PGL2& G = PGL2::get(q);
        for (const auto& c : G.conjugacy_classes()) {
            switch (c.label.kind) {
            case ClassKind::Identity: CHECK(c.size == 1); break;
            case ClassKind::Unipotent: CHECK(c.size == q * q - 1); break;
            case ClassKind::Split:
                // x = -1 (dlog (q-1)/2) gives the half class
                CHECK(c.size == (c.label.param == (q - 1) / 2 ? q * (q + 1) / 2 : q * (q + 1)));
                break;
            case ClassKind::NonSplit:
                CHECK(c.size == (c.label.param == (q + 1) / 2 ? q * (q - 1) / 2 : q * (q - 1)));
                break;
            }
        }
    }
}

TEST_CASE("classification is conjugation invariant") {
    const PGL2& G = PGL2::get(7);
    uint64_t state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return int32_t((state >> 33) % uint64_t(G.order()));
    };
    for (int trial = 0; trial < 1000; ++trial) {
        int32_t m = next(), g = next();
        int32_t conj = G.mul(G.mul(g, m), G.inverse(g));
        CHECK(G.classify(conj) == G.classify(m));
    }
}

TEST_CASE("fixed point counts by class kind") {
    for (int64_t q : {5, 7}) {
        const PGL2& G = PGL2::get(q);
        for (int32_t a = 0; a < G.order(); ++a) {
            int fp = G.fixed_point_count(a);
            switch (G.classify(a).kind) {
            case ClassKind::Identity: CHECK(fp == q + 1); break;
            case ClassKind::Unipotent: CHECK(fp == 1); break;
            case ClassKind::Split: CHECK(fp == 2); break;
            case ClassKind::NonSplit: CHECK(fp == 0); break;
            }
        }
    }
}

TEST_CASE("PSL has index two for odd q") {
    for (int64_t q : {3, 5, 7, 9}) {
        const PGL2& G = PGL2::get(q);
        int64_t psl = 0;
        for (int32_t a = 0; a < G.order(); ++a)
            if (G.in_psl(a)) ++psl;
        CHECK(psl == G.order() / 2);
    }
}

TEST_CASE("character table") {
    for (int64_t q : {5, 7}) {
        CharacterTable T = character_table(FieldSpec::get(q));
        CHECK(int64_t(T.classes.size()) == q + 2);
        int64_t sum_sq = 0;
        for (int64_t d : T.degrees) sum_sq += d * d;
        CHECK(sum_sq == q * q * q - q);
        CHECK(T.row_orthogonality_error() < 1e-6);
        CHECK(T.column_orthogonality_error() < 1e-6);
    }
    CharacterTable T5 = character_table(FieldSpec::get(5));
    CHECK(std::multiset<int64_t>(T5.degrees.begin(), T5.degrees.end()) ==
          std::multiset<int64_t>{1, 1, 5, 5, 4, 4, 6});
    // lambda_{-1}(D_x) = -1 on the non-square ratio class (x = 2 at q = 5)
    const FieldSpec& F5 = FieldSpec::get(5);
    int64_t e = F5.dlog(2);
    int64_t canonical = std::min(e, 4 - e);
    for (size_t c = 0; c < T5.classes.size(); ++c)
        if (T5.classes[c].label.kind == ClassKind::Split && T5.classes[c].label.param == canonical)
            CHECK(T5.values[1][c].real() == doctest::Approx(-1.0));
    CHECK_THROWS_AS(character_table(FieldSpec::get(4)), Error);
}

TEST_CASE("conjugacy relations form an association scheme at q=5") {
    const PGL2& G = PGL2::get(5);
    int64_t n = G.order();
    auto classes = G.conjugacy_classes();
    std::map<std::pair<ClassKind, int64_t>, int> index;
    for (size_t i = 0; i < classes.size(); ++i)
        index[{classes[i].label.kind, classes[i].label.param}] = int(i);

    RelationFamily fam;
    fam.n = n;
    fam.rels.assign(classes.size(), std::vector<Bits>(n, Bits(n)));
    fam.rel_of.assign(size_t(n) * n, 0);
    for (size_t i = 0; i < classes.size(); ++i) fam.labels.push_back("C" + std::to_string(i));
    for (int32_t x = 0; x < n; ++x)
        for (int32_t y = 0; y < n; ++y) {
            ClassLabel l = G.classify(G.mul(y, G.inverse(x)));
            int r = index[{l.kind, l.param}];
            fam.rels[r][x].set(y);
            fam.rel_of[size_t(x) * n + y] = uint8_t(r);
        }
    SchemeResult res = verify_scheme(fam);
    CHECK(res.ok);
    eigenvalue_matrix(res.data);
    int64_t total = 0;
    for (int64_t m : res.data.multiplicities) total += m;
    CHECK(total == n);
}
