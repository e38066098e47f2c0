#include "doctest.h"

#include <map>
#include <set>

#include "benz/cli.hpp"
#include "benz/pgl2.hpp"
#include "benz/spectral.hpp"

using namespace benz;

TEST_CASE("intersection relation valencies") {
    {
        RelationFamily fam = intersection_relations(build_geometry("mobius", 4, 0));
        SchemeResult res = verify_scheme(fam);
        REQUIRE(res.ok);
        CHECK(res.data.valencies == std::vector<int64_t>{1, 15, 40, 12});
    }
    {
        RelationFamily fam = intersection_relations(build_geometry("laguerre-ext", 4, 0));
        CHECK(fam.dropped.size() == 1); // tangency relation is empty
        SchemeResult res = verify_scheme(fam);
        REQUIRE(res.ok);
        CHECK(res.data.valencies == std::vector<int64_t>{1, 45, 18});
    }
    {
        RelationFamily fam = intersection_relations(build_geometry("laguerre", 3, 0));
        SchemeResult res = verify_scheme(fam);
        REQUIRE(res.ok);
        CHECK(res.data.valencies == std::vector<int64_t>{1, 8, 12, 6});
    }
}

TEST_CASE("spliced relations on odd Minkowski planes") {
    {
        RelationFamily fam = splice_minkowski_odd(build_geometry("minkowski", 5, 0));
        CHECK(fam.rels.size() == 6);
        SchemeResult res = verify_scheme(fam);
        REQUIRE(res.ok);
        CHECK(res.data.valencies == std::vector<int64_t>{1, 24, 15, 30, 20, 30});
    }
    {
        RelationFamily fam = splice_minkowski_odd(build_geometry("minkowski", 3, 0));
        CHECK(fam.rels.size() == 5); // R2 empty at q=3
        CHECK(fam.dropped.size() == 1);
    }
    CHECK_THROWS_AS(splice_minkowski_odd(build_geometry("minkowski", 4, 0)), Error);
    CHECK_THROWS_AS(splice_minkowski_odd(build_geometry("mobius", 5, 0)), Error);
}

TEST_CASE("geometric and group square-type splits agree at q=5") {
    CircleGeometry grp = minkowski_sharply3(FieldSpec::get(5), 0);
    CircleGeometry quad = build_geometry("minkowski", 5, 0);
    MinkowskiIso iso = minkowski_isomorphism(grp, quad);
    REQUIRE(iso.verified);
    RelationFamily fg = splice_minkowski_odd(grp);
    RelationFamily fq = splice_minkowski_odd(quad);
    for (int32_t x = 0; x < grp.num_circles(); ++x)
        for (int32_t y = 0; y < grp.num_circles(); ++y)
            CHECK(fg.rel(x, y) == fq.rel(iso.circle_map[x], iso.circle_map[y]));
}

TEST_CASE("unspliced relations on an odd Minkowski plane are not a scheme") {
    RelationFamily fam = intersection_relations(build_geometry("minkowski", 5, 0));
    SchemeResult res = verify_scheme(fam);
    CHECK_FALSE(res.ok);
    CHECK(!res.witness.empty());
}

TEST_CASE("eigenvalue matrices match the closed forms") {
    {
        RelationFamily fam = intersection_relations(build_geometry("mobius", 4, 0));
        SchemeResult res = verify_scheme(fam);
        REQUIRE(res.ok);
        eigenvalue_matrix(res.data);
        CHECK(same_rows_up_to_permutation(res.data.P, {{1, 15, 40, 12},
                                                       {1, 3, -4, 0},
                                                       {1, -2, 6, -5},
                                                       {1, -5, 0, 4}}));
        CHECK(same_rows_up_to_permutation(res.data.P,
                                          reference_matrix(MatrixKind::MobiusEven, 4)));
    }
    {
        RelationFamily fam = splice_minkowski_odd(build_geometry("minkowski", 5, 0));
        SchemeResult res = verify_scheme(fam);
        REQUIRE(res.ok);
        eigenvalue_matrix(res.data);
        CHECK(same_rows_up_to_permutation(res.data.P, {{1, 24, 15, 30, 20, 30},
                                                       {1, 24, 15, -30, 20, -30},
                                                       {1, 0, 3, 6, -4, -6},
                                                       {1, 0, 3, -6, -4, 6},
                                                       {1, -6, 0, 0, 5, 0},
                                                       {1, 4, -5, 0, 0, 0}}));
        // multiplicity of each eigenvalue row
        std::multiset<int64_t> mults(res.data.multiplicities.begin(),
                                     res.data.multiplicities.end());
        CHECK(mults == std::multiset<int64_t>{1, 1, 25, 25, 32, 36});
    }
}

TEST_CASE("scheme orthogonality holds exactly") {
    for (auto setup : {std::pair<std::string, int64_t>{"mobius", 4},
                       {"laguerre", 3},
                       {"minkowski", 4},
                       {"laguerre-ext", 4}}) {
        RelationFamily fam = intersection_relations(build_geometry(setup.first, setup.second, 0));
        SchemeResult res = verify_scheme(fam);
        REQUIRE(res.ok);
        eigenvalue_matrix(res.data);
        const auto& s = res.data;
        size_t m = s.valencies.size();
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j) {
                int64_t acc = 0;
                for (size_t r = 0; r < m; ++r)
                    acc += s.multiplicities[r] * s.P[r][i] * s.P[r][j];
                CHECK(acc == (i == j ? s.n * s.valencies[i] : 0));
            }
        // non-principal rows sum to zero against valency weights is the
        // i=0 column case above; also each non-valency row sums to 0
        for (size_t r = 1; r < m; ++r) {
            int64_t rowsum = 0;
            for (size_t i = 0; i < m; ++i) rowsum += s.P[r][i];
            CHECK(rowsum == 0);
        }
    }
}

TEST_CASE("degenerate five-relation case at q=3") {
    RelationFamily fam = splice_minkowski_odd(build_geometry("minkowski", 3, 0));
    SchemeResult res = verify_scheme(fam);
    REQUIRE(res.ok);
    eigenvalue_matrix(res.data);
    CHECK(res.data.P.size() == 5);
    CHECK(same_rows_up_to_permutation(res.data.P,
                                      reference_matrix(MatrixKind::MinkowskiOddSpliced, 3)));
    std::multiset<int64_t> mults(res.data.multiplicities.begin(), res.data.multiplicities.end());
    CHECK(mults == std::multiset<int64_t>{1, 1, 9, 9, 4});
}

TEST_CASE("isomorphic models produce identical eigenvalue matrices") {
    auto matrix_of = [](const CircleGeometry& g) {
        SchemeResult res = verify_scheme(intersection_relations(g));
        REQUIRE(res.ok);
        eigenvalue_matrix(res.data);
        return res.data.P;
    };
    CHECK(matrix_of(polynomial_laguerre(FieldSpec::get(3))) ==
          matrix_of(build_geometry("laguerre", 3, 0)));
    CHECK(matrix_of(polynomial_laguerre(FieldSpec::get(4), true)) ==
          matrix_of(build_geometry("laguerre-ext", 4, 0)));
    CHECK(matrix_of(minkowski_sharply3(FieldSpec::get(4), 0)) ==
          matrix_of(build_geometry("minkowski", 4, 0)));
}

TEST_CASE("non-integer scheme eigenvalues are reported, not approximated") {
    // the conjugacy scheme of PGL(2,7) has irrational character sums
    const PGL2& G = PGL2::get(7);
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
    REQUIRE(res.ok);
    try {
        eigenvalue_matrix(res.data);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind == Err::NonIntegerEigenvalue);
    }
}

TEST_CASE("odd Moebius disjointness spectrum: Hoffman alone is not tight") {
    // the plain ratio bound exceeds the true maximum q(q+1) = 30, which is
    // why the point-counting and mixing steps exist
    CircleGeometry g = build_geometry("mobius", 5, 0);
    int64_t n = g.num_circles();
    std::vector<std::vector<int64_t>> adj(n, std::vector<int64_t>(n, 0));
    int64_t k = 0;
    for (int32_t x = 0; x < n; ++x) {
        int64_t deg = 0;
        for (int32_t y = 0; y < n; ++y)
            if (x != y && g.intersection_size(x, y) == 0) { adj[x][y] = 1; ++deg; }
        k = deg;
    }
    CHECK(k == 30);
    auto spec = exact_integer_spectrum(adj);
    CHECK(spec.back().first == -10);
    // n(-lambda_min)/(k-lambda_min) = 130*10/40
    CHECK(Rat(n * 10, 40) == Rat(65, 2));
}

TEST_CASE("disjointness graph eigenvalues live in the scheme columns") {
    CircleGeometry g = build_geometry("laguerre", 3, 0);
    RelationFamily fam = intersection_relations(g);
    SchemeResult res = verify_scheme(fam);
    REQUIRE(res.ok);
    eigenvalue_matrix(res.data);

    int64_t n = g.num_circles();
    std::vector<std::vector<int64_t>> adj(n, std::vector<int64_t>(n, 0));
    for (int32_t x = 0; x < n; ++x)
        for (int32_t y = 0; y < n; ++y)
            if (x != y && g.intersection_size(x, y) == 0) adj[x][y] = 1;
    auto spec = exact_integer_spectrum(adj);
    std::multiset<int64_t> graph_eigs;
    for (auto [lam, mult] : spec) graph_eigs.insert(lam);
    std::multiset<int64_t> column; // disjointness is the last relation
    for (const auto& row : res.data.P) column.insert(row[3]);
    for (int64_t lam : graph_eigs) CHECK(column.count(lam) > 0);
}
