#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "kgk/family.hpp"
#include "kgk/skeleton.hpp"

using kgk::failure_kind;
using kgk::imat;
using kgk::skeleton_edge;
using kgk::skeleton_graph;
using kgk::vertex_matrix_family;

namespace {

bool has_failure(const kgk::validation_report& rep, failure_kind kind) {
    for (const auto& f : rep.failures)
        if (f.kind == kind) return true;
    return false;
}

skeleton_graph two_vertex_mixed() {
    // colour-1 edges u->v and v->u, colour-2 loops at u and v
    skeleton_graph g;
    g.k = 2;
    g.vertices = {"u", "v"};
    g.edges = {{"e1", 1, "u", "v", {}},
               {"e2", 1, "v", "u", {}},
               {"l1", 2, "u", "u", {}},
               {"l2", 2, "v", "v", {}}};
    return g;
}

}  // namespace

TEST_CASE("validate_family accepts the worked 3-graph family") {
    CHECK(kgk::validate_family(testkit::ex4_family()).ok);
    CHECK(kgk::validate_family(testkit::ex5_family()).ok);
}

TEST_CASE("validate_family reports non-commuting matrices") {
    auto f = testkit::make_family(2, {imat{{0, 1}, {1, 0}}, imat{{1, 1}, {1, 0}}});
    auto rep = kgk::validate_family(f);
    CHECK(!rep.ok);
    CHECK(has_failure(rep, failure_kind::non_commuting));
}

TEST_CASE("validate_family reports zero rows and negative entries") {
    auto f = testkit::make_family(1, {imat{{1, 0}, {0, 0}}});
    auto rep = kgk::validate_family(f);
    CHECK(!rep.ok);
    CHECK(has_failure(rep, failure_kind::zero_row));

    auto g = testkit::make_family(1, {imat{{1, -1}, {0, 1}}});
    CHECK(has_failure(kgk::validate_family(g), failure_kind::negative_entry));
}

TEST_CASE("validate_family reports shape mismatches before anything else") {
    vertex_matrix_family f;
    f.k = 2;
    f.vertices = {"a", "b"};
    f.matrices = {imat{{1}}, imat{{1, 0}, {0, 1}}};
    auto rep = kgk::validate_family(f);
    CHECK(!rep.ok);
    CHECK(has_failure(rep, failure_kind::shape_mismatch));
    for (const auto& fail : rep.failures)
        CHECK(fail.kind == failure_kind::shape_mismatch);
}

TEST_CASE("transposed family must be re-validated, not assumed") {
    // no zero row, but a zero column: the transpose fails validation
    auto f = testkit::make_family(1, {imat{{1, 0}, {1, 0}}});
    CHECK(kgk::validate_family(f).ok);
    auto t = testkit::make_family(1, {f.matrices[0].transpose()});
    auto rep = kgk::validate_family(t);
    CHECK(!rep.ok);
    CHECK(has_failure(rep, failure_kind::zero_row));
}

TEST_CASE("matrices_from_skeleton counts loops of a bouquet product") {
    skeleton_graph g;
    g.k = 3;
    g.vertices = {"*"};
    for (int c = 1; c <= 3; ++c)
        for (int i = 1; i <= 3; ++i)
            g.edges.push_back(
                {"c" + std::to_string(c) + "a" + std::to_string(i),
                 static_cast<std::size_t>(c), "*", "*", {}});
    auto f = kgk::matrices_from_skeleton(g);
    for (int c = 0; c < 3; ++c) CHECK(f.matrices[c] == imat{{3}});
}

TEST_CASE("matrices_from_skeleton on a two-vertex two-colour graph") {
    auto f = kgk::matrices_from_skeleton(two_vertex_mixed());
    CHECK(f.matrices[0] == imat{{0, 1}, {1, 0}});
    CHECK(f.matrices[1] == imat::identity(2));
}

TEST_CASE("matrices_from_skeleton propagates validation failures") {
    skeleton_graph g;  // one colour-1 loop at u only: v is a source
    g.k = 1;
    g.vertices = {"u", "v"};
    g.edges = {{"l", 1, "u", "u", {}}};
    CHECK_THROWS_AS(kgk::matrices_from_skeleton(g), kgk::invalid_family_error);
    try {
        kgk::matrices_from_skeleton(g);
    } catch (const kgk::invalid_family_error& e) {
        CHECK(has_failure(e.report, failure_kind::zero_row));
    }
}

TEST_CASE("skeleton structural checks") {
    skeleton_graph g = two_vertex_mixed();
    g.edges.push_back({"e1", 1, "u", "v", {}});  // duplicate id
    CHECK_THROWS_AS(kgk::check_skeleton(g), kgk::parse_error);

    skeleton_graph h = two_vertex_mixed();
    h.edges[0].range = "w";
    CHECK_THROWS_AS(kgk::check_skeleton(h), kgk::parse_error);

    skeleton_graph i = two_vertex_mixed();
    i.edges[0].color = 3;
    CHECK_THROWS_AS(kgk::check_skeleton(i), kgk::parse_error);
}

TEST_CASE("skeleton counting is permutation equivariant") {
    testkit::rng_t rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        // random 1-graph skeleton on 3 vertices, every vertex covered
        skeleton_graph g;
        g.k = 1;
        g.vertices = {"a", "b", "c"};
        int id = 0;
        for (const auto& v : g.vertices) {
            int extra = testkit::rand_int(rng, 1, 2);
            for (int t = 0; t < extra; ++t) {
                const auto& src = g.vertices[testkit::rand_int(rng, 0, 2)];
                g.edges.push_back({"e" + std::to_string(id++), 1, v, src, {}});
            }
        }
        auto f = kgk::matrices_from_skeleton(g);

        // relabel vertices by a permutation
        std::vector<std::size_t> perm = {0, 1, 2};
        std::shuffle(perm.begin(), perm.end(), rng);
        skeleton_graph gp = g;
        for (std::size_t i = 0; i < 3; ++i) gp.vertices[i] = g.vertices[perm[i]];
        auto fp = kgk::matrices_from_skeleton(gp);

        // counting must conjugate by the permutation matrix
        imat p(3, 3);
        for (std::size_t i = 0; i < 3; ++i) p(i, perm[i]) = 1;
        CHECK(fp.matrices[0] == p * f.matrices[0] * p.transpose());

        // total entries = edge count
        kgk::bigint total = 0;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) total += f.matrices[0](i, j);
        CHECK(total == g.edges.size());
    }
}

TEST_CASE("validate_family accepts circulant-style commuting families") {
    // symmetric circulants commute pairwise whatever the entries
    auto f = testkit::make_family(3, {imat{{1, 2}, {2, 1}}, imat{{1, 2}, {2, 1}},
                                      imat{{0, 3}, {3, 0}}});
    CHECK(kgk::validate_family(f).ok);
}
