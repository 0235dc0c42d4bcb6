#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "kgk/json_io.hpp"

using kgk::bigint;
using kgk::imat;
using kgk::json;

TEST_CASE("matrices document round-trips byte-identically") {
    auto f = testkit::ex4_family();
    std::string text = kgk::dump_document(kgk::family_to_json(f));
    json parsed = kgk::parse_document(text, "test");
    CHECK(kgk::dump_document(parsed) == text);
    auto f2 = kgk::family_from_json(parsed);
    CHECK(f2.k == f.k);
    CHECK(f2.vertices == f.vertices);
    CHECK(f2.matrices == f.matrices);
}

TEST_CASE("skeleton document round-trips") {
    kgk::skeleton_graph g;
    g.k = 2;
    g.vertices = {"u", "v"};
    g.edges = {{"e1", 1, "u", "v", std::vector<bigint>{1}},
               {"e2", 2, "v", "u", {}}};
    std::string text = kgk::dump_document(kgk::skeleton_to_json(g));
    auto g2 = kgk::skeleton_from_json(kgk::parse_document(text, "test"));
    CHECK(g2.k == g.k);
    CHECK(g2.vertices == g.vertices);
    REQUIRE(g2.edges.size() == 2);
    CHECK(g2.edges[0].label == std::vector<bigint>{1});
    CHECK(!g2.edges[1].label);
    CHECK(kgk::dump_document(kgk::skeleton_to_json(g2)) == text);
}

TEST_CASE("floats are rejected everywhere") {
    auto j = kgk::parse_document(
        R"({"format":"kgraph-matrices-v1","k":1,"vertices":["*"],"matrices":[[[2.0]]]})",
        "test");
    CHECK_THROWS_AS(kgk::family_from_json(j), kgk::parse_error);
    CHECK_THROWS_AS(kgk::jsonio::to_bigint(json(1.5), "x"), kgk::parse_error);
}

TEST_CASE("malformed documents give parse errors") {
    CHECK_THROWS_AS(kgk::parse_document("{", "test"), kgk::parse_error);
    CHECK_THROWS_AS(kgk::family_from_json(kgk::parse_document("[]", "t")),
                    kgk::parse_error);
    // wrong format tag
    CHECK_THROWS_AS(
        kgk::family_from_json(kgk::parse_document(
            R"({"format":"nope","k":1,"vertices":["*"],"matrices":[[[1]]]})", "t")),
        kgk::parse_error);
    // duplicate vertices
    CHECK_THROWS_AS(
        kgk::family_from_json(kgk::parse_document(
            R"({"format":"kgraph-matrices-v1","k":1,"vertices":["a","a"],"matrices":[[[1,0],[0,1]]]})",
            "t")),
        kgk::parse_error);
    // matrix count mismatch
    CHECK_THROWS_AS(
        kgk::family_from_json(kgk::parse_document(
            R"({"format":"kgraph-matrices-v1","k":2,"vertices":["*"],"matrices":[[[1]]]})",
            "t")),
        kgk::parse_error);
}

TEST_CASE("integers beyond 64 bits travel as decimal strings") {
    bigint huge("123456789012345678901234567890");
    json j = kgk::jsonio::from_bigint(huge);
    CHECK(j.is_string());
    CHECK(kgk::jsonio::to_bigint(j, "x") == huge);
    CHECK(kgk::jsonio::to_bigint(json("-17"), "x") == bigint(-17));
    json small = kgk::jsonio::from_bigint(bigint(42));
    CHECK(small.is_number_integer());
    CHECK_THROWS_AS(kgk::jsonio::to_bigint(json("12x"), "x"), kgk::parse_error);
}

TEST_CASE("group and labelling documents") {
    auto g = kgk::group_from_json(kgk::parse_document(R"({"orders":[2,3]})", "t"));
    CHECK(g.order() == 6);
    CHECK_THROWS_AS(kgk::group_from_json(kgk::parse_document(R"({"orders":[0]})", "t")),
                    kgk::parse_error);
    auto lab = kgk::labelling_from_json(
        kgk::parse_document(R"({"e1":[1,2],"e2":[0,0]})", "t"));
    CHECK(lab.at("e1") == std::vector<bigint>{1, 2});
    CHECK(lab.size() == 2);
}

TEST_CASE("report serialization carries the full structure") {
    auto rep = kgk::kgroups(testkit::ex4_family());
    json j = kgk::report_to_json(rep);
    CHECK(j["k"] == 3);
    CHECK(j["status"]["k0"] == "Constrained");
    CHECK(j["status"]["k1"] == "Exact");
    CHECK(j["k1"]["torsion"] == json::array({4, 4}));
    CHECK(j["k0_constraint"]["order"] == 16);
    CHECK(j["e2"].size() == 4);
    CHECK(!j.contains("k0"));

    std::string text = kgk::dump_document(j);
    CHECK(kgk::dump_document(kgk::parse_document(text, "t")) == text);
}

TEST_CASE("snf matrix document accepts bare arrays and wrapped form") {
    auto a = kgk::matrix_from_json(kgk::parse_document("[[2,4],[6,8]]", "t"));
    CHECK(a == imat{{2, 4}, {6, 8}});
    auto b = kgk::matrix_from_json(
        kgk::parse_document(R"({"matrix":[[1,0]]})", "t"));
    CHECK(b == imat{{1, 0}});
    CHECK_THROWS_AS(kgk::matrix_from_json(kgk::parse_document("[[1],[2,3]]", "t")),
                    kgk::parse_error);
}
