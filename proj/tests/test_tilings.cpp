#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "tumap/tiling.hpp"

using namespace tumap::tilings;

TEST_CASE("vertex type parsing and cyclic comparison") {
    CHECK(parse_vertex_type("[3^6]") == std::vector<int>{3, 3, 3, 3, 3, 3});
    CHECK(parse_vertex_type("[3^4,6^1]") == std::vector<int>{3, 3, 3, 3, 6});
    CHECK(parse_vertex_type("[3^2,4^1,3^1,4^1]") == std::vector<int>{3, 3, 4, 3, 4});
    CHECK(same_cycle_up_to_rotation_reversal({3, 3, 4, 3, 4}, {4, 3, 3, 4, 3}));
    CHECK(same_cycle_up_to_rotation_reversal({3, 4, 4, 6}, {4, 4, 3, 6}));  // reversal
    CHECK_FALSE(same_cycle_up_to_rotation_reversal({3, 3, 3, 3, 3, 3}, {3, 3, 3, 3, 6}));
    CHECK_FALSE(
        same_cycle_up_to_rotation_reversal(parse_vertex_type("[3^6]"), parse_vertex_type("[3^4,6^1]")));
}

TEST_CASE("all 27 builtin specs validate") {
    const auto& specs = builtin_specs();
    REQUIRE(specs.size() == 27);
    for (const auto& s : specs) {
        CAPTURE(s.id);
        auto rep = validate(s);
        for (const auto& issue : rep.issues) {
            CAPTURE(issue.check);
            CAPTURE(issue.detail);
            CHECK(false);
        }
        CHECK(rep.all_ok());
    }
}

TEST_CASE("v0 values match the published minimal map sizes") {
    const int v0[28] = {0, 12, 8, 4, 3, 7, 14, 7, 4, 12, 8, 12, 3, 4,
                        12, 3, 8, 18, 5, 5, 18, 6, 6, 4, 3, 6, 12, 4};
    for (int ell = 1; ell <= 27; ++ell) {
        CAPTURE(ell);
        CHECK(spec(ell).v0 == v0[ell]);
        CHECK((int)spec(ell).vertices.size() == v0[ell]);
    }
}

TEST_CASE("declared orbit counts") {
    for (int ell = 1; ell <= 20; ++ell) CHECK(spec(ell).declared_orbit_count == 2);
    for (int ell = 21; ell <= 27; ++ell)
        CHECK(spec(ell).declared_orbit_count == ((ell == 25) ? 1 : 1));
    CHECK(spec(16).declared_orbit_count == 2);  // the one non-Archimedean square case
}

TEST_CASE("point group orders match the published isotropy inventory") {
    for (int ell : {2, 5, 6, 7, 11, 14, 17, 20, 21, 22, 24, 26}) {
        CAPTURE(ell);
        CHECK(spec(ell).point_group_order() == 12);
    }
    for (int ell : {16, 27}) CHECK(spec(ell).point_group_order() == 8);
    CHECK(spec(23).point_group_order() == 4);
    for (int ell : {1, 25}) CHECK(spec(ell).point_group_order() == 6);
    for (int ell : {3, 4, 8, 12, 13, 15, 18, 19}) {
        CAPTURE(ell);
        CHECK(spec(ell).point_group_order() == 4);
    }
}

TEST_CASE("type strings") {
    CHECK(spec(1).type_string == "[3^6;3^4,6^1]");
    CHECK(spec(18).v0 == 5);
    CHECK(spec(21).type_string == "[3^1,4^1,6^1,4^1]");
    CHECK(spec(25).declared_orbit_count == 1);
}

TEST_CASE("spec JSON round-trip for all tilings") {
    for (int ell = 1; ell <= 27; ++ell) {
        TilingSpec back = load_spec(save_spec(spec(ell)));
        CHECK(back.vertices.size() == spec(ell).vertices.size());
        CHECK(back.edges.size() == spec(ell).edges.size());
        CHECK(validate(back).all_ok());
    }
}

TEST_CASE("spec JSON round-trip") {
    const auto& s9 = spec(9);
    std::string text = save_spec(s9);
    TilingSpec back = load_spec(text);
    CHECK(back.id == s9.id);
    CHECK(back.v0 == s9.v0);
    CHECK(back.vertices.size() == s9.vertices.size());
    CHECK(back.edges.size() == s9.edges.size());
    CHECK(back.symmetries.size() == s9.symmetries.size());
    for (size_t i = 0; i < s9.vertices.size(); ++i) {
        CHECK(back.vertices[i].pos == s9.vertices[i].pos);
        CHECK(back.vertices[i].vtype == s9.vertices[i].vtype);
    }
    auto rep = validate(back);
    CHECK(rep.all_ok());
}

TEST_CASE("load_spec schema errors") {
    CHECK_THROWS_AS(load_spec("{"), tiling_error);
    CHECK_THROWS_AS(load_spec("{\"id\": 3}"), tiling_error);
    // denominator-3 translation violates the AffineSymmetry invariant
    std::string text = save_spec(spec(23));
    auto pos = text.find("\"1/2\"");
    REQUIRE(pos != std::string::npos);
    std::string bad = text.substr(0, pos) + "\"1/3\"" + text.substr(pos + 5);
    CHECK_THROWS_AS(load_spec(bad), tiling_error);
}

TEST_CASE("tiling override directory") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "tumap_tilings_test";
    fs::create_directories(dir);
    {
        std::ofstream out(dir / "E7.json");
        out << save_spec(spec(7));
    }
    auto specs = specs_with_overrides(dir.string());
    CHECK(specs.size() == 27);
    CHECK(specs[6].id == 7);
    CHECK(validate(specs[6]).all_ok());
    CHECK_THROWS_AS(specs_with_overrides((dir / "missing").string()), tiling_error);
    fs::remove_all(dir);
}

TEST_CASE("negative control: a perturbed vertex breaks validation") {
    TilingSpec s = spec(24);
    s.vertices[0].pos.x = s.vertices[0].pos.x + Quad(Rational(1, 64));
    s.finalize();
    auto rep = validate(s);
    CHECK_FALSE(rep.all_ok());
    CHECK_FALSE(rep.vertex_edge_closure_ok);
}
