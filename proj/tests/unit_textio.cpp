#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcm/textio.hpp"

using namespace mcm;

TEST_CASE("matrix text round trip") {
    IntMatrix m{{1, 0, -1}, {0, 2, 3}};
    std::string text = format_matrix_text(m);
    CHECK(text == "1 0 -1; 0 2 3");
    CHECK(parse_matrix_text(text) == m);
    // whitespace variations parse the same
    CHECK(parse_matrix_text("  1   0 -1 ;0 2    3 ") == m);
    CHECK(parse_matrix_text("") == IntMatrix());
    CHECK(parse_matrix_text("   ") == IntMatrix());
    CHECK(parse_matrix_text("5") == IntMatrix{{5}});
}

TEST_CASE("matrix text rejects malformed input") {
    bool threw = false;
    try {
        (void)parse_matrix_text("1 2; 3");
    } catch (const std::invalid_argument& e) {
        threw = true;
        CHECK(std::string(e.what()).find("row 2") != std::string::npos);
    }
    CHECK(threw);
    threw = false;
    try {
        (void)parse_matrix_text("1 x; 2 3");
    } catch (const std::invalid_argument& e) {
        threw = true;
        CHECK(std::string(e.what()).find("'x'") != std::string::npos);
    }
    CHECK(threw);
    threw = false;
    try {
        (void)parse_matrix_text("1 2; ; 3 4");
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    CHECK(threw);
}

TEST_CASE("matrix json round trip") {
    IntMatrix m{{1, -2}, {3, 4}};
    OrderedJson j = matrix_to_json(m);
    CHECK(j.dump() == "[[1,-2],[3,4]]");
    CHECK(matrix_from_json(j) == m);
    CHECK(matrix_from_json(json_parse_checked("[]")) == IntMatrix());
}

TEST_CASE("presentation json round trip") {
    MonoidPresentation p;
    p.equations = IntMatrix{{1, 1, -1, -1}};
    p.free_rank = 2;
    OrderedJson j = presentation_to_json(p);
    CHECK(j.dump() == "{\"equations\":[[1,1,-1,-1]],\"free_rank\":2}");
    MonoidPresentation q = presentation_from_json(j);
    CHECK(q == p);

    // free_rank defaults to zero
    MonoidPresentation r = presentation_from_json(json_parse_checked("{\"equations\": [[1, -1]]}"));
    CHECK(r.free_rank == 0);
    CHECK(r.equations == IntMatrix{{1, -1}});

    bool threw = false;
    try {
        (void)presentation_from_json(json_parse_checked("{\"equations\": [[1]], \"bogus\": 1}"));
    } catch (const std::invalid_argument& e) {
        threw = true;
        CHECK(std::string(e.what()).find("bogus") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("block spec json round trip") {
    BlockSpec s;
    s.group.free_rank = 2;
    s.classes = {IntVec{1, 0}, IntVec{-1, 0}, IntVec{0, 0}};
    OrderedJson j = block_spec_to_json(s);
    CHECK(j.dump() == "{\"rank\":2,\"classes\":[[1,0],[-1,0],[0,0]]}");
    BlockSpec back = block_spec_from_json(j);
    CHECK(back.group == s.group);
    CHECK(back.classes == s.classes);

    BlockSpec tors = block_spec_from_json(
        json_parse_checked("{\"rank\": 0, \"torsion\": [3], \"classes\": [[1], [2]]}"));
    CHECK(tors.group.free_rank == 0);
    CHECK(tors.group.torsion == std::vector<Int>{Int(3)});
    CHECK(tors.classes.size() == 2);

    bool threw = false;
    try {
        (void)block_spec_from_json(json_parse_checked("{\"classes\": [[1]]}"));
    } catch (const std::invalid_argument&) {
        threw = true;
    }
    CHECK(threw);
}

TEST_CASE("group json and rational strings") {
    AbelianGroupInvariants g;
    g.free_rank = 1;
    g.torsion = {Int(2), Int(6)};
    CHECK(group_to_json(g).dump() == "{\"free_rank\":1,\"torsion\":[2,6]}");
    CHECK(rat_to_string(Rat(3, 2)) == "3/2");
    CHECK(rat_to_string(Rat(4, 2)) == "2");
    CHECK(rat_to_string(Rat(-1, 3)) == "-1/3");
    CHECK(rat_to_string(Rat(0)) == "0");
}

TEST_CASE("render is deterministic and newline terminated") {
    OrderedJson j;
    j["b"] = 1;
    j["a"] = 2;  // insertion order preserved, not sorted
    CHECK(render_json(j, false) == "{\"b\":1,\"a\":2}\n");
    CHECK(render_json(j, true) == "{\n  \"b\": 1,\n  \"a\": 2\n}\n");
    bool threw = false;
    try {
        (void)json_parse_checked("{oops");
    } catch (const std::invalid_argument& e) {
        threw = true;
        CHECK(std::string(e.what()).find("JSON parse error") != std::string::npos);
    }
    CHECK(threw);
}
