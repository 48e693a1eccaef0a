#include <doctest.h>

#include "arrcalc/error.hpp"
#include "arrcalc/family.hpp"

using namespace arrcalc;

namespace {

Hyperplane hp(std::vector<long> normal, long offset) { return Hyperplane{std::move(normal), offset}; }

bool has(const Arrangement& arr, const Hyperplane& h) {
    for (const auto& x : arr.hyperplanes)
        if (x.normal == h.normal && x.offset == h.offset) return true;
    return false;
}

}  // namespace

TEST_CASE("build examples") {
    Arrangement bc = build({Family::BC, 1, 0, 1});
    CHECK(bc.hyperplanes.size() == 4);
    CHECK(has(bc, hp({1}, 0)));
    CHECK(has(bc, hp({1}, 1)));
    CHECK(has(bc, hp({2}, 0)));
    CHECK(has(bc, hp({2}, 1)));
    CHECK(bc.modulus == 2);

    Arrangement a = build({Family::A, 2, 1, 1});
    CHECK(a.hyperplanes.size() == 1);
    CHECK(has(a, hp({1, -1}, 1)));
    CHECK(a.modulus == 1);

    Arrangement d = build({Family::D, 2, 0, 1});
    CHECK(d.hyperplanes.size() == 4);
    CHECK(has(d, hp({1, -1}, 0)));
    CHECK(has(d, hp({1, -1}, 1)));
    CHECK(has(d, hp({1, 1}, 0)));
    CHECK(has(d, hp({1, 1}, 1)));
}

TEST_CASE("build specials") {
    Arrangement s62 = build({Family::S62, 1, 1, 1});
    // x = 0, x = 1, 2x = 1
    CHECK(s62.hyperplanes.size() == 3);
    CHECK(has(s62, hp({2}, 1)));

    Arrangement s63 = build({Family::S63, 2, 1, 1});
    CHECK(s63.hyperplanes.size() == 2);
    CHECK(has(s63, hp({2, 0}, 1)));
    CHECK(has(s63, hp({0, 2}, 1)));

    Arrangement s63b = build({Family::S63, 2, 2, 2});
    // 2x_i = 1,2,3 plus x_i -+ x_j = 1
    CHECK(s63b.hyperplanes.size() == 8);
}

TEST_CASE("empty interval gives the empty arrangement") {
    Arrangement e = build({Family::BC, 3, 1, 0});
    CHECK(e.hyperplanes.empty());
    CHECK(e.dim == 3);
}

TEST_CASE("dedup_count") {
    CHECK(dedup_count(build({Family::BC, 1, 0, 1})) == 3);  // x=0 and 2x=0 coincide
    CHECK(dedup_count(build({Family::A, 3, 1, 1})) == 3);
    CHECK(dedup_count(build({Family::BC, 2, 0, 2})) == 14);
}

TEST_CASE("dedup_count for family A matches the closed count") {
    for (int n = 2; n <= 5; ++n)
        for (long lo = -2; lo <= 2; ++lo)
            for (long hi = lo; hi <= 2; ++hi)
                CHECK(dedup_count(build({Family::A, n, lo, hi})) ==
                      static_cast<std::size_t>((hi - lo + 1) * n * (n - 1) / 2));
}

TEST_CASE("rank_of") {
    CHECK(rank_of({Family::A, 3, 0, 0}) == 2);
    CHECK(rank_of({Family::BC, 4, 0, 0}) == 4);
    CHECK(rank_of({Family::D, 2, 0, 0}) == 2);
}

TEST_CASE("reflect") {
    FamilySpec r = reflect({Family::A, 2, -3, -1});
    CHECK(r.lo == 1);
    CHECK(r.hi == 3);
    FamilySpec bc = reflect({Family::BC, 1, -1, 0});
    CHECK(bc.lo == 0);
    CHECK(bc.hi == 1);
}

TEST_CASE("dedup_count is invariant under reflect") {
    for (Family fam : {Family::A, Family::B, Family::C, Family::D, Family::BC}) {
        int n = (fam == Family::A || fam == Family::D) ? 3 : 2;
        for (long lo = -2; lo <= 1; ++lo)
            for (long hi = lo; hi <= 2; ++hi) {
                FamilySpec spec{fam, n, lo, hi};
                CHECK(dedup_count(build(spec)) == dedup_count(build(reflect(spec))));
            }
    }
}

TEST_CASE("build is deterministic") {
    FamilySpec spec{Family::BC, 3, -1, 2};
    Arrangement x = build(spec);
    Arrangement y = build(spec);
    REQUIRE(x.hyperplanes.size() == y.hyperplanes.size());
    for (size_t i = 0; i < x.hyperplanes.size(); ++i) {
        CHECK(x.hyperplanes[i].normal == y.hyperplanes[i].normal);
        CHECK(x.hyperplanes[i].offset == y.hyperplanes[i].offset);
    }
}

TEST_CASE("canonical_form") {
    CanonicalHyperplane c = canonical_form(hp({2, 0}, 1));
    CHECK(c.normal == std::vector<long>{1, 0});
    CHECK(c.offset == Rat(1, 2));
    // sign normalization flips both sides
    CanonicalHyperplane d = canonical_form(hp({-1, 1}, 2));
    CHECK(d.normal == std::vector<long>{1, -1});
    CHECK(d.offset == Rat(-2));
    CHECK_THROWS_AS(canonical_form(hp({0, 0}, 1)), error);
}

TEST_CASE("spec parsing round trip") {
    for (const char* text : {"BC:3:-1:2", "A:2:1:1", "DQ:3:0:2", "S62:2:1", "S63:3:2"}) {
        FamilySpec spec = parse_spec(text);
        CHECK(format_spec(spec) == text);
    }
    CHECK_THROWS_AS(parse_spec("E:3:0:1"), error);
    CHECK_THROWS_AS(parse_spec("A:x:0:1"), error);
    CHECK_THROWS_AS(parse_spec("A:3"), error);
    CHECK_THROWS_AS(parse_spec("A:1:0:1"), error);   // family A needs n >= 2
    CHECK_THROWS_AS(parse_spec("S62:2:0"), error);   // specials need a >= 1
    CHECK_THROWS_AS(parse_spec("S63:2:1:2"), error); // specials take one parameter
}
