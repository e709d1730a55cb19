#include <doctest.h>

#include <algorithm>
#include <set>

#include "inertia/catalog.hpp"

using namespace inertia;

TEST_CASE("catalog: N_{2,3} holds exactly the four arrays") {
    const CatalogEntry e = known_catalog(BipartiteDims{2, 3});
    CHECK(e.complete);
    REQUIRE(e.known_members.size() == 4);
    const std::set<Inertia> want{{1, 2, 3}, {1, 1, 4}, {1, 0, 5}, {2, 0, 4}};
    CHECK(std::set<Inertia>(e.known_members.begin(), e.known_members.end()) == want);
}

TEST_CASE("catalog: N_{3,3} holds the thirteen arrays with two headline exclusions") {
    const CatalogEntry e = known_catalog(BipartiteDims{3, 3});
    CHECK(e.complete);
    REQUIRE(e.known_members.size() == 13);
    const std::set<Inertia> want{{1, 0, 8}, {1, 1, 7}, {1, 2, 6}, {1, 3, 5}, {1, 4, 4},
                                 {1, 5, 3}, {2, 0, 7}, {2, 1, 6}, {2, 2, 5}, {2, 3, 4},
                                 {3, 0, 6}, {3, 1, 5}, {4, 0, 5}};
    CHECK(std::set<Inertia>(e.known_members.begin(), e.known_members.end()) == want);
    REQUIRE(e.known_excluded.size() == 2);
    CHECK(e.is_excluded(Inertia{4, 1, 4}));
    CHECK(e.is_excluded(Inertia{3, 2, 4}));
}

TEST_CASE("catalog: N_{3,4} family members and the nine exclusions") {
    const CatalogEntry e = known_catalog(BipartiteDims{3, 4});
    CHECK_FALSE(e.complete);
    CHECK(e.known_members.size() == 21);
    CHECK(e.known_members == e.family);
    const std::set<Inertia> excluded(e.known_excluded.begin(), e.known_excluded.end());
    const std::set<Inertia> want{{7, 0, 5}, {7, 1, 4}, {7, 2, 3}, {8, 0, 4}, {8, 1, 3},
                                 {9, 0, 3}, {6, 2, 4}, {6, 3, 3}, {5, 4, 3}};
    CHECK(excluded == want);
    // Observed-but-unlisted NPT arrays stay unresolved for an incomplete catalog.
    CHECK(e.classify(Inertia{4, 0, 8}) == Membership::unknown);
}

TEST_CASE("catalog: family size, sums, and the n=3 containment") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const auto fam = family_inertias(n);
        CHECK(fam.size() == (n - 1) * (2 * n - 1));
        for (const auto& in : fam) CHECK(in.order() == 3 * n);
        const std::set<Inertia> uniq(fam.begin(), fam.end());
        CHECK(uniq.size() == fam.size());
    }

    const CatalogEntry e33 = known_catalog(BipartiteDims{3, 3});
    for (const auto& in : e33.family)
        CHECK(std::binary_search(e33.known_members.begin(), e33.known_members.end(), in));

    // Family-only dims: the entry is incomplete and carries just the family.
    const CatalogEntry e35 = known_catalog(BipartiteDims{3, 5});
    CHECK_FALSE(e35.complete);
    CHECK(e35.known_members.size() == 36);
}

TEST_CASE("catalog: complete catalogs classify every triple") {
    for (const BipartiteDims dims : {BipartiteDims{2, 3}, BipartiteDims{3, 3}}) {
        const CatalogEntry e = known_catalog(dims);
        const std::size_t d = dims.product();
        std::size_t members = 0, excluded = 0, trivial = 0;
        for (std::size_t a = 0; a <= d; ++a)
            for (std::size_t b = 0; a + b <= d; ++b) {
                const Inertia in{a, b, d - a - b};
                switch (e.classify(in)) {
                    case Membership::member: ++members; break;
                    case Membership::excluded: ++excluded; break;
                    case Membership::not_npt: ++trivial; break;
                    case Membership::unknown: FAIL("complete catalog left a triple unknown"); break;
                }
            }
        CHECK(members == e.known_members.size());
        CHECK(trivial == d + 1);  // exactly the neg == 0 row
        CHECK(members + excluded + trivial == (d + 1) * (d + 2) / 2);
    }
}

TEST_CASE("catalog: members and exclusions are disjoint") {
    for (const BipartiteDims dims : {BipartiteDims{2, 3}, BipartiteDims{3, 3}, BipartiteDims{3, 4}}) {
        const CatalogEntry e = known_catalog(dims);
        for (const auto& in : e.known_excluded)
            CHECK_FALSE(std::binary_search(e.known_members.begin(), e.known_members.end(), in));
    }
}
