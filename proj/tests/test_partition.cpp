#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "freecalc/partition.hpp"
#include "support/oracles.hpp"

using namespace freecalc;

TEST_CASE("crossing test matches the printed examples") {
    CHECK(is_noncrossing(Partition::parse("{(1,3,5),(2),(4)}")));
    CHECK_FALSE(is_noncrossing(Partition::parse("{(1,3,5),(2,4)}")));
    for (int n = 1; n <= 6; ++n) CHECK(is_noncrossing(Partition::singletons(n)));
}

TEST_CASE("crossing test agrees with the four-index definition") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : oracle::all_set_partitions(n))
            CHECK(is_noncrossing(p) == oracle::is_noncrossing_brute(p));
}

TEST_CASE("enumerate_nc equals the brute-force filter for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        std::vector<Partition> brute;
        for (const auto& p : oracle::all_set_partitions(n))
            if (oracle::is_noncrossing_brute(p)) brute.push_back(p);
        std::sort(brute.begin(), brute.end());
        const auto fast = enumerate_nc(n);
        CHECK(fast == brute);
    }
}

TEST_CASE("enumeration counts are Catalan numbers for n <= 10") {
    for (int n = 1; n <= 10; ++n)
        CHECK(BigInt(enumerate_nc(n).size()) == catalan(n));
}

TEST_CASE("enumerate_nc n=3 matches the five-term expansion") {
    const auto nc3 = enumerate_nc(3);
    REQUIRE(nc3.size() == 5);
    std::set<std::string> repr;
    for (const auto& p : nc3) repr.insert(p.str());
    CHECK(repr == std::set<std::string>{"{(1,2,3)}", "{(1),(2,3)}", "{(1,2),(3)}", "{(1,3),(2)}",
                                        "{(1),(2),(3)}"});
}

TEST_CASE("enumeration cap raises a size-limit error") {
    CHECK_THROWS_AS(enumerate_nc(19), SizeLimitError);
    CHECK_THROWS_AS(enumerate_nc(7, 6), SizeLimitError);
    CHECK_NOTHROW(enumerate_nc(7, 7));
}

TEST_CASE("catalan recursion") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(6) == 132);
    CHECK(catalan(30) == BigInt("3814986502092304"));
}

TEST_CASE("refinement order") {
    const auto s = Partition::parse("{(1),(2,4),(3),(5,6)}");
    const auto p = Partition::parse("{(1,5,6),(2,3,4)}");
    CHECK(leq(s, p));
    CHECK_FALSE(leq(p, s));
    CHECK(leq(p, p));
    for (const auto& q : enumerate_nc(5)) CHECK(leq(Partition::singletons(5), q));
    CHECK_THROWS_AS(leq(Partition::singletons(3), Partition::singletons(4)), ArgumentError);
}

TEST_CASE("leq is a partial order on NC(n), n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        const auto& nc = nc_catalog(n);
        for (const auto& a : nc) {
            CHECK(leq(a, a));
            for (const auto& b : nc) {
                if (leq(a, b) && leq(b, a)) CHECK(a == b);
                for (const auto& c : nc)
                    if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
            }
        }
    }
}

TEST_CASE("merge_at reproduces the printed examples") {
    const auto p = Partition::parse("{(1,5,6),(2),(3,4)}");
    CHECK(merge_at(p, 5) == Partition::parse("{(1,5),(2),(3,4)}"));
    CHECK(merge_at(p, 4) == Partition::parse("{(1,3,4,5),(2)}"));
    CHECK(merge_at(Partition::parse("{(1),(2)}"), 1) == Partition::parse("{(1)}"));
    CHECK_THROWS_AS(merge_at(p, 6), ArgumentError);
    CHECK_THROWS_AS(merge_at(p, 0), ArgumentError);
}

TEST_CASE("merge_at preserves the non-crossing property") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& p : nc_catalog(n))
            for (int pos = 1; pos < n; ++pos) CHECK(is_noncrossing(merge_at(p, pos)));
}

TEST_CASE("kreweras complement of the extreme partitions") {
    for (int n = 1; n <= 7; ++n) {
        CHECK(kreweras(Partition::singletons(n)) == Partition::one_block(n));
        CHECK(kreweras(Partition::one_block(n)) == Partition::singletons(n));
    }
}

TEST_CASE("kreweras on {(1,3),(2)}") {
    CHECK(kreweras(Partition::parse("{(1,3),(2)}")) == Partition::parse("{(1,2),(3)}"));
}

TEST_CASE("kreweras rejects crossing input") {
    CHECK_THROWS_AS(kreweras(Partition::parse("{(1,3,5),(2,4)}")), DomainError);
}

TEST_CASE("kreweras equals the brute-force maximal complement for n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : nc_catalog(n)) CHECK(kreweras(p) == oracle::kreweras_brute(p));
}

TEST_CASE("kreweras is a bijection and satisfies the block-count identity, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        std::set<Partition> images;
        for (const auto& p : nc_catalog(n)) {
            const auto k = kreweras(p);
            CHECK(p.block_count() + k.block_count() == n + 1);
            images.insert(k);
        }
        CHECK(images.size() == nc_catalog(n).size());
    }
}

TEST_CASE("lattice path of the printed example") {
    const auto p = Partition::parse("{(1,6),(2,4,5),(3)}");
    CHECK(to_lattice_path(p).steps == std::vector<int>{-1, -1, 0, -1, 2, 1});
    CHECK(from_lattice_path(LatticePath{{-1, -1, 0, -1, 2, 1}}) == p);
}

TEST_CASE("lattice path of the extreme partitions") {
    const int n = 6;
    CHECK(to_lattice_path(Partition::singletons(n)).steps == std::vector<int>(n, 0));
    std::vector<int> one_block(n, -1);
    one_block.back() = n - 1;
    CHECK(to_lattice_path(Partition::one_block(n)).steps == one_block);
}

TEST_CASE("lattice path bijection round-trips and hits exactly the admissible set, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        std::set<std::vector<int>> seen;
        for (const auto& p : nc_catalog(n)) {
            const auto path = to_lattice_path(p);
            long long partial = 0;
            for (int step : path.steps) {
                CHECK(step >= -1);
                CHECK(step <= n - 1);
                partial += step;
                CHECK(partial <= 0);
            }
            CHECK(partial == 0);
            CHECK(from_lattice_path(path) == p);
            seen.insert(path.steps);
        }
        CHECK(seen.size() == nc_catalog(n).size());
        // Exhaustive check that every admissible step sequence is hit (n small).
        if (n <= 6) {
            size_t admissible = 0;
            std::vector<int> steps(static_cast<size_t>(n));
            auto count = [&](auto&& self, int m, long long partial) -> void {
                if (m == n) {
                    if (partial == 0) ++admissible;
                    return;
                }
                for (int s = -1; s <= n - 1; ++s) {
                    if (partial + s > 0) continue;
                    self(self, m + 1, partial + s);
                }
            };
            count(count, 0, 0);
            CHECK(admissible == seen.size());
        }
    }
}

TEST_CASE("invalid lattice paths raise domain errors") {
    CHECK_THROWS_AS(from_lattice_path(LatticePath{{0, 1}}), DomainError);   // partial sum > 0
    CHECK_THROWS_AS(from_lattice_path(LatticePath{{-1, -1}}), DomainError); // total != 0
    CHECK_THROWS_AS(from_lattice_path(LatticePath{{5, -1}}), DomainError);  // step out of range
}

TEST_CASE("partition text round-trip") {
    for (const std::string text : {"{(1,3,5),(2),(4)}", "{(1)}", "{(1,2,3,4)}"}) {
        CHECK(Partition::parse(text).str() == text);
    }
    CHECK(Partition::parse(" { ( 1 , 3 ) , ( 2 ) } ").str() == "{(1,3),(2)}");
    CHECK_THROWS_AS(Partition::parse("{(1,3),(2)"), ParseError);
    CHECK_THROWS_AS(Partition::parse("{(1,3)(2)}"), ParseError);
    CHECK_THROWS_AS(Partition::parse("[(1,3),(2)]"), ParseError);
    CHECK_THROWS_AS(Partition::parse("{(1,3),(3)}"), ArgumentError);  // repeated element
    CHECK_THROWS_AS(Partition::parse("{(1,4),(2)}"), ArgumentError);  // gap in ground set
}
