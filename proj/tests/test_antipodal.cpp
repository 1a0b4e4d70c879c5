#include <set>
#include <string>

#include "cubeiso/antipodal.hpp"
#include "cubeiso/errors.hpp"
#include "cubeiso/family.hpp"
#include "cubeiso/segments.hpp"
#include "doctest.h"

using namespace cubeiso;

TEST_CASE("pair index") {
    const PairIndex pairs(5);
    CHECK(pairs.pair_count() == 16);
    for (uint64_t p = 0; p < 16; ++p) {
        CHECK(pairs.representative(p) == p);
        CHECK(pairs.partner(p) == 31 - p);
        CHECK(p < 16);
        CHECK(pairs.partner(p) >= 16);
    }
    CHECK_THROWS_AS(pairs.partner(16), input_error);
    CHECK_THROWS_AS(PairIndex(0), input_error);
}

TEST_CASE("extremal families") {
    Family expected(3);
    for (uint64_t v : {0, 1, 6, 7}) expected.insert(v);
    CHECK(extremal_family(3, 4) == expected);
    CHECK(edge_boundary(extremal_family(3, 4)) == 8);

    CHECK(extremal_family(4, 16) == Family::full(4));
    CHECK(edge_boundary(extremal_family(4, 16)) == 0);
    CHECK(extremal_family(0, 0) == Family(0));

    for (int n = 2; n <= 8; ++n) {
        for (uint64_t m = 0; m <= (uint64_t{1} << n); m += 2) {
            const Family fam = extremal_family(n, m);
            CHECK(fam.size() == m);
            CHECK(is_antipodal(fam));
        }
    }

    // Powers of two give two antipodal subcubes with boundary (n-k+1)2^k.
    for (int n = 2; n <= 9; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(edge_boundary(extremal_family(n, uint64_t{1} << k)) ==
                  uint64_t(n - k + 1) << k);

    CHECK_THROWS_AS(extremal_family(3, 3), input_error);
    CHECK_THROWS_AS(extremal_family(3, 10), input_error);
}

TEST_CASE("extremal boundary closed form matches construction") {
    CHECK(extremal_boundary(3, 4) == 8);
    CHECK(extremal_boundary(4, 4) == 12);
    CHECK(extremal_boundary(5, 32) == 0);
    for (int n = 1; n <= 9; ++n)
        for (uint64_t m = 0; m <= (uint64_t{1} << n); m += 2)
            CHECK(extremal_boundary(n, m) == edge_boundary(extremal_family(n, m)));
    CHECK_THROWS_AS(extremal_boundary(4, 5), input_error);
}

TEST_CASE("extremal witness ties the routes together") {
    const ExtremalWitness w = extremal_witness(4, 6);
    CHECK(w.size == 6);
    CHECK(w.family == extremal_family(4, 6));
    CHECK(w.boundary == extremal_boundary(4, 6));
}

TEST_CASE("exhaustive antipodal enumeration") {
    {
        AntipodalEnumerator families(1);
        CHECK(families.total() == 2);
        Family fam;
        CHECK(families.next(fam));
        CHECK(fam == Family(1));
        CHECK(families.next(fam));
        CHECK(fam == Family::full(1));
        CHECK(!families.next(fam));
    }
    {
        AntipodalEnumerator families(3);
        CHECK(families.total() == 16);
        Family fam;
        uint64_t count = 0;
        while (families.next(fam)) {
            CHECK(is_antipodal(fam));
            ++count;
        }
        CHECK(count == 16);
    }
    {
        AntipodalEnumerator families(4);
        std::set<std::string> seen;
        Family fam;
        while (families.next(fam)) seen.insert(to_text(fam));
        CHECK(seen.size() == 256);
    }
    CHECK(AntipodalEnumerator(5).total() == 65536);
    CHECK_THROWS_AS(AntipodalEnumerator(7), capability_error);
}

TEST_CASE("antipodal sampling") {
    CHECK(sample_antipodal(5, 0, 9) == Family(5));
    for (uint64_t seed = 0; seed < 10; ++seed) {
        const uint64_t m = 2 * (seed % 9);
        const Family fam = sample_antipodal(4, m, seed);
        CHECK(fam.size() == m);
        CHECK(is_antipodal(fam));
    }
    CHECK(sample_antipodal(8, 40, 123) == sample_antipodal(8, 40, 123));
    CHECK(sample_antipodal(8, 40, 123) != sample_antipodal(8, 40, 124));
    CHECK(sample_antipodal(8, 256, 5).size() == 256);
    CHECK_THROWS_AS(sample_antipodal(4, 3, 0), input_error);
    CHECK_THROWS_AS(sample_antipodal(21, 2, 0), capability_error);
}

TEST_CASE("nested extremal chain") {
    const auto chain = nested_extremal_chain(4);
    CHECK(chain.size() == 9);
    CHECK(chain.front() == Family(4));
    CHECK(chain.back() == Family::full(4));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        CHECK(chain[i].is_subset_of(chain[i + 1]));
        CHECK(chain[i].size() + 2 == chain[i + 1].size());
        CHECK(is_antipodal(chain[i]));
    }

    // Internal edges double the segment count while the halves stay apart.
    for (int n = 2; n <= 8; ++n)
        for (uint64_t m = 0; m <= (uint64_t{1} << (n - 1)); m += 2)
            CHECK(internal_edges(extremal_family(n, m)) == 2 * segment_edges(m / 2));

    CHECK_THROWS_AS(nested_extremal_chain(15), capability_error);
}

TEST_CASE("pair mask expansion") {
    CHECK(antipodal_from_pair_mask(3, 0b0011) ==
          [] {
              Family fam(3);
              for (uint64_t v : {0, 1, 6, 7}) fam.insert(v);
              return fam;
          }());
    CHECK_THROWS_AS(antipodal_from_pair_mask(3, 16), input_error);
    CHECK_THROWS_AS(antipodal_from_pair_mask(7, 0), input_error);
}
