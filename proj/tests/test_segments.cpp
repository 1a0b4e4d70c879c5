#include <bit>

#include "cubeiso/errors.hpp"
#include "cubeiso/family.hpp"
#include "cubeiso/segments.hpp"
#include "doctest.h"

using namespace cubeiso;

TEST_CASE("initial segments") {
    CHECK(initial_segment(3, 0) == Family(3));
    CHECK(initial_segment(3, 8) == Family::full(3));

    // First five sets of the 3-cube in binary order: {}, {1}, {2}, {1,2}, {3}.
    const Family first_five = initial_segment(3, 5);
    for (uint64_t v = 0; v < 8; ++v) CHECK(first_five.contains(v) == (v < 5));

    // Segments of size 2^{k-1} are exactly the subcubes on [k-1].
    const int n = 5;
    for (int k = 1; k <= n; ++k) {
        const Family seg = initial_segment(n, uint64_t{1} << (k - 1));
        for (uint64_t v = 0; v < 32; ++v) {
            const bool inside_subcube = (v >> (k - 1)) == 0;
            CHECK(seg.contains(v) == inside_subcube);
        }
    }

    CHECK_THROWS_AS(initial_segment(3, 9), input_error);
}

TEST_CASE("segment edge counts, three routes") {
    const SegmentEdgeTable& table = SegmentEdgeTable::shared();
    CHECK(table(0) == 0);
    CHECK(table(4) == 4);
    CHECK(table(8) == 12);

    // Direct enumeration puts the size-5 segment at five edges.
    CHECK(internal_edges(initial_segment(3, 5)) == 5);
    CHECK(table(5) == 5);
    CHECK(segment_edges(5) == 5);

    for (int k = 1; k <= 16; ++k)
        CHECK(table(uint64_t{1} << k) == uint64_t(k) << (k - 1));

    // Independence of the ambient dimension, against actual edge counts.
    for (int amb = 0; amb <= 8; ++amb)
        for (uint64_t k = 0; k <= (uint64_t{1} << amb); ++k)
            CHECK(table(k) == internal_edges(initial_segment(amb, k)));

    // Digit form and table agree; increments are popcounts.
    for (uint64_t k = 0; k <= (uint64_t{1} << 13); ++k) {
        CHECK(segment_edges(k) == table(k));
        CHECK(table(k + 1) - table(k) == uint64_t(std::popcount(k)));
    }
    CHECK(segment_edges(uint64_t{1} << 20) == table(uint64_t{1} << 20));
    CHECK(segment_edges(uint64_t{1} << 24) == uint64_t{24} << 23);

    // Doubling rule: a segment of even size splits into two half-size copies
    // plus one matching edge per pair.
    for (uint64_t k = 0; k <= 4096; ++k) CHECK(segment_edges(2 * k) == 2 * segment_edges(k) + k);

    CHECK_THROWS_AS(table(table.max_k() + 1), input_error);
}

TEST_CASE("hart gap") {
    for (uint64_t y = 0; y < 40; ++y) CHECK(hart_gap(0, y) == 0);
    CHECK(hart_gap(2, 2) == 2);
    CHECK(hart_gap(3, 5) == 5);  // 12 - 2 - 5, at least min(3,5)

    for (uint64_t x = 0; x <= 256; ++x)
        for (uint64_t y = 0; y <= 256; ++y) {
            const int64_t gap = hart_gap(x, y);
            CHECK(gap >= int64_t(std::min(x, y)));
            const bool pow2 = y != 0 && (y & (y - 1)) == 0;
            if (pow2 && x <= y) CHECK(gap == int64_t(std::min(x, y)));
        }

    // Equality also happens outside the power-of-two description.
    CHECK(hart_gap(2, 3) == 2);
}

TEST_CASE("hart large margin") {
    for (int n = 1; n <= 10; ++n) CHECK(hart_large_margin(0, uint64_t{1} << (n - 1), n) == 0);

    const SegmentEdgeTable& table = SegmentEdgeTable::shared();
    const auto by_table = [&](uint64_t x, uint64_t y, int n) {
        return int64_t(table(x + y)) - int64_t(table(y)) - int64_t(table(x)) - int64_t(y) +
               int64_t(uint64_t{1} << (n - 1)) - int64_t(x);
    };
    CHECK(hart_large_margin(1, 2, 2) == 0);
    CHECK(by_table(1, 2, 2) == 0);
    CHECK(hart_large_margin(2, 5, 3) == 0);
    CHECK(by_table(2, 5, 3) == 0);
    CHECK(hart_large_margin(3, 5, 3) == 1);
    CHECK(by_table(3, 5, 3) == 1);

    // Exhaustive over the admissible region for small n.
    for (int n = 1; n <= 8; ++n) {
        const uint64_t half = uint64_t{1} << (n - 1);
        for (uint64_t y = half; y <= 2 * half; ++y)
            for (uint64_t x = y - half; x + y <= 2 * half; ++x)
                CHECK(hart_large_margin(x, y, n) >= 0);
    }

    // Out-of-region arguments are input errors, never counterexamples.
    CHECK_THROWS_AS(hart_large_margin(2, 3, 2), input_error);  // x + y > 2^n
    CHECK_THROWS_AS(hart_large_margin(5, 3, 3), input_error);  // y below half
    CHECK_THROWS_AS(hart_large_margin(0, 4, 2), input_error);  // y > half + x
    CHECK_THROWS_AS(hart_large_margin(1, 1, 0), input_error);
}

TEST_CASE("segment complement identity") {
    for (int n = 1; n <= 10; ++n) {
        CHECK(segment_complement_identity(uint64_t{1} << (n - 1), n));
        CHECK(segment_complement_identity(uint64_t{1} << n, n));
        CHECK(segment_complement_identity(0, n));
    }
    // 2F(3) - 2F(5) = 4 - 10 = -6 = (2*3 - 8) * 3.
    CHECK(2 * int64_t(segment_edges(3)) - 2 * int64_t(segment_edges(5)) == -6);
    CHECK(segment_complement_identity(3, 3));

    for (int n = 0; n <= 10; ++n)
        for (uint64_t k = 0; k <= (uint64_t{1} << n); ++k)
            CHECK(segment_complement_identity(k, n));

    CHECK_THROWS_AS(segment_complement_identity(9, 3), input_error);
}

TEST_CASE("small segments do not meet their antipodal image") {
    for (int n = 2; n <= 8; ++n) {
        const uint64_t quarter = uint64_t{1} << (n - 2);
        for (uint64_t k = 0; k <= quarter; ++k) {
            const Family seg = initial_segment(n, k);
            const Family image = antipodal_image(seg);
            CHECK(intersection_size(seg, image) == 0);
            CHECK(cross_edges(seg, image) == 0);
        }
    }
}
