#include <algorithm>
#include <bit>
#include <set>
#include <vector>

#include "cubeiso/antipodal.hpp"
#include "cubeiso/bits.hpp"
#include "cubeiso/errors.hpp"
#include "cubeiso/family.hpp"
#include "cubeiso/segments.hpp"
#include "doctest.h"

using namespace cubeiso;

namespace {

// Independent edge oracle: walk all vertex pairs and test adjacency by the
// symmetric-difference size alone.
uint64_t pairwise_edges(const Family& fam) {
    uint64_t count = 0;
    for (uint64_t v = 0; v < fam.vertex_count(); ++v)
        for (uint64_t u = v + 1; u < fam.vertex_count(); ++u)
            if (fam.contains(v) && fam.contains(u) && std::popcount(v ^ u) == 1) ++count;
    return count;
}

uint64_t pairwise_boundary(const Family& fam) {
    uint64_t count = 0;
    for (uint64_t v = 0; v < fam.vertex_count(); ++v)
        for (uint64_t u = 0; u < fam.vertex_count(); ++u)
            if (fam.contains(v) && !fam.contains(u) && std::popcount(v ^ u) == 1) ++count;
    return count;
}

Family subcube(int n, int k) { return initial_segment(n, uint64_t{1} << k); }

Family family_of(int n, std::initializer_list<uint64_t> codes) {
    Family fam(n);
    for (uint64_t c : codes) fam.insert(c);
    return fam;
}

std::vector<int> identity_perm(int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    return perm;
}

}  // namespace

TEST_CASE("vertex encoding matches the stated convention") {
    CHECK(encode_vertex({}, 3).code == 0);
    CHECK(encode_vertex({1, 3}, 3).code == 5);
    CHECK(encode_vertex({2}, 3).code == 2);
    CHECK(encode_vertex({1}, 3).code == 1);
    CHECK_THROWS_AS(encode_vertex({0}, 3), input_error);
    CHECK_THROWS_AS(encode_vertex({4}, 3), input_error);

    for (uint64_t v = 0; v < 16; ++v) {
        const auto elements = decode_vertex(Vertex{v}, 4);
        CHECK(encode_vertex(std::span<const int>(elements), 4).code == v);
    }
}

TEST_CASE("binary order equals integer order under the encoding") {
    // x < y iff the largest element of the symmetric difference lies in y.
    const auto binary_less = [](const std::vector<int>& x, const std::vector<int>& y) {
        std::set<int> sx(x.begin(), x.end()), sy(y.begin(), y.end()), diff;
        for (int e : sx)
            if (!sy.count(e)) diff.insert(e);
        for (int e : sy)
            if (!sx.count(e)) diff.insert(e);
        if (diff.empty()) return false;
        return sy.count(*diff.rbegin()) > 0;
    };
    const int n = 4;
    for (uint64_t v = 0; v < 16; ++v)
        for (uint64_t u = 0; u < 16; ++u) {
            const bool lt = binary_less(decode_vertex(Vertex{v}, n), decode_vertex(Vertex{u}, n));
            CHECK(lt == (v < u));
        }
}

TEST_CASE("internal edge counts") {
    CHECK(internal_edges(Family::full(3)) == 12);
    for (int n = 0; n <= 8; ++n)
        CHECK(internal_edges(Family::full(n)) == uint64_t(n) * (uint64_t{1} << n) / 2);

    for (int n = 2; n <= 7; ++n)
        for (int k = 0; k < n; ++k)
            CHECK(internal_edges(subcube(n, k)) == uint64_t(k) * (uint64_t{1} << k) / 2);

    const Family fam = family_of(3, {0, 1, 6, 7});  // {}, {1}, {2,3}, {1,2,3}
    CHECK(internal_edges(fam) == 2);
    CHECK(internal_edges(fam) == pairwise_edges(fam));

    for (int n : {0, 1, 4, 5, 6, 7}) {
        for (uint64_t seed = 0; seed < 8; ++seed) {
            const Family rnd = random_family(n, seed);
            const uint64_t expected = pairwise_edges(rnd);
            CHECK(internal_edges(rnd) == expected);
            CHECK(ref::internal_edges(rnd) == expected);
        }
    }
}

TEST_CASE("edge boundary, both routes") {
    CHECK(edge_boundary(Family(4)) == 0);
    for (int n = 1; n <= 6; ++n) CHECK(edge_boundary(family_of(n, {0})) == uint64_t(n));
    CHECK(edge_boundary(family_of(0, {0})) == 0);

    const Family pair_of_subcubes = family_of(3, {0, 1, 6, 7});
    CHECK(edge_boundary(pair_of_subcubes) == 8);
    CHECK(pairwise_boundary(pair_of_subcubes) == 8);

    for (int n : {0, 1, 5, 6, 7}) {
        for (uint64_t seed = 10; seed < 16; ++seed) {
            const Family rnd = random_family(n, seed);
            const uint64_t direct = edge_boundary_direct(rnd);
            CHECK(edge_boundary(rnd) == direct);
            CHECK(ref::edge_boundary(rnd) == direct);
            CHECK(2 * internal_edges(rnd) + direct == uint64_t(n) * rnd.size());
        }
    }
}

TEST_CASE("antipodal image and overlap") {
    CHECK(antipodal_image(family_of(2, {0})) == family_of(2, {3}));
    CHECK(antipodal_image(initial_segment(3, 2)) == family_of(3, {6, 7}));

    for (int n : {0, 1, 3, 6, 7}) {
        for (uint64_t seed = 20; seed < 25; ++seed) {
            const Family rnd = random_family(n, seed);
            CHECK(antipodal_image(antipodal_image(rnd)) == rnd);
            const uint64_t overlap = (rnd & antipodal_image(rnd)).size();
            CHECK(antipodal_overlap(rnd) == overlap);
            CHECK(ref::antipodal_overlap(rnd) == overlap);
        }
    }

    const Family ext = extremal_family(4, 6);
    CHECK(is_antipodal(ext));
    CHECK(antipodal_image(ext) == ext);
}

TEST_CASE("complement family") {
    CHECK(complement_family(Family(2)) == Family::full(2));
    for (uint64_t seed = 0; seed < 100; ++seed) {
        const Family rnd = random_family(6, 1000 + seed);
        CHECK(edge_boundary(complement_family(rnd)) == edge_boundary(rnd));
    }
    // Potential under complement: exact correction term (n+1)(2^n - 2|A|).
    for (int n = 0; n <= 8; ++n) {
        for (uint64_t seed = 0; seed < 6; ++seed) {
            const Family rnd = random_family(n, 77 + seed);
            const int64_t correction =
                int64_t(n + 1) * (int64_t(uint64_t{1} << n) - 2 * int64_t(rnd.size()));
            CHECK(int64_t(potential(complement_family(rnd))) ==
                  int64_t(potential(rnd)) + correction);
        }
    }
}

TEST_CASE("sections") {
    // The lower n-section of two antipodal subcubes is a single subcube.
    for (int n = 3; n <= 7; ++n)
        for (int k = 2; k < n; ++k) {
            const Family both = extremal_family(n, uint64_t{1} << k);
            CHECK(lower_section(both, n) == subcube(n - 1, k - 1));
        }

    for (int i = 1; i <= 4; ++i) {
        CHECK(upper_section(Family::full(4), i) == Family::full(3));
        CHECK(lower_section(Family::full(4), i) == Family::full(3));
    }

    for (int n : {1, 2, 6, 7, 8}) {
        for (uint64_t seed = 30; seed < 34; ++seed) {
            const Family rnd = random_family(n, seed);
            for (int i = 1; i <= n; ++i) {
                const Family up = upper_section(rnd, i);
                const Family low = lower_section(rnd, i);
                CHECK(up.size() + low.size() == rnd.size());
                CHECK(upper_section_size(rnd, i) == up.size());
                CHECK(lower_section_size(rnd, i) == low.size());
                CHECK(internal_edges(rnd) ==
                      internal_edges(up) + internal_edges(low) + intersection_size(up, low));
                // Section membership, vertex by vertex.
                for (uint64_t v = 0; v < up.vertex_count(); ++v) {
                    const uint64_t lowbits = v & ((uint64_t{1} << (i - 1)) - 1);
                    const uint64_t highbits = v >> (i - 1) << i;
                    CHECK(up.contains(v) ==
                          rnd.contains(lowbits | highbits | (uint64_t{1} << (i - 1))));
                    CHECK(low.contains(v) == rnd.contains(lowbits | highbits));
                }
            }
        }
    }

    // Segment stability under removing the top coordinate.
    for (int n = 2; n <= 8; ++n) {
        const uint64_t half = uint64_t{1} << (n - 1);
        for (uint64_t k = 0; k <= 2 * half; k += 7) {
            const Family seg = initial_segment(n, k);
            CHECK(lower_section(seg, n) == initial_segment(n - 1, std::min(k, half)));
            CHECK(upper_section(seg, n) == initial_segment(n - 1, k > half ? k - half : 0));
        }
    }

    CHECK_THROWS_AS(upper_section(Family(3), 0), input_error);
    CHECK_THROWS_AS(upper_section(Family(3), 4), input_error);
    CHECK_THROWS_AS(upper_section(Family(0), 1), input_error);
}

TEST_CASE("automorphisms preserve the profile") {
    const Family fam = random_family(6, 99);
    CHECK(apply_automorphism(fam, identity_perm(6), Vertex{0}) == fam);

    // Translating by the full set is exactly the antipodal map.
    for (int n = 1; n <= 7; ++n) {
        const Family rnd = random_family(n, 200 + n);
        const Vertex full{(uint64_t{1} << n) - 1};
        CHECK(apply_automorphism(rnd, identity_perm(n), full) == antipodal_image(rnd));
    }

    // Random permutations and translates.
    SplitMix64 g(4242);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 6;
        auto perm = identity_perm(n);
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[g.below(i + 1)]);
        const Vertex t{g.below(uint64_t{1} << n)};
        const Family rnd = random_family(n, 300 + trial);
        const Family image = apply_automorphism(rnd, perm, t);
        CHECK(image.size() == rnd.size());
        CHECK(internal_edges(image) == internal_edges(rnd));
        CHECK(edge_boundary(image) == edge_boundary(rnd));
        CHECK(potential(image) == potential(rnd));
    }

    // The complement of a small extremal family is isomorphic to the large
    // one, via the translate that flips the top coordinate.
    for (int n = 3; n <= 7; ++n) {
        const uint64_t width = uint64_t{1} << n;
        for (uint64_t m = 0; m <= width / 2; m += 2) {
            const Family comp = complement_family(extremal_family(n, m));
            const Vertex flip_top{uint64_t{1} << (n - 1)};
            CHECK(apply_automorphism(comp, identity_perm(n), flip_top) ==
                  extremal_family(n, width - m));
        }
    }

    std::vector<int> bad = {1, 1, 3};
    CHECK_THROWS_AS(apply_automorphism(Family(3), bad, Vertex{0}), input_error);
}

TEST_CASE("potential values") {
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k < n; ++k) {
            CHECK(potential(subcube(n, k)) == uint64_t(k) << k);
            CHECK(potential(extremal_family(n, uint64_t{1} << k)) == uint64_t(k) << k);
        }
    CHECK(potential(Family(5)) == 0);

    // Antipodal families: f = 2e + |A|, and |A| is even.
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const Family fam = sample_antipodal(6, 2 * (seed % 17), seed);
        CHECK(potential(fam) == 2 * internal_edges(fam) + fam.size());
        CHECK(fam.size() % 2 == 0);
    }

    // For antipodal families the top section carries the whole potential.
    AntipodalEnumerator families(4);
    Family fam;
    while (families.next(fam)) CHECK(internal_edges(fam) == potential(upper_section(fam, 4)));
}

TEST_CASE("pair counts") {
    const Family a = random_family(6, 1), b = random_family(6, 2);
    const PairCounts c = family_counts(a, b);
    CHECK(c.both == intersection_size(a, b));
    CHECK(c.either == union_size(a, b));
    CHECK(c.both + c.first_only == a.size());
    CHECK(c.either == a.size() + b.size() - c.both);
    CHECK(c.meet_image == intersection_size(a, antipodal_image(b)));

    CHECK(family_counts(a, a).both == a.size());
    const Family disjoint = complement_family(a);
    CHECK(family_counts(a, disjoint).both == 0);
    CHECK_THROWS_AS(family_counts(a, Family(5)), input_error);
}

TEST_CASE("cross edges") {
    CHECK(cross_edges(family_of(1, {0}), family_of(1, {1})) == 1);
    const Family a = initial_segment(5, 8);
    CHECK_THROWS_AS(cross_edges(a, a), input_error);
    // Between a half cube and its complement: all boundary edges.
    const Family low = initial_segment(5, 16);
    CHECK(cross_edges(low, complement_family(low)) == edge_boundary(low));
}

TEST_CASE("family text form") {
    CHECK(to_text(Family(2)) == "n=2 hex=0");
    CHECK(to_text(Family::full(2)) == "n=2 hex=f");
    CHECK(to_text(family_of(2, {0})) == "n=2 hex=1");
    CHECK(to_text(Family::full(0)) == "n=0 hex=1");
    CHECK(to_text(Family::full(1)) == "n=1 hex=3");
    CHECK(to_text(extremal_family(4, 4)) == "n=4 hex=300c");

    for (int n : {0, 1, 2, 5, 6, 7}) {
        for (uint64_t seed = 50; seed < 55; ++seed) {
            const Family rnd = random_family(n, seed);
            CHECK(family_from_text(to_text(rnd)) == rnd);
        }
    }
    CHECK(family_from_text("n=2 hex=a\n") == family_of(2, {1, 3}));

    CHECK_THROWS_AS(family_from_text("m=2 hex=a"), input_error);
    CHECK_THROWS_AS(family_from_text("n=2 hex=ab"), input_error);
    CHECK_THROWS_AS(family_from_text("n=2 hex=A"), input_error);
    CHECK_THROWS_AS(family_from_text("n=1 hex=7"), input_error);
}

TEST_CASE("dimension cap") {
    const int old_cap = dimension_cap();
    set_dimension_cap(5);
    CHECK_THROWS_AS(Family(6), input_error);
    CHECK_NOTHROW(Family(5));
    set_dimension_cap(old_cap);
    CHECK_THROWS_AS(set_dimension_cap(31), input_error);
}
