#pragma once

#include <cstdint>
#include <vector>

#include "cubeiso/family.hpp"

namespace cubeiso {

// The 2^{n-1} antipodal vertex pairs {v, 2^n-1-v}, keyed by the smaller code.
struct PairIndex {
    int n;

    explicit PairIndex(int n);

    uint64_t pair_count() const { return uint64_t{1} << (n - 1); }
    uint64_t representative(uint64_t pair) const;
    uint64_t partner(uint64_t pair) const;
};

// The union of the size-m/2 initial segment with its antipodal image: the
// family the antipodal isoperimetric bound is stated against.
Family extremal_family(int n, uint64_t m);

// Edge boundary of extremal_family(n, m), via the closed form
// n*2g - 4*segment_edges(g) with g = min(m/2, 2^{n-1} - m/2).
uint64_t extremal_boundary(int n, uint64_t m);

struct ExtremalWitness {
    uint64_t size = 0;
    Family family;
    uint64_t boundary = 0;  // counted directly on the constructed family
};

ExtremalWitness extremal_witness(int n, uint64_t m);

// Family selected by a pair-inclusion mask: bit p includes the pair
// {p, 2^n-1-p}. Requires n in [1, 6] so masks fit one word.
Family antipodal_from_pair_mask(int n, uint64_t mask);

// Streams each of the 2^{2^{n-1}} antipodal families exactly once, in
// pair-mask counting order. Exhaustive enumeration is only representable for
// n <= 6; callers gate further.
class AntipodalEnumerator {
public:
    explicit AntipodalEnumerator(int n);

    uint64_t total() const;
    bool next(Family& out);

private:
    int n_;
    uint64_t index_ = 0;
};

// Uniformly random antipodal family of size exactly m: a uniform m/2-subset
// of the pairs, deterministic in the seed.
Family sample_antipodal(int n, uint64_t m, uint64_t seed);

// extremal_family(n, m) for m = 0, 2, ..., 2^n; each family contains the
// previous one.
std::vector<Family> nested_extremal_chain(int n);

}  // namespace cubeiso
