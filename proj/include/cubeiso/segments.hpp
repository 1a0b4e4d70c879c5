#pragma once

#include <cstdint>
#include <vector>

#include "cubeiso/family.hpp"

namespace cubeiso {

using std::int64_t;
using std::uint64_t;

// The first k vertices of the cube in the binary ordering; under the fixed
// encoding these are exactly the codes below k.
Family initial_segment(int n, uint64_t k);

// Internal edge count of the size-k initial segment, independent of the
// ambient dimension. Evaluates the digit closed form of
// sum_{i<k} popcount(i) in O(log k).
uint64_t segment_edges(uint64_t k);

// The same function tabulated for O(1) lookups in hot verification loops.
// Construction walks the popcount increments and is validated once, in
// shared(), against direct edge counts of actual segments.
class SegmentEdgeTable {
public:
    explicit SegmentEdgeTable(uint64_t max_k);

    uint64_t max_k() const { return values_.size() - 1; }
    uint64_t operator()(uint64_t k) const;

    // Process-wide table up to 2^20, oracle-checked on first use.
    static const SegmentEdgeTable& shared();

private:
    std::vector<uint64_t> values_;
};

// segment_edges(x+y) - segment_edges(x) - segment_edges(y). At least
// min(x, y), with equality whenever y is a power of two and x <= y.
int64_t hart_gap(uint64_t x, uint64_t y);

// segment_edges(x+y) - segment_edges(y) - segment_edges(x) - y + 2^{n-1} - x,
// defined on the region x+y <= 2^n, 2^{n-1} <= y <= 2^{n-1} + x where it is
// guaranteed nonnegative. Arguments outside the region are input errors, not
// counterexamples.
int64_t hart_large_margin(uint64_t x, uint64_t y, int n);

// Whether 2*segment_edges(k) - 2*segment_edges(2^n - k) == (2k - 2^n) * n.
bool segment_complement_identity(uint64_t k, int n);

}  // namespace cubeiso
