#include "cubeiso/segments.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "cubeiso/errors.hpp"

namespace cubeiso {

Family initial_segment(int n, uint64_t k) {
    Family fam(n);
    if (k > fam.vertex_count())
        throw input_error("segment size " + std::to_string(k) + " exceeds 2^" + std::to_string(n));
    std::vector<uint64_t> words(fam.word_count(), 0);
    const uint64_t full = k >> 6;
    for (uint64_t j = 0; j < full; ++j) words[j] = ~uint64_t{0};
    if (k & 63) words[full] = (uint64_t{1} << (k & 63)) - 1;
    return Family::from_words(n, std::move(words));
}

uint64_t segment_edges(uint64_t k) {
    // Set bits among 0..k-1, position by position: each bit b contributes one
    // full run of 2^b per period 2^{b+1}, plus the tail of the last period.
    uint64_t total = 0;
    for (int b = 0; b < 63 && (uint64_t{1} << b) < k; ++b) {
        const uint64_t half = uint64_t{1} << b;
        const uint64_t full_periods = (k >> (b + 1)) << b;
        const uint64_t rem = k & ((half << 1) - 1);
        total += full_periods + (rem > half ? rem - half : 0);
    }
    return total;
}

SegmentEdgeTable::SegmentEdgeTable(uint64_t max_k) {
    if (max_k > (uint64_t{1} << 56)) throw input_error("segment edge table too large for 64-bit counts");
    values_.resize(max_k + 1);
    values_[0] = 0;
    for (uint64_t k = 0; k < max_k; ++k) values_[k + 1] = values_[k] + std::popcount(k);
}

uint64_t SegmentEdgeTable::operator()(uint64_t k) const {
    if (k >= values_.size()) throw input_error("segment edge table lookup out of range");
    return values_[k];
}

const SegmentEdgeTable& SegmentEdgeTable::shared() {
    static const SegmentEdgeTable table = [] {
        SegmentEdgeTable t(uint64_t{1} << 20);
        // Validation pass: the popcount recurrence must reproduce the edge
        // counts of actual initial segments before the table is trusted.
        const int n = 12;
        for (uint64_t k = 0; k <= (uint64_t{1} << n); ++k)
            if (t(k) != internal_edges(initial_segment(n, k)))
                throw std::logic_error("segment edge table failed oracle validation at k=" +
                                       std::to_string(k));
        return t;
    }();
    return table;
}

namespace {

int64_t edges_at(uint64_t k) {
    const SegmentEdgeTable& t = SegmentEdgeTable::shared();
    return static_cast<int64_t>(k <= t.max_k() ? t(k) : segment_edges(k));
}

}  // namespace

int64_t hart_gap(uint64_t x, uint64_t y) { return edges_at(x + y) - edges_at(x) - edges_at(y); }

int64_t hart_large_margin(uint64_t x, uint64_t y, int n) {
    if (n < 1 || n > 62) throw input_error("hart_large_margin dimension out of range");
    const uint64_t half = uint64_t{1} << (n - 1);
    if (x + y > 2 * half || y < half || y > half + x)
        throw input_error("hart_large_margin arguments outside the lemma's region");
    return edges_at(x + y) - edges_at(y) - edges_at(x) - static_cast<int64_t>(y) +
           static_cast<int64_t>(half) - static_cast<int64_t>(x);
}

bool segment_complement_identity(uint64_t k, int n) {
    if (n < 0 || n > 62) throw input_error("dimension out of range");
    const uint64_t total = uint64_t{1} << n;
    if (k > total) throw input_error("k exceeds 2^n");
    const int64_t lhs = 2 * edges_at(k) - 2 * edges_at(total - k);
    const int64_t rhs = (2 * static_cast<int64_t>(k) - static_cast<int64_t>(total)) * n;
    return lhs == rhs;
}

}  // namespace cubeiso
