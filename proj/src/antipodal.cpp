#include "cubeiso/antipodal.hpp"

#include <numeric>
#include <string>

#include "cubeiso/bits.hpp"
#include "cubeiso/errors.hpp"
#include "cubeiso/segments.hpp"

namespace cubeiso {

namespace {

void require_even_size(int n, uint64_t m) {
    if (n < 0 || n > dimension_cap()) throw input_error("dimension out of range");
    if (m & 1) throw input_error("antipodal families have even size; got " + std::to_string(m));
    if (n < 64 && m > (uint64_t{1} << n)) throw input_error("size exceeds 2^n");
}

}  // namespace

PairIndex::PairIndex(int n_arg) : n(n_arg) {
    if (n < 1 || n > dimension_cap()) throw input_error("pair index needs dimension in [1, cap]");
}

uint64_t PairIndex::representative(uint64_t pair) const {
    if (pair >= pair_count()) throw input_error("pair index out of range");
    return pair;
}

uint64_t PairIndex::partner(uint64_t pair) const {
    if (pair >= pair_count()) throw input_error("pair index out of range");
    return (uint64_t{1} << n) - 1 - pair;
}

Family extremal_family(int n, uint64_t m) {
    require_even_size(n, m);
    const Family segment = initial_segment(n, m / 2);
    return segment | antipodal_image(segment);
}

uint64_t extremal_boundary(int n, uint64_t m) {
    require_even_size(n, m);
    if (n == 0) return 0;
    const uint64_t h = m / 2;
    const uint64_t g = std::min(h, (uint64_t{1} << (n - 1)) - h);
    return uint64_t(n) * 2 * g - 4 * segment_edges(g);
}

ExtremalWitness extremal_witness(int n, uint64_t m) {
    ExtremalWitness w;
    w.size = m;
    w.family = extremal_family(n, m);
    w.boundary = edge_boundary(w.family);
    return w;
}

Family antipodal_from_pair_mask(int n, uint64_t mask) {
    if (n < 1 || n > 6) throw input_error("pair masks only cover dimensions 1..6");
    const PairIndex pairs(n);
    if (mask >> pairs.pair_count()) throw input_error("pair mask out of range");
    Family fam(n);
    uint64_t rest = mask;
    while (rest) {
        const int p = std::countr_zero(rest);
        rest &= rest - 1;
        fam.insert(uint64_t(p));
        fam.insert(pairs.partner(uint64_t(p)));
    }
    return fam;
}

AntipodalEnumerator::AntipodalEnumerator(int n) : n_(n) {
    if (n < 1 || n > 6)
        throw capability_error("exhaustive antipodal enumeration needs n <= 6; use sampling instead");
}

uint64_t AntipodalEnumerator::total() const { return uint64_t{1} << (uint64_t{1} << (n_ - 1)); }

bool AntipodalEnumerator::next(Family& out) {
    if (index_ >= total()) return false;
    out = antipodal_from_pair_mask(n_, index_);
    ++index_;
    return true;
}

Family sample_antipodal(int n, uint64_t m, uint64_t seed) {
    require_even_size(n, m);
    if (n < 1) {
        if (m != 0) throw input_error("dimension 0 admits no antipodal pairs");
        return Family(0);
    }
    if (n > 20) throw capability_error("antipodal sampling supports n <= 20");
    const PairIndex pairs(n);
    const uint64_t P = pairs.pair_count();
    std::vector<uint64_t> order(P);
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 g(seed);
    Family fam(n);
    for (uint64_t i = 0; i < m / 2; ++i) {
        const uint64_t j = i + g.below(P - i);
        std::swap(order[i], order[j]);
        fam.insert(order[i]);
        fam.insert(pairs.partner(order[i]));
    }
    return fam;
}

std::vector<Family> nested_extremal_chain(int n) {
    if (n < 0 || n > 14) throw capability_error("nested chain materialization supports n <= 14");
    std::vector<Family> chain;
    chain.reserve((uint64_t{1} << n) / 2 + 1);
    for (uint64_t m = 0; m <= (uint64_t{1} << n); m += 2) chain.push_back(extremal_family(n, m));
    return chain;
}

}  // namespace cubeiso
