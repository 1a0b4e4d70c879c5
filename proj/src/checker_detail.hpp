#pragma once

// Internal helpers shared by the parallel and reference checker engines.
// Everything that influences report bytes (instance generation, bound values,
// violation formatting, gates) lives here so the two engines can only differ
// in iteration strategy and counting primitives.

#include <bit>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cubeiso/antipodal.hpp"
#include "cubeiso/bits.hpp"
#include "cubeiso/checkers.hpp"
#include "cubeiso/errors.hpp"
#include "cubeiso/family.hpp"
#include "cubeiso/reports.hpp"
#include "cubeiso/segments.hpp"

namespace cubeiso::detail {

using std::int64_t;
using std::uint64_t;

inline VerificationReport make_header(std::string statement, int n, bool sampled,
                                      std::optional<uint64_t> seed) {
    VerificationReport r;
    r.statement = std::move(statement);
    r.n = n;
    r.mode = sampled ? "sampled" : "exhaustive";
    if (sampled) r.seed = seed;
    return r;
}

inline uint64_t sample_count(const CheckOptions& o) { return o.budget ? o.budget : 10000; }

// ---- feasibility gates ----

inline void gate_dimension(int n, int lo, int hi, const char* what) {
    if (n < lo || n > hi)
        throw capability_error(std::string(what) + " supports dimensions " + std::to_string(lo) +
                               ".." + std::to_string(hi));
}

inline void gate_theorem2(const CheckOptions& o) {
    if (o.mode == Mode::Exhaustive)
        gate_dimension(o.n, 0, o.force ? 5 : 4, "exhaustive theorem-2 check");
    else
        gate_dimension(o.n, 0, dimension_cap(), "sampled theorem-2 check");
}

inline void gate_theorem1(const CheckOptions& o) {
    if (o.mode == Mode::Exhaustive)
        gate_dimension(o.n, 1, o.force ? 6 : 5, "exhaustive theorem-1 check");
    else
        gate_dimension(o.n, 1, 20, "sampled theorem-1 check");
}

inline void gate_lemma5(const CheckOptions& o) {
    if (o.mode == Mode::Exhaustive)
        gate_dimension(o.n, 2, 4, "exhaustive balanced-coordinate check");
    else
        gate_dimension(o.n, 2, dimension_cap(), "sampled balanced-coordinate check");
}

inline void gate_lemma6(const CheckOptions& o) {
    if (o.mode == Mode::Exhaustive)
        gate_dimension(o.n, 1, 3, "exhaustive overlap-inequality check");
    else
        gate_dimension(o.n, 1, dimension_cap(), "sampled overlap-inequality check");
}

inline void gate_lemma3(uint64_t range) {
    if (range > (uint64_t{1} << 16)) throw capability_error("hart_gap sweep supports range <= 65536");
}

inline void gate_lemma4(int max_n) { gate_dimension(max_n, 1, 16, "hart_large_margin sweep"); }

// ---- exhaustive space sizes ----

inline uint64_t theorem2_total(int n) { return uint64_t{1} << (uint64_t{1} << n); }
inline uint64_t theorem1_total(int n) { return uint64_t{1} << (uint64_t{1} << (n - 1)); }
inline uint64_t lemma6_total(int n) { return uint64_t{1} << (uint64_t{2} << n); }

// ---- bound values ----

// Right-hand side of the potential bound for one size: 2F(s), shifted by
// 2s - 2^n above half. The table route backs the hot loops; the reference
// engine evaluates the digit form instead.
inline uint64_t potential_bound(uint64_t size, int n, bool use_table) {
    uint64_t base;
    if (use_table && size <= SegmentEdgeTable::shared().max_k())
        base = 2 * SegmentEdgeTable::shared()(size);
    else
        base = 2 * segment_edges(size);
    const uint64_t width = uint64_t{1} << n;
    return 2 * size <= width ? base : base + 2 * size - width;
}

inline std::vector<uint64_t> potential_bound_table(int n, bool use_table) {
    std::vector<uint64_t> bounds((uint64_t{1} << n) + 1);
    for (uint64_t s = 0; s < bounds.size(); ++s) bounds[s] = potential_bound(s, n, use_table);
    return bounds;
}

// Boundary bound per half-size for theorem 1.
inline std::vector<uint64_t> boundary_bound_table(int n) {
    std::vector<uint64_t> bounds((uint64_t{1} << (n - 1)) + 1);
    for (uint64_t h = 0; h < bounds.size(); ++h) bounds[h] = extremal_boundary(n, 2 * h);
    return bounds;
}

// ---- single-word kernels (n <= 6) ----

inline Family family_from_mask(int n, uint64_t mask) {
    return Family::from_words(n, std::vector<uint64_t>{mask});
}

inline uint64_t mask_edges(uint64_t mask, int n) {
    uint64_t total = 0;
    for (int b = 0; b < n; ++b)
        total += std::popcount(mask & (mask >> (1 << b)) & low_half_mask(b));
    return total;
}

inline uint64_t mask_reverse(uint64_t mask, int n) {
    return bit_reverse64(mask) >> (64 - (uint64_t{1} << n));
}

inline uint64_t expand_pair_mask(uint64_t pmask, int n) {
    const uint64_t top = (uint64_t{1} << n) - 1;
    uint64_t vmask = 0;
    while (pmask) {
        const int p = std::countr_zero(pmask);
        pmask &= pmask - 1;
        vmask |= (uint64_t{1} << p) | (uint64_t{1} << (top - p));
    }
    return vmask;
}

// ---- sampled instances (identical across engines by construction) ----

inline Family sampled_family(int n, uint64_t seed, uint64_t index) {
    return random_family(n, derive_seed(seed, index));
}

inline std::pair<Family, Family> sampled_family_pair(int n, uint64_t seed, uint64_t index) {
    return {random_family(n, derive_seed(seed, 2 * index)),
            random_family(n, derive_seed(seed, 2 * index + 1))};
}

inline int sampled_coordinate(int n, uint64_t seed, uint64_t index) {
    SplitMix64 g(derive_seed(seed, 2 * index + 1));
    return 1 + static_cast<int>(g.below(uint64_t(n)));
}

// Antipodal family with a uniformly random even size, then a uniform choice
// of that many pairs.
inline Family sampled_antipodal(int n, uint64_t seed, uint64_t index) {
    SplitMix64 g(derive_seed(seed, index));
    const uint64_t pairs = uint64_t{1} << (n - 1);
    const uint64_t chosen = g.below(pairs + 1);
    std::vector<uint32_t> order(pairs);
    std::iota(order.begin(), order.end(), 0);
    Family fam(n);
    const uint64_t top = (uint64_t{1} << n) - 1;
    for (uint64_t i = 0; i < chosen; ++i) {
        const uint64_t j = i + g.below(pairs - i);
        std::swap(order[i], order[j]);
        fam.insert(order[i]);
        fam.insert(top - order[i]);
    }
    return fam;
}

// ---- violation formatting ----

inline std::string thm2_violation(const Family& fam, uint64_t f, uint64_t bound) {
    return to_text(fam) + " size=" + std::to_string(fam.size()) + " f=" + std::to_string(f) +
           " bound=" + std::to_string(bound);
}

inline std::string thm1_violation(const Family& fam, uint64_t boundary, uint64_t bound) {
    return to_text(fam) + " size=" + std::to_string(fam.size()) +
           " boundary=" + std::to_string(boundary) + " bound=" + std::to_string(bound);
}

inline std::string lemma3_violation(uint64_t x, uint64_t y, int64_t gap, bool expected_equality) {
    std::string s = "x=" + std::to_string(x) + " y=" + std::to_string(y) +
                    " gap=" + std::to_string(gap) + " min=" + std::to_string(std::min(x, y));
    if (expected_equality) s += " expected=equality";
    return s;
}

inline std::string lemma4_violation(uint64_t x, uint64_t y, int n, int64_t margin) {
    return "x=" + std::to_string(x) + " y=" + std::to_string(y) + " n=" + std::to_string(n) +
           " margin=" + std::to_string(margin);
}

inline std::string lemma5_violation(const Family& fam, int i, int j, uint64_t di, uint64_t dj,
                                    uint64_t limit) {
    return to_text(fam) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
           " diff_i=" + std::to_string(di) + " diff_j=" + std::to_string(dj) +
           " limit=" + std::to_string(limit);
}

inline std::string lemma6_violation(const Family& c, const Family& d, int64_t slack) {
    return "C=" + to_text(c) + " D=" + to_text(d) + " slack=" + std::to_string(slack);
}

inline std::string identity_violation(const char* id, const std::string& instance, int64_t lhs,
                                      int64_t rhs) {
    return std::string("id=") + id + " " + instance + " lhs=" + std::to_string(lhs) +
           " rhs=" + std::to_string(rhs);
}

// ---- lemma-3 equality bookkeeping ----

inline bool power_of_two(uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

inline bool lemma3_stated_equality(uint64_t x, uint64_t y) {
    return (power_of_two(y) && x <= y) || (power_of_two(x) && y <= x);
}

// Shared per-pair logic: violation on gap < min, violated equality inside the
// stated region, and tallies of every equality pair seen.
inline void lemma3_check_pair(uint64_t x, uint64_t y, int64_t gap, VerificationReport& local) {
    const int64_t floor = static_cast<int64_t>(std::min(x, y));
    const bool stated = lemma3_stated_equality(x, y);
    if (gap < floor) {
        local.add_violation(lemma3_violation(x, y, gap, false));
    } else if (gap == floor) {
        ++local.counters[stated ? "equalities_stated" : "equalities_extra"];
    } else if (stated) {
        local.add_violation(lemma3_violation(x, y, gap, true));
    }
    ++local.instances;
}

}  // namespace cubeiso::detail
