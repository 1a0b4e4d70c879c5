#include <algorithm>
#include <bit>
#include <vector>

#include "checker_detail.hpp"
#include "cubeiso/checkers.hpp"

namespace cubeiso {

namespace {

using namespace detail;

// Fixed shard count: the merge below runs in shard order, so reports are
// identical for any thread count, including a build without OpenMP.
constexpr uint64_t kShardCount = 256;

template <typename ShardFn>
VerificationReport run_sharded(VerificationReport header, uint64_t total, ShardFn&& shard_fn) {
    const uint64_t shards = total < kShardCount ? std::max<uint64_t>(total, 1) : kShardCount;
    std::vector<VerificationReport> parts(shards);
#pragma omp parallel for schedule(dynamic)
    for (long long s = 0; s < static_cast<long long>(shards); ++s) {
        const uint64_t lo = total / shards * s + std::min<uint64_t>(uint64_t(s), total % shards);
        const uint64_t hi = lo + total / shards + (uint64_t(s) < total % shards ? 1 : 0);
        shard_fn(lo, hi, parts[s]);
    }
    for (const auto& p : parts) merge_into(header, p);
    return header;
}

// Per-shard minimum tracking for the per-size extrema of theorem 1.
struct SizeAccumulator {
    uint64_t min = ~uint64_t{0};
    uint64_t count = 0;

    void offer(uint64_t value) {
        if (value < min) {
            min = value;
            count = 1;
        } else if (value == min) {
            ++count;
        }
    }
};

void fold_extrema(VerificationReport& local, const std::vector<SizeAccumulator>& acc,
                  const std::vector<uint64_t>& bounds) {
    for (uint64_t h = 0; h < acc.size(); ++h) {
        if (acc[h].count == 0) continue;
        local.extrema[2 * h] = SizeExtremum{acc[h].min, acc[h].count, bounds[h]};
    }
}

}  // namespace

VerificationReport check_theorem2(const CheckOptions& o) {
    gate_theorem2(o);
    const int n = o.n;
    if (o.mode == Mode::Sampled) {
        auto header = make_header("thm2", n, true, o.seed);
        return run_sharded(std::move(header), sample_count(o),
                           [&](uint64_t lo, uint64_t hi, VerificationReport& local) {
                               for (uint64_t idx = lo; idx < hi; ++idx) {
                                   const Family fam = sampled_family(n, o.seed, idx);
                                   const uint64_t f = potential(fam);
                                   const uint64_t bound = potential_bound(fam.size(), n, true);
                                   if (f > bound) local.add_violation(thm2_violation(fam, f, bound));
                               }
                               local.instances += hi - lo;
                           });
    }
    auto header = make_header("thm2", n, false, {});
    uint64_t total = theorem2_total(n);
    if (o.budget && o.budget < total) {
        total = o.budget;
        header.complete = false;
    }
    const auto bounds = potential_bound_table(n, true);
    return run_sharded(std::move(header), total,
                       [&](uint64_t lo, uint64_t hi, VerificationReport& local) {
                           for (uint64_t mask = lo; mask < hi; ++mask) {
                               const uint64_t size = std::popcount(mask);
                               const uint64_t f =
                                   2 * mask_edges(mask, n) +
                                   std::popcount(mask & mask_reverse(mask, n));
                               if (f > bounds[size])
                                   local.add_violation(
                                       thm2_violation(family_from_mask(n, mask), f, bounds[size]));
                           }
                           local.instances += hi - lo;
                       });
}

VerificationReport check_theorem1(const CheckOptions& o) {
    gate_theorem1(o);
    const int n = o.n;
    const auto bounds = boundary_bound_table(n);
    if (o.mode == Mode::Sampled) {
        auto header = make_header("thm1", n, true, o.seed);
        return run_sharded(std::move(header), sample_count(o),
                           [&](uint64_t lo, uint64_t hi, VerificationReport& local) {
                               for (uint64_t idx = lo; idx < hi; ++idx) {
                                   const Family fam = sampled_antipodal(n, o.seed, idx);
                                   const uint64_t boundary = edge_boundary(fam);
                                   const uint64_t bound = bounds[fam.size() / 2];
                                   if (boundary < bound)
                                       local.add_violation(thm1_violation(fam, boundary, bound));
                               }
                               local.instances += hi - lo;
                           });
    }
    auto header = make_header("thm1", n, false, {});
    uint64_t total = theorem1_total(n);
    if (o.budget && o.budget < total) {
        total = o.budget;
        header.complete = false;
    }
    return run_sharded(std::move(header), total,
                       [&](uint64_t lo, uint64_t hi, VerificationReport& local) {
                           std::vector<SizeAccumulator> acc(bounds.size());
                           for (uint64_t pmask = lo; pmask < hi; ++pmask) {
                               const uint64_t h = std::popcount(pmask);
                               const uint64_t vmask = expand_pair_mask(pmask, n);
                               const uint64_t boundary =
                                   uint64_t(n) * 2 * h - 2 * mask_edges(vmask, n);
                               if (boundary < bounds[h])
                                   local.add_violation(thm1_violation(family_from_mask(n, vmask),
                                                                      boundary, bounds[h]));
                               acc[h].offer(boundary);
                           }
                           local.instances += hi - lo;
                           fold_extrema(local, acc, bounds);
                       });
}

VerificationReport check_lemma3(uint64_t range) {
    gate_lemma3(range);
    auto header = make_header("lemma3", 0, false, {});
    header.counters["range"] = range;
    const SegmentEdgeTable& table = SegmentEdgeTable::shared();
    return run_sharded(std::move(header), range + 1,
                       [&](uint64_t lo, uint64_t hi, VerificationReport& local) {
                           for (uint64_t x = lo; x < hi; ++x) {
                               for (uint64_t y = 0; y <= range; ++y) {
                                   const int64_t gap = int64_t(table(x + y)) - int64_t(table(x)) -
                                                       int64_t(table(y));
                                   lemma3_check_pair(x, y, gap, local);
                               }
                           }
                       });
}

VerificationReport check_lemma4(int max_n) {
    gate_lemma4(max_n);
    auto header = make_header("lemma4", max_n, false, {});
    const SegmentEdgeTable& table = SegmentEdgeTable::shared();
    for (int n = 1; n <= max_n; ++n) {
        const uint64_t half = uint64_t{1} << (n - 1);
        auto part = run_sharded(
            VerificationReport{}, half + 1, [&](uint64_t lo, uint64_t hi, VerificationReport& local) {
                for (uint64_t yoff = lo; yoff < hi; ++yoff) {
                    const uint64_t y = half + yoff;
                    const uint64_t x_lo = y - half;
                    const uint64_t x_hi = 2 * half - y;  // inclusive; empty when x_lo > x_hi
                    for (uint64_t x = x_lo; x <= x_hi; ++x) {
                        const int64_t margin = int64_t(table(x + y)) - int64_t(table(y)) -
                                               int64_t(table(x)) - int64_t(y) + int64_t(half) -
                                               int64_t(x);
                        if (margin < 0) local.add_violation(lemma4_violation(x, y, n, margin));
                        ++local.instances;
                    }
                }
            });
        merge_into(header, part);
    }
    return header;
}

VerificationReport check_lemma5(const CheckOptions& o) {
    gate_lemma5(o);
    const int n = o.n;
    const uint64_t limit = uint64_t{1} << (n - 2);

    const auto check_family = [&](const Family& fam, const std::vector<uint64_t>& diffs,
                                  VerificationReport& local) {
        int first = -1;
        for (int i = 0; i < n; ++i) {
            if (diffs[i] <= limit) continue;
            if (first < 0) {
                first = i;
            } else {
                local.add_violation(
                    lemma5_violation(fam, first + 1, i + 1, diffs[first], diffs[i], limit));
                return;
            }
        }
    };

    if (o.mode == Mode::Sampled) {
        auto header = make_header("lemma5", n, true, o.seed);
        return run_sharded(std::move(header), sample_count(o),
                           [&](uint64_t lo, uint64_t hi, VerificationReport& local) {
                               std::vector<uint64_t> diffs(n);
                               for (uint64_t idx = lo; idx < hi; ++idx) {
                                   const Family fam = sampled_family(n, o.seed, idx);
                                   const uint64_t size = fam.size();
                                   for (int i = 1; i <= n; ++i) {
                                       const uint64_t up = upper_section_size(fam, i);
                                       diffs[i - 1] = up > size - up ? 2 * up - size : size - 2 * up;
                                   }
                                   check_family(fam, diffs, local);
                               }
                               local.instances += hi - lo;
                           });
    }
    auto header = make_header("lemma5", n, false, {});
    uint64_t total = theorem2_total(n);
    if (o.budget && o.budget < total) {
        total = o.budget;
        header.complete = false;
    }
    return run_sharded(std::move(header), total,
                       [&](uint64_t lo, uint64_t hi, VerificationReport& local) {
                           std::vector<uint64_t> diffs(n);
                           for (uint64_t mask = lo; mask < hi; ++mask) {
                               const uint64_t size = std::popcount(mask);
                               for (int b = 0; b < n; ++b) {
                                   const uint64_t up =
                                       std::popcount(mask & ~low_half_mask(b));
                                   diffs[b] = up > size - up ? 2 * up - size : size - 2 * up;
                               }
                               if (*std::max_element(diffs.begin(), diffs.end()) > limit)
                                   check_family(family_from_mask(n, mask), diffs, local);
                           }
                           local.instances += hi - lo;
                       });
}

VerificationReport check_lemma6(const CheckOptions& o) {
    gate_lemma6(o);
    const int n = o.n;
    if (o.mode == Mode::Sampled) {
        auto header = make_header("lemma6", n, true, o.seed);
        return run_sharded(
            std::move(header), sample_count(o),
            [&](uint64_t lo, uint64_t hi, VerificationReport& local) {
                for (uint64_t idx = lo; idx < hi; ++idx) {
                    const auto [c, d] = sampled_family_pair(n, o.seed, idx);
                    const PairCounts counts = family_counts(c, d);
                    const int64_t slack = int64_t(antipodal_overlap(c)) +
                                          int64_t(antipodal_overlap(d)) +
                                          2 * int64_t(std::min(c.size(), d.size())) -
                                          2 * int64_t(counts.both) - 2 * int64_t(counts.meet_image);
                    if (slack < 0) local.add_violation(lemma6_violation(c, d, slack));
                }
                local.instances += hi - lo;
            });
    }
    auto header = make_header("lemma6", n, false, {});
    uint64_t total = lemma6_total(n);
    if (o.budget && o.budget < total) {
        total = o.budget;
        header.complete = false;
    }
    const int width = 1 << n;
    const uint64_t vmask = (uint64_t{1} << width) - 1;
    return run_sharded(
        std::move(header), total, [&](uint64_t lo, uint64_t hi, VerificationReport& local) {
            for (uint64_t joint = lo; joint < hi; ++joint) {
                const uint64_t c = joint >> width;
                const uint64_t d = joint & vmask;
                const uint64_t rc = mask_reverse(c, n);
                const uint64_t rd = mask_reverse(d, n);
                const int64_t lc = std::popcount(c);
                const int64_t ld = std::popcount(d);
                const int64_t slack = std::popcount(c & rc) + std::popcount(d & rd) +
                                      2 * std::min(lc, ld) - 2 * std::popcount(c & d) -
                                      2 * std::popcount(c & rd);
                if (slack < 0)
                    local.add_violation(
                        lemma6_violation(family_from_mask(n, c), family_from_mask(n, d), slack));
            }
            local.instances += hi - lo;
        });
}

VerificationReport check_identities(const CheckOptions& o) {
    gate_dimension(o.n, 0, dimension_cap(), "identity checks");
    const int n = o.n;
    auto header = make_header("identities", n, true, o.seed);
    auto report = run_sharded(
        std::move(header), sample_count(o),
        [&](uint64_t lo, uint64_t hi, VerificationReport& local) {
            for (uint64_t idx = lo; idx < hi; ++idx) {
                const Family fam = sampled_family(n, o.seed, 2 * idx);
                const uint64_t size = fam.size();
                const uint64_t e = internal_edges(fam);

                const int64_t handshake_lhs = int64_t(2 * e + edge_boundary_direct(fam));
                const int64_t handshake_rhs = int64_t(uint64_t(n) * size);
                if (handshake_lhs != handshake_rhs)
                    local.add_violation(
                        identity_violation("handshake", to_text(fam), handshake_lhs, handshake_rhs));
                ++local.instances;

                const int64_t comp_lhs = int64_t(potential(complement_family(fam)));
                const int64_t comp_rhs =
                    int64_t(potential(fam)) +
                    int64_t(n + 1) * (int64_t(uint64_t{1} << n) - 2 * int64_t(size));
                if (comp_lhs != comp_rhs)
                    local.add_violation(
                        identity_violation("complement-potential", to_text(fam), comp_lhs, comp_rhs));
                ++local.instances;

                if (n >= 1) {
                    const int i = sampled_coordinate(n, o.seed, idx);
                    const Family up = upper_section(fam, i);
                    const Family low = lower_section(fam, i);
                    const PairCounts counts = family_counts(up, low);
                    const int64_t split_rhs =
                        2 * int64_t(internal_edges(up)) + 2 * int64_t(internal_edges(low)) +
                        2 * int64_t(counts.both) + 2 * int64_t(counts.meet_image);
                    const int64_t split_lhs = int64_t(potential(fam));
                    if (split_lhs != split_rhs)
                        local.add_violation(identity_violation(
                            "coordinate-split", to_text(fam) + " i=" + std::to_string(i), split_lhs,
                            split_rhs));
                    ++local.instances;
                }
            }
        });
    for (uint64_t k = 0; k <= (uint64_t{1} << n); ++k) {
        if (!segment_complement_identity(k, n))
            report.add_violation(identity_violation(
                "segment-complement", "n=" + std::to_string(n) + " k=" + std::to_string(k), 0, 0));
        ++report.instances;
    }
    return report;
}

MinimizeResult minimize_boundary(int n, uint64_t m, bool antipodal_only, std::size_t witness_cap) {
    if (antipodal_only) {
        gate_dimension(n, 1, 5, "exhaustive antipodal boundary minimization");
        if (m & 1) throw input_error("antipodal families have even size");
    } else {
        gate_dimension(n, 0, 4, "exhaustive boundary minimization");
    }
    if (m > (uint64_t{1} << n)) throw input_error("size exceeds 2^n");

    struct Shard {
        uint64_t min = ~uint64_t{0};
        uint64_t count = 0;
        std::vector<uint64_t> masks;
    };
    const uint64_t total = antipodal_only ? theorem1_total(n) : theorem2_total(n);
    const uint64_t want = antipodal_only ? m / 2 : m;
    const uint64_t shards = total < kShardCount ? std::max<uint64_t>(total, 1) : kShardCount;
    std::vector<Shard> parts(shards);
#pragma omp parallel for schedule(dynamic)
    for (long long s = 0; s < static_cast<long long>(shards); ++s) {
        const uint64_t lo = total / shards * s + std::min<uint64_t>(uint64_t(s), total % shards);
        const uint64_t hi = lo + total / shards + (uint64_t(s) < total % shards ? 1 : 0);
        Shard& part = parts[s];
        for (uint64_t mask = lo; mask < hi; ++mask) {
            if (uint64_t(std::popcount(mask)) != want) continue;
            const uint64_t vmask = antipodal_only ? expand_pair_mask(mask, n) : mask;
            const uint64_t boundary = uint64_t(n) * m - 2 * mask_edges(vmask, n);
            if (boundary < part.min) {
                part.min = boundary;
                part.count = 1;
                part.masks.assign(1, vmask);
            } else if (boundary == part.min) {
                ++part.count;
                if (part.masks.size() < witness_cap) part.masks.push_back(vmask);
            }
        }
    }
    Shard best;
    for (const auto& part : parts) {
        if (part.count == 0) continue;
        if (part.min < best.min) {
            best = part;
        } else if (part.min == best.min) {
            best.count += part.count;
            for (uint64_t mask : part.masks)
                if (best.masks.size() < witness_cap) best.masks.push_back(mask);
        }
    }
    MinimizeResult result;
    result.min_boundary = best.min;
    result.minimizer_count = best.count;
    for (uint64_t mask : best.masks) result.witnesses.push_back(family_from_mask(n, mask));
    return result;
}

}  // namespace cubeiso
