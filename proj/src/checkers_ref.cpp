#include <algorithm>
#include <bit>
#include <vector>

#include "checker_detail.hpp"
#include "cubeiso/checkers.hpp"

// Reference engine: one instance at a time, per-vertex counting, digit-form
// segment edges. Reports must match the parallel engine byte for byte.

namespace cubeiso::ref {

namespace {

using namespace detail;

uint64_t naive_meet(const Family& a, const Family& b) {
    uint64_t count = 0;
    for (uint64_t v = 0; v < a.vertex_count(); ++v)
        if (a.contains(v) && b.contains(v)) ++count;
    return count;
}

uint64_t naive_meet_image(const Family& a, const Family& b) {
    const uint64_t top = a.vertex_count() - 1;
    uint64_t count = 0;
    for (uint64_t v = 0; v < a.vertex_count(); ++v)
        if (a.contains(v) && b.contains(top - v)) ++count;
    return count;
}

uint64_t naive_upper_size(const Family& a, int i) {
    uint64_t count = 0;
    for (uint64_t v = 0; v < a.vertex_count(); ++v)
        if (a.contains(v) && (v >> (i - 1) & 1)) ++count;
    return count;
}

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

void lemma5_check_family(const Family& fam, const std::vector<uint64_t>& diffs, uint64_t limit,
                         VerificationReport& local) {
    int first = -1;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i] <= limit) continue;
        if (first < 0) {
            first = static_cast<int>(i);
        } else {
            local.add_violation(lemma5_violation(fam, first + 1, static_cast<int>(i) + 1,
                                                 diffs[first], diffs[i], limit));
            return;
        }
    }
}

}  // namespace

VerificationReport check_theorem2(const CheckOptions& o) {
    gate_theorem2(o);
    const int n = o.n;
    if (o.mode == Mode::Sampled) {
        auto report = make_header("thm2", n, true, o.seed);
        const uint64_t samples = sample_count(o);
        for (uint64_t idx = 0; idx < samples; ++idx) {
            const Family fam = sampled_family(n, o.seed, idx);
            const uint64_t f = ref::potential(fam);
            const uint64_t bound = potential_bound(fam.size(), n, false);
            if (f > bound) report.add_violation(thm2_violation(fam, f, bound));
        }
        report.instances = samples;
        return report;
    }
    auto report = make_header("thm2", n, false, {});
    uint64_t total = theorem2_total(n);
    if (o.budget && o.budget < total) {
        total = o.budget;
        report.complete = false;
    }
    for (uint64_t mask = 0; mask < total; ++mask) {
        const Family fam = family_from_mask(n, mask);
        const uint64_t f = ref::potential(fam);
        const uint64_t bound = potential_bound(fam.size(), n, false);
        if (f > bound) report.add_violation(thm2_violation(fam, f, bound));
    }
    report.instances = total;
    return report;
}

VerificationReport check_theorem1(const CheckOptions& o) {
    gate_theorem1(o);
    const int n = o.n;
    const auto bounds = boundary_bound_table(n);
    if (o.mode == Mode::Sampled) {
        auto report = make_header("thm1", n, true, o.seed);
        const uint64_t samples = sample_count(o);
        for (uint64_t idx = 0; idx < samples; ++idx) {
            const Family fam = sampled_antipodal(n, o.seed, idx);
            const uint64_t boundary = ref::edge_boundary(fam);
            const uint64_t bound = bounds[fam.size() / 2];
            if (boundary < bound) report.add_violation(thm1_violation(fam, boundary, bound));
        }
        report.instances = samples;
        return report;
    }
    auto report = make_header("thm1", n, false, {});
    uint64_t total = theorem1_total(n);
    if (o.budget && o.budget < total) {
        total = o.budget;
        report.complete = false;
    }
    std::vector<SizeAccumulator> acc(bounds.size());
    AntipodalEnumerator families(n);
    Family fam;
    for (uint64_t processed = 0; processed < total && families.next(fam); ++processed) {
        const uint64_t boundary = ref::edge_boundary(fam);
        const uint64_t h = fam.size() / 2;
        if (boundary < bounds[h]) report.add_violation(thm1_violation(fam, boundary, bounds[h]));
        acc[h].offer(boundary);
    }
    report.instances = total;
    for (uint64_t h = 0; h < acc.size(); ++h) {
        if (acc[h].count == 0) continue;
        report.extrema[2 * h] = SizeExtremum{acc[h].min, acc[h].count, bounds[h]};
    }
    return report;
}

VerificationReport check_lemma3(uint64_t range) {
    gate_lemma3(range);
    auto report = make_header("lemma3", 0, false, {});
    report.counters["range"] = range;
    for (uint64_t x = 0; x <= range; ++x)
        for (uint64_t y = 0; y <= range; ++y) {
            const int64_t gap = int64_t(segment_edges(x + y)) - int64_t(segment_edges(x)) -
                                int64_t(segment_edges(y));
            lemma3_check_pair(x, y, gap, report);
        }
    return report;
}

VerificationReport check_lemma4(int max_n) {
    gate_lemma4(max_n);
    auto report = make_header("lemma4", max_n, false, {});
    for (int n = 1; n <= max_n; ++n) {
        const uint64_t half = uint64_t{1} << (n - 1);
        for (uint64_t y = half; y <= 2 * half; ++y) {
            const uint64_t x_hi = 2 * half - y;
            for (uint64_t x = y - half; x <= x_hi; ++x) {
                const int64_t margin = int64_t(segment_edges(x + y)) - int64_t(segment_edges(y)) -
                                       int64_t(segment_edges(x)) - int64_t(y) + int64_t(half) -
                                       int64_t(x);
                if (margin < 0) report.add_violation(lemma4_violation(x, y, n, margin));
                ++report.instances;
            }
        }
    }
    return report;
}

VerificationReport check_lemma5(const CheckOptions& o) {
    gate_lemma5(o);
    const int n = o.n;
    const uint64_t limit = uint64_t{1} << (n - 2);
    std::vector<uint64_t> diffs(n);
    const auto fill_diffs = [&](const Family& fam) {
        const uint64_t size = fam.size();
        for (int i = 1; i <= n; ++i) {
            const uint64_t up = naive_upper_size(fam, i);
            diffs[i - 1] = up > size - up ? 2 * up - size : size - 2 * up;
        }
    };
    if (o.mode == Mode::Sampled) {
        auto report = make_header("lemma5", n, true, o.seed);
        const uint64_t samples = sample_count(o);
        for (uint64_t idx = 0; idx < samples; ++idx) {
            const Family fam = sampled_family(n, o.seed, idx);
            fill_diffs(fam);
            lemma5_check_family(fam, diffs, limit, report);
        }
        report.instances = samples;
        return report;
    }
    auto report = make_header("lemma5", n, false, {});
    uint64_t total = theorem2_total(n);
    if (o.budget && o.budget < total) {
        total = o.budget;
        report.complete = false;
    }
    for (uint64_t mask = 0; mask < total; ++mask) {
        const Family fam = family_from_mask(n, mask);
        fill_diffs(fam);
        lemma5_check_family(fam, diffs, limit, report);
    }
    report.instances = total;
    return report;
}

VerificationReport check_lemma6(const CheckOptions& o) {
    gate_lemma6(o);
    const int n = o.n;
    const auto check_pair = [](const Family& c, const Family& d, VerificationReport& report) {
        const int64_t slack = int64_t(naive_meet_image(c, c)) + int64_t(naive_meet_image(d, d)) +
                              2 * int64_t(std::min(c.size(), d.size())) -
                              2 * int64_t(naive_meet(c, d)) - 2 * int64_t(naive_meet_image(c, d));
        if (slack < 0) report.add_violation(lemma6_violation(c, d, slack));
    };
    if (o.mode == Mode::Sampled) {
        auto report = make_header("lemma6", n, true, o.seed);
        const uint64_t samples = sample_count(o);
        for (uint64_t idx = 0; idx < samples; ++idx) {
            const auto [c, d] = sampled_family_pair(n, o.seed, idx);
            check_pair(c, d, report);
        }
        report.instances = samples;
        return report;
    }
    auto report = make_header("lemma6", n, false, {});
    uint64_t total = lemma6_total(n);
    if (o.budget && o.budget < total) {
        total = o.budget;
        report.complete = false;
    }
    const int width = 1 << n;
    const uint64_t vmask = (uint64_t{1} << width) - 1;
    for (uint64_t joint = 0; joint < total; ++joint) {
        check_pair(family_from_mask(n, joint >> width), family_from_mask(n, joint & vmask), report);
    }
    report.instances = total;
    return report;
}

VerificationReport check_identities(const CheckOptions& o) {
    gate_dimension(o.n, 0, dimension_cap(), "identity checks");
    const int n = o.n;
    auto report = make_header("identities", n, true, o.seed);
    const uint64_t samples = sample_count(o);
    for (uint64_t idx = 0; idx < samples; ++idx) {
        const Family fam = sampled_family(n, o.seed, 2 * idx);
        const uint64_t size = fam.size();

        const int64_t handshake_lhs = int64_t(2 * ref::internal_edges(fam) + ref::edge_boundary(fam));
        const int64_t handshake_rhs = int64_t(uint64_t(n) * size);
        if (handshake_lhs != handshake_rhs)
            report.add_violation(
                identity_violation("handshake", to_text(fam), handshake_lhs, handshake_rhs));
        ++report.instances;

        const int64_t comp_lhs = int64_t(ref::potential(complement_family(fam)));
        const int64_t comp_rhs = int64_t(ref::potential(fam)) +
                                 int64_t(n + 1) * (int64_t(uint64_t{1} << n) - 2 * int64_t(size));
        if (comp_lhs != comp_rhs)
            report.add_violation(
                identity_violation("complement-potential", to_text(fam), comp_lhs, comp_rhs));
        ++report.instances;

        if (n >= 1) {
            const int i = sampled_coordinate(n, o.seed, idx);
            const Family up = upper_section(fam, i);
            const Family low = lower_section(fam, i);
            const int64_t split_rhs = 2 * int64_t(ref::internal_edges(up)) +
                                      2 * int64_t(ref::internal_edges(low)) +
                                      2 * int64_t(naive_meet(up, low)) +
                                      2 * int64_t(naive_meet_image(up, low));
            const int64_t split_lhs = int64_t(ref::potential(fam));
            if (split_lhs != split_rhs)
                report.add_violation(identity_violation(
                    "coordinate-split", to_text(fam) + " i=" + std::to_string(i), split_lhs,
                    split_rhs));
            ++report.instances;
        }
    }
    for (uint64_t k = 0; k <= (uint64_t{1} << n); ++k) {
        const uint64_t total = uint64_t{1} << n;
        const int64_t lhs = 2 * int64_t(segment_edges(k)) - 2 * int64_t(segment_edges(total - k));
        const int64_t rhs = (2 * int64_t(k) - int64_t(total)) * n;
        if (lhs != rhs)
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

    const uint64_t total = antipodal_only ? theorem1_total(n) : theorem2_total(n);
    const uint64_t want = antipodal_only ? m / 2 : m;
    MinimizeResult result;
    result.min_boundary = ~uint64_t{0};
    for (uint64_t mask = 0; mask < total; ++mask) {
        if (uint64_t(std::popcount(mask)) != want) continue;
        const Family fam =
            antipodal_only ? antipodal_from_pair_mask(n, mask) : family_from_mask(n, mask);
        const uint64_t boundary = ref::edge_boundary(fam);
        if (boundary < result.min_boundary) {
            result.min_boundary = boundary;
            result.minimizer_count = 1;
            result.witnesses.assign(1, fam);
        } else if (boundary == result.min_boundary) {
            ++result.minimizer_count;
            if (result.witnesses.size() < witness_cap) result.witnesses.push_back(fam);
        }
    }
    return result;
}

}  // namespace cubeiso::ref
