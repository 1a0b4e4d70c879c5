#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cubeiso {

using std::uint64_t;

inline constexpr std::size_t kViolationCap = 16;

// Observed minimum of the edge boundary at one family size, against the
// construction's bound.
struct SizeExtremum {
    uint64_t min_boundary = 0;
    uint64_t minimizer_count = 0;
    uint64_t bound = 0;

    bool tight() const { return min_boundary == bound; }
};

// Outcome of one checker run. Serialization carries no engine or timing
// fields: a given configuration and seed must produce identical bytes no
// matter how the work was split.
struct VerificationReport {
    std::string statement;
    int n = 0;
    std::string mode;  // "exhaustive" or "sampled"
    uint64_t instances = 0;
    bool complete = true;
    uint64_t violation_count = 0;
    std::vector<std::string> violations;        // the kViolationCap smallest, sorted
    std::map<std::string, uint64_t> counters;   // auxiliary tallies, e.g. extra equalities
    std::map<uint64_t, SizeExtremum> extrema;   // per even size, exhaustive antipodal runs
    std::optional<uint64_t> seed;

    bool pass() const { return violation_count == 0; }

    // Records a violation, keeping only the lexicographically smallest
    // kViolationCap lines so the surviving set is independent of sharding.
    void add_violation(std::string line);
};

// Associative, order-insensitive accumulation of shard results into `into`.
void merge_into(VerificationReport& into, const VerificationReport& part);

std::string to_text(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);

}  // namespace cubeiso
