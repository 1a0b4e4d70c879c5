#pragma once

#include <cstdint>
#include <vector>

#include "cubeiso/family.hpp"
#include "cubeiso/reports.hpp"

namespace cubeiso {

// Default seed for bare invocations, so runs are reproducible without flags.
inline constexpr uint64_t kDefaultSeed = 1729;

enum class Mode { Exhaustive, Sampled };

struct CheckOptions {
    int n = 3;
    Mode mode = Mode::Exhaustive;
    // Exhaustive: instance cap, 0 meaning the full space; a short cap yields a
    // report flagged incomplete. Sampled: sample count, 0 meaning 10000.
    uint64_t budget = 0;
    uint64_t seed = kDefaultSeed;
    // Lifts the long-run gates one dimension where the enumeration is still
    // representable (theorem 2 to n=5, theorem 1 to n=6).
    bool force = false;
};

// Every family of the chosen dimension satisfies the potential bound: the
// plain form for sizes up to half the cube, the shifted form above. Zero
// violations expected; any hit is an implementation bug.
VerificationReport check_theorem2(const CheckOptions& options);

// Every antipodal family has edge boundary at least the extremal
// construction's; exhaustive runs also record the true minimum per size and
// whether it matches the bound.
VerificationReport check_theorem1(const CheckOptions& options);

// hart_gap(x, y) >= min(x, y) for all x, y in [0, range], with equality
// enforced when y is a power of two and x <= y. Equality pairs outside that
// description are counted in the report, not asserted against.
VerificationReport check_lemma3(uint64_t range);

// hart_large_margin >= 0 over its whole admissible region for every dimension
// up to max_n.
VerificationReport check_lemma4(int max_n);

// For every family and every coordinate pair, at least one coordinate has
// section sizes within 2^{n-2} of each other.
VerificationReport check_lemma5(const CheckOptions& options);

// The two-family overlap inequality behind the induction's final step.
VerificationReport check_lemma6(const CheckOptions& options);

// The four exact identities: the handshake between internal edges and
// boundary, the complement rule for the potential, the segment complement
// rule (swept over every k), and the coordinate split of the potential.
VerificationReport check_identities(const CheckOptions& options);

struct MinimizeResult {
    uint64_t min_boundary = 0;
    uint64_t minimizer_count = 0;
    std::vector<Family> witnesses;  // first few minimizers in enumeration order
};

// True minimum of the edge boundary over all families (n <= 4) or all
// antipodal families (n <= 5) of the given size, by brute force.
MinimizeResult minimize_boundary(int n, uint64_t m, bool antipodal_only, std::size_t witness_cap = 4);

// Serial reference engines. Same reports, byte for byte, as the parallel
// versions above; they enumerate one instance at a time with the per-vertex
// counting primitives.
namespace ref {
VerificationReport check_theorem2(const CheckOptions& options);
VerificationReport check_theorem1(const CheckOptions& options);
VerificationReport check_lemma3(uint64_t range);
VerificationReport check_lemma4(int max_n);
VerificationReport check_lemma5(const CheckOptions& options);
VerificationReport check_lemma6(const CheckOptions& options);
VerificationReport check_identities(const CheckOptions& options);
MinimizeResult minimize_boundary(int n, uint64_t m, bool antipodal_only, std::size_t witness_cap = 4);
}  // namespace ref

}  // namespace cubeiso
