#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cubeiso/family.hpp"

namespace cubeiso {

using std::int64_t;
using std::uint64_t;

// One step of the induction replayed on a concrete family.
//   Base       dimension <= 1, bound checked directly.
//   Case1      both sections of the chosen coordinate have at most a quarter
//              of the cube; plain child bounds plus the hart gap close it.
//   Case2      the chosen coordinate is merely balanced; the larger section
//              exceeds a quarter and its child bound is taken in shifted form,
//              closed by the large-margin gap.
//   Complement sizes above half the cube: recurse on the complement and carry
//              the bound across with the exact complement identities.
enum class CaseTag { Base, Case1, Case2, Complement };

// Plain: f <= 2F(size). Large: f <= 2F(size) + 2*size - 2^n.
enum class BoundForm { Plain, Large };

struct CertificateNode {
    CaseTag tag = CaseTag::Base;
    BoundForm form = BoundForm::Plain;
    int n = 0;
    uint64_t size = 0;
    uint64_t f = 0;

    // Case1/Case2 only. C is the smaller section, D the larger; swapped
    // records that C is the lower section rather than the upper one.
    int coord = 0;
    bool swapped = false;
    uint64_t small_size = 0;  // |C|
    uint64_t large_size = 0;  // |D|
    uint64_t meet = 0;        // |C meet D|
    uint64_t meet_image = 0;  // |C meet conj(D)|
    uint64_t small_self = 0;  // |C meet conj(C)|
    uint64_t large_self = 0;  // |D meet conj(D)|

    // Recorded inequality slacks, all nonnegative in a valid certificate.
    int64_t gap = 0;            // hart gap (Case1) or large margin (Case2)
    int64_t overlap_slack = 0;  // slack of the two-family overlap inequality
    int64_t slack = 0;          // bound right-hand side minus f

    // Case1/Case2: {C, D}. Complement: {complement}. Base: none.
    std::vector<std::unique_ptr<CertificateNode>> children;
};

struct Certificate {
    std::unique_ptr<CertificateNode> root;
};

// Replays the induction on the family and records every applied inequality.
// Coordinate choice is the smallest qualifying one and the section swap makes
// |C| <= |D|, so the trace is a deterministic function of the family.
// Trees hold about 2^{n+1} nodes; dimensions above 16 (22 with force) are
// rejected.
Certificate trace_induction(const Family& fam, bool force = false);

struct CertificateCheck {
    bool ok = true;
    std::string locus;   // node path such as root/D/comp
    std::string detail;  // first mismatched quantity, expected vs recorded

    explicit operator bool() const { return ok; }
};

// Recomputes every recorded quantity from the family alone, confirms every
// slack is nonnegative, and confirms each node's bound follows arithmetically
// from its children's bounds and the recorded gaps.
CertificateCheck verify_certificate(const Certificate& cert, const Family& fam);

// Line-based text form; parse(serialize(c)) reproduces the bytes exactly.
std::string to_text(const Certificate& cert);
Certificate certificate_from_text(std::string_view text);

}  // namespace cubeiso
