#include <functional>
#include <string>
#include <vector>

#include "cubeiso/antipodal.hpp"
#include "cubeiso/bits.hpp"
#include "cubeiso/certificate.hpp"
#include "cubeiso/errors.hpp"
#include "cubeiso/family.hpp"
#include "doctest.h"

using namespace cubeiso;

namespace {

void walk(const CertificateNode& node, const std::function<void(const CertificateNode&)>& fn) {
    fn(node);
    for (const auto& child : node.children) walk(*child, fn);
}

void walk_mut(CertificateNode& node, const std::function<void(CertificateNode&)>& fn) {
    fn(node);
    for (auto& child : node.children) walk_mut(*child, fn);
}

uint64_t count_nodes(const Certificate& cert) {
    uint64_t nodes = 0;
    walk(*cert.root, [&](const CertificateNode&) { ++nodes; });
    return nodes;
}

Family random_small_family(int n, uint64_t seed) {
    Family fam = random_family(n, seed);
    if (2 * fam.size() > fam.vertex_count()) fam = complement_family(fam);
    return fam;
}

}  // namespace

TEST_CASE("base cases") {
    Family one(1);
    one.insert(0);
    const Certificate cert = trace_induction(one);
    CHECK(cert.root->tag == CaseTag::Base);
    CHECK(cert.root->form == BoundForm::Plain);
    CHECK(cert.root->slack == 0);
    CHECK(verify_certificate(cert, one).ok);

    const Family full1 = Family::full(1);
    const Certificate comp = trace_induction(full1);
    CHECK(comp.root->tag == CaseTag::Complement);
    CHECK(comp.root->form == BoundForm::Large);
    CHECK(comp.root->children[0]->tag == CaseTag::Base);
    CHECK(verify_certificate(comp, full1).ok);

    Family point(0);
    point.insert(0);
    CHECK(verify_certificate(trace_induction(point), point).ok);
    CHECK(verify_certificate(trace_induction(Family(0)), Family(0)).ok);
}

TEST_CASE("extremal families certify with zero slack everywhere") {
    for (int n = 2; n <= 6; ++n) {
        for (uint64_t m = 0; m <= (uint64_t{1} << n); m += 2) {
            const Family fam = extremal_family(n, m);
            const Certificate cert = trace_induction(fam);
            CHECK(verify_certificate(cert, fam).ok);
            walk(*cert.root, [&](const CertificateNode& node) {
                CHECK(node.slack == 0);
                CHECK(node.gap == 0);
                CHECK(node.overlap_slack == 0);
            });
        }
    }
}

TEST_CASE("random families certify") {
    SplitMix64 g(31337);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + int(g.below(7));
        const Family fam = random_family(n, g.next());  // any size, complement route included
        const Certificate cert = trace_induction(fam);
        const CertificateCheck check = verify_certificate(cert, fam);
        CHECK(check.ok);
        if (!check.ok) {
            CAPTURE(to_text(fam));
            CAPTURE(check.locus);
            CAPTURE(check.detail);
        }
        walk(*cert.root, [&](const CertificateNode& node) {
            CHECK(node.slack >= 0);
            CHECK(node.gap >= 0);
            CHECK(node.overlap_slack >= 0);
            if (node.children.empty()) {
                CHECK(node.tag == CaseTag::Base);
                CHECK(node.n <= 1);
            }
            if (node.tag == CaseTag::Complement)
                CHECK(node.children[0]->tag != CaseTag::Complement);
        });
    }
}

TEST_CASE("traces are deterministic") {
    const Family fam = random_small_family(6, 777);
    CHECK(to_text(trace_induction(fam)) == to_text(trace_induction(fam)));
}

TEST_CASE("certificate text round trip") {
    const Family fam = random_small_family(5, 2024);
    const Certificate cert = trace_induction(fam);
    const std::string text = to_text(cert);
    const Certificate parsed = certificate_from_text(text);
    CHECK(to_text(parsed) == text);
    CHECK(verify_certificate(parsed, fam).ok);

    CHECK_THROWS_AS(certificate_from_text("nonsense"), input_error);
    CHECK_THROWS_AS(certificate_from_text("certificate v1\nend\n"), input_error);
}

TEST_CASE("every single-slack corruption is detected") {
    const Family fam = extremal_family(5, 10);
    const Certificate pristine = trace_induction(fam);
    REQUIRE(verify_certificate(pristine, fam).ok);
    const std::string text = to_text(pristine);
    const uint64_t nodes = count_nodes(pristine);

    for (uint64_t target = 0; target < nodes; ++target) {
        for (int field = 0; field < 3; ++field) {
            Certificate mutant = certificate_from_text(text);
            uint64_t index = 0;
            bool mutated = false;
            walk_mut(*mutant.root, [&](CertificateNode& node) {
                if (index++ != target) return;
                switch (field) {
                    case 0: node.slack += 1; break;
                    case 1:
                        if (node.tag == CaseTag::Case1 || node.tag == CaseTag::Case2)
                            node.gap -= 1;
                        else
                            return;
                        break;
                    case 2:
                        if (node.tag == CaseTag::Case1 || node.tag == CaseTag::Case2)
                            node.overlap_slack += 2;
                        else
                            return;
                        break;
                }
                mutated = true;
            });
            if (!mutated) continue;
            const CertificateCheck check = verify_certificate(mutant, fam);
            CHECK(!check.ok);
            CHECK(!check.locus.empty());
        }
    }
}

TEST_CASE("corrupted counts and sizes are detected") {
    const Family fam = random_small_family(5, 99);
    const std::string text = to_text(trace_induction(fam));

    const auto corrupt_root = [&](const std::function<void(CertificateNode&)>& fn) {
        Certificate mutant = certificate_from_text(text);
        fn(*mutant.root);
        return verify_certificate(mutant, fam).ok;
    };
    CHECK(!corrupt_root([](CertificateNode& node) { node.f += 2; }));
    CHECK(!corrupt_root([](CertificateNode& node) { node.size += 1; }));
    if (certificate_from_text(text).root->tag == CaseTag::Case1 ||
        certificate_from_text(text).root->tag == CaseTag::Case2) {
        CHECK(!corrupt_root([](CertificateNode& node) { node.meet += 1; }));
        CHECK(!corrupt_root([](CertificateNode& node) { node.small_self += 1; }));
    }
}

TEST_CASE("certificates are bound to their family") {
    const Family fam = random_small_family(5, 4);
    const Certificate cert = trace_induction(fam);
    Family other = fam;
    other.toggle(3);
    CHECK(!verify_certificate(cert, other).ok);
    CHECK(!verify_certificate(cert, Family(5)).ok);
    CHECK(!verify_certificate(cert, Family(4)).ok);
}

TEST_CASE("trace dimension gate") {
    CHECK_THROWS_AS(trace_induction(Family(17)), capability_error);
    CHECK_NOTHROW(trace_induction(Family(9)));
}
