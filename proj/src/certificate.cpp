#include "cubeiso/certificate.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

#include "cubeiso/errors.hpp"
#include "cubeiso/segments.hpp"

namespace cubeiso {

namespace {

uint64_t segment_edges_fast(uint64_t k) {
    const SegmentEdgeTable& t = SegmentEdgeTable::shared();
    return k <= t.max_k() ? t(k) : segment_edges(k);
}

uint64_t bound_rhs(BoundForm form, uint64_t size, int n) {
    const uint64_t base = 2 * segment_edges_fast(size);
    if (form == BoundForm::Plain) return base;
    return base + 2 * size - (uint64_t{1} << n);
}

std::unique_ptr<CertificateNode> trace_node(const Family& fam) {
    auto node = std::make_unique<CertificateNode>();
    const int n = fam.dimension();
    node->n = n;
    node->size = fam.size();
    node->f = potential(fam);
    const uint64_t width = uint64_t{1} << n;

    if (2 * node->size > width) {
        node->tag = CaseTag::Complement;
        node->form = BoundForm::Large;
        node->children.push_back(trace_node(complement_family(fam)));
        node->slack = int64_t(bound_rhs(node->form, node->size, n)) - int64_t(node->f);
        if (node->slack != node->children[0]->slack)
            throw std::logic_error("complement step lost the bound slack");
        return node;
    }

    node->form = BoundForm::Plain;
    if (n <= 1) {
        node->tag = CaseTag::Base;
        node->slack = int64_t(bound_rhs(node->form, node->size, n)) - int64_t(node->f);
        if (node->slack < 0) throw std::logic_error("base case bound fails");
        return node;
    }

    const uint64_t quarter = width / 4;
    int coord = 0;
    CaseTag tag = CaseTag::Case1;
    for (int i = 1; i <= n && coord == 0; ++i) {
        const uint64_t up = upper_section_size(fam, i);
        const uint64_t low = node->size - up;
        if (std::max(up, low) <= quarter) coord = i;
    }
    if (coord == 0) {
        tag = CaseTag::Case2;
        for (int i = 1; i <= n && coord == 0; ++i) {
            const uint64_t up = upper_section_size(fam, i);
            const uint64_t low = node->size - up;
            const uint64_t diff = up > low ? up - low : low - up;
            if (diff <= quarter) coord = i;
        }
        // Guaranteed by the balanced-coordinate lemma; reaching this line
        // would falsify the proof, not the input.
        if (coord == 0) throw std::logic_error("no coordinate admits Case 1 or Case 2");
    }

    node->tag = tag;
    node->coord = coord;
    Family upper = upper_section(fam, coord);
    Family lower = lower_section(fam, coord);
    node->swapped = upper.size() > lower.size();
    const Family& small = node->swapped ? lower : upper;
    const Family& large = node->swapped ? upper : lower;
    node->small_size = small.size();
    node->large_size = large.size();
    node->meet = intersection_size(small, large);
    node->meet_image = intersection_size(small, antipodal_image(large));
    node->small_self = antipodal_overlap(small);
    node->large_self = antipodal_overlap(large);

    const int64_t x = int64_t(node->small_size);
    const int64_t y = int64_t(node->large_size);
    const int64_t fx = int64_t(segment_edges_fast(node->small_size));
    const int64_t fy = int64_t(segment_edges_fast(node->large_size));
    const int64_t fxy = int64_t(segment_edges_fast(node->size));
    if (tag == CaseTag::Case1)
        node->gap = fxy - fx - fy - x;
    else
        node->gap = fxy - fy - fx - y + int64_t(quarter) - x;
    node->overlap_slack = int64_t(node->small_self) + int64_t(node->large_self) + 2 * x -
                          2 * int64_t(node->meet) - 2 * int64_t(node->meet_image);

    node->children.push_back(trace_node(small));
    node->children.push_back(trace_node(large));
    node->slack = int64_t(bound_rhs(node->form, node->size, n)) - int64_t(node->f);
    const int64_t assembled =
        2 * node->gap + node->overlap_slack + node->children[0]->slack + node->children[1]->slack;
    if (node->slack != assembled) throw std::logic_error("induction step lost the bound slack");
    return node;
}

}  // namespace

Certificate trace_induction(const Family& fam, bool force) {
    const int limit = force ? 22 : 16;
    if (fam.dimension() > limit)
        throw capability_error("induction trace would hold about 2^" +
                               std::to_string(fam.dimension() + 1) + " nodes; dimension limit is " +
                               std::to_string(limit));
    Certificate cert;
    cert.root = trace_node(fam);
    return cert;
}

namespace {

struct Checker {
    CertificateCheck result;

    bool fail(const std::string& path, std::string detail) {
        if (result.ok) {
            result.ok = false;
            result.locus = path;
            result.detail = std::move(detail);
        }
        return false;
    }

    bool expect(const std::string& path, const char* what, int64_t recorded, int64_t actual) {
        if (recorded == actual) return true;
        return fail(path, std::string(what) + ": recorded " + std::to_string(recorded) +
                              ", recomputed " + std::to_string(actual));
    }

    bool check(const CertificateNode& node, const Family& fam, const std::string& path) {
        const int n = fam.dimension();
        const uint64_t width = uint64_t{1} << n;
        if (!expect(path, "n", node.n, n)) return false;
        if (!expect(path, "size", int64_t(node.size), int64_t(fam.size()))) return false;
        if (!expect(path, "f", int64_t(node.f), int64_t(potential(fam)))) return false;

        const BoundForm wanted_form =
            2 * node.size > width ? BoundForm::Large : BoundForm::Plain;
        if (node.form != wanted_form) return fail(path, "bound form does not match the size");
        const int64_t rhs = int64_t(bound_rhs(node.form, node.size, n));
        if (!expect(path, "bound slack", node.slack, rhs - int64_t(node.f))) return false;
        if (node.slack < 0) return fail(path, "bound slack is negative");

        if (2 * node.size > width) {
            if (node.tag != CaseTag::Complement)
                return fail(path, "sizes above half must use the complement step");
            if (node.children.size() != 1) return fail(path, "complement step needs one child");
            const Family comp = complement_family(fam);
            if (!check(*node.children[0], comp, path + "/comp")) return false;
            if (!expect(path, "complement slack transfer", node.slack, node.children[0]->slack))
                return false;
            return true;
        }

        if (n <= 1) {
            if (node.tag != CaseTag::Base) return fail(path, "dimension <= 1 must be a base node");
            if (!node.children.empty()) return fail(path, "base node has children");
            return true;
        }

        if (node.tag != CaseTag::Case1 && node.tag != CaseTag::Case2)
            return fail(path, "dimension >= 2 at or below half must split by a coordinate");
        if (node.children.size() != 2) return fail(path, "case node needs two children");
        if (node.coord < 1 || node.coord > n) return fail(path, "coordinate out of range");

        Family upper = upper_section(fam, node.coord);
        Family lower = lower_section(fam, node.coord);
        const Family& small = node.swapped ? lower : upper;
        const Family& large = node.swapped ? upper : lower;
        if (!expect(path, "small section size", int64_t(node.small_size), int64_t(small.size())))
            return false;
        if (!expect(path, "large section size", int64_t(node.large_size), int64_t(large.size())))
            return false;
        if (node.small_size > node.large_size)
            return fail(path, "sections are not ordered by size");

        const uint64_t quarter = width / 4;
        if (node.tag == CaseTag::Case1) {
            if (node.large_size > quarter)
                return fail(path, "Case 1 needs both sections at most a quarter of the cube");
        } else {
            if (node.large_size < quarter || node.large_size > quarter + node.small_size)
                return fail(path, "Case 2 coordinate is not balanced");
        }

        if (!expect(path, "meet", int64_t(node.meet), int64_t(intersection_size(small, large))))
            return false;
        if (!expect(path, "meet_image", int64_t(node.meet_image),
                    int64_t(intersection_size(small, antipodal_image(large)))))
            return false;
        if (!expect(path, "small_self", int64_t(node.small_self), int64_t(antipodal_overlap(small))))
            return false;
        if (!expect(path, "large_self", int64_t(node.large_self), int64_t(antipodal_overlap(large))))
            return false;

        // The exact split of f along the chosen coordinate.
        const int64_t split = int64_t(potential(small)) + int64_t(potential(large)) -
                              int64_t(node.small_self) - int64_t(node.large_self) +
                              2 * int64_t(node.meet) + 2 * int64_t(node.meet_image);
        if (!expect(path, "coordinate split of f", int64_t(node.f), split)) return false;

        const int64_t x = int64_t(node.small_size);
        const int64_t y = int64_t(node.large_size);
        const int64_t fx = int64_t(segment_edges_fast(node.small_size));
        const int64_t fy = int64_t(segment_edges_fast(node.large_size));
        const int64_t fxy = int64_t(segment_edges_fast(node.size));
        const int64_t gap = node.tag == CaseTag::Case1
                                ? fxy - fx - fy - x
                                : fxy - fy - fx - y + int64_t(quarter) - x;
        if (!expect(path, "gap", node.gap, gap)) return false;
        if (node.gap < 0) return fail(path, "gap is negative");

        const int64_t overlap = int64_t(node.small_self) + int64_t(node.large_self) + 2 * x -
                                2 * int64_t(node.meet) - 2 * int64_t(node.meet_image);
        if (!expect(path, "overlap slack", node.overlap_slack, overlap)) return false;
        if (node.overlap_slack < 0) return fail(path, "overlap slack is negative");

        if (!check(*node.children[0], small, path + "/C")) return false;
        if (!check(*node.children[1], large, path + "/D")) return false;

        // The node's bound must follow from the children's bounds and the two
        // recorded gaps, exactly as the induction assembles it.
        const int64_t assembled = 2 * node.gap + node.overlap_slack + node.children[0]->slack +
                                  node.children[1]->slack;
        if (!expect(path, "assembled slack", node.slack, assembled)) return false;
        return true;
    }
};

const char* case_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::Base: return "BASE";
        case CaseTag::Case1: return "CASE1";
        case CaseTag::Case2: return "CASE2";
        case CaseTag::Complement: return "COMPLEMENT";
    }
    return "?";
}

void write_node(const CertificateNode& node, std::string& out) {
    out += "node case=";
    out += case_name(node.tag);
    out += std::string(" bound=") + (node.form == BoundForm::Plain ? "PLAIN" : "LARGE");
    out += " n=" + std::to_string(node.n);
    out += " size=" + std::to_string(node.size);
    out += " f=" + std::to_string(node.f);
    if (node.tag == CaseTag::Case1 || node.tag == CaseTag::Case2) {
        out += " coord=" + std::to_string(node.coord);
        out += std::string(" swapped=") + (node.swapped ? "1" : "0");
        out += " csize=" + std::to_string(node.small_size);
        out += " dsize=" + std::to_string(node.large_size);
        out += " meet=" + std::to_string(node.meet);
        out += " meetimg=" + std::to_string(node.meet_image);
        out += " cself=" + std::to_string(node.small_self);
        out += " dself=" + std::to_string(node.large_self);
        out += std::string(" slacks=") + (node.tag == CaseTag::Case1 ? "hart:" : "lemma4:") +
               std::to_string(node.gap) + ",lemma6:" + std::to_string(node.overlap_slack) +
               ",bound:" + std::to_string(node.slack);
    } else {
        out += " slacks=bound:" + std::to_string(node.slack);
    }
    out += " children=" + std::to_string(node.children.size());
    out += "\n";
    for (const auto& child : node.children) write_node(*child, out);
}

// ---- parsing ----

struct LineCursor {
    std::string_view text;

    std::string_view next_line() {
        if (text.empty()) throw input_error("certificate text ended early");
        const std::size_t nl = text.find('\n');
        std::string_view line = nl == std::string_view::npos ? text : text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        return line;
    }
};

std::string_view take_field(std::string_view& line, std::string_view key) {
    if (!line.starts_with(key))
        throw input_error("certificate node missing field " + std::string(key));
    line.remove_prefix(key.size());
    const std::size_t sp = line.find(' ');
    std::string_view value = sp == std::string_view::npos ? line : line.substr(0, sp);
    line.remove_prefix(sp == std::string_view::npos ? line.size() : sp + 1);
    return value;
}

template <typename T>
T parse_number(std::string_view value, const char* what) {
    T out{};
    const auto result = std::from_chars(value.data(), value.data() + value.size(), out);
    if (result.ec != std::errc{} || result.ptr != value.data() + value.size())
        throw input_error(std::string("bad certificate number for ") + what);
    return out;
}

std::unique_ptr<CertificateNode> parse_node(LineCursor& cursor) {
    std::string_view line = cursor.next_line();
    if (!line.starts_with("node ")) throw input_error("expected a certificate node line");
    line.remove_prefix(5);

    auto node = std::make_unique<CertificateNode>();
    const std::string_view tag = take_field(line, "case=");
    if (tag == "BASE")
        node->tag = CaseTag::Base;
    else if (tag == "CASE1")
        node->tag = CaseTag::Case1;
    else if (tag == "CASE2")
        node->tag = CaseTag::Case2;
    else if (tag == "COMPLEMENT")
        node->tag = CaseTag::Complement;
    else
        throw input_error("unknown certificate case tag");

    const std::string_view form = take_field(line, "bound=");
    if (form == "PLAIN")
        node->form = BoundForm::Plain;
    else if (form == "LARGE")
        node->form = BoundForm::Large;
    else
        throw input_error("unknown certificate bound form");

    node->n = parse_number<int>(take_field(line, "n="), "n");
    node->size = parse_number<uint64_t>(take_field(line, "size="), "size");
    node->f = parse_number<uint64_t>(take_field(line, "f="), "f");

    std::string_view slacks;
    if (node->tag == CaseTag::Case1 || node->tag == CaseTag::Case2) {
        node->coord = parse_number<int>(take_field(line, "coord="), "coord");
        node->swapped = parse_number<int>(take_field(line, "swapped="), "swapped") != 0;
        node->small_size = parse_number<uint64_t>(take_field(line, "csize="), "csize");
        node->large_size = parse_number<uint64_t>(take_field(line, "dsize="), "dsize");
        node->meet = parse_number<uint64_t>(take_field(line, "meet="), "meet");
        node->meet_image = parse_number<uint64_t>(take_field(line, "meetimg="), "meetimg");
        node->small_self = parse_number<uint64_t>(take_field(line, "cself="), "cself");
        node->large_self = parse_number<uint64_t>(take_field(line, "dself="), "dself");
        slacks = take_field(line, "slacks=");
        const std::string_view gap_key = node->tag == CaseTag::Case1 ? "hart:" : "lemma4:";
        if (!slacks.starts_with(gap_key)) throw input_error("certificate slack list malformed");
        slacks.remove_prefix(gap_key.size());
        const std::size_t c1 = slacks.find(",lemma6:");
        if (c1 == std::string_view::npos) throw input_error("certificate slack list malformed");
        node->gap = parse_number<int64_t>(slacks.substr(0, c1), "gap");
        slacks.remove_prefix(c1 + 8);
        const std::size_t c2 = slacks.find(",bound:");
        if (c2 == std::string_view::npos) throw input_error("certificate slack list malformed");
        node->overlap_slack = parse_number<int64_t>(slacks.substr(0, c2), "lemma6");
        node->slack = parse_number<int64_t>(slacks.substr(c2 + 7), "bound slack");
    } else {
        slacks = take_field(line, "slacks=");
        if (!slacks.starts_with("bound:")) throw input_error("certificate slack list malformed");
        node->slack = parse_number<int64_t>(slacks.substr(6), "bound slack");
    }

    const int children = parse_number<int>(take_field(line, "children="), "children");
    if (!line.empty()) throw input_error("trailing tokens on certificate node line");
    const int expected = node->tag == CaseTag::Base       ? 0
                         : node->tag == CaseTag::Complement ? 1
                                                            : 2;
    if (children != expected) throw input_error("certificate child count does not match the case");
    for (int c = 0; c < children; ++c) node->children.push_back(parse_node(cursor));
    return node;
}

}  // namespace

CertificateCheck verify_certificate(const Certificate& cert, const Family& fam) {
    Checker checker;
    if (!cert.root) {
        checker.fail("root", "certificate has no root node");
        return checker.result;
    }
    checker.check(*cert.root, fam, "root");
    return checker.result;
}

std::string to_text(const Certificate& cert) {
    std::string out = "certificate v1\n";
    if (cert.root) write_node(*cert.root, out);
    out += "end\n";
    return out;
}

Certificate certificate_from_text(std::string_view text) {
    LineCursor cursor{text};
    if (cursor.next_line() != "certificate v1") throw input_error("not a certificate file");
    Certificate cert;
    cert.root = parse_node(cursor);
    if (cursor.next_line() != "end") throw input_error("certificate missing end line");
    return cert;
}

}  // namespace cubeiso
