#include "cubeiso/family.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <utility>

#include "cubeiso/bits.hpp"
#include "cubeiso/errors.hpp"

namespace cubeiso {

namespace {

constexpr int kHardDimensionLimit = 30;

int initial_cap() {
    if (const char* env = std::getenv("CUBEISO_MAX_N")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 0 && v <= kHardDimensionLimit) return static_cast<int>(v);
    }
    return 28;
}

std::atomic<int>& cap_storage() {
    static std::atomic<int> cap{initial_cap()};
    return cap;
}

std::size_t words_for_dimension(int n) {
    return n <= 6 ? 1 : std::size_t{1} << (n - 6);
}

void require_dimension(int n) {
    if (n < 0 || n > dimension_cap())
        throw input_error("dimension " + std::to_string(n) + " outside [0, " +
                          std::to_string(dimension_cap()) + "]");
}

void require_same_dimension(const Family& a, const Family& b) {
    if (a.dimension() != b.dimension())
        throw input_error("dimension mismatch: " + std::to_string(a.dimension()) + " vs " +
                          std::to_string(b.dimension()));
}

// Bits actually used in the (single) word of a family with n <= 6.
uint64_t tail_mask(int n) {
    return n >= 6 ? ~uint64_t{0} : (uint64_t{1} << (uint64_t{1} << n)) - 1;
}

// Compress the s-bit groups selected by `upper` (s = 2^b, b < 6) of one word
// into its low 32 bits: the word-level step of deleting coordinate bit b.
uint64_t half_bits(uint64_t x, int b, bool upper) {
    uint64_t h = upper ? (x >> (uint64_t{1} << b)) : x;
    h &= low_half_mask(b);
    for (int t = b; t <= 4; ++t) h = (h | (h >> (uint64_t{1} << t))) & low_half_mask(t + 1);
    return h;
}

}  // namespace

int dimension_cap() { return cap_storage().load(std::memory_order_relaxed); }

void set_dimension_cap(int cap) {
    if (cap < 0 || cap > kHardDimensionLimit)
        throw input_error("dimension cap must be in [0, " + std::to_string(kHardDimensionLimit) + "]");
    cap_storage().store(cap, std::memory_order_relaxed);
}

Vertex encode_vertex(std::span<const int> elements, int n) {
    require_dimension(n);
    uint64_t code = 0;
    for (int e : elements) {
        if (e < 1 || e > n)
            throw input_error("element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
        code |= uint64_t{1} << (e - 1);
    }
    return Vertex{code};
}

Vertex encode_vertex(std::initializer_list<int> elements, int n) {
    return encode_vertex(std::span<const int>(elements.begin(), elements.size()), n);
}

std::vector<int> decode_vertex(Vertex v, int n) {
    require_dimension(n);
    if (n < 64 && v.code >> n)
        throw input_error("vertex code out of range for dimension " + std::to_string(n));
    std::vector<int> elements;
    for (int i = 1; i <= n; ++i)
        if (v.code >> (i - 1) & 1) elements.push_back(i);
    return elements;
}

Family::Family(int n) : n_(n) {
    require_dimension(n);
    words_.assign(words_for_dimension(n), 0);
}

Family Family::full(int n) {
    Family fam(n);
    for (auto& w : fam.words_) w = ~uint64_t{0};
    fam.words_[0] &= tail_mask(n);
    return fam;
}

Family Family::from_words(int n, std::vector<uint64_t> words) {
    require_dimension(n);
    if (words.size() != words_for_dimension(n)) throw input_error("word vector length mismatch");
    if (n < 6 && (words[0] & ~tail_mask(n))) throw input_error("bits set above 2^n");
    Family fam;
    fam.n_ = n;
    fam.words_ = std::move(words);
    return fam;
}

uint64_t Family::size() const {
    uint64_t total = 0;
    for (uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool Family::contains(uint64_t code) const {
    if (code >= vertex_count()) throw input_error("vertex code out of range");
    return words_[code >> 6] >> (code & 63) & 1;
}

void Family::insert(uint64_t code) {
    if (code >= vertex_count()) throw input_error("vertex code out of range");
    words_[code >> 6] |= uint64_t{1} << (code & 63);
}

void Family::erase(uint64_t code) {
    if (code >= vertex_count()) throw input_error("vertex code out of range");
    words_[code >> 6] &= ~(uint64_t{1} << (code & 63));
}

void Family::toggle(uint64_t code) {
    if (code >= vertex_count()) throw input_error("vertex code out of range");
    words_[code >> 6] ^= uint64_t{1} << (code & 63);
}

bool Family::is_subset_of(const Family& other) const {
    require_same_dimension(*this, other);
    for (std::size_t j = 0; j < words_.size(); ++j)
        if (words_[j] & ~other.words_[j]) return false;
    return true;
}

Family Family::operator&(const Family& other) const {
    require_same_dimension(*this, other);
    Family out(n_);
    for (std::size_t j = 0; j < words_.size(); ++j) out.words_[j] = words_[j] & other.words_[j];
    return out;
}

Family Family::operator|(const Family& other) const {
    require_same_dimension(*this, other);
    Family out(n_);
    for (std::size_t j = 0; j < words_.size(); ++j) out.words_[j] = words_[j] | other.words_[j];
    return out;
}

Family Family::operator^(const Family& other) const {
    require_same_dimension(*this, other);
    Family out(n_);
    for (std::size_t j = 0; j < words_.size(); ++j) out.words_[j] = words_[j] ^ other.words_[j];
    return out;
}

uint64_t internal_edges(const Family& fam) {
    const int n = fam.dimension();
    const auto w = fam.words();
    uint64_t total = 0;
    for (int b = 0; b < n && b < 6; ++b) {
        const uint64_t m = low_half_mask(b);
        const int s = 1 << b;
        for (uint64_t x : w) total += std::popcount(x & (x >> s) & m);
    }
    for (int b = 6; b < n; ++b) {
        const std::size_t stride = std::size_t{1} << (b - 6);
        for (std::size_t j = 0; j < w.size(); ++j)
            if (!(j & stride)) total += std::popcount(w[j] & w[j + stride]);
    }
    return total;
}

uint64_t edge_boundary(const Family& fam) {
    return uint64_t(fam.dimension()) * fam.size() - 2 * internal_edges(fam);
}

uint64_t edge_boundary_direct(const Family& fam) {
    const int n = fam.dimension();
    const auto w = fam.words();
    uint64_t total = 0;
    for (int b = 0; b < n && b < 6; ++b) {
        const uint64_t m = low_half_mask(b);
        const int s = 1 << b;
        for (uint64_t x : w) total += std::popcount((x ^ (x >> s)) & m);
    }
    for (int b = 6; b < n; ++b) {
        const std::size_t stride = std::size_t{1} << (b - 6);
        for (std::size_t j = 0; j < w.size(); ++j)
            if (!(j & stride)) total += std::popcount(w[j] ^ w[j + stride]);
    }
    return total;
}

uint64_t cross_edges(const Family& a, const Family& b) {
    require_same_dimension(a, b);
    if (intersection_size(a, b) != 0) throw input_error("cross_edges requires disjoint families");
    const int n = a.dimension();
    const auto wa = a.words();
    const auto wb = b.words();
    uint64_t total = 0;
    for (int bi = 0; bi < n && bi < 6; ++bi) {
        const uint64_t m = low_half_mask(bi);
        const int s = 1 << bi;
        for (std::size_t j = 0; j < wa.size(); ++j) {
            total += std::popcount(wa[j] & (wb[j] >> s) & m);
            total += std::popcount(wb[j] & (wa[j] >> s) & m);
        }
    }
    for (int bi = 6; bi < n; ++bi) {
        const std::size_t stride = std::size_t{1} << (bi - 6);
        for (std::size_t j = 0; j < wa.size(); ++j) {
            if (j & stride) continue;
            total += std::popcount(wa[j] & wb[j + stride]);
            total += std::popcount(wb[j] & wa[j + stride]);
        }
    }
    return total;
}

Family antipodal_image(const Family& fam) {
    const int n = fam.dimension();
    const auto src = fam.words();
    std::vector<uint64_t> out(src.size());
    for (std::size_t j = 0; j < src.size(); ++j) out[j] = bit_reverse64(src[src.size() - 1 - j]);
    if (n < 6) out[0] >>= 64 - fam.vertex_count();
    return Family::from_words(n, std::move(out));
}

uint64_t antipodal_overlap(const Family& fam) {
    const auto w = fam.words();
    if (fam.dimension() < 6) {
        const uint64_t rev = bit_reverse64(w[0]) >> (64 - fam.vertex_count());
        return std::popcount(w[0] & rev);
    }
    uint64_t total = 0;
    for (std::size_t j = 0; j < w.size(); ++j)
        total += std::popcount(w[j] & bit_reverse64(w[w.size() - 1 - j]));
    return total;
}

bool is_antipodal(const Family& fam) { return antipodal_overlap(fam) == fam.size(); }

Family complement_family(const Family& fam) {
    const auto src = fam.words();
    std::vector<uint64_t> out(src.size());
    for (std::size_t j = 0; j < src.size(); ++j) out[j] = ~src[j];
    out[0] &= tail_mask(fam.dimension());
    return Family::from_words(fam.dimension(), std::move(out));
}

namespace {

Family section_impl(const Family& fam, int i, bool upper) {
    const int n = fam.dimension();
    if (n < 1) throw input_error("sections need dimension at least 1");
    if (i < 1 || i > n) throw input_error("section coordinate out of range");
    const int b = i - 1;
    const auto src = fam.words();
    std::vector<uint64_t> out(words_for_dimension(n - 1), 0);
    if (b >= 6) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < src.size(); ++j)
            if (((j >> (b - 6)) & 1) == std::size_t(upper)) out[k++] = src[j];
    } else if (n - 1 <= 5) {
        out[0] = half_bits(src[0], b, upper);
    } else {
        for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = half_bits(src[2 * k], b, upper) | (half_bits(src[2 * k + 1], b, upper) << 32);
    }
    return Family::from_words(n - 1, std::move(out));
}

}  // namespace

Family upper_section(const Family& fam, int i) { return section_impl(fam, i, true); }
Family lower_section(const Family& fam, int i) { return section_impl(fam, i, false); }

uint64_t upper_section_size(const Family& fam, int i) {
    const int n = fam.dimension();
    if (n < 1 || i < 1 || i > n) throw input_error("section coordinate out of range");
    const int b = i - 1;
    const auto w = fam.words();
    uint64_t total = 0;
    if (b < 6) {
        const uint64_t m = ~low_half_mask(b);
        for (uint64_t x : w) total += std::popcount(x & m);
    } else {
        for (std::size_t j = 0; j < w.size(); ++j)
            if ((j >> (b - 6)) & 1) total += std::popcount(w[j]);
    }
    return total;
}

uint64_t lower_section_size(const Family& fam, int i) {
    return fam.size() - upper_section_size(fam, i);
}

Family apply_automorphism(const Family& fam, std::span<const int> perm, Vertex translate) {
    const int n = fam.dimension();
    if (static_cast<int>(perm.size()) != n) throw input_error("permutation length mismatch");
    std::vector<bool> seen(n, false);
    for (int p : perm) {
        if (p < 1 || p > n || seen[p - 1]) throw input_error("not a permutation of [n]");
        seen[p - 1] = true;
    }
    if (n < 64 && translate.code >> n) throw input_error("translate out of range");
    Family out(n);
    const auto w = fam.words();
    for (std::size_t j = 0; j < w.size(); ++j) {
        uint64_t x = w[j];
        while (x) {
            const uint64_t v = (uint64_t(j) << 6) | std::countr_zero(x);
            x &= x - 1;
            uint64_t img = 0;
            for (int bi = 0; bi < n; ++bi)
                if (v >> bi & 1) img |= uint64_t{1} << (perm[bi] - 1);
            out.insert(img ^ translate.code);
        }
    }
    return out;
}

uint64_t potential(const Family& fam) { return 2 * internal_edges(fam) + antipodal_overlap(fam); }

EdgeProfile edge_profile(const Family& fam) {
    EdgeProfile p;
    p.n = fam.dimension();
    p.size = fam.size();
    p.internal = internal_edges(fam);
    p.boundary = uint64_t(p.n) * p.size - 2 * p.internal;
    p.potential = 2 * p.internal + antipodal_overlap(fam);
    return p;
}

uint64_t intersection_size(const Family& a, const Family& b) {
    require_same_dimension(a, b);
    uint64_t total = 0;
    for (std::size_t j = 0; j < a.word_count(); ++j)
        total += std::popcount(a.words()[j] & b.words()[j]);
    return total;
}

uint64_t union_size(const Family& a, const Family& b) {
    require_same_dimension(a, b);
    uint64_t total = 0;
    for (std::size_t j = 0; j < a.word_count(); ++j)
        total += std::popcount(a.words()[j] | b.words()[j]);
    return total;
}

PairCounts family_counts(const Family& a, const Family& b) {
    require_same_dimension(a, b);
    PairCounts c;
    const auto wa = a.words();
    const auto wb = b.words();
    const std::size_t W = wa.size();
    const int n = a.dimension();
    for (std::size_t j = 0; j < W; ++j) {
        c.both += std::popcount(wa[j] & wb[j]);
        c.either += std::popcount(wa[j] | wb[j]);
        c.first_only += std::popcount(wa[j] & ~wb[j]);
        uint64_t rev = bit_reverse64(wb[W - 1 - j]);
        if (n < 6) rev >>= 64 - a.vertex_count();
        c.meet_image += std::popcount(wa[j] & rev);
    }
    return c;
}

Family random_family(int n, uint64_t seed) {
    require_dimension(n);
    SplitMix64 g(seed);
    std::vector<uint64_t> words(words_for_dimension(n));
    for (auto& w : words) w = g.next();
    words[0] &= tail_mask(n);
    return Family::from_words(n, std::move(words));
}

std::string to_text(const Family& fam) {
    const int n = fam.dimension();
    const std::size_t digits = n >= 2 ? std::size_t{1} << (n - 2) : 1;
    std::string out = "n=" + std::to_string(n) + " hex=";
    out.reserve(out.size() + digits);
    const auto w = fam.words();
    for (std::size_t d = 0; d < digits; ++d) {
        const unsigned nibble = (w[d >> 4] >> ((d & 15) * 4)) & 0xf;
        out.push_back("0123456789abcdef"[nibble]);
    }
    return out;
}

Family family_from_text(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (!text.starts_with("n=")) throw input_error("family text must start with n=");
    text.remove_prefix(2);
    const std::size_t sp = text.find(' ');
    if (sp == std::string_view::npos) throw input_error("family text missing hex field");
    int n = -1;
    const auto number = text.substr(0, sp);
    const auto result = std::from_chars(number.data(), number.data() + number.size(), n);
    if (result.ec != std::errc{} || result.ptr != number.data() + number.size())
        throw input_error("bad dimension in family text");
    require_dimension(n);
    text.remove_prefix(sp + 1);
    if (!text.starts_with("hex=")) throw input_error("family text missing hex field");
    text.remove_prefix(4);
    const std::size_t digits = n >= 2 ? std::size_t{1} << (n - 2) : 1;
    if (text.size() != digits) throw input_error("family hex field has wrong length");
    std::vector<uint64_t> words(words_for_dimension(n), 0);
    for (std::size_t d = 0; d < digits; ++d) {
        const char ch = text[d];
        unsigned nibble;
        if (ch >= '0' && ch <= '9')
            nibble = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            nibble = 10 + (ch - 'a');
        else
            throw input_error("family hex field must be lowercase hex");
        words[d >> 4] |= uint64_t{nibble} << ((d & 15) * 4);
    }
    if (n < 6 && (words[0] & ~tail_mask(n))) throw input_error("bits set above 2^n");
    return Family::from_words(n, std::move(words));
}

namespace ref {

uint64_t internal_edges(const Family& fam) {
    const int n = fam.dimension();
    uint64_t count = 0;
    for (uint64_t v = 0; v < fam.vertex_count(); ++v) {
        if (!fam.contains(v)) continue;
        for (int b = 0; b < n; ++b) {
            const uint64_t u = v ^ (uint64_t{1} << b);
            if (u > v && fam.contains(u)) ++count;
        }
    }
    return count;
}

uint64_t edge_boundary(const Family& fam) {
    const int n = fam.dimension();
    uint64_t count = 0;
    for (uint64_t v = 0; v < fam.vertex_count(); ++v) {
        if (!fam.contains(v)) continue;
        for (int b = 0; b < n; ++b)
            if (!fam.contains(v ^ (uint64_t{1} << b))) ++count;
    }
    return count;
}

uint64_t antipodal_overlap(const Family& fam) {
    uint64_t count = 0;
    for (uint64_t v = 0; v < fam.vertex_count(); ++v)
        if (fam.contains(v) && fam.contains(fam.vertex_count() - 1 - v)) ++count;
    return count;
}

uint64_t potential(const Family& fam) {
    return 2 * ref::internal_edges(fam) + ref::antipodal_overlap(fam);
}

}  // namespace ref

}  // namespace cubeiso
