#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubeiso {

using std::uint64_t;

// Ambient dimension limit. The default of 28 keeps a single family at 32 MiB;
// override with set_dimension_cap() or the CUBEISO_MAX_N environment variable
// (hard ceiling 30).
int dimension_cap();
void set_dimension_cap(int cap);

// A subset of [n] = {1,..,n}, encoded so that element i is bit i-1. Under this
// encoding the binary ordering on subsets coincides with integer order on
// codes.
struct Vertex {
    uint64_t code = 0;

    friend bool operator==(Vertex, Vertex) = default;
};

Vertex encode_vertex(std::span<const int> elements, int n);
Vertex encode_vertex(std::initializer_list<int> elements, int n);
std::vector<int> decode_vertex(Vertex v, int n);

// Membership bitvector over the 2^n vertices of the discrete cube. Vertex v
// lives at bit position v; words are little-endian by vertex index and bits
// above 2^n are kept zero.
class Family {
public:
    Family() = default;
    explicit Family(int n);

    static Family full(int n);
    static Family from_words(int n, std::vector<uint64_t> words);

    int dimension() const { return n_; }
    uint64_t vertex_count() const { return uint64_t{1} << n_; }
    std::size_t word_count() const { return words_.size(); }
    std::span<const uint64_t> words() const { return words_; }

    uint64_t size() const;
    bool empty() const { return size() == 0; }

    bool contains(uint64_t code) const;
    bool contains(Vertex v) const { return contains(v.code); }
    void insert(uint64_t code);
    void erase(uint64_t code);
    void toggle(uint64_t code);

    bool is_subset_of(const Family& other) const;

    Family operator&(const Family& other) const;
    Family operator|(const Family& other) const;
    Family operator^(const Family& other) const;

    friend bool operator==(const Family&, const Family&) = default;

private:
    int n_ = 0;
    std::vector<uint64_t> words_ = std::vector<uint64_t>(1, 0);
};

// Record of the basic counts of one family.
struct EdgeProfile {
    int n = 0;
    uint64_t size = 0;
    uint64_t internal = 0;   // e(A)
    uint64_t boundary = 0;   // |boundary edges|; 2*internal + boundary = n*size
    uint64_t potential = 0;  // 2*e(A) + |A meet its antipodal image|
};

// Popcounts of the boolean combinations used throughout the lemma checks.
struct PairCounts {
    uint64_t both = 0;        // |A meet B|
    uint64_t either = 0;      // |A join B|
    uint64_t first_only = 0;  // |A minus B|
    uint64_t meet_image = 0;  // |A meet antipodal_image(B)|
};

// Edges of the cube with both endpoints in the family. Each edge is counted
// once, at its endpoint with the direction bit set.
uint64_t internal_edges(const Family& fam);

// n*|A| - 2*e(A).
uint64_t edge_boundary(const Family& fam);

// Same quantity counted edge by edge over the cut, kept as a cross-check.
uint64_t edge_boundary_direct(const Family& fam);

// Edges with one endpoint in each of two disjoint families.
uint64_t cross_edges(const Family& a, const Family& b);

// The image of the family under elementwise complement of its members.
Family antipodal_image(const Family& fam);

// |A meet antipodal_image(A)| without materializing the image.
uint64_t antipodal_overlap(const Family& fam);

bool is_antipodal(const Family& fam);

// Complement within the power set: every vertex not in A.
Family complement_family(const Family& fam);

// Sections along coordinate i (1-based). Deleting coordinate i re-indexes the
// remaining elements j < i to j and j > i to j-1, which keeps initial segments
// of the binary order stable when i = n.
Family upper_section(const Family& fam, int i);
Family lower_section(const Family& fam, int i);
uint64_t upper_section_size(const Family& fam, int i);
uint64_t lower_section_size(const Family& fam, int i);

// Image of the family under the cube automorphism x -> perm(x) xor translate.
// perm has length n and maps element j (1-based, at index j-1) to perm[j-1].
Family apply_automorphism(const Family& fam, std::span<const int> perm, Vertex translate);

// 2*e(A) + |A meet antipodal_image(A)|, the quantity driven through the
// induction certificates.
uint64_t potential(const Family& fam);

EdgeProfile edge_profile(const Family& fam);

uint64_t intersection_size(const Family& a, const Family& b);
uint64_t union_size(const Family& a, const Family& b);
PairCounts family_counts(const Family& a, const Family& b);

// A family whose vertices are chosen independently with probability 1/2,
// deterministic in the seed.
Family random_family(int n, uint64_t seed);

// Text form "n=<n> hex=<digits>": one lowercase hex digit per four vertices,
// little-endian by vertex index, padded to max(1, 2^n/4) digits. Bit-exact
// round trip.
std::string to_text(const Family& fam);
Family family_from_text(std::string_view text);

// Per-vertex reference implementations of the counting primitives. They walk
// decoded vertices one at a time and exist as the slow baseline the
// bit-parallel versions are tested and benchmarked against.
namespace ref {
uint64_t internal_edges(const Family& fam);
uint64_t edge_boundary(const Family& fam);
uint64_t antipodal_overlap(const Family& fam);
uint64_t potential(const Family& fam);
}  // namespace ref

}  // namespace cubeiso
