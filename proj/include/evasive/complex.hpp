#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace evasive {

// A face is a bitmask over the indices of a ground set (at most 63 elements).
using Face = std::uint64_t;

inline int face_card(Face f) { return std::popcount(f); }
inline bool face_subset(Face a, Face b) { return (a & ~b) == 0; }
inline bool face_proper_subset(Face a, Face b) { return a != b && face_subset(a, b); }
inline Face face_bit(int i) { return Face{1} << i; }

Face face_from_indices(const std::vector<int>& idx);
std::vector<int> face_indices(Face f);
std::string face_str(Face f);

struct GroundSet {
    std::vector<std::string> labels;

    GroundSet() = default;
    explicit GroundSet(std::vector<std::string> l);
    // ground set with labels "1".."n"
    static GroundSet numbered(int n);

    int size() const { return static_cast<int>(labels.size()); }
    Face full_mask() const {
        return size() == 0 ? 0 : (size() == 64 ? ~Face{0} : (Face{1} << size()) - 1);
    }
    bool operator==(const GroundSet&) const = default;
};

// Downward-closed family of faces over a ground set. `faces` is sorted and
// duplicate-free; an empty vector is the void complex, which is distinct
// from the complex {∅}.
struct Complex {
    GroundSet ground;
    std::vector<Face> faces;

    bool is_void() const { return faces.empty(); }
    bool contains(Face f) const;
    std::size_t size() const { return faces.size(); }
    // max face cardinality, -1 for {∅}; must not be called on the void complex
    int dim() const;
    std::vector<Face> facets() const;
    // union of all vertices appearing in some face
    Face vertex_mask() const;
    // true iff the complex equals the full power set of its vertex set
    bool is_simplex() const;
    bool operator==(const Complex&) const = default;
};

// Builds a complex from an explicit face list; throws if not downward closed.
Complex complex_from_faces(GroundSet ground, std::vector<Face> faces);
// Downward closure of the given facets; empty facet list gives the void complex.
Complex complex_from_facets(const GroundSet& ground, const std::vector<Face>& facets);
Complex full_simplex(const GroundSet& ground);

enum class MinorKind { link, deletion };

// link:     {τ : τ∩σ = ∅, τ∪σ ∈ Δ}
// deletion: {τ ∈ Δ : σ ⊄ τ}   (faces not containing σ)
Complex minor(const Complex& c, Face sigma, MinorKind kind);

// Join of complexes over disjoint label sets; the result's ground set is the
// concatenation of the inputs', with b's faces shifted past a's indices.
Complex join(const Complex& a, const Complex& b);

// If sigma is a free face (nonempty, proper, contained in exactly one facet),
// returns that facet; otherwise nullopt. sigma must be a member of c.
std::optional<Face> is_free_face(const Complex& c, Face sigma);

// Shedding-vertex certificate for vertex decomposability.
struct VdCert {
    enum class Kind { simplex, void_complex, shed };
    Kind kind = Kind::simplex;
    int vertex = -1;
    std::unique_ptr<VdCert> del;
    std::unique_ptr<VdCert> link;

    static VdCert simplex_leaf();
    static VdCert void_leaf();
    static VdCert shed_node(int v, VdCert d, VdCert l);
    VdCert clone() const;
};

// Exhaustive search for a shedding order; simplices (including {∅}) and the
// void complex are vertex decomposable. Memoizes on canonicalized complexes.
std::optional<VdCert> is_vertex_decomposable(const Complex& c);

// Replays a certificate against a complex: shedding vertices must be vertices
// whose deletions only lose facets of the whole complex.
bool check_vd_certificate(const Complex& c, const VdCert& cert);

}  // namespace evasive
