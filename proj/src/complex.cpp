#include "evasive/complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace evasive {

Face face_from_indices(const std::vector<int>& idx) {
    Face f = 0;
    for (int i : idx) {
        if (i < 0 || i >= 63) throw std::out_of_range("face index out of range: " + std::to_string(i));
        f |= face_bit(i);
    }
    return f;
}

std::vector<int> face_indices(Face f) {
    std::vector<int> out;
    while (f) {
        int i = std::countr_zero(f);
        out.push_back(i);
        f &= f - 1;
    }
    return out;
}

std::string face_str(Face f) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int i : face_indices(f)) {
        if (!first) os << ',';
        os << i;
        first = false;
    }
    os << '}';
    return os.str();
}

GroundSet::GroundSet(std::vector<std::string> l) : labels(std::move(l)) {
    if (labels.size() > 63) throw std::invalid_argument("ground set larger than 63 elements");
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw std::invalid_argument("ground set labels not distinct");
}

GroundSet GroundSet::numbered(int n) {
    std::vector<std::string> l;
    l.reserve(n);
    for (int i = 1; i <= n; ++i) l.push_back(std::to_string(i));
    return GroundSet(std::move(l));
}

bool Complex::contains(Face f) const {
    return std::binary_search(faces.begin(), faces.end(), f);
}

int Complex::dim() const {
    if (is_void()) throw std::logic_error("dim of void complex");
    int d = -1;
    for (Face f : faces) d = std::max(d, face_card(f) - 1);
    return d;
}

std::vector<Face> Complex::facets() const {
    std::vector<Face> out;
    for (Face f : faces) {
        bool maximal = true;
        for (Face g : faces)
            if (f != g && face_subset(f, g)) { maximal = false; break; }
        if (maximal) out.push_back(f);
    }
    return out;
}

Face Complex::vertex_mask() const {
    Face m = 0;
    for (Face f : faces) m |= f;
    return m;
}

bool Complex::is_simplex() const {
    if (is_void()) return false;
    Face v = vertex_mask();
    return faces.size() == (std::size_t{1} << face_card(v));
}

static void sort_unique(std::vector<Face>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

Complex complex_from_faces(GroundSet ground, std::vector<Face> faces) {
    Face full = ground.full_mask();
    sort_unique(faces);
    Complex c{std::move(ground), std::move(faces)};
    for (Face f : c.faces) {
        if (!face_subset(f, full)) throw std::out_of_range("face out of ground set range");
        for (Face sub = f; ; sub = (sub - 1) & f) {
            if (!c.contains(sub))
                throw std::invalid_argument("face set not downward closed at " + face_str(sub));
            if (sub == 0) break;
        }
    }
    return c;
}

Complex complex_from_facets(const GroundSet& ground, const std::vector<Face>& facets) {
    Face full = ground.full_mask();
    std::set<Face> acc;
    for (Face f : facets) {
        if (!face_subset(f, full)) throw std::out_of_range("facet out of ground set range");
        for (Face sub = f; ; sub = (sub - 1) & f) {
            acc.insert(sub);
            if (sub == 0) break;
        }
    }
    return Complex{ground, std::vector<Face>(acc.begin(), acc.end())};
}

Complex full_simplex(const GroundSet& ground) {
    return complex_from_facets(ground, {ground.full_mask()});
}

Complex minor(const Complex& c, Face sigma, MinorKind kind) {
    if (!face_subset(sigma, c.ground.full_mask()))
        throw std::out_of_range("minor face out of ground set range");
    std::vector<Face> out;
    if (kind == MinorKind::link) {
        for (Face f : c.faces)
            if ((f & sigma) == 0 && c.contains(f | sigma)) out.push_back(f);
    } else {
        for (Face f : c.faces)
            if (!face_subset(sigma, f)) out.push_back(f);
    }
    return Complex{c.ground, std::move(out)};
}

Complex join(const Complex& a, const Complex& b) {
    std::set<std::string> seen(a.ground.labels.begin(), a.ground.labels.end());
    for (const auto& l : b.ground.labels)
        if (seen.count(l)) throw std::invalid_argument("join of complexes with overlapping label " + l);
    std::vector<std::string> labels = a.ground.labels;
    labels.insert(labels.end(), b.ground.labels.begin(), b.ground.labels.end());
    GroundSet ground(std::move(labels));
    int shift = a.ground.size();
    std::vector<Face> faces;
    for (Face fa : a.faces)
        for (Face fb : b.faces) faces.push_back(fa | (fb << shift));
    sort_unique(faces);
    return Complex{std::move(ground), std::move(faces)};
}

std::optional<Face> is_free_face(const Complex& c, Face sigma) {
    if (!c.contains(sigma)) throw std::invalid_argument("free-face query for a non-member face");
    if (sigma == 0) return std::nullopt;  // the empty face is never free
    std::optional<Face> unique_facet;
    for (Face f : c.facets()) {
        if (!face_subset(sigma, f)) continue;
        if (unique_facet) return std::nullopt;
        unique_facet = f;
    }
    if (unique_facet && *unique_facet != sigma) return unique_facet;
    return std::nullopt;
}

VdCert VdCert::simplex_leaf() { return VdCert{Kind::simplex, -1, nullptr, nullptr}; }
VdCert VdCert::void_leaf() { return VdCert{Kind::void_complex, -1, nullptr, nullptr}; }

VdCert VdCert::shed_node(int v, VdCert d, VdCert l) {
    VdCert c;
    c.kind = Kind::shed;
    c.vertex = v;
    c.del = std::make_unique<VdCert>(std::move(d));
    c.link = std::make_unique<VdCert>(std::move(l));
    return c;
}

VdCert VdCert::clone() const {
    VdCert c;
    c.kind = kind;
    c.vertex = vertex;
    if (del) c.del = std::make_unique<VdCert>(del->clone());
    if (link) c.link = std::make_unique<VdCert>(link->clone());
    return c;
}

// v sheds iff every facet of del_v is a facet of the whole complex,
// equivalently no facet of lk_v is a facet of del_v.
static bool sheds(const Complex& c, const Complex& del, int v) {
    (void)v;
    auto cf = c.facets();
    std::sort(cf.begin(), cf.end());
    for (Face f : del.facets())
        if (!std::binary_search(cf.begin(), cf.end(), f)) return false;
    return true;
}

// order-preserving compaction of vertex indices, so that minors of distinct
// parents can share memo entries
static std::vector<Face> canonical_faces(const std::vector<Face>& faces) {
    Face verts = 0;
    for (Face f : faces) verts |= f;
    std::vector<int> remap(64, -1);
    int next = 0;
    for (int i : face_indices(verts)) remap[i] = next++;
    std::vector<Face> out;
    out.reserve(faces.size());
    for (Face f : faces) {
        Face g = 0;
        for (int i : face_indices(f)) g |= face_bit(remap[i]);
        out.push_back(g);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {
struct VdSearch {
    std::map<std::vector<Face>, std::optional<VdCert>> memo;

    std::optional<VdCert> run(const Complex& c) {
        if (c.is_void()) return VdCert::void_leaf();
        if (c.is_simplex()) return VdCert::simplex_leaf();
        auto key = canonical_faces(c.faces);
        if (auto it = memo.find(key); it != memo.end())
            return it->second ? std::optional<VdCert>(it->second->clone()) : std::nullopt;
        std::optional<VdCert> result;
        for (int v : face_indices(c.vertex_mask())) {
            Complex del = minor(c, face_bit(v), MinorKind::deletion);
            if (!sheds(c, del, v)) continue;
            auto dc = run(del);
            if (!dc) continue;
            auto lc = run(minor(c, face_bit(v), MinorKind::link));
            if (!lc) continue;
            result = VdCert::shed_node(v, std::move(*dc), std::move(*lc));
            break;
        }
        memo[key] = result ? std::optional<VdCert>(result->clone()) : std::nullopt;
        return result;
    }
};
}  // namespace

std::optional<VdCert> is_vertex_decomposable(const Complex& c) {
    VdSearch s;
    return s.run(c);
}

bool check_vd_certificate(const Complex& c, const VdCert& cert) {
    switch (cert.kind) {
        case VdCert::Kind::void_complex:
            return c.is_void();
        case VdCert::Kind::simplex:
            return c.is_simplex();
        case VdCert::Kind::shed: {
            Face v = face_bit(cert.vertex);
            if (!c.contains(v)) return false;
            Complex del = minor(c, v, MinorKind::deletion);
            if (!sheds(c, del, cert.vertex)) return false;
            return check_vd_certificate(del, *cert.del) &&
                   check_vd_certificate(minor(c, v, MinorKind::link), *cert.link);
        }
    }
    return false;
}

}  // namespace evasive
