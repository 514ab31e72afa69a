#include "evasive/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace evasive {

Poset Poset::explicit_poset(std::vector<std::string> elements, std::vector<std::vector<bool>> le) {
    std::size_t n = elements.size();
    if (le.size() != n) throw std::invalid_argument("relation matrix size mismatch");
    for (const auto& row : le)
        if (row.size() != n) throw std::invalid_argument("relation matrix not square");
    for (std::size_t a = 0; a < n; ++a) {
        if (!le[a][a]) throw std::invalid_argument("relation not reflexive");
        for (std::size_t b = 0; b < n; ++b) {
            if (a != b && le[a][b] && le[b][a])
                throw std::invalid_argument("relation not antisymmetric");
            for (std::size_t c = 0; c < n; ++c)
                if (le[a][b] && le[b][c] && !le[a][c])
                    throw std::invalid_argument("relation not transitive");
        }
    }
    Poset p;
    p.kind = Kind::table;
    p.elements = std::move(elements);
    p.le_matrix = std::move(le);
    return p;
}

bool Poset::valid_element(long long p) const {
    if (is_naturals()) return p >= 0;
    return p >= 0 && p < static_cast<long long>(elements.size());
}

bool Poset::le(long long a, long long b) const {
    if (is_naturals()) return a <= b;
    if (!valid_element(a) || !valid_element(b)) throw std::out_of_range("poset element out of range");
    return le_matrix[a][b];
}

std::string Poset::element_name(long long p) const {
    if (is_naturals()) return std::to_string(p);
    if (!valid_element(p)) throw std::out_of_range("poset element out of range");
    return elements[p];
}

long long MonotoneMap::value_of(Face f) const {
    auto it = std::lower_bound(domain.faces.begin(), domain.faces.end(), f);
    if (it == domain.faces.end() || *it != f)
        throw std::invalid_argument("map has no value for face " + face_str(f));
    return values[it - domain.faces.begin()];
}

MonotoneMap make_monotone_map(Complex domain, Poset codomain, std::vector<long long> values) {
    if (values.size() != domain.faces.size())
        throw std::invalid_argument("monotone map not total on domain faces");
    for (long long v : values)
        if (!codomain.valid_element(v)) throw std::out_of_range("map value outside codomain");
    return MonotoneMap{std::move(domain), std::move(codomain), std::move(values)};
}

std::vector<MonotoneViolation> check_monotone(const MonotoneMap& m) {
    std::vector<MonotoneViolation> out;
    for (Face f : m.domain.faces) {
        long long vf = m.value_of(f);
        Face rest = m.domain.ground.full_mask() & ~f;
        for (int x : face_indices(rest)) {
            Face up = f | face_bit(x);
            if (!m.domain.contains(up)) continue;
            if (!m.codomain.le(vf, m.value_of(up))) out.push_back({f, up});
        }
    }
    return out;
}

MonotoneMap fn_minor(const MonotoneMap& m, Face sigma, MinorKind kind) {
    if (kind == MinorKind::link && !m.domain.contains(sigma))
        throw std::invalid_argument("link of a face not in the domain");
    Complex dom = minor(m.domain, sigma, kind);
    std::vector<long long> values;
    values.reserve(dom.faces.size());
    for (Face f : dom.faces)
        values.push_back(kind == MinorKind::link ? m.value_of(f | sigma) : m.value_of(f));
    return MonotoneMap{std::move(dom), m.codomain, std::move(values)};
}

std::pair<Complex, Complex> sublevel_pair(const MonotoneMap& m, long long p) {
    if (!m.codomain.valid_element(p)) throw std::out_of_range("sublevel at element outside codomain");
    if (!check_monotone(m).empty()) throw std::invalid_argument("sublevel pair of a non-monotone map");
    std::vector<Face> le, lt;
    for (std::size_t i = 0; i < m.domain.faces.size(); ++i) {
        if (m.codomain.le(m.values[i], p)) le.push_back(m.domain.faces[i]);
        if (m.codomain.lt(m.values[i], p)) lt.push_back(m.domain.faces[i]);
    }
    return {Complex{m.domain.ground, std::move(le)}, Complex{m.domain.ground, std::move(lt)}};
}

std::vector<long long> attained_values(const MonotoneMap& m) {
    std::vector<long long> vals = m.values;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

}  // namespace evasive
