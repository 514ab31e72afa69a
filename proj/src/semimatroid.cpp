#include "evasive/semimatroid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "subsm.hpp"

namespace evasive {

using detail::SubSm;
using detail::sub_view;

long long Semimatroid::rank_of(Face f) const {
    auto it = std::lower_bound(complex.faces.begin(), complex.faces.end(), f);
    if (it == complex.faces.end() || *it != f)
        throw std::invalid_argument("rank of a face outside the complex: " + face_str(f));
    return rank[it - complex.faces.begin()];
}

long long Semimatroid::srank() const {
    long long r = 0;
    for (long long v : rank) r = std::max(r, v);
    return r;
}

Semimatroid make_semimatroid(Complex complex, std::vector<long long> rank) {
    if (complex.is_void()) throw std::invalid_argument("semimatroid complex must be nonvoid");
    if (rank.size() != complex.faces.size())
        throw std::invalid_argument("rank table not total on faces");
    return Semimatroid{std::move(complex), std::move(rank)};
}

std::vector<AxiomViolation> check_axioms(const Semimatroid& s) {
    std::vector<AxiomViolation> out;
    const auto& faces = s.complex.faces;
    auto r = [&](Face f) { return s.rank_of(f); };
    for (Face f : faces) {
        if (r(f) < 0 || r(f) > face_card(f))
            out.push_back({1, f, 0, "rank outside [0, |σ|]"});
    }
    for (Face a : faces) {
        for (Face b : faces) {
            if (face_subset(a, b) && r(a) > r(b)) out.push_back({2, a, b, "rank not monotone"});
            if (s.complex.contains(a | b) && r(a) + r(b) < r(a | b) + r(a & b))
                out.push_back({3, a, b, "rank not submodular"});
            if (r(a) == r(a & b) && !s.complex.contains(a | b))
                out.push_back({4, a, b, "union escapes the complex"});
            if (r(a) < r(b)) {
                bool found = false;
                for (int y : face_indices(b & ~a))
                    if (s.complex.contains(a | face_bit(y))) { found = true; break; }
                if (!found) out.push_back({5, a, b, "no augmenting element"});
            }
        }
    }
    return out;
}

std::string to_string(ElementClass c) {
    switch (c) {
        case ElementClass::nonface: return "nonface";
        case ElementClass::loop: return "loop";
        case ElementClass::coloop: return "coloop";
        case ElementClass::ordinary: return "ordinary";
    }
    return "?";
}

std::string to_string(TreeTarget t) {
    switch (t) {
        case TreeTarget::rank: return "rank";
        case TreeTarget::nullity: return "nullity";
        case TreeTarget::constant: return "constant";
    }
    return "?";
}

std::vector<Face> bases(const Semimatroid& s) {
    long long rc = s.srank();
    std::vector<Face> out;
    for (std::size_t i = 0; i < s.complex.faces.size(); ++i)
        if (s.rank[i] == rc && face_card(s.complex.faces[i]) == rc)
            out.push_back(s.complex.faces[i]);
    return out;
}

namespace {

BivariatePolynomial tutte_rec(const SubSm& s, PivotStrategy strategy) {
    if (s.active == 0) return BivariatePolynomial::constant(1);
    int e = s.pick(strategy);
    switch (s.classify(e)) {
        case ElementClass::nonface:
            return tutte_rec(s.remove(e), strategy);
        case ElementClass::loop:
            return BivariatePolynomial::monomial(0, 1) * tutte_rec(s.remove(e), strategy);
        case ElementClass::coloop:
            return BivariatePolynomial::monomial(1, 0) * tutte_rec(s.contract(e), strategy);
        case ElementClass::ordinary:
            return tutte_rec(s.remove(e), strategy) + tutte_rec(s.contract(e), strategy);
    }
    throw std::logic_error("unreachable");
}

ElementTreePtr build_rec(const SubSm& s, TreeTarget target, PivotStrategy strategy) {
    if (s.active == 0) return ElementTree::leaf(0);
    int e = s.pick(strategy);
    ElementClass cls = s.classify(e);
    if (cls == ElementClass::nonface)
        return graft_nonface(e, build_rec(s.remove(e), target, strategy));
    switch (target) {
        case TreeTarget::rank:
            switch (cls) {
                case ElementClass::loop:
                    return build_rec(s.remove(e), target, strategy);
                case ElementClass::coloop: {
                    auto in = build_rec(s.contract(e), target, strategy);
                    auto out = in->clone();
                    return graft(e, shift(*in), std::move(out));
                }
                default: {  // ordinary
                    auto in = build_rec(s.contract(e), target, strategy);
                    return graft(e, shift(*in), build_rec(s.remove(e), target, strategy));
                }
            }
        case TreeTarget::nullity:
            switch (cls) {
                case ElementClass::loop: {
                    auto out = build_rec(s.remove(e), target, strategy);
                    auto in = shift(*out);
                    return graft(e, std::move(in), std::move(out));
                }
                case ElementClass::coloop:
                    return build_rec(s.remove(e), target, strategy);
                default:
                    return graft(e, build_rec(s.contract(e), target, strategy),
                                 build_rec(s.remove(e), target, strategy));
            }
        case TreeTarget::constant:
            switch (cls) {
                case ElementClass::loop:
                case ElementClass::coloop:
                    return build_rec(s.remove(e), target, strategy);
                default:
                    return graft(e, build_rec(s.contract(e), target, strategy),
                                 build_rec(s.remove(e), target, strategy));
            }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

ElementClass classify(const Semimatroid& s, int e) {
    if (e < 0 || e >= s.ground().size()) throw std::out_of_range("element out of ground set");
    return sub_view(s).classify(e);
}

Semimatroid minor(const Semimatroid& s, int e, SmMinor kind) {
    if (e < 0 || e >= s.ground().size()) throw std::out_of_range("element out of ground set");
    if (kind == SmMinor::contraction && !s.complex.contains(face_bit(e)))
        throw std::invalid_argument("contraction of a nonface element");
    SubSm sub = kind == SmMinor::deletion ? sub_view(s).remove(e) : sub_view(s).contract(e);
    // reindex: drop label e, shift higher indices down
    std::vector<std::string> labels;
    for (int i = 0; i < s.ground().size(); ++i)
        if (i != e) labels.push_back(s.ground().labels[i]);
    Face low = face_bit(e) - 1;
    std::vector<Face> faces;
    faces.reserve(sub.faces.size());
    for (Face f : sub.faces) faces.push_back((f & low) | ((f & ~low & ~face_bit(e)) >> 1));
    return Semimatroid{complex_from_faces(GroundSet(std::move(labels)), std::move(faces)),
                       std::move(sub.rank)};
}

BivariatePolynomial tutte_sum(const Semimatroid& s) {
    long long rc = s.srank();
    BivariatePolynomial xm1 = BivariatePolynomial::monomial(1, 0) - BivariatePolynomial::constant(1);
    BivariatePolynomial ym1 = BivariatePolynomial::monomial(0, 1) - BivariatePolynomial::constant(1);
    // small powers, cached
    std::map<std::pair<int, int>, BivariatePolynomial> pow_cache;
    auto power = [&](const BivariatePolynomial& b, int which, int k) {
        auto key = std::make_pair(which, k);
        if (auto it = pow_cache.find(key); it != pow_cache.end()) return it->second;
        BivariatePolynomial acc = BivariatePolynomial::constant(1);
        for (int i = 0; i < k; ++i) acc = acc * b;
        pow_cache[key] = acc;
        return acc;
    };
    BivariatePolynomial total;
    for (std::size_t i = 0; i < s.complex.faces.size(); ++i) {
        int corank = static_cast<int>(rc - s.rank[i]);
        int nullity = face_card(s.complex.faces[i]) - static_cast<int>(s.rank[i]);
        total = total + power(xm1, 0, corank) * power(ym1, 1, nullity);
    }
    return total;
}

BivariatePolynomial tutte_recurrence(const Semimatroid& s, PivotStrategy strategy) {
    return tutte_rec(sub_view(s), strategy);
}

MonotoneMap rank_map(const Semimatroid& s) {
    MonotoneMap m{s.complex, Poset::naturals(), s.rank};
    if (!check_monotone(m).empty()) throw std::logic_error("rank function not monotone");
    return m;
}

MonotoneMap nullity_map(const Semimatroid& s) {
    std::vector<long long> values;
    values.reserve(s.rank.size());
    for (std::size_t i = 0; i < s.rank.size(); ++i)
        values.push_back(face_card(s.complex.faces[i]) - s.rank[i]);
    MonotoneMap m{s.complex, Poset::naturals(), std::move(values)};
    if (!check_monotone(m).empty()) throw std::logic_error("nullity function not monotone");
    return m;
}

ElementTreePtr build_tree(const Semimatroid& s, TreeTarget target, PivotStrategy strategy) {
    return build_rec(sub_view(s), target, strategy);
}

BivariatePolynomial poincare_closed(const Semimatroid& s, TreeTarget target) {
    int rc = static_cast<int>(s.srank());
    BivariatePolynomial tutte = tutte_sum(s);
    switch (target) {
        case TreeTarget::constant:
            return BivariatePolynomial::monomial(rc, 0, tutte.coeff(0, 0));
        case TreeTarget::rank: {
            // T(x, 0) as a univariate polynomial in x
            UniPoly u;
            for (auto& [e, c] : tutte.coeffs)
                if (e.second == 0) {
                    if (e.first >= static_cast<int>(u.c.size())) u.c.resize(e.first + 1, 0);
                    u.c[e.first] = c;
                }
            // t^{r_C} · U((t+1)/t) over the fraction field, t = qx
            UniPoly t1{{1, 1}};  // t + 1
            UniPoly t{{0, 1}};
            UniFraction val{t1, t};
            UniFraction res = substitute(u, val);
            UniPoly trc = UniPoly::constant(1);
            for (int i = 0; i < rc; ++i) trc = trc * t;
            res.num = res.num * trc;
            UniPoly p = res.to_polynomial();
            BivariatePolynomial out;
            for (int i = 0; i <= p.degree(); ++i) out.add_term(i, i, p.coeff(i));
            return out;
        }
        case TreeTarget::nullity: {
            // T(0, y) with y = t+1, then multiply by q^{r_C}
            UniPoly v;
            for (auto& [e, c] : tutte.coeffs)
                if (e.first == 0) {
                    if (e.second >= static_cast<int>(v.c.size())) v.c.resize(e.second + 1, 0);
                    v.c[e.second] = c;
                }
            UniFraction val = UniFraction::from_poly(UniPoly{{1, 1}});
            UniPoly p = substitute(v, val).to_polynomial();
            BivariatePolynomial out;
            for (int i = 0; i <= p.degree(); ++i) out.add_term(rc + i, i, p.coeff(i));
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<std::string> check_matroid_axioms(const Matroid& m) {
    std::vector<std::string> out;
    Face full = m.ground.full_mask();
    if (m.rank.size() != (std::size_t{1} << m.ground.size()))
        return {"rank table does not cover all subsets"};
    if (m.rank[0] != 0) out.push_back("r(∅) != 0");
    for (Face f = 0;; ++f) {
        for (int x : face_indices(full & ~f)) {
            long long d = m.rank[f | face_bit(x)] - m.rank[f];
            if (d < 0 || d > 1)
                out.push_back("unit increase fails at " + face_str(f) + " + " + std::to_string(x));
        }
        if (f == full) break;
    }
    for (Face a = 0;; ++a) {
        for (Face b = a;; ++b) {
            if (m.rank[a] + m.rank[b] < m.rank[a | b] + m.rank[a & b])
                out.push_back("submodularity fails at " + face_str(a) + ", " + face_str(b));
            if (b == full) break;
        }
        if (a == full) break;
    }
    return out;
}

Matroid matroid_closure(const Semimatroid& s) {
    Face full = s.ground().full_mask();
    std::vector<long long> rank(std::size_t{1} << s.ground().size(), 0);
    for (Face f = 0;; ++f) {
        long long best = 0;
        for (std::size_t i = 0; i < s.complex.faces.size(); ++i)
            if (face_subset(s.complex.faces[i], f)) best = std::max(best, s.rank[i]);
        rank[f] = best;
        if (f == full) break;
    }
    return Matroid{s.ground(), std::move(rank)};
}

bool check_spi(const Complex& complex, const Matroid& m, std::string* witness) {
    if (complex.ground.size() != m.ground.size())
        throw std::invalid_argument("complex and matroid over different ground sets");
    Face full = complex.ground.full_mask();
    for (Face sigma : complex.faces) {
        for (int x : face_indices(full & ~sigma)) {
            Face up = sigma | face_bit(x);
            if (m.rank_of(up) > m.rank_of(sigma)) {
                if (!complex.contains(up)) {
                    if (witness)
                        *witness = "pseudo-independence fails at " + face_str(sigma) + " + " +
                                   std::to_string(x);
                    return false;
                }
            } else if (complex.contains(up)) {
                // strong condition: x must be a cone point of lk_sigma
                Complex lk = minor(complex, sigma, MinorKind::link);
                for (Face tau : lk.faces) {
                    if ((tau & face_bit(x)) != 0) continue;
                    if (!lk.contains(tau | face_bit(x))) {
                        if (witness)
                            *witness = "cone point fails at " + face_str(sigma) + ", x=" +
                                       std::to_string(x) + ", τ=" + face_str(tau);
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

Semimatroid semimatroid_from_spi(const Matroid& m, const Complex& complex) {
    if (complex.is_void()) throw std::invalid_argument("SPI complex must be nonvoid");
    std::string w;
    if (!check_spi(complex, m, &w))
        throw std::invalid_argument("not a strong pseudo-independence complex: " + w);
    std::vector<long long> rank;
    rank.reserve(complex.faces.size());
    for (Face f : complex.faces) rank.push_back(m.rank_of(f));
    return Semimatroid{complex, std::move(rank)};
}

}  // namespace evasive
