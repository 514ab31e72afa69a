#include "evasive/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace evasive {

BivariatePolynomial BivariatePolynomial::constant(long long c) { return monomial(0, 0, c); }

BivariatePolynomial BivariatePolynomial::monomial(int e1, int e2, long long c) {
    BivariatePolynomial p;
    p.add_term(e1, e2, c);
    return p;
}

long long BivariatePolynomial::coeff(int e1, int e2) const {
    auto it = coeffs.find({e1, e2});
    return it == coeffs.end() ? 0 : it->second;
}

void BivariatePolynomial::add_term(int e1, int e2, long long c) {
    if (c == 0) return;
    if (e1 < 0 || e2 < 0) throw std::domain_error("negative exponent in polynomial");
    auto [it, inserted] = coeffs.try_emplace({e1, e2}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs.erase(it);
    }
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
    BivariatePolynomial r = *this;
    for (auto& [e, c] : o.coeffs) r.add_term(e.first, e.second, c);
    return r;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const {
    BivariatePolynomial r = *this;
    for (auto& [e, c] : o.coeffs) r.add_term(e.first, e.second, -c);
    return r;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
    BivariatePolynomial r;
    for (auto& [e1, c1] : coeffs)
        for (auto& [e2, c2] : o.coeffs)
            r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return r;
}

BivariatePolynomial BivariatePolynomial::scaled(long long c) const {
    BivariatePolynomial r;
    for (auto& [e, v] : coeffs) r.add_term(e.first, e.second, v * c);
    return r;
}

std::string BivariatePolynomial::str(const std::string& v1, const std::string& v2,
                                     bool major_second) const {
    if (coeffs.empty()) return "0";
    struct Term { int e1, e2; long long c; };
    std::vector<Term> terms;
    for (auto& [e, c] : coeffs) terms.push_back({e.first, e.second, c});
    std::sort(terms.begin(), terms.end(), [major_second](const Term& a, const Term& b) {
        int amaj = major_second ? a.e2 : a.e1, bmaj = major_second ? b.e2 : b.e1;
        int amin = major_second ? a.e1 : a.e2, bmin = major_second ? b.e1 : b.e2;
        return amaj != bmaj ? amaj > bmaj : amin > bmin;
    });
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms) {
        long long c = t.c;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            c = c < 0 ? -c : c;
        }
        first = false;
        std::vector<std::string> parts;
        auto var = [](const std::string& v, int e) {
            return e == 1 ? v : v + "^" + std::to_string(e);
        };
        if (c != 1 || (t.e1 == 0 && t.e2 == 0)) parts.push_back(std::to_string(c));
        if (t.e1 > 0) parts.push_back(var(v1, t.e1));
        if (t.e2 > 0) parts.push_back(var(v2, t.e2));
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) os << "*";
            os << parts[i];
        }
    }
    return os.str();
}

UniPoly UniPoly::constant(long long v) {
    UniPoly p;
    if (v != 0) p.c = {v};
    return p;
}

int UniPoly::degree() const { return static_cast<int>(c.size()) - 1; }

long long UniPoly::coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : 0;
}

void UniPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = coeff(i) + o.coeff(i);
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (c.empty() || o.c.empty()) return {};
    UniPoly r;
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
}

UniFraction UniFraction::from_poly(UniPoly p) {
    return UniFraction{std::move(p), UniPoly::constant(1)};
}

UniFraction UniFraction::operator+(const UniFraction& o) const {
    return UniFraction{num * o.den + o.num * den, den * o.den};
}

UniFraction UniFraction::operator*(const UniFraction& o) const {
    return UniFraction{num * o.num, den * o.den};
}

UniPoly UniFraction::to_polynomial() const {
    if (den.c.empty()) throw std::domain_error("fraction with zero denominator");
    // long division num / den, exactness required
    UniPoly rem = num;
    rem.trim();
    UniPoly quot;
    UniPoly d = den;
    d.trim();
    if (rem.degree() >= d.degree()) quot.c.assign(rem.degree() - d.degree() + 1, 0);
    while (rem.degree() >= d.degree() && !rem.c.empty()) {
        long long lead = rem.c.back();
        long long dl = d.c.back();
        if (lead % dl != 0)
            throw std::domain_error("non-polynomial remainder in exact substitution");
        long long f = lead / dl;
        int shift = rem.degree() - d.degree();
        quot.c[shift] = f;
        for (int i = 0; i <= d.degree(); ++i) rem.c[i + shift] -= f * d.c[i];
        rem.trim();
    }
    if (!rem.c.empty()) throw std::domain_error("non-polynomial remainder in exact substitution");
    quot.trim();
    return quot;
}

UniFraction substitute(const UniPoly& p, const UniFraction& value) {
    UniFraction acc = UniFraction::from_poly(UniPoly::zero());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * value + UniFraction::from_poly(UniPoly::constant(p.coeff(i)));
    }
    return acc;
}

}  // namespace evasive
