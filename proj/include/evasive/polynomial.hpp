#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace evasive {

// Integer-coefficient polynomial in two formal variables, keyed by exponent
// pair. No zero coefficients are stored. The variable roles depend on use:
// (x, y) for Tutte polynomials, (q, x) for evasive/Poincaré polynomials.
struct BivariatePolynomial {
    std::map<std::pair<int, int>, long long> coeffs;

    static BivariatePolynomial zero() { return {}; }
    static BivariatePolynomial constant(long long c);
    static BivariatePolynomial monomial(int e1, int e2, long long c = 1);

    bool is_zero() const { return coeffs.empty(); }
    long long coeff(int e1, int e2) const;
    void add_term(int e1, int e2, long long c);

    BivariatePolynomial operator+(const BivariatePolynomial& o) const;
    BivariatePolynomial operator-(const BivariatePolynomial& o) const;
    BivariatePolynomial operator*(const BivariatePolynomial& o) const;
    BivariatePolynomial scaled(long long c) const;
    bool operator==(const BivariatePolynomial&) const = default;

    // Terms sorted by descending major-variable degree, then the other.
    // major_second selects which of (e1, e2) is the major variable.
    std::string str(const std::string& v1, const std::string& v2, bool major_second) const;
    std::string str_xy() const { return str("x", "y", false); }
    std::string str_qx() const { return str("q", "x", true); }
};

// Dense univariate integer polynomial, c[i] the coefficient of t^i.
struct UniPoly {
    std::vector<long long> c;

    static UniPoly zero() { return {}; }
    static UniPoly constant(long long v);
    int degree() const;  // -1 for the zero polynomial
    long long coeff(int i) const;
    void trim();
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    bool operator==(const UniPoly&) const = default;
};

// Element of the fraction field of integer polynomials in one variable.
// Only what the closed-form Tutte substitutions need.
struct UniFraction {
    UniPoly num;
    UniPoly den;  // never zero

    static UniFraction from_poly(UniPoly p);
    UniFraction operator+(const UniFraction& o) const;
    UniFraction operator*(const UniFraction& o) const;
    // exact division; throws std::domain_error when a nonzero remainder is left
    UniPoly to_polynomial() const;
};

// Evaluates p at the fraction value (Horner over the fraction field).
UniFraction substitute(const UniPoly& p, const UniFraction& value);

}  // namespace evasive
