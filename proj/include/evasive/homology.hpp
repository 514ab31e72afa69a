#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "evasive/complex.hpp"
#include "evasive/polynomial.hpp"
#include "evasive/poset.hpp"

namespace evasive {

// Free ranks and torsion invariant factors of reduced relative homology,
// per degree d ≥ -1 (augmented chains; degree -1 carries the empty face).
struct BettiTable {
    std::map<int, long long> betti;
    std::map<int, std::vector<mpz_class>> torsion;

    long long betti_at(int d) const {
        auto it = betti.find(d);
        return it == betti.end() ? 0 : it->second;
    }
    bool torsion_free() const { return torsion.empty(); }
    long long total_rank() const;
    bool operator==(const BettiTable&) const = default;
};

// Augmented relative chains of a pair (A, B): per degree the ordered face
// basis of A \ B and the integer boundary matrix into the degree below.
struct RelativeChainComplex {
    std::map<int, std::vector<Face>> basis;
    std::map<int, std::vector<std::vector<mpz_class>>> boundary;
};

RelativeChainComplex relative_chain_complex(const Complex& a, const Complex& b);

// Invariant factors d_1 | d_2 | ... of an integer matrix (positive, ones included).
std::vector<mpz_class> smith_normal_form(std::vector<std::vector<mpz_class>> m);

// Exact reduced relative homology of the pair (A, B) over Z. B must be a
// subcomplex of A (B may be void). Generators are the faces of A \ B,
// including the empty face in degree -1.
BettiTable relative_betti(const Complex& a, const Complex& b);

// P(f; q, x) = Σ_j Σ_d β̃_d(Δ_{≤j}, Δ_{<j}) x^j q^{d+1}, for f into ℕ.
// Throws if any pair carries torsion.
BivariatePolynomial poincare_from_homology(const MonotoneMap& f);

}  // namespace evasive
