#pragma once

#include <vector>

#include "evasive/complex.hpp"
#include "evasive/polynomial.hpp"
#include "evasive/semimatroid.hpp"

namespace evasive {

// Minimal dependent faces and their broken circuits σ − min σ under a linear
// order on the ground set.
struct CircuitSet {
    std::vector<Face> circuits;
    std::vector<Face> broken;
};

// order: permutation of ground indices, position = priority (order[0] is the
// smallest element). Defaults to the index order.
CircuitSet circuits(const Semimatroid& s, const std::vector<int>* order = nullptr);

struct NbcComplex {
    Complex complex;  // faces of Δ containing no broken circuit
    std::vector<int> order;
};

NbcComplex bc_complex(const Semimatroid& s, const std::vector<int>* order = nullptr);

// f(Δ, q) = Σ_σ q^{|σ|}, keys (q, ·) with zero x-exponent.
BivariatePolynomial f_polynomial(const Complex& c);

// nbc bases σ such that every x ∈ σ has some smaller y with σ−x+y still nbc.
std::vector<Face> critical_nbc(const Semimatroid& s, const std::vector<int>* order = nullptr);

// Vertex-decomposability certificate for BC(C) built by peeling the maximal
// element; asserts del/lk identities along the way and validates the result
// against the complex. Uses the ground-set index order.
VdCert bc_shedding_order(const Semimatroid& s);

}  // namespace evasive
