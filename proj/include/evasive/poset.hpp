#pragma once

#include <string>
#include <utility>
#include <vector>

#include "evasive/complex.hpp"

namespace evasive {

// Either the chain ℕ or a finite poset given by an explicit relation table.
// Elements are addressed by id: the value itself for ℕ, the element index
// for explicit posets.
struct Poset {
    enum class Kind { naturals, table };
    Kind kind = Kind::naturals;
    std::vector<std::string> elements;
    std::vector<std::vector<bool>> le_matrix;

    static Poset naturals() { return Poset{}; }
    // Checks reflexivity, antisymmetry and transitivity.
    static Poset explicit_poset(std::vector<std::string> elements,
                                std::vector<std::vector<bool>> le);

    bool is_naturals() const { return kind == Kind::naturals; }
    bool valid_element(long long p) const;
    bool le(long long a, long long b) const;
    bool lt(long long a, long long b) const { return a != b && le(a, b); }
    std::string element_name(long long p) const;
    bool operator==(const Poset&) const = default;
};

// Total order-preserving function from the faces of a complex into a poset.
// Values are stored per face, parallel to domain.faces.
struct MonotoneMap {
    Complex domain;
    Poset codomain;
    std::vector<long long> values;

    long long value_of(Face f) const;
};

MonotoneMap make_monotone_map(Complex domain, Poset codomain, std::vector<long long> values);

struct MonotoneViolation {
    Face sigma;  // covering pair sigma ⊂ tau with f(sigma) ≰ f(tau)
    Face tau;
};

std::vector<MonotoneViolation> check_monotone(const MonotoneMap& m);

// f_{/σ}(τ) = f(σ∪τ) on the link, f_{\σ}(τ) = f(τ) on the deletion.
MonotoneMap fn_minor(const MonotoneMap& m, Face sigma, MinorKind kind);

// (Δ_{≤p}, Δ_{<p}); requires m monotone and p in the codomain.
std::pair<Complex, Complex> sublevel_pair(const MonotoneMap& m, long long p);

// Distinct values attained by m, ascending.
std::vector<long long> attained_values(const MonotoneMap& m);

}  // namespace evasive
