#pragma once

#include <string>
#include <vector>

#include "evasive/complex.hpp"
#include "evasive/polynomial.hpp"
#include "evasive/poset.hpp"
#include "evasive/tree.hpp"

namespace evasive {

// (S, Δ, r): a nonvoid complex with a rank function satisfying the five
// semimatroid axioms. rank is stored parallel to complex.faces.
struct Semimatroid {
    Complex complex;
    std::vector<long long> rank;

    long long rank_of(Face f) const;
    // rank of the semimatroid: the common size of all bases
    long long srank() const;
    const GroundSet& ground() const { return complex.ground; }
    bool operator==(const Semimatroid&) const = default;
};

Semimatroid make_semimatroid(Complex complex, std::vector<long long> rank);

struct AxiomViolation {
    int axiom;  // 1..5
    Face sigma;
    Face tau;
    std::string detail;
};

// Exhaustively checks axioms 1-2 on all faces and 3-5 on all face pairs.
std::vector<AxiomViolation> check_axioms(const Semimatroid& s);

enum class ElementClass { nonface, loop, coloop, ordinary };
std::string to_string(ElementClass c);

ElementClass classify(const Semimatroid& s, int e);

// independent faces of full rank
std::vector<Face> bases(const Semimatroid& s);

enum class SmMinor { deletion, contraction };

// Deletion restricts; contraction passes to the link with
// r'(σ) = r(σ+e) − r(e). Ground sets shrink and reindex.
Semimatroid minor(const Semimatroid& s, int e, SmMinor kind);

// Corank-nullity sum Σ (x−1)^{r_C−r(σ)} (y−1)^{|σ|−r(σ)}; keys are (x, y).
BivariatePolynomial tutte_sum(const Semimatroid& s);

enum class PivotStrategy { any_ordinary, min_label, max_label };

// Deletion-contraction recurrence; agrees with tutte_sum for every strategy.
BivariatePolynomial tutte_recurrence(const Semimatroid& s, PivotStrategy strategy);

MonotoneMap rank_map(const Semimatroid& s);
MonotoneMap nullity_map(const Semimatroid& s);

enum class TreeTarget { rank, nullity, constant };
std::string to_string(TreeTarget t);

// Optimal element decision tree for the chosen target, built by the
// loop/coloop/nonface/ordinary case recursion.
ElementTreePtr build_tree(const Semimatroid& s, TreeTarget target, PivotStrategy strategy);

// Closed forms: rank → (qx)^{r_C} T_C((qx+1)/(qx), 0), nullity →
// q^{r_C} T_C(0, qx+1), constant → T_C(0,0) q^{r_C}. Computed through the
// exact univariate fraction layer; keys are (q, x).
BivariatePolynomial poincare_closed(const Semimatroid& s, TreeTarget target);

// Matroid given by a full rank table over all subsets of the ground set,
// indexed by mask.
struct Matroid {
    GroundSet ground;
    std::vector<long long> rank;

    long long rank_of(Face f) const { return rank[f]; }
    bool operator==(const Matroid&) const = default;
};

// Checks r(∅)=0, unit increase and submodularity; returns human-readable
// violations.
std::vector<std::string> check_matroid_axioms(const Matroid& m);

// r'(σ) = max { r(τ) : τ ⊆ σ, τ ∈ Δ }
Matroid matroid_closure(const Semimatroid& s);

// Pseudo-independence plus the strong cone-point condition, exhaustively.
bool check_spi(const Complex& complex, const Matroid& m, std::string* witness = nullptr);

// Restricts a matroid rank to an SPI complex; requires check_spi.
Semimatroid semimatroid_from_spi(const Matroid& m, const Complex& complex);

}  // namespace evasive
