#pragma once

#include <map>
#include <memory>
#include <random>
#include <vector>

#include "evasive/complex.hpp"
#include "evasive/polynomial.hpp"
#include "evasive/poset.hpp"

namespace evasive {

// Binary query trees. Element trees query single ground elements, set trees
// query whole faces; both carry poset-valued leaves plus the N leaf marking
// sets outside the complex. The in child is taken when the queried
// element/face is contained in the input set.
enum class NodeKind { leaf, leaf_n, query };

struct ElementTree;
using ElementTreePtr = std::unique_ptr<ElementTree>;

struct ElementTree {
    NodeKind kind = NodeKind::leaf;
    long long label = 0;  // leaf only
    int element = -1;     // query only
    ElementTreePtr in_child;
    ElementTreePtr out_child;

    static ElementTreePtr leaf(long long v);
    static ElementTreePtr leaf_n();
    static ElementTreePtr query(int x, ElementTreePtr in, ElementTreePtr out);
    ElementTreePtr clone() const;
    int depth() const;
    std::size_t node_count() const;
};

struct SetTree;
using SetTreePtr = std::unique_ptr<SetTree>;

struct SetTree {
    NodeKind kind = NodeKind::leaf;
    long long label = 0;
    Face query_face = 0;
    SetTreePtr in_child;
    SetTreePtr out_child;

    static SetTreePtr leaf(long long v);
    static SetTreePtr leaf_n();
    static SetTreePtr query(Face q, SetTreePtr in, SetTreePtr out);
    SetTreePtr clone() const;
};

struct EvalResult {
    bool is_n = false;
    long long value = 0;
    int queries = 0;  // path length walked
    bool operator==(const EvalResult&) const = default;
};

EvalResult evaluate(const ElementTree& t, Face sigma);
EvalResult evaluate(const SetTree& t, Face sigma);

// Exhaustive + structural validity: the walk returns f(σ) on Δ and N off Δ,
// and the tree follows the recursive element-tree shape (leaves sit on full
// residual simplexes, nonface queries carry an N in-child).
bool check_element_tree(const ElementTree& t, const MonotoneMap& f, Face* witness = nullptr);
// Set-tree validity: exhaustive walk agreement plus structural shape (query
// faces nonempty and disjoint from the accumulated in-set, value leaves on
// simplex residuals, N leaves on void residuals).
bool check_set_tree(const SetTree& t, const MonotoneMap& f, Face* witness = nullptr);

// Evasive faces grouped by (value, cardinality).
struct EvasiveProfile {
    std::map<std::pair<long long, int>, std::vector<Face>> classes;

    long long count(long long p, int card) const;
    std::vector<Face> all_faces() const;
    bool operator==(const EvasiveProfile&) const = default;
};

EvasiveProfile evasive_profile(const ElementTree& t, const MonotoneMap& f);
EvasiveProfile evasive_profile(const SetTree& t, const MonotoneMap& f);

// E(T, f; q, x) = Σ |Ev_{T,j,i}| q^i x^j with i the cardinality and j the
// value; requires codomain ℕ.
BivariatePolynomial evasive_polynomial(const EvasiveProfile& profile, const Poset& codomain);
BivariatePolynomial evasive_polynomial(const ElementTree& t, const MonotoneMap& f);

// Tree combinators.
ElementTreePtr graft(int x, ElementTreePtr in_tree, ElementTreePtr out_tree);
ElementTreePtr graft_nonface(int x, ElementTreePtr out_tree);
// increments every non-N leaf label
ElementTreePtr shift(const ElementTree& t);

SetTreePtr element_to_set_tree(const ElementTree& t);

// Boolean interval of one non-N leaf: the faces of Δ landing on it are
// exactly {σ : lower ⊆ σ ⊆ upper}.
struct LeafInterval {
    const SetTree* leaf;
    Face lower;
    Face upper;
};

// Intervals of all non-N leaves in leaf order; requires a valid set tree.
std::vector<LeafInterval> interval_partition(const SetTree& t, const MonotoneMap& f);

// Depth-first leaf order with the in branch visited first.
std::vector<const SetTree*> leaf_order(const SetTree& t);

// Random valid element tree for f (seeded; stops early on constant full
// residuals with probability 1/2). For property tests.
ElementTreePtr random_element_tree(const MonotoneMap& f, std::mt19937_64& rng);
// Tree querying every element on every path; all faces of Δ are evasive.
ElementTreePtr full_depth_tree(const MonotoneMap& f);

}  // namespace evasive
