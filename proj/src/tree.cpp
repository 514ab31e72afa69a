#include "evasive/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace evasive {

ElementTreePtr ElementTree::leaf(long long v) {
    auto t = std::make_unique<ElementTree>();
    t->kind = NodeKind::leaf;
    t->label = v;
    return t;
}

ElementTreePtr ElementTree::leaf_n() {
    auto t = std::make_unique<ElementTree>();
    t->kind = NodeKind::leaf_n;
    return t;
}

ElementTreePtr ElementTree::query(int x, ElementTreePtr in, ElementTreePtr out) {
    if (!in || !out) throw std::invalid_argument("query node needs both children");
    auto t = std::make_unique<ElementTree>();
    t->kind = NodeKind::query;
    t->element = x;
    t->in_child = std::move(in);
    t->out_child = std::move(out);
    return t;
}

ElementTreePtr ElementTree::clone() const {
    auto t = std::make_unique<ElementTree>();
    t->kind = kind;
    t->label = label;
    t->element = element;
    if (in_child) t->in_child = in_child->clone();
    if (out_child) t->out_child = out_child->clone();
    return t;
}

int ElementTree::depth() const {
    if (kind != NodeKind::query) return 0;
    return 1 + std::max(in_child->depth(), out_child->depth());
}

std::size_t ElementTree::node_count() const {
    if (kind != NodeKind::query) return 1;
    return 1 + in_child->node_count() + out_child->node_count();
}

SetTreePtr SetTree::leaf(long long v) {
    auto t = std::make_unique<SetTree>();
    t->kind = NodeKind::leaf;
    t->label = v;
    return t;
}

SetTreePtr SetTree::leaf_n() {
    auto t = std::make_unique<SetTree>();
    t->kind = NodeKind::leaf_n;
    return t;
}

SetTreePtr SetTree::query(Face q, SetTreePtr in, SetTreePtr out) {
    if (!in || !out) throw std::invalid_argument("query node needs both children");
    auto t = std::make_unique<SetTree>();
    t->kind = NodeKind::query;
    t->query_face = q;
    t->in_child = std::move(in);
    t->out_child = std::move(out);
    return t;
}

SetTreePtr SetTree::clone() const {
    auto t = std::make_unique<SetTree>();
    t->kind = kind;
    t->label = label;
    t->query_face = query_face;
    if (in_child) t->in_child = in_child->clone();
    if (out_child) t->out_child = out_child->clone();
    return t;
}

EvalResult evaluate(const ElementTree& t, Face sigma) {
    const ElementTree* n = &t;
    int steps = 0;
    while (n->kind == NodeKind::query) {
        n = (sigma & face_bit(n->element)) ? n->in_child.get() : n->out_child.get();
        ++steps;
    }
    return {n->kind == NodeKind::leaf_n, n->label, steps};
}

EvalResult evaluate(const SetTree& t, Face sigma) {
    const SetTree* n = &t;
    int steps = 0;
    while (n->kind == NodeKind::query) {
        n = face_subset(n->query_face, sigma) ? n->in_child.get() : n->out_child.get();
        ++steps;
    }
    return {n->kind == NodeKind::leaf_n, n->label, steps};
}

namespace {

// Structural recursion for element trees: the residual complex determines
// which node kinds are admissible. A value leaf requires the residual to be
// the full simplex over the remaining ground (this is what makes the walk
// characterization and the recursive definition agree).
bool element_structural(const ElementTree& t, const Complex& residual, Face remaining,
                        const MonotoneMap& f, Face in_set) {
    switch (t.kind) {
        case NodeKind::leaf_n:
            return residual.is_void();
        case NodeKind::leaf: {
            if (residual.is_void()) return false;
            if (!residual.contains(remaining)) return false;  // not the full simplex
            for (Face g : residual.faces)
                if (f.value_of(in_set | g) != t.label) return false;
            return true;
        }
        case NodeKind::query: {
            if (residual.is_void()) return false;
            Face xb = face_bit(t.element);
            if (!face_subset(xb, remaining)) return false;  // re-query or out of ground
            Face rest = remaining & ~xb;
            if (!residual.contains(xb)) {
                if (t.in_child->kind != NodeKind::leaf_n) return false;
                return element_structural(*t.out_child, minor(residual, xb, MinorKind::deletion),
                                          rest, f, in_set);
            }
            return element_structural(*t.in_child, minor(residual, xb, MinorKind::link), rest, f,
                                      in_set | xb) &&
                   element_structural(*t.out_child, minor(residual, xb, MinorKind::deletion), rest,
                                      f, in_set);
        }
    }
    return false;
}

template <typename Tree>
bool exhaustive_agreement(const Tree& t, const MonotoneMap& f, Face* witness) {
    Face full = f.domain.ground.full_mask();
    for (Face sigma = 0;; ++sigma) {
        EvalResult r = evaluate(t, sigma);
        bool member = f.domain.contains(sigma);
        bool ok = member ? (!r.is_n && r.value == f.value_of(sigma)) : r.is_n;
        if (!ok) {
            if (witness) *witness = sigma;
            return false;
        }
        if (sigma == full) break;
    }
    return true;
}

}  // namespace

bool check_element_tree(const ElementTree& t, const MonotoneMap& f, Face* witness) {
    if (!exhaustive_agreement(t, f, witness)) return false;
    if (!element_structural(t, f.domain, f.domain.ground.full_mask(), f, 0)) {
        if (witness) *witness = 0;
        return false;
    }
    return true;
}

namespace {

// Structural recursion for set trees. Value leaves must sit on a residual
// that is the full simplex on its own vertex set; combined with the
// exhaustive walk check this pins every leaf preimage inside Δ to a boolean
// interval.
bool set_structural(const SetTree& t, const Complex& residual, const MonotoneMap& f, Face in_set) {
    switch (t.kind) {
        case NodeKind::leaf_n:
            return residual.is_void();
        case NodeKind::leaf: {
            if (residual.is_void() || !residual.is_simplex()) return false;
            for (Face g : residual.faces)
                if (f.value_of(in_set | g) != t.label) return false;
            return true;
        }
        case NodeKind::query: {
            if (residual.is_void()) return false;
            Face q = t.query_face;
            if (q == 0 || (q & in_set) != 0) return false;
            if (!face_subset(q, f.domain.ground.full_mask())) return false;
            return set_structural(*t.in_child, minor(residual, q, MinorKind::link), f, in_set | q) &&
                   set_structural(*t.out_child, minor(residual, q, MinorKind::deletion), f, in_set);
        }
    }
    return false;
}

}  // namespace

bool check_set_tree(const SetTree& t, const MonotoneMap& f, Face* witness) {
    if (!exhaustive_agreement(t, f, witness)) return false;
    if (!set_structural(t, f.domain, f, 0)) {
        if (witness) *witness = 0;
        return false;
    }
    return true;
}

long long EvasiveProfile::count(long long p, int card) const {
    auto it = classes.find({p, card});
    return it == classes.end() ? 0 : static_cast<long long>(it->second.size());
}

std::vector<Face> EvasiveProfile::all_faces() const {
    std::vector<Face> out;
    for (auto& [k, fs] : classes) out.insert(out.end(), fs.begin(), fs.end());
    std::sort(out.begin(), out.end());
    return out;
}

EvasiveProfile evasive_profile(const ElementTree& t, const MonotoneMap& f) {
    Face w = 0;
    if (!check_element_tree(t, f, &w))
        throw std::invalid_argument("evasive profile of an invalid tree, witness " + face_str(w));
    int n = f.domain.ground.size();
    EvasiveProfile prof;
    for (Face sigma : f.domain.faces) {
        EvalResult r = evaluate(t, sigma);
        if (r.queries == n)
            prof.classes[{r.value, face_card(sigma)}].push_back(sigma);
    }
    return prof;
}

EvasiveProfile evasive_profile(const SetTree& t, const MonotoneMap& f) {
    EvasiveProfile prof;
    for (const LeafInterval& iv : interval_partition(t, f))
        if (iv.lower == iv.upper)
            prof.classes[{iv.leaf->label, face_card(iv.lower)}].push_back(iv.lower);
    return prof;
}

BivariatePolynomial evasive_polynomial(const EvasiveProfile& profile, const Poset& codomain) {
    if (!codomain.is_naturals())
        throw std::domain_error("evasive polynomial needs a map into the naturals");
    BivariatePolynomial p;
    for (auto& [key, faces] : profile.classes)
        p.add_term(key.second, static_cast<int>(key.first), static_cast<long long>(faces.size()));
    return p;
}

BivariatePolynomial evasive_polynomial(const ElementTree& t, const MonotoneMap& f) {
    return evasive_polynomial(evasive_profile(t, f), f.codomain);
}

ElementTreePtr graft(int x, ElementTreePtr in_tree, ElementTreePtr out_tree) {
    return ElementTree::query(x, std::move(in_tree), std::move(out_tree));
}

ElementTreePtr graft_nonface(int x, ElementTreePtr out_tree) {
    return ElementTree::query(x, ElementTree::leaf_n(), std::move(out_tree));
}

ElementTreePtr shift(const ElementTree& t) {
    auto c = t.clone();
    if (c->kind == NodeKind::leaf) {
        ++c->label;
    } else if (c->kind == NodeKind::query) {
        c->in_child = shift(*c->in_child);
        c->out_child = shift(*c->out_child);
    }
    return c;
}

SetTreePtr element_to_set_tree(const ElementTree& t) {
    switch (t.kind) {
        case NodeKind::leaf:
            return SetTree::leaf(t.label);
        case NodeKind::leaf_n:
            return SetTree::leaf_n();
        case NodeKind::query:
            return SetTree::query(face_bit(t.element), element_to_set_tree(*t.in_child),
                                  element_to_set_tree(*t.out_child));
    }
    throw std::logic_error("unreachable");
}

namespace {

void collect_intervals(const SetTree& t, const Complex& residual, Face in_set,
                       std::vector<LeafInterval>& out) {
    switch (t.kind) {
        case NodeKind::leaf_n:
            return;
        case NodeKind::leaf:
            out.push_back({&t, in_set, in_set | residual.vertex_mask()});
            return;
        case NodeKind::query:
            collect_intervals(*t.in_child, minor(residual, t.query_face, MinorKind::link),
                              in_set | t.query_face, out);
            collect_intervals(*t.out_child, minor(residual, t.query_face, MinorKind::deletion),
                              in_set, out);
            return;
    }
}

}  // namespace

std::vector<LeafInterval> interval_partition(const SetTree& t, const MonotoneMap& f) {
    Face w = 0;
    if (!check_set_tree(t, f, &w))
        throw std::invalid_argument("interval partition of an invalid set tree, witness " +
                                    face_str(w));
    std::vector<LeafInterval> out;
    collect_intervals(t, f.domain, 0, out);
    // the intervals partition Δ and f is constant on each
    std::size_t covered = 0;
    for (const LeafInterval& iv : out) {
        if (!face_subset(iv.lower, iv.upper)) throw std::logic_error("inverted interval");
        Face extra = iv.upper & ~iv.lower;
        covered += std::size_t{1} << face_card(extra);
        long long v = iv.leaf->label;
        for (Face sub = extra;; sub = (sub - 1) & extra) {
            if (f.value_of(iv.lower | sub) != v)
                throw std::logic_error("leaf value not constant on its interval");
            if (sub == 0) break;
        }
    }
    if (covered != f.domain.size()) throw std::logic_error("intervals do not partition the complex");
    return out;
}

namespace {

void collect_leaves(const SetTree& t, std::vector<const SetTree*>& out) {
    if (t.kind == NodeKind::query) {
        collect_leaves(*t.in_child, out);
        collect_leaves(*t.out_child, out);
    } else {
        out.push_back(&t);
    }
}

}  // namespace

std::vector<const SetTree*> leaf_order(const SetTree& t) {
    std::vector<const SetTree*> out;
    collect_leaves(t, out);
    return out;
}

namespace {

ElementTreePtr random_tree_rec(const MonotoneMap& f, const Complex& residual, Face remaining,
                               Face in_set, std::mt19937_64& rng) {
    if (residual.is_void()) return ElementTree::leaf_n();
    bool can_stop = residual.contains(remaining);
    if (can_stop) {
        long long v = f.value_of(in_set);
        for (Face g : residual.faces)
            if (f.value_of(in_set | g) != v) { can_stop = false; break; }
        if (can_stop && (remaining == 0 || (rng() & 1))) return ElementTree::leaf(v);
    }
    auto rest = face_indices(remaining);
    int x = rest[rng() % rest.size()];
    Face xb = face_bit(x);
    if (!residual.contains(xb))
        return graft_nonface(x, random_tree_rec(f, minor(residual, xb, MinorKind::deletion),
                                                remaining & ~xb, in_set, rng));
    return graft(x,
                 random_tree_rec(f, minor(residual, xb, MinorKind::link), remaining & ~xb,
                                 in_set | xb, rng),
                 random_tree_rec(f, minor(residual, xb, MinorKind::deletion), remaining & ~xb,
                                 in_set, rng));
}

ElementTreePtr full_depth_rec(const MonotoneMap& f, const Complex& residual, Face remaining,
                              Face in_set) {
    if (remaining == 0)
        return residual.is_void() ? ElementTree::leaf_n() : ElementTree::leaf(f.value_of(in_set));
    if (residual.is_void()) return ElementTree::leaf_n();
    int x = face_indices(remaining)[0];
    Face xb = face_bit(x);
    if (!residual.contains(xb)) {
        // keep querying on the N side too so every path has full length
        return graft_nonface(x, full_depth_rec(f, minor(residual, xb, MinorKind::deletion),
                                               remaining & ~xb, in_set));
    }
    return graft(x,
                 full_depth_rec(f, minor(residual, xb, MinorKind::link), remaining & ~xb,
                                in_set | xb),
                 full_depth_rec(f, minor(residual, xb, MinorKind::deletion), remaining & ~xb,
                                in_set));
}

}  // namespace

ElementTreePtr random_element_tree(const MonotoneMap& f, std::mt19937_64& rng) {
    return random_tree_rec(f, f.domain, f.domain.ground.full_mask(), 0, rng);
}

ElementTreePtr full_depth_tree(const MonotoneMap& f) {
    return full_depth_rec(f, f.domain, f.domain.ground.full_mask(), 0);
}

}  // namespace evasive
