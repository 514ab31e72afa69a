#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "evasive/broken_circuit.hpp"
#include "evasive/complex.hpp"
#include "evasive/semimatroid.hpp"
#include "evasive/tree.hpp"

namespace evasive {

// An elementary collapse removes a free face together with its unique proper
// cofacet.
struct CollapseStep {
    Face free_face;
    Face cofacet;
    bool operator==(const CollapseStep&) const = default;
};

using CollapseSequence = std::vector<CollapseStep>;

// A step whose free-face precondition fails during replay.
struct schedule_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Collapses the boolean interval [sigma, tau] out of the current complex;
// sigma must be nonempty, a proper subset of tau, and a free face of
// `current` with facet tau.
CollapseSequence collapse_interval(const Complex& current, Face sigma, Face tau);

// Replays a sequence step by step, validating every free-face precondition.
Complex replay_collapses(const Complex& start, const CollapseSequence& seq);

// Processes the boolean intervals of a valid set tree in leaf order,
// collapsing every non-singleton interval. The union of evasive faces must
// be downward closed. A final interval [∅, τ] is collapsed to the
// largest-index vertex of τ. Returns the schedule and the residual complex.
std::pair<CollapseSequence, Complex> morse_collapse(const SetTree& t, const MonotoneMap& f);

struct BcCollapse {
    CollapseSequence sequence;
    Complex residual;
    NbcComplex nbc;
};

// Theorem-level pipeline: the max-label rank tree collapses Δ onto the
// broken-circuit complex (onto a single vertex when that complex is void),
// and P(r; q, x) = Σ_{σ∈BC} (qx)^{|σ|}. Violations throw logic_error.
BcCollapse collapse_to_bc(const Semimatroid& s);

}  // namespace evasive
