// classify.hpp - exact predicates on speed measures: complete regularity,
// boundary kinds, the Feller-Dynkin property and Ito-diffusion membership.
// Tail conditions are decided symbolically on the polynomial pieces.
#pragma once

#include <stdexcept>

#include "speedsim/measures.hpp"

namespace speedsim {

enum class BoundaryKind { open_inaccessible, reflecting_instantaneous, reflecting_sticky, absorbing };

const char* to_string(BoundaryKind k);

// Locally finite on all of J, i.e. every closed boundary weight is finite.
bool is_completely_regular(const SpeedMeasure& m);

// Closed endpoint: weight inf -> absorbing, 0 -> reflecting_instantaneous,
// positive finite -> reflecting_sticky.  Open endpoint: open_inaccessible.
BoundaryKind boundary_kind(const SpeedMeasure& m, Side side);

// Thrown when a tail test is not symbolically decidable for the given
// representation (e.g. no density piece reaches the infinite endpoint).
struct TailUndecidable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// True iff J is bounded or every infinite endpoint is natural, i.e.
// int^inf |x| m(dx) diverges (decided on the tail pieces).
bool has_feller_dynkin(const SpeedMeasure& m);

// Requires J open (throws std::domain_error otherwise).  True iff m has no
// atoms, its density is strictly positive between any two interior points,
// and finite open endpoints satisfy the divergence condition
// int^r |r - x| f(x) dx = inf.
bool is_ito_diffusion(const SpeedMeasure& m);

}  // namespace speedsim
