#ifndef RELCIRC_SEMANTICS_HPP
#define RELCIRC_SEMANTICS_HPP

#include "relcirc/affine.hpp"
#include "relcirc/term.hpp"

namespace relcirc {

// Denotation of a sort-correct term as an affine relation over Q(x).
// An electric wire contributes the coordinate pair (potential, current),
// an info wire a single coordinate.
AffineRelation denote(const TermPtr& t);

// Element-wise denote; independent elements may be evaluated concurrently.
std::vector<AffineRelation> denote_many(const std::vector<TermPtr>& ts);

} // namespace relcirc

#endif
