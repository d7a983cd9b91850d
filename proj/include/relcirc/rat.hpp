#ifndef RELCIRC_RAT_HPP
#define RELCIRC_RAT_HPP

#include <gmpxx.h>
#include <string>

#include "relcirc/errors.hpp"

namespace relcirc {

// Exact rational scalar. mpq_class arithmetic keeps results canonical as long
// as inputs are; the helpers below are the only places raw values enter.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw Error(Errc::ZeroDenominator, "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "5", "-3/2", "7/14".
Rat rat_parse(const std::string& text);

inline std::string rat_str(const Rat& q) { return q.get_str(); }

} // namespace relcirc

#endif
