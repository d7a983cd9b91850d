#ifndef RELCIRC_AXIOMS_HPP
#define RELCIRC_AXIOMS_HPP

#include <string>
#include <vector>

#include "relcirc/term.hpp"

namespace relcirc {

struct AxiomInstance {
    std::string name;
    TermPtr lhs;
    TermPtr rhs;
    bool ordered = false; // when set, the law is lhs ≤ rhs instead of lhs = rhs
};

// The built-in GLA/GAA (in)equational theory instances.
std::vector<AxiomInstance> axiom_suite();

struct AxiomResult {
    std::string name;
    bool pass;
};

std::vector<AxiomResult> run_axiom_suite();

} // namespace relcirc

#endif
