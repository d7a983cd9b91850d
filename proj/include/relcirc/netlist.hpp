#ifndef RELCIRC_NETLIST_HPP
#define RELCIRC_NETLIST_HPP

#include <string>
#include <vector>

#include "relcirc/affine.hpp"
#include "relcirc/term.hpp"

namespace relcirc {

struct NetElement {
    enum class Kind { R, L, C, V, I, AM, VM, CV, CI, Port };
    Kind kind;
    std::string name;
    std::string node_a;
    std::string node_b;
    Rat value = Rat(0); // R/L/C/V/I
    std::string ctrl;   // CV/CI: controlling meter name
    Rat gain = Rat(1);  // CV/CI
};

// Node/element circuit description. Element orientation conventions:
//   R/L/C/AM/VM sit with their left terminal on node_a, right on node_b;
//   V/I/CV/CI sit with their left terminal on node_b (the - node), so that
//   φ(node_a) - φ(node_b) equals the source value.
struct Netlist {
    std::vector<std::string> nodes;        // first-use order
    std::vector<NetElement> elements;      // non-port elements, declaration order
    std::vector<NetElement> ports;         // declaration order
    std::vector<std::string> info_outputs; // meters not consumed by a controlled source

    int node_index(const std::string& name) const;
};

Netlist parse_netlist(const std::string& text);

// Compiles to a term of sort E^p -> E^p · N^q: one left wire per port at its
// negative node, one right wire per port at its positive node, then the
// exported meter readings.
TermPtr netlist_to_term(const Netlist& nl);

// Independent constraint-system oracle with the same boundary layout.
AffineRelation netlist_to_relation_direct(const Netlist& nl);

} // namespace relcirc

#endif
