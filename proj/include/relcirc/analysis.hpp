#ifndef RELCIRC_ANALYSIS_HPP
#define RELCIRC_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "relcirc/affine.hpp"
#include "relcirc/build.hpp"
#include "relcirc/semantics.hpp"
#include "relcirc/term.hpp"

namespace relcirc {

// ---- impedance calculus ------------------------------------------------------

// payloads are 1 -> 1 GAA terms relating port current to voltage difference

// copy ; (c1 | c2) ; add  — impedances in series add pointwise
TermPtr series_box(const TermPtr& c1, const TermPtr& c2);
// coadd ; (c1 | c2) ; cocopy — currents split, voltage shared
TermPtr parallel_box(const TermPtr& c1, const TermPtr& c2);
// scalar(-1) ; c ; scalar(-1) — the payload of the cap/cup-reversed box
TermPtr reverse_box(const TermPtr& c);
// 0 -> 0 relation of the closed loop of box{c}
AffineRelation close_box(const TermPtr& c);

// ---- plugging ----------------------------------------------------------------

enum class PlugSide { Domain, Codomain };
enum class PlugMode { SourceOff, MeterDiscard };

// SourceOff composes Zero into an info input; MeterDiscard composes Discard
// onto an info output. index counts boundary wires.
TermPtr plug(const TermPtr& t, PlugSide side, int index, PlugMode mode);

// ---- one-ports ---------------------------------------------------------------

// {(i, v)} of an E -> E term: left potential pinned to 0, reads (current,
// right potential). Port invariants are verified first.
AffineRelation one_port_relation(const TermPtr& t);

// GAA payload denoting a given 1 -> 1 relation (case analysis on the five
// shapes of affine subsets of k^2)
TermPtr synthesize_box(const AffineRelation& z);

struct TheveninForm {
    enum class Case { SeriesVR, CurrentSrc, EmptyCircuit, NonCanonical };
    Case kind;
    RatFunc v0;                      // SeriesVR
    RatFunc r;                       // SeriesVR
    RatFunc i0;                      // CurrentSrc
    std::optional<AffineRelation> z; // NonCanonical
    std::string json() const;
    // circuit realizing the canonical form (not defined for NonCanonical)
    TermPtr to_term() const;
};

// Classification of a one-port built from resistors, independent sources,
// junctions and open ends; rejects other generators.
TheveninForm thevenin(const TermPtr& t);

// csource I in parallel with resistor R (R > 0) into the equivalent
// vsource-in-series-with-resistor form
TermPtr source_transform(const TermPtr& t);

// ---- measurement -------------------------------------------------------------

struct MeasurementResult {
    enum class Kind { Empty, UniquePoint, Underdetermined };
    Kind kind;
    std::vector<RatFunc> values; // UniquePoint
    int dim = 0;                 // Underdetermined
    AffineRelation relation;
    std::string json() const;
};

// t : ε -> Info^n closed circuit with meter outputs
MeasurementResult measure(const TermPtr& t);

struct CheckReport {
    bool inclusion_holds;
    bool equality_holds;
    AffineRelation lhs;
    AffineRelation rhs;
    std::vector<AffineRelation::Functionality> functional_witness;
    std::string json() const;
};

// joint behavior vs. the product of one-at-a-time measurements
CheckReport check_independent_measurement(const TermPtr& t);
// joint behavior vs. the sum of one-source-at-a-time behaviors
CheckReport check_superposition(const TermPtr& t);

struct PortInvariants {
    bool relativity;
    bool conservation;
};
// all-electric boundary required
PortInvariants check_port_invariants(const TermPtr& t);

// ---- gadgets ----------------------------------------------------------------

// Circuit realizations of the GAA generators using only basic elements,
// meters and controlled sources. Names: copy discard add zero cocopy
// codiscard coadd cozero one antipode scalar coscalar cup cap vccs.
TermPtr gadget(const std::string& name, std::optional<RatFunc> param = std::nullopt);
std::vector<std::string> gadget_names();
// the relation gadget(name) must denote
AffineRelation gadget_reference(const std::string& name, std::optional<RatFunc> param = std::nullopt);

} // namespace relcirc

#endif
