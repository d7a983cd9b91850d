#ifndef RELCIRC_BUILD_HPP
#define RELCIRC_BUILD_HPP

#include "relcirc/term.hpp"

namespace relcirc {

// Wire-bending vocabulary. The electric cup/cap are circuit-level
// (junctions + open ends), the info ones are the black GAA cup/cap;
// both satisfy the snake equations, so trace_last is a genuine feedback.
TermPtr cup_e();                 // 0 -> E·E   {(φ,i),(φ,-i)}
TermPtr cap_e();                 // E·E -> 0
TermPtr cup_n();                 // 0 -> N·N   {(a,a)}
TermPtr cap_n();                 // N·N -> 0
TermPtr cup_sort(Sort s);
TermPtr cap_sort(Sort s);
TermPtr cup_word(const SortWord& w); // 0 -> w·w, wire k paired with wire |w|+k
TermPtr cap_word(const SortWord& w);

// perm[j] = input position of the wire landing at output position j.
TermPtr permutation_term(const SortWord& from, const std::vector<int>& perm);

// t : A·s -> B·s  ==>  A -> B (last wire fed back)
TermPtr trace_last(const TermPtr& t);

// e : A -> B  ==>  0 -> A·B; each A-side output carries the mirror of the
// input wire (electric mirror negates the current coordinate).
TermPtr bend_inputs(const TermPtr& e);

// cap/cup conjugation of a one-port; reverses element orientation
TermPtr reverse_oneport(const TermPtr& c);

// junc ; (a | b) ; cojunc
TermPtr parallel_circuit(const TermPtr& a, const TermPtr& b);

// closed loop of a one-port: 0 -> 0
TermPtr loop_close(const TermPtr& c);

// node spider 0 -> E^degree: all potentials equal, currents sum to zero
TermPtr spider(int degree);

// GAA affine idioms
TermPtr const_info(const RatFunc& v); // 0 -> N  {(•,v)}
TermPtr shift_info(const RatFunc& c); // N -> N  {(a, a+c)}
TermPtr co_const(const RatFunc& v);   // N -> 0  {(v,•)}
TermPtr empty_payload();              // N -> N  denoting ∅

// Stage-by-stage term builder: keeps a frontier of open output wires on the
// right and composes stages onto chosen positions.
class Pipeline {
public:
    explicit Pipeline(SortWord dom);

    const SortWord& frontier() const { return frontier_; }
    int width() const { return static_cast<int>(frontier_.size()); }

    // stage : w -> w' applied at frontier position `at` (w must match there)
    void apply(const TermPtr& stage, int at);
    // move the wire at `from` to position `to` by adjacent swaps
    void move(int from, int to);
    // reorder the whole frontier; perm[j] = current position landing at j
    void permute(const std::vector<int>& perm);

    TermPtr finish() const { return term_; }

private:
    TermPtr term_;
    SortWord frontier_;
};

} // namespace relcirc

#endif
