#ifndef RELCIRC_TERM_HPP
#define RELCIRC_TERM_HPP

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "relcirc/ratfunc.hpp"

namespace relcirc {

// Wire sorts of the colored prop: an electric wire denotes a (potential,
// current) pair, an info wire a single field value.
enum class Sort { Electric, Info };

using SortWord = std::vector<Sort>;

inline int scalar_width(Sort s) { return s == Sort::Electric ? 2 : 1; }
int scalar_width(const SortWord& w);
SortWord word_electric(int n);
SortWord word_info(int n);
SortWord word_concat(const SortWord& a, const SortWord& b);
std::string word_str(const SortWord& w);

enum class GenKind {
    // GAA generators (info wires)
    Copy,
    Discard,
    Scalar,
    Add,
    Zero,
    One,
    CoCopy,
    CoDiscard,
    CoScalar,
    CoAdd,
    CoZero,
    // circuit elements (electric wires)
    Resistor,
    VSource,
    CSource,
    Inductor,
    Capacitor,
    Junction,
    CoJunction,
    OpenRight, // counit: E -> nothing
    OpenLeft,  // unit: nothing -> E
    // meters, controlled sources, impedance boxes
    Voltmeter,
    Ammeter,
    CtrlVSource,
    CtrlCSource,
    ImpedanceBox,
};

const char* gen_name(GenKind kind);

class Term;
using TermPtr = std::shared_ptr<const Term>;

struct Generator {
    GenKind kind;
    RatFunc param;  // Scalar/CoScalar: any element of Q(x); R/V/I/L/C: constant
    int box_m = 0;  // ImpedanceBox info arity (domain)
    int box_n = 0;  // ImpedanceBox info arity (codomain)
    TermPtr payload; // ImpedanceBox GAA payload
};

class Term {
public:
    struct Gen {
        Generator g;
    };
    struct Id {
        SortWord word;
    };
    struct SwapT {
        Sort first;
        Sort second;
    };
    struct Seq {
        TermPtr lhs;
        TermPtr rhs;
    };
    struct Par {
        TermPtr lhs;
        TermPtr rhs;
    };
    using Node = std::variant<Gen, Id, SwapT, Seq, Par>;

    explicit Term(Node n) : node(std::move(n)) {}
    Node node;
};

bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }

// ---- constructors ----------------------------------------------------------

TermPtr gen(Generator g);
TermPtr id(SortWord w);
TermPtr id_e();
TermPtr id_n();
TermPtr swap_gen(Sort a, Sort b);
TermPtr seq(TermPtr a, TermPtr b);
TermPtr par(TermPtr a, TermPtr b);
TermPtr seq_all(const std::vector<TermPtr>& ts);  // left-associated; empty -> Id(ε)
TermPtr par_all(const std::vector<TermPtr>& ts);

TermPtr copy_gen();
TermPtr discard_gen();
TermPtr scalar(RatFunc k);
TermPtr add_gen();
TermPtr zero_gen();
TermPtr one_gen();
TermPtr cocopy_gen();
TermPtr codiscard_gen();
TermPtr coscalar(RatFunc k);
TermPtr coadd_gen();
TermPtr cozero_gen();

TermPtr resistor(Rat r);   // r >= 0
TermPtr vsource(Rat v);
TermPtr csource(Rat i);
TermPtr inductor(Rat l);   // l > 0
TermPtr capacitor(Rat c);  // c > 0
TermPtr junction();
TermPtr cojunction();
TermPtr open_right();
TermPtr open_left();

TermPtr voltmeter();
TermPtr ammeter();
TermPtr ctrl_vsource();
TermPtr ctrl_csource();
TermPtr impedance_box(TermPtr payload, int m = 0, int n = 0);

// ---- sorting ---------------------------------------------------------------

struct Sorting {
    SortWord dom;
    SortWord cod;
};

// Throws SortMismatch/IllFormedBox with the offending path.
Sorting sort_check(const TermPtr& t);

// True when the term uses only GAA generators, Id, Swap, Seq, Par on info
// wires (the legal content of an impedance box).
bool is_gaa_only(const TermPtr& t);

// Number of generator leaves (Id/Swap excluded).
int count_generators(const TermPtr& t);

// Applies f to every generator leaf.
void for_each_generator(const TermPtr& t, const std::function<void(const Generator&)>& f);

} // namespace relcirc

#endif
