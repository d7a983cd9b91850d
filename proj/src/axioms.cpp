#include "relcirc/axioms.hpp"

#include "relcirc/build.hpp"
#include "relcirc/semantics.hpp"

namespace relcirc {

std::vector<AxiomInstance> axiom_suite() {
    std::vector<AxiomInstance> out;
    auto law = [&](std::string name, TermPtr lhs, TermPtr rhs) {
        out.push_back({std::move(name), std::move(lhs), std::move(rhs), false});
    };
    TermPtr swap_nn = swap_gen(Sort::Info, Sort::Info);
    TermPtr idn = id_n();
    TermPtr id0 = id(SortWord{});

    // commutativity
    law("comm: black monoid", seq(swap_nn, cocopy_gen()), cocopy_gen());
    law("comm: black comonoid", seq(copy_gen(), swap_nn), copy_gen());
    law("comm: white monoid", seq(swap_nn, add_gen()), add_gen());
    law("comm: white comonoid", seq(coadd_gen(), swap_nn), coadd_gen());

    // associativity and units
    law("assoc: black monoid", seq(par(cocopy_gen(), idn), cocopy_gen()),
        seq(par(idn, cocopy_gen()), cocopy_gen()));
    law("assoc: white monoid", seq(par(add_gen(), idn), add_gen()),
        seq(par(idn, add_gen()), add_gen()));
    law("unit: black monoid", seq(par(codiscard_gen(), idn), cocopy_gen()), idn);
    law("unit: white monoid", seq(par(zero_gen(), idn), add_gen()), idn);
    law("counit: black comonoid", seq(copy_gen(), par(discard_gen(), idn)), idn);
    law("counit: white comonoid", seq(coadd_gen(), par(cozero_gen(), idn)), idn);

    // bialgebra between the two colours
    law("bialgebra: add;copy",
        seq(add_gen(), copy_gen()),
        seq(seq(par(copy_gen(), copy_gen()), par(par(idn, swap_nn), idn)),
            par(add_gen(), add_gen())));
    law("bialgebra: add;discard", seq(add_gen(), discard_gen()),
        par(discard_gen(), discard_gen()));
    law("bialgebra: zero;copy", seq(zero_gen(), copy_gen()), par(zero_gen(), zero_gen()));
    law("bialgebra: zero;discard", seq(zero_gen(), discard_gen()), id0);

    // extra special Frobenius, black
    law("frobenius: black left", seq(par(copy_gen(), idn), par(idn, cocopy_gen())),
        seq(cocopy_gen(), copy_gen()));
    law("frobenius: black right", seq(par(idn, copy_gen()), par(cocopy_gen(), idn)),
        seq(cocopy_gen(), copy_gen()));
    law("special: black", seq(copy_gen(), cocopy_gen()), idn);
    law("extra: black", seq(codiscard_gen(), discard_gen()), id0);

    // extra special Frobenius, white
    law("frobenius: white left", seq(par(coadd_gen(), idn), par(idn, add_gen())),
        seq(add_gen(), coadd_gen()));
    law("frobenius: white right", seq(par(idn, coadd_gen()), par(add_gen(), idn)),
        seq(add_gen(), coadd_gen()));
    law("special: white", seq(coadd_gen(), add_gen()), idn);
    law("extra: white", seq(zero_gen(), cozero_gen()), id0);

    // invertible scalars
    std::vector<std::pair<std::string, RatFunc>> ks = {
        {"2", RatFunc(rat(2))},
        {"-1", -RatFunc::one()},
        {"x", RatFunc::x()},
        {"(x^2+1)/x", RatFunc(Poly(std::vector<Rat>{rat(1), rat(0), rat(1)}), Poly::x())},
    };
    for (const auto& [label, k] : ks) {
        law("scalar inverse: scalar(" + label + ");coscalar(" + label + ")",
            seq(scalar(k), coscalar(k)), idn);
        law("scalar inverse: coscalar(" + label + ");scalar(" + label + ")",
            seq(coscalar(k), scalar(k)), idn);
    }

    // cup/cap colour change via -1
    RatFunc minus_one = -RatFunc::one();
    law("cup colour change", seq(zero_gen(), coadd_gen()),
        seq(cup_n(), par(idn, scalar(minus_one))));
    law("cap colour change", seq(add_gen(), cozero_gen()),
        seq(par(idn, scalar(minus_one)), cap_n()));

    // affine equations
    law("affine (dup): one;copy", seq(one_gen(), copy_gen()), par(one_gen(), one_gen()));
    law("affine (del): one;discard", seq(one_gen(), discard_gen()), id0);
    law("affine (empty): one;cozero", seq(one_gen(), cozero_gen()),
        par(seq(one_gen(), cozero_gen()), seq(one_gen(), cozero_gen())));

    // the single generating inequation of the ordered theory
    out.push_back({"order: zero ≤ codiscard", zero_gen(), codiscard_gen(), true});
    return out;
}

std::vector<AxiomResult> run_axiom_suite() {
    std::vector<AxiomResult> out;
    for (const AxiomInstance& ax : axiom_suite()) {
        bool pass;
        if (ax.ordered)
            pass = denote(ax.rhs).contains(denote(ax.lhs));
        else
            pass = denote(ax.lhs) == denote(ax.rhs);
        out.push_back({ax.name, pass});
    }
    return out;
}

} // namespace relcirc
