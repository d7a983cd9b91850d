#include "relcirc/analysis.hpp"

namespace relcirc {

namespace {

// loop with C on the forward leg and a voltmeter on the return leg; the
// reading equals the source voltage of C
TermPtr probe_loop(const TermPtr& c) {
    Pipeline p{SortWord{}};
    p.apply(cup_e(), 0);       // [E E]
    p.apply(c, 0);             // [E E]
    p.apply(voltmeter(), 1);   // [E N E]
    p.move(1, 0);              // [N E E]
    p.apply(cap_e(), 1);       // [N]
    return p.finish();
}

TermPtr gadget_zero() { return probe_loop(vsource(rat(0))); }
TermPtr gadget_one() { return probe_loop(vsource(rat(1))); }

TermPtr gadget_codiscard() { return probe_loop(seq(open_right(), open_left())); }

TermPtr gadget_discard() {
    Pipeline p{word_info(1)};
    p.apply(open_left(), 1);   // [N E]
    p.apply(ctrl_vsource(), 0); // [E]
    p.apply(open_right(), 0);  // []
    return p.finish();
}

TermPtr gadget_antipode() {
    // controlled source and voltmeter in series around one loop
    Pipeline p{word_info(1)};
    p.apply(cup_e(), 1);        // [N E E]
    p.apply(ctrl_vsource(), 0); // [E E]
    p.apply(voltmeter(), 0);    // [N E E]
    p.apply(cap_e(), 1);        // [N]
    return p.finish();
}

TermPtr gadget_add() {
    // two controlled voltage sources in series, one voltmeter on the return leg
    Pipeline p{word_info(2)};
    p.apply(cup_e(), 2);        // [N N E E]
    p.apply(ctrl_vsource(), 1); // [N E E]
    p.apply(ctrl_vsource(), 0); // [E E]
    p.apply(voltmeter(), 1);    // [E N E]
    p.move(1, 0);               // [N E E]
    p.apply(cap_e(), 1);        // [N]
    return p.finish();
}

TermPtr gadget_coadd() {
    // one controlled source, two voltmeters in series on the return leg
    Pipeline p{word_info(1)};
    p.apply(cup_e(), 1);        // [N E E]
    p.apply(ctrl_vsource(), 0); // [E E]
    p.apply(voltmeter(), 1);    // [E N E]
    p.apply(voltmeter(), 2);    // [E N N E]
    p.move(1, 0);               // [N E N E]
    p.move(2, 1);               // [N N E E]
    p.apply(cap_e(), 2);        // [N N]
    return p.finish();
}

TermPtr gadget_copy() {
    // controlled current source driving a loop threaded through two ammeters
    Pipeline p{word_info(1)};
    p.apply(cup_e(), 1);        // [N E E]
    p.apply(ctrl_csource(), 0); // [E E]
    p.apply(ammeter(), 0);      // [N E E]
    p.apply(ammeter(), 1);      // [N N E E]
    p.apply(cap_e(), 2);        // [N N]
    return p.finish();
}

TermPtr gadget_cocopy() {
    // two controlled current sources in one loop force equal inputs
    Pipeline p{word_info(2)};
    p.apply(cup_e(), 2);        // [N N E E]
    p.apply(ctrl_csource(), 1); // [N E E]
    p.apply(ctrl_csource(), 0); // [E E]
    p.apply(ammeter(), 0);      // [N E E]
    p.apply(cap_e(), 1);        // [N]
    return p.finish();
}

TermPtr gadget_cozero() {
    // controlled voltage source closed by a plain wire
    Pipeline p{word_info(1)};
    p.apply(cup_e(), 1);        // [N E E]
    p.apply(ctrl_vsource(), 0); // [E E]
    p.apply(cap_e(), 0);        // []
    return p.finish();
}

// {(a, z·a)} for an impedance element z : E -> E (resistor or inductor):
// current a is driven through z, a voltmeter bridges it
TermPtr scale_by_element(const TermPtr& z) {
    Pipeline p{word_info(1)};
    p.apply(cup_e(), 1);        // [N E E]
    p.apply(ctrl_csource(), 0); // [E E]
    p.apply(junction(), 0);     // [E E E]
    p.apply(z, 0);              // [E E E]
    p.apply(voltmeter(), 1);    // [E N E E]
    p.move(1, 0);               // [N E E E]
    p.apply(cojunction(), 1);   // [N E E]
    p.apply(cap_e(), 1);        // [N]
    return p.finish();
}

TermPtr gadget_scalar(const RatFunc& k);

TermPtr scalar_const(const Rat& c) {
    if (c >= 0) return scale_by_element(resistor(c));
    return seq(gadget_antipode(), scale_by_element(resistor(Rat(-c))));
}

// Horner: p = c0 + x·q
TermPtr scalar_poly(const Poly& p) {
    if (p.is_constant()) return scalar_const(p.constant_value());
    std::vector<Rat> shifted(p.coeffs().begin() + 1, p.coeffs().end());
    TermPtr tail = seq(scale_by_element(inductor(rat(1))), scalar_poly(Poly(std::move(shifted))));
    return seq(seq(gadget_copy(), par(scalar_const(p.coeff(0)), tail)), gadget_add());
}

TermPtr gadget_cup() { return seq(gadget_codiscard(), gadget_copy()); }
TermPtr gadget_cap() { return seq(gadget_cocopy(), gadget_discard()); }

// converse of a 1 -> 1 info gadget by cup/cap conjugation
TermPtr transpose_gadget(const TermPtr& g) {
    TermPtr t = par(gadget_cup(), id_n());
    t = seq(t, par(id_n(), par(g, id_n())));
    return seq(t, par(id_n(), gadget_cap()));
}

TermPtr gadget_scalar(const RatFunc& k) {
    TermPtr num = scalar_poly(k.num());
    if (k.den() == Poly::one()) return num;
    return seq(num, transpose_gadget(scalar_poly(k.den())));
}

TermPtr gadget_vccs() {
    // first port measured, second port driven
    Pipeline p{word_electric(2)};
    p.apply(voltmeter(), 0);    // [N E E]
    p.move(0, 1);               // [E N E]
    p.apply(ctrl_csource(), 1); // [E E]
    return p.finish();
}

} // namespace

std::vector<std::string> gadget_names() {
    return {"copy", "discard", "add",  "zero",     "cocopy", "codiscard", "coadd", "cozero",
            "one",  "antipode", "scalar", "coscalar", "cup",    "cap",       "vccs"};
}

TermPtr gadget(const std::string& name, std::optional<RatFunc> param) {
    if (name == "copy") return gadget_copy();
    if (name == "discard") return gadget_discard();
    if (name == "add") return gadget_add();
    if (name == "zero") return gadget_zero();
    if (name == "cocopy") return gadget_cocopy();
    if (name == "codiscard") return gadget_codiscard();
    if (name == "coadd") return gadget_coadd();
    if (name == "cozero") return gadget_cozero();
    if (name == "one") return gadget_one();
    if (name == "antipode") return gadget_antipode();
    if (name == "cup") return gadget_cup();
    if (name == "cap") return gadget_cap();
    if (name == "vccs") return gadget_vccs();
    if (name == "scalar" || name == "coscalar") {
        if (!param) throw Error(Errc::UnknownGadget, name + " needs a parameter");
        TermPtr s = gadget_scalar(*param);
        return name == "scalar" ? s : transpose_gadget(s);
    }
    throw Error(Errc::UnknownGadget, "unknown gadget '" + name + "'");
}

AffineRelation gadget_reference(const std::string& name, std::optional<RatFunc> param) {
    if (name == "copy") return denote(copy_gen());
    if (name == "discard") return denote(discard_gen());
    if (name == "add") return denote(add_gen());
    if (name == "zero") return denote(zero_gen());
    if (name == "cocopy") return denote(cocopy_gen());
    if (name == "codiscard") return denote(codiscard_gen());
    if (name == "coadd") return denote(coadd_gen());
    if (name == "cozero") return denote(cozero_gen());
    if (name == "one") return denote(one_gen());
    if (name == "antipode") return denote(scalar(-RatFunc::one()));
    if (name == "cup") return denote(cup_n());
    if (name == "cap") return denote(cap_n());
    if (name == "scalar") {
        if (!param) throw Error(Errc::UnknownGadget, "scalar needs a parameter");
        return denote(scalar(*param));
    }
    if (name == "coscalar") {
        if (!param) throw Error(Errc::UnknownGadget, "coscalar needs a parameter");
        return denote(coscalar(*param));
    }
    if (name == "vccs") {
        // ((φ1,i1),(φ3,i3)) -> ((φ2,i2),(φ4,i4)): i1 = i2 = 0, i3 = i4 = φ2 - φ1
        Mat rows;
        Vec rhs;
        auto row = [&](std::initializer_list<std::pair<int, int>> entries) {
            Vec r(8, RatFunc::zero());
            for (auto [idx, sign] : entries) r[idx] = RatFunc(rat(sign));
            rows.push_back(std::move(r));
            rhs.push_back(RatFunc::zero());
        };
        row({{1, 1}});
        row({{5, 1}});
        row({{3, 1}, {4, -1}, {0, 1}});
        row({{7, 1}, {4, -1}, {0, 1}});
        return AffineRelation::from_constraints(rows, rhs, 4, 4);
    }
    throw Error(Errc::UnknownGadget, "unknown gadget '" + name + "'");
}

} // namespace relcirc
