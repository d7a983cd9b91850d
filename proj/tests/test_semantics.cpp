#include <doctest.h>

#include "gen.hpp"
#include "relcirc/axioms.hpp"
#include "relcirc/build.hpp"
#include "relcirc/semantics.hpp"

using namespace relcirc;

namespace {

RatFunc rf(long v) { return RatFunc(rat(v)); }

Vec vec(std::initializer_list<long> values) {
    Vec out;
    for (long v : values) out.push_back(rf(v));
    return out;
}

Mat mat(std::initializer_list<std::initializer_list<long>> rows) {
    Mat out;
    for (const auto& r : rows) out.push_back(vec(r));
    return out;
}

} // namespace

TEST_SUITE("semantics") {

TEST_CASE("resistor denotes the Ohm comprehension") {
    AffineRelation r = denote(resistor(rat(2)));
    CHECK(r == AffineRelation::span(vec({0, 0, 0, 0}), mat({{1, 0, 1, 0}, {0, 1, 2, 1}}), 2, 2));
}

TEST_CASE("series source and resistor eliminate the middle node") {
    AffineRelation r = denote(seq(vsource(rat(5)), resistor(rat(2))));
    // φ3 - φ1 = 5 + 2i, current through
    CHECK(r == AffineRelation::span(vec({0, 0, 5, 0}), mat({{1, 0, 1, 0}, {0, 1, 2, 1}}), 2, 2));
}

TEST_CASE("sources, inductor, capacitor, junction, opens") {
    AffineRelation cs = denote(csource(rat(3)));
    CHECK(cs == AffineRelation::span(vec({0, 3, 0, 3}), mat({{1, 0, 0, 0}, {0, 0, 1, 0}}), 2, 2));

    RatFunc lx = RatFunc(rat(2)) * RatFunc::x();
    AffineRelation ind = denote(inductor(rat(2)));
    CHECK(ind.member({rf(0), RatFunc::one(), lx, RatFunc::one()}));
    CHECK(!ind.member({rf(0), RatFunc::one(), rf(1), RatFunc::one()}));

    AffineRelation cap = denote(capacitor(rat(3)));
    // i = 3x(φ2-φ1): point φ1=0, φ2=1, i=3x
    RatFunc c3x = RatFunc(rat(3)) * RatFunc::x();
    CHECK(cap.member({rf(0), c3x, rf(1), c3x}));

    AffineRelation j = denote(junction());
    CHECK(j.member({rf(1), rf(5), rf(1), rf(2), rf(1), rf(3)}));
    CHECK(!j.member({rf(1), rf(5), rf(1), rf(2), rf(1), rf(4)}));
    CHECK(!j.member({rf(1), rf(5), rf(2), rf(2), rf(1), rf(3)}));

    AffineRelation open = denote(open_right());
    CHECK(open.member({rf(7), rf(0)}));
    CHECK(!open.member({rf(7), rf(1)}));
}

TEST_CASE("meters and controlled sources") {
    AffineRelation vm = denote(voltmeter());
    // (φ1,i1),(b,φ2,i2): i1 = i2 = 0, b = φ2 - φ1
    CHECK(vm.member({rf(1), rf(0), rf(4), rf(5), rf(0)}));
    CHECK(!vm.member({rf(1), rf(1), rf(4), rf(5), rf(1)}));

    AffineRelation am = denote(ammeter());
    CHECK(am.member({rf(3), rf(2), rf(2), rf(3), rf(2)}));
    CHECK(!am.member({rf(3), rf(2), rf(2), rf(4), rf(2)}));

    AffineRelation cvs = denote(ctrl_vsource());
    CHECK(cvs.member({rf(7), rf(1), rf(2), rf(8), rf(2)}));
    AffineRelation ccs = denote(ctrl_csource());
    CHECK(ccs.member({rf(7), rf(1), rf(7), rf(9), rf(7)}));
    CHECK(!ccs.member({rf(7), rf(1), rf(6), rf(9), rf(7)}));
}

TEST_CASE("parallel disagreeing sources denote the empty relation") {
    CHECK(denote(parallel_circuit(vsource(rat(1)), vsource(rat(2)))).is_empty());
    TermPtr loop = loop_close(parallel_circuit(vsource(rat(1)), vsource(rat(2))));
    CHECK(denote(loop).is_empty());
    // agreeing sources collapse to a single source
    CHECK(denote(parallel_circuit(vsource(rat(2)), vsource(rat(2)))) == denote(vsource(rat(2))));
}

TEST_CASE("impedance boxes recover the element table") {
    // wire = box{scalar(0)}
    CHECK(denote(impedance_box(scalar(rf(0)))) == denote(id_e()));
    // resistor = box{scalar(R)}
    CHECK(denote(impedance_box(scalar(rf(7)))) == denote(resistor(rat(7))));
    // inductor = box{scalar(Lx)}
    CHECK(denote(impedance_box(scalar(RatFunc(rat(2)) * RatFunc::x()))) ==
          denote(inductor(rat(2))));
    // capacitor = box{coscalar(Cx)}
    CHECK(denote(impedance_box(coscalar(RatFunc(rat(3)) * RatFunc::x()))) ==
          denote(capacitor(rat(3))));
    // vsource = box{(i,v) : v = V}
    CHECK(denote(impedance_box(seq(discard_gen(), const_info(rf(5))))) ==
          denote(vsource(rat(5))));
    // csource = box{(i,v) : i = I}
    CHECK(denote(impedance_box(seq(co_const(rf(4)), codiscard_gen()))) ==
          denote(csource(rat(4))));
}

TEST_CASE("meters and controlled sources as generalized boxes") {
    CHECK(denote(impedance_box(seq(cozero_gen(), cup_n()), 0, 1)) == denote(voltmeter()));
    CHECK(denote(impedance_box(seq(copy_gen(), par(id_n(), seq(discard_gen(), zero_gen()))), 0,
                               1)) == denote(ammeter()));
    CHECK(denote(impedance_box(par(id_n(), discard_gen()), 1, 0)) == denote(ctrl_vsource()));
    CHECK(denote(impedance_box(seq(cap_n(), codiscard_gen()), 1, 0)) == denote(ctrl_csource()));
}

TEST_CASE("GAA diagrams breach box walls") {
    testgen::Rng rng(2024);
    for (int iter = 0; iter < 20; ++iter) {
        TermPtr d = testgen::random_payload(rng, 2);
        TermPtr payload = par(testgen::random_payload(rng, 2), testgen::random_payload(rng, 2));
        // pre-composing on the info wire = absorbing into the payload
        TermPtr outside = seq(par(d, id_e()), impedance_box(payload, 1, 1));
        TermPtr inside = impedance_box(seq(par(d, id_n()), payload), 1, 1);
        CHECK(denote(outside) == denote(inside));
        // post-composing likewise
        TermPtr outside_post = seq(impedance_box(payload, 1, 1), par(d, id_e()));
        TermPtr inside_post = impedance_box(seq(payload, par(d, id_n())), 1, 1);
        CHECK(denote(outside_post) == denote(inside_post));
    }
}

TEST_CASE("empty payload gives an empty box") {
    CHECK(denote(impedance_box(empty_payload())).is_empty());
}

TEST_CASE("directionless elements and polarity flips") {
    testgen::Rng rng(808);
    for (int iter = 0; iter < 10; ++iter) {
        Rat r = testgen::random_nonneg_rat(rng);
        CHECK(denote(reverse_oneport(resistor(r))) == denote(resistor(r)));
        Rat l = rat(testgen::pick(rng, 1, 9), testgen::pick(rng, 1, 3));
        CHECK(denote(reverse_oneport(inductor(l))) == denote(inductor(l)));
        CHECK(denote(reverse_oneport(capacitor(l))) == denote(capacitor(l)));
        Rat v = testgen::random_rat(rng);
        CHECK(denote(reverse_oneport(vsource(v))) == denote(vsource(Rat(-v))));
        CHECK(denote(reverse_oneport(csource(v))) == denote(csource(Rat(-v))));
    }
}

TEST_CASE("axiom suite all green") {
    for (const AxiomResult& r : run_axiom_suite()) {
        INFO(r.name);
        CHECK(r.pass);
    }
}

TEST_CASE("widths of denotations match the sort words") {
    testgen::Rng rng(515);
    for (int iter = 0; iter < 40; ++iter) {
        TermPtr t = testgen::random_payload(rng, 3);
        Sorting s = sort_check(t);
        AffineRelation r = denote(t);
        CHECK(r.dom_width() == scalar_width(s.dom));
        CHECK(r.cod_width() == scalar_width(s.cod));
    }
    for (int iter = 0; iter < 20; ++iter) {
        TermPtr t = testgen::random_oneport(rng, 5);
        Sorting s = sort_check(t);
        AffineRelation r = denote(t);
        CHECK(r.dom_width() == scalar_width(s.dom));
        CHECK(r.cod_width() == scalar_width(s.cod));
    }
}

TEST_CASE("snake equations for both wire colours") {
    // (id ⊗ cup) ; (cap ⊗ id) = id
    for (Sort s : {Sort::Electric, Sort::Info}) {
        SortWord w{s};
        TermPtr lhs = seq(par(id(w), cup_sort(s)), par(cap_sort(s), id(w)));
        CHECK(denote(lhs) == denote(id(w)));
        TermPtr rhs = seq(par(cup_sort(s), id(w)), par(id(w), cap_sort(s)));
        CHECK(denote(rhs) == denote(id(w)));
    }
}

TEST_CASE("denote_many matches element-wise denote") {
    CHECK(denote_many({}).empty());
    std::vector<TermPtr> ts{id_e(), resistor(rat(2)), resistor(rat(3)), vsource(rat(1)),
                            csource(rat(2))};
    std::vector<AffineRelation> rs = denote_many(ts);
    REQUIRE(rs.size() == ts.size());
    CHECK(rs[0] == AffineRelation::identity(2));
    for (size_t i = 0; i < ts.size(); ++i) CHECK(rs[i] == denote(ts[i]));
}

TEST_CASE("denote_many reports every ill-sorted element") {
    std::vector<TermPtr> ts{id_e(), seq(copy_gen(), resistor(rat(1))), id_n(),
                            seq(junction(), add_gen())};
    try {
        denote_many(ts);
        FAIL("expected a collected sort error");
    } catch (const Error& e) {
        std::string msg = e.what();
        CHECK(msg.find("element 1") != std::string::npos);
        CHECK(msg.find("element 3") != std::string::npos);
    }
}

TEST_CASE("node spiders denote equal potentials and balanced currents") {
    // any tree shape of junctions gives the same relation
    TermPtr a = seq(spider(3), par(id(word_electric(2)), junction())); // degree 4, right-leaning
    TermPtr b = seq(spider(3), par(junction(), id(word_electric(2)))); // degree 4, left-leaning
    CHECK(denote(a) == denote(b));
    AffineRelation s4 = denote(a);
    CHECK(s4.member({rf(2), rf(1), rf(2), rf(2), rf(2), rf(-3), rf(2), rf(0)}));
    CHECK(!s4.member({rf(2), rf(1), rf(2), rf(2), rf(2), rf(-3), rf(2), rf(1)}));
    CHECK(!s4.member({rf(2), rf(1), rf(2), rf(2), rf(1), rf(-3), rf(2), rf(0)}));
}

} // TEST_SUITE
