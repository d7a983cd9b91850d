#include <doctest.h>

#include "gen.hpp"
#include "relcirc/parse.hpp"
#include "relcirc/term.hpp"

using namespace relcirc;

namespace {

// random well-formed term for round-trip checks; sorts need not compose
TermPtr random_printable(testgen::Rng& rng, int depth) {
    if (depth <= 0) {
        switch (testgen::pick(rng, 0, 12)) {
            case 0: return resistor(testgen::random_nonneg_rat(rng));
            case 1: return vsource(testgen::random_rat(rng));
            case 2: return inductor(rat(testgen::pick(rng, 1, 5)));
            case 3: return junction();
            case 4: return open_right();
            case 5: return voltmeter();
            case 6: return ctrl_csource();
            case 7: return scalar(testgen::random_ratfunc(rng));
            case 8: return coscalar(testgen::random_ratfunc(rng));
            case 9: return one_gen();
            case 10: return id_e();
            case 11: return swap_gen(Sort::Info, Sort::Electric);
            default: return coadd_gen();
        }
    }
    switch (testgen::pick(rng, 0, 3)) {
        case 0: return seq(random_printable(rng, depth - 1), random_printable(rng, depth - 1));
        case 1: return par(random_printable(rng, depth - 1), random_printable(rng, depth - 1));
        case 2: return impedance_box(testgen::random_payload(rng, 2));
        default: return random_printable(rng, 0);
    }
}

} // namespace

TEST_SUITE("diagram") {

TEST_CASE("generator sortings follow the type assignments") {
    CHECK(sort_check(seq(vsource(rat(5)), resistor(rat(2)))).dom == word_electric(1));
    CHECK(sort_check(seq(vsource(rat(5)), resistor(rat(2)))).cod == word_electric(1));

    Sorting vm = sort_check(seq(resistor(rat(1)), voltmeter()));
    CHECK(vm.dom == word_electric(1));
    CHECK(vm.cod == (SortWord{Sort::Info, Sort::Electric}));

    CHECK_THROWS_AS(sort_check(seq(copy_gen(), resistor(rat(1)))), Error);
    CHECK(sort_check(junction()).cod == word_electric(2));
    CHECK(sort_check(ctrl_vsource()).dom == (SortWord{Sort::Info, Sort::Electric}));
    CHECK(sort_check(impedance_box(scalar(RatFunc(rat(3))))).dom == word_electric(1));

    Sorting big_box = sort_check(impedance_box(
        seq(par(id_n(), copy_gen()), par(add_gen(), id_n())), 1, 1));
    CHECK(big_box.dom == (SortWord{Sort::Info, Sort::Electric}));
    CHECK(big_box.cod == (SortWord{Sort::Info, Sort::Electric}));
}

TEST_CASE("sort errors carry a path") {
    try {
        sort_check(par(id_e(), seq(copy_gen(), resistor(rat(1)))));
        FAIL("expected a sort mismatch");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SortMismatch);
        CHECK(std::string(e.what()).find("par.1") != std::string::npos);
    }
}

TEST_CASE("boxes reject electric payloads and wrong payload sorts") {
    CHECK_THROWS_AS(sort_check(impedance_box(resistor(rat(1)))), Error);
    // payload 1 -> 2 but arities say 1 -> 1
    CHECK_THROWS_AS(sort_check(impedance_box(copy_gen(), 0, 0)), Error);
    CHECK(sort_check(impedance_box(copy_gen(), 0, 1)).cod ==
          (SortWord{Sort::Info, Sort::Electric}));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(resistor(rat(-1)), Error);
    CHECK_THROWS_AS(inductor(rat(0)), Error);
    CHECK_THROWS_AS(capacitor(rat(-2)), Error);
    CHECK_NOTHROW(resistor(rat(0)));
    CHECK_NOTHROW(vsource(rat(-5)));
}

TEST_CASE("parsing the grammar") {
    TermPtr a = parse_term("V(5) ; R(2)");
    CHECK(*a == *seq(vsource(rat(5)), resistor(rat(2))));

    TermPtr b = parse_term("box{ scalar(3*x) }");
    CHECK(*b ==
          *impedance_box(scalar(RatFunc(Poly(std::vector<Rat>{rat(0), rat(3)}), Poly::one()))));

    TermPtr c = parse_term("copy ; (id:n | one)");
    CHECK(*c == *seq(copy_gen(), par(id_n(), one_gen())));

    CHECK_THROWS_AS(parse_term("R(-3/2)"), Error);
}

TEST_CASE("parse errors carry line and column") {
    try {
        parse_term("V(5) ;\n  @R(2)");
        FAIL("expected a syntax error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SyntaxError);
        CHECK(e.line() == 2);
        CHECK(e.col() == 3);
    }
}

TEST_CASE("precedence: ; binds looser than |") {
    TermPtr t = parse_term("copy | discard ; add");
    CHECK(*t == *seq(par(copy_gen(), discard_gen()), add_gen()));
}

TEST_CASE("pretty printing") {
    CHECK(pretty_print(par(id_e(), open_right())) == "id:e | open");
    // nested seq left-associates without redundant parens
    TermPtr chain = seq(seq(resistor(rat(1)), resistor(rat(2))), resistor(rat(3)));
    CHECK(pretty_print(chain) == "R(1) ; R(2) ; R(3)");
    // right-nesting is preserved with parens
    TermPtr right = seq(resistor(rat(1)), seq(resistor(rat(2)), resistor(rat(3))));
    CHECK(pretty_print(right) == "R(1) ; (R(2) ; R(3))");
    CHECK(pretty_print(impedance_box(scalar(RatFunc::x()))) == "box{ scalar(x) }");
    CHECK(pretty_print(id(SortWord{})) == "id:0");
    CHECK(pretty_print(id(SortWord{Sort::Electric, Sort::Info})) == "id:en");
}

TEST_CASE("parse/print round-trip is the identity on random terms") {
    testgen::Rng rng(314);
    for (int iter = 0; iter < 200; ++iter) {
        TermPtr t = random_printable(rng, 3);
        TermPtr back = parse_term(pretty_print(t));
        CHECK(*back == *t);
    }
}

TEST_CASE("the three parse examples round-trip") {
    for (const char* text : {"V(5) ; R(2)", "box{ scalar(3*x) }", "copy ; (id:n | one)"}) {
        TermPtr t = parse_term(text);
        CHECK(*parse_term(pretty_print(t)) == *t);
    }
}

TEST_CASE("identity words and generalized boxes round-trip") {
    CHECK(*parse_term("id:0") == *id(SortWord{}));
    CHECK(*parse_term("id:nee") == *id(SortWord{Sort::Info, Sort::Electric, Sort::Electric}));
    TermPtr boxed = impedance_box(par(id_n(), scalar(RatFunc::x())), 1, 1);
    CHECK(*parse_term(pretty_print(boxed)) == *boxed);
    CHECK(pretty_print(boxed) == "box(1,1){ id:n | scalar(x) }");
}

} // TEST_SUITE
