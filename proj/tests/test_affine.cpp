#include <doctest.h>

#include "gen.hpp"
#include "relcirc/affine.hpp"

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

AffineRelation random_relation(testgen::Rng& rng, int dom, int cod, int max_rank = 2) {
    const int d = dom + cod;
    Vec offset;
    for (int i = 0; i < d; ++i) offset.push_back(RatFunc(testgen::random_rat(rng, 3)));
    Mat basis;
    int rank = static_cast<int>(testgen::pick(rng, 0, max_rank));
    for (int r = 0; r < rank; ++r) {
        Vec row;
        for (int i = 0; i < d; ++i) row.push_back(RatFunc(testgen::random_rat(rng, 2)));
        basis.push_back(std::move(row));
    }
    if (testgen::pick(rng, 0, 9) == 0) return AffineRelation::empty(dom, cod);
    return AffineRelation::span(std::move(offset), std::move(basis), dom, cod);
}

Vec random_point_of(testgen::Rng& rng, const AffineRelation& r) {
    Vec p = r.offset();
    for (const Vec& row : r.basis()) {
        RatFunc coeff(testgen::random_rat(rng, 3));
        for (size_t i = 0; i < p.size(); ++i) p[i] += coeff * row[i];
    }
    return p;
}

} // namespace

TEST_SUITE("affine") {

TEST_CASE("canonicalization examples") {
    // offset (1,1), basis {(2,0)} -> offset (0,1), basis {(1,0)}
    AffineRelation a = AffineRelation::span(vec({1, 1}), mat({{2, 0}}), 1, 1);
    CHECK(a.offset() == vec({0, 1}));
    CHECK(a.basis() == mat({{1, 0}}));

    // dependent row dropped
    AffineRelation b = AffineRelation::span(vec({0, 0}), mat({{1, 1}, {2, 2}}), 1, 1);
    CHECK(b.basis() == mat({{1, 1}}));

    // offset in the span reduces to zero: 3·(1,2) = (3,6)
    AffineRelation c = AffineRelation::span(vec({3, 6}), mat({{1, 2}}), 1, 1);
    CHECK(c.offset() == vec({0, 0}));
    CHECK(c.basis() == mat({{1, 2}}));

    CHECK_THROWS_AS(AffineRelation::span(vec({1}), mat({{1, 0}}), 1, 1), Error);
}

TEST_CASE("canonical form is presentation independent") {
    testgen::Rng rng(7);
    for (int iter = 0; iter < 50; ++iter) {
        AffineRelation r = random_relation(rng, 2, 2);
        if (r.is_empty()) continue;
        // re-present: shuffle offset by a random combination, rescale rows
        Vec offset = random_point_of(rng, r);
        Mat basis = r.basis();
        for (Vec& row : basis) {
            RatFunc k(testgen::random_rat(rng, 3));
            if (k.is_zero()) k = RatFunc::one();
            for (RatFunc& entry : row) entry *= k;
        }
        if (basis.size() >= 2) {
            for (size_t i = 0; i < basis[0].size(); ++i) basis[0][i] += basis[1][i];
        }
        AffineRelation again = AffineRelation::span(std::move(offset), std::move(basis),
                                                    r.dom_width(), r.cod_width());
        CHECK(r == again);
    }
}

TEST_CASE("from_constraints examples") {
    // identity relation from x - y = 0
    AffineRelation id1 = AffineRelation::from_constraints(mat({{1, -1}}), vec({0}), 1, 1);
    CHECK(id1 == AffineRelation::identity(1));

    // inconsistent
    AffineRelation none = AffineRelation::from_constraints(mat({{0, 0}}), vec({1}), 1, 1);
    CHECK(none.is_empty());

    // x + y = 5: offset (0,5), basis {(1,-1)}
    AffineRelation line = AffineRelation::from_constraints(mat({{1, 1}}), vec({5}), 1, 1);
    CHECK(line.offset() == vec({0, 5}));
    CHECK(line.basis() == mat({{1, -1}}));
}

TEST_CASE("compose examples") {
    // copy ; add = doubling
    AffineRelation copy = AffineRelation::span(vec({0, 0, 0}), mat({{1, 1, 1}}), 1, 2);
    AffineRelation add = AffineRelation::span(vec({0, 0, 0}), mat({{1, 0, 1}, {0, 1, 1}}), 2, 1);
    AffineRelation doubled = copy.compose(add);
    CHECK(doubled == AffineRelation::span(vec({0, 0}), mat({{1, 2}}), 1, 1));

    CHECK_THROWS_AS(copy.compose(copy), Error); // width mismatch
}

TEST_CASE("identity is neutral for compose") {
    testgen::Rng rng(21);
    for (int iter = 0; iter < 40; ++iter) {
        AffineRelation r = random_relation(rng, 2, 2);
        CHECK(r.compose(AffineRelation::identity(2)) == r);
        CHECK(AffineRelation::identity(2).compose(r) == r);
    }
}

TEST_CASE("tensor examples") {
    CHECK(AffineRelation::identity(1).tensor(AffineRelation::identity(1)) ==
          AffineRelation::identity(2));
    CHECK(AffineRelation::empty(1, 1).tensor(AffineRelation::identity(1)).is_empty());
    AffineRelation p1 = AffineRelation::singleton(vec({1}), 0, 1);
    AffineRelation p2 = AffineRelation::singleton(vec({2}), 0, 1);
    CHECK(p1.tensor(p2) == AffineRelation::singleton(vec({1, 2}), 0, 2));
}

TEST_CASE("converse") {
    // scalar k sent to the opposite relation
    AffineRelation k3 = AffineRelation::span(vec({0, 0}), mat({{1, 3}}), 1, 1);
    AffineRelation co = k3.converse();
    CHECK(co == AffineRelation::span(vec({0, 0}), mat({{3, 1}}), 1, 1));
    CHECK(AffineRelation::empty(2, 1).converse() == AffineRelation::empty(1, 2));

    AffineRelation point = AffineRelation::singleton(vec({1}), 0, 1);
    CHECK(point.converse() == AffineRelation::singleton(vec({1}), 1, 0));

    testgen::Rng rng(31);
    for (int iter = 0; iter < 40; ++iter) {
        AffineRelation r = random_relation(rng, 2, 1);
        CHECK(r.converse().converse() == r);
    }
}

TEST_CASE("containment") {
    AffineRelation all = AffineRelation::span(vec({0}), mat({{1}}), 0, 1);   // co-delete
    AffineRelation zero = AffineRelation::singleton(vec({0}), 0, 1);
    CHECK(all.contains(zero));      // the generating inequation
    CHECK(!zero.contains(all));
    CHECK(all.contains(all));
    CHECK(zero.contains(AffineRelation::empty(0, 1)));
    CHECK_THROWS_AS(all.contains(AffineRelation::identity(1)), Error);
}

TEST_CASE("functionality") {
    AffineRelation scalar2 = AffineRelation::span(vec({0, 0}), mat({{1, 2}}), 1, 1);
    CHECK(scalar2.functionality().total);
    CHECK(scalar2.functionality().single_valued);

    AffineRelation codelete = AffineRelation::span(vec({0}), mat({{1}}), 0, 1);
    CHECK(codelete.functionality().total);
    CHECK(!codelete.functionality().single_valued);

    // {(x,y): x = 0, y = 0} as 1 -> 1: not total, single-valued
    AffineRelation zz = AffineRelation::singleton(vec({0, 0}), 1, 1);
    CHECK(!zz.functionality().total);
    CHECK(zz.functionality().single_valued);

    CHECK(!AffineRelation::empty(1, 1).functionality().total);
    CHECK(AffineRelation::empty(1, 1).functionality().single_valued);
}

TEST_CASE("prop laws on random relations") {
    testgen::Rng rng(55);
    for (int iter = 0; iter < 30; ++iter) {
        AffineRelation a = random_relation(rng, 1, 2);
        AffineRelation b = random_relation(rng, 2, 1);
        AffineRelation c = random_relation(rng, 1, 1);
        // associativity
        CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
        // converse is an involution and an anti-homomorphism
        CHECK(a.compose(b).converse() == b.converse().compose(a.converse()));
        // interchange
        AffineRelation d = random_relation(rng, 1, 2);
        CHECK(a.tensor(c).compose(b.tensor(d)) == a.compose(b).tensor(c.compose(d)));
    }
}

TEST_CASE("monotonicity of composition") {
    testgen::Rng rng(66);
    int cases = 0;
    for (int iter = 0; iter < 200 && cases < 30; ++iter) {
        AffineRelation r = random_relation(rng, 1, 1, 2);
        AffineRelation s = random_relation(rng, 1, 1, 1);
        if (!r.contains(s)) continue;
        ++cases;
        AffineRelation t = random_relation(rng, 1, 1);
        CHECK(s.compose(t).contains(s.compose(t)));
        CHECK(r.compose(t).contains(s.compose(t)));
        CHECK(t.compose(r).contains(t.compose(s)));
    }
    CHECK(cases > 0);
}

TEST_CASE("membership agrees with the constraint form") {
    testgen::Rng rng(88);
    for (int iter = 0; iter < 30; ++iter) {
        AffineRelation r = random_relation(rng, 2, 2);
        if (r.is_empty()) continue;
        Mat e;
        Vec f;
        r.to_constraints(e, f);
        AffineRelation round =
            AffineRelation::from_constraints(e, f, r.dom_width(), r.cod_width());
        CHECK(round == r);
        for (int k = 0; k < 20; ++k) {
            Vec p = random_point_of(rng, r);
            CHECK(r.member(p));
            // constraint check directly
            for (size_t row = 0; row < e.size(); ++row) {
                RatFunc acc = RatFunc::zero();
                for (size_t i = 0; i < p.size(); ++i) acc += e[row][i] * p[i];
                CHECK(acc == f[row]);
            }
        }
        // a perturbed point off the affine set
        if (r.dim() < r.ambient()) {
            Mat en;
            Vec fn;
            r.to_constraints(en, fn);
            Vec p = random_point_of(rng, r);
            // walk along a constraint normal, guaranteed to leave the set
            for (size_t i = 0; i < p.size(); ++i) p[i] += en[0][i];
            CHECK(!r.member(p));
        }
    }
}

TEST_CASE("compose agrees with constraint-stacking elimination") {
    // independent route: stack both constraint systems over (u, w, v) and
    // project away the middle block
    auto compose_oracle = [](const AffineRelation& r, const AffineRelation& s) {
        const int m = r.dom_width(), n = r.cod_width(), p = s.cod_width();
        if (r.is_empty() || s.is_empty()) return AffineRelation::empty(m, p);
        Mat er, es;
        Vec fr, fs;
        r.to_constraints(er, fr);
        s.to_constraints(es, fs);
        Mat stacked;
        Vec rhs;
        for (size_t i = 0; i < er.size(); ++i) {
            Vec row(m + p + n, RatFunc::zero());
            for (int j = 0; j < m; ++j) row[j] = er[i][j];
            for (int j = 0; j < n; ++j) row[m + p + j] = er[i][m + j];
            stacked.push_back(std::move(row));
            rhs.push_back(fr[i]);
        }
        for (size_t i = 0; i < es.size(); ++i) {
            Vec row(m + p + n, RatFunc::zero());
            for (int j = 0; j < n; ++j) row[m + p + j] = es[i][j];
            for (int j = 0; j < p; ++j) row[m + j] = es[i][n + j];
            stacked.push_back(std::move(row));
            rhs.push_back(fs[i]);
        }
        return AffineRelation::from_constraints(stacked, rhs, m + p, n).project_prefix(m, p);
    };
    testgen::Rng rng(222);
    for (int iter = 0; iter < 60; ++iter) {
        AffineRelation r = random_relation(rng, 2, 2);
        AffineRelation s = random_relation(rng, 2, 1);
        CHECK(r.compose(s) == compose_oracle(r, s));
    }
}

TEST_CASE("brute-force compose oracle on a small grid") {
    // relations over 1-dim blocks with coordinates in {-2..2}: enumerate pairs
    testgen::Rng rng(111);
    std::vector<Rat> grid;
    for (long v = -2; v <= 2; ++v) grid.push_back(rat(v));
    for (int iter = 0; iter < 25; ++iter) {
        AffineRelation r = random_relation(rng, 1, 1);
        AffineRelation s = random_relation(rng, 1, 1);
        AffineRelation rs = r.compose(s);
        for (const Rat& u : grid) {
            for (const Rat& w : grid) {
                bool direct = false;
                // middle witness search on a denser grid
                for (long num = -8; num <= 8 && !direct; ++num) {
                    for (long den = 1; den <= 3 && !direct; ++den) {
                        Vec mid{RatFunc(rat(num, den))};
                        Vec left{RatFunc(u), mid[0]};
                        Vec right{mid[0], RatFunc(w)};
                        if (!r.is_empty() && !s.is_empty() && r.member(left) && s.member(right))
                            direct = true;
                    }
                }
                Vec pair{RatFunc(u), RatFunc(w)};
                bool composed = !rs.is_empty() && rs.member(pair);
                if (direct) CHECK(composed);
                if (!composed) CHECK(!direct);
            }
        }
    }
}

TEST_CASE("json rendering") {
    AffineRelation line = AffineRelation::from_constraints(mat({{1, 1}}), vec({5}), 1, 1);
    CHECK(line.json() ==
          "{\"dom_width\":1,\"cod_width\":1,\"empty\":false,\"offset\":[\"0\",\"5\"],"
          "\"basis\":[[\"1\",\"-1\"]]}");
    CHECK(AffineRelation::empty(1, 0).json() ==
          "{\"dom_width\":1,\"cod_width\":0,\"empty\":true,\"offset\":[],\"basis\":[]}");
}

} // TEST_SUITE
