#include "relcirc/semantics.hpp"

#include <future>

namespace relcirc {

namespace {

// incremental constraint-system builder over a fixed ambient dimension
struct Rows {
    int d;
    Mat E;
    Vec f;

    explicit Rows(int dim) : d(dim) {}

    void add(std::initializer_list<std::pair<int, RatFunc>> entries, RatFunc rhs = RatFunc::zero()) {
        Vec row(d, RatFunc::zero());
        for (const auto& [idx, coeff] : entries) row[idx] += coeff;
        E.push_back(std::move(row));
        f.push_back(std::move(rhs));
    }

    AffineRelation done(int dom, int cod) const {
        return AffineRelation::from_constraints(E, f, dom, cod);
    }
};

const RatFunc kOne = RatFunc::one();
const RatFunc kMinusOne = -RatFunc::one();

AffineRelation denote_box(const Generator& g);

AffineRelation denote_generator(const Generator& g) {
    switch (g.kind) {
        case GenKind::Resistor: {
            Rows r(4);
            r.add({{1, kOne}, {3, kMinusOne}});
            r.add({{2, kOne}, {0, kMinusOne}, {1, -g.param}});
            return r.done(2, 2);
        }
        case GenKind::VSource: {
            Rows r(4);
            r.add({{1, kOne}, {3, kMinusOne}});
            r.add({{2, kOne}, {0, kMinusOne}}, g.param);
            return r.done(2, 2);
        }
        case GenKind::CSource: {
            Rows r(4);
            r.add({{1, kOne}}, g.param);
            r.add({{3, kOne}}, g.param);
            return r.done(2, 2);
        }
        case GenKind::Inductor: {
            Rows r(4);
            r.add({{1, kOne}, {3, kMinusOne}});
            r.add({{2, kOne}, {0, kMinusOne}, {1, -(g.param * RatFunc::x())}});
            return r.done(2, 2);
        }
        case GenKind::Capacitor: {
            Rows r(4);
            r.add({{1, kOne}, {3, kMinusOne}});
            RatFunc cx = g.param * RatFunc::x();
            r.add({{1, kOne}, {2, -cx}, {0, cx}});
            return r.done(2, 2);
        }
        case GenKind::Junction: {
            Rows r(6);
            r.add({{0, kOne}, {2, kMinusOne}});
            r.add({{0, kOne}, {4, kMinusOne}});
            r.add({{1, kOne}, {3, kMinusOne}, {5, kMinusOne}});
            return r.done(2, 4);
        }
        case GenKind::CoJunction: {
            Rows r(6);
            r.add({{0, kOne}, {2, kMinusOne}});
            r.add({{0, kOne}, {4, kMinusOne}});
            r.add({{1, kOne}, {3, kOne}, {5, kMinusOne}});
            return r.done(4, 2);
        }
        case GenKind::OpenRight: {
            Rows r(2);
            r.add({{1, kOne}});
            return r.done(2, 0);
        }
        case GenKind::OpenLeft: {
            Rows r(2);
            r.add({{1, kOne}});
            return r.done(0, 2);
        }
        case GenKind::Copy: {
            Rows r(3);
            r.add({{1, kOne}, {0, kMinusOne}});
            r.add({{2, kOne}, {0, kMinusOne}});
            return r.done(1, 2);
        }
        case GenKind::Discard: return Rows(1).done(1, 0);
        case GenKind::Scalar: {
            Rows r(2);
            r.add({{1, kOne}, {0, -g.param}});
            return r.done(1, 1);
        }
        case GenKind::Add: {
            Rows r(3);
            r.add({{2, kOne}, {0, kMinusOne}, {1, kMinusOne}});
            return r.done(2, 1);
        }
        case GenKind::Zero: {
            Rows r(1);
            r.add({{0, kOne}});
            return r.done(0, 1);
        }
        case GenKind::One: {
            Rows r(1);
            r.add({{0, kOne}}, kOne);
            return r.done(0, 1);
        }
        case GenKind::CoCopy: {
            Rows r(3);
            r.add({{0, kOne}, {2, kMinusOne}});
            r.add({{1, kOne}, {2, kMinusOne}});
            return r.done(2, 1);
        }
        case GenKind::CoDiscard: return Rows(1).done(0, 1);
        case GenKind::CoScalar: {
            Rows r(2);
            r.add({{0, kOne}, {1, -g.param}});
            return r.done(1, 1);
        }
        case GenKind::CoAdd: {
            Rows r(3);
            r.add({{1, kOne}, {2, kOne}, {0, kMinusOne}});
            return r.done(1, 2);
        }
        case GenKind::CoZero: {
            Rows r(1);
            r.add({{0, kOne}});
            return r.done(1, 0);
        }
        case GenKind::Voltmeter: {
            // (φ1,i1) -> (b, φ2, i2): zero current, b reads φ2 - φ1
            Rows r(5);
            r.add({{1, kOne}});
            r.add({{4, kOne}});
            r.add({{2, kOne}, {3, kMinusOne}, {0, kOne}});
            return r.done(2, 3);
        }
        case GenKind::Ammeter: {
            // (φ1,i1) -> (b, φ2, i2): wire behavior, b reads the current
            Rows r(5);
            r.add({{0, kOne}, {3, kMinusOne}});
            r.add({{1, kOne}, {4, kMinusOne}});
            r.add({{2, kOne}, {1, kMinusOne}});
            return r.done(2, 3);
        }
        case GenKind::CtrlVSource: {
            // (a, φ1, i1) -> (φ2, i2): φ2 - φ1 = a, current through
            Rows r(5);
            r.add({{3, kOne}, {1, kMinusOne}, {0, kMinusOne}});
            r.add({{2, kOne}, {4, kMinusOne}});
            return r.done(3, 2);
        }
        case GenKind::CtrlCSource: {
            Rows r(5);
            r.add({{2, kOne}, {0, kMinusOne}});
            r.add({{4, kOne}, {0, kMinusOne}});
            return r.done(3, 2);
        }
        case GenKind::ImpedanceBox: return denote_box(g);
    }
    throw Error(Errc::SortError, "unknown generator");
}

// ((a⃗, φ1, i), (b⃗, φ2, i)) such that ((a⃗, i), (b⃗, φ2 − φ1)) ∈ ⟦payload⟧
AffineRelation denote_box(const Generator& g) {
    const int m = g.box_m, n = g.box_n;
    AffineRelation payload = denote(g.payload);
    const int dom = m + 2, cod = n + 2;
    if (payload.is_empty()) return AffineRelation::empty(dom, cod);

    // box coordinates: a_0..a_{m-1}, φ1, i | b_0..b_{n-1}, φ2, i2
    const int z_phi1 = m, z_i = m + 1;
    const int z_phi2 = dom + n, z_i2 = dom + n + 1;
    auto y_to_z = [&](int y) {
        // payload coordinates: a_0..a_{m-1}, i | b_0..b_{n-1}, v
        if (y < m) return std::vector<std::pair<int, RatFunc>>{{y, kOne}};
        if (y == m) return std::vector<std::pair<int, RatFunc>>{{z_i, kOne}};
        if (y < m + 1 + n) return std::vector<std::pair<int, RatFunc>>{{dom + (y - m - 1), kOne}};
        return std::vector<std::pair<int, RatFunc>>{{z_phi2, kOne}, {z_phi1, kMinusOne}};
    };

    Mat pe;
    Vec pf;
    payload.to_constraints(pe, pf);
    Rows rows(dom + cod);
    for (size_t r = 0; r < pe.size(); ++r) {
        Vec row(dom + cod, RatFunc::zero());
        for (size_t y = 0; y < pe[r].size(); ++y) {
            if (pe[r][y].is_zero()) continue;
            for (const auto& [z, coeff] : y_to_z(static_cast<int>(y)))
                row[z] += pe[r][y] * coeff;
        }
        rows.E.push_back(std::move(row));
        rows.f.push_back(pf[r]);
    }
    rows.add({{z_i2, kOne}, {z_i, kMinusOne}});
    return rows.done(dom, cod);
}

AffineRelation swap_relation(Sort a, Sort b) {
    const int wa = scalar_width(a), wb = scalar_width(b);
    Rows r(2 * (wa + wb));
    for (int k = 0; k < wb; ++k) r.add({{wa + wb + k, kOne}, {wa + k, kMinusOne}});
    for (int k = 0; k < wa; ++k) r.add({{wa + 2 * wb + k, kOne}, {k, kMinusOne}});
    return r.done(wa + wb, wa + wb);
}

// parameterless generators and swaps recur thousands of times in compiled
// netlist terms; their relations are fixed
const AffineRelation& cached_generator(GenKind kind) {
    static const auto* table = [] {
        auto* m = new std::vector<std::pair<GenKind, AffineRelation>>;
        for (GenKind k :
             {GenKind::Junction, GenKind::CoJunction, GenKind::OpenRight, GenKind::OpenLeft,
              GenKind::Copy, GenKind::Discard, GenKind::Add, GenKind::Zero, GenKind::One,
              GenKind::CoCopy, GenKind::CoDiscard, GenKind::CoAdd, GenKind::CoZero,
              GenKind::Voltmeter, GenKind::Ammeter, GenKind::CtrlVSource, GenKind::CtrlCSource})
            m->emplace_back(k, denote_generator(Generator{k, RatFunc::zero(), 0, 0, nullptr}));
        return m;
    }();
    for (const auto& [k, rel] : *table)
        if (k == kind) return rel;
    throw Error(Errc::SortError, "generator not cacheable");
}

bool parameterless(GenKind kind) {
    switch (kind) {
        case GenKind::Resistor:
        case GenKind::VSource:
        case GenKind::CSource:
        case GenKind::Inductor:
        case GenKind::Capacitor:
        case GenKind::Scalar:
        case GenKind::CoScalar:
        case GenKind::ImpedanceBox: return false;
        default: return true;
    }
}

AffineRelation denote_node(const TermPtr& t) {
    if (auto* g = std::get_if<Term::Gen>(&t->node)) {
        if (parameterless(g->g.kind)) return cached_generator(g->g.kind);
        return denote_generator(g->g);
    }
    if (auto* i = std::get_if<Term::Id>(&t->node))
        return AffineRelation::identity(scalar_width(i->word));
    if (auto* s = std::get_if<Term::SwapT>(&t->node)) {
        static const AffineRelation ee = swap_relation(Sort::Electric, Sort::Electric);
        static const AffineRelation en = swap_relation(Sort::Electric, Sort::Info);
        static const AffineRelation ne = swap_relation(Sort::Info, Sort::Electric);
        static const AffineRelation nn = swap_relation(Sort::Info, Sort::Info);
        if (s->first == Sort::Electric)
            return s->second == Sort::Electric ? ee : en;
        return s->second == Sort::Electric ? ne : nn;
    }
    if (auto* q = std::get_if<Term::Seq>(&t->node))
        return denote_node(q->lhs).compose(denote_node(q->rhs));
    const auto& p = std::get<Term::Par>(t->node);
    return denote_node(p.lhs).tensor(denote_node(p.rhs));
}

} // namespace

AffineRelation denote(const TermPtr& t) {
    sort_check(t);
    return denote_node(t);
}

std::vector<AffineRelation> denote_many(const std::vector<TermPtr>& ts) {
    // validate everything first so one bad element reports alongside the rest
    std::string failures;
    for (size_t i = 0; i < ts.size(); ++i) {
        try {
            sort_check(ts[i]);
        } catch (const Error& e) {
            if (!failures.empty()) failures += "; ";
            failures += "element " + std::to_string(i) + ": " + e.what();
        }
    }
    if (!failures.empty()) throw Error(Errc::SortError, failures);

    if (ts.size() < 4) {
        std::vector<AffineRelation> out;
        out.reserve(ts.size());
        for (const TermPtr& t : ts) out.push_back(denote(t));
        return out;
    }
    std::vector<std::future<AffineRelation>> futures;
    futures.reserve(ts.size());
    for (const TermPtr& t : ts)
        futures.push_back(std::async(std::launch::async, [&t] { return denote(t); }));
    std::vector<AffineRelation> out;
    out.reserve(ts.size());
    for (auto& fu : futures) out.push_back(fu.get());
    return out;
}

} // namespace relcirc
