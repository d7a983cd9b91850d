#include "relcirc/term.hpp"

#include <sstream>

namespace relcirc {

int scalar_width(const SortWord& w) {
    int total = 0;
    for (Sort s : w) total += scalar_width(s);
    return total;
}

SortWord word_electric(int n) { return SortWord(n, Sort::Electric); }
SortWord word_info(int n) { return SortWord(n, Sort::Info); }

SortWord word_concat(const SortWord& a, const SortWord& b) {
    SortWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

std::string word_str(const SortWord& w) {
    if (w.empty()) return "ε";
    std::string out;
    for (Sort s : w) out += (s == Sort::Electric ? 'E' : 'N');
    return out;
}

const char* gen_name(GenKind kind) {
    switch (kind) {
        case GenKind::Copy: return "copy";
        case GenKind::Discard: return "discard";
        case GenKind::Scalar: return "scalar";
        case GenKind::Add: return "add";
        case GenKind::Zero: return "zero";
        case GenKind::One: return "one";
        case GenKind::CoCopy: return "cocopy";
        case GenKind::CoDiscard: return "codiscard";
        case GenKind::CoScalar: return "coscalar";
        case GenKind::CoAdd: return "coadd";
        case GenKind::CoZero: return "cozero";
        case GenKind::Resistor: return "R";
        case GenKind::VSource: return "V";
        case GenKind::CSource: return "I";
        case GenKind::Inductor: return "L";
        case GenKind::Capacitor: return "C";
        case GenKind::Junction: return "junc";
        case GenKind::CoJunction: return "cojunc";
        case GenKind::OpenRight: return "open";
        case GenKind::OpenLeft: return "coopen";
        case GenKind::Voltmeter: return "voltmeter";
        case GenKind::Ammeter: return "ammeter";
        case GenKind::CtrlVSource: return "cvs";
        case GenKind::CtrlCSource: return "ccs";
        case GenKind::ImpedanceBox: return "box";
    }
    return "?";
}

bool operator==(const Term& a, const Term& b) {
    if (a.node.index() != b.node.index()) return false;
    if (auto* ga = std::get_if<Term::Gen>(&a.node)) {
        const auto& gb = std::get<Term::Gen>(b.node);
        if (ga->g.kind != gb.g.kind) return false;
        if (ga->g.param != gb.g.param) return false;
        if (ga->g.kind == GenKind::ImpedanceBox) {
            if (ga->g.box_m != gb.g.box_m || ga->g.box_n != gb.g.box_n) return false;
            return *ga->g.payload == *gb.g.payload;
        }
        return true;
    }
    if (auto* ia = std::get_if<Term::Id>(&a.node))
        return ia->word == std::get<Term::Id>(b.node).word;
    if (auto* sa = std::get_if<Term::SwapT>(&a.node)) {
        const auto& sb = std::get<Term::SwapT>(b.node);
        return sa->first == sb.first && sa->second == sb.second;
    }
    if (auto* qa = std::get_if<Term::Seq>(&a.node)) {
        const auto& qb = std::get<Term::Seq>(b.node);
        return *qa->lhs == *qb.lhs && *qa->rhs == *qb.rhs;
    }
    const auto& pa = std::get<Term::Par>(a.node);
    const auto& pb = std::get<Term::Par>(b.node);
    return *pa.lhs == *pb.lhs && *pa.rhs == *pb.rhs;
}

TermPtr gen(Generator g) { return std::make_shared<Term>(Term::Node(Term::Gen{std::move(g)})); }
TermPtr id(SortWord w) { return std::make_shared<Term>(Term::Node(Term::Id{std::move(w)})); }
TermPtr id_e() { return id(word_electric(1)); }
TermPtr id_n() { return id(word_info(1)); }
TermPtr swap_gen(Sort a, Sort b) {
    return std::make_shared<Term>(Term::Node(Term::SwapT{a, b}));
}
TermPtr seq(TermPtr a, TermPtr b) {
    return std::make_shared<Term>(Term::Node(Term::Seq{std::move(a), std::move(b)}));
}
TermPtr par(TermPtr a, TermPtr b) {
    return std::make_shared<Term>(Term::Node(Term::Par{std::move(a), std::move(b)}));
}
TermPtr seq_all(const std::vector<TermPtr>& ts) {
    if (ts.empty()) return id(SortWord{});
    TermPtr acc = ts[0];
    for (size_t i = 1; i < ts.size(); ++i) acc = seq(acc, ts[i]);
    return acc;
}
TermPtr par_all(const std::vector<TermPtr>& ts) {
    if (ts.empty()) return id(SortWord{});
    TermPtr acc = ts[0];
    for (size_t i = 1; i < ts.size(); ++i) acc = par(acc, ts[i]);
    return acc;
}

namespace {

TermPtr simple_gen(GenKind kind) { return gen(Generator{kind, RatFunc::zero(), 0, 0, nullptr}); }

TermPtr value_gen(GenKind kind, Rat value) {
    return gen(Generator{kind, RatFunc(std::move(value)), 0, 0, nullptr});
}

void require_nonnegative(const Rat& v, const char* what) {
    if (v < 0) throw Error(Errc::BadValue, std::string(what) + " must be nonnegative");
}

void require_positive(const Rat& v, const char* what) {
    if (v <= 0) throw Error(Errc::BadValue, std::string(what) + " must be positive");
}

} // namespace

TermPtr copy_gen() { return simple_gen(GenKind::Copy); }
TermPtr discard_gen() { return simple_gen(GenKind::Discard); }
TermPtr scalar(RatFunc k) { return gen(Generator{GenKind::Scalar, std::move(k), 0, 0, nullptr}); }
TermPtr add_gen() { return simple_gen(GenKind::Add); }
TermPtr zero_gen() { return simple_gen(GenKind::Zero); }
TermPtr one_gen() { return simple_gen(GenKind::One); }
TermPtr cocopy_gen() { return simple_gen(GenKind::CoCopy); }
TermPtr codiscard_gen() { return simple_gen(GenKind::CoDiscard); }
TermPtr coscalar(RatFunc k) {
    return gen(Generator{GenKind::CoScalar, std::move(k), 0, 0, nullptr});
}
TermPtr coadd_gen() { return simple_gen(GenKind::CoAdd); }
TermPtr cozero_gen() { return simple_gen(GenKind::CoZero); }

TermPtr resistor(Rat r) {
    require_nonnegative(r, "resistance");
    return value_gen(GenKind::Resistor, std::move(r));
}
TermPtr vsource(Rat v) { return value_gen(GenKind::VSource, std::move(v)); }
TermPtr csource(Rat i) { return value_gen(GenKind::CSource, std::move(i)); }
TermPtr inductor(Rat l) {
    require_positive(l, "inductance");
    return value_gen(GenKind::Inductor, std::move(l));
}
TermPtr capacitor(Rat c) {
    require_positive(c, "capacitance");
    return value_gen(GenKind::Capacitor, std::move(c));
}
TermPtr junction() { return simple_gen(GenKind::Junction); }
TermPtr cojunction() { return simple_gen(GenKind::CoJunction); }
TermPtr open_right() { return simple_gen(GenKind::OpenRight); }
TermPtr open_left() { return simple_gen(GenKind::OpenLeft); }

TermPtr voltmeter() { return simple_gen(GenKind::Voltmeter); }
TermPtr ammeter() { return simple_gen(GenKind::Ammeter); }
TermPtr ctrl_vsource() { return simple_gen(GenKind::CtrlVSource); }
TermPtr ctrl_csource() { return simple_gen(GenKind::CtrlCSource); }

TermPtr impedance_box(TermPtr payload, int m, int n) {
    if (m < 0 || n < 0) throw Error(Errc::BadValue, "box arities must be nonnegative");
    return gen(Generator{GenKind::ImpedanceBox, RatFunc::zero(), m, n, std::move(payload)});
}

// ---- sorting ---------------------------------------------------------------

namespace {

Sorting gen_sorting(const Generator& g, const std::string& path);

Sorting check(const TermPtr& t, const std::string& path) {
    if (auto* g = std::get_if<Term::Gen>(&t->node)) return gen_sorting(g->g, path);
    if (auto* i = std::get_if<Term::Id>(&t->node)) return {i->word, i->word};
    if (auto* s = std::get_if<Term::SwapT>(&t->node))
        return {SortWord{s->first, s->second}, SortWord{s->second, s->first}};
    if (auto* q = std::get_if<Term::Seq>(&t->node)) {
        Sorting a = check(q->lhs, path + "/seq.0");
        Sorting b = check(q->rhs, path + "/seq.1");
        if (a.cod != b.dom)
            throw Error(Errc::SortMismatch, "sort mismatch at " + path + ": expected " +
                                                word_str(a.cod) + ", found " + word_str(b.dom));
        return {a.dom, b.cod};
    }
    const auto& p = std::get<Term::Par>(t->node);
    Sorting a = check(p.lhs, path + "/par.0");
    Sorting b = check(p.rhs, path + "/par.1");
    return {word_concat(a.dom, b.dom), word_concat(a.cod, b.cod)};
}

Sorting gen_sorting(const Generator& g, const std::string& path) {
    const SortWord e = word_electric(1);
    const SortWord n = word_info(1);
    const SortWord ee = word_electric(2);
    const SortWord nn = word_info(2);
    const SortWord ne = word_concat(n, e);
    const SortWord none;
    switch (g.kind) {
        case GenKind::Copy: return {n, nn};
        case GenKind::Discard: return {n, none};
        case GenKind::Scalar: return {n, n};
        case GenKind::Add: return {nn, n};
        case GenKind::Zero: return {none, n};
        case GenKind::One: return {none, n};
        case GenKind::CoCopy: return {nn, n};
        case GenKind::CoDiscard: return {none, n};
        case GenKind::CoScalar: return {n, n};
        case GenKind::CoAdd: return {n, nn};
        case GenKind::CoZero: return {n, none};
        case GenKind::Resistor:
        case GenKind::VSource:
        case GenKind::CSource:
        case GenKind::Inductor:
        case GenKind::Capacitor: return {e, e};
        case GenKind::Junction: return {e, ee};
        case GenKind::CoJunction: return {ee, e};
        case GenKind::OpenRight: return {e, none};
        case GenKind::OpenLeft: return {none, e};
        case GenKind::Voltmeter:
        case GenKind::Ammeter: return {e, ne};
        case GenKind::CtrlVSource:
        case GenKind::CtrlCSource: return {ne, e};
        case GenKind::ImpedanceBox: {
            if (!g.payload)
                throw Error(Errc::IllFormedBox, "impedance box without payload at " + path);
            if (!is_gaa_only(g.payload))
                throw Error(Errc::IllFormedBox,
                            "impedance box payload touches non-GAA structure at " + path);
            Sorting ps = check(g.payload, path + "/box");
            if (ps.dom != word_info(g.box_m + 1) || ps.cod != word_info(g.box_n + 1))
                throw Error(Errc::IllFormedBox,
                            "impedance box payload has sorting " + word_str(ps.dom) + " -> " +
                                word_str(ps.cod) + ", expected N^" + std::to_string(g.box_m + 1) +
                                " -> N^" + std::to_string(g.box_n + 1) + " at " + path);
            return {word_concat(word_info(g.box_m), e), word_concat(word_info(g.box_n), e)};
        }
    }
    throw Error(Errc::SortError, "unknown generator at " + path);
}

} // namespace

Sorting sort_check(const TermPtr& t) { return check(t, ""); }

bool is_gaa_only(const TermPtr& t) {
    if (auto* g = std::get_if<Term::Gen>(&t->node)) {
        switch (g->g.kind) {
            case GenKind::Copy:
            case GenKind::Discard:
            case GenKind::Scalar:
            case GenKind::Add:
            case GenKind::Zero:
            case GenKind::One:
            case GenKind::CoCopy:
            case GenKind::CoDiscard:
            case GenKind::CoScalar:
            case GenKind::CoAdd:
            case GenKind::CoZero: return true;
            default: return false;
        }
    }
    if (auto* i = std::get_if<Term::Id>(&t->node)) {
        for (Sort s : i->word)
            if (s != Sort::Info) return false;
        return true;
    }
    if (auto* s = std::get_if<Term::SwapT>(&t->node))
        return s->first == Sort::Info && s->second == Sort::Info;
    if (auto* q = std::get_if<Term::Seq>(&t->node))
        return is_gaa_only(q->lhs) && is_gaa_only(q->rhs);
    const auto& p = std::get<Term::Par>(t->node);
    return is_gaa_only(p.lhs) && is_gaa_only(p.rhs);
}

int count_generators(const TermPtr& t) {
    if (std::holds_alternative<Term::Gen>(t->node)) return 1;
    if (auto* q = std::get_if<Term::Seq>(&t->node))
        return count_generators(q->lhs) + count_generators(q->rhs);
    if (auto* p = std::get_if<Term::Par>(&t->node))
        return count_generators(p->lhs) + count_generators(p->rhs);
    return 0;
}

void for_each_generator(const TermPtr& t, const std::function<void(const Generator&)>& f) {
    if (auto* g = std::get_if<Term::Gen>(&t->node)) {
        f(g->g);
        if (g->g.kind == GenKind::ImpedanceBox && g->g.payload)
            for_each_generator(g->g.payload, f);
        return;
    }
    if (auto* q = std::get_if<Term::Seq>(&t->node)) {
        for_each_generator(q->lhs, f);
        for_each_generator(q->rhs, f);
        return;
    }
    if (auto* p = std::get_if<Term::Par>(&t->node)) {
        for_each_generator(p->lhs, f);
        for_each_generator(p->rhs, f);
    }
}

} // namespace relcirc
