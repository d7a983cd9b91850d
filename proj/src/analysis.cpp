#include "relcirc/analysis.hpp"

#include <sstream>

namespace relcirc {

namespace {

void require_payload(const TermPtr& c) {
    if (!is_gaa_only(c))
        throw Error(Errc::BadPayloadSort, "impedance payload must be a GAA term");
    Sorting s = sort_check(c);
    if (s.dom != word_info(1) || s.cod != word_info(1))
        throw Error(Errc::BadPayloadSort, "impedance payload must be 1 -> 1, got " +
                                              word_str(s.dom) + " -> " + word_str(s.cod));
}

} // namespace

TermPtr series_box(const TermPtr& c1, const TermPtr& c2) {
    require_payload(c1);
    require_payload(c2);
    return seq(seq(copy_gen(), par(c1, c2)), add_gen());
}

TermPtr parallel_box(const TermPtr& c1, const TermPtr& c2) {
    require_payload(c1);
    require_payload(c2);
    return seq(seq(coadd_gen(), par(c1, c2)), cocopy_gen());
}

TermPtr reverse_box(const TermPtr& c) {
    require_payload(c);
    RatFunc minus_one = -RatFunc::one();
    return seq(seq(scalar(minus_one), c), scalar(minus_one));
}

AffineRelation close_box(const TermPtr& c) {
    require_payload(c);
    // loop current is free, voltage difference around the loop is zero
    return denote(seq(seq(codiscard_gen(), c), cozero_gen()));
}

TermPtr plug(const TermPtr& t, PlugSide side, int index, PlugMode mode) {
    Sorting s = sort_check(t);
    const SortWord& boundary = side == PlugSide::Domain ? s.dom : s.cod;
    if (index < 0 || index >= static_cast<int>(boundary.size()))
        throw Error(Errc::NotInfoWire, "plug index out of range");
    if (boundary[index] != Sort::Info)
        throw Error(Errc::NotInfoWire, "plug target is an electric wire");
    if (mode == PlugMode::SourceOff && side != PlugSide::Domain)
        throw Error(Errc::BadValue, "source_off plugs a domain wire");
    if (mode == PlugMode::MeterDiscard && side != PlugSide::Codomain)
        throw Error(Errc::BadValue, "meter_discard plugs a codomain wire");

    SortWord pre(boundary.begin(), boundary.begin() + index);
    SortWord post(boundary.begin() + index + 1, boundary.end());
    TermPtr unit = mode == PlugMode::SourceOff ? zero_gen() : discard_gen();
    TermPtr layer = unit;
    if (!pre.empty()) layer = par(id(pre), layer);
    if (!post.empty()) layer = par(layer, id(post));
    return mode == PlugMode::SourceOff ? seq(layer, t) : seq(t, layer);
}

PortInvariants check_port_invariants(const TermPtr& t) {
    Sorting s = sort_check(t);
    for (Sort so : s.dom)
        if (so != Sort::Electric)
            throw Error(Errc::SortError, "port invariants need an all-electric boundary");
    for (Sort so : s.cod)
        if (so != Sort::Electric)
            throw Error(Errc::SortError, "port invariants need an all-electric boundary");

    AffineRelation r = denote(t);
    if (r.is_empty()) return {true, true};

    const int dw = r.dom_width(), cw = r.cod_width();
    Vec translation(dw + cw, RatFunc::zero());
    for (int w = 0; w < dw / 2; ++w) translation[2 * w] = RatFunc::one();
    for (int w = 0; w < cw / 2; ++w) translation[dw + 2 * w] = RatFunc::one();
    bool relativity = r.direction_contains(translation);

    Vec functional(dw + cw, RatFunc::zero());
    for (int w = 0; w < dw / 2; ++w) functional[2 * w + 1] = RatFunc::one();
    for (int w = 0; w < cw / 2; ++w) functional[dw + 2 * w + 1] = -RatFunc::one();
    auto annihilates = [&](const Vec& v) {
        RatFunc acc = RatFunc::zero();
        for (size_t i = 0; i < v.size(); ++i)
            if (!functional[i].is_zero() && !v[i].is_zero()) acc += functional[i] * v[i];
        return acc.is_zero();
    };
    bool conservation = annihilates(r.offset());
    for (const Vec& row : r.basis())
        if (!conservation) break;
        else conservation = annihilates(row);

    return {relativity, conservation};
}

AffineRelation one_port_relation(const TermPtr& t) {
    Sorting s = sort_check(t);
    if (s.dom != word_electric(1) || s.cod != word_electric(1))
        throw Error(Errc::SortError, "one-port relation needs an E -> E term");
    PortInvariants inv = check_port_invariants(t);
    if (!inv.relativity || !inv.conservation)
        throw Error(Errc::InvariantViolation, "port invariants failed on a one-port");

    AffineRelation r = denote(t);
    // pin the left potential to 0, read (current, right potential)
    AffineRelation pin = AffineRelation::span(
        Vec(3, RatFunc::zero()), Mat{{RatFunc::one(), RatFunc::zero(), RatFunc::one()}}, 1, 2);
    AffineRelation read = AffineRelation::span(
        Vec(3, RatFunc::zero()),
        Mat{{RatFunc::one(), RatFunc::zero(), RatFunc::one()},
            {RatFunc::zero(), RatFunc::one(), RatFunc::zero()}},
        2, 1);
    return pin.compose(r).compose(read);
}

TermPtr synthesize_box(const AffineRelation& z) {
    if (z.dom_width() != 1 || z.cod_width() != 1)
        throw Error(Errc::WidthMismatch, "synthesize_box needs a 1 -> 1 relation");
    if (z.is_empty()) return empty_payload();
    switch (z.dim()) {
        case 0: // single point (i0, v0)
            return seq(co_const(z.offset()[0]), const_info(z.offset()[1]));
        case 1: {
            const Vec& b = z.basis()[0];
            if (!b[0].is_zero()) {
                // graph of v = v0 + r·i; RREF gives basis {(1, r)}, offset (0, v0)
                return seq(scalar(b[1]), shift_info(z.offset()[1]));
            }
            // vertical line i = i0
            return seq(co_const(z.offset()[0]), codiscard_gen());
        }
        default: // the full plane
            return seq(discard_gen(), codiscard_gen());
    }
}

namespace {

void require_thevenin_input(const TermPtr& t) {
    for_each_generator(t, [](const Generator& g) {
        switch (g.kind) {
            case GenKind::Resistor:
            case GenKind::VSource:
            case GenKind::CSource:
            case GenKind::Junction:
            case GenKind::CoJunction:
            case GenKind::OpenRight:
            case GenKind::OpenLeft: return;
            default:
                throw Error(Errc::ForbiddenElement,
                            std::string("thevenin input contains '") + gen_name(g.kind) + "'");
        }
    });
}

} // namespace

TheveninForm thevenin(const TermPtr& t) {
    require_thevenin_input(t);
    Sorting s = sort_check(t);
    if (s.dom != word_electric(1) || s.cod != word_electric(1))
        throw Error(Errc::ForbiddenElement, "thevenin input must be a one-port (E -> E)");

    AffineRelation z = one_port_relation(t);
    TheveninForm out;
    if (z.is_empty()) {
        out.kind = TheveninForm::Case::EmptyCircuit;
        return out;
    }
    if (z.dim() == 1) {
        const Vec& b = z.basis()[0];
        if (!b[0].is_zero()) {
            // slope must be a nonnegative constant resistance
            if (b[1].is_constant() && b[1].constant_value() >= 0 && z.offset()[1].is_constant()) {
                out.kind = TheveninForm::Case::SeriesVR;
                out.v0 = z.offset()[1];
                out.r = b[1];
                return out;
            }
        } else if (z.offset()[0].is_constant()) {
            out.kind = TheveninForm::Case::CurrentSrc;
            out.i0 = z.offset()[0];
            return out;
        }
    }
    out.kind = TheveninForm::Case::NonCanonical;
    out.z = z;
    return out;
}

TermPtr TheveninForm::to_term() const {
    switch (kind) {
        case Case::SeriesVR: return seq(vsource(v0.constant_value()), resistor(r.constant_value()));
        case Case::CurrentSrc: return csource(i0.constant_value());
        case Case::EmptyCircuit:
            // two disagreeing sources in parallel
            return parallel_circuit(vsource(rat(0)), vsource(rat(1)));
        case Case::NonCanonical:
            throw Error(Errc::InvariantViolation, "no canonical circuit for this form");
    }
    throw Error(Errc::InvariantViolation, "bad thevenin form");
}

std::string TheveninForm::json() const {
    std::ostringstream os;
    switch (kind) {
        case Case::SeriesVR:
            os << "{\"case\":\"series_vr\",\"V0\":\"" << v0.str() << "\",\"R\":\"" << r.str()
               << "\"}";
            break;
        case Case::CurrentSrc: os << "{\"case\":\"current_src\",\"I0\":\"" << i0.str() << "\"}"; break;
        case Case::EmptyCircuit: os << "{\"case\":\"empty_circuit\"}"; break;
        case Case::NonCanonical:
            os << "{\"case\":\"non_canonical\",\"Z\":" << z->json() << "}";
            break;
    }
    return os.str();
}

namespace {

// Seq spine flattened left to right.
void flatten_seq(const TermPtr& t, std::vector<TermPtr>& out) {
    if (auto* q = std::get_if<Term::Seq>(&t->node)) {
        flatten_seq(q->lhs, out);
        flatten_seq(q->rhs, out);
        return;
    }
    out.push_back(t);
}

bool gen_is(const TermPtr& t, GenKind kind) {
    auto* g = std::get_if<Term::Gen>(&t->node);
    return g && g->g.kind == kind;
}

std::optional<Rat> gen_value(const TermPtr& t, GenKind kind) {
    auto* g = std::get_if<Term::Gen>(&t->node);
    if (!g || g->g.kind != kind) return std::nullopt;
    return g->g.param.constant_value();
}

} // namespace

TermPtr source_transform(const TermPtr& t) {
    std::vector<TermPtr> stages;
    flatten_seq(t, stages);
    if (stages.size() != 3 || !gen_is(stages[0], GenKind::Junction) ||
        !gen_is(stages[2], GenKind::CoJunction))
        throw Error(Errc::PatternMismatch, "expected junc ; (I | R) ; cojunc");
    auto* p = std::get_if<Term::Par>(&stages[1]->node);
    if (!p) throw Error(Errc::PatternMismatch, "expected a parallel pair of branches");
    std::optional<Rat> src = gen_value(p->lhs, GenKind::CSource);
    std::optional<Rat> res = gen_value(p->rhs, GenKind::Resistor);
    if (!src) {
        src = gen_value(p->rhs, GenKind::CSource);
        res = gen_value(p->lhs, GenKind::Resistor);
    }
    if (!src || !res)
        throw Error(Errc::PatternMismatch, "expected a current source in parallel with a resistor");
    if (*res <= 0)
        throw Error(Errc::PatternMismatch, "source transformation needs R > 0");
    // with the fixed junction orientation the equivalent series source carries -R·I
    return seq(vsource(Rat(-(*res) * (*src))), resistor(*res));
}

MeasurementResult measure(const TermPtr& t) {
    Sorting s = sort_check(t);
    if (!s.dom.empty())
        throw Error(Errc::SortError, "measure needs a closed circuit (empty domain)");
    for (Sort so : s.cod)
        if (so != Sort::Info)
            throw Error(Errc::SortError, "measure outputs must all be info wires");

    AffineRelation r = denote(t);
    MeasurementResult out{MeasurementResult::Kind::Empty, {}, 0, r};
    if (r.is_empty()) return out;
    if (r.dim() == 0) {
        out.kind = MeasurementResult::Kind::UniquePoint;
        out.values = r.offset();
        return out;
    }
    out.kind = MeasurementResult::Kind::Underdetermined;
    out.dim = r.dim();
    return out;
}

std::string MeasurementResult::json() const {
    std::ostringstream os;
    os << "{\"classification\":\"";
    switch (kind) {
        case Kind::Empty: os << "empty\""; break;
        case Kind::UniquePoint: {
            os << "unique_point\",\"values\":[";
            for (size_t i = 0; i < values.size(); ++i) {
                if (i) os << ',';
                os << '"' << values[i].str() << '"';
            }
            os << ']';
            break;
        }
        case Kind::Underdetermined: os << "underdetermined\",\"dim\":" << dim; break;
    }
    os << ",\"relation\":" << relation.json() << "}";
    return os.str();
}

std::string CheckReport::json() const {
    std::ostringstream os;
    os << "{\"inclusion_holds\":" << (inclusion_holds ? "true" : "false")
       << ",\"equality_holds\":" << (equality_holds ? "true" : "false")
       << ",\"functional_witness\":[";
    for (size_t i = 0; i < functional_witness.size(); ++i) {
        if (i) os << ',';
        os << "{\"total\":" << (functional_witness[i].total ? "true" : "false")
           << ",\"single_valued\":" << (functional_witness[i].single_valued ? "true" : "false")
           << '}';
    }
    os << "],\"lhs\":" << lhs.json() << ",\"rhs\":" << rhs.json() << "}";
    return os.str();
}

CheckReport check_independent_measurement(const TermPtr& t) {
    Sorting s = sort_check(t);
    if (!s.dom.empty())
        throw Error(Errc::SortError, "independent measurement needs a closed circuit");
    for (Sort so : s.cod)
        if (so != Sort::Info)
            throw Error(Errc::SortError, "meter outputs must all be info wires");
    const int n = static_cast<int>(s.cod.size());

    AffineRelation joint = denote(t);
    std::vector<AffineRelation> singles;
    std::vector<AffineRelation::Functionality> witness;
    singles.reserve(n);
    for (int j = 0; j < n; ++j) {
        TermPtr tj = t;
        for (int k = n - 1; k >= 0; --k) {
            if (k == j) continue;
            tj = plug(tj, PlugSide::Codomain, k, PlugMode::MeterDiscard);
        }
        singles.push_back(denote(tj));
        witness.push_back(singles.back().functionality());
    }
    AffineRelation product = AffineRelation::identity(0);
    for (const AffineRelation& g : singles) product = product.tensor(g);

    CheckReport report{product.contains(joint), joint == product, joint, product,
                       std::move(witness)};
    return report;
}

CheckReport check_superposition(const TermPtr& t) {
    Sorting s = sort_check(t);
    for (Sort so : s.dom)
        if (so != Sort::Info)
            throw Error(Errc::SortError, "superposition inputs must all be info wires");
    for (Sort so : s.cod)
        if (so != Sort::Info)
            throw Error(Errc::SortError, "superposition outputs must all be info wires");
    for_each_generator(t, [](const Generator& g) {
        if ((g.kind == GenKind::VSource || g.kind == GenKind::CSource) && !g.param.is_zero())
            throw Error(Errc::IndependentSourcePresent,
                        "independent source present; rewrite it as a controlled source fed by "
                        "one ; scalar(value)");
    });
    const int m = static_cast<int>(s.dom.size());
    const int p = static_cast<int>(s.cod.size());

    AffineRelation joint = denote(t);
    std::vector<AffineRelation> singles;
    std::vector<AffineRelation::Functionality> witness;
    singles.reserve(m);
    for (int j = 0; j < m; ++j) {
        TermPtr tj = t;
        for (int k = m - 1; k >= 0; --k) {
            if (k == j) continue;
            tj = plug(tj, PlugSide::Domain, k, PlugMode::SourceOff);
        }
        singles.push_back(denote(tj));
        witness.push_back(singles.back().functionality());
    }
    AffineRelation stacked = AffineRelation::identity(0);
    for (const AffineRelation& g : singles) stacked = stacked.tensor(g);

    // coordinate-wise adder (m·p) -> p
    Mat rows;
    Vec rhs;
    for (int k = 0; k < p; ++k) {
        Vec row(m * p + p, RatFunc::zero());
        for (int j = 0; j < m; ++j) row[j * p + k] = -RatFunc::one();
        row[m * p + k] = RatFunc::one();
        rows.push_back(std::move(row));
        rhs.push_back(RatFunc::zero());
    }
    AffineRelation adder = AffineRelation::from_constraints(rows, rhs, m * p, p);
    AffineRelation sum = stacked.compose(adder);

    CheckReport report{joint.contains(sum), joint == sum, sum, joint, std::move(witness)};
    return report;
}

} // namespace relcirc
