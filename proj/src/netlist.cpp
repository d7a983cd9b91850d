#include "relcirc/netlist.hpp"

#include <map>
#include <sstream>

#include "relcirc/build.hpp"

namespace relcirc {

int Netlist::node_index(const std::string& name) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == name) return static_cast<int>(i);
    throw Error(Errc::UnknownNode, "unknown node '" + name + "'");
}

namespace {

bool meter_kind(NetElement::Kind k) {
    return k == NetElement::Kind::AM || k == NetElement::Kind::VM;
}

bool source_left_is_b(NetElement::Kind k) {
    return k == NetElement::Kind::V || k == NetElement::Kind::I ||
           k == NetElement::Kind::CV || k == NetElement::Kind::CI;
}

std::string left_node(const NetElement& e) {
    return source_left_is_b(e.kind) ? e.node_b : e.node_a;
}
std::string right_node(const NetElement& e) {
    return source_left_is_b(e.kind) ? e.node_a : e.node_b;
}

} // namespace

Netlist parse_netlist(const std::string& text) {
    Netlist nl;
    auto touch_node = [&nl](const std::string& n) {
        for (const std::string& existing : nl.nodes)
            if (existing == n) return;
        nl.nodes.push_back(n);
    };

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;

        auto need = [&](size_t lo, size_t hi) {
            if (tok.size() < lo || tok.size() > hi)
                throw Error(Errc::SyntaxError,
                            "bad element line at line " + std::to_string(lineno), lineno, 1);
        };
        auto value_of = [&](const std::string& t) {
            try {
                return rat_parse(t);
            } catch (const Error& e) {
                throw Error(e.code(), std::string(e.what()) + " at line " + std::to_string(lineno),
                            lineno, 1);
            }
        };

        NetElement e;
        const std::string& kind = tok[0];
        if (kind == "R" || kind == "L" || kind == "C" || kind == "V" || kind == "I") {
            need(5, 5);
            e.kind = kind == "R"   ? NetElement::Kind::R
                     : kind == "L" ? NetElement::Kind::L
                     : kind == "C" ? NetElement::Kind::C
                     : kind == "V" ? NetElement::Kind::V
                                   : NetElement::Kind::I;
            e.name = tok[1];
            e.node_a = tok[2];
            e.node_b = tok[3];
            e.value = value_of(tok[4]);
            if (e.kind == NetElement::Kind::R && e.value < 0)
                throw Error(Errc::BadValue, "negative resistance at line " + std::to_string(lineno),
                            lineno, 1);
            if ((e.kind == NetElement::Kind::L || e.kind == NetElement::Kind::C) && e.value <= 0)
                throw Error(Errc::BadValue,
                            "inductance/capacitance must be positive at line " +
                                std::to_string(lineno),
                            lineno, 1);
        } else if (kind == "AM" || kind == "VM") {
            need(4, 4);
            e.kind = kind == "AM" ? NetElement::Kind::AM : NetElement::Kind::VM;
            e.name = tok[1];
            e.node_a = tok[2];
            e.node_b = tok[3];
        } else if (kind == "CV" || kind == "CI") {
            need(5, 6);
            e.kind = kind == "CV" ? NetElement::Kind::CV : NetElement::Kind::CI;
            e.name = tok[1];
            e.node_a = tok[2];
            e.node_b = tok[3];
            e.ctrl = tok[4];
            if (tok.size() == 6) e.gain = value_of(tok[5]);
        } else if (kind == "PORT") {
            need(4, 4);
            e.kind = NetElement::Kind::Port;
            e.name = tok[1];
            e.node_a = tok[2];
            e.node_b = tok[3];
        } else {
            throw Error(Errc::SyntaxError,
                        "unknown element kind '" + kind + "' at line " + std::to_string(lineno),
                        lineno, 1);
        }
        touch_node(e.node_a);
        touch_node(e.node_b);
        if (e.kind == NetElement::Kind::Port)
            nl.ports.push_back(std::move(e));
        else
            nl.elements.push_back(std::move(e));
    }

    // meters must be uniquely named; controls must resolve
    std::map<std::string, int> meters;
    for (const NetElement& e : nl.elements) {
        if (!meter_kind(e.kind)) continue;
        if (!meters.emplace(e.name, 0).second)
            throw Error(Errc::BadValue, "duplicate meter name '" + e.name + "'");
    }
    for (const NetElement& e : nl.elements) {
        if (e.ctrl.empty()) continue;
        auto it = meters.find(e.ctrl);
        if (it == meters.end())
            throw Error(Errc::UnknownControl, "no meter named '" + e.ctrl + "'");
        ++it->second;
    }
    for (const NetElement& e : nl.elements)
        if (meter_kind(e.kind) && meters[e.name] == 0) nl.info_outputs.push_back(e.name);
    return nl;
}

// ---- term compilation --------------------------------------------------------

namespace {

struct Label {
    enum class Kind { NodeSlot, MeterOut, CtrlIn, ElemLeft, ElemRight, Feed, PortNeg, PortPos, Boundary };
    Kind kind;
    int idx = -1;     // node index / port index / element index
    std::string name; // meter name
};

struct LabeledPipeline {
    Pipeline p;
    std::vector<Label> labels;

    explicit LabeledPipeline(SortWord dom, std::vector<Label> init)
        : p(std::move(dom)), labels(std::move(init)) {}

    void apply(const TermPtr& stage, int at, std::vector<Label> cod_labels) {
        Sorting s = sort_check(stage);
        p.apply(stage, at);
        labels.erase(labels.begin() + at, labels.begin() + at + s.dom.size());
        labels.insert(labels.begin() + at, cod_labels.begin(), cod_labels.end());
    }

    void move(int from, int to) {
        p.move(from, to);
        Label l = labels[from];
        labels.erase(labels.begin() + from);
        labels.insert(labels.begin() + to, l);
    }

    int find(Label::Kind kind, int idx = -1, const std::string& name = "") const {
        for (size_t i = 0; i < labels.size(); ++i) {
            const Label& l = labels[i];
            if (l.kind != kind) continue;
            if (idx >= 0 && l.idx != idx) continue;
            if (!name.empty() && l.name != name) continue;
            return static_cast<int>(i);
        }
        return -1;
    }

    // join two wires with the matching cap; both labels disappear
    void cap_join(int i, int j) {
        if (i < 0 || j < 0 || i == j)
            throw Error(Errc::SortError, "netlist compiler lost track of a wire");
        if (i > j) std::swap(i, j);
        Sort s = p.frontier()[i];
        move(j, i + 1);
        apply(cap_sort(s), i, {});
    }
};

} // namespace

TermPtr netlist_to_term(const Netlist& nl) {
    const int p_count = static_cast<int>(nl.ports.size());

    // spider degrees: element terminals plus port attachments
    std::vector<int> degree(nl.nodes.size(), 0);
    for (const NetElement& e : nl.elements) {
        ++degree[nl.node_index(left_node(e))];
        ++degree[nl.node_index(right_node(e))];
    }
    for (const NetElement& pt : nl.ports) {
        ++degree[nl.node_index(pt.node_a)];
        ++degree[nl.node_index(pt.node_b)];
    }

    LabeledPipeline lp{SortWord{}, {}};
    std::vector<bool> spider_added(nl.nodes.size(), false);
    auto ensure_spider = [&](int node) {
        if (spider_added[node]) return;
        spider_added[node] = true;
        std::vector<Label> slots(degree[node], Label{Label::Kind::NodeSlot, node, ""});
        lp.apply(spider(degree[node]), lp.p.width(), std::move(slots));
    };
    for (const NetElement& pt : nl.ports) {
        ensure_spider(nl.node_index(pt.node_a));
        ensure_spider(nl.node_index(pt.node_b));
    }

    for (size_t ei = 0; ei < nl.elements.size(); ++ei) {
        const NetElement& e = nl.elements[ei];
        const int nl_idx = nl.node_index(left_node(e));
        const int nr_idx = nl.node_index(right_node(e));
        ensure_spider(nl_idx);
        ensure_spider(nr_idx);

        TermPtr elem;
        std::vector<Label> labels;
        const Label left_mirror{Label::Kind::ElemLeft, -1, ""};
        const Label right_wire{Label::Kind::ElemRight, -1, ""};
        switch (e.kind) {
            case NetElement::Kind::R: elem = resistor(e.value); break;
            case NetElement::Kind::L: elem = inductor(e.value); break;
            case NetElement::Kind::C: elem = capacitor(e.value); break;
            case NetElement::Kind::V: elem = vsource(e.value); break;
            case NetElement::Kind::I: elem = csource(e.value); break;
            case NetElement::Kind::AM: elem = ammeter(); break;
            case NetElement::Kind::VM: elem = voltmeter(); break;
            case NetElement::Kind::CV: elem = ctrl_vsource(); break;
            case NetElement::Kind::CI: elem = ctrl_csource(); break;
            case NetElement::Kind::Port: continue;
        }
        if (e.kind == NetElement::Kind::CV || e.kind == NetElement::Kind::CI)
            labels = {Label{Label::Kind::CtrlIn, static_cast<int>(ei), ""}, left_mirror,
                      right_wire};
        else if (meter_kind(e.kind))
            labels = {left_mirror, Label{Label::Kind::MeterOut, -1, e.name}, right_wire};
        else
            labels = {left_mirror, right_wire};

        const int base = lp.p.width();
        lp.apply(bend_inputs(elem), base, std::move(labels));
        lp.cap_join(lp.find(Label::Kind::ElemLeft), lp.find(Label::Kind::NodeSlot, nl_idx));
        lp.cap_join(lp.find(Label::Kind::ElemRight), lp.find(Label::Kind::NodeSlot, nr_idx));
    }

    // meter-to-source info wiring, with fan-out where needed
    for (size_t mi = 0; mi < nl.elements.size(); ++mi) {
        const NetElement& m = nl.elements[mi];
        if (!meter_kind(m.kind)) continue;
        std::vector<int> consumers;
        for (size_t ei = 0; ei < nl.elements.size(); ++ei)
            if (nl.elements[ei].ctrl == m.name) consumers.push_back(static_cast<int>(ei));
        if (consumers.empty()) continue;

        for (size_t c = 0; c < consumers.size(); ++c) {
            int src = lp.find(Label::Kind::MeterOut, -1, m.name);
            int feed = src;
            if (c + 1 < consumers.size())
                lp.apply(copy_gen(), src,
                         {Label{Label::Kind::Feed, -1, ""},
                          Label{Label::Kind::MeterOut, -1, m.name}});
            else
                lp.labels[src] = Label{Label::Kind::Feed, -1, ""};
            const Rat& gain = nl.elements[consumers[c]].gain;
            if (gain != 1)
                lp.apply(scalar(RatFunc(gain)), feed, {Label{Label::Kind::Feed, -1, ""}});
            lp.cap_join(feed, lp.find(Label::Kind::CtrlIn, consumers[c]));
        }
    }

    // remaining node slots become port wires
    for (int k = 0; k < p_count; ++k) {
        int neg = lp.find(Label::Kind::NodeSlot, nl.node_index(nl.ports[k].node_b));
        if (neg < 0) throw Error(Errc::SortError, "netlist compiler lost a port slot");
        lp.labels[neg] = Label{Label::Kind::PortNeg, k, ""};
        int pos = lp.find(Label::Kind::NodeSlot, nl.node_index(nl.ports[k].node_a));
        if (pos < 0) throw Error(Errc::SortError, "netlist compiler lost a port slot");
        lp.labels[pos] = Label{Label::Kind::PortPos, k, ""};
    }
    for (const Label& l : lp.labels)
        if (l.kind != Label::Kind::MeterOut && l.kind != Label::Kind::PortNeg &&
            l.kind != Label::Kind::PortPos)
            throw Error(Errc::SortError, "netlist compiler left a dangling wire");

    // boundary order: port negatives, port positives, exported meters
    {
        std::vector<int> perm;
        for (int k = 0; k < p_count; ++k) perm.push_back(lp.find(Label::Kind::PortNeg, k));
        for (int k = 0; k < p_count; ++k) perm.push_back(lp.find(Label::Kind::PortPos, k));
        for (const std::string& m : nl.info_outputs)
            perm.push_back(lp.find(Label::Kind::MeterOut, -1, m));
        std::vector<Label> reordered;
        for (int src : perm) reordered.push_back(lp.labels[src]);
        lp.p.permute(perm);
        lp.labels = std::move(reordered);
    }

    TermPtr inner = lp.p.finish();
    if (p_count == 0) return inner;

    // bend the negative-port wires around to the left boundary
    std::vector<Label> init;
    for (int k = 0; k < p_count; ++k) init.push_back(Label{Label::Kind::Boundary, k, ""});
    LabeledPipeline outer{word_electric(p_count), std::move(init)};
    {
        std::vector<Label> cods = lp.labels;
        outer.apply(inner, p_count, std::move(cods));
    }
    for (int k = 0; k < p_count; ++k)
        outer.cap_join(outer.find(Label::Kind::Boundary, k), outer.find(Label::Kind::PortNeg, k));
    return outer.p.finish();
}

// ---- direct constraint oracle -------------------------------------------------

AffineRelation netlist_to_relation_direct(const Netlist& nl) {
    const int p_count = static_cast<int>(nl.ports.size());
    const int q_count = static_cast<int>(nl.info_outputs.size());
    const int n_nodes = static_cast<int>(nl.nodes.size());
    const int n_elems = static_cast<int>(nl.elements.size());

    // consumed meters live in the internal tail of the variable list
    std::vector<std::string> consumed;
    for (const NetElement& e : nl.elements) {
        if (!meter_kind(e.kind)) continue;
        bool exported = false;
        for (const std::string& m : nl.info_outputs) exported |= (m == e.name);
        if (!exported) consumed.push_back(e.name);
    }

    const int var_phi_l = 0;                      // [φL_k, iL_k] pairs
    const int var_phi_r = 2 * p_count;            // [φR_k, iR_k] pairs
    const int var_exported = 4 * p_count;         // exported meter readings
    const int var_node = var_exported + q_count;  // node potentials
    const int var_cur = var_node + n_nodes;       // element currents
    const int var_consumed = var_cur + n_elems;   // consumed meter readings
    const int total = var_consumed + static_cast<int>(consumed.size());

    auto meter_var = [&](const std::string& name) {
        for (int i = 0; i < q_count; ++i)
            if (nl.info_outputs[i] == name) return var_exported + i;
        for (size_t i = 0; i < consumed.size(); ++i)
            if (consumed[i] == name) return var_consumed + static_cast<int>(i);
        throw Error(Errc::UnknownControl, "no meter named '" + name + "'");
    };

    Mat rows;
    Vec rhs;
    auto row = [&](std::initializer_list<std::pair<int, RatFunc>> entries,
                   RatFunc r = RatFunc::zero()) {
        Vec v(total, RatFunc::zero());
        for (const auto& [idx, coeff] : entries) v[idx] += coeff;
        rows.push_back(std::move(v));
        rhs.push_back(std::move(r));
    };
    const RatFunc one = RatFunc::one();
    const RatFunc minus = -RatFunc::one();

    for (int k = 0; k < p_count; ++k) {
        row({{var_phi_l + 2 * k, one}, {var_node + nl.node_index(nl.ports[k].node_b), minus}});
        row({{var_phi_r + 2 * k, one}, {var_node + nl.node_index(nl.ports[k].node_a), minus}});
    }

    for (int ei = 0; ei < n_elems; ++ei) {
        const NetElement& e = nl.elements[ei];
        const int pl = var_node + nl.node_index(left_node(e));
        const int pr = var_node + nl.node_index(right_node(e));
        const int cur = var_cur + ei;
        switch (e.kind) {
            case NetElement::Kind::R:
                row({{pr, one}, {pl, minus}, {cur, -RatFunc(e.value)}});
                break;
            case NetElement::Kind::L:
                row({{pr, one}, {pl, minus}, {cur, -(RatFunc(e.value) * RatFunc::x())}});
                break;
            case NetElement::Kind::C: {
                RatFunc cx = RatFunc(e.value) * RatFunc::x();
                row({{cur, one}, {pr, -cx}, {pl, cx}});
                break;
            }
            case NetElement::Kind::V:
                row({{pr, one}, {pl, minus}}, RatFunc(e.value));
                break;
            case NetElement::Kind::I:
                row({{cur, one}}, RatFunc(e.value));
                break;
            case NetElement::Kind::AM:
                row({{pr, one}, {pl, minus}});
                row({{meter_var(e.name), one}, {cur, minus}});
                break;
            case NetElement::Kind::VM:
                row({{cur, one}});
                row({{meter_var(e.name), one}, {pr, minus}, {pl, one}});
                break;
            case NetElement::Kind::CV:
                row({{pr, one}, {pl, minus}, {meter_var(e.ctrl), -RatFunc(e.gain)}});
                break;
            case NetElement::Kind::CI:
                row({{cur, one}, {meter_var(e.ctrl), -RatFunc(e.gain)}});
                break;
            case NetElement::Kind::Port: break;
        }
    }

    for (int n = 0; n < n_nodes; ++n) {
        Vec v(total, RatFunc::zero());
        bool touched = false;
        for (int ei = 0; ei < n_elems; ++ei) {
            const NetElement& e = nl.elements[ei];
            if (nl.node_index(left_node(e)) == n) {
                v[var_cur + ei] += one;
                touched = true;
            }
            if (nl.node_index(right_node(e)) == n) {
                v[var_cur + ei] -= one;
                touched = true;
            }
        }
        for (int k = 0; k < p_count; ++k) {
            if (nl.node_index(nl.ports[k].node_b) == n) {
                v[var_phi_l + 2 * k + 1] -= one;
                touched = true;
            }
            if (nl.node_index(nl.ports[k].node_a) == n) {
                v[var_phi_r + 2 * k + 1] += one;
                touched = true;
            }
        }
        if (touched) {
            rows.push_back(std::move(v));
            rhs.push_back(RatFunc::zero());
        }
    }

    AffineRelation full =
        AffineRelation::from_constraints(rows, rhs, 2 * p_count, total - 2 * p_count);
    return full.project_prefix(2 * p_count, 2 * p_count + q_count);
}

} // namespace relcirc
