#include "relcirc/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "relcirc/analysis.hpp"
#include "relcirc/axioms.hpp"
#include "relcirc/netlist.hpp"
#include "relcirc/parse.hpp"
#include "relcirc/semantics.hpp"

namespace relcirc::cli {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::SyntaxError, "cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// .ckt files hold terms, .net files netlists (compiled on load)
TermPtr load_term(const std::string& path) {
    std::string text = slurp(path);
    if (has_suffix(path, ".net")) return netlist_to_term(parse_netlist(text));
    if (has_suffix(path, ".ckt")) return parse_term(text);
    throw Error(Errc::SyntaxError, "unknown file extension on '" + path + "' (want .ckt or .net)");
}

void print_relation(std::ostream& out, const AffineRelation& r, bool json) {
    if (json) {
        out << r.json() << "\n";
        return;
    }
    out << "dom_width: " << r.dom_width() << "\n";
    out << "cod_width: " << r.cod_width() << "\n";
    out << "empty: " << (r.is_empty() ? "true" : "false") << "\n";
    if (r.is_empty()) return;
    auto vec = [&](const Vec& v) {
        out << "[";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) out << ", ";
            out << v[i].str();
        }
        out << "]";
    };
    out << "offset: ";
    vec(r.offset());
    out << "\n";
    out << "basis:";
    if (r.basis().empty()) out << " (none)";
    out << "\n";
    for (const Vec& row : r.basis()) {
        out << "  ";
        vec(row);
        out << "\n";
    }
}

void print_report(std::ostream& out, const CheckReport& rep, bool json) {
    if (json) {
        out << rep.json() << "\n";
        return;
    }
    out << "inclusion: " << (rep.inclusion_holds ? "holds" : "VIOLATED") << "\n";
    out << "equality: " << (rep.equality_holds ? "holds" : "strict inclusion") << "\n";
    for (size_t i = 0; i < rep.functional_witness.size(); ++i)
        out << "component " << i << ": total=" << (rep.functional_witness[i].total ? "yes" : "no")
            << " single_valued=" << (rep.functional_witness[i].single_valued ? "yes" : "no")
            << "\n";
}

int run_impl(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"relcirc - exact relational semantics for electrical circuit diagrams"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may trail the subcommand
    bool json = false;
    long seed = 0;
    app.add_flag("--json", json, "emit JSON");
    app.add_option("--seed", seed, "seed for randomized commands (reserved)");

    std::string file1, file2;
    auto* cmd_denote = app.add_subcommand("denote", "print the denotation of a circuit");
    cmd_denote->add_option("file", file1)->required();
    auto* cmd_eq = app.add_subcommand("eq", "decide semantic equality of two circuits");
    cmd_eq->add_option("file1", file1)->required();
    cmd_eq->add_option("file2", file2)->required();
    auto* cmd_leq = app.add_subcommand("leq", "decide semantic containment (first ⊆ second)");
    cmd_leq->add_option("file1", file1)->required();
    cmd_leq->add_option("file2", file2)->required();
    auto* cmd_thevenin = app.add_subcommand("thevenin", "canonical one-port form");
    cmd_thevenin->add_option("file", file1)->required();
    auto* cmd_measure = app.add_subcommand("measure", "solve a closed circuit's meter readings");
    cmd_measure->add_option("file", file1)->required();
    auto* cmd_check = app.add_subcommand("check", "run a verification report");
    cmd_check->add_option("file", file1)->required();
    bool inv = false, indep = false, super = false;
    cmd_check->add_flag("--invariants", inv, "relativity and current conservation");
    cmd_check->add_flag("--independent-measurement", indep, "joint vs one-at-a-time measurement");
    cmd_check->add_flag("--superposition", super, "joint vs one-source-at-a-time sum");
    auto* cmd_netlist = app.add_subcommand("netlist", "compile a netlist");
    cmd_netlist->add_option("file", file1)->required();
    bool to_term = false, do_denote = false;
    cmd_netlist->add_flag("--to-term", to_term, "print the compiled term");
    cmd_netlist->add_flag("--denote", do_denote, "print the compiled term's denotation");
    auto* cmd_axioms = app.add_subcommand("axioms", "run the built-in axiom suite");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream dump;
        int code = app.exit(e, dump, dump);
        out << dump.str();
        return code == 0 ? 0 : 2;
    }

    if (cmd_denote->parsed()) {
        print_relation(out, denote(load_term(file1)), json);
        return 0;
    }
    if (cmd_eq->parsed()) {
        bool equal = denote(load_term(file1)) == denote(load_term(file2));
        out << (equal ? "equal" : "not equal") << "\n";
        return equal ? 0 : 1;
    }
    if (cmd_leq->parsed()) {
        bool leq = denote(load_term(file2)).contains(denote(load_term(file1)));
        out << (leq ? "contained" : "not contained") << "\n";
        return leq ? 0 : 1;
    }
    if (cmd_thevenin->parsed()) {
        TheveninForm form = thevenin(load_term(file1));
        if (json) {
            out << form.json() << "\n";
        } else {
            switch (form.kind) {
                case TheveninForm::Case::SeriesVR:
                    out << "series source and resistor: V0 = " << form.v0.str()
                        << ", R = " << form.r.str() << "\n";
                    break;
                case TheveninForm::Case::CurrentSrc:
                    out << "current source: I0 = " << form.i0.str() << "\n";
                    break;
                case TheveninForm::Case::EmptyCircuit:
                    out << "empty relation (no consistent behavior)\n";
                    break;
                case TheveninForm::Case::NonCanonical: out << "non-canonical one-port\n"; break;
            }
        }
        return 0;
    }
    if (cmd_measure->parsed()) {
        MeasurementResult res = measure(load_term(file1));
        if (json) {
            out << res.json() << "\n";
        } else {
            switch (res.kind) {
                case MeasurementResult::Kind::Empty: out << "empty: no consistent solution\n"; break;
                case MeasurementResult::Kind::UniquePoint:
                    out << "unique solution:";
                    for (const RatFunc& v : res.values) out << " " << v.str();
                    out << "\n";
                    break;
                case MeasurementResult::Kind::Underdetermined:
                    out << "underdetermined, solution space dimension " << res.dim << "\n";
                    break;
            }
        }
        return 0;
    }
    if (cmd_check->parsed()) {
        if (static_cast<int>(inv) + static_cast<int>(indep) + static_cast<int>(super) != 1)
            throw Error(Errc::BadValue,
                        "check needs exactly one of --invariants, --independent-measurement, "
                        "--superposition");
        TermPtr t = load_term(file1);
        if (inv) {
            PortInvariants pi = check_port_invariants(t);
            if (json)
                out << "{\"relativity\":" << (pi.relativity ? "true" : "false")
                    << ",\"conservation\":" << (pi.conservation ? "true" : "false") << "}\n";
            else
                out << "relativity: " << (pi.relativity ? "holds" : "VIOLATED")
                    << "\nconservation: " << (pi.conservation ? "holds" : "VIOLATED") << "\n";
            return pi.relativity && pi.conservation ? 0 : 1;
        }
        CheckReport rep = indep ? check_independent_measurement(t) : check_superposition(t);
        print_report(out, rep, json);
        return rep.inclusion_holds && rep.equality_holds ? 0 : 1;
    }
    if (cmd_netlist->parsed()) {
        if (static_cast<int>(to_term) + static_cast<int>(do_denote) != 1)
            throw Error(Errc::BadValue, "netlist needs exactly one of --to-term, --denote");
        Netlist nl = parse_netlist(slurp(file1));
        TermPtr t = netlist_to_term(nl);
        if (to_term)
            out << pretty_print(t) << "\n";
        else
            print_relation(out, denote(t), json);
        return 0;
    }
    if (cmd_axioms->parsed()) {
        bool all = true;
        std::vector<AxiomResult> results = run_axiom_suite();
        if (json) {
            out << "[";
            for (size_t i = 0; i < results.size(); ++i) {
                if (i) out << ",";
                out << "{\"name\":\"" << results[i].name
                    << "\",\"pass\":" << (results[i].pass ? "true" : "false") << "}";
                all &= results[i].pass;
            }
            out << "]\n";
        } else {
            for (const AxiomResult& r : results) {
                out << (r.pass ? "pass" : "FAIL") << "  " << r.name << "\n";
                all &= r.pass;
            }
        }
        return all ? 0 : 1;
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    try {
        return run_impl(args, out);
    } catch (const Error& e) {
        out << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
        switch (e.code()) {
            // the input file itself is ill-formed
            case Errc::SyntaxError:
            case Errc::SortMismatch:
            case Errc::IllFormedBox: return 2;
            // the file is fine but the operation's precondition is not met
            default: return 3;
        }
    }
}

} // namespace relcirc::cli
