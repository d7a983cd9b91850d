#include "relcirc/parse.hpp"

#include <cctype>
#include <sstream>

namespace relcirc {

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    explicit Lexer(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(Errc::SyntaxError,
                    msg + " at line " + std::to_string(line) + ", col " + std::to_string(col),
                    line, col);
    }

    void advance() {
        if (s[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_ws() {
        while (pos < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[pos]))) {
                advance();
            } else if (s[pos] == '#') {
                while (pos < s.size() && s[pos] != '\n') advance();
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) advance();
        if (pos == start) fail("expected a generator name");
        return s.substr(start, pos - start);
    }

    // contents of a parenthesized argument, balanced
    std::string paren_arg() {
        expect('(');
        size_t start = pos;
        int depth = 1;
        while (pos < s.size()) {
            char c = s[pos];
            if (c == '(') ++depth;
            if (c == ')') {
                --depth;
                if (depth == 0) {
                    std::string out = s.substr(start, pos - start);
                    advance();
                    return out;
                }
            }
            advance();
        }
        fail("unterminated '('");
    }

    int natural() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) advance();
        if (pos == start) fail("expected a number");
        return std::stoi(s.substr(start, pos - start));
    }
};

struct TermParser {
    Lexer lex;

    explicit TermParser(const std::string& text) : lex(text) {}

    TermPtr parse() {
        TermPtr t = parse_seq();
        if (!lex.eof()) lex.fail("trailing input");
        return t;
    }

    TermPtr parse_seq() {
        TermPtr acc = parse_par();
        while (lex.accept(';')) acc = seq(acc, parse_par());
        return acc;
    }

    TermPtr parse_par() {
        TermPtr acc = parse_atom();
        while (lex.accept('|')) acc = par(acc, parse_atom());
        return acc;
    }

    SortWord sort_tag() {
        lex.expect(':');
        lex.skip_ws();
        SortWord w;
        bool saw_zero = false;
        for (;;) {
            char c = lex.pos < lex.s.size() ? lex.s[lex.pos] : '\0';
            if (c == 'e') {
                w.push_back(Sort::Electric);
                lex.advance();
            } else if (c == 'n') {
                w.push_back(Sort::Info);
                lex.advance();
            } else if (c == '0' && w.empty() && !saw_zero) {
                saw_zero = true;
                lex.advance();
            } else {
                break;
            }
        }
        if (w.empty() && !saw_zero) lex.fail("expected sort tag (e, n or 0)");
        return w;
    }

    TermPtr parse_atom() {
        if (lex.accept('(')) {
            TermPtr t = parse_seq();
            lex.expect(')');
            return t;
        }
        int at_line = lex.line, at_col = lex.col;
        std::string name = lex.ident();
        auto value_arg = [&] { return rat_parse(lex.paren_arg()); };
        auto rf_arg = [&] { return RatFunc::parse(lex.paren_arg()); };

        if (name == "R") return resistor(value_arg());
        if (name == "V") return vsource(value_arg());
        if (name == "I") return csource(value_arg());
        if (name == "L") return inductor(value_arg());
        if (name == "C") return capacitor(value_arg());
        if (name == "junc") return junction();
        if (name == "cojunc") return cojunction();
        if (name == "open") return open_right();
        if (name == "coopen") return open_left();
        if (name == "voltmeter") return voltmeter();
        if (name == "ammeter") return ammeter();
        if (name == "cvs") return ctrl_vsource();
        if (name == "ccs") return ctrl_csource();
        if (name == "copy") return copy_gen();
        if (name == "discard") return discard_gen();
        if (name == "add") return add_gen();
        if (name == "zero") return zero_gen();
        if (name == "one") return one_gen();
        if (name == "cocopy") return cocopy_gen();
        if (name == "codiscard") return codiscard_gen();
        if (name == "coadd") return coadd_gen();
        if (name == "cozero") return cozero_gen();
        if (name == "scalar") return scalar(rf_arg());
        if (name == "coscalar") return coscalar(rf_arg());
        if (name == "id") return id(sort_tag());
        if (name == "swap") {
            SortWord w = sort_tag();
            if (w.size() != 2)
                throw Error(Errc::SyntaxError, "swap needs exactly two sorts", at_line, at_col);
            return swap_gen(w[0], w[1]);
        }
        if (name == "box") {
            int m = 0, n = 0;
            if (lex.peek() == '(') {
                lex.expect('(');
                m = lex.natural();
                lex.expect(',');
                n = lex.natural();
                lex.expect(')');
            }
            lex.expect('{');
            TermPtr payload = parse_seq();
            lex.expect('}');
            return impedance_box(payload, m, n);
        }
        throw Error(Errc::SyntaxError,
                    "unknown generator '" + name + "' at line " + std::to_string(at_line) +
                        ", col " + std::to_string(at_col),
                    at_line, at_col);
    }
};

// printing levels: seq chain > par chain > atom
void print_seq(std::ostream& os, const TermPtr& t);

void print_atom(std::ostream& os, const TermPtr& t) {
    if (auto* g = std::get_if<Term::Gen>(&t->node)) {
        const Generator& gn = g->g;
        switch (gn.kind) {
            case GenKind::Resistor:
            case GenKind::VSource:
            case GenKind::CSource:
            case GenKind::Inductor:
            case GenKind::Capacitor:
                os << gen_name(gn.kind) << "(" << rat_str(gn.param.constant_value()) << ")";
                return;
            case GenKind::Scalar:
            case GenKind::CoScalar:
                os << gen_name(gn.kind) << "(" << gn.param.str() << ")";
                return;
            case GenKind::ImpedanceBox:
                os << "box";
                if (gn.box_m != 0 || gn.box_n != 0)
                    os << "(" << gn.box_m << "," << gn.box_n << ")";
                os << "{ ";
                print_seq(os, gn.payload);
                os << " }";
                return;
            default: os << gen_name(gn.kind); return;
        }
    }
    if (auto* i = std::get_if<Term::Id>(&t->node)) {
        os << "id:";
        if (i->word.empty()) {
            os << "0";
        } else {
            for (Sort s : i->word) os << (s == Sort::Electric ? 'e' : 'n');
        }
        return;
    }
    if (auto* s = std::get_if<Term::SwapT>(&t->node)) {
        os << "swap:" << (s->first == Sort::Electric ? 'e' : 'n')
           << (s->second == Sort::Electric ? 'e' : 'n');
        return;
    }
    os << "(";
    print_seq(os, t);
    os << ")";
}

void print_par(std::ostream& os, const TermPtr& t) {
    if (auto* p = std::get_if<Term::Par>(&t->node)) {
        print_par(os, p->lhs);
        os << " | ";
        print_atom(os, p->rhs);
        return;
    }
    print_atom(os, t);
}

void print_seq(std::ostream& os, const TermPtr& t) {
    if (auto* q = std::get_if<Term::Seq>(&t->node)) {
        print_seq(os, q->lhs);
        os << " ; ";
        print_par(os, q->rhs);
        return;
    }
    print_par(os, t);
}

} // namespace

TermPtr parse_term(const std::string& text) { return TermParser(text).parse(); }

std::string pretty_print(const TermPtr& t) {
    std::ostringstream os;
    print_seq(os, t);
    return os.str();
}

} // namespace relcirc
