#include "relcirc/ratfunc.hpp"

#include <cctype>

namespace relcirc {

RatFunc::RatFunc(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Poly();
        den_ = Poly::one();
        return;
    }
    Poly g = Poly::gcd(num, den);
    Poly q, r;
    Poly::divmod(num, g, q, r);
    num_ = q;
    Poly::divmod(den, g, q, r);
    den_ = q;
    Rat lead = den_.leading();
    if (lead != 1) {
        Rat inv = Rat(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rat RatFunc::constant_value() const { return num_.constant_value(); }

RatFunc RatFunc::operator-() const {
    RatFunc out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_is_one() && b.den_is_one()) return RatFunc::raw(a.num_ + b.num_, Poly::one());
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_is_one() && b.den_is_one()) return RatFunc::raw(a.num_ * b.num_, Poly::one());
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw Error(Errc::DivisionByZero, "division by the zero rational function");
    if (a.is_zero()) return RatFunc();
    if (b.is_constant()) {
        Rat inv = Rat(1) / b.constant_value();
        return RatFunc::raw(a.num_.scaled(inv), a.den_);
    }
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
    return RatFunc(den_, num_);
}

Rat RatFunc::eval(const Rat& point) const {
    Rat d = den_.eval(point);
    if (d == 0) throw Error(Errc::PoleAtPoint, "pole at " + point.get_str());
    return num_.eval(point) / d;
}

std::string RatFunc::str() const {
    if (den_ == Poly::one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

// Recursive descent for the literal grammar:
//   ratfunc := rfatom [ "/" rfatom ]
//   rfatom  := "(" poly ")" | poly
//   poly    := [sign] term { ("+"|"-") term }
//   term    := coeff [ "*" xpart ] | xpart
//   xpart   := "x" [ "^" nat ]
//   coeff   := nat [ "/" nat ]        (the "/" is a coefficient slash only
//                                      when a digit follows)
struct RfParser {
    const std::string& s;
    size_t pos = 0;

    explicit RfParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw Error(Errc::SyntaxError,
                        std::string("expected '") + c + "' in rational-function literal");
    }

    mpz_class parse_nat() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start)
            throw Error(Errc::SyntaxError, "expected number in rational-function literal");
        return mpz_class(s.substr(start, pos - start));
    }

    int parse_exponent() {
        mpz_class n = parse_nat();
        if (!n.fits_sint_p())
            throw Error(Errc::SyntaxError, "exponent too large");
        return static_cast<int>(n.get_si());
    }

    // x or x^k
    Poly parse_xpart() {
        expect('x');
        int power = 1;
        if (accept('^')) power = parse_exponent();
        std::vector<Rat> coeffs(power + 1, rat(0));
        coeffs[power] = rat(1);
        return Poly(std::move(coeffs));
    }

    Poly parse_term() {
        if (peek() == 'x') return parse_xpart();
        mpz_class numer = parse_nat();
        mpz_class denom = 1;
        {
            size_t save = pos;
            if (accept('/')) {
                if (std::isdigit(static_cast<unsigned char>(peek()))) {
                    denom = parse_nat();
                    if (denom == 0)
                        throw Error(Errc::ZeroDenominator, "zero denominator in coefficient");
                } else {
                    pos = save; // the "/" belongs to the ratfunc level
                }
            }
        }
        Rat c(numer, denom);
        c.canonicalize();
        if (accept('*')) {
            Poly xp = parse_xpart();
            return xp.scaled(c);
        }
        return Poly(c);
    }

    Poly parse_poly() {
        Poly acc;
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        Poly t = parse_term();
        acc = neg ? -t : t;
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Poly u = parse_term();
                acc = (c == '+') ? acc + u : acc - u;
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_rfatom() {
        if (accept('(')) {
            Poly p = parse_poly();
            expect(')');
            return p;
        }
        return parse_poly();
    }

    RatFunc parse() {
        Poly num = parse_rfatom();
        Poly den = Poly::one();
        if (accept('/')) den = parse_rfatom();
        skip_ws();
        if (pos != s.size())
            throw Error(Errc::SyntaxError,
                        "trailing input in rational-function literal at offset " +
                            std::to_string(pos));
        return RatFunc(num, den);
    }
};

} // namespace

RatFunc RatFunc::parse(const std::string& text) { return RfParser(text).parse(); }

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::ZeroDenominator: return "ZeroDenominator";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::PoleAtPoint: return "PoleAtPoint";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::WidthMismatch: return "WidthMismatch";
        case Errc::SortMismatch: return "SortMismatch";
        case Errc::IllFormedBox: return "IllFormedBox";
        case Errc::SyntaxError: return "SyntaxError";
        case Errc::NotInfoWire: return "NotInfoWire";
        case Errc::BadPayloadSort: return "BadPayloadSort";
        case Errc::InvariantViolation: return "InvariantViolation";
        case Errc::ForbiddenElement: return "ForbiddenElement";
        case Errc::PatternMismatch: return "PatternMismatch";
        case Errc::IndependentSourcePresent: return "IndependentSourcePresent";
        case Errc::UnknownGadget: return "UnknownGadget";
        case Errc::UnknownNode: return "UnknownNode";
        case Errc::UnknownControl: return "UnknownControl";
        case Errc::BadValue: return "BadValue";
        case Errc::SortError: return "SortError";
    }
    return "Error";
}

} // namespace relcirc
