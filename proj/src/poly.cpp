#include "relcirc/poly.hpp"

#include <sstream>

namespace relcirc {

Rat rat_parse(const std::string& text) {
    if (text.empty()) throw Error(Errc::BadValue, "empty rational literal");
    Rat q;
    if (q.set_str(text, 10) != 0)
        throw Error(Errc::BadValue, "malformed rational literal '" + text + "'");
    if (q.get_den() == 0)
        throw Error(Errc::ZeroDenominator, "rational with zero denominator '" + text + "'");
    q.canonicalize();
    return q;
}

Poly::Poly(Rat constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return Poly(std::vector<Rat>{rat(0), rat(1)}); }

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return rat(0);
    return coeffs_[power];
}

Rat Poly::leading() const {
    return coeffs_.empty() ? rat(0) : coeffs_.back();
}

Rat Poly::constant_value() const {
    return coeffs_.empty() ? rat(0) : coeffs_[0];
}

Poly Poly::operator-() const {
    std::vector<Rat> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return Poly(std::move(out));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(out));
}

Poly Poly::scaled(const Rat& k) const {
    if (k == 0) return Poly();
    std::vector<Rat> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * k;
    return Poly(std::move(out));
}

Poly Poly::monic() const {
    Rat lead = leading();
    return scaled(Rat(1 / lead));
}

void Poly::divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
    if (den.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
    std::vector<Rat> r = num.coeffs_;
    int dd = den.degree();
    std::vector<Rat> q(std::max<size_t>(num.coeffs_.size(), 1), rat(0));
    Rat lead = den.leading();
    while (static_cast<int>(r.size()) - 1 >= dd && !r.empty()) {
        int shift = static_cast<int>(r.size()) - 1 - dd;
        Rat factor = r.back() / lead;
        q[shift] = factor;
        for (int i = 0; i <= dd; ++i)
            r[shift + i] -= factor * den.coeffs_[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    quot = Poly(std::move(q));
    rem = Poly(std::move(r));
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly q, r;
        divmod(u, v, q, r);
        u = std::move(v);
        // keeping the remainder monic bounds coefficient growth
        v = r.is_zero() ? Poly() : r.monic();
    }
    if (u.is_zero()) return u;
    return u.monic();
}

Rat Poly::eval(const Rat& point) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * point + *it;
    return acc;
}

std::string Poly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int p = degree(); p >= 0; --p) {
        const Rat c = coeff(p);
        if (c == 0) continue;
        Rat mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (p == 0 || mag != 1) {
            os << mag.get_str();
            if (p > 0) os << "*";
        }
        if (p > 0) {
            os << "x";
            if (p > 1) os << "^" << p;
        }
    }
    return os.str();
}

} // namespace relcirc
