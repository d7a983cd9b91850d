#ifndef RELCIRC_RATFUNC_HPP
#define RELCIRC_RATFUNC_HPP

#include <string>

#include "relcirc/poly.hpp"

namespace relcirc {

// Element of Q(x): num/den with gcd(num, den) = 1 and den monic. Zero is 0/1,
// so structural equality decides field equality.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(Rat constant) : num_(Poly(std::move(constant))), den_(Poly::one()) {}
    RatFunc(const Poly& num, const Poly& den); // normalizes; throws ZeroDenominator

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(rat(1)); }
    static RatFunc x() { return RatFunc(Poly::x(), Poly::one()); }
    static RatFunc from_int(long v) { return RatFunc(rat(v)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_ == Poly::one(); }
    Rat constant_value() const; // requires is_constant()

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b); // throws DivisionByZero
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc inverse() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    Rat eval(const Rat& point) const; // throws PoleAtPoint

    // "(num)/(den)", or bare "num" when den = 1
    std::string str() const;
    static RatFunc parse(const std::string& text);

private:
    struct RawTag {};
    RatFunc(Poly num, Poly den, RawTag) : num_(std::move(num)), den_(std::move(den)) {}
    // trusts that the arguments are already reduced with a monic denominator
    static RatFunc raw(Poly num, Poly den) { return RatFunc(std::move(num), std::move(den), RawTag{}); }

    bool den_is_one() const { return den_.degree() == 0; } // monic => constant den is 1

    Poly num_;
    Poly den_;
};

} // namespace relcirc

#endif
