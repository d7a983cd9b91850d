#ifndef RELCIRC_POLY_HPP
#define RELCIRC_POLY_HPP

#include <string>
#include <vector>

#include "relcirc/rat.hpp"

namespace relcirc {

// Univariate polynomial over Q in the indeterminate x, dense coefficients by
// ascending power. The zero polynomial has an empty coefficient vector; the
// leading coefficient is always nonzero.
class Poly {
public:
    Poly() = default;
    explicit Poly(Rat constant);
    explicit Poly(std::vector<Rat> coeffs); // trims leading zeros

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(rat(1)); }
    static Poly x();

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int power) const;
    Rat leading() const;
    Rat constant_value() const; // requires is_constant()

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Rat& k) const;
    Poly monic() const; // requires nonzero

    // Euclidean division; remainder has degree < degree(divisor).
    static void divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem);
    static Poly gcd(const Poly& a, const Poly& b); // monic (or zero when both zero)

    Rat eval(const Rat& point) const;

    std::string str() const; // descending powers, e.g. "3*x^2 - 1/2*x + 4"

private:
    std::vector<Rat> coeffs_;
    void trim();
};

} // namespace relcirc

#endif
