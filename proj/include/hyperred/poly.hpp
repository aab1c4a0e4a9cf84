#pragma once

#include <initializer_list>
#include <limits>
#include <vector>

#include "hyperred/errors.hpp"
#include "hyperred/rational.hpp"

namespace hyperred {

// Dense univariate polynomial over exact rationals. coeff(i) is the
// coefficient of k^i. Trailing zeros are never stored, so the zero
// polynomial owns no coefficients at all. Values are immutable in spirit:
// every operation returns a fresh polynomial.
class Poly {
public:
    // Degree reported for the zero polynomial; below every natural number
    // and distinct from deg(a) - 1 for any nonzero a.
    static constexpr int kNegDeg = std::numeric_limits<int>::min();

    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs);

    static Poly constant(const Rat& c);
    static Poly monomial(int degree, const Rat& coeff = Rat(1));
    static Poly variable();

    int degree() const { return coeffs_.empty() ? kNegDeg : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    // Leading coefficient; the zero polynomial has none.
    const Rat& lc() const;

    // Coefficient of k^i, zero outside the stored range.
    Rat coeff(int i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // Horner evaluation.
    Rat operator()(const Rat& point) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly p, const Rat& s) { p *= s; return p; }
    friend Poly operator*(const Rat& s, Poly p) { p *= s; return p; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

Poly pow(const Poly& base, unsigned e);

// q(k) = p(k + c), exact Taylor shift.
Poly shift(const Poly& p, const Rat& c);

// q(k) = p(s*k + c).
Poly compose_linear(const Poly& p, const Rat& s, const Rat& c);

enum class Parity { Even, Odd, Mixed, Zero };

// Expansion of a polynomial in powers of (k + gamma). Round-trips
// losslessly with Poly through to_power_basis / from_power_basis.
class PowerBasisPoly {
public:
    PowerBasisPoly(Rat gamma, std::vector<Rat> coeffs);

    const Rat& gamma() const { return gamma_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int i) const;
    int degree() const { return coeffs_.empty() ? Poly::kNegDeg : static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    friend bool operator==(const PowerBasisPoly& a, const PowerBasisPoly& b) {
        return a.gamma_ == b.gamma_ && a.coeffs_ == b.coeffs_;
    }

private:
    Rat gamma_;
    std::vector<Rat> coeffs_;
};

PowerBasisPoly to_power_basis(const Poly& p, const Rat& gamma);
Poly from_power_basis(const PowerBasisPoly& q);

// Even iff all odd-index coefficients vanish, Odd iff all even-index ones
// do, Zero for the zero polynomial, Mixed otherwise.
Parity parity(const PowerBasisPoly& q);

}  // namespace hyperred
