#include "hyperred/poly.hpp"

#include <algorithm>

namespace hyperred {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) {
    normalize();
}

Poly Poly::constant(const Rat& c) {
    return Poly{c};
}

Poly Poly::monomial(int degree, const Rat& coeff) {
    if (degree < 0) throw Error("monomial with negative degree");
    std::vector<Rat> c(static_cast<size_t>(degree) + 1, Rat(0));
    c.back() = coeff;
    return Poly(std::move(c));
}

Poly Poly::variable() {
    return Poly{Rat(0), Rat(1)};
}

void Poly::normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rat& Poly::lc() const {
    if (is_zero()) throw ZeroInputError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rat Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<size_t>(i)];
}

Rat Poly::operator()(const Rat& point) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (sgn(s) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly pow(const Poly& base, unsigned e) {
    Poly r = Poly::constant(Rat(1));
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

Poly shift(const Poly& p, const Rat& c) {
    // Horner in the polynomial ring: fold against (k + c).
    const Poly arg{c, Rat(1)};
    Poly acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * arg + Poly::constant(*it);
    return acc;
}

Poly compose_linear(const Poly& p, const Rat& s, const Rat& c) {
    const Poly arg{c, s};
    Poly acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * arg + Poly::constant(*it);
    return acc;
}

PowerBasisPoly::PowerBasisPoly(Rat gamma, std::vector<Rat> coeffs)
    : gamma_(std::move(gamma)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rat PowerBasisPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<size_t>(i)];
}

PowerBasisPoly to_power_basis(const Poly& p, const Rat& gamma) {
    // p(k) = sum b_i (k + gamma)^i  <=>  b = coefficients of p(k - gamma).
    return PowerBasisPoly(gamma, shift(p, -gamma).coeffs());
}

Poly from_power_basis(const PowerBasisPoly& q) {
    return shift(Poly(q.coeffs()), q.gamma());
}

Parity parity(const PowerBasisPoly& q) {
    if (q.is_zero()) return Parity::Zero;
    bool even_seen = false;
    bool odd_seen = false;
    const auto& c = q.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) == 0) continue;
        (i % 2 == 0 ? even_seen : odd_seen) = true;
    }
    if (even_seen && odd_seen) return Parity::Mixed;
    return even_seen ? Parity::Even : Parity::Odd;
}

}  // namespace hyperred
