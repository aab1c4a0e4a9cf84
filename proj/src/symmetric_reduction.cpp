#include "hyperred/symmetric_reduction.hpp"

namespace hyperred {

TermSpec TermSpec::make(int sign, const Rat& alpha, int power) {
    if (sign != 1 && sign != -1) throw HypothesisError("sign must be +1 or -1");
    if (power < 1) throw HypothesisError("power must be a positive integer");
    if (sign == 1) {
        const Rat blocked = -alpha * power;
        if (is_integer(blocked) && sgn(blocked) >= 0)
            throw HypothesisError("-alpha*power must not be a nonnegative integer for sign +1");
    }
    TermSpec spec;
    spec.sign = sign;
    spec.alpha = alpha;
    spec.denom = alpha.get_den();
    spec.power = power;
    return spec;
}

Poly TermSpec::ratio_numerator() const {
    Poly p = pow(Poly{alpha, Rat(1)}, static_cast<unsigned>(power));
    return sign == -1 ? -p : p;
}

Poly TermSpec::ratio_denominator() const {
    return pow(Poly{Rat(1), Rat(1)}, static_cast<unsigned>(power));
}

namespace {

Poly require_integer_coeffs(const Poly& p, const char* what) {
    for (const auto& c : p.coeffs())
        if (!is_integer(c)) throw Error(std::string(what) + ": non-integer coefficient");
    return p;
}

void require_parity(const Poly& p, int par, const char* what) {
    for (int i = 0; i <= p.degree(); ++i)
        if ((i - par) % 2 != 0 && sgn(p.coeff(i)) != 0)
            throw Error(std::string(what) + ": parity violated");
}

}  // namespace

Poly step_image(const TermSpec& spec, int s) {
    const Rat da(spec.alpha * Rat(spec.denom));
    const Rat d(spec.denom);
    const unsigned r = static_cast<unsigned>(spec.power);
    const unsigned us = static_cast<unsigned>(s);
    const Poly plus = pow(Poly{da, Rat(1)}, r) * pow(Poly{d, Rat(1)}, us);
    const Poly minus = pow(Poly{-da, Rat(1)}, r) * pow(Poly{-d, Rat(1)}, us);
    const Rat half = make_rational(1, 2);
    const Poly result = spec.sign == -1 ? half * (plus + minus) : half * (plus - minus);
    return require_integer_coeffs(result, "step_image");
}

Poly step_witness(const TermSpec& spec, int s) {
    const Rat c = spec.alpha * Rat(spec.denom) - Rat(spec.denom);
    const Poly base = pow(Poly{c, Rat(1)}, static_cast<unsigned>(s));
    return spec.sign == -1 ? -base : base;
}

Poly substituted_power(const TermSpec& spec, int m) {
    const Rat two_d(2 * spec.denom);
    const Rat da(spec.alpha * Rat(spec.denom));
    return pow(Poly{da, two_d}, static_cast<unsigned>(m));
}

namespace {

void finish_reduction(const TermSpec& spec, IntegralReduction& red, const Poly& remainder,
                      int max_index) {
    require_integer_coeffs(remainder, "reduction remainder");
    require_integer_coeffs(red.witness, "reduction witness");
    require_parity(remainder, red.m % 2, "reduction remainder");
    if (remainder.degree() > max_index) throw Error("reduction remainder too large");
    for (int i = 0; i <= remainder.degree(); ++i)
        if (sgn(remainder.coeff(i)) != 0) red.coeff_a[i] = remainder.coeff(i).get_num();

    // The certificate identity is what the whole construction rests on;
    // check it before handing the reduction out.
    const SpaceInfo info = analyze(spec.ratio_numerator(), spec.ratio_denominator());
    const Poly f = substituted_power(spec, red.m);
    if (!verify_certificate(info, f, to_certificate(spec, red)).pass)
        throw Error("integral reduction certificate failed to verify");
}

}  // namespace

IntegralReduction reduce_alternating(const TermSpec& spec, int m) {
    if (spec.sign != -1) throw HypothesisError("reduce_alternating needs sign -1");
    if (m < 1) throw HypothesisError("m must be a positive integer");
    IntegralReduction red;
    red.m = m;
    red.witness_scale = pow_int(Int(2), static_cast<unsigned>(spec.power - 1)) *
                        pow_int(spec.denom, static_cast<unsigned>(spec.power));
    Poly p = Poly::monomial(m);
    for (int s = m - spec.power; s >= 0; s -= 2) {
        const Rat c = p.coeff(s + spec.power);
        if (sgn(c) == 0) continue;
        p -= c * step_image(spec, s);
        red.witness += c * step_witness(spec, s);
    }
    finish_reduction(spec, red, p, spec.power - 1);
    return red;
}

IntegralReduction reduce_same_sign(const TermSpec& spec, int m) {
    if (spec.sign != 1) throw HypothesisError("reduce_same_sign needs sign +1");
    if (m < 1) throw HypothesisError("m must be a positive integer");
    const Rat blocked = -spec.alpha * spec.power;
    if (is_integer(blocked) && sgn(blocked) >= 0)
        throw HypothesisError("-alpha*power must not be a nonnegative integer");
    IntegralReduction red;
    red.m = m;
    red.witness_scale = pow_int(Int(2), static_cast<unsigned>(spec.power - 1)) *
                        pow_int(spec.denom, static_cast<unsigned>(spec.power));
    Poly p = Poly::monomial(m);
    Rat scale(1);
    for (int s = m - spec.power + 1; s >= 0; s -= 2) {
        // Cross-multiplied step keeps every intermediate integral.
        const Rat lead = (spec.alpha * spec.power + s) * Rat(spec.denom);
        const Rat c = p.coeff(s + spec.power - 1);
        p = lead * p - c * step_image(spec, s);
        red.witness = lead * red.witness + c * step_witness(spec, s);
        scale *= lead;
    }
    red.scale = to_integer(scale);
    finish_reduction(spec, red, p, spec.power - 2);
    return red;
}

TermSpec half_quartic_spec() {
    return TermSpec::make(1, make_rational(1, 2), 4);
}

IntegralReduction reduce_half_quartic(int m) {
    if (m < 1) throw HypothesisError("m must be a positive integer");
    const TermSpec spec = half_quartic_spec();
    IntegralReduction red;
    red.m = m;
    // All steps share the parity of m - power + 1, so one divisor applies.
    const Int divisor = (m % 2 == 1) ? 4 : 2;
    red.witness_scale = Int(128) / divisor;
    Poly p = Poly::monomial(m);
    Rat scale(1);
    for (int s = m - spec.power + 1; s >= 0; s -= 2) {
        Poly image = step_image(spec, s);
        for (const auto& coeff : image.coeffs())
            if (coeff.get_num() % divisor != 0)
                throw DivisibilityError("step_image coefficient not divisible by " +
                                        divisor.get_str());
        image *= Rat(Int(1), divisor);
        const Rat lead = image.lc();
        const Rat c = p.coeff(s + spec.power - 1);
        p = lead * p - c * image;
        red.witness = lead * red.witness + c * step_witness(spec, s);
        scale *= lead;
    }
    red.scale = to_integer(scale);
    finish_reduction(spec, red, p, spec.power - 2);
    return red;
}

ReductionCertificate to_certificate(const TermSpec& spec, const IntegralReduction& red) {
    const Poly arg = Poly{Rat(0), Rat(2 * spec.denom)};  // witness argument 2Dk
    ReductionCertificate cert;
    for (const auto& [i, a] : red.coeff_a)
        cert.h += Rat(a) * substituted_power(spec, i);
    Poly xg;
    {
        // x_g(k) = witness_scale * witness(2Dk); g(k) = k^power * x_g(k).
        Poly acc;
        const auto& w = red.witness.coeffs();
        for (auto it = w.rbegin(); it != w.rend(); ++it) acc = acc * arg + Poly::constant(*it);
        xg = Rat(red.witness_scale) * acc;
    }
    cert.x = xg;
    cert.scale = Rat(red.scale);
    return cert;
}

ReductionCertificate symmetric_reduce(const Poly& a, const Poly& b, const Rat& shift_by,
                                      const Rat& beta, int sign, const PowerBasisPoly& f) {
    if (sign != 1 && sign != -1) throw HypothesisError("sign must be +1 or -1");
    if (a.is_zero() || b.is_zero()) throw ZeroInputError("symmetric_reduce: zero input");
    const Poly shifted = shift(b, shift_by);
    if (a != (sign == -1 ? -shifted : shifted))
        throw ShiftError("a(k) is not sign*b(k + shift)");
    if (parity(to_power_basis(b, -beta)) == Parity::Mixed)
        throw SymmetryError("b is not symmetric about beta");

    const Rat gamma = -beta + (shift_by - 1) / 2;
    if (f.gamma() != gamma)
        throw HypothesisError("f is expanded around the wrong center");
    if (parity(f) == Parity::Mixed)
        throw HypothesisError("f is not parity-pure");

    const int r = a.degree();
    if (sign == 1) {
        const Rat blocked = -(shift_by + 1) * r;
        if (is_integer(blocked) && sgn(blocked) >= 0)
            throw HypothesisError("-(shift+1)*deg a must not be a nonnegative integer");
    }

    const SpaceInfo info = analyze(a, b);
    const int bound = sign == -1 ? r : r - 1;
    const Rat half = make_rational(1, 2);
    Poly p = from_power_basis(f);
    Poly x;
    while (!p.is_zero() && p.degree() >= bound) {
        const int s = p.degree() - bound;
        Poly xs = pow(Poly{gamma - half, Rat(1)}, static_cast<unsigned>(s));
        if (sign == -1) xs *= -half;
        const Poly ps = image_of(info, xs);
        if (ps.degree() != p.degree()) throw Error("symmetric_reduce: degree law violated");
        const Rat c = p.lc() / ps.lc();
        p -= c * ps;
        x += c * xs;
    }
    if (parity(to_power_basis(p, gamma)) == Parity::Mixed)
        throw Error("symmetric_reduce: reduced part lost parity");
    return ReductionCertificate{p, x, Rat(1)};
}

}  // namespace hyperred
