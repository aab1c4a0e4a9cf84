#include "hyperred/congruence.hpp"

namespace hyperred {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long q = 3; q * q <= n; q += 2)
        if (n % q == 0) return false;
    return true;
}

std::vector<long> primes_in_range(long lo, long hi) {
    std::vector<long> out;
    for (long n = std::max(lo, 2L); n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

Int residue(const Rat& v, long p, int e) {
    if (e < 1) throw Error("residue: exponent must be positive");
    const Int modulus = pow_int(Int(p), static_cast<unsigned>(e));
    if (v.get_den() % p == 0)
        throw NotPIntegralError("denominator of " + format_rational(v) + " divisible by " +
                                std::to_string(p));
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), v.get_den().get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw NotPIntegralError("denominator not invertible modulo p^e");
    Int r = v.get_num() * inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

namespace {

void require_odd_positive(int m) {
    if (m < 1 || m % 2 == 0) throw HypothesisError("m must be an odd positive integer");
}

// x(4*omega) for a witness stored in the scaled-variable convention.
Rat boundary_witness_value(const IntegralReduction& red, const TermSpec& spec, long omega) {
    return red.witness(Rat(2 * spec.denom * omega));
}

}  // namespace

CongruenceReport check_cubic(int m, long p) {
    require_odd_positive(m);
    if (p < 5 || !is_prime(p)) throw HypothesisError("p must be a prime >= 5");

    const TermSpec spec = TermSpec::make(-1, make_rational(1, 2), 3);
    const IntegralReduction red = reduce_alternating(spec, m);
    for (const auto& [i, a] : red.coeff_a)
        if (i != 1 && a != 0) throw Error("cubic reduction left an unexpected coefficient");
    const Int a_m = red.coeff_a.count(1) ? red.coeff_a.at(1) : Int(0);
    const Int c_m = to_integer(Rat(-4) * red.witness(Rat(2)));

    const long omega = (p + 1) / 2;
    const Poly f = substituted_power(spec, m);
    const Rat s_m = partial_sum(spec, f, static_cast<int>(omega) - 1);

    const int sign = ((p - 1) / 2) % 2 == 0 ? 1 : -1;
    const Int euler = euler_numbers(static_cast<int>(p) - 3).at(static_cast<int>(p) - 3);
    const Int p3 = pow_int(Int(p), 3);
    TermValueStream stream(spec);
    const Rat boundary = Rat(red.witness_scale) * pow_rat(Rat(omega), 3) *
                         boundary_witness_value(red, spec, omega) * stream.value(static_cast<int>(omega));
    const Rat rhs = Rat(a_m) * (Rat(sign * p) + Rat(p3 * euler)) + boundary;

    CongruenceReport report;
    report.theorem = CongruenceCase::Cubic;
    report.m = m;
    report.p = p;
    report.modulus = pow_int(Int(p), 4);
    report.lhs_residue = residue(s_m, p, 4);
    report.rhs_residue = residue(rhs, p, 4);
    report.a_m = a_m;
    report.c_m = c_m;
    report.mu = (m - 1) / 2;
    report.pass = report.lhs_residue == report.rhs_residue;
    return report;
}

CongruenceReport check_quartic(int m, long p) {
    require_odd_positive(m);
    const int mu = (m - 1) / 2;
    if (!is_prime(p)) throw HypothesisError("p must be prime");
    if (p <= mu) throw HypothesisError("p must exceed (m-1)/2");

    const IntegralReduction red = reduce_half_quartic(m);
    for (const auto& [i, a] : red.coeff_a)
        if (i != 1 && a != 0) throw Error("quartic reduction left an unexpected coefficient");
    const Int c = red.coeff_a.count(1) ? red.coeff_a.at(1) : Int(0);
    if (red.scale % p == 0) throw Error("p divides the reduction scale despite p > mu");

    const TermSpec spec = half_quartic_spec();
    const long omega = (p + 1) / 2;
    const Poly f = substituted_power(spec, m);
    const Rat s_m = partial_sum(spec, f, static_cast<int>(omega) - 1);
    const Rat rhs = Rat(c) / Rat(red.scale) * Rat(p);

    CongruenceReport report;
    report.theorem = CongruenceCase::Quartic;
    report.m = m;
    report.p = p;
    report.modulus = pow_int(Int(p), 4);
    report.lhs_residue = residue(s_m, p, 4);
    report.rhs_residue = residue(rhs, p, 4);
    report.a_m = c;
    report.mu = mu;
    report.pass = report.lhs_residue == report.rhs_residue;
    return report;
}

std::vector<IntegralityEntry> scan_integrality(int m_max) {
    std::vector<IntegralityEntry> out;
    for (int m = 1; m <= m_max; m += 2) {
        const IntegralReduction red = reduce_half_quartic(m);
        const Int c = red.coeff_a.count(1) ? red.coeff_a.at(1) : Int(0);
        IntegralityEntry entry;
        entry.m = m;
        entry.ratio = Rat(c) / Rat(red.scale);
        entry.integral = is_integer(entry.ratio);
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace hyperred
