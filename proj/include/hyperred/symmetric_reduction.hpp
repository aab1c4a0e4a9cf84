#pragma once

#include <map>

#include "hyperred/difference_space.hpp"

namespace hyperred {

// Structured hypergeometric term (+-1)^k ((alpha)_k / k!)^power with
// term ratio t_{k+1}/t_k = sign*(k+alpha)^power / (k+1)^power.
struct TermSpec {
    int sign = -1;  // -1: the (-1)^k factor is present; +1: it is not
    Rat alpha;      // rising-factorial parameter
    Int denom;      // denominator of alpha in lowest terms
    int power = 1;  // exponent r

    // Validates sign and power and, for sign +1, the requirement that
    // -alpha*power is not a nonnegative integer (the pair (a, b) would be
    // degenerate otherwise). Throws HypothesisError.
    static TermSpec make(int sign, const Rat& alpha, int power);

    Poly ratio_numerator() const;    // sign * (k + alpha)^power
    Poly ratio_denominator() const;  // (k + 1)^power
};

// One reduction of (2Dk + D*alpha)^m against the term, D = denom.
// The exact identity, with K = 2Dk + D*alpha:
//
//   scale * K^m * t_k = sum_i coeff_a[i] * K^i * t_k
//                       + Delta_k( witness_scale * k^power * witness(2Dk) * t_k )
//
// All coeff_a values and all witness coefficients are integers, and
// coeff_a[i] == 0 whenever i and m differ in parity. The witness is stored
// in the variable K and is applied as witness(2Dk).
struct IntegralReduction {
    int m = 0;
    std::map<int, Int> coeff_a;
    Poly witness;
    Int scale{1};
    Int witness_scale{1};
};

// Parity-pure integer polynomial eliminated at step s:
//   ((K + D*alpha)^power (K + D)^s +- (K - D*alpha)^power (K - D)^s) / 2,
// "+" for sign -1 (monic, degree s+power), "-" for sign +1 (degree
// s+power-1, leading coefficient (alpha*power + s)*D).
Poly step_image(const TermSpec& spec, int s);

// Matching witness -+(K + D*alpha - D)^s, "-" for sign -1, "+" for sign +1.
Poly step_witness(const TermSpec& spec, int s);

// (2Dk + D*alpha)^m as a polynomial in k.
Poly substituted_power(const TermSpec& spec, int m);

// Integer reduction for sign -1 terms: scale stays 1, step images are
// monic. coeff_a is supported on {0..power-1}.
IntegralReduction reduce_alternating(const TermSpec& spec, int m);

// Integer reduction for sign +1 terms via cross-multiplied steps: scale
// becomes the product of the step leading coefficients
//   prod_{0 <= 2i <= m-power+1} (alpha*power + m-power+1-2i) * D.
// coeff_a is supported on {0..power-2}. Throws HypothesisError when
// -alpha*power is a nonnegative integer.
IntegralReduction reduce_same_sign(const TermSpec& spec, int m);

// Refinement of reduce_same_sign for the fixed term ((1/2)_k / k!)^4:
// every coefficient of step_image is divisible by 4 for even s and by 2
// for odd s, so each step image is divided down first. scale becomes
// ((m-1)/2)! for odd m and (m-1)!! for even m, and witness_scale drops to
// 32 (odd m) or 64 (even m). Throws DivisibilityError if the divisibility
// claim ever fails.
IntegralReduction reduce_half_quartic(int m);

// The term whose reduction reduce_half_quartic refines.
TermSpec half_quartic_spec();

// Certificate over the original variable k for the identity above:
// scale * f - h == image_of(x) with f = substituted_power(spec, m).
ReductionCertificate to_certificate(const TermSpec& spec, const IntegralReduction& red);

// Rational-coefficient symmetry-preserving reduction for a general pair
// a(k) = sign*b(k + shift), b(beta + k) = +-b(beta - k). The input f must
// be parity-pure in the basis (k + gamma), gamma = -beta + (shift - 1)/2;
// the reduced part stays parity-pure with deg h < deg a (sign -1) or
// deg h < deg a - 1 (sign +1).
ReductionCertificate symmetric_reduce(const Poly& a, const Poly& b, const Rat& shift_by,
                                      const Rat& beta, int sign, const PowerBasisPoly& f);

}  // namespace hyperred
