#pragma once

#include <optional>
#include <vector>

#include "hyperred/hyper_series.hpp"
#include "hyperred/symmetric_reduction.hpp"

namespace hyperred {

// Deterministic trial division; intended for desk-scale p.
bool is_prime(long n);
std::vector<long> primes_in_range(long lo, long hi);

// Residue of a p-integral rational modulo p^e, in [0, p^e). Throws
// NotPIntegralError when p divides the denominator.
Int residue(const Rat& v, long p, int e);

// Which of the two verified sum families a report belongs to; the value is
// the power of the term.
enum class CongruenceCase { Cubic = 3, Quartic = 4 };

struct CongruenceReport {
    CongruenceCase theorem = CongruenceCase::Cubic;
    int m = 1;     // odd exponent of (4k+1)^m
    long p = 0;    // prime
    Int modulus;   // p^4
    Int lhs_residue;
    Int rhs_residue;
    Int a_m;                  // integer reduction coefficient
    std::optional<Int> c_m;   // -4*x(2), cubic case only
    int mu = 0;               // (m-1)/2
    bool pass = false;
};

// S_m = sum_{k=0}^{(p-1)/2} (-1)^k (4k+1)^m ((1/2)_k/k!)^3 against
// a_m(p(-1)^{(p-1)/2} + p^3 E_{p-3}) plus the exact telescoped boundary
// term, modulo p^4. Requires odd m and prime p >= 5.
CongruenceReport check_cubic(int m, long p);

// S_m = sum_{k=0}^{(p-1)/2} (4k+1)^m ((1/2)_k/k!)^4 against
// (c/C'_m) * p modulo p^4. Requires odd m and prime p > (m-1)/2.
CongruenceReport check_quartic(int m, long p);

struct IntegralityEntry {
    int m = 1;
    Rat ratio;      // c / ((m-1)/2)! from the half-quartic reduction
    bool integral = false;
};

// Reports whether the scaled quartic coefficient is an integer for every
// odd m <= m_max. Reported, never asserted.
std::vector<IntegralityEntry> scan_integrality(int m_max);

}  // namespace hyperred
