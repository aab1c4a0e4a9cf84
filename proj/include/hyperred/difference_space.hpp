#pragma once

#include <optional>
#include <set>

#include "hyperred/poly.hpp"

namespace hyperred {

// Analysis record of a pair (a(k), b(k)) and of the space
//   S = { a(k) x(k+1) - b(k-1) x(k) : x polynomial }.
// Every multiple of an element of S telescopes against any term t with
// t_{k+1}/t_k = a(k)/b(k).
struct SpaceInfo {
    Poly a;
    Poly b;
    Poly u;                 // a(k) - b(k-1)
    int d = 0;              // max(deg u, deg a - 1)
    std::optional<Rat> m0;  // -lc(u)/lc(a), defined iff deg u == deg a - 1
    bool degenerate = false;  // m0 defined and a nonnegative integer
};

// Throws ZeroInputError if a or b is zero.
SpaceInfo analyze(const Poly& a, const Poly& b);

// a(k) x(k+1) - b(k-1) x(k): the element of the space generated by x.
Poly image_of(const SpaceInfo& info, const Poly& x);

struct ReductionCertificate {
    Poly h;        // reduced part
    Poly x;        // witness: scale*f - h == image_of(x)
    Rat scale{1};  // 1 unless a scaled reduction produced the certificate
};

// Eliminates leading coefficients of f with images of monomial witnesses
// until only exponents the space cannot reach remain. The result always
// satisfies f - h == image_of(x) exactly (scale stays 1).
//
// Degrees the space cannot reach are set aside into h one monomial at a
// time: d + m0 for a degenerate pair, and additionally d itself when
// deg u < deg a - 1 (images of constants then have degree deg u < d).
ReductionCertificate reduce(const SpaceInfo& info, const Poly& f);

struct VerificationReport {
    bool pass = false;
    Poly residual;  // scale*f - h - image_of(x); zero iff pass
};

VerificationReport verify_certificate(const SpaceInfo& info, const Poly& f,
                                      const ReductionCertificate& cert);

// Exponents reduce() may leave in h for this space.
std::set<int> reduced_support(const SpaceInfo& info);

// Brute-force counterpart of reduce(), independent of the reduction loop:
// solves the exact linear system for a witness x with deg x <= degree_bound
// and an h supported on `support` such that f == image_of(x) + h. The
// default bound is deg f; on an infeasible system for a degenerate pair the
// solve is retried once with the bound raised by m0. Returns nothing when
// no solution exists within the bound.
std::optional<ReductionCertificate> oracle_reduce(const SpaceInfo& info, const Poly& f,
                                                  const std::set<int>& support,
                                                  std::optional<int> degree_bound = std::nullopt);

}  // namespace hyperred
