#pragma once

#include <vector>

#include "hyperred/poly.hpp"
#include "hyperred/symmetric_reduction.hpp"

namespace hyperred {

// Exact values t_0, t_1, ... of a structured term, grown on demand.
// Single writer: value() may extend the cache, so share across threads
// only behind exclusive access or as a finished snapshot.
class TermValueStream {
public:
    explicit TermValueStream(TermSpec spec);

    const TermSpec& spec() const { return spec_; }

    // t_k; extends the cache when needed.
    const Rat& value(int k);

private:
    TermSpec spec_;
    std::vector<Rat> cache_;  // cache_[k] = t_k, cache_[0] = 1
};

Rat term_eval(const TermSpec& spec, int k);

// sum_{k=0}^{k_max} f(k) * t_k, exactly.
Rat partial_sum(const TermSpec& spec, const Poly& f, int k_max);

// Exact binomial coefficient via Pascal-row iteration.
Int binomial(unsigned n, unsigned k);

// E_0..E_{n_max} with E_0 = 1, E_odd = 0, and
// sum_{j=0}^{n} binomial(2n, 2j) E_{2j} = 0 for n >= 1.
class EulerTable {
public:
    explicit EulerTable(int n_max);

    const Int& at(int n) const;
    int max_index() const { return static_cast<int>(values_.size()) - 1; }
    const std::vector<Int>& values() const { return values_; }

private:
    std::vector<Int> values_;
};

EulerTable euler_numbers(int n_max);

}  // namespace hyperred
