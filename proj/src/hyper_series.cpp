#include "hyperred/hyper_series.hpp"

namespace hyperred {

TermValueStream::TermValueStream(TermSpec spec) : spec_(std::move(spec)) {
    cache_.emplace_back(1);
}

const Rat& TermValueStream::value(int k) {
    if (k < 0) throw Error("term index must be nonnegative");
    while (static_cast<int>(cache_.size()) <= k) {
        const int j = static_cast<int>(cache_.size()) - 1;
        const Rat ratio = Rat(spec_.sign) * pow_rat(spec_.alpha + j, static_cast<unsigned>(spec_.power)) /
                          pow_rat(Rat(j + 1), static_cast<unsigned>(spec_.power));
        cache_.push_back(cache_.back() * ratio);
    }
    return cache_[static_cast<size_t>(k)];
}

Rat term_eval(const TermSpec& spec, int k) {
    TermValueStream stream(spec);
    return stream.value(k);
}

Rat partial_sum(const TermSpec& spec, const Poly& f, int k_max) {
    TermValueStream stream(spec);
    Rat acc(0);
    for (int k = 0; k <= k_max; ++k) acc += f(Rat(k)) * stream.value(k);
    return acc;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    std::vector<Int> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        row.push_back(1);
        for (unsigned j = i - 1; j >= 1; --j) row[j] += row[j - 1];
    }
    return row[k];
}

EulerTable::EulerTable(int n_max) {
    if (n_max < 0) throw Error("euler_numbers: negative bound");
    values_.assign(static_cast<size_t>(n_max) + 1, Int(0));
    values_[0] = 1;
    std::vector<Int> row{1};  // Pascal row, advanced in place
    for (int n = 1; 2 * n <= n_max; ++n) {
        for (int step = 0; step < 2; ++step) {
            row.push_back(1);
            for (size_t j = row.size() - 2; j >= 1; --j) row[j] += row[j - 1];
        }
        Int acc(0);
        for (int j = 0; j < n; ++j) acc += row[static_cast<size_t>(2 * j)] * values_[static_cast<size_t>(2 * j)];
        values_[static_cast<size_t>(2 * n)] = -acc;
    }
}

const Int& EulerTable::at(int n) const {
    if (n < 0 || n > max_index()) throw Error("euler number index out of range");
    return values_[static_cast<size_t>(n)];
}

EulerTable euler_numbers(int n_max) {
    return EulerTable(n_max);
}

}  // namespace hyperred
