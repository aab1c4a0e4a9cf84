#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hyperred/hyper_series.hpp"

using namespace hyperred;

namespace {

Rat rq(long n, long d = 1) { return make_rational(n, d); }

const TermSpec kAltCubic = TermSpec::make(-1, rq(1, 2), 3);
const TermSpec kSameQuartic = TermSpec::make(1, rq(1, 2), 4);

}  // namespace

TEST_CASE("term values: base case and frozen samples") {
    CHECK(term_eval(kAltCubic, 0) == 1);
    CHECK(term_eval(kAltCubic, 1) == rq(-1, 8));
    CHECK(term_eval(kSameQuartic, 2) == rq(81, 4096));  // (3/8)^4
    CHECK_THROWS_AS(term_eval(kAltCubic, -1), Error);
}

TEST_CASE("term ratio invariant") {
    TermValueStream stream(kAltCubic);
    for (int k = 0; k < 40; ++k) {
        const Rat lhs = stream.value(k + 1) * pow_rat(Rat(k + 1), 3);
        const Rat rhs = Rat(-1) * pow_rat(rq(1, 2) + k, 3) * stream.value(k);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("partial sums: frozen samples") {
    CHECK(partial_sum(kAltCubic, Poly{rq(1)}, 0) == 1);
    CHECK(partial_sum(kAltCubic, Poly{rq(1), rq(4)}, 2) == rq(435, 512));
    CHECK(partial_sum(kSameQuartic, Poly{rq(1), rq(4)}, 2) == rq(6105, 4096));
}

TEST_CASE("partial sums are linear in f") {
    std::mt19937 rng(13579);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<int> kk(0, 12);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rat> fc(4), gc(5);
        for (auto& c : fc) c = Rat(coeff(rng));
        for (auto& c : gc) c = Rat(coeff(rng));
        const Poly f(std::move(fc));
        const Poly g(std::move(gc));
        const int upto = kk(rng);
        CHECK(partial_sum(kAltCubic, f + g, upto) ==
              partial_sum(kAltCubic, f, upto) + partial_sum(kAltCubic, g, upto));
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(5, 9) == 0);
    CHECK(binomial(40, 20) == Int("137846528820"));
}

TEST_CASE("Euler numbers: initial values and recurrence residual") {
    const EulerTable table = euler_numbers(12);
    CHECK(table.at(0) == 1);
    CHECK(table.at(2) == -1);
    CHECK(table.at(4) == 5);
    CHECK(table.at(6) == -61);
    CHECK(table.at(8) == 1385);
    CHECK(table.at(10) == -50521);
    CHECK(table.at(12) == Int("2702765"));
    for (int n = 1; n <= 12; n += 2) CHECK(table.at(n) == 0);

    // sum_j binomial(2n, 2j) E_{2j} == 0 for every n >= 1.
    for (int n = 1; 2 * n <= 12; ++n) {
        Int acc(0);
        for (int j = 0; j <= n; ++j)
            acc += binomial(static_cast<unsigned>(2 * n), static_cast<unsigned>(2 * j)) *
                   table.at(2 * j);
        CHECK(acc == 0);
    }
    CHECK_THROWS_AS(table.at(13), Error);
}

TEST_CASE("Euler generating function times cosh is 1 up to x^12") {
    const int n_max = 12;
    const EulerTable table = euler_numbers(n_max);
    std::vector<Rat> egf(n_max + 1), cosh_series(n_max + 1, rq(0));
    for (int n = 0; n <= n_max; ++n) {
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
        egf[static_cast<size_t>(n)] = Rat(table.at(n)) / Rat(fact);
        if (n % 2 == 0) cosh_series[static_cast<size_t>(n)] = Rat(1) / Rat(fact);
    }
    for (int n = 0; n <= n_max; ++n) {
        Rat conv(0);
        for (int j = 0; j <= n; ++j)
            conv += egf[static_cast<size_t>(j)] * cosh_series[static_cast<size_t>(n - j)];
        CHECK(conv == (n == 0 ? rq(1) : rq(0)));
    }
}
