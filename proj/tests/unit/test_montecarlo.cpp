#include <doctest.h>

#include <cmath>

#include "leastprime/errors.hpp"
#include "leastprime/montecarlo.hpp"
#include "leastprime/philox.hpp"
#include "leastprime/series.hpp"

using namespace leastprime;

TEST_CASE("Philox4x32-10 known-answer vectors") {
    using C = Philox4x32::Counter;
    CHECK(Philox4x32::generate(C{0, 0, 0, 0}, {0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(Philox4x32::generate(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(Philox4x32::generate(C{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
    static_assert(Philox4x32::generate({0, 0, 0, 0}, {0, 0})[0] == 0x6627e8d5);
}

TEST_CASE("sample streams are deterministic, distinct and uniform") {
    SampleStream a(42, 7), b(42, 7), c(42, 8);
    bool differs = false;
    double sum = 0;
    for (int i = 0; i < 100000; ++i) {
        double x = a.next();
        CHECK(x == b.next());
        differs |= x != c.next();
        REQUIRE(x >= 0);
        REQUIRE(x < 1);
        sum += x;
    }
    CHECK(differs);
    CHECK(std::abs(sum / 100000 - 0.5) < 0.005);
}

TEST_CASE("degenerate walks") {
    HitModel always = HitModel::constant(Rational(1));
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) CHECK(sample_first_hit(always, seed) == 2);
    McEstimate e = estimate_model(always, 1000, 3);
    CHECK(e.mean == 2);
    CHECK(e.std_error == 0);
    McEstimate single = estimate(4, CycleType({2, 2}), McQuantity::LittleN, 1, 5);
    CHECK(single.samples == 1);
    CHECK(single.mean >= 2);
    CHECK(single.std_error == 0);
    CHECK_THROWS_AS(estimate_model(always, 0, 1), std::invalid_argument);

    HitModel never = HitModel::constant(Rational(0));
    PrimeTable small(1000);
    CHECK_THROWS_AS(sample_first_hit(never, 1, 0, small), InvariantViolation);
}

TEST_CASE("estimates are reproducible and independent of threads") {
    HitModel model = big_N_model(4, CycleType({3, 1}));
    McEstimate a = estimate_model(model, 100000, 11, 1);
    McEstimate b = estimate_model(model, 100000, 11, 7);
    McEstimate c = estimate_model(model, 100000, 12, 4);
    CHECK(a == b);
    CHECK(a.mean != c.mean);
    CHECK(a.seed == 11);
    CHECK(a.model == model.name());
}

TEST_CASE("the Erdos walk converges to its expectation") {
    McEstimate e = estimate_model(erdos_model(), 1'000'000, 2024);
    CHECK(std::abs(e.mean - static_cast<double>(erdos_constant().value)) < 3 * e.std_error);
}

TEST_CASE("little-n for the identity of S_3 at ten million samples") {
    McEstimate e = estimate(3, CycleType::identity(3), McQuantity::LittleN, 10'000'000, 31337);
    CHECK(std::abs(e.mean - static_cast<double>(avg_little_n(3, CycleType::identity(3)).value)) < 3 * e.std_error);
    CHECK(std::abs(e.mean - 2.1211) < 3 * e.std_error + 5e-5);
}

TEST_CASE("first hits beyond 29 are geometrically rare") {
    // pi(29) = 10 primes must all miss; each survives with probability at most max survive.
    for (int n = 3; n <= 5; ++n)
        for (const CycleType& ct : cycle_types(n)) {
            HitModel model = big_N_model(n, ct);
            long double max_survive = 0;
            for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL})
                max_survive = std::max(max_survive, model.survive(p).to_long_double());
            CompiledHitModel compiled(model);
            const std::uint64_t samples = 100000;
            std::uint64_t late = 0;
            for (std::uint64_t i = 0; i < samples; ++i) late += compiled.sample(77, i) > 29;
            double bound = std::pow(static_cast<double>(max_survive), 10);
            CAPTURE(ct.to_string());
            CHECK(static_cast<double>(late) / samples < bound);
        }
}

TEST_CASE("quantity names") {
    for (McQuantity q : {McQuantity::LittleN, McQuantity::BigN, McQuantity::BigNOddUnion})
        CHECK(parse_mc_quantity(to_string(q)) == q);
    CHECK(to_string(McQuantity::BigNOddUnion) == "big-N-odd-union");
    CHECK_THROWS(parse_mc_quantity("bigN"));
}
