#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "birkit/padic.hpp"

using namespace birkit;

TEST_CASE("construction and valuation") {
    Padic nine = Padic::from_int(3, 12, 9);
    CHECK(nine.valuation() == 2);
    CHECK(nine.unit() == 1);
    CHECK(nine.effective_precision() == 12);

    Padic third = Padic::from_rat(3, 12, Rat(1, 3));
    CHECK(third.valuation() == -1);
    CHECK(third.abs_value() == doctest::Approx(3.0));

    Padic z = Padic::from_int(3, 12, 0);
    CHECK(z.is_exact_zero());
    CHECK(z.abs_value() == 0.0);
}

TEST_CASE("digits and canonical text form") {
    // 63 = 3^2 * 7 and 7 = 1 + 2*3
    Padic x = Padic::from_int(3, 12, 63);
    CHECK(x.valuation() == 2);
    auto d = x.digits();
    CHECK(d[0] == 1);
    CHECK(d[1] == 2);
    CHECK(x.to_string() == "3^2 * (1 + 2*3)");

    CHECK(Padic::from_int(3, 12, 0).to_string() == "0");
    CHECK(Padic::from_int(5, 6, 25).to_string() == "5^2 * (1)");
}

TEST_CASE("norm is multiplicative, exactly") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> num(-2000, 2000);
    int checked = 0;
    while (checked < 500) {
        long long a = num(rng), b = num(rng);
        if (a == 0 || b == 0) continue;
        Padic x = Padic::from_int(5, 10, a);
        Padic y = Padic::from_int(5, 10, b);
        CHECK((x * y).valuation() == x.valuation() + y.valuation());
        ++checked;
    }
}

TEST_CASE("ultrametric inequality with equality for distinct norms") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<long long> num(-5000, 5000);
    for (int i = 0; i < 500; ++i) {
        long long a = num(rng), b = num(rng);
        if (a == 0 || b == 0 || a + b == 0) continue;
        Padic x = Padic::from_int(3, 12, a);
        Padic y = Padic::from_int(3, 12, b);
        Padic s = x + y;
        long long vmin = std::min(x.valuation(), y.valuation());
        CHECK(s.valuation() >= vmin);
        if (x.valuation() != y.valuation()) CHECK(s.valuation() == vmin);
    }
}

TEST_CASE("embedding reproduces rational arithmetic mod p^N") {
    const long long p = 3;
    const int N = 12;
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 40);
    auto prime_to_p = [&](Rat& q) {
        int d = den(rng);
        while (d % p == 0) d = den(rng);
        q = Rat(num(rng), d);
    };
    int done = 0;
    while (done < 1000) {
        Rat a, b, c;
        prime_to_p(a);
        prime_to_p(b);
        prime_to_p(c);
        auto e = [&](const Rat& q) { return Padic::from_rat(p, N, q); };
        CHECK(e(a + b) == e(a) + e(b));
        CHECK(e(a * b) == e(a) * e(b));
        CHECK(e(a - c) == e(a) - e(c));
        CHECK(e(a * b + c) == e(a) * e(b) + e(c));
        if (b != 0) CHECK(e(a / b) == e(a) / e(b));
        ++done;
    }
}

TEST_CASE("cancellation lowers the effective precision, visibly") {
    Padic a = Padic::from_int(3, 12, 1 + 243);  // 1 + 3^5
    Padic b = Padic::from_int(3, 12, 1);
    Padic d = a - b;
    CHECK(d.valuation() == 5);
    CHECK(d.effective_precision() == 7);

    Padic z = b - b;
    CHECK(z.is_zero());
    CHECK(!z.is_exact_zero());
    CHECK(z.valuation_lower_bound() == 12);
    // Provable equality at shared precision: an inexact zero matches zero.
    CHECK(z == Padic::exact_zero(3));
}

TEST_CASE("division tracks valuation and rejects zero divisors") {
    Padic x = Padic::from_int(3, 12, 6);
    Padic y = Padic::from_int(3, 12, 9);
    CHECK((x / y).valuation() == -1);
    CHECK_THROWS_AS(x / Padic::exact_zero(3), DivisionByZero);
    Padic z = y - y;
    CHECK_THROWS_AS(x / z, PrecisionExhausted);
}
