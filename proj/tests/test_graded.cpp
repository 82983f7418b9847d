#include <doctest.h>

#include <random>

#include "tate/expr.hpp"
#include "tate/graded.hpp"
#include "tate/verify.hpp"

using namespace tate;

TEST_CASE("generators and presets") {
    CHECK(GradedTateObject::unit() == GradedTateObject::generator(0, 0));
    auto lef = GradedTateObject::generator(1, 2);
    CHECK(lef.multiplicities().at({2, 1}) == 1);

    CHECK(preset("P", 1) == direct_sum(GradedTateObject::unit(), GradedTateObject::generator(1, 2)));
    CHECK(preset("Am0", 2) == direct_sum(GradedTateObject::unit(), GradedTateObject::generator(2, 3)));
    CHECK(preset("A", 7) == GradedTateObject::unit());
    CHECK(preset("Gm", 1) == preset("Am0", 1));
    CHECK_THROWS_AS(preset("X", 1), std::invalid_argument);
    CHECK_THROWS_AS(preset("Am0", 0), std::invalid_argument);
}

TEST_CASE("sum, shift, twist") {
    auto one = GradedTateObject::unit();
    CHECK(shift(one, 1) == GradedTateObject::generator(0, 1));
    CHECK(twist(shift(one, 2), 1) == GradedTateObject::generator(1, 2));
    CHECK(direct_sum(preset("P", 2), GradedTateObject::zero()) == preset("P", 2));

    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        auto x = random_object(rng);
        CHECK(shift(shift(x, 3), -3) == x);
        CHECK(twist(twist(x, -2), 2) == x);
    }
}

TEST_CASE("tensor") {
    auto g = GradedTateObject::generator(1, 1);
    CHECK(tensor(g, g) == GradedTateObject::generator(2, 2));
    auto p1 = preset("P", 1);
    CHECK(tensor(p1, GradedTateObject::unit()) == p1);

    GradedTateObject p1sq;
    p1sq.add({0, 0}, 1);
    p1sq.add({2, 1}, 2);
    p1sq.add({4, 2}, 1);
    CHECK(tensor(p1, p1) == p1sq);
    CHECK(k0_class(tensor(p1, p1)) == k0_class(p1) * k0_class(p1));
}

TEST_CASE("no zero divisors") {
    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        auto x = random_object(rng), y = random_object(rng);
        CHECK(tensor(x, y).is_zero() == (x.is_zero() || y.is_zero()));
    }
}

TEST_CASE("weight truncations") {
    auto x = direct_sum(GradedTateObject::unit(), GradedTateObject::generator(2, 3));
    CHECK(weight_below(x, 1) == GradedTateObject::unit());
    CHECK(weight_above(GradedTateObject::generator(5, 3), 5).is_zero());

    std::mt19937 rng(13);
    for (int i = 0; i < 50; ++i) {
        auto y = random_object(rng);
        // truncations commute
        CHECK(weight_below(weight_above(y, 0), 2) == weight_above(weight_below(y, 2), 0));
        // the graded pieces partition the support
        GradedTateObject total;
        for (int n = -5; n <= 5; ++n) total = direct_sum(total, gr_n(y, n));
        CHECK(total == y);
    }
}

TEST_CASE("gr_bar convention: 1(w)[a] contributes in degree -a") {
    CHECK(gr_bar(GradedTateObject::unit()) == GradedVectorSpaceDims{{0, 1}});
    CHECK(gr_bar(GradedTateObject::generator(5, 3)) == GradedVectorSpaceDims{{-3, 1}});
    CHECK(gr_bar(preset("P", 2)) == GradedVectorSpaceDims{{0, 1}, {-2, 1}, {-4, 1}});
    CHECK(gr_bar(GradedTateObject::zero()).empty());

    std::mt19937 rng(17);
    for (int i = 0; i < 50; ++i) {
        auto y = random_object(rng);
        CHECK(gr_bar(y).empty() == y.is_zero());
    }
}

TEST_CASE("d_plus and d_minus") {
    CHECK(d_plus(GradedTateObject::unit()) == 1);
    CHECK(d_minus(GradedTateObject::unit()) == 0);
    auto x = parse_object("Q(0)[1] + Q(2)[2]");
    CHECK(d_plus(x) == 1);
    CHECK(d_minus(x) == 1);
    for (int n = 0; n <= 4; ++n) {
        CHECK(d_plus(preset("P", n)) == n + 1);
        CHECK(d_minus(preset("P", n)) == 0);
    }
}

TEST_CASE("k0_class") {
    Laurent pn_expected(1);
    for (int n = 0; n <= 10; ++n) {
        if (n > 0) pn_expected += Laurent::monomial(n);
        CHECK(k0_class(preset("P", n)) == pn_expected);
    }
    for (int n = 1; n <= 10; ++n)
        CHECK(k0_class(preset("Am0", n)) == Laurent(1) - Laurent::monomial(n));
    CHECK(k0_class(GradedTateObject::generator(1, 1)) == -Laurent::tau());

    std::mt19937 rng(19);
    for (int i = 0; i < 100; ++i) {
        auto x = random_object(rng), y = random_object(rng);
        CHECK(k0_class(tensor(x, y)) == k0_class(x) * k0_class(y));
        CHECK(k0_class(direct_sum(x, y)) == k0_class(x) + k0_class(y));
        CHECK(k0_class(shift(x, 1)) == -k0_class(x));
        CHECK(k0_class(twist(x, 2)) == Laurent::monomial(2) * k0_class(x));
    }
}

TEST_CASE("augmentation") {
    CHECK(augmentation(Laurent(1) + Laurent::tau() + Laurent::monomial(2)) == 3);
    CHECK(augmentation(Laurent(1) - Laurent::monomial(7)) == 0);
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
        auto x = random_object(rng);
        CHECK(augmentation(k0_class(x)) == d_plus(x) - d_minus(x));
    }
}

TEST_CASE("expression parsing") {
    CHECK(parse_object("Q(0)[0]") == GradedTateObject::unit());
    CHECK(parse_object("Q(1)[2]") == GradedTateObject::generator(1, 2));
    CHECK(parse_object("Q(-1)[-2]") == GradedTateObject::generator(-1, -2));
    auto x = parse_object("Q(0)[1] + 2*Q(1)[2] + P:2");
    GradedTateObject expected;
    expected.add({1, 0}, 1);
    expected.add({2, 1}, 3);  // 2*Q(1)[2] plus the P:2 cell
    expected.add({0, 0}, 1);
    expected.add({4, 2}, 1);
    CHECK(x == expected);
    CHECK(parse_object("Gm") == preset("Gm", 1));
    CHECK(parse_object("Am0:3") == preset("Am0", 3));
    CHECK(parse_object("3*P:1") == direct_sum(preset("P", 1), direct_sum(preset("P", 1), preset("P", 1))));
    CHECK(parse_object("0*Q(0)[0]").is_zero());

    CHECK_THROWS_AS(parse_object("Q(1)"), ParseError);
    CHECK_THROWS_AS(parse_object("P:"), ParseError);
    CHECK_THROWS_AS(parse_object("Q(1)[2] + "), ParseError);
    CHECK_THROWS_AS(parse_object("bogus"), ParseError);
    try {
        parse_object("Q(1]");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
        CHECK(std::string(e.what()).find("expected") != std::string::npos);
    }
}

TEST_CASE("object round trip through the grammar") {
    std::mt19937 rng(29);
    for (int i = 0; i < 50; ++i) {
        auto x = random_object(rng);
        if (x.is_zero()) continue;
        CHECK(parse_object(x.to_string()) == x);
    }
}
