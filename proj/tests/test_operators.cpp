#include <doctest.h>

#include "mzv/operators.hpp"
#include "support.hpp"

using namespace mzv;

namespace {

Poly P(const char* s) { return Poly(Word::from_string(s)); }

Poly sum_of(std::initializer_list<std::pair<const char*, long>> terms) {
    Poly p;
    for (const auto& [w, c] : terms) p.add_term(Word::from_string(w), Rat(c));
    return p;
}

// l * theta_l = sum_{n=1}^{l} d_n theta_{l-n}: differentiate exp(sum t^n d_n / n) in t.
std::vector<Poly> theta_recurrence_oracle(int lmax, const Poly& p) {
    std::vector<Poly> th{p};
    for (int l = 1; l <= lmax; ++l) {
        Poly acc;
        for (int n = 1; n <= l; ++n) acc += partial(n, th[static_cast<std::size_t>(l - n)]);
        th.push_back(acc * Rat(mpz_class(1), mpz_class(l)));
    }
    return th;
}

}  // namespace

TEST_SUITE("operators") {

TEST_CASE("tau examples") {
    CHECK(tau(P("xxy")) == P("xyy"));
    CHECK(tau(P("xxyy")) == P("xxyy"));
    CHECK(tau(P("xyxxy")) == P("xyyxy"));
    CHECK(tau(Poly::one()) == Poly::one());
}

TEST_CASE("tau agrees with the string oracle and preserves structure") {
    for (std::size_t n = 0; n <= 10; ++n)
        for (const auto& s : test::all_strings(n)) {
            const Word w = Word::from_string(s);
            CHECK(tau(w).str() == (s.empty() ? "1" : test::tau_oracle(s)));
            CHECK(tau(w).weight() == w.weight());
            CHECK(tau(w).depth() == w.weight() - w.depth());
            if (w.admissible()) CHECK(tau(w).admissible());
        }
}

TEST_CASE("tau is an involution") {
    for (int i = 0; i < 1000; ++i) {
        const Poly p = test::random_poly(14);
        CHECK(tau(tau(p)) == p);
    }
}

TEST_CASE("tau is an anti-automorphism") {
    for (int i = 0; i < 500; ++i) {
        const Poly a(test::random_word(10)), b(test::random_word(10));
        CHECK(tau(a * b) == tau(b) * tau(a));
    }
}

TEST_CASE("partial examples") {
    CHECK(partial(1, P("xy")) == sum_of({{"xyy", 1}, {"xxy", -1}}));
    CHECK(partial(2, P("xy")) == sum_of({{"xyyy", 1}, {"xxxy", -1}}));
    CHECK(partial(1, Poly::one()).is_zero());
    CHECK(partial_of_x(1) == P("xy"));
    CHECK(partial_of_x(2) == sum_of({{"xxy", 1}, {"xyy", 1}}));
    CHECK_THROWS_AS(partial(0, P("xy")), std::invalid_argument);
    CHECK_THROWS_AS(partial(-2, P("xy")), std::invalid_argument);
}

TEST_CASE("partial agrees with the literal Leibniz oracle") {
    for (int n = 1; n <= 4; ++n)
        for (const Word& w : test::words_up_to(6)) {
            const std::string s = w.empty() ? "" : w.str();
            CHECK(partial(n, w) == test::to_poly(test::partial_oracle(n, s)));
        }
}

TEST_CASE("Leibniz rule on all word pairs of total weight <= 5") {
    for (int n = 1; n <= 4; ++n)
        for (const Word& v : test::words_up_to(5))
            for (const Word& w : test::words_up_to(5 - v.length())) {
                const Poly pv(v), pw(w);
                CHECK(partial(n, pv * pw) == partial(n, pv) * pw + pv * partial(n, pw));
            }
}

TEST_CASE("Leibniz rule on random polynomial pairs") {
    for (int i = 0; i < 200; ++i) {
        const Poly a = test::random_poly(5, 4), b = test::random_poly(5, 4);
        for (int n = 1; n <= 4; ++n) CHECK(partial(n, a * b) == partial(n, a) * b + a * partial(n, b));
    }
}

TEST_CASE("derivations commute") {
    for (int n = 1; n <= 4; ++n)
        for (int m = n + 1; m <= 4; ++m)
            for (const Word& w : test::words_up_to(5)) CHECK(partial(n, partial(m, w)) == partial(m, partial(n, w)));
}

TEST_CASE("derivations map h0 into h0 and shift weight by n") {
    for (int n = 1; n <= 6; ++n)
        for (const Word& w : test::words_up_to(6)) {
            const Poly d = partial(n, w);
            if (w.admissible()) CHECK(d.in_h0());
            CHECK(d.is_homogeneous(w.weight() + static_cast<std::size_t>(n)));
        }
    // outside h0 the image need not be admissible: d_1(yx) = yxy - xyx
    CHECK_FALSE(partial(1, P("yx")).in_h0());
}

TEST_CASE("theta low degrees match the displayed formulas") {
    for (const Word& w : test::words_up_to(4)) {
        const Poly p(w);
        CHECK(theta(0, p) == p);
        CHECK(theta(1, p) == partial(1, p));
        CHECK(theta(2, p) == (partial(2, p) + partial(1, partial(1, p))) * Rat(mpz_class(1), mpz_class(2)));
        const Poly six_theta3 = partial(3, p) * Rat(2) + partial(2, partial(1, p)) * Rat(3) +
                                partial(1, partial(1, partial(1, p)));
        CHECK(theta(3, p) == six_theta3 * Rat(mpz_class(1), mpz_class(6)));
    }
    CHECK(theta(1, P("xy")) == sum_of({{"xyy", 1}, {"xxy", -1}}));
    CHECK_THROWS_AS(theta(-1, P("xy")), std::invalid_argument);
}

TEST_CASE("theta(2)(xy) by hand") {
    // (d2 + d1^2)(xy) / 2 = ((xyyy - xxxy) + (xyyy - 2xxyy - 2xyxy + xxxy)) / 2
    CHECK(theta(2, P("xy")) == sum_of({{"xyyy", 1}, {"xxyy", -1}, {"xyxy", -1}}));
}

TEST_CASE("partition formula agrees with the exponential recurrence") {
    for (const Word& w : test::words_up_to(4)) {
        const auto oracle = theta_recurrence_oracle(6, Poly(w));
        const auto batched = theta_up_to(6, Poly(w));
        for (int l = 0; l <= 6; ++l) {
            CHECK(theta(l, Poly(w)) == oracle[static_cast<std::size_t>(l)]);
            CHECK(batched[static_cast<std::size_t>(l)] == oracle[static_cast<std::size_t>(l)]);
        }
    }
}

TEST_CASE("delta_u generator images") {
    const UPoly dx = delta_u(Poly::letter(Letter::x), 3);
    UPoly expected;
    expected.add(0, P("x"));
    expected.add(1, P("xy"));
    expected.add(2, P("xyy"));
    expected.add(3, P("xyyy"));
    CHECK(dx == expected);

    const UPoly inv_y = delta_u_inv(Poly::letter(Letter::y), 3);
    UPoly expected_inv;
    expected_inv.add(0, P("y"));
    expected_inv.add(1, P("xy"));
    expected_inv.add(2, P("xxy"));
    expected_inv.add(3, P("xxxy"));
    CHECK(inv_y == expected_inv);

    CHECK(delta_u(P("xxy"), 6).coeff(0) == P("xxy"));
    CHECK(delta_u_inv(P("xy"), 6).coeff(0) == P("xy"));
    CHECK_THROWS_AS(delta_u(P("xxyy"), 3), std::invalid_argument);
    CHECK(delta_u(delta_u_inv(P("xxy"), 3), 3) == UPoly(P("xxy")));
}

TEST_CASE("u-coefficients of delta_u are the theta_l") {
    for (const Word& w : test::words_up_to(6)) {
        const UPoly d = delta_u(Poly(w), 12);
        for (int l = 0; l <= 5; ++l) CHECK(d.coeff(l) == theta(l, Poly(w)));
    }
}

TEST_CASE("delta_u_inv is a two-sided truncated inverse") {
    for (const Word& w : test::words_up_to(5)) {
        CHECK(delta_u(delta_u_inv(Poly(w), 8), 8) == UPoly(Poly(w)));
        CHECK(delta_u_inv(delta_u(Poly(w), 8), 8) == UPoly(Poly(w)));
    }
}

TEST_CASE("UPoly truncation is in the u-power only") {
    UPoly p;
    p.add(0, P("xyxy"));
    p.add(1, P("xy"));
    p.add(3, P("x"));
    const UPoly t = p.truncated(2);
    CHECK(t.coeff(0) == P("xyxy"));
    CHECK(t.coeff(1) == P("xy"));
    CHECK(t.coeff(3).is_zero());
    CHECK(mul(p, p, 1).coeff(1) == P("xyxyxy") + P("xyxyxy"));
    CHECK_THROWS_AS(geom(p, 3), std::invalid_argument);
}

TEST_CASE("delta_u words at u^j weigh the input weight plus j") {
    for (const Word& w : test::words_up_to(4)) {
        const UPoly d = delta_u(Poly(w), 6);
        for (const auto& [j, p] : d.coeffs()) {
            CHECK(j <= 6);
            CHECK(p.is_homogeneous(w.weight() + static_cast<std::size_t>(j)));
        }
    }
}

}  // TEST_SUITE
