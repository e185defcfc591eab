#include <doctest.h>

#include <set>

#include "mzv/poly.hpp"
#include "mzv/word.hpp"
#include "support.hpp"

using namespace mzv;
using mzv::test::canonical;

TEST_SUITE("algebra") {

TEST_CASE("word encoding of compositions") {
    CHECK(word_of_composition({3}).str() == "xxy");
    CHECK(word_of_composition({2, 1}).str() == "xyy");
    CHECK(word_of_composition({2, 3}).str() == "xyxxy");

    CHECK_THROWS_AS(word_of_composition({}), std::invalid_argument);
    CHECK_THROWS_AS(word_of_composition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(word_of_composition({2, 0}), std::invalid_argument);
}

TEST_CASE("composition round trip") {
    // every composition of k with k1 >= 2, for k <= 12
    for (int k = 2; k <= 12; ++k)
        for (const Word& w : basis(k)) {
            const auto ks = composition_of_word(w);
            CHECK(ks.front() >= 2);
            CHECK(word_of_composition(ks) == w);
        }
    CHECK(composition_of_word(Word{}).empty());
    CHECK_THROWS_AS(composition_of_word(Word::from_string("xyx")), std::invalid_argument);
}

TEST_CASE("weight, depth, height") {
    const Word w = word_of_composition({2, 1, 2});
    CHECK(w.str() == "xyyxy");
    CHECK(w.weight() == 5);
    CHECK(w.depth() == 3);
    CHECK(w.height() == 2);
    CHECK(Word{}.height() == 0);
    CHECK(word_of_composition({4, 3, 1, 1}).height() == 2);
}

TEST_CASE("admissibility") {
    CHECK(Word{}.admissible());
    CHECK(Word::from_string("xy").admissible());
    CHECK_FALSE(Word::from_string("x").admissible());
    CHECK_FALSE(Word::from_string("yxy").admissible());
    CHECK_FALSE(Word::from_string("xyx").admissible());
}

TEST_CASE("word parsing") {
    CHECK(parse_word("xxyy").str() == "xxyy");
    CHECK(parse_word("(2,1,2)").str() == "xyyxy");
    CHECK(parse_word(" ( 3 , 1 ) ").str() == "xxyy");
    CHECK(parse_word("1").empty());
    CHECK_THROWS_AS(parse_word("xaz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("(1,2)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("(2,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("(2,x)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word(std::string(65, 'x')), std::length_error);
}

TEST_CASE("term order is length then lexicographic") {
    CHECK(Word::from_string("y") < Word::from_string("xx"));
    CHECK(Word::from_string("xxyy") < Word::from_string("xyxy"));
    CHECK(Word{} < Word::from_string("x"));
}

TEST_CASE("basis enumeration") {
    CHECK(basis(2).size() == 1);
    CHECK(basis(2).front().str() == "xy");
    const auto b3 = basis(3);
    REQUIRE(b3.size() == 2);
    CHECK(b3[0].str() == "xxy");
    CHECK(b3[1].str() == "xyy");
    const auto b4 = basis(4);
    REQUIRE(b4.size() == 4);
    CHECK(b4[0].str() == "xxxy");
    CHECK(b4[1].str() == "xxyy");
    CHECK(b4[2].str() == "xyxy");
    CHECK(b4[3].str() == "xyyy");
    CHECK_THROWS_AS(basis(1), std::invalid_argument);

    for (int k = 2; k <= 14; ++k) {
        const auto b = basis(k);
        CHECK(b.size() == (std::size_t{1} << (k - 2)));
        std::set<std::string> oracle;
        for (const auto& s : test::all_strings(static_cast<std::size_t>(k)))
            if (s.front() == 'x' && s.back() == 'y') oracle.insert(s);
        std::set<std::string> got;
        for (std::size_t i = 0; i < b.size(); ++i) {
            CHECK(b[i].admissible());
            CHECK(basis_index(b[i]) == i);
            if (i > 0) CHECK(b[i - 1] < b[i]);
            got.insert(b[i].str());
        }
        CHECK(got == oracle);
    }
}

TEST_CASE("rationals stay reduced") {
    const Rat a(mpz_class(6), mpz_class(-4));
    CHECK(a.str() == "-3/2");
    CHECK(a.denominator() == 2);
    CHECK((a - a).str() == "0");
    CHECK((a - a).denominator() == 1);
    CHECK(Rat::parse("10/4") == Rat(mpz_class(5), mpz_class(2)));
    CHECK_THROWS_AS(Rat(mpz_class(1), mpz_class(0)), std::domain_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
    CHECK_THROWS_AS(Rat::parse("1/x"), std::invalid_argument);
}

TEST_CASE("concatenation product") {
    const Poly xy(Word::from_string("xy"));
    CHECK((xy * xy) == Poly(Word::from_string("xyxy")));

    const Poly x = Poly::letter(Letter::x), y = Poly::letter(Letter::y);
    Poly expected;
    for (const char* s : {"xx", "xy", "yx", "yy"}) expected.add_term(Word::from_string(s), Rat(1));
    CHECK((x + y) * (x + y) == expected);

    const Poly xxy(Word::from_string("xxy"));
    CHECK(Poly::one() * xxy == xxy);
    CHECK(xxy * Poly::one() == xxy);
    CHECK((Poly{} * xxy).is_zero());
}

TEST_CASE("mul is associative and unital on random words") {
    for (int i = 0; i < 500; ++i) {
        const Poly a(test::random_word(8)), b(test::random_word(8)), c(test::random_word(8));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * Poly::one() == a);
    }
}

TEST_CASE("poly arithmetic never stores zeros") {
    for (int i = 0; i < 300; ++i) {
        const Poly p = test::random_poly(6), q = test::random_poly(6);
        const Poly sum = p + q, diff = p - q, prod = p * q, scaled = p * Rat(mpz_class(-3), mpz_class(7));
        CHECK(canonical(sum));
        CHECK(canonical(diff));
        CHECK(canonical(prod));
        CHECK(canonical(scaled));
        CHECK((p - p).is_zero());
        CHECK((p * Rat(0)).is_zero());
        CHECK(sum - q == p);
    }
}

TEST_CASE("homogeneity and h0 membership") {
    Poly p(Word::from_string("xxy"));
    p.add_term(Word::from_string("xyy"), Rat(-1));
    CHECK(p.is_homogeneous(3));
    CHECK_FALSE(p.is_homogeneous(4));
    CHECK(p.in_h0());
    p.add_term(Word::from_string("yx"), Rat(2));
    CHECK_FALSE(p.is_homogeneous(3));
    CHECK_FALSE(p.in_h0());
    CHECK(p.homogeneous_part(3).size() == 2);
    CHECK(p.min_weight() == 2);
    CHECK(p.max_weight() == 3);
    CHECK(Poly::one().in_h0());
    CHECK(p.str() == "2*yx + xxy - xyy");
}

}  // TEST_SUITE
