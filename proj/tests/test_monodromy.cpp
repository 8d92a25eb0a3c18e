#include <doctest.h>

#include "rbd/fixtures.hpp"
#include "rbd/monodromy.hpp"

using namespace rbd;

TEST_CASE("generator matrices and evaluation") {
    CHECK(evaluate(parse_word("a")) == SL2Matrix(1, 1, 0, 1));
    CHECK(evaluate(parse_word("b")) == SL2Matrix(1, 0, -1, 1));
    CHECK(evaluate(parse_word("")).is_identity());
    CHECK(evaluate(parse_word("(a^3 b)^3")).is_identity());

    // direct multiplication oracle for (ab)^6
    SL2Matrix ab = SL2Matrix::gen_a() * SL2Matrix::gen_b();
    SL2Matrix acc = SL2Matrix::identity();
    for (int i = 0; i < 6; ++i) acc = acc * ab;
    CHECK(acc.is_identity());
    CHECK(evaluate(parse_word("(a b)^6")).is_identity());
}

TEST_CASE("relations") {
    CHECK(verify_relation(parse_word("b"), parse_word("(a b) a (a b)^-1")));
    CHECK(verify_relation(parse_word("a^5 (A^2 b a^2) a b a a a b"), parse_word("")));
    CHECK_FALSE(verify_relation(parse_word("a"), parse_word("b")));
}

TEST_CASE("cyclic fiber powers") {
    for (long k = 1; k <= 20; ++k) {
        SL2Matrix m = evaluate(parse_word("a^" + std::to_string(k)));
        CHECK(m == SL2Matrix(1, Int(k), 0, 1));
    }
}

TEST_CASE("word algebra") {
    MonodromyWord w = parse_word("a^2 B (a b)^2");
    CHECK(evaluate(w * w.inverse()).is_identity());
    CHECK(evaluate(w.inverse() * w).is_identity());

    SL2Matrix m = evaluate(w);
    CHECK(m.m00 * m.m11 - m.m01 * m.m10 == 1);

    // trace is conjugation invariant
    MonodromyWord x = parse_word("a b");
    MonodromyWord conj = w * x * w.inverse();
    CHECK(evaluate(conj).trace() == evaluate(x).trace());
}

TEST_CASE("parser") {
    CHECK(evaluate(parse_word("A")) == SL2Matrix(1, -1, 0, 1));
    CHECK(evaluate(parse_word("B")) == SL2Matrix(1, 0, 1, 1));
    CHECK(evaluate(parse_word("a^-2")) == SL2Matrix(1, -2, 0, 1));
    CHECK(evaluate(parse_word("A^2")) == SL2Matrix(1, -2, 0, 1));
    CHECK(evaluate(parse_word(" ( a b ) ^ 2 ")) == evaluate(parse_word("abab")));
    CHECK(evaluate(parse_word("(a)^0")).is_identity());

    CHECK_THROWS_AS((void)parse_word("(a b"), ParseError);
    CHECK_THROWS_AS((void)parse_word("a)"), ParseError);
    CHECK_THROWS_AS((void)parse_word("c"), ParseError);
    CHECK_THROWS_AS((void)parse_word("a^"), ParseError);
}

TEST_CASE("census euler counts") {
    CHECK(euler_count(fixtures::census_i3()) == 12);
    CHECK(euler_count(fixtures::census_i5()) == 12);
    CHECK(euler_count(fixtures::census_i7()) == 12);

    FibrationCensus short_one = fixtures::census_i3();
    short_one.fibers.pop_back();
    CHECK(euler_count(short_one) == 11);
    CHECK_FALSE(verify_certificate(short_one));
}

TEST_CASE("census certificates close up") {
    CHECK(verify_certificate(fixtures::census_i3()));
    CHECK(verify_certificate(fixtures::census_i5()));
    CHECK(verify_certificate(fixtures::census_i7()));

    FibrationCensus missing = fixtures::census_i5();
    missing.fibers[2].conjugator.reset();
    CHECK_THROWS_AS((void)verify_certificate(missing), HypothesisError);

    // a shuffled certificate no longer multiplies to the identity
    FibrationCensus shuffled = fixtures::census_i5();
    std::swap(shuffled.fibers[0], shuffled.fibers[1]);
    CHECK_FALSE(verify_certificate(shuffled));
}

TEST_CASE("certificate search fills in missing conjugators") {
    FibrationCensus partial = fixtures::census_i5();
    partial.fibers.back().conjugator.reset();
    auto completed = find_certificate(partial, 2);
    REQUIRE(completed.has_value());
    CHECK(verify_certificate(*completed));

    // impossible censuses come back empty
    FibrationCensus impossible;
    impossible.fibers = {Fiber{true, 12, MonodromyWord{}}};
    CHECK_FALSE(find_certificate(impossible, 2).has_value());
}
