#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rbd/bigint.hpp"
#include "rbd/errors.hpp"

namespace rbd {

// Exact 2x2 integer matrix of determinant 1.
struct SL2Matrix {
    Int m00, m01, m10, m11;

    SL2Matrix(Int a, Int b, Int c, Int d);

    static SL2Matrix identity() { return {1, 0, 0, 1}; }
    static SL2Matrix gen_a() { return {1, 1, 0, 1}; }   // fishtail monodromy
    static SL2Matrix gen_b() { return {1, 0, -1, 1}; }

    SL2Matrix operator*(const SL2Matrix& o) const;
    SL2Matrix inverse() const;
    Int trace() const { return m00 + m11; }
    bool is_identity() const { return m00 == 1 && m01 == 0 && m10 == 0 && m11 == 1; }

    friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;
    std::string to_string() const;
};

// Word over the generators a, b with integer exponents (all nonzero).
struct WordLetter {
    char gen; // 'a' or 'b'
    Int exponent;
};

struct MonodromyWord {
    std::vector<WordLetter> letters;

    MonodromyWord() = default;
    explicit MonodromyWord(std::vector<WordLetter> ls);

    MonodromyWord inverse() const;
    MonodromyWord operator*(const MonodromyWord& o) const; // concatenation
    bool empty() const { return letters.empty(); }
    std::string to_string() const;
};

// Syntax: letters a, A (= a^-1), b, B, optional ^n powers, parentheses,
// whitespace ignored.  Example: "(a^3 b)^3".
MonodromyWord parse_word(const std::string& text);

// Left-to-right product of the letter matrices.
SL2Matrix evaluate(const MonodromyWord& w);

bool verify_relation(const MonodromyWord& lhs, const MonodromyWord& rhs);

struct Fiber {
    bool cyclic;  // I_k when true, fishtail otherwise
    int k;        // >= 1; fishtails use k = 1
    std::optional<MonodromyWord> conjugator;
};

// Multiset of singular fibers of an elliptic fibration, in monodromy order.
struct FibrationCensus {
    std::vector<Fiber> fibers;
};

// Sum of the euler contributions: k per I_k, 1 per fishtail.
Int euler_count(const FibrationCensus& c);

// The ordered product of w * a^k * w^-1 (a single conjugated a per
// fishtail) must close up to the identity, and the euler count must be 12.
// Fibers without conjugators make the certificate unusable.
bool verify_certificate(const FibrationCensus& c);

// Exploration helper: look for conjugators (words of length <= max_len over
// a, A, b, B) completing a census to the identity.  Throws BudgetError when
// node_budget runs out before the search finishes.
std::optional<FibrationCensus> find_certificate(const FibrationCensus& c, int max_len = 4,
                                                long long node_budget = 20'000'000);

} // namespace rbd
