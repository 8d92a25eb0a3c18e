#include "rbd/monodromy.hpp"

#include <algorithm>
#include <sstream>

namespace rbd {

SL2Matrix::SL2Matrix(Int a, Int b, Int c, Int d)
    : m00(std::move(a)), m01(std::move(b)), m10(std::move(c)), m11(std::move(d)) {
    if (m00 * m11 - m01 * m10 != 1)
        throw DomainError("matrix must have determinant 1");
}

SL2Matrix SL2Matrix::operator*(const SL2Matrix& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
}

SL2Matrix SL2Matrix::inverse() const { return {m11, -m01, -m10, m00}; }

std::string SL2Matrix::to_string() const {
    std::ostringstream os;
    os << "[[" << m00.get_str() << "," << m01.get_str() << "],[" << m10.get_str() << ","
       << m11.get_str() << "]]";
    return os.str();
}

MonodromyWord::MonodromyWord(std::vector<WordLetter> ls) : letters(std::move(ls)) {
    for (const auto& l : letters) {
        if (l.gen != 'a' && l.gen != 'b') throw DomainError("unknown generator");
        if (l.exponent == 0) throw DomainError("word exponents must be nonzero");
    }
}

MonodromyWord MonodromyWord::inverse() const {
    std::vector<WordLetter> ls;
    ls.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        ls.push_back({it->gen, -it->exponent});
    return MonodromyWord(std::move(ls));
}

MonodromyWord MonodromyWord::operator*(const MonodromyWord& o) const {
    std::vector<WordLetter> ls = letters;
    ls.insert(ls.end(), o.letters.begin(), o.letters.end());
    return MonodromyWord(std::move(ls));
}

std::string MonodromyWord::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& l : letters) {
        if (!first) os << " ";
        first = false;
        if (l.exponent == 1) {
            os << l.gen;
        } else if (l.exponent == -1) {
            os << static_cast<char>(l.gen == 'a' ? 'A' : 'B');
        } else {
            os << l.gen << "^" << l.exponent.get_str();
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool done() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Int parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw ParseError("expected an integer exponent at position " + std::to_string(start));
        return Int(s.substr(start, pos - start));
    }

    std::optional<Int> maybe_power() {
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            return parse_int();
        }
        return std::nullopt;
    }

    // seq := item*;  item := (letter | '(' seq ')') ['^' int]
    std::vector<WordLetter> parse_seq(bool inside_parens) {
        std::vector<WordLetter> out;
        while (true) {
            char c = peek();
            if (c == '\0') {
                if (inside_parens) throw ParseError("missing ')'");
                return out;
            }
            if (c == ')') {
                if (!inside_parens) throw ParseError("unmatched ')'");
                return out;
            }
            if (c == '(') {
                ++pos;
                std::vector<WordLetter> inner = parse_seq(true);
                skip_ws();
                if (pos >= s.size() || s[pos] != ')') throw ParseError("missing ')'");
                ++pos;
                Int p = maybe_power().value_or(Int(1));
                append_power(out, inner, p);
                continue;
            }
            if (c == 'a' || c == 'A' || c == 'b' || c == 'B') {
                ++pos;
                Int base_exp = (c == 'A' || c == 'B') ? Int(-1) : Int(1);
                char gen = (c == 'a' || c == 'A') ? 'a' : 'b';
                Int p = maybe_power().value_or(Int(1));
                Int exp = base_exp * p;
                if (exp != 0) push_letter(out, gen, exp);
                continue;
            }
            throw ParseError(std::string("unexpected character '") + c + "' at position " +
                             std::to_string(pos));
        }
    }

    static void push_letter(std::vector<WordLetter>& out, char gen, const Int& exp) {
        if (!out.empty() && out.back().gen == gen) {
            out.back().exponent += exp;
            if (out.back().exponent == 0) out.pop_back();
            return;
        }
        out.push_back({gen, exp});
    }

    static void append_power(std::vector<WordLetter>& out, const std::vector<WordLetter>& w,
                             const Int& p) {
        if (p == 0 || w.empty()) return;
        bool invert = p < 0;
        Int reps = invert ? Int(-p) : p;
        if (!reps.fits_slong_p()) throw ParseError("power too large");
        std::vector<WordLetter> unit = w;
        if (invert) {
            std::reverse(unit.begin(), unit.end());
            for (auto& l : unit) l.exponent = -l.exponent;
        }
        for (long i = 0; i < reps.get_si(); ++i)
            for (const auto& l : unit) push_letter(out, l.gen, l.exponent);
    }
};

} // namespace

MonodromyWord parse_word(const std::string& text) {
    Parser p(text);
    std::vector<WordLetter> letters = p.parse_seq(false);
    if (!p.done()) throw ParseError("trailing input after word");
    return MonodromyWord(std::move(letters));
}

SL2Matrix evaluate(const MonodromyWord& w) {
    SL2Matrix acc = SL2Matrix::identity();
    for (const auto& l : w.letters) {
        // closed forms: a^n = [[1,n],[0,1]], b^n = [[1,0],[-n,1]]
        SL2Matrix m = l.gen == 'a' ? SL2Matrix(1, l.exponent, 0, 1)
                                   : SL2Matrix(1, 0, -l.exponent, 1);
        acc = acc * m;
    }
    return acc;
}

bool verify_relation(const MonodromyWord& lhs, const MonodromyWord& rhs) {
    return evaluate(lhs) == evaluate(rhs);
}

Int euler_count(const FibrationCensus& c) {
    Int total = 0;
    for (const auto& f : c.fibers) {
        if (f.k < 1) throw DomainError("fiber multiplicity k must be >= 1");
        total += f.cyclic ? Int(f.k) : Int(1);
    }
    return total;
}

static SL2Matrix fiber_contribution(const Fiber& f) {
    if (!f.conjugator) throw HypothesisError("certificate is missing a conjugator word");
    SL2Matrix w = evaluate(*f.conjugator);
    SL2Matrix base(1, Int(f.cyclic ? f.k : 1), 0, 1); // a^k
    return w * base * w.inverse();
}

bool verify_certificate(const FibrationCensus& c) {
    if (euler_count(c) != 12) return false;
    SL2Matrix acc = SL2Matrix::identity();
    for (const auto& f : c.fibers) acc = acc * fiber_contribution(f);
    return acc.is_identity();
}

namespace {

// all reduced words of length <= max_len over {a, A, b, B}
void enumerate_words(int max_len, std::vector<MonodromyWord>& out) {
    out.push_back(MonodromyWord{});
    std::vector<std::vector<WordLetter>> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<std::vector<WordLetter>> next;
        for (const auto& w : frontier)
            for (char gen : {'a', 'b'})
                for (int e : {1, -1}) {
                    if (!w.empty() && w.back().gen == gen &&
                        ((w.back().exponent > 0) != (e > 0)))
                        continue; // would cancel
                    std::vector<WordLetter> ext = w;
                    if (!ext.empty() && ext.back().gen == gen)
                        ext.back().exponent += e;
                    else
                        ext.push_back({gen, Int(e)});
                    next.push_back(ext);
                    out.emplace_back(ext);
                }
        frontier = std::move(next);
    }
}

bool certificate_dfs(const FibrationCensus& c, size_t idx, const SL2Matrix& acc,
                     const std::vector<MonodromyWord>& words,
                     const std::vector<SL2Matrix>& word_mats,
                     std::vector<MonodromyWord>& chosen, long long& budget) {
    if (idx == c.fibers.size()) return acc.is_identity();
    const Fiber& f = c.fibers[idx];
    SL2Matrix base(1, Int(f.cyclic ? f.k : 1), 0, 1);
    if (f.conjugator) {
        // already certified: keep it, only search the gaps
        SL2Matrix w = evaluate(*f.conjugator);
        if (certificate_dfs(c, idx + 1, acc * (w * base * w.inverse()), words, word_mats, chosen,
                            budget)) {
            chosen[idx] = *f.conjugator;
            return true;
        }
        return false;
    }
    for (size_t wi = 0; wi < words.size(); ++wi) {
        if (--budget <= 0) throw BudgetError("certificate search budget exhausted");
        SL2Matrix contrib = word_mats[wi] * base * word_mats[wi].inverse();
        if (certificate_dfs(c, idx + 1, acc * contrib, words, word_mats, chosen, budget)) {
            chosen[idx] = words[wi];
            return true;
        }
    }
    return false;
}

} // namespace

std::optional<FibrationCensus> find_certificate(const FibrationCensus& c, int max_len,
                                                long long node_budget) {
    if (euler_count(c) != 12) return std::nullopt;
    std::vector<MonodromyWord> words;
    enumerate_words(max_len, words);
    std::vector<SL2Matrix> mats;
    mats.reserve(words.size());
    for (const auto& w : words) mats.push_back(evaluate(w));

    std::vector<MonodromyWord> chosen(c.fibers.size());
    long long budget = node_budget;
    if (!certificate_dfs(c, 0, SL2Matrix::identity(), words, mats, chosen, budget))
        return std::nullopt;
    FibrationCensus out = c;
    for (size_t i = 0; i < out.fibers.size(); ++i) out.fibers[i].conjugator = chosen[i];
    return out;
}

} // namespace rbd
