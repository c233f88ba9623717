#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "roughvol/rational.hpp"

namespace roughvol {

/// Letters of the merged alphabet. X-letters index the rough factor
/// coordinates (weight = Hurst), W-letters the Brownian coordinates
/// (weight 1/2), and the time letter carries weight 1.
enum class LetterKind : std::uint8_t { X = 0, W = 1, Time = 2 };

struct Letter {
    LetterKind kind = LetterKind::X;
    std::uint8_t index = 0;

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

Rational letter_weight(const Letter& l, const Rational& hurst);

/// A word over the weighted alphabet. Ordering is graded-lexicographic
/// (by length, then letterwise), which is the convention used everywhere
/// a canonical ordering of words is needed.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Parse a word literal: digits are X-letters, 'a'..'s' are W-letters,
    /// 't' is the time letter. "" and "()" denote the empty word.
    static Word parse(const std::string& text);

    static Word x_power(int n, std::uint8_t index = 0); // 0^n
    static Word single(Letter l) { return Word(std::vector<Letter>{l}); }

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }
    const Letter& operator[](std::size_t i) const { return letters_[i]; }

    Rational weight(const Rational& hurst) const;

    Word concat(const Word& other) const;
    Word prefix(std::size_t n) const;
    Word suffix(std::size_t from) const;

    bool all_x() const;
    bool all_w() const;
    int count(LetterKind kind) const;

    std::string str() const;

    friend bool operator==(const Word& a, const Word& b) { return a.letters_ == b.letters_; }
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        return a.letters_ <=> b.letters_;
    }

private:
    std::vector<Letter> letters_;
};

/// Formal linear combination of words with exact rational coefficients.
/// Zero coefficients are never stored.
class WordPolynomial {
public:
    WordPolynomial() = default;
    explicit WordPolynomial(const Word& w, const Rational& c = Rational(1)) { add(w, c); }

    const std::map<Word, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Word& w) const;

    void add(const Word& w, const Rational& c);

    WordPolynomial& operator+=(const WordPolynomial& o);
    WordPolynomial& operator-=(const WordPolynomial& o);
    WordPolynomial& operator*=(const Rational& c);
    friend WordPolynomial operator+(WordPolynomial a, const WordPolynomial& b) { return a += b; }
    friend WordPolynomial operator-(WordPolynomial a, const WordPolynomial& b) { return a -= b; }
    friend WordPolynomial operator*(WordPolynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const WordPolynomial& a, const WordPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    std::map<Word, Rational> terms_;
};

/// Shuffle product: sum over all order-preserving interleavings.
WordPolynomial shuffle(const Word& a, const Word& b);
WordPolynomial shuffle(const WordPolynomial& a, const WordPolynomial& b);

/// Deconcatenation coproduct: all splits w = uv, including the trivial ones.
std::vector<std::pair<Word, Word>> deconcatenate(const Word& w);

/// Alphabet dimensions together with the Hurst weight of X-letters.
struct Alphabet {
    int x_dim = 1;       // e
    int w_dim = 1;       // d
    Rational hurst;      // weight of each X-letter, in (0, 1/2]

    Alphabet(int e, int d, Rational h) : x_dim(e), w_dim(d), hurst(std::move(h)) {
        if (x_dim < 1 || w_dim < 1) throw std::invalid_argument("Alphabet: dims must be >= 1");
        if (!(hurst > Rational(0)) || hurst > Rational(1, 2))
            throw std::invalid_argument("Alphabet: hurst weight must lie in (0, 1/2]");
    }

    bool contains(const Word& w) const;
};

/// Membership in the shuffle-generating set: X-only words of weight <= 1,
/// words z*gamma with z X-only of weight <= 1/2 and gamma a W-letter,
/// two-letter W-words, the bare time letter, and the empty word.
bool is_generator(const Word& w, const Alphabet& alphabet);

/// All generating-set members of weight <= 1 for the given alphabet.
std::vector<Word> generator_set(const Alphabet& alphabet);

/// All words over the alphabet of weight <= 1, graded-lex ordered.
std::vector<Word> words_up_to_weight_one(const Alphabet& alphabet);

/// A polynomial in the generators: each monomial is a shuffle product of
/// generator words (stored as a sorted multiset) with a rational coefficient.
class GeneratorPolynomial {
public:
    using Monomial = std::vector<Word>; // sorted

    GeneratorPolynomial() = default;

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    void add(Monomial m, const Rational& c);

    GeneratorPolynomial& operator+=(const GeneratorPolynomial& o);
    GeneratorPolynomial& operator*=(const Rational& c);

    /// Multiply by the single generator word g (append to every monomial).
    GeneratorPolynomial times_generator(const Word& g) const;

    /// Expand back into the shuffle algebra (shuffle out all products).
    WordPolynomial expand() const;

    std::string str() const;

private:
    std::map<Monomial, Rational> terms_;
};

/// Express a word of weight <= 1 as a polynomial (under shuffle) in the
/// generating set, by recursing on the trailing X-letters after the single
/// W-letter. Idempotent on generators; throws on weight > 1.
GeneratorPolynomial decompose_to_generators(const Word& w, const Alphabet& alphabet);

} // namespace roughvol
