#include "roughvol/word.hpp"

#include <algorithm>
#include <sstream>

namespace roughvol {

Rational letter_weight(const Letter& l, const Rational& hurst) {
    switch (l.kind) {
        case LetterKind::X: return hurst;
        case LetterKind::W: return Rational(1, 2);
        case LetterKind::Time: return Rational(1);
    }
    throw std::logic_error("letter_weight: bad kind");
}

Word Word::parse(const std::string& text) {
    if (text.empty() || text == "()") return Word();
    std::vector<Letter> ls;
    ls.reserve(text.size());
    for (char c : text) {
        if (c >= '0' && c <= '9')
            ls.push_back({LetterKind::X, static_cast<std::uint8_t>(c - '0')});
        else if (c == 't')
            ls.push_back({LetterKind::Time, 0});
        else if (c >= 'a' && c <= 's')
            ls.push_back({LetterKind::W, static_cast<std::uint8_t>(c - 'a')});
        else
            throw std::invalid_argument("Word::parse: invalid letter '" + std::string(1, c) + "'");
    }
    return Word(std::move(ls));
}

Word Word::x_power(int n, std::uint8_t index) {
    std::vector<Letter> ls(static_cast<std::size_t>(n), Letter{LetterKind::X, index});
    return Word(std::move(ls));
}

Rational Word::weight(const Rational& hurst) const {
    Rational w(0);
    for (const Letter& l : letters_) w += letter_weight(l, hurst);
    return w;
}

Word Word::concat(const Word& other) const {
    std::vector<Letter> ls = letters_;
    ls.insert(ls.end(), other.letters_.begin(), other.letters_.end());
    return Word(std::move(ls));
}

Word Word::prefix(std::size_t n) const {
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
}

Word Word::suffix(std::size_t from) const {
    return Word(std::vector<Letter>(letters_.begin() + from, letters_.end()));
}

bool Word::all_x() const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [](const Letter& l) { return l.kind == LetterKind::X; });
}

bool Word::all_w() const {
    return std::all_of(letters_.begin(), letters_.end(),
                       [](const Letter& l) { return l.kind == LetterKind::W; });
}

int Word::count(LetterKind kind) const {
    return static_cast<int>(std::count_if(letters_.begin(), letters_.end(),
                                          [&](const Letter& l) { return l.kind == kind; }));
}

std::string Word::str() const {
    if (letters_.empty()) return "()";
    std::string s;
    for (const Letter& l : letters_) {
        switch (l.kind) {
            case LetterKind::X: s += static_cast<char>('0' + l.index); break;
            case LetterKind::W: s += static_cast<char>('a' + l.index); break;
            case LetterKind::Time: s += 't'; break;
        }
    }
    return s;
}

Rational WordPolynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void WordPolynomial::add(const Word& w, const Rational& c) {
    if (c == Rational(0)) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Rational(0)) terms_.erase(it);
    }
}

WordPolynomial& WordPolynomial::operator+=(const WordPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

WordPolynomial& WordPolynomial::operator-=(const WordPolynomial& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

WordPolynomial& WordPolynomial::operator*=(const Rational& c) {
    if (c == Rational(0)) { terms_.clear(); return *this; }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

std::string WordPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Rational ca = c;
        if (first) {
            if (c < Rational(0)) { os << "-"; ca = -c; }
        } else {
            os << (c < Rational(0) ? " - " : " + ");
            ca = c < Rational(0) ? -c : c;
        }
        if (ca != Rational(1)) os << ca.str() << " ";
        os << w.str();
        first = false;
    }
    return os.str();
}

namespace {

void shuffle_rec(const std::vector<Letter>& a, std::size_t ia,
                 const std::vector<Letter>& b, std::size_t ib,
                 std::vector<Letter>& acc, WordPolynomial& out, const Rational& coeff) {
    if (ia == a.size() && ib == b.size()) {
        out.add(Word(acc), coeff);
        return;
    }
    if (ia < a.size()) {
        acc.push_back(a[ia]);
        shuffle_rec(a, ia + 1, b, ib, acc, out, coeff);
        acc.pop_back();
    }
    if (ib < b.size()) {
        acc.push_back(b[ib]);
        shuffle_rec(a, ia, b, ib + 1, acc, out, coeff);
        acc.pop_back();
    }
}

} // namespace

WordPolynomial shuffle(const Word& a, const Word& b) {
    WordPolynomial out;
    std::vector<Letter> acc;
    acc.reserve(a.size() + b.size());
    shuffle_rec(a.letters(), 0, b.letters(), 0, acc, out, Rational(1));
    return out;
}

WordPolynomial shuffle(const WordPolynomial& a, const WordPolynomial& b) {
    WordPolynomial out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            WordPolynomial s = shuffle(wa, wb);
            s *= ca * cb;
            out += s;
        }
    return out;
}

std::vector<std::pair<Word, Word>> deconcatenate(const Word& w) {
    std::vector<std::pair<Word, Word>> out;
    out.reserve(w.size() + 1);
    for (std::size_t k = 0; k <= w.size(); ++k)
        out.emplace_back(w.prefix(k), w.suffix(k));
    return out;
}

bool Alphabet::contains(const Word& w) const {
    for (const Letter& l : w.letters()) {
        if (l.kind == LetterKind::X && l.index >= x_dim) return false;
        if (l.kind == LetterKind::W && l.index >= w_dim) return false;
    }
    return true;
}

bool is_generator(const Word& w, const Alphabet& alphabet) {
    if (!alphabet.contains(w)) return false;
    if (w.empty()) return true;
    const Rational h = alphabet.hurst;
    if (w.count(LetterKind::Time) > 0) return w.size() == 1;
    if (w.all_x()) return w.weight(h) <= Rational(1);
    if (w.all_w()) return w.size() <= 2;
    // mixed: z*gamma with z X-only, |z| <= 1/2
    const auto& ls = w.letters();
    if (ls.back().kind != LetterKind::W) return false;
    for (std::size_t i = 0; i + 1 < ls.size(); ++i)
        if (ls[i].kind != LetterKind::X) return false;
    return w.prefix(w.size() - 1).weight(h) <= Rational(1, 2);
}

namespace {

void enumerate_words(const Alphabet& alphabet, const Rational& cap, std::vector<Letter>& acc,
                     const Rational& weight, std::vector<Word>& out) {
    out.emplace_back(acc);
    std::vector<Letter> candidates;
    for (int i = 0; i < alphabet.x_dim; ++i)
        candidates.push_back({LetterKind::X, static_cast<std::uint8_t>(i)});
    for (int i = 0; i < alphabet.w_dim; ++i)
        candidates.push_back({LetterKind::W, static_cast<std::uint8_t>(i)});
    candidates.push_back({LetterKind::Time, 0});
    for (const Letter& l : candidates) {
        Rational w2 = weight + letter_weight(l, alphabet.hurst);
        if (w2 > cap) continue;
        acc.push_back(l);
        enumerate_words(alphabet, cap, acc, w2, out);
        acc.pop_back();
    }
}

} // namespace

std::vector<Word> words_up_to_weight_one(const Alphabet& alphabet) {
    std::vector<Word> out;
    std::vector<Letter> acc;
    enumerate_words(alphabet, Rational(1), acc, Rational(0), out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> generator_set(const Alphabet& alphabet) {
    std::vector<Word> out;
    for (const Word& w : words_up_to_weight_one(alphabet))
        if (!w.empty() && w.count(LetterKind::Time) == 0 && is_generator(w, alphabet))
            out.push_back(w);
    return out;
}

void GeneratorPolynomial::add(Monomial m, const Rational& c) {
    if (c == Rational(0)) return;
    std::sort(m.begin(), m.end());
    auto [it, inserted] = terms_.emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == Rational(0)) terms_.erase(it);
    }
}

GeneratorPolynomial& GeneratorPolynomial::operator+=(const GeneratorPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

GeneratorPolynomial& GeneratorPolynomial::operator*=(const Rational& c) {
    if (c == Rational(0)) { terms_.clear(); return *this; }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

GeneratorPolynomial GeneratorPolynomial::times_generator(const Word& g) const {
    GeneratorPolynomial out;
    for (const auto& [m, c] : terms_) {
        Monomial m2 = m;
        m2.push_back(g);
        out.add(std::move(m2), c);
    }
    return out;
}

WordPolynomial GeneratorPolynomial::expand() const {
    WordPolynomial out;
    for (const auto& [m, c] : terms_) {
        WordPolynomial prod(Word{}); // unit
        for (const Word& g : m) prod = shuffle(prod, WordPolynomial(g));
        prod *= c;
        out += prod;
    }
    return out;
}

std::string GeneratorPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational ca = c;
        if (first) {
            if (c < Rational(0)) { os << "-"; ca = -c; }
        } else {
            os << (c < Rational(0) ? " - " : " + ");
            ca = c < Rational(0) ? -c : c;
        }
        if (ca != Rational(1) || m.empty()) os << ca.str() << (m.empty() ? "" : " ");
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i) os << "*";
            os << m[i].str();
        }
        first = false;
    }
    return os.str();
}

GeneratorPolynomial decompose_to_generators(const Word& w, const Alphabet& alphabet) {
    if (!alphabet.contains(w))
        throw std::invalid_argument("decompose_to_generators: word not over the alphabet");
    if (w.weight(alphabet.hurst) > Rational(1))
        throw std::invalid_argument("decompose_to_generators: weight of '" + w.str() +
                                    "' exceeds 1");
    GeneratorPolynomial out;
    if (w.empty()) {
        out.add({}, Rational(1));
        return out;
    }
    if (is_generator(w, alphabet)) {
        out.add({w}, Rational(1));
        return out;
    }
    // Remaining case: exactly one W-letter with a non-empty X-suffix,
    // u a j_1..j_n. Split the shuffle (u a) # (j_1..j_n) by the number of
    // trailing j's after the W-letter.
    const auto& ls = w.letters();
    std::size_t apos = 0;
    while (apos < ls.size() && ls[apos].kind != LetterKind::W) ++apos;
    const Word u = w.prefix(apos);
    const Letter a = ls[apos];
    const Word v = w.suffix(apos + 1); // non-empty, all X

    out = decompose_to_generators(u.concat(Word::single(a)), alphabet).times_generator(v);
    for (std::size_t k = 1; k <= v.size(); ++k) {
        const WordPolynomial mixed = shuffle(u, v.prefix(k));
        const Word tail = v.suffix(k);
        for (const auto& [xw, c] : mixed.terms()) {
            GeneratorPolynomial rec =
                decompose_to_generators(xw.concat(Word::single(a)).concat(tail), alphabet);
            rec *= -c;
            out += rec;
        }
    }
    return out;
}

} // namespace roughvol
