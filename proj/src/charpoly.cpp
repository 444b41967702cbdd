#include "gtkk/charpoly.hpp"

#include <stdexcept>
#include <utility>

namespace gtkk {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("character coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("character coefficient overflow");
    return r;
}

void require_same_rank(const CharPoly& a, const CharPoly& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("character rank mismatch");
}

}  // namespace

CharPoly CharPoly::monomial(const Weight& w, std::int64_t coeff) {
    CharPoly p(w.rank());
    p.add_term(w, coeff);
    return p;
}

std::int64_t CharPoly::coefficient(const Weight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

std::int64_t CharPoly::total() const {
    std::int64_t t = 0;
    for (const auto& [w, c] : terms_) t = checked_add(t, c);
    return t;
}

void CharPoly::add_term(const Weight& w, std::int64_t c) {
    if (w.rank() != n_) throw std::invalid_argument("weight length does not match character rank");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
}

CharPoly& CharPoly::operator+=(const CharPoly& other) {
    require_same_rank(*this, other);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

CharPoly CharPoly::operator-() const {
    CharPoly r(n_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

CharPoly operator+(CharPoly a, const CharPoly& b) {
    a += b;
    return a;
}

CharPoly operator-(CharPoly a, const CharPoly& b) {
    a += -b;
    return a;
}

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
    require_same_rank(a, b);
    CharPoly r(a.rank());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) r.add_term(wa + wb, checked_mul(ca, cb));
    return r;
}

CharPoly operator*(std::int64_t c, const CharPoly& a) {
    CharPoly r(a.rank());
    for (const auto& [w, x] : a.terms()) r.add_term(w, checked_mul(c, x));
    return r;
}

CharPoly character_of(std::span<const GTPattern> patterns) {
    if (patterns.empty()) throw std::invalid_argument("character of an empty pattern set has no rank");
    CharPoly r(patterns.front().size());
    for (const auto& p : patterns) r.add_term(weight(p), 1);
    return r;
}

CharPoly schur(const Partition& mu) {
    const auto patterns = enumerate(mu);
    return character_of(patterns);
}

CharPoly schur_via_demazure(const Partition& mu) {
    return demazure_character(mu, reduced_word(longest_element(mu.rank())));
}

CharPoly reflect(int i, const CharPoly& f) {
    CharPoly r(f.rank());
    for (const auto& [key, c] : f.terms()) {
        Weight w = key;
        std::swap(w.coords[static_cast<std::size_t>(i - 1)], w.coords[static_cast<std::size_t>(i)]);
        r.add_term(w, c);
    }
    return r;
}

CharPoly demazure_operator(int i, const CharPoly& f) {
    const int n = f.rank();
    if (i < 1 || i > n - 1) throw std::invalid_argument("divided difference index out of range");
    const auto a = static_cast<std::size_t>(i - 1);
    const auto b = static_cast<std::size_t>(i);
    CharPoly r(n);
    // Per monomial x_i^p x_{i+1}^q the quotient is a geometric series:
    //   p ≥ q:  Σ_{k=0}^{p−q} x_i^{p−k} x_{i+1}^{q+k}
    //   p = q−1: 0
    //   p < q−1: −Σ_{k=1}^{q−p−1} x_i^{p+k} x_{i+1}^{q−k}
    for (const auto& [w, c] : f.terms()) {
        const Entry p = w.coords[a];
        const Entry q = w.coords[b];
        Weight v = w;
        if (p >= q) {
            for (Entry k = 0; k <= p - q; ++k) {
                v.coords[a] = p - k;
                v.coords[b] = q + k;
                r.add_term(v, c);
            }
        } else {
            for (Entry k = 1; k <= q - p - 1; ++k) {
                v.coords[a] = p + k;
                v.coords[b] = q - k;
                r.add_term(v, -c);
            }
        }
    }
    return r;
}

CharPoly demazure_character(const Partition& mu, const Word& word) {
    if (word.rank() != mu.rank()) throw std::invalid_argument("word rank does not match shape");
    if (!is_reduced(word)) throw std::invalid_argument("demazure_character requires a reduced word");
    CharPoly f = CharPoly::monomial(Weight{mu.parts()});
    const auto& letters = word.letters();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) f = demazure_operator(*it, f);
    return f;
}

}  // namespace gtkk
