#pragma once

// Involutions in S_n under the demazure-style product  s (*) w = sw if
// sw = ws, else sws  (written twist() here), their rank function rho, the
// full sets of reduced expressions with respect to (*), reduced sequences,
// and the exchange property.

#include <invo/perm.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace invo {

inline bool is_involution(const Perm& w) { return is_identity(compose(w, w)); }

// s (*) w = sw if sw = ws, else sws; maps involutions to involutions
inline Perm twist(int s, const Perm& w) {
    Perm sw = mul_gen_left(w, s);
    Perm ws = mul_gen_right(w, s);
    if (sw == ws) return sw;
    return mul_gen_right(std::move(sw), s);
}

// right-to-left fold: word (i1,...,ik) applied as s_{i1} (*) (... (s_{ik} (*) w))
inline Perm twist_word(const Word& word, Perm w) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = twist(*it, w);
    return w;
}

// evaluate a word starting from the identity
inline Perm eval_istar(int n, const Word& word) { return twist_word(word, identity_perm(n)); }

// rank: common length of all reduced expressions of w under (*).  Greedy
// descent chain; each step with l(sw) < l(w) lowers the rank by exactly 1.
inline int rho(Perm w) {
    const int n = static_cast<int>(w.size());
    int r = 0;
    while (!is_identity(w)) {
        for (int s = 1; s < n; ++s) {
            if (has_left_descent(w, s)) {
                w = twist(s, w);
                ++r;
                break;
            }
        }
    }
    return r;
}

// all involutions of S_n, sorted by (rho, lexicographic one-line notation)
inline std::vector<Perm> enumerate_involutions(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    std::vector<Perm> out;
    for (const Perm& p : all_perms(n))
        if (is_involution(p)) out.push_back(p);
    std::stable_sort(out.begin(), out.end(),
                     [](const Perm& a, const Perm& b) { return rho(a) < rho(b); });
    return out;
}

// a word is a reduced expression iff every letter strictly raises the length
// of the partial product it is applied to
inline bool is_reduced_istar_expression(int n, const Word& word) {
    Perm w = identity_perm(n);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it < 1 || *it >= n) return false;
        if (has_left_descent(w, *it)) return false;
        w = twist(*it, w);
    }
    return true;
}

namespace detail {
inline void collect_expressions(const Perm& w, std::map<Perm, std::vector<Word>>& memo) {
    if (memo.count(w)) return;
    const int n = static_cast<int>(w.size());
    std::vector<Word> out;
    if (is_identity(w)) {
        out.push_back({});
    } else {
        for (int s = 1; s < n; ++s) {
            if (!has_left_descent(w, s)) continue;
            const Perm v = twist(s, w);
            collect_expressions(v, memo);
            for (const Word& tail : memo.at(v)) {
                Word word;
                word.reserve(tail.size() + 1);
                word.push_back(s);
                word.insert(word.end(), tail.begin(), tail.end());
                out.push_back(std::move(word));
            }
        }
    }
    memo.emplace(w, std::move(out));
}
}  // namespace detail

// the complete set of reduced expressions of an involution under (*),
// lexicographically sorted (ascending generator choice at each level keeps
// the backward search output lex-ordered already)
inline std::vector<Word> reduced_istar_expressions(const Perm& w) {
    const int n = static_cast<int>(w.size());
    if (n > 8) throw std::invalid_argument("rank capped at 8 for expression enumeration");
    if (!is_involution(w)) throw std::invalid_argument("not an involution");
    std::map<Perm, std::vector<Word>> memo;
    detail::collect_expressions(w, memo);
    return memo.at(w);
}

// lexicographically smallest reduced expression
inline Word canonical_istar_expression(const Perm& w) {
    const int n = static_cast<int>(w.size());
    if (!is_involution(w)) throw std::invalid_argument("not an involution");
    Word word;
    Perm v = w;
    while (!is_identity(v)) {
        for (int s = 1; s < n; ++s) {
            if (has_left_descent(v, s)) {
                word.push_back(s);
                v = twist(s, v);
                break;
            }
        }
    }
    return word;
}

// (word, w) is reduced when prepending the word to w raises rho by its length
inline bool is_reduced_sequence(const Word& word, const Perm& w) {
    return rho(twist_word(word, w)) == rho(w) + static_cast<int>(word.size());
}

// Exchange property: given a reduced word for w and a generator s lowering
// the rank of w, some single deletion turns the word into a reduced
// expression of s (*) w.  Returns the smallest 1-based such index; returns 0
// if none exists (which would falsify the property).
inline int exchange_index(int n, int s, const Word& word) {
    const Perm w = eval_istar(n, word);
    const Perm target = twist(s, w);
    if (rho(target) != static_cast<int>(word.size()) - 1)
        throw std::invalid_argument("exchange_index: rank must drop");
    for (size_t a = 0; a < word.size(); ++a) {
        Word del;
        del.reserve(word.size() - 1);
        for (size_t t = 0; t < word.size(); ++t)
            if (t != a) del.push_back(word[t]);
        if (is_reduced_istar_expression(n, del) && eval_istar(n, del) == target)
            return static_cast<int>(a + 1);
    }
    return 0;
}

// number of 2-cycles of an involution
inline int two_cycle_count(const Perm& w) {
    int c = 0;
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] > static_cast<int>(i + 1)) ++c;
    return c;
}

}  // namespace invo
