#pragma once

// Exact arithmetic for the symmetric group S_n in one-line notation (1-based
// images).  Composition convention, fixed repo-wide: (p*q)(i) = p(q(i)), the
// right factor acts first.  Generators s_i swap i and i+1.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace invo {

using Perm = std::vector<int>;  // one-line notation: p[i-1] = p(i), values 1..n
using Word = std::vector<int>;  // generator indices, 1-based (letter i means s_i)

inline Perm identity_perm(int n) {
    Perm p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    return p;
}

inline bool is_valid_perm(const Perm& p) {
    const int n = static_cast<int>(p.size());
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int x : p) {
        if (x < 1 || x > n || seen[static_cast<size_t>(x - 1)]) return false;
        seen[static_cast<size_t>(x - 1)] = true;
    }
    return true;
}

inline void check_same_rank(const Perm& p, const Perm& q) {
    if (p.size() != q.size()) throw std::invalid_argument("rank mismatch");
}

// (p*q)(i) = p(q(i))
inline Perm compose(const Perm& p, const Perm& q) {
    check_same_rank(p, q);
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[static_cast<size_t>(q[i] - 1)];
    return r;
}

inline Perm inverse(const Perm& p) {
    Perm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[static_cast<size_t>(p[i] - 1)] = static_cast<int>(i + 1);
    return r;
}

// the adjacent transposition s_i = (i, i+1), 1 <= i <= n-1
inline Perm gen_perm(int i, int n) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
    Perm p = identity_perm(n);
    std::swap(p[static_cast<size_t>(i - 1)], p[static_cast<size_t>(i)]);
    return p;
}

inline bool is_identity(const Perm& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i + 1)) return false;
    return true;
}

// inversion count = Coxeter length
inline int length(const Perm& p) {
    int inv = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++inv;
    return inv;
}

// l(p * s_i) < l(p)
inline bool has_right_descent(const Perm& p, int i) {
    return p[static_cast<size_t>(i - 1)] > p[static_cast<size_t>(i)];
}

// l(s_i * p) < l(p): value i appears after value i+1
inline bool has_left_descent(const Perm& p, int i) {
    int pos_i = 0, pos_i1 = 0;
    for (size_t a = 0; a < p.size(); ++a) {
        if (p[a] == i) pos_i = static_cast<int>(a);
        if (p[a] == i + 1) pos_i1 = static_cast<int>(a);
    }
    return pos_i > pos_i1;
}

// multiply by s_i on the right: swap positions i, i+1
inline Perm mul_gen_right(Perm p, int i) {
    std::swap(p[static_cast<size_t>(i - 1)], p[static_cast<size_t>(i)]);
    return p;
}

// multiply by s_i on the left: swap values i, i+1
inline Perm mul_gen_left(Perm p, int i) {
    for (auto& x : p) {
        if (x == i)
            x = i + 1;
        else if (x == i + 1)
            x = i;
    }
    return p;
}

// canonical reduced word: repeatedly strip the smallest right descent
inline Word reduced_word(Perm p) {
    const int n = static_cast<int>(p.size());
    Word w;
    for (;;) {
        int d = 0;
        for (int i = 1; i < n; ++i)
            if (has_right_descent(p, i)) {
                d = i;
                break;
            }
        if (d == 0) break;
        p = mul_gen_right(std::move(p), d);
        w.push_back(d);
    }
    std::reverse(w.begin(), w.end());
    return w;
}

inline Perm perm_from_word(int n, const Word& w) {
    Perm p = identity_perm(n);
    for (int i : w) {
        if (i < 1 || i >= n) throw std::invalid_argument("word letter out of range");
        p = mul_gen_right(std::move(p), i);
    }
    return p;
}

// Bruhat order via the rank-matrix criterion:
// p <= q  iff  #{a <= i : p(a) >= j} <= #{a <= i : q(a) >= j} for all i, j
inline bool bruhat_leq(const Perm& p, const Perm& q) {
    check_same_rank(p, q);
    const int n = static_cast<int>(p.size());
    for (int j = 1; j <= n; ++j) {
        int cp = 0, cq = 0;
        for (int i = 1; i <= n; ++i) {
            if (p[static_cast<size_t>(i - 1)] >= j) ++cp;
            if (q[static_cast<size_t>(i - 1)] >= j) ++cq;
            if (cp > cq) return false;
        }
    }
    return true;
}

// all n! permutations in lexicographic one-line order
inline std::vector<Perm> all_perms(int n) {
    std::vector<Perm> out;
    Perm p = identity_perm(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::string perm_to_string(const Perm& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

inline std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        const std::string tok = s.substr(pos, next - pos);
        if (tok.empty()) throw std::invalid_argument("empty entry in list: '" + s + "'");
        size_t used = 0;
        int val = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
        out.push_back(val);
        pos = next + 1;
        if (next == s.size()) break;
    }
    return out;
}

// parse "3,1,2"; if n > 0, additionally require that rank
inline Perm perm_from_string(const std::string& s, int n = 0) {
    Perm p = parse_csv_ints(s);
    if (!is_valid_perm(p)) throw std::invalid_argument("not a permutation: '" + s + "'");
    if (n > 0 && static_cast<int>(p.size()) != n) throw std::invalid_argument("rank mismatch: '" + s + "'");
    return p;
}

inline std::string word_to_string(const Word& w) { return perm_to_string(w); }

// parse "1,2,1" with letters validated against rank n; "" is the empty word
inline Word word_from_string(const std::string& s, int n) {
    if (s.empty()) return {};
    Word w = parse_csv_ints(s);
    for (int i : w)
        if (i < 1 || i >= n) throw std::invalid_argument("word letter out of range: '" + s + "'");
    return w;
}

}  // namespace invo
