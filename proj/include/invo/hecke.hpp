#pragma once

// Iwahori-Hecke algebra of S_n over Z[v,v^-1] in the T-basis, with the
// quadratic relation (T_s + 1)(T_s - u^2) = 0 where u = v^2.  Provides
// generator and general products, basis-element inverses, the bar involution,
// and the distinguished element x_empty = sum over all of S_n of
// u^(-length) T_x, whose Hecke orbit the downstream modules study.

#include <invo/laurent.hpp>
#include <invo/perm.hpp>

#include <map>
#include <stdexcept>
#include <utility>

namespace invo {

// deterministic basis order: by length, then one-line notation
struct LenLexOrder {
    bool operator()(const Perm& a, const Perm& b) const {
        const int la = length(a), lb = length(b);
        if (la != lb) return la < lb;
        return a < b;
    }
};

using CoeffMap = std::map<Perm, Laurent, LenLexOrder>;

// sparse linear combination of basis elements indexed by permutations; the
// tag keeps algebra elements (T-basis) and module elements (a-basis) apart
template <class Tag>
struct SparseElt {
    int n = 0;
    CoeffMap c;

    void add(const Perm& w, const Laurent& f) {
        if (f.is_zero()) return;
        auto it = c.find(w);
        if (it == c.end()) {
            c.emplace(w, f);
        } else {
            it->second += f;
            if (it->second.is_zero()) c.erase(it);
        }
    }
    bool is_zero() const { return c.empty(); }
    friend bool operator==(const SparseElt& a, const SparseElt& b) { return a.n == b.n && a.c == b.c; }
    friend bool operator!=(const SparseElt& a, const SparseElt& b) { return !(a == b); }
};

template <class Tag>
SparseElt<Tag> operator+(const SparseElt<Tag>& a, const SparseElt<Tag>& b) {
    if (a.n != b.n) throw std::invalid_argument("rank mismatch");
    SparseElt<Tag> r = a;
    for (const auto& [w, f] : b.c) r.add(w, f);
    return r;
}

template <class Tag>
SparseElt<Tag> operator-(const SparseElt<Tag>& a, const SparseElt<Tag>& b) {
    if (a.n != b.n) throw std::invalid_argument("rank mismatch");
    SparseElt<Tag> r = a;
    for (const auto& [w, f] : b.c) r.add(w, -f);
    return r;
}

template <class Tag>
SparseElt<Tag> operator*(const Laurent& f, const SparseElt<Tag>& h) {
    SparseElt<Tag> r{h.n, {}};
    for (const auto& [w, g] : h.c) r.add(w, f * g);
    return r;
}

struct HeckeTag {};
using HeckeElt = SparseElt<HeckeTag>;

inline HeckeElt hecke_zero(int n) { return {n, {}}; }

inline HeckeElt t_basis(const Perm& w) {
    HeckeElt h{static_cast<int>(w.size()), {}};
    h.add(w, 1);
    return h;
}

inline HeckeElt hecke_unit(int n) { return t_basis(identity_perm(n)); }

// T_s * h:  T_s T_w = T_sw when the length goes up, else (u^2-1) T_w + u^2 T_sw
inline HeckeElt mul_gen_left(int s, const HeckeElt& h) {
    const Laurent u2 = Laurent::u(2);
    const Laurent u2m1 = Laurent::u(2) - Laurent(1);
    HeckeElt r{h.n, {}};
    for (const auto& [w, f] : h.c) {
        Perm sw = mul_gen_left(w, s);  // the permutation s*w
        if (length(sw) > length(w)) {
            r.add(sw, f);
        } else {
            r.add(w, u2m1 * f);
            r.add(sw, u2 * f);
        }
    }
    return r;
}

// T_x * h via the letters of a reduced word of x, rightmost applied first
inline HeckeElt mul_basis_left(const Perm& x, const HeckeElt& h) {
    const Word word = reduced_word(x);
    HeckeElt r = h;
    for (auto it = word.rbegin(); it != word.rend(); ++it) r = mul_gen_left(*it, r);
    return r;
}

inline HeckeElt mul(const HeckeElt& a, const HeckeElt& b) {
    if (a.n != b.n) throw std::invalid_argument("rank mismatch");
    HeckeElt r{a.n, {}};
    for (const auto& [x, f] : a.c) {
        HeckeElt xb = mul_basis_left(x, b);
        for (const auto& [w, g] : xb.c) r.add(w, f * g);
    }
    return r;
}

// T_s^-1 * h = u^-2 (T_s * h) + (u^-2 - 1) h
inline HeckeElt mul_gen_inv_left(int s, const HeckeElt& h) {
    const Laurent ui2 = Laurent::u(-2);
    const Laurent ui2m1 = Laurent::u(-2) - Laurent(1);
    HeckeElt r{h.n, {}};
    HeckeElt sh = mul_gen_left(s, h);
    for (const auto& [w, f] : sh.c) r.add(w, ui2 * f);
    for (const auto& [w, f] : h.c) r.add(w, ui2m1 * f);
    return r;
}

// T_w^-1: successive left products by the letter inverses of a reduced word
// (applying the first letter's inverse first yields the reversed product)
inline HeckeElt t_inverse(const Perm& w) {
    HeckeElt r = hecke_unit(static_cast<int>(w.size()));
    for (int s : reduced_word(w)) r = mul_gen_inv_left(s, r);
    return r;
}

// bar: sum c_x T_x  |->  sum bar(c_x) (T_{x^-1})^-1
inline HeckeElt bar_hecke(const HeckeElt& h) {
    HeckeElt r{h.n, {}};
    for (const auto& [x, f] : h.c) {
        const Laurent bf = f.bar();
        HeckeElt inv = t_inverse(inverse(x));
        for (const auto& [w, g] : inv.c) r.add(w, bf * g);
    }
    return r;
}

// x_empty = sum over all x in S_n of u^(-length(x)) T_x
inline HeckeElt x_empty(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    HeckeElt r{n, {}};
    for (const Perm& x : all_perms(n)) r.add(x, Laurent::u(-length(x)));
    return r;
}

}  // namespace invo
