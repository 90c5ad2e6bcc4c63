#pragma once

// The Hecke-algebra module with basis {a_w} indexed by involutions of S_n,
// carrying the four-case generator action, its bar involution, and the
// bar-invariant basis {A_w} together with the polynomials P^sigma_{y,w}
// extracted from its triangular expansion
//
//     A_w = v^(-l(w)) * sum_{y <= w} P^sigma_{y,w} a_y,   P^sigma_{w,w} = 1,
//
// where each off-diagonal P^sigma_{y,w} is a polynomial in u = v^2 of degree
// at most (l(w) - l(y) - 1)/2.  A_w is computed from this characterization
// directly: a triangular solve over decreasing length, with the degree bound
// forcing uniqueness of every correction term.

#include <invo/hecke.hpp>
#include <invo/istar.hpp>
#include <invo/laurent.hpp>
#include <invo/perm.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace invo {

struct MTag {};
using MElt = SparseElt<MTag>;

inline MElt m_zero(int n) { return {n, {}}; }

inline MElt a_basis(const Perm& w) {
    if (!is_involution(w)) throw std::invalid_argument("a-basis keys must be involutions");
    MElt m{static_cast<int>(w.size()), {}};
    m.add(w, 1);
    return m;
}

// thrown when the triangular characterization of A_w fails to pin a unique
// solution (it never should; a throw falsifies the uniqueness claim)
struct UniquenessViolation : std::runtime_error {
    explicit UniquenessViolation(const std::string& what) : std::runtime_error(what) {}
};

// T_s a_w by the four cases:
//   sw = ws, l up:    u a_w + (u+1) a_sw
//   sw = ws, l down:  (u^2-u-1) a_w + (u^2-u) a_sw
//   sw != ws, l up:   a_sws
//   sw != ws, l down: (u^2-1) a_w + u^2 a_sws
inline MElt act_gen(int s, const MElt& m) {
    const Laurent u = Laurent::u(), one = 1;
    const Laurent up1 = u + one;
    const Laurent u2 = Laurent::u(2);
    const Laurent c_comm_dn_w = u2 - u - one, c_comm_dn_s = u2 - u;
    const Laurent c_nc_dn_w = u2 - one;
    MElt r{m.n, {}};
    for (const auto& [w, f] : m.c) {
        const Perm sw = mul_gen_left(w, s);
        const Perm ws = mul_gen_right(w, s);
        const bool up = length(sw) > length(w);
        if (sw == ws) {
            if (up) {
                r.add(w, u * f);
                r.add(sw, up1 * f);
            } else {
                r.add(w, c_comm_dn_w * f);
                r.add(sw, c_comm_dn_s * f);
            }
        } else {
            const Perm sws = mul_gen_right(sw, s);
            if (up) {
                r.add(sws, f);
            } else {
                r.add(w, c_nc_dn_w * f);
                r.add(sws, u2 * f);
            }
        }
    }
    return r;
}

// h m for h in the algebra: T_x acts through a reduced word of x, rightmost
// letter first; extended bilinearly
inline MElt act(const HeckeElt& h, const MElt& m) {
    if (h.n != m.n) throw std::invalid_argument("rank mismatch");
    MElt r{m.n, {}};
    for (const auto& [x, f] : h.c) {
        MElt xm = m;
        const Word word = reduced_word(x);
        for (auto it = word.rbegin(); it != word.rend(); ++it) xm = act_gen(*it, xm);
        for (const auto& [w, g] : xm.c) r.add(w, f * g);
    }
    return r;
}

// bar on the module: a_w |-> (-1)^l(w) T_{w}^-1 a_{w} (w is its own inverse),
// coefficients through the Laurent bar
inline MElt bar_m(const MElt& m) {
    MElt r{m.n, {}};
    for (const auto& [w, f] : m.c) {
        MElt base = act(t_inverse(w), a_basis(w));
        const Laurent sign = (length(w) % 2 == 0) ? Laurent(1) : Laurent(-1);
        const Laurent bf = f.bar() * sign;
        for (const auto& [y, g] : base.c) r.add(y, bf * g);
    }
    return r;
}

struct LVBasisElt {
    Perm w;
    MElt expansion;                             // the full A_w over the a-basis
    std::map<Perm, Laurent, LenLexOrder> polys; // y -> transition polynomial, exponents in v (even)
};

// Per-rank context: caches the bar images of all basis elements and the
// computed A_w.  Build is single-threaded; a completed context is immutable
// through the const interface.
class LVContext {
  public:
    explicit LVContext(int n) : n_(n), involutions_(enumerate_involutions(n)) {
        for (const Perm& y : involutions_) bar_a_.emplace(y, bar_m(a_basis(y)));
    }

    int rank() const { return n_; }
    const std::vector<Perm>& involutions() const { return involutions_; }
    const MElt& bar_a(const Perm& y) const { return bar_a_.at(y); }

    const LVBasisElt& lv_basis(const Perm& w) {
        auto it = cache_.find(w);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(w, solve(w)).first->second;
    }

    Laurent psigma(const Perm& y, const Perm& w) {
        const LVBasisElt& aw = lv_basis(w);
        auto it = aw.polys.find(y);
        return it == aw.polys.end() ? Laurent() : it->second;
    }

  private:
    MElt bar_of(const MElt& m) const {
        MElt r{m.n, {}};
        for (const auto& [y, f] : m.c) {
            const Laurent bf = f.bar();
            for (const auto& [z, g] : bar_a_.at(y).c) r.add(z, bf * g);
        }
        return r;
    }

    LVBasisElt solve(const Perm& w) const {
        const int lw = length(w);
        std::map<Perm, Laurent, LenLexOrder> coeffs;  // the c_y with A_w = sum c_y a_y
        coeffs[w] = Laurent::v(-lw);

        // candidates below w, processed by decreasing length (any linear
        // extension of the Bruhat order works; length grades it)
        std::vector<Perm> order;
        for (const Perm& z : involutions_)
            if (z != w && length(z) < lw) order.push_back(z);
        std::sort(order.begin(), order.end(), [](const Perm& a, const Perm& b) {
            const int la = length(a), lb = length(b);
            if (la != lb) return la > lb;
            return a < b;
        });

        for (const Perm& z : order) {
            const int lz = length(z);
            // diagonal of the bar matrix must be v^(-2 l(z))
            if (bar_a_.at(z).c.at(z) != Laurent::v(-2 * lz))
                throw UniquenessViolation("unexpected diagonal in the bar matrix");
            // known part: g = sum_{y != z} bar(c_y) r_{z,y}
            Laurent g;
            for (const auto& [y, cy] : coeffs) {
                if (y == z) continue;
                auto it = bar_a_.at(y).c.find(z);
                if (it == bar_a_.at(y).c.end()) continue;
                g += cy.bar() * it->second;
            }
            if (g.is_zero()) continue;
            // bar-invariance at z:  c_z - bar(c_z) v^(-2 l(z)) = g; substituting
            // c_z = v^(-l(z)) h turns it into  h - bar(h) = v^(l(z)) g =: G,
            // and the degree bound says h has strictly negative v-exponents,
            // i.e. h = (negative-exponent part of G)
            const Laurent G = Laurent::v(lz) * g;
            if (G.coeff(0) != 0) throw UniquenessViolation("constant term obstructs the correction");
            if (G.bar() != -G) throw UniquenessViolation("correction equation is not antisymmetric");
            Laurent h;
            for (const auto& [e, c] : G.terms())
                if (e < 0) h.add_term(e, c);
            const Laurent cz = Laurent::v(-lz) * h;
            if (!cz.is_zero()) coeffs[z] = cz;
        }

        LVBasisElt out;
        out.w = w;
        out.expansion = MElt{n_, {}};
        for (const auto& [y, cy] : coeffs) out.expansion.add(y, cy);

        // post-hoc verification of every claimed property
        if (bar_of(out.expansion) != out.expansion)
            throw UniquenessViolation("solved element is not bar-invariant");
        for (const auto& [y, cy] : coeffs) {
            const Laurent p = Laurent::v(lw) * cy;
            if (!p.is_u_polynomial()) throw UniquenessViolation("transition entry escapes Z[u]");
            if (!bruhat_leq(y, w)) throw UniquenessViolation("support escapes the Bruhat interval");
            if (y == w) {
                if (!p.is_one()) throw UniquenessViolation("diagonal entry is not 1");
            } else if (p.max_exp() > lw - length(y) - 1) {
                // exponents are in v and even: deg_u <= (l(w) - l(y) - 1)/2
                throw UniquenessViolation("degree bound violated");
            }
            out.polys[y] = p;
        }
        return out;
    }

    int n_;
    std::vector<Perm> involutions_;
    std::map<Perm, MElt, LenLexOrder> bar_a_;
    std::map<Perm, LVBasisElt, LenLexOrder> cache_;
};

}  // namespace invo
