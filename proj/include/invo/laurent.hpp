#pragma once

// Exact sparse Laurent polynomials Z[v, v^-1].  The quantum parameter u = v^2
// lives on the even exponents; helpers are provided to build and render such
// elements directly in u.  Coefficients are arbitrary-precision integers:
// the triangular recursions downstream overflow fixed-width types quickly.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace invo {

using BigInt = boost::multiprecision::cpp_int;

// Thrown by Laurent::exact_div when the quotient does not exist in Z[v,v^-1].
struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

class Laurent {
  public:
    Laurent() = default;
    Laurent(long long c) {
        if (c != 0) terms_[0] = c;
    }
    explicit Laurent(BigInt c) {
        if (c != 0) terms_[0] = std::move(c);
    }

    // c * v^exp
    static Laurent monomial(int exp, BigInt c = 1) {
        Laurent f;
        if (c != 0) f.terms_[exp] = std::move(c);
        return f;
    }
    // c * v^(2*exp), i.e. c * u^exp
    static Laurent u_monomial(int exp, BigInt c = 1) { return monomial(2 * exp, std::move(c)); }
    static Laurent v(int exp = 1) { return monomial(exp); }
    static Laurent u(int exp = 1) { return monomial(2 * exp); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }

    const std::map<int, BigInt>& terms() const { return terms_; }

    BigInt coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    int min_exp() const {
        if (is_zero()) throw std::logic_error("min_exp of zero");
        return terms_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw std::logic_error("max_exp of zero");
        return terms_.rbegin()->first;
    }

    // supported on even exponents only, i.e. lies in Z[u, u^-1]
    bool even_only() const {
        for (const auto& [e, c] : terms_)
            if (e % 2 != 0) return false;
        return true;
    }
    // supported on non-negative even exponents, i.e. lies in Z[u]
    bool is_u_polynomial() const {
        for (const auto& [e, c] : terms_)
            if (e < 0 || e % 2 != 0) return false;
        return true;
    }

    Laurent& operator+=(const Laurent& g) {
        for (const auto& [e, c] : g.terms_) add_term(e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& g) {
        for (const auto& [e, c] : g.terms_) add_term(e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent f, const Laurent& g) { return f += g; }
    friend Laurent operator-(Laurent f, const Laurent& g) { return f -= g; }
    Laurent operator-() const {
        Laurent f;
        for (const auto& [e, c] : terms_) f.terms_[e] = -c;
        return f;
    }
    friend Laurent operator*(const Laurent& f, const Laurent& g) {
        Laurent h;
        for (const auto& [ef, cf] : f.terms_)
            for (const auto& [eg, cg] : g.terms_) h.add_term(ef + eg, cf * cg);
        return h;
    }
    Laurent& operator*=(const Laurent& g) { return *this = *this * g; }

    friend bool operator==(const Laurent& f, const Laurent& g) { return f.terms_ == g.terms_; }
    friend bool operator!=(const Laurent& f, const Laurent& g) { return !(f == g); }

    // bar involution: v^n -> v^-n
    Laurent bar() const {
        Laurent f;
        for (const auto& [e, c] : terms_) f.terms_[-e] = c;
        return f;
    }

    void add_term(int exp, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // Exact division: returns q with *this = g * q, else throws NotDivisible.
    // Peels the lowest term of the remainder against the lowest term of g; the
    // candidate quotient exponent is bounded above by max_exp(f) - max_exp(g),
    // which guarantees termination.
    Laurent exact_div(const Laurent& g) const {
        if (g.is_zero()) throw std::invalid_argument("exact_div by zero");
        if (is_zero()) return Laurent();
        const int glo = g.min_exp();
        const int ghi = g.max_exp();
        const BigInt& gc = g.terms_.begin()->second;
        const int qmax = max_exp() - ghi;
        Laurent r = *this, q;
        while (!r.is_zero()) {
            const int qe = r.min_exp() - glo;
            if (qe > qmax) throw NotDivisible("exact_div: nonzero remainder");
            const BigInt& rc = r.terms_.begin()->second;
            if (rc % gc != 0) throw NotDivisible("exact_div: leading coefficient not divisible");
            Laurent t = monomial(qe, rc / gc);
            q += t;
            r -= t * g;
        }
        return q;
    }

    // Evaluate at v = a over F_p (p an odd prime < 2^62, a != 0 mod p).
    // Negative exponents use a^-1 = a^(p-2) mod p.
    std::uint64_t specialize(std::uint64_t a, std::uint64_t p) const {
        a %= p;
        if (a == 0) throw std::invalid_argument("specialize: point is 0 mod p");
        const std::uint64_t ainv = pow_mod(a, p - 2, p);
        std::uint64_t acc = 0;
        for (const auto& [e, c] : terms_) {
            std::uint64_t pw = e >= 0 ? pow_mod(a, static_cast<std::uint64_t>(e), p)
                                      : pow_mod(ainv, static_cast<std::uint64_t>(-static_cast<long long>(e)), p);
            acc = (acc + mul_mod(coeff_mod(c, p), pw, p)) % p;
        }
        return acc;
    }

    static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    static std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
        std::uint64_t r = 1 % p;
        b %= p;
        while (e) {
            if (e & 1) r = mul_mod(r, b, p);
            b = mul_mod(b, b, p);
            e >>= 1;
        }
        return r;
    }
    static std::uint64_t coeff_mod(const BigInt& c, std::uint64_t p) {
        BigInt m = c % BigInt(p);
        if (m < 0) m += p;
        return static_cast<std::uint64_t>(m);
    }

    // "3*v^-2 + 1 - v^4" style rendering, ascending exponents; deterministic.
    std::string str() const { return render('v', 1); }
    // same, in u = v^2; requires even_only()
    std::string str_u() const {
        if (!even_only()) throw std::logic_error("str_u on odd-exponent polynomial");
        return render('u', 2);
    }

    // [[exponent-of-v, coefficient-as-string], ...] ascending; used by the JSON layer
    std::vector<std::pair<int, std::string>> json_terms() const {
        std::vector<std::pair<int, std::string>> out;
        out.reserve(terms_.size());
        for (const auto& [e, c] : terms_) out.emplace_back(e, c.str());
        return out;
    }

  private:
    std::string render(char var, int div) const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            const int ee = e / div;
            if (ee == 0) {
                out += mag.str();
            } else {
                if (mag != 1) {
                    out += mag.str();
                    out += "*";
                }
                out += var;
                if (ee != 1) {
                    out += "^";
                    out += std::to_string(ee);
                }
            }
        }
        return out;
    }

    std::map<int, BigInt> terms_;
};

}  // namespace invo
