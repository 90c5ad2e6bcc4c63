#include <catch2/catch_amalgamated.hpp>

#include <invo/istar.hpp>

#include <map>
#include <queue>
#include <set>

using namespace invo;

namespace {

// oracle: first-reach depth of the (*)-action graph from the identity
std::map<Perm, int> rho_bfs(int n) {
    std::map<Perm, int> depth;
    std::queue<Perm> q;
    depth[identity_perm(n)] = 0;
    q.push(identity_perm(n));
    while (!q.empty()) {
        Perm w = q.front();
        q.pop();
        for (int s = 1; s < n; ++s) {
            Perm v = twist(s, w);
            if (!depth.count(v)) {
                depth[v] = depth[w] + 1;
                q.push(v);
            }
        }
    }
    return depth;
}

// oracle: involution numbers via the recurrence I(n) = I(n-1) + (n-1) I(n-2)
long long involution_number(int n) {
    long long a = 1, b = 1;  // I(0), I(1)
    if (n <= 1) return 1;
    for (int k = 2; k <= n; ++k) {
        long long c = b + (k - 1) * a;
        a = b;
        b = c;
    }
    return b;
}

}  // namespace

TEST_CASE("twist basics") {
    const int n = 4;
    const Perm id = identity_perm(n);
    const Perm s2 = gen_perm(2, n);

    for (int s = 1; s < n; ++s) {
        CHECK(twist(s, id) == gen_perm(s, n));
        CHECK(twist(s, gen_perm(s, n)) == id);
    }
    // one bracketing of (1,2,1) on s2 collapses to the identity, the other
    // reaches the long element of the parabolic on {s1,s2}
    CHECK(twist(1, twist(2, twist(1, s2))) == id);
    CHECK(twist(2, twist(1, twist(2, s2))) == Perm{3, 2, 1, 4});
}

TEST_CASE("twist is an involution on involutions") {
    for (int n = 1; n <= 7; ++n)
        for (const Perm& w : enumerate_involutions(n))
            for (int s = 1; s < n; ++s) {
                const Perm v = twist(s, w);
                REQUIRE(is_involution(v));
                REQUIRE(twist(s, v) == w);
            }
}

TEST_CASE("twist_word folds right to left") {
    const Perm id3 = identity_perm(3);
    CHECK(twist_word({}, Perm{3, 2, 1}) == Perm{3, 2, 1});
    CHECK(twist_word({1, 2}, id3) == Perm{3, 2, 1});
    for (const Perm& w : enumerate_involutions(4))
        for (int s = 1; s < 4; ++s) REQUIRE(twist_word({s, s}, w) == w);
}

TEST_CASE("rho matches the BFS oracle and the closed form") {
    CHECK(rho(identity_perm(5)) == 0);
    for (int s = 1; s < 5; ++s) CHECK(rho(gen_perm(s, 5)) == 1);
    CHECK(rho(Perm{3, 2, 1}) == 2);

    for (int n = 1; n <= 6; ++n) {
        auto oracle = rho_bfs(n);
        auto invs = enumerate_involutions(n);
        REQUIRE(oracle.size() == invs.size());  // the action reaches every involution
        for (const Perm& w : invs) {
            REQUIRE(rho(w) == oracle.at(w));
            REQUIRE(2 * rho(w) == length(w) + two_cycle_count(w));
        }
    }
}

TEST_CASE("rank steps by one and drops exactly on descents") {
    for (int n = 2; n <= 6; ++n)
        for (const Perm& w : enumerate_involutions(n))
            for (int s = 1; s < n; ++s) {
                const int d = rho(twist(s, w)) - rho(w);
                REQUIRE((d == 1 || d == -1));
                REQUIRE((d == -1) == (length(mul_gen_left(w, s)) == length(w) - 1));
            }
}

TEST_CASE("non-commuting generators move length by two") {
    for (int n = 2; n <= 6; ++n)
        for (const Perm& w : enumerate_involutions(n))
            for (int s = 1; s < n; ++s) {
                const Perm sw = mul_gen_left(w, s);
                if (sw == mul_gen_right(w, s)) continue;
                const bool up_l = length(sw) == length(w) + 1;
                const bool up_r = length(mul_gen_right(w, s)) == length(w) + 1;
                const bool up_t = length(twist(s, w)) == length(w) + 2;
                REQUIRE(up_l == up_r);
                REQUIRE(up_l == up_t);
            }
}

TEST_CASE("involution enumeration: counts and canonical order") {
    CHECK(enumerate_involutions(1) == std::vector<Perm>{identity_perm(1)});
    CHECK(enumerate_involutions(3).size() == 4);
    CHECK(enumerate_involutions(6).size() == 76);

    for (int n = 1; n <= 7; ++n) {
        auto invs = enumerate_involutions(n);
        // brute force oracle
        size_t brute = 0;
        for (const Perm& p : all_perms(n))
            if (is_involution(p)) ++brute;
        REQUIRE(invs.size() == brute);
        REQUIRE(static_cast<long long>(invs.size()) == involution_number(n));
        for (size_t i = 1; i < invs.size(); ++i) {
            const int ra = rho(invs[i - 1]), rb = rho(invs[i]);
            REQUIRE((ra < rb || (ra == rb && invs[i - 1] < invs[i])));
        }
    }
}

TEST_CASE("reduced expression sets") {
    CHECK(reduced_istar_expressions(identity_perm(3)) == std::vector<Word>{{}});
    CHECK(reduced_istar_expressions(gen_perm(1, 3)) == std::vector<Word>{{1}});
    CHECK(reduced_istar_expressions(Perm{3, 2, 1}) == std::vector<Word>{{1, 2}, {2, 1}});

    for (int n = 1; n <= 6; ++n)
        for (const Perm& w : enumerate_involutions(n)) {
            const auto exprs = reduced_istar_expressions(w);
            REQUIRE(!exprs.empty());
            REQUIRE(std::is_sorted(exprs.begin(), exprs.end()));
            REQUIRE(exprs.front() == canonical_istar_expression(w));
            const int r = rho(w);
            for (const Word& e : exprs) {
                REQUIRE(static_cast<int>(e.size()) == r);
                REQUIRE(eval_istar(n, e) == w);
                REQUIRE(is_reduced_istar_expression(n, e));
            }
        }

    Perm big = identity_perm(9);
    CHECK_THROWS_AS(reduced_istar_expressions(big), std::invalid_argument);
    CHECK_THROWS_AS(reduced_istar_expressions(Perm{2, 3, 1}), std::invalid_argument);
}

TEST_CASE("reduced sequences") {
    const Perm s2 = gen_perm(2, 3);
    CHECK(is_reduced_sequence({}, Perm{3, 2, 1}));
    CHECK_FALSE(is_reduced_sequence({1}, gen_perm(1, 3)));
    CHECK(is_reduced_sequence({1}, s2));
    CHECK(rho(twist(1, s2)) == 2);
}

TEST_CASE("exchange property") {
    CHECK(exchange_index(2, 1, {1}) == 1);

    // deleting from (1,2) / (2,1) to reach s (*) [3,2,1]
    {
        const int a = exchange_index(3, 2, {1, 2});
        REQUIRE(a != 0);
        Word del = (a == 1) ? Word{2} : Word{1};
        CHECK(eval_istar(3, del) == twist(2, Perm{3, 2, 1}));
    }
    {
        const int a = exchange_index(3, 1, {2, 1});
        REQUIRE(a != 0);
        Word del = (a == 1) ? Word{1} : Word{2};
        CHECK(eval_istar(3, del) == twist(1, Perm{3, 2, 1}));
    }

    // never fails for any reduced word and rank-lowering generator, n <= 5
    for (int n = 2; n <= 5; ++n)
        for (const Perm& w : enumerate_involutions(n))
            for (const Word& e : reduced_istar_expressions(w))
                for (int s = 1; s < n; ++s) {
                    if (rho(twist(s, w)) != rho(w) - 1) continue;
                    const int a = exchange_index(n, s, e);
                    REQUIRE(a >= 1);
                    REQUIRE(a <= static_cast<int>(e.size()));
                    Word del;
                    for (size_t t = 0; t < e.size(); ++t)
                        if (t != static_cast<size_t>(a - 1)) del.push_back(e[t]);
                    REQUIRE(eval_istar(n, del) == twist(s, w));
                    REQUIRE(is_reduced_istar_expression(n, del));
                }
}
