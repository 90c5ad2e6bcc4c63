#pragma once

// Rewriting moves on reduced expressions of involutions (the braid moves for
// the twist product), the move graph per involution, its connectivity check,
// DOT rendering, and the exhaustive case classification for the two local
// configurations (a repeated-letter triple j, j+-1, j and a distant
// commuting pair a, b with |a-b| > 1).

#include <invo/istar.hpp>
#include <invo/perm.hpp>

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace invo {

enum class MoveKind { commutation, long_braid, tail_swap };

inline const char* move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::commutation: return "commutation";
        case MoveKind::long_braid: return "long-braid";
        case MoveKind::tail_swap: return "tail-swap";
    }
    return "?";
}

// All words reachable from a reduced expression by one move:
//   (i)  swap adjacent letters b, c with |b - c| > 1, at any position;
//   (ii) toggle an internal triple j, m, j <-> m, j, m (|j - m| = 1) that is
//        followed by at least one further letter -- a triple at the absolute
//        tail cannot occur in a reduced expression, and the tail position is
//        instead served by (iii);
//   (iii) swap the final two letters when their indices are adjacent.
// Every candidate provably stays reduced with the same evaluation; that is
// re-checked here and a violation throws (it would falsify the rewriting
// system's soundness, not just this input).
inline std::vector<Word> braid_neighbors(int n, const Word& word) {
    if (!is_reduced_istar_expression(n, word))
        throw std::invalid_argument("braid_neighbors: word is not reduced");
    const size_t k = word.size();
    const Perm w = eval_istar(n, word);
    std::set<Word> out;

    auto push = [&](Word cand, MoveKind kind) {
        if (!is_reduced_istar_expression(n, cand) || eval_istar(n, cand) != w)
            throw std::logic_error(std::string("braid move broke invariance (") + move_kind_name(kind) + ")");
        out.insert(std::move(cand));
    };

    for (size_t p = 0; p + 1 < k; ++p) {
        const int b = word[p], c = word[p + 1];
        if (std::abs(b - c) > 1) {
            Word cand = word;
            std::swap(cand[p], cand[p + 1]);
            push(std::move(cand), MoveKind::commutation);
        }
    }
    for (size_t p = 0; p + 3 < k; ++p) {
        const int j = word[p], m = word[p + 1];
        if (word[p + 2] == j && std::abs(j - m) == 1) {
            Word cand = word;
            cand[p] = m;
            cand[p + 1] = j;
            cand[p + 2] = m;
            push(std::move(cand), MoveKind::long_braid);
        }
    }
    if (k >= 2 && std::abs(word[k - 2] - word[k - 1]) == 1) {
        Word cand = word;
        std::swap(cand[k - 2], cand[k - 1]);
        push(std::move(cand), MoveKind::tail_swap);
    }
    return {out.begin(), out.end()};
}

struct BraidEdge {
    size_t a, b;  // vertex indices, a < b
    MoveKind kind;
};

struct BraidGraph {
    int n = 0;
    Perm involution;
    std::vector<Word> vertices;  // lex-sorted reduced expressions
    std::vector<BraidEdge> edges;
};

inline BraidGraph build_braid_graph(const Perm& w) {
    BraidGraph g;
    g.n = static_cast<int>(w.size());
    g.involution = w;
    g.vertices = reduced_istar_expressions(w);
    std::map<Word, size_t> index;
    for (size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = i;
    std::set<std::pair<size_t, size_t>> seen;
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        for (const Word& nb : braid_neighbors(g.n, g.vertices[i])) {
            auto it = index.find(nb);
            if (it == index.end()) throw std::logic_error("braid move left the reduced-expression set");
            const size_t j = it->second;
            if (j == i) continue;
            const auto key = std::minmax(i, j);
            if (!seen.insert(key).second) continue;
            // recover the move kind for the label: letters permuted => swap;
            // adjacent tail letters => tail-swap; otherwise long-braid
            MoveKind kind = MoveKind::long_braid;
            const Word &x = g.vertices[key.first], &y = g.vertices[key.second];
            Word sx = x, sy = y;
            std::sort(sx.begin(), sx.end());
            std::sort(sy.begin(), sy.end());
            if (sx == sy) {
                const size_t k = x.size();
                bool tail = k >= 2 && std::abs(x[k - 2] - x[k - 1]) == 1;
                for (size_t t = 0; tail && t + 2 < k; ++t)
                    if (x[t] != y[t]) tail = false;
                kind = tail ? MoveKind::tail_swap : MoveKind::commutation;
            }
            g.edges.push_back({key.first, key.second, kind});
        }
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const BraidEdge& e, const BraidEdge& f) {
        return std::tie(e.a, e.b) < std::tie(f.a, f.b);
    });
    return g;
}

namespace detail {
inline std::vector<int> bfs_dist(const std::vector<std::vector<size_t>>& adj, size_t start) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<size_t> q;
    dist[start] = 0;
    q.push(start);
    while (!q.empty()) {
        size_t v = q.front();
        q.pop();
        for (size_t u : adj[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push(u);
            }
    }
    return dist;
}
}  // namespace detail

struct BraidReport {
    int n = 0;
    Perm involution;
    size_t vertices = 0;
    size_t edges = 0;
    bool connected = false;
    int diameter = 0;  // exact for graphs up to 4096 vertices, double-sweep estimate above
};

inline BraidReport verify_connectivity(const Perm& w) {
    const BraidGraph g = build_braid_graph(w);
    BraidReport r;
    r.n = g.n;
    r.involution = g.involution;
    r.vertices = g.vertices.size();
    r.edges = g.edges.size();

    std::vector<std::vector<size_t>> adj(g.vertices.size());
    for (const BraidEdge& e : g.edges) {
        adj[e.a].push_back(e.b);
        adj[e.b].push_back(e.a);
    }
    const auto d0 = detail::bfs_dist(adj, 0);
    r.connected = std::find(d0.begin(), d0.end(), -1) == d0.end();
    if (!r.connected) {
        r.diameter = -1;
        return r;
    }
    if (g.vertices.size() <= 4096) {
        int diam = 0;
        for (size_t v = 0; v < adj.size(); ++v) {
            const auto d = detail::bfs_dist(adj, v);
            diam = std::max(diam, *std::max_element(d.begin(), d.end()));
        }
        r.diameter = diam;
    } else {
        // double sweep: eccentricity lower bound, exact on trees
        const size_t far = static_cast<size_t>(std::max_element(d0.begin(), d0.end()) - d0.begin());
        const auto d1 = detail::bfs_dist(adj, far);
        r.diameter = *std::max_element(d1.begin(), d1.end());
    }
    return r;
}

inline std::string braid_vertex_name(const Word& word) {
    return word.empty() ? std::string("e") : word_to_string(word);
}

inline std::string braid_graph_dot(const Perm& w) {
    const BraidGraph g = build_braid_graph(w);
    std::string out = "graph braid_moves {\n";
    out += "  label=\"n=" + std::to_string(g.n) + " w=" + perm_to_string(g.involution) + "\";\n";
    for (const Word& v : g.vertices) out += "  \"" + braid_vertex_name(v) + "\";\n";
    for (const BraidEdge& e : g.edges)
        out += "  \"" + braid_vertex_name(g.vertices[e.a]) + "\" -- \"" + braid_vertex_name(g.vertices[e.b]) +
               "\" [label=\"" + move_kind_name(e.kind) + "\"];\n";
    out += "}\n";
    return out;
}

// --- local case classification --------------------------------------------
//
// For a triple (j, m, j) with |j - m| = 1 applied on top of a base involution
// w (the trailing part of a longer reduced expression), the three twist steps
// of the triple and of its braided partner (m, j, m) each either commute with
// the current involution or not.  Exactly one of three type patterns can
// occur.  Similarly for a distant pair (a, b), |a - b| > 1, with four cases.

inline bool gen_commutes(int s, const Perm& w) { return mul_gen_left(w, s) == mul_gen_right(w, s); }

struct CaseReport {
    char pattern;  // 'T' = repeated triple, 'P' = distant pair
    char label;    // 'a'.. within the pattern
};

// case of (s_j, s_m, s_j, w), |j - m| = 1, the sequence being reduced
inline char classify_triple_case(int j, int m, const Perm& w) {
    if (std::abs(j - m) != 1) throw std::invalid_argument("triple letters must be adjacent indices");
    if (!is_reduced_sequence({j, m, j}, w)) throw std::invalid_argument("triple sequence not reduced");
    auto chain = [&](int x, int y) {
        Perm v = w;
        bool c1 = gen_commutes(x, v);
        v = twist(x, v);
        bool c2 = gen_commutes(y, v);
        v = twist(y, v);
        bool c3 = gen_commutes(x, v);
        return std::array<bool, 3>{c1, c2, c3};
    };
    const auto jc = chain(j, m);  // steps j, m, j on w
    const auto mc = chain(m, j);  // steps m, j, m on w
    const std::array<bool, 3> NNN{false, false, false}, NNC{false, false, true}, CNN{true, false, false};
    int matches = 0;
    char label = 0;
    if (jc == NNN && mc == NNN) { ++matches; label = 'a'; }
    if (jc == NNC && mc == CNN) { ++matches; label = 'b'; }
    if (jc == CNN && mc == NNC) { ++matches; label = 'c'; }
    if (matches != 1) throw std::logic_error("triple configuration matched none or several cases");
    return label;
}

// case of (s_a, s_b, w), |a - b| > 1, the sequence being reduced
inline char classify_pair_case(int a, int b, const Perm& w) {
    if (std::abs(a - b) <= 1) throw std::invalid_argument("pair letters must be distant indices");
    if (!is_reduced_sequence({a, b}, w)) throw std::invalid_argument("pair sequence not reduced");
    auto chain = [&](int x, int y) {
        Perm v = w;
        bool c1 = gen_commutes(x, v);
        v = twist(x, v);
        bool c2 = gen_commutes(y, v);
        return std::array<bool, 2>{c1, c2};
    };
    const auto ac = chain(a, b);  // steps a then b on w -- the word (b, a)
    const auto bc = chain(b, a);  // steps b then a on w -- the word (a, b)
    const std::array<bool, 2> NN{false, false}, CN{true, false}, NC{false, true}, CC{true, true};
    int matches = 0;
    char label = 0;
    if (ac == NN && bc == NN) { ++matches; label = 'a'; }
    if (ac == CN && bc == NC) { ++matches; label = 'b'; }
    if (ac == NC && bc == CN) { ++matches; label = 'c'; }
    if (ac == CC && bc == CC) { ++matches; label = 'd'; }
    if (matches != 1) throw std::logic_error("pair configuration matched none or several cases");
    return label;
}

// Dispatch on the leading letters of a reduced expression: a triple
// (j, m, j) or a distant pair (a, b) at the front, classified against the
// base involution evaluated from the rest of the word.
inline CaseReport check_case_trichotomy(int n, const Word& word) {
    if (!is_reduced_istar_expression(n, word))
        throw std::invalid_argument("check_case_trichotomy: word is not reduced");
    if (word.size() >= 3 && word[0] == word[2] && std::abs(word[0] - word[1]) == 1) {
        const Perm base = eval_istar(n, Word(word.begin() + 3, word.end()));
        return {'T', classify_triple_case(word[0], word[1], base)};
    }
    if (word.size() >= 2 && std::abs(word[0] - word[1]) > 1) {
        const Perm base = eval_istar(n, Word(word.begin() + 2, word.end()));
        return {'P', classify_pair_case(word[0], word[1], base)};
    }
    throw std::invalid_argument("check_case_trichotomy: leading letters match no pattern");
}

}  // namespace invo
