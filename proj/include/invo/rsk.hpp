#pragma once

// Partitions, standard Young tableaux, and row-insertion: enough machinery to
// check that the number of involutions in S_n equals the total number of
// standard tableaux with n cells, and that insertion restricted to
// involutions produces equal tableau pairs.

#include <invo/istar.hpp>
#include <invo/perm.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace invo {

using Partition = std::vector<int>;  // weakly decreasing, all parts >= 1

inline bool is_valid_partition(const Partition& lam) {
    for (size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] < 1) return false;
        if (i > 0 && lam[i] > lam[i - 1]) return false;
    }
    return true;
}

inline int partition_weight(const Partition& lam) { return std::accumulate(lam.begin(), lam.end(), 0); }

// all partitions of n, largest part first, in descending lexicographic order
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline Partition conjugate(const Partition& lam) {
    if (!is_valid_partition(lam)) throw std::invalid_argument("conjugate: not a partition");
    Partition out(lam.empty() ? 0 : lam[0], 0);
    for (int part : lam)
        for (int j = 0; j < part; ++j) ++out[j];
    return out;
}

struct StandardTableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const {
        Partition s;
        s.reserve(rows.size());
        for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
        return s;
    }

    int cells() const {
        int c = 0;
        for (const auto& r : rows) c += static_cast<int>(r.size());
        return c;
    }

    // entries exactly 1..n, strictly increasing along rows and down columns
    bool is_standard() const {
        if (!is_valid_partition(shape())) return false;
        const int n = cells();
        std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < rows[i].size(); ++j) {
                const int e = rows[i][j];
                if (e < 1 || e > n || seen[e]) return false;
                seen[e] = true;
                if (j > 0 && rows[i][j - 1] >= e) return false;
                if (i > 0 && rows[i - 1][j] >= e) return false;
            }
        return true;
    }

    bool operator==(const StandardTableau& o) const { return rows == o.rows; }
    bool operator!=(const StandardTableau& o) const { return rows != o.rows; }
    bool operator<(const StandardTableau& o) const { return rows < o.rows; }
};

// aligned text grid, one row per line
inline std::string tableau_to_text(const StandardTableau& t) {
    size_t width = 1;
    for (const auto& r : t.rows)
        for (int e : r) width = std::max(width, std::to_string(e).size());
    std::string out;
    for (const auto& r : t.rows) {
        for (size_t j = 0; j < r.size(); ++j) {
            std::string cell = std::to_string(r[j]);
            if (j) out += ' ';
            out += std::string(width - cell.size(), ' ') + cell;
        }
        out += '\n';
    }
    return out;
}

// Row insertion: the inserted value bumps the smallest entry greater than it;
// the recording tableau tracks which cell each position created.
inline std::pair<StandardTableau, StandardTableau> rsk_insert(const Perm& w) {
    if (!is_valid_perm(w)) throw std::invalid_argument("rsk_insert: not a permutation");
    StandardTableau p, q;
    for (int k = 1; k <= static_cast<int>(w.size()); ++k) {
        int x = w[static_cast<size_t>(k) - 1];
        size_t row = 0;
        for (;;) {
            if (row == p.rows.size()) {
                p.rows.push_back({x});
                q.rows.push_back({k});
                break;
            }
            auto& r = p.rows[row];
            auto it = std::upper_bound(r.begin(), r.end(), x);
            if (it == r.end()) {
                r.push_back(x);
                q.rows[row].push_back(k);
                break;
            }
            std::swap(*it, x);
            ++row;
        }
    }
    return {std::move(p), std::move(q)};
}

// number of standard tableaux of the given shape, by generating every filling
inline long long std_count(const Partition& lam) {
    if (!is_valid_partition(lam)) throw std::invalid_argument("std_count: not a partition");
    const int n = partition_weight(lam);
    std::vector<int> cur(lam.size(), 0);  // filled prefix of each row
    long long count = 0;
    auto rec = [&](auto&& self, int k) -> void {
        if (k > n) {
            ++count;
            return;
        }
        for (size_t r = 0; r < lam.size(); ++r) {
            if (cur[r] >= lam[r]) continue;
            if (r > 0 && cur[r] >= cur[r - 1]) continue;  // column would break
            ++cur[r];
            self(self, k + 1);
            --cur[r];
        }
    };
    rec(rec, 1);
    return count;
}

struct CountIdentity {
    long long lhs = 0;  // sum of std_count over all partitions of n
    long long rhs = 0;  // number of involutions, by direct enumeration
    bool equal = false;
};

inline CountIdentity involution_count_identity(int n) {
    CountIdentity r;
    for (const Partition& lam : partitions_of(n)) r.lhs += std_count(lam);
    r.rhs = static_cast<long long>(enumerate_involutions(n).size());
    r.equal = r.lhs == r.rhs;
    return r;
}

}  // namespace invo
