#pragma once

#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "huffcensus/rational.hpp"
#include "huffcensus/representations.hpp"

namespace huffcensus {

// c_n = number of bounded degree sequences with sum n (c_0 = 1, the single
// leaf). DP over (partial sum s, last value b); a transition to next value v
// is allowed when v <= t*b, so summing over predecessors reduces to a suffix
// sum over b >= ceil(v/t). This keeps the whole row at O(n^2) big-integer
// additions.
inline std::vector<BigCount> count_trees_row(int t, long long n_max) {
    if (t < 2) throw std::invalid_argument("count_trees_row: t must be >= 2");
    if (n_max < 0) throw std::invalid_argument("count_trees_row: negative n_max");
    std::vector<BigCount> row(static_cast<std::size_t>(n_max) + 1, BigCount(0));
    row[0] = 1;
    if (n_max == 0) return row;
    auto n = static_cast<std::size_t>(n_max);
    // ways[s][b], 1 <= b <= s <= n
    std::vector<std::vector<BigCount>> ways(n + 1);
    for (std::size_t s = 0; s <= n; ++s) ways[s].assign(s + 1, BigCount(0));
    ways[1][1] = 1;
    std::vector<BigCount> suffix(n + 2);
    for (std::size_t s = 1; s <= n; ++s) {
        for (std::size_t b = 1; b <= s; ++b) row[s] += ways[s][b];
        if (s == n) break;
        suffix[s + 1] = 0;
        for (std::size_t b = s; b >= 1; --b) suffix[b] = suffix[b + 1] + ways[s][b];
        for (std::size_t v = 1; v + s <= n; ++v) {
            std::size_t lo = (v + static_cast<std::size_t>(t) - 1) / static_cast<std::size_t>(t);
            if (lo <= s) ways[s + v][v] += suffix[lo];
        }
    }
    return row;
}

inline BigCount count_trees(int t, long long n) {
    if (n < 0) return 0;
    return count_trees_row(t, n).back();
}

// f_t(r): zero unless r = 1 + n(t-1).
inline BigCount count_codes(int t, long long r) {
    if (t < 2) throw std::invalid_argument("count_codes: t must be >= 2");
    if (r < 1) return 0;
    if ((r - 1) % (t - 1) != 0) return 0;
    return count_trees(t, (r - 1) / (t - 1));
}

// Emits every bounded degree sequence with sum n in lexicographic order; the
// callback returns false to stop early. n = 0 yields the empty sequence (the
// trivial class).
inline bool enumerate_degree_sequences(int t, long long n,
                                       const std::function<bool(const std::vector<long long>&)>& emit) {
    if (t < 2) throw std::invalid_argument("enumerate_degree_sequences: t must be >= 2");
    if (n < 0) return true;
    std::vector<long long> b;
    if (n == 0) return emit(b);
    std::function<bool(long long)> dfs = [&](long long remaining) -> bool {
        if (remaining == 0) return emit(b);
        long long cap = t * b.back();
        if (cap > remaining) cap = remaining;
        for (long long v = 1; v <= cap; ++v) {
            b.push_back(v);
            bool keep = dfs(remaining - v);
            b.pop_back();
            if (!keep) return false;
        }
        return true;
    };
    b.push_back(1);
    return dfs(n - 1);
}

// Streams every class with r leaves as the requested representation, in
// lexicographic order of the bounded degree sequence. Infeasible r gives an
// empty stream. Asking for the proper word of the trivial class throws.
inline bool enumerate_classes(int t, long long r, RepKind kind,
                              const std::function<bool(const Representation&)>& emit) {
    if (t < 2) throw std::invalid_argument("enumerate_classes: t must be >= 2");
    if (r < 1 || (r - 1) % (t - 1) != 0) return true;
    long long n = (r - 1) / (t - 1);
    return enumerate_degree_sequences(t, n, [&](const std::vector<long long>& b) {
        return emit(from_degrees(BoundedDegreeSequence{t, b}, kind));
    });
}

// One step of the incremental generator: split each member of S_t(r-t+1) at
// its last two positions only, i.e.
//     (.., a_{l-1}, a_l)  ->  (.., a_{l-1}, a_l - 1, t)          and
//     (.., a_{l-1}, a_l)  ->  (.., a_{l-1} - 1, a_l + t)         if a_{l-1} > 0.
// Given the complete set for r-t+1 leaves this yields the complete set for r
// leaves (an incomplete input set is not detected).
inline std::set<HuffmanSequence> branch_step(int t, const std::set<HuffmanSequence>& input) {
    std::set<HuffmanSequence> out;
    for (const auto& h : input) {
        if (h.t != t) throw std::invalid_argument("branch_step: mixed alphabet sizes");
        if (h.a.empty()) throw std::invalid_argument("branch_step: empty sequence");
        std::size_t l = h.a.size() - 1;
        {
            HuffmanSequence s = h;  // split at position l, one level deeper
            --s.a[l];
            s.a.push_back(t);
            out.insert(std::move(s));
        }
        if (l >= 1 && h.a[l - 1] > 0) {
            HuffmanSequence s = h;  // split at position l-1
            --s.a[l - 1];
            s.a[l] += t;
            out.insert(std::move(s));
        }
    }
    return out;
}

struct CountTable {
    int t_min = 2;
    int t_max = 2;
    long long n_max = 0;
    std::vector<std::vector<BigCount>> rows;  // rows[t - t_min][n]

    const BigCount& entry(int t, long long n) const {
        if (t < t_min || t > t_max || n < 0 || n > n_max)
            throw std::out_of_range("CountTable::entry");
        return rows[static_cast<std::size_t>(t - t_min)][static_cast<std::size_t>(n)];
    }
};

inline CountTable build_table(int t_min, int t_max, long long n_max) {
    if (t_min < 2 || t_min > t_max) throw std::invalid_argument("build_table: bad t range");
    if (n_max < 0) throw std::invalid_argument("build_table: negative n_max");
    CountTable table{t_min, t_max, n_max, {}};
    table.rows.reserve(static_cast<std::size_t>(t_max - t_min) + 1);
    for (int t = t_min; t <= t_max; ++t) table.rows.push_back(count_trees_row(t, n_max));
    return table;
}

}  // namespace huffcensus
