// Test-side oracles, independent of the library's implementation paths:
// reachability over raw cover lists, brute-force bounds, a general up-set
// filter enumerator, and a naive all-relations poset enumerator used to
// pin the exhaustive lattice counts.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lattle/corpus.hpp"
#include "lattle/filters.hpp"
#include "lattle/lattice.hpp"

namespace oracle {

using lattle::Element;
using lattle::ElementSet;
using lattle::Lattice;

// Reflexive reachability over the spec's cover list (plain DFS, no bitset
// closure shared with the library).
inline bool reachable(const lattle::LatticeSpec& spec, const std::string& from,
                      const std::string& to) {
    if (from == to) return true;
    std::vector<std::string> stack{from};
    std::set<std::string> seen{from};
    while (!stack.empty()) {
        std::string cur = stack.back();
        stack.pop_back();
        for (const auto& [lo, hi] : spec.covers) {
            if (lo != cur || seen.count(hi)) continue;
            if (hi == to) return true;
            seen.insert(hi);
            stack.push_back(hi);
        }
    }
    return false;
}

// Greatest lower bound by scanning all elements; nullopt when not unique.
inline std::optional<Element> glb(const Lattice& L, Element x, Element y) {
    std::vector<Element> lowers;
    for (Element z = 0; z < L.size(); ++z)
        if (L.leq(z, x) && L.leq(z, y)) lowers.push_back(z);
    for (Element candidate : lowers) {
        bool greatest = true;
        for (Element z : lowers)
            if (!L.leq(z, candidate)) greatest = false;
        if (greatest) return candidate;
    }
    return std::nullopt;
}

inline std::optional<Element> lub(const Lattice& L, Element x, Element y) {
    std::vector<Element> uppers;
    for (Element z = 0; z < L.size(); ++z)
        if (L.leq(x, z) && L.leq(y, z)) uppers.push_back(z);
    for (Element candidate : uppers) {
        bool least = true;
        for (Element z : uppers)
            if (!L.leq(candidate, z)) least = false;
        if (least) return candidate;
    }
    return std::nullopt;
}

inline ElementSet maximal_of(const Lattice& L, ElementSet a) {
    ElementSet out;
    for (Element x : a) {
        bool is_max = true;
        for (Element y : a)
            if (y != x && L.leq(x, y)) is_max = false;
        if (is_max) out.add(x);
    }
    return out;
}

// All filters as arbitrary subsets: nonempty, meet-closed, upward closed.
// Exponential; fine for the corpus sizes.
inline std::vector<ElementSet> all_filter_sets(const Lattice& L) {
    std::vector<ElementSet> out;
    const std::uint64_t limit = std::uint64_t{1} << L.size();
    for (std::uint64_t m = 1; m < limit; ++m) {
        ElementSet s = ElementSet::of_mask(m);
        bool ok = true;
        for (Element x : s) {
            if (!L.up_set(x).subset_of(s)) ok = false;
            for (Element y : s)
                if (!s.contains(L.meet(x, y))) ok = false;
            if (!ok) break;
        }
        if (ok) out.push_back(s);
    }
    return out;
}

// Every strict partial order on m labeled points, as upper-triangle-free
// relation matrices; naive filter over all 3^(m(m-1)/2) pair states.
inline std::vector<std::vector<std::uint64_t>> all_strict_orders(int m) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<int> state(pairs.size(), 0);  // 0 incomparable, 1 lt, 2 gt
    while (true) {
        std::vector<std::uint64_t> lt(size_t(std::max(m, 1)), 0);
        for (size_t k = 0; k < pairs.size(); ++k) {
            auto [i, j] = pairs[k];
            if (state[k] == 1) lt[size_t(i)] |= std::uint64_t{1} << j;
            if (state[k] == 2) lt[size_t(j)] |= std::uint64_t{1} << i;
        }
        bool transitive = true;
        for (int a = 0; a < m && transitive; ++a)
            for (int b = 0; b < m && transitive; ++b) {
                if (!((lt[size_t(a)] >> b) & 1)) continue;
                for (int c = 0; c < m; ++c)
                    if (((lt[size_t(b)] >> c) & 1) && !((lt[size_t(a)] >> c) & 1))
                        transitive = false;
            }
        if (transitive) out.push_back(lt);
        size_t k = 0;
        for (; k < pairs.size(); ++k) {
            if (++state[k] < 3) break;
            state[k] = 0;
        }
        if (k == pairs.size()) break;
    }
    return out;
}

// Bounded extension of a strict order on the middles is a lattice?
inline bool bounded_extension_is_lattice(int m, const std::vector<std::uint64_t>& lt) {
    const int n = m + 2;
    std::vector<std::uint64_t> up(size_t(n), 0), down(size_t(n), 0);
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    up[0] = all;
    for (int i = 0; i < m; ++i) {
        std::uint64_t u = (std::uint64_t{1} << (i + 1)) | (std::uint64_t{1} << (n - 1));
        for (int j = 0; j < m; ++j)
            if ((lt[size_t(i)] >> j) & 1) u |= std::uint64_t{1} << (j + 1);
        up[size_t(i + 1)] = u;
    }
    up[size_t(n - 1)] = std::uint64_t{1} << (n - 1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if ((up[size_t(x)] >> y) & 1) down[size_t(y)] |= std::uint64_t{1} << x;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            for (int dir = 0; dir < 2; ++dir) {
                std::uint64_t bounds = dir ? (down[size_t(x)] & down[size_t(y)])
                                           : (up[size_t(x)] & up[size_t(y)]);
                int extremal = 0;
                for (int z = 0; z < n; ++z) {
                    if (!((bounds >> z) & 1)) continue;
                    std::uint64_t tighter = dir ? (bounds & up[size_t(z)]) : (bounds & down[size_t(z)]);
                    if (tighter == (std::uint64_t{1} << z)) ++extremal;
                }
                if (extremal != 1) return false;
            }
        }
    return true;
}

}  // namespace oracle
