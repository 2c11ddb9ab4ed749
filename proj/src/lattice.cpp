#include "lattle/lattice.hpp"

#include <algorithm>
#include <unordered_map>

namespace lattle {

namespace {

// Unique maximal element of `s` w.r.t. the given strict-up masks, or -1
// if `s` has zero or several maximal elements.
Element unique_max(ElementSet s, const std::vector<ElementSet>& up) {
    Element found = -1;
    for (Element x : s) {
        if (((up[size_t(x)] & s) - ElementSet::single(x)).empty()) {
            if (found >= 0) return -1;
            found = x;
        }
    }
    return found;
}

Element unique_min(ElementSet s, const std::vector<ElementSet>& down) {
    Element found = -1;
    for (Element x : s) {
        if (((down[size_t(x)] & s) - ElementSet::single(x)).empty()) {
            if (found >= 0) return -1;
            found = x;
        }
    }
    return found;
}

}  // namespace

Lattice Lattice::build(const LatticeSpec& spec) {
    const int n = int(spec.elements.size());
    if (n == 0) throw BuildError(BuildError::Kind::NoBottom, "empty element list");
    if (n == 1)
        throw BuildError(BuildError::Kind::Degenerate,
                         "one-element lattice (0 = 1) is not admitted");
    if (n > 64)
        throw BuildError(BuildError::Kind::TooLarge,
                         "element count exceeds the supported maximum of 64");

    std::unordered_map<std::string_view, Element> index;
    for (int i = 0; i < n; ++i) {
        auto [it, fresh] = index.emplace(spec.elements[size_t(i)], i);
        if (!fresh)
            throw BuildError(BuildError::Kind::DuplicateLabel,
                             "duplicate element label '" + spec.elements[size_t(i)] + "'");
    }

    std::vector<ElementSet> succ(static_cast<size_t>(n));  // direct covers above
    for (const auto& [lo, hi] : spec.covers) {
        auto li = index.find(lo);
        auto hi_it = index.find(hi);
        if (li == index.end())
            throw BuildError(BuildError::Kind::UnknownLabel,
                             "cover references unknown label '" + lo + "'");
        if (hi_it == index.end())
            throw BuildError(BuildError::Kind::UnknownLabel,
                             "cover references unknown label '" + hi + "'");
        if (li->second == hi_it->second)
            throw BuildError(BuildError::Kind::CycleDetected,
                             "cover pair ('" + lo + "', '" + hi + "') relates an element to itself");
        succ[size_t(li->second)].add(hi_it->second);
    }

    // Reflexive-transitive closure by fixpoint; masks only grow, so this
    // terminates even on cyclic input, and antisymmetry is checked after.
    std::vector<ElementSet> up(static_cast<size_t>(n));
    for (Element x = 0; x < n; ++x) up[size_t(x)] = ElementSet::single(x) | succ[size_t(x)];
    for (bool changed = true; changed;) {
        changed = false;
        for (Element x = 0; x < n; ++x) {
            ElementSet acc = up[size_t(x)];
            for (Element y : succ[size_t(x)]) acc = acc | up[size_t(y)];
            if (acc != up[size_t(x)]) {
                up[size_t(x)] = acc;
                changed = true;
            }
        }
    }
    for (Element x = 0; x < n; ++x)
        for (Element y : up[size_t(x)])
            if (y != x && up[size_t(y)].contains(x))
                throw BuildError(BuildError::Kind::CycleDetected,
                                 "cover relation contains a cycle through '" +
                                     spec.elements[size_t(x)] + "'");

    std::vector<ElementSet> down(static_cast<size_t>(n));
    for (Element x = 0; x < n; ++x)
        for (Element y : up[size_t(x)]) down[size_t(y)].add(x);

    const ElementSet all = ElementSet::full(n);
    Element bottom = -1, top = -1;
    for (Element x = 0; x < n; ++x) {
        if (up[size_t(x)] == all) bottom = x;
        if (down[size_t(x)] == all) top = x;
    }
    if (bottom < 0)
        throw BuildError(BuildError::Kind::NoBottom, "no least element");
    if (top < 0)
        throw BuildError(BuildError::Kind::NoTop, "no greatest element");

    std::vector<std::array<std::uint8_t, 2>> table(size_t(n) * size_t(n));
    for (Element x = 0; x < n; ++x) {
        for (Element y = x; y < n; ++y) {
            Element m = unique_max(down[size_t(x)] & down[size_t(y)], up);
            if (m < 0)
                throw BuildError(BuildError::Kind::NotALattice,
                                 "not a lattice: elements '" + spec.elements[size_t(x)] +
                                     "' and '" + spec.elements[size_t(y)] + "' have no unique meet");
            Element j = unique_min(up[size_t(x)] & up[size_t(y)], down);
            if (j < 0)
                throw BuildError(BuildError::Kind::NotALattice,
                                 "not a lattice: elements '" + spec.elements[size_t(x)] +
                                     "' and '" + spec.elements[size_t(y)] + "' have no unique join");
            table[size_t(x) * size_t(n) + size_t(y)] = {std::uint8_t(m), std::uint8_t(j)};
            table[size_t(y) * size_t(n) + size_t(x)] = {std::uint8_t(m), std::uint8_t(j)};
        }
    }

    Lattice L;
    L.n_ = n;
    L.bottom_ = bottom;
    L.top_ = top;
    L.spec_ = spec;
    L.up_ = std::move(up);
    L.down_ = std::move(down);
    L.table_ = std::move(table);
    return L;
}

std::optional<Element> Lattice::find(std::string_view label) const {
    for (int i = 0; i < n_; ++i)
        if (spec_.elements[size_t(i)] == label) return i;
    return std::nullopt;
}

std::vector<std::pair<Element, Element>> Lattice::cover_pairs() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element x = 0; x < n_; ++x) {
        for (Element y : up_[size_t(x)]) {
            if (y == x) continue;
            // y covers x iff nothing sits strictly between.
            ElementSet between = (up_[size_t(x)] & down_[size_t(y)]) -
                                 (ElementSet::single(x) | ElementSet::single(y));
            if (between.empty()) out.emplace_back(x, y);
        }
    }
    return out;
}

ElementSet set_join(const Lattice& L, ElementSet a, ElementSet b) {
    ElementSet out;
    for (Element x : a)
        for (Element y : b) out.add(L.join(x, y));
    return out;
}

ElementSet set_meet(const Lattice& L, ElementSet a, ElementSet b) {
    ElementSet out;
    for (Element x : a)
        for (Element y : b) out.add(L.meet(x, y));
    return out;
}

ElementSet max_elements(const Lattice& L, ElementSet a) {
    ElementSet out;
    for (Element x : a)
        if (((L.up_set(x) & a) - ElementSet::single(x)).empty()) out.add(x);
    return out;
}

bool is_antichain(const Lattice& L, ElementSet a) {
    for (Element x : a)
        if ((L.up_set(x) & a) != ElementSet::single(x)) return false;
    return true;
}

bool rel_leq_sets(const Lattice& L, ElementSet a, ElementSet b) {
    for (Element x : a)
        if (!b.subset_of(L.up_set(x))) return false;
    return true;
}

bool rel_leq1(const Lattice& L, ElementSet a, ElementSet b) {
    for (Element x : a)
        if ((L.up_set(x) & b).empty()) return false;
    return true;
}

bool rel_leq2(const Lattice& L, ElementSet a, ElementSet b) {
    for (Element y : b)
        if ((L.down_set(y) & a).empty()) return false;
    return true;
}

bool rel_eq1(const Lattice& L, ElementSet a, ElementSet b) {
    return rel_leq1(L, a, b) && rel_leq1(L, b, a);
}

}  // namespace lattle
