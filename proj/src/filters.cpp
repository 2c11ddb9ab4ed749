#include "lattle/filters.hpp"

namespace lattle {

Filter principal_filter(const Lattice& L, Element x) {
    return Filter{L.up_set(x), x};
}

std::vector<Filter> all_filters(const Lattice& L) {
    std::vector<Filter> out;
    out.reserve(size_t(L.size()));
    for (Element x = 0; x < L.size(); ++x) out.push_back(principal_filter(L, x));
    return out;
}

bool is_filter(const Lattice& L, ElementSet a) {
    if (a.empty()) return false;
    for (Element x : a) {
        if (!L.up_set(x).subset_of(a)) return false;  // upward closed
        for (Element y : a)
            if (!a.contains(L.meet(x, y))) return false;
    }
    return true;
}

Filter make_filter(const Lattice& L, ElementSet a) {
    if (!is_filter(L, a)) throw NotAFilterError("set is not a filter");
    // Finite filters are principal: the meet of all members generates.
    Element g = a.min();
    for (Element x : a) g = L.meet(g, x);
    return Filter{a, g};
}

bool is_d_filter(const Lattice& L, const Filter& f) {
    return dense_set(L).subset_of(f.carrier);
}

ElementSet c_operator(const Lattice& L, const Filter& f) {
    ElementSet out;
    const ElementSet all = L.universe();
    for (Element x = 0; x < L.size(); ++x)
        if (set_meet(L, bar(L, ElementSet::single(x)), f.carrier) == all) out.add(x);
    return out;
}

bool is_coherent(const Lattice& L, const Filter& f) {
    return c_operator(L, f) == f.carrier;
}

bool is_closed_filter(const Lattice& L, const Filter& f) {
    return is_closed_set(L, f.carrier);
}

bool is_proper(const Lattice& L, const Filter& f) {
    return f.carrier != L.universe();
}

bool is_maximal(const Lattice& L, const Filter& f) {
    // Principal filters: F_x is a maximal proper filter iff x is an atom.
    if (!is_proper(L, f)) return false;
    return f.generator != L.bottom() &&
           L.down_set(f.generator) == (ElementSet::single(L.bottom()) |
                                       ElementSet::single(f.generator));
}

bool is_prime(const Lattice& L, const Filter& f) {
    for (Element x = 0; x < L.size(); ++x) {
        if (f.carrier.contains(x)) continue;
        for (Element y = x; y < L.size(); ++y) {
            if (f.carrier.contains(y)) continue;
            if (f.carrier.contains(L.join(x, y))) return false;
        }
    }
    return true;
}

bool is_median(const Lattice& L, const Filter& f) {
    if (!is_maximal(L, f)) return false;
    const ElementSet outside = L.universe() - f.carrier;
    const auto& rel = L.ops().bar_rel;  // rel[x] = {y : 1 in x^00 v y^00}
    for (Element x : f.carrier)
        if ((rel[size_t(x)] & outside).empty()) return false;
    return true;
}

FilterFlags classify_filter(const Lattice& L, const Filter& f) {
    FilterFlags flags;
    flags.proper = is_proper(L, f);
    flags.d_filter = is_d_filter(L, f);
    flags.closed = is_closed_filter(L, f);
    flags.coherent = is_coherent(L, f);
    flags.maximal = is_maximal(L, f);
    flags.prime = is_prime(L, f);
    flags.median = is_median(L, f);
    return flags;
}

}  // namespace lattle
