#include "lattle/stonean.hpp"

#include <stdexcept>

namespace lattle {

CondCheck check_cond1(const Lattice& L) {
    const auto& t = L.ops();
    CondCheck r;
    r.holds = true;
    for (Element x = 0; x < L.size() && r.holds; ++x) {
        for (Element y : t.zero[size_t(x)]) {
            bool top_reached =
                set_join(L, t.dzero[size_t(x)], t.dzero[size_t(y)]).contains(L.top());
            if (!top_reached) {
                r.holds = false;
                r.witness = {x, y};
                break;
            }
        }
    }
    // Equivalent form: x^0 subseteq bar({x}) for all x.  Both routes must
    // agree; drift means a kernel bug.
    bool via_inclusion = true;
    for (Element x = 0; x < L.size(); ++x)
        if (!t.zero[size_t(x)].subset_of(bar(L, ElementSet::single(x)))) via_inclusion = false;
    if (via_inclusion != r.holds)
        throw std::logic_error("stonean condition (1): evaluation routes disagree");
    return r;
}

CondCheck check_cond2(const Lattice& L) {
    const auto& t = L.ops();
    CondCheck r;
    r.holds = true;
    for (Element x = 0; x < L.size() && r.holds; ++x) {
        for (Element y = 0; y < L.size(); ++y) {
            bool join_dense = t.dense.contains(L.join(x, y));
            bool top_reached =
                set_join(L, t.dzero[size_t(x)], t.dzero[size_t(y)]).contains(L.top());
            if (join_dense != top_reached) {
                r.holds = false;
                r.witness = {x, y};
                break;
            }
        }
    }
    // Equivalent form: bar({x}) = {x}^D for all x.
    bool via_equality = true;
    for (Element x = 0; x < L.size(); ++x) {
        ElementSet sx = ElementSet::single(x);
        if (bar(L, sx) != d_polar(L, sx)) via_equality = false;
    }
    if (via_equality != r.holds)
        throw std::logic_error("stonean condition (2): evaluation routes disagree");
    return r;
}

StoneanReport stonean_report(const Lattice& L) {
    StoneanReport rep;
    rep.cond1 = check_cond1(L);
    rep.cond2 = check_cond2(L);
    rep.d_stonean = rep.cond1.holds && rep.cond2.holds;
    return rep;
}

}  // namespace lattle
