#include "lattle/annihilator.hpp"

#include <atomic>
#include <stdexcept>

namespace lattle {

namespace {

ElementSet annihilator_of(const Lattice& L, ElementSet a) {
    ElementSet out;
    const Element bot = L.bottom();
    for (Element x = 0; x < L.size(); ++x) {
        bool ok = true;
        for (Element y : a)
            if (L.meet(x, y) != bot) {
                ok = false;
                break;
            }
        if (ok) out.add(x);
    }
    return out;
}

std::shared_ptr<const OperatorTables> compute_tables(const Lattice& L) {
    const int n = L.size();
    auto t = std::make_shared<OperatorTables>();
    t->zero.resize(size_t(n));
    t->dzero.resize(size_t(n));
    t->bar_rel.resize(size_t(n));
    t->dpolar_rel.resize(size_t(n));

    t->pseudocomplemented = true;
    for (Element x = 0; x < n; ++x) {
        t->zero[size_t(x)] = max_elements(L, annihilator_of(L, ElementSet::single(x)));
        if (t->zero[size_t(x)].size() != 1) t->pseudocomplemented = false;
    }
    for (Element x = 0; x < n; ++x)
        t->dzero[size_t(x)] = max_elements(L, annihilator_of(L, t->zero[size_t(x)]));

    const ElementSet bot = ElementSet::single(L.bottom());
    const ElementSet top = ElementSet::single(L.top());
    ElementSet dense_via_zero, dense_via_dzero;
    for (Element x = 0; x < n; ++x) {
        if (t->zero[size_t(x)] == bot) dense_via_zero.add(x);
        if (t->dzero[size_t(x)] == top) dense_via_dzero.add(x);
        if (t->dzero[size_t(x)] == ElementSet::single(x)) t->sharp.add(x);
    }
    // The two characterizations of D (x^0 = {0} and x^00 = {1}) must agree;
    // a mismatch can only mean a kernel bug.
    if (dense_via_zero != dense_via_dzero)
        throw std::logic_error("operator tables: dense-set characterizations disagree");
    t->dense = dense_via_zero;
    if ((t->dense & t->sharp) != top)
        throw std::logic_error("operator tables: D and S intersect beyond the top element");

    for (Element x = 0; x < n; ++x) {
        for (Element y = x; y < n; ++y) {
            if (set_join(L, t->dzero[size_t(x)], t->dzero[size_t(y)]).contains(L.top())) {
                t->bar_rel[size_t(x)].add(y);
                t->bar_rel[size_t(y)].add(x);
            }
            if (t->dense.contains(L.join(x, y))) {
                t->dpolar_rel[size_t(x)].add(y);
                t->dpolar_rel[size_t(y)].add(x);
            }
        }
    }
    return t;
}

}  // namespace

const OperatorTables& Lattice::ops() const {
    auto cached = std::atomic_load_explicit(&ops_cache_, std::memory_order_acquire);
    if (!cached) {
        auto fresh = compute_tables(*this);
        // First store wins; losing a race just recomputed identical data.
        std::shared_ptr<const OperatorTables> expected;
        if (std::atomic_compare_exchange_strong(&ops_cache_, &expected,
                                                std::shared_ptr<const OperatorTables>(fresh)))
            cached = fresh;
        else
            cached = expected;
    }
    return *cached;
}

ElementSet annihilator_raw(const Lattice& L, ElementSet a) {
    return annihilator_of(L, a);
}

ElementSet zero_op(const Lattice& L, ElementSet a) {
    if (a.size() == 1) return L.ops().zero[size_t(a.min())];
    return max_elements(L, annihilator_of(L, a));
}

ElementSet zero_op_elem(const Lattice& L, Element x) {
    return L.ops().zero[size_t(x)];
}

ElementSet double_zero(const Lattice& L, Element x) {
    return L.ops().dzero[size_t(x)];
}

ElementSet double_zero_set(const Lattice& L, ElementSet a) {
    return zero_op(L, zero_op(L, a));
}

ElementSet dense_set(const Lattice& L) { return L.ops().dense; }

bool is_dense(const Lattice& L, Element x) { return L.ops().dense.contains(x); }

ElementSet sharp_set(const Lattice& L) { return L.ops().sharp; }

bool is_sharp(const Lattice& L, Element x) { return L.ops().sharp.contains(x); }

ElementSet bar(const Lattice& L, ElementSet a) {
    const auto& rel = L.ops().bar_rel;
    ElementSet out;
    for (Element x = 0; x < L.size(); ++x)
        if (a.subset_of(rel[size_t(x)])) out.add(x);
    return out;
}

ElementSet d_polar(const Lattice& L, ElementSet a) {
    const auto& rel = L.ops().dpolar_rel;
    ElementSet out;
    for (Element x = 0; x < L.size(); ++x)
        if (a.subset_of(rel[size_t(x)])) out.add(x);
    return out;
}

bool is_closed_set(const Lattice& L, ElementSet a) {
    return bar(L, bar(L, a)) == a;
}

bool is_pseudocomplemented(const Lattice& L) {
    return L.ops().pseudocomplemented;
}

}  // namespace lattle
