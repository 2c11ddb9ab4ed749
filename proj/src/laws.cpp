// The law registry and the counterexample search on top of it.
#include "lattle/laws.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <unordered_map>

#include "lattle/annihilator.hpp"
#include "lattle/stonean.hpp"

namespace lattle {

std::string to_string(LawStatus s) {
    switch (s) {
        case LawStatus::holds: return "holds";
        case LawStatus::fails: return "fails";
        case LawStatus::hypothesis_never_met: return "hypothesis_never_met";
    }
    return "?";
}

namespace {

struct Ctx {
    const Lattice& L;
    std::vector<ElementSet> u;
    std::vector<Filter> filters;
    ElementSet all, dense, sharp;
    Element bot, top;
    bool cond1 = false, cond2 = false, d_stonean = false;
    bool join_cond = false;  // x^00 v y^00 <=_1 (x v y)^00 for all x, y

    mutable std::unordered_map<std::uint64_t, ElementSet> zero_cache;

    explicit Ctx(const Lattice& lat, const SubsetUniverse& universe)
        : L(lat),
          u(universe.sets(lat)),
          filters(all_filters(lat)),
          all(lat.universe()),
          dense(dense_set(lat)),
          sharp(sharp_set(lat)),
          bot(lat.bottom()),
          top(lat.top()) {
        StoneanReport rep = stonean_report(lat);
        cond1 = rep.cond1.holds;
        cond2 = rep.cond2.holds;
        d_stonean = rep.d_stonean;
        join_cond = true;
        for (Element x = 0; x < L.size() && join_cond; ++x)
            for (Element y = 0; y < L.size(); ++y)
                if (!rel_leq1(L, set_join(L, dz1(x), dz1(y)), dz1(L.join(x, y)))) {
                    join_cond = false;
                    break;
                }
    }

    ElementSet zero(ElementSet a) const {
        auto it = zero_cache.find(a.mask());
        if (it != zero_cache.end()) return it->second;
        ElementSet z = zero_op(L, a);
        zero_cache.emplace(a.mask(), z);
        return z;
    }
    ElementSet dz(ElementSet a) const { return zero(zero(a)); }
    ElementSet zero1(Element x) const { return L.ops().zero[size_t(x)]; }
    ElementSet dz1(Element x) const { return L.ops().dzero[size_t(x)]; }
    ElementSet bar1(Element x) const { return L.ops().bar_rel[size_t(x)]; }
    ElementSet dpolar1(Element x) const { return L.ops().dpolar_rel[size_t(x)]; }
};

struct Eval {
    std::int64_t instances = 0;
    std::vector<LawBinding> cex;
    bool failed = false;

    void fail(std::vector<LawBinding> bindings) {
        if (!failed) {
            failed = true;
            cex = std::move(bindings);
        }
    }
};

LawBinding elem(const char* sym, Element x) {
    return {sym, ElementSet::single(x), true};
}
LawBinding setb(const char* sym, ElementSet s) { return {sym, s, false}; }

using RunFn = std::function<void(const Ctx&, Eval&)>;

struct LawDef {
    LawId id;
    RunFn run;
};

bool meet_closed(const Lattice& L, ElementSet a) {
    for (Element x : a)
        for (Element y : a)
            if (!a.contains(L.meet(x, y))) return false;
    return true;
}

std::vector<LawDef> build_registry() {
    std::vector<LawDef> defs;
    auto law = [&](std::string id, std::string statement, RunFn fn) {
        defs.push_back({{std::move(id), std::move(statement)}, std::move(fn)});
    };

    law("lemma1.1", "bar(D) = L and bar(L) = D", [](const Ctx& c, Eval& e) {
        e.instances = 1;
        if (bar(c.L, c.dense) != c.all || bar(c.L, c.all) != c.dense)
            e.fail({setb("D", c.dense), setb("bar(D)", bar(c.L, c.dense)),
                    setb("bar(L)", bar(c.L, c.all))});
    });

    law("galois.bar",
        "A sub B => bar(B) sub bar(A);  A sub bar(bar(A));  bar^3(A) = bar(A);  "
        "A sub bar(B) <=> B sub bar(A)",
        [](const Ctx& c, Eval& e) {
            std::vector<ElementSet> bars;
            bars.reserve(c.u.size());
            for (ElementSet a : c.u) bars.push_back(bar(c.L, a));
            for (size_t i = 0; i < c.u.size() && !e.failed; ++i) {
                ++e.instances;
                if (!c.u[i].subset_of(bar(c.L, bars[i])) ||
                    bar(c.L, bar(c.L, bars[i])) != bars[i])
                    e.fail({setb("A", c.u[i])});
            }
            for (size_t i = 0; i < c.u.size() && !e.failed; ++i)
                for (size_t j = 0; j < c.u.size(); ++j) {
                    ++e.instances;
                    bool bad = (c.u[i].subset_of(c.u[j]) && !bars[j].subset_of(bars[i])) ||
                               (c.u[i].subset_of(bars[j]) != c.u[j].subset_of(bars[i]));
                    if (bad) {
                        e.fail({setb("A", c.u[i]), setb("B", c.u[j])});
                        break;
                    }
                }
        });

    law("galois.dpolar",
        "A sub B => B^D sub A^D;  A sub (A^D)^D;  ((A^D)^D)^D = A^D;  "
        "A sub B^D <=> B sub A^D",
        [](const Ctx& c, Eval& e) {
            std::vector<ElementSet> pol;
            pol.reserve(c.u.size());
            for (ElementSet a : c.u) pol.push_back(d_polar(c.L, a));
            for (size_t i = 0; i < c.u.size() && !e.failed; ++i) {
                ++e.instances;
                if (!c.u[i].subset_of(d_polar(c.L, pol[i])) ||
                    d_polar(c.L, d_polar(c.L, pol[i])) != pol[i])
                    e.fail({setb("A", c.u[i])});
            }
            for (size_t i = 0; i < c.u.size() && !e.failed; ++i)
                for (size_t j = 0; j < c.u.size(); ++j) {
                    ++e.instances;
                    bool bad = (c.u[i].subset_of(c.u[j]) && !pol[j].subset_of(pol[i])) ||
                               (c.u[i].subset_of(pol[j]) != c.u[j].subset_of(pol[i]));
                    if (bad) {
                        e.fail({setb("A", c.u[i]), setb("B", c.u[j])});
                        break;
                    }
                }
        });

    law("thm2.1.i", "x ^ y = 0 for every x in A and y in A^0", [](const Ctx& c, Eval& e) {
        for (ElementSet a : c.u) {
            ++e.instances;
            ElementSet z = c.zero(a);
            for (Element x : a)
                for (Element y : z)
                    if (c.L.meet(x, y) != c.bot) {
                        e.fail({setb("A", a), setb("A^0", z), elem("x", x), elem("y", y)});
                        return;
                    }
        }
    });

    law("thm2.1.ii", "A ^ B = {0} => A <=_1 B^0", [](const Ctx& c, Eval& e) {
        const ElementSet botset = ElementSet::single(c.bot);
        for (ElementSet a : c.u)
            for (ElementSet b : c.u) {
                if (set_meet(c.L, a, b) != botset) continue;
                ++e.instances;
                if (!rel_leq1(c.L, a, c.zero(b))) {
                    e.fail({setb("A", a), setb("B", b), setb("B^0", c.zero(b))});
                    return;
                }
            }
    });

    law("thm2.1.iii", "A <=_1 A^00", [](const Ctx& c, Eval& e) {
        for (ElementSet a : c.u) {
            ++e.instances;
            if (!rel_leq1(c.L, a, c.dz(a))) {
                e.fail({setb("A", a), setb("A^00", c.dz(a))});
                return;
            }
        }
    });

    law("thm2.1.iv", "A <=_1 B => B^0 <=_1 A^0", [](const Ctx& c, Eval& e) {
        for (ElementSet a : c.u)
            for (ElementSet b : c.u) {
                if (!rel_leq1(c.L, a, b)) continue;
                ++e.instances;
                if (!rel_leq1(c.L, c.zero(b), c.zero(a))) {
                    e.fail({setb("A", a), setb("B", b)});
                    return;
                }
            }
    });

    law("thm2.1.v", "A <=_1 B^0 <=> B <=_1 A^0", [](const Ctx& c, Eval& e) {
        for (ElementSet a : c.u)
            for (ElementSet b : c.u) {
                ++e.instances;
                if (rel_leq1(c.L, a, c.zero(b)) != rel_leq1(c.L, b, c.zero(a))) {
                    e.fail({setb("A", a), setb("B", b)});
                    return;
                }
            }
    });

    // The right-hand side must be an antichain (the statement's argument
    // compares two of its members and concludes they are equal); without
    // that restriction B = {0, a} is a counterexample.
    law("thm2.1.vi", "B an antichain and {a} =_1 B => B = {a}", [](const Ctx& c, Eval& e) {
        for (Element a = 0; a < c.L.size(); ++a)
            for (ElementSet b : c.u) {
                if (!is_antichain(c.L, b)) continue;
                if (!rel_eq1(c.L, ElementSet::single(a), b)) continue;
                ++e.instances;
                if (b != ElementSet::single(a)) {
                    e.fail({elem("a", a), setb("B", b)});
                    return;
                }
            }
    });

    law("thm2.1.vii", "A^0 =_1 B^0 => A^0 = B^0", [](const Ctx& c, Eval& e) {
        for (ElementSet a : c.u)
            for (ElementSet b : c.u) {
                ElementSet za = c.zero(a), zb = c.zero(b);
                if (!rel_eq1(c.L, za, zb)) continue;
                ++e.instances;
                if (za != zb) {
                    e.fail({setb("A", a), setb("B", b), setb("A^0", za), setb("B^0", zb)});
                    return;
                }
            }
    });

    law("thm2.1.viii", "A^000 = A^0", [](const Ctx& c, Eval& e) {
        for (ElementSet a : c.u) {
            ++e.instances;
            if (c.zero(c.dz(a)) != c.zero(a)) {
                e.fail({setb("A", a), setb("A^000", c.zero(c.dz(a))), setb("A^0", c.zero(a))});
                return;
            }
        }
    });

    law("thm2.1.ix", "(A v B)^0 <=_1 A^0 ^ B^0", [](const Ctx& c, Eval& e) {
        for (ElementSet a : c.u)
            for (ElementSet b : c.u) {
                ++e.instances;
                ElementSet lhs = c.zero(set_join(c.L, a, b));
                ElementSet rhs = set_meet(c.L, c.zero(a), c.zero(b));
                if (!rel_leq1(c.L, lhs, rhs)) {
                    e.fail({setb("A", a), setb("B", b), setb("(AvB)^0", lhs),
                            setb("A^0^B^0", rhs)});
                    return;
                }
            }
    });

    law("thm2.1.x", "(A ^ B)^00 =_1 A^00 ^ B^00", [](const Ctx& c, Eval& e) {
        for (ElementSet a : c.u)
            for (ElementSet b : c.u) {
                ++e.instances;
                ElementSet lhs = c.dz(set_meet(c.L, a, b));
                ElementSet rhs = set_meet(c.L, c.dz(a), c.dz(b));
                if (!rel_eq1(c.L, lhs, rhs)) {
                    e.fail({setb("A", a), setb("B", b), setb("(A^B)^00", lhs),
                            setb("A^00^B^00", rhs)});
                    return;
                }
            }
    });

    law("thm2.1.xi",
        "A^00 v B^00 <=_1 (A^0 ^ B^0)^0 => (A^00 v B^00)^0 =_1 A^0 ^ B^0",
        [](const Ctx& c, Eval& e) {
            for (ElementSet a : c.u)
                for (ElementSet b : c.u) {
                    ElementSet joined = set_join(c.L, c.dz(a), c.dz(b));
                    ElementSet meetz = set_meet(c.L, c.zero(a), c.zero(b));
                    if (!rel_leq1(c.L, joined, c.zero(meetz))) continue;
                    ++e.instances;
                    if (!rel_eq1(c.L, c.zero(joined), meetz)) {
                        e.fail({setb("A", a), setb("B", b)});
                        return;
                    }
                }
        });

    law("remark2.3",
        "a^00 v b^00 <=_1 (a^0 ^ b^0)^0 and 1 in a^00 v b^00 => a^0 ^ b^0 = {0}",
        [](const Ctx& c, Eval& e) {
            for (Element a = 0; a < c.L.size(); ++a)
                for (Element b = 0; b < c.L.size(); ++b) {
                    ElementSet joined = set_join(c.L, c.dz1(a), c.dz1(b));
                    ElementSet meetz = set_meet(c.L, c.zero1(a), c.zero1(b));
                    if (!rel_leq1(c.L, joined, c.zero(meetz)) || !joined.contains(c.top))
                        continue;
                    ++e.instances;
                    if (meetz != ElementSet::single(c.bot)) {
                        e.fail({elem("a", a), elem("b", b), setb("a^0^b^0", meetz)});
                        return;
                    }
                }
        });

    law("prop2.4", "a, b in S => a ^ b in S", [](const Ctx& c, Eval& e) {
        for (Element a : c.sharp)
            for (Element b : c.sharp) {
                ++e.instances;
                if (!c.sharp.contains(c.L.meet(a, b))) {
                    e.fail({elem("a", a), elem("b", b), elem("a^b", c.L.meet(a, b))});
                    return;
                }
            }
    });

    law("prop2.6", "D is a D-filter", [](const Ctx& c, Eval& e) {
        e.instances = 1;
        if (!is_filter(c.L, c.dense)) e.fail({setb("D", c.dense)});
    });

    law("thm2.8",
        "[1 in (x^00 ^ y^00) v z^00 for all x,y in bar(A) and z in A] => "
        "bar(A) is a D-filter",
        [](const Ctx& c, Eval& e) {
            for (ElementSet a : c.u) {
                ElementSet ba = bar(c.L, a);
                bool hyp = true;
                for (Element x : ba) {
                    for (Element y : ba) {
                        for (Element z : a) {
                            ElementSet v = set_join(
                                c.L, set_meet(c.L, c.dz1(x), c.dz1(y)), c.dz1(z));
                            if (!v.contains(c.top)) {
                                hyp = false;
                                break;
                            }
                        }
                        if (!hyp) break;
                    }
                    if (!hyp) break;
                }
                if (!hyp) continue;
                ++e.instances;
                if (!is_filter(c.L, ba) || !c.dense.subset_of(ba)) {
                    e.fail({setb("A", a), setb("bar(A)", ba)});
                    return;
                }
            }
        });

    law("def3.1.obs",
        "(1) <=> x^0 sub bar({x}) for all x;  (2) <=> bar({x}) = {x}^D for all x",
        [](const Ctx& c, Eval& e) {
            e.instances = 1;
            bool via1 = true, via2 = true;
            for (Element x = 0; x < c.L.size(); ++x) {
                if (!c.zero1(x).subset_of(c.bar1(x))) via1 = false;
                if (c.bar1(x) != c.dpolar1(x)) via2 = false;
            }
            if (via1 != c.cond1 || via2 != c.cond2) e.fail({});
        });

    law("prop3.3.i", "Stonean and a^0 <=_2 bar(a) => bar(bar(a)) = bar(a^0)",
        [](const Ctx& c, Eval& e) {
            if (!c.cond1) return;
            for (Element a = 0; a < c.L.size(); ++a) {
                if (!rel_leq2(c.L, c.zero1(a), c.bar1(a))) continue;
                ++e.instances;
                if (bar(c.L, c.bar1(a)) != bar(c.L, c.zero1(a))) {
                    e.fail({elem("a", a), setb("bar(bar(a))", bar(c.L, c.bar1(a))),
                            setb("bar(a^0)", bar(c.L, c.zero1(a)))});
                    return;
                }
            }
        });

    law("prop3.3.ii", "(1) <=> bar(bar({x})) sub bar(x^0) for all x",
        [](const Ctx& c, Eval& e) {
            e.instances = 1;
            bool rhs = true;
            for (Element x = 0; x < c.L.size(); ++x)
                if (!bar(c.L, c.bar1(x)).subset_of(bar(c.L, c.zero1(x)))) rhs = false;
            if (rhs != c.cond1) e.fail({});
        });

    law("lemma3.4", "D-Stonean => a v a^0 sub D", [](const Ctx& c, Eval& e) {
        if (!c.d_stonean) return;
        for (Element a = 0; a < c.L.size(); ++a) {
            ++e.instances;
            ElementSet joined = set_join(c.L, ElementSet::single(a), c.zero1(a));
            if (!joined.subset_of(c.dense)) {
                e.fail({elem("a", a), setb("a v a^0", joined)});
                return;
            }
        }
    });

    law("thm3.7",
        "on Stonean lattices the following agree: (2);  bar(F) = F^D for every "
        "filter;  bar({x}) = {x}^D for every x;  [F cap G sub D <=> F sub bar(G)]",
        [](const Ctx& c, Eval& e) {
            if (!c.cond1) return;
            e.instances = 1;
            bool si = true, sii = true, siii = true;
            for (const Filter& f : c.filters)
                if (bar(c.L, f.carrier) != d_polar(c.L, f.carrier)) si = false;
            for (Element x = 0; x < c.L.size(); ++x)
                if (c.bar1(x) != c.dpolar1(x)) sii = false;
            for (const Filter& f : c.filters)
                for (const Filter& g : c.filters)
                    if ((f.carrier & g.carrier).subset_of(c.dense) !=
                        f.carrier.subset_of(bar(c.L, g.carrier)))
                        siii = false;
            if (si != c.cond2 || sii != c.cond2 || siii != c.cond2) e.fail({});
        });

    law("c.monotone", "F sub G => c(F) sub c(G);  c(F cap G) sub c(F) cap c(G)",
        [](const Ctx& c, Eval& e) {
            std::vector<ElementSet> cvals;
            cvals.reserve(c.filters.size());
            for (const Filter& f : c.filters) cvals.push_back(c_operator(c.L, f));
            for (size_t i = 0; i < c.filters.size(); ++i)
                for (size_t j = 0; j < c.filters.size(); ++j) {
                    ++e.instances;
                    const Filter& f = c.filters[i];
                    const Filter& g = c.filters[j];
                    if (f.carrier.subset_of(g.carrier) && !cvals[i].subset_of(cvals[j])) {
                        e.fail({elem("gen F", f.generator), elem("gen G", g.generator)});
                        return;
                    }
                    Filter inter = principal_filter(c.L, c.L.join(f.generator, g.generator));
                    if (!c_operator(c.L, inter).subset_of(cvals[i] & cvals[j])) {
                        e.fail({elem("gen F", f.generator), elem("gen G", g.generator)});
                        return;
                    }
                }
        });

    law("lemma4.3", "[bar({x}) cup F = L for all x in F] => F sub c(F)",
        [](const Ctx& c, Eval& e) {
            for (const Filter& f : c.filters) {
                bool hyp = true;
                for (Element x : f.carrier)
                    if ((c.bar1(x) | f.carrier) != c.all) hyp = false;
                if (!hyp) continue;
                ++e.instances;
                if (!f.carrier.subset_of(c_operator(c.L, f))) {
                    e.fail({elem("gen F", f.generator)});
                    return;
                }
            }
        });

    law("prop4.5.i", "F proper and c(F) meet-closed => c(F) is a D-filter",
        [](const Ctx& c, Eval& e) {
            for (const Filter& f : c.filters) {
                if (!is_proper(c.L, f)) continue;
                ElementSet cf = c_operator(c.L, f);
                if (!meet_closed(c.L, cf)) continue;
                ++e.instances;
                if (!is_filter(c.L, cf) || !c.dense.subset_of(cf)) {
                    e.fail({elem("gen F", f.generator), setb("c(F)", cf)});
                    return;
                }
            }
        });

    law("prop4.5.ii",
        "bar(a) ^ bar(b) sub bar(a ^ b) <=> [x in bar(a) and y in bar(b) imply "
        "x ^ y in bar(a ^ b)]",
        [](const Ctx& c, Eval& e) {
            for (Element a = 0; a < c.L.size(); ++a)
                for (Element b = 0; b < c.L.size(); ++b) {
                    ++e.instances;
                    ElementSet target = c.bar1(c.L.meet(a, b));
                    bool lhs = set_meet(c.L, c.bar1(a), c.bar1(b)).subset_of(target);
                    bool rhs = true;
                    for (Element x : c.bar1(a))
                        for (Element y : c.bar1(b))
                            if (!target.contains(c.L.meet(x, y))) rhs = false;
                    if (lhs != rhs) {
                        e.fail({elem("a", a), elem("b", b)});
                        return;
                    }
                }
        });

    law("prop4.5.iii",
        "F proper and [bar(x) ^ bar(y) sub bar(x ^ y) for all x,y in c(F)] => "
        "c(F) meet-closed, hence a D-filter",
        [](const Ctx& c, Eval& e) {
            for (const Filter& f : c.filters) {
                if (!is_proper(c.L, f)) continue;
                ElementSet cf = c_operator(c.L, f);
                bool hyp = true;
                for (Element x : cf)
                    for (Element y : cf)
                        if (!set_meet(c.L, c.bar1(x), c.bar1(y))
                                 .subset_of(c.bar1(c.L.meet(x, y))))
                            hyp = false;
                if (!hyp) continue;
                ++e.instances;
                if (!meet_closed(c.L, cf) || !is_filter(c.L, cf) ||
                    !c.dense.subset_of(cf)) {
                    e.fail({elem("gen F", f.generator), setb("c(F)", cf)});
                    return;
                }
            }
        });

    law("thm4.6", "D-Stonean and F a D-filter => c(F) sub F", [](const Ctx& c, Eval& e) {
        if (!c.d_stonean) return;
        for (const Filter& f : c.filters) {
            if (!is_d_filter(c.L, f)) continue;
            ++e.instances;
            if (!c_operator(c.L, f).subset_of(f.carrier)) {
                e.fail({elem("gen F", f.generator), setb("c(F)", c_operator(c.L, f))});
                return;
            }
        }
    });

    law("cor4.7",
        "D-Stonean, F a D-filter and [bar({x}) cup F = L for all x in F] => F coherent",
        [](const Ctx& c, Eval& e) {
            if (!c.d_stonean) return;
            for (const Filter& f : c.filters) {
                if (!is_d_filter(c.L, f)) continue;
                bool hyp = true;
                for (Element x : f.carrier)
                    if ((c.bar1(x) | f.carrier) != c.all) hyp = false;
                if (!hyp) continue;
                ++e.instances;
                if (!is_coherent(c.L, f)) {
                    e.fail({elem("gen F", f.generator)});
                    return;
                }
            }
        });

    law("cor4.8.i", "D sub bar(A)", [](const Ctx& c, Eval& e) {
        for (ElementSet a : c.u) {
            ++e.instances;
            if (!c.dense.subset_of(bar(c.L, a))) {
                e.fail({setb("A", a), setb("bar(A)", bar(c.L, a))});
                return;
            }
        }
    });

    law("cor4.8.ii", "bar(A) = L <=> A sub D", [](const Ctx& c, Eval& e) {
        for (ElementSet a : c.u) {
            ++e.instances;
            if ((bar(c.L, a) == c.all) != a.subset_of(c.dense)) {
                e.fail({setb("A", a), setb("bar(A)", bar(c.L, a))});
                return;
            }
        }
    });

    law("cor4.8.iii", "every closed filter is a D-filter", [](const Ctx& c, Eval& e) {
        for (const Filter& f : c.filters) {
            if (!is_closed_filter(c.L, f)) continue;
            ++e.instances;
            if (!is_d_filter(c.L, f)) {
                e.fail({elem("gen F", f.generator)});
                return;
            }
        }
    });

    law("thm5.1.i", "F proper:  F maximal <=> x^0 cap F != {} for every x outside F",
        [](const Ctx& c, Eval& e) {
            for (const Filter& f : c.filters) {
                if (!is_proper(c.L, f)) continue;
                ++e.instances;
                bool rhs = true;
                for (Element x : c.all - f.carrier)
                    if ((c.zero1(x) & f.carrier).empty()) rhs = false;
                if (is_maximal(c.L, f) != rhs) {
                    e.fail({elem("gen F", f.generator)});
                    return;
                }
            }
        });

    law("thm5.1.ii", "F maximal => F is a D-filter", [](const Ctx& c, Eval& e) {
        for (const Filter& f : c.filters) {
            if (!is_maximal(c.L, f)) continue;
            ++e.instances;
            if (!is_d_filter(c.L, f)) {
                e.fail({elem("gen F", f.generator)});
                return;
            }
        }
    });

    law("thm5.1.iii",
        "F maximal and [(x v y) ^ z = 0 whenever x,y outside F, z in F, "
        "x ^ z = y ^ z = 0] => F prime",
        [](const Ctx& c, Eval& e) {
            for (const Filter& f : c.filters) {
                if (!is_maximal(c.L, f)) continue;
                ElementSet outside = c.all - f.carrier;
                bool hyp = true;
                for (Element x : outside)
                    for (Element y : outside)
                        for (Element z : f.carrier)
                            if (c.L.meet(x, z) == c.bot && c.L.meet(y, z) == c.bot &&
                                c.L.meet(c.L.join(x, y), z) != c.bot)
                                hyp = false;
                if (!hyp) continue;
                ++e.instances;
                if (!is_prime(c.L, f)) {
                    e.fail({elem("gen F", f.generator)});
                    return;
                }
            }
        });

    law("thm5.5.i",
        "[x^00 v y^00 <=_1 (x v y)^00 for all x,y], F a proper prime D-filter and "
        "a outside F => bar(a) sub F",
        [](const Ctx& c, Eval& e) {
            if (!c.join_cond) return;
            for (const Filter& f : c.filters) {
                if (!is_proper(c.L, f) || !is_prime(c.L, f) || !is_d_filter(c.L, f))
                    continue;
                for (Element a : c.all - f.carrier) {
                    ++e.instances;
                    if (!c.bar1(a).subset_of(f.carrier)) {
                        e.fail({elem("gen F", f.generator), elem("a", a),
                                setb("bar(a)", c.bar1(a))});
                        return;
                    }
                }
            }
        });

    // The prime hypothesis is required: the statement's own argument
    // applies the previous item (which needs F prime) to the median
    // partner, and without it F_b of the fig3 lattice is a counterexample
    // (median D-filter, join condition holds, bar(bar({b})) = {b,c,f,1}).
    law("thm5.5.ii",
        "[x^00 v y^00 <=_1 (x v y)^00 for all x,y], F a proper prime median "
        "D-filter and a in F => bar(bar(a)) sub F",
        [](const Ctx& c, Eval& e) {
            if (!c.join_cond) return;
            for (const Filter& f : c.filters) {
                if (!is_median(c.L, f) || !is_prime(c.L, f) || !is_d_filter(c.L, f))
                    continue;
                for (Element a : f.carrier) {
                    ++e.instances;
                    if (!bar(c.L, c.bar1(a)).subset_of(f.carrier)) {
                        e.fail({elem("gen F", f.generator), elem("a", a)});
                        return;
                    }
                }
            }
        });

    law("thm5.5.iii", "F proper and a in F => a^0 not sub F", [](const Ctx& c, Eval& e) {
        for (const Filter& f : c.filters) {
            if (!is_proper(c.L, f)) continue;
            for (Element a : f.carrier) {
                ++e.instances;
                if (c.zero1(a).subset_of(f.carrier)) {
                    e.fail({elem("gen F", f.generator), elem("a", a),
                            setb("a^0", c.zero1(a))});
                    return;
                }
            }
        }
    });

    law("thm5.5.iv",
        "D-Stonean and F a proper prime D-filter:  a in F <=> a^0 not sub F",
        [](const Ctx& c, Eval& e) {
            if (!c.d_stonean) return;
            for (const Filter& f : c.filters) {
                if (!is_proper(c.L, f) || !is_prime(c.L, f) || !is_d_filter(c.L, f))
                    continue;
                for (Element a = 0; a < c.L.size(); ++a) {
                    ++e.instances;
                    if (f.carrier.contains(a) == c.zero1(a).subset_of(f.carrier)) {
                        e.fail({elem("gen F", f.generator), elem("a", a)});
                        return;
                    }
                }
            }
        });

    law("thm5.6.i", "F maximal and coherent => F median", [](const Ctx& c, Eval& e) {
        for (const Filter& f : c.filters) {
            if (!is_maximal(c.L, f) || !is_coherent(c.L, f)) continue;
            ++e.instances;
            if (!is_median(c.L, f)) {
                e.fail({elem("gen F", f.generator)});
                return;
            }
        }
    });

    law("thm5.6.ii", "F maximal and bar(F) not sub F => F median", [](const Ctx& c, Eval& e) {
        for (const Filter& f : c.filters) {
            if (!is_maximal(c.L, f) || bar(c.L, f.carrier).subset_of(f.carrier)) continue;
            ++e.instances;
            if (!is_median(c.L, f)) {
                e.fail({elem("gen F", f.generator)});
                return;
            }
        }
    });

    law("thm5.6.iii", "F maximal and F = bar(L \\ F) => F median", [](const Ctx& c, Eval& e) {
        for (const Filter& f : c.filters) {
            if (!is_maximal(c.L, f) || bar(c.L, c.all - f.carrier) != f.carrier) continue;
            ++e.instances;
            if (!is_median(c.L, f)) {
                e.fail({elem("gen F", f.generator)});
                return;
            }
        }
    });

    law("prop5.7.i",
        "D-Stonean, F a median prime D-filter, a in F and bar(a) = bar(b) => b in F",
        [](const Ctx& c, Eval& e) {
            if (!c.d_stonean) return;
            for (const Filter& f : c.filters) {
                if (!is_median(c.L, f) || !is_prime(c.L, f) || !is_d_filter(c.L, f))
                    continue;
                for (Element a : f.carrier)
                    for (Element b = 0; b < c.L.size(); ++b) {
                        if (c.bar1(a) != c.bar1(b)) continue;
                        ++e.instances;
                        if (!f.carrier.contains(b)) {
                            e.fail({elem("gen F", f.generator), elem("a", a), elem("b", b)});
                            return;
                        }
                    }
            }
        });

    law("prop5.7.ii",
        "D-Stonean, F median prime and a v b in F => some c outside F has "
        "a v c in D or b v c in D",
        [](const Ctx& c, Eval& e) {
            if (!c.d_stonean) return;
            for (const Filter& f : c.filters) {
                if (!is_median(c.L, f) || !is_prime(c.L, f)) continue;
                for (Element a = 0; a < c.L.size(); ++a)
                    for (Element b = 0; b < c.L.size(); ++b) {
                        if (!f.carrier.contains(c.L.join(a, b))) continue;
                        ++e.instances;
                        bool found = false;
                        for (Element x : c.all - f.carrier)
                            if (c.dense.contains(c.L.join(a, x)) ||
                                c.dense.contains(c.L.join(b, x)))
                                found = true;
                        if (!found) {
                            e.fail({elem("gen F", f.generator), elem("a", a), elem("b", b)});
                            return;
                        }
                    }
            }
        });

    return defs;
}

const std::vector<LawDef>& registry() {
    static const std::vector<LawDef> defs = build_registry();
    return defs;
}

LawVerdict run_law(const Ctx& ctx, const LawDef& def) {
    Eval e;
    def.run(ctx, e);
    LawVerdict v;
    v.law = def.id.id;
    v.instances_checked = e.instances;
    if (e.failed) {
        v.status = LawStatus::fails;
        v.counterexample = std::move(e.cex);
    } else {
        v.status = e.instances > 0 ? LawStatus::holds : LawStatus::hypothesis_never_met;
    }
    return v;
}

}  // namespace

std::vector<ElementSet> SubsetUniverse::sets(const Lattice& L) const {
    const int n = L.size();
    std::vector<ElementSet> out;
    auto add_singletons = [&] {
        for (Element x = 0; x < n; ++x) out.push_back(ElementSet::single(x));
    };
    auto add_pairs = [&] {
        for (Element x = 0; x < n; ++x)
            for (Element y = x + 1; y < n; ++y)
                out.push_back(ElementSet::single(x) | ElementSet::single(y));
    };
    auto add_family_extras = [&] {
        for (Element x = 0; x < n; ++x) out.push_back(L.up_set(x));
        out.push_back(dense_set(L));
        out.push_back(sharp_set(L));
    };
    auto add_powerset = [&] {
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m)
            out.push_back(ElementSet::of_mask(m));
    };

    switch (kind) {
        case Kind::Default:
            if (n <= 8) {
                add_powerset();
            } else {
                add_singletons();
                add_pairs();
                add_family_extras();
            }
            break;
        case Kind::Singletons:
            add_singletons();
            break;
        case Kind::Pairs:
            add_singletons();
            add_pairs();
            break;
        case Kind::Filters:
            add_singletons();
            add_pairs();
            add_family_extras();
            break;
        case Kind::Powerset:
            if (n > 16)
                throw std::invalid_argument("powerset universe is limited to n <= 16");
            add_powerset();
            break;
    }
    std::sort(out.begin(), out.end(),
              [](ElementSet a, ElementSet b) { return a.mask() < b.mask(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<SubsetUniverse> SubsetUniverse::parse(std::string_view name) {
    SubsetUniverse u;
    if (name == "default") u.kind = Kind::Default;
    else if (name == "singletons") u.kind = Kind::Singletons;
    else if (name == "pairs") u.kind = Kind::Pairs;
    else if (name == "filters") u.kind = Kind::Filters;
    else if (name == "powerset") u.kind = Kind::Powerset;
    else return std::nullopt;
    return u;
}

const std::vector<LawId>& law_catalog() {
    static const std::vector<LawId> ids = [] {
        std::vector<LawId> out;
        for (const auto& def : registry()) out.push_back(def.id);
        return out;
    }();
    return ids;
}

const LawId* find_law(std::string_view id) {
    for (const auto& def : registry())
        if (def.id.id == id) return &def.id;
    return nullptr;
}

LawVerdict check_law(const Lattice& L, const std::string& id, const SubsetUniverse& u) {
    for (const auto& def : registry()) {
        if (def.id.id != id) continue;
        Ctx ctx(L, u);
        return run_law(ctx, def);
    }
    throw UnknownLawError(id);
}

std::vector<LawVerdict> check_all(const Lattice& L, const SubsetUniverse& u) {
    Ctx ctx(L, u);
    std::vector<LawVerdict> out;
    out.reserve(registry().size());
    for (const auto& def : registry()) out.push_back(run_law(ctx, def));
    return out;
}

std::optional<LawSearchHit> search_law_counterexample(const std::string& id, int n_max,
                                                      const SearchMode& mode,
                                                      const SubsetUniverse& u,
                                                      bool override_cap) {
    if (!find_law(id)) throw UnknownLawError(id);
    if (n_max > 9 && !override_cap) throw SizeCapError(n_max);  // before any scanning
    if (mode.exhaustive) {
        for (int n = 2; n <= n_max; ++n) {
            LatticeEnumerator en(n, override_cap);
            while (auto L = en.next()) {
                LawVerdict v = check_law(*L, id, u);
                if (v.status == LawStatus::fails) return LawSearchHit{std::move(*L), std::move(v)};
            }
        }
        return std::nullopt;
    }
    std::mt19937_64 rng(mode.seed);
    for (int t = 0; t < mode.budget; ++t) {
        int n = 2 + int(rng() % std::uint64_t(std::max(1, n_max - 1)));
        std::optional<Lattice> L;
        try {
            L = random_lattice(n, rng());
        } catch (const RetryBudgetError&) {
            continue;
        }
        LawVerdict v = check_law(*L, id, u);
        if (v.status == LawStatus::fails) return LawSearchHit{std::move(*L), std::move(v)};
    }
    return std::nullopt;
}

// ---- predicate queries -----------------------------------------------------

struct PredicateQuery::Node {
    enum class Op { Pred, Not, And, Or } op = Op::Pred;
    int pred = -1;
    std::shared_ptr<const Node> a, b;
};

namespace {

enum Pred {
    kCond1,
    kCond2,
    kStonean,
    kDStonean,
    kPseudocomplemented,
    kProper,
    kMaximal,
    kPrime,
    kCoherent,
    kMedian,
    kClosed,
    kDFilter,
};

const std::pair<const char*, int> kPredNames[] = {
    {"cond1", kCond1},       {"cond2", kCond2},
    {"stonean", kStonean},   {"d_stonean", kDStonean},
    {"pseudocomplemented", kPseudocomplemented},
    {"proper", kProper},     {"maximal", kMaximal},
    {"prime", kPrime},       {"coherent", kCoherent},
    {"median", kMedian},     {"closed", kClosed},
    {"d_filter", kDFilter},
};

bool is_filter_pred(int p) { return p >= kProper; }

struct Parser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::shared_ptr<const PredicateQuery::Node> parse_or() {
        auto lhs = parse_and();
        while (eat('|')) {
            auto node = std::make_shared<PredicateQuery::Node>();
            node->op = PredicateQuery::Node::Op::Or;
            node->a = lhs;
            node->b = parse_and();
            lhs = node;
        }
        return lhs;
    }

    std::shared_ptr<const PredicateQuery::Node> parse_and() {
        auto lhs = parse_unary();
        while (eat('&')) {
            auto node = std::make_shared<PredicateQuery::Node>();
            node->op = PredicateQuery::Node::Op::And;
            node->a = lhs;
            node->b = parse_unary();
            lhs = node;
        }
        return lhs;
    }

    std::shared_ptr<const PredicateQuery::Node> parse_unary() {
        skip_ws();
        if (eat('!')) {
            auto node = std::make_shared<PredicateQuery::Node>();
            node->op = PredicateQuery::Node::Op::Not;
            node->a = parse_unary();
            return node;
        }
        if (eat('(')) {
            auto inner = parse_or();
            if (!eat(')')) throw QueryError("expected ')' in predicate query");
            return inner;
        }
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
                text[pos] == '.'))
            ++pos;
        if (start == pos) throw QueryError("expected predicate name in query");
        std::string_view name = text.substr(start, pos - start);
        for (const auto& [pname, pid] : kPredNames) {
            if (name == pname) {
                auto node = std::make_shared<PredicateQuery::Node>();
                node->op = PredicateQuery::Node::Op::Pred;
                node->pred = pid;
                return node;
            }
        }
        throw QueryError("unknown predicate '" + std::string(name) + "'");
    }
};

bool node_uses_filter_preds(const PredicateQuery::Node& n) {
    switch (n.op) {
        case PredicateQuery::Node::Op::Pred: return is_filter_pred(n.pred);
        case PredicateQuery::Node::Op::Not: return node_uses_filter_preds(*n.a);
        default: return node_uses_filter_preds(*n.a) || node_uses_filter_preds(*n.b);
    }
}

struct PredEnv {
    const Lattice& L;
    const StoneanReport& rep;
    const Filter* f;  // null for lattice-level evaluation
};

bool eval_pred(int pred, const PredEnv& env) {
    switch (pred) {
        case kCond1:
        case kStonean: return env.rep.cond1.holds;
        case kCond2: return env.rep.cond2.holds;
        case kDStonean: return env.rep.d_stonean;
        case kPseudocomplemented: return is_pseudocomplemented(env.L);
        case kProper: return is_proper(env.L, *env.f);
        case kMaximal: return is_maximal(env.L, *env.f);
        case kPrime: return is_prime(env.L, *env.f);
        case kCoherent: return is_coherent(env.L, *env.f);
        case kMedian: return is_median(env.L, *env.f);
        case kClosed: return is_closed_filter(env.L, *env.f);
        case kDFilter: return is_d_filter(env.L, *env.f);
    }
    return false;
}

bool eval_node(const PredicateQuery::Node& n, const PredEnv& env) {
    switch (n.op) {
        case PredicateQuery::Node::Op::Pred: return eval_pred(n.pred, env);
        case PredicateQuery::Node::Op::Not: return !eval_node(*n.a, env);
        case PredicateQuery::Node::Op::And:
            return eval_node(*n.a, env) && eval_node(*n.b, env);
        case PredicateQuery::Node::Op::Or:
            return eval_node(*n.a, env) || eval_node(*n.b, env);
    }
    return false;
}

}  // namespace

PredicateQuery PredicateQuery::parse(std::string_view text) {
    Parser p{text};
    PredicateQuery q;
    q.root_ = p.parse_or();
    p.skip_ws();
    if (p.pos != text.size()) throw QueryError("trailing input in predicate query");
    q.filter_level_ = node_uses_filter_preds(*q.root_);
    return q;
}

bool PredicateQuery::uses_filter_predicates() const { return filter_level_; }

std::optional<Element> PredicateQuery::matches(const Lattice& L) const {
    StoneanReport rep = stonean_report(L);
    if (!filter_level_) {
        PredEnv env{L, rep, nullptr};
        if (eval_node(*root_, env)) return L.bottom();  // marker; generator unused
        return std::nullopt;
    }
    for (const Filter& f : all_filters(L)) {
        PredEnv env{L, rep, &f};
        if (eval_node(*root_, env)) return f.generator;
    }
    return std::nullopt;
}

std::optional<PredicateSearchHit> search_predicate(const PredicateQuery& q, int n_max,
                                                   const SearchMode& mode,
                                                   bool override_cap) {
    if (n_max > 9 && !override_cap) throw SizeCapError(n_max);  // before any scanning
    auto consider = [&](Lattice L) -> std::optional<PredicateSearchHit> {
        if (auto gen = q.matches(L)) {
            PredicateSearchHit hit{std::move(L), std::nullopt};
            if (q.uses_filter_predicates()) hit.filter_generator = gen;
            return hit;
        }
        return std::nullopt;
    };
    if (mode.exhaustive) {
        for (int n = 2; n <= n_max; ++n) {
            LatticeEnumerator en(n, override_cap);
            while (auto L = en.next())
                if (auto hit = consider(std::move(*L))) return hit;
        }
        return std::nullopt;
    }
    std::mt19937_64 rng(mode.seed);
    for (int t = 0; t < mode.budget; ++t) {
        int n = 2 + int(rng() % std::uint64_t(std::max(1, n_max - 1)));
        try {
            if (auto hit = consider(random_lattice(n, rng()))) return hit;
        } catch (const RetryBudgetError&) {
            continue;
        }
    }
    return std::nullopt;
}

}  // namespace lattle
