// Unary operators on elements and subsets of a bounded lattice:
//
//   A^0    maximal elements of the annihilator {x : x ^ y = 0 for all y in A}
//   x^00   double application, (x^0)^0
//   D      dense elements  (x^0 = {0})
//   S      sharp elements  (x^00 = {x})
//   bar A  {x : 1 in x^00 v y^00 for every y in A}
//   A^D    {x : x v y in D for all y in A}
//
// A^0 generalizes the pseudocomplement: it is always a nonempty antichain,
// and collapses to the classical pseudocomplement exactly when it is a
// singleton for every element.
#pragma once

#include "lattle/lattice.hpp"

namespace lattle {

/// Per-lattice cache of the unary operators, built once per lattice.
/// bar_rel[x] and dpolar_rel[x] are the rows of the symmetric relations
/// {(x,y) : 1 in x^00 v y^00} and {(x,y) : x v y in D}; bar({x}) equals
/// bar_rel[x] and {x}^D equals dpolar_rel[x].
struct OperatorTables {
    std::vector<ElementSet> zero;        // x -> x^0
    std::vector<ElementSet> dzero;       // x -> x^00
    std::vector<ElementSet> bar_rel;     // x -> bar({x})
    std::vector<ElementSet> dpolar_rel;  // x -> {x}^D
    ElementSet dense;                    // D
    ElementSet sharp;                    // S
    bool pseudocomplemented = false;     // every x^0 a singleton
};

/// The annihilator of A: {x : x ^ y = 0 for all y in A}.  The whole
/// carrier when A is empty or {0}.
ElementSet annihilator_raw(const Lattice& L, ElementSet a);

/// A^0 = Max(annihilator of A).  Nonempty antichain for every A.
ElementSet zero_op(const Lattice& L, ElementSet a);
ElementSet zero_op_elem(const Lattice& L, Element x);

/// x^00 and its set form.
ElementSet double_zero(const Lattice& L, Element x);
ElementSet double_zero_set(const Lattice& L, ElementSet a);

ElementSet dense_set(const Lattice& L);
bool is_dense(const Lattice& L, Element x);
ElementSet sharp_set(const Lattice& L);
bool is_sharp(const Lattice& L, Element x);

ElementSet bar(const Lattice& L, ElementSet a);
ElementSet d_polar(const Lattice& L, ElementSet a);

/// Whether bar(bar(A)) = A.
bool is_closed_set(const Lattice& L, ElementSet a);

bool is_pseudocomplemented(const Lattice& L);

}  // namespace lattle
