// The two Stonean conditions and their report:
//   (1)  1 in x^00 v y^00 for every x and every y in x^0
//   (2)  x v y in D  iff  1 in x^00 v y^00, for all x, y
// A lattice is Stonean when (1) holds and D-Stonean when both hold.
#pragma once

#include <optional>
#include <utility>

#include "lattle/annihilator.hpp"

namespace lattle {

struct CondCheck {
    bool holds = false;
    /// Lexicographically first violating pair by element index, when any.
    std::optional<std::pair<Element, Element>> witness;
};

struct StoneanReport {
    CondCheck cond1;
    CondCheck cond2;
    bool d_stonean = false;
};

CondCheck check_cond1(const Lattice& L);
CondCheck check_cond2(const Lattice& L);
StoneanReport stonean_report(const Lattice& L);

}  // namespace lattle
