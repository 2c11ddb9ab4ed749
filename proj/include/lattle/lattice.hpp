// Finite bounded lattices: validated construction from cover relations,
// order / meet / join lookups, and the set-level primitives (A v B, A ^ B,
// Max, antichains, the <=_1 / <=_2 / =_1 comparisons) everything else
// builds on.
#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lattle/element_set.hpp"

namespace lattle {

struct OperatorTables;  // annihilator.hpp

/// External description of a lattice: labels plus Hasse-diagram cover
/// pairs (lower label first).  Not yet validated.
struct LatticeSpec {
    std::string name;
    std::vector<std::string> elements;
    std::vector<std::array<std::string, 2>> covers;

    bool operator==(const LatticeSpec&) const = default;
};

class BuildError : public std::runtime_error {
public:
    enum class Kind {
        DuplicateLabel,
        UnknownLabel,
        CycleDetected,
        NotALattice,
        NoBottom,
        NoTop,
        Degenerate,  // one-element lattice (0 = 1), rejected by policy
        TooLarge,    // more than 64 elements
    };

    BuildError(Kind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Immutable finite bounded lattice.  The full order relation and the
/// meet/join tables are materialized once at construction; all later
/// queries are table lookups.  Safe to share across threads.
class Lattice {
public:
    /// Validates and builds.  The order is the reflexive-transitive
    /// closure of the covers.  Throws BuildError if labels are bad, the
    /// covers contain a cycle, bounds are missing, some pair lacks a
    /// unique meet or join, or the carrier has fewer than two elements.
    static Lattice build(const LatticeSpec& spec);

    int size() const { return n_; }
    const std::string& label(Element x) const { return spec_.elements[size_t(x)]; }
    std::optional<Element> find(std::string_view label) const;

    Element bottom() const { return bottom_; }
    Element top() const { return top_; }

    bool leq(Element x, Element y) const { return up_[size_t(x)].contains(y); }
    Element meet(Element x, Element y) const { return table_[size_t(x) * size_t(n_) + size_t(y)][0]; }
    Element join(Element x, Element y) const { return table_[size_t(x) * size_t(n_) + size_t(y)][1]; }

    /// {y : x <= y}, including x itself.
    ElementSet up_set(Element x) const { return up_[size_t(x)]; }
    /// {y : y <= x}, including x itself.
    ElementSet down_set(Element x) const { return down_[size_t(x)]; }
    ElementSet universe() const { return ElementSet::full(n_); }

    const LatticeSpec& spec() const { return spec_; }

    /// Cover pairs recomputed from the order, ascending (lower, upper).
    std::vector<std::pair<Element, Element>> cover_pairs() const;

    /// Memoized unary-operator tables (x^0, x^00, dense/sharp sets, ...).
    /// Filled on first use; the fill is idempotent, so concurrent callers
    /// may race benignly and agree on the result.
    const OperatorTables& ops() const;

private:
    Lattice() = default;

    int n_ = 0;
    Element bottom_ = 0, top_ = 0;
    LatticeSpec spec_;
    std::vector<ElementSet> up_, down_;
    std::vector<std::array<std::uint8_t, 2>> table_;  // [meet, join] per pair
    mutable std::shared_ptr<const OperatorTables> ops_cache_;
};

// ---- set-level primitives ------------------------------------------------

/// {x v y : x in A, y in B}; empty if either operand is empty.
ElementSet set_join(const Lattice& L, ElementSet a, ElementSet b);
/// {x ^ y : x in A, y in B}; empty if either operand is empty.
ElementSet set_meet(const Lattice& L, ElementSet a, ElementSet b);

/// Max A: members of A with no strictly larger member in A.  Always an
/// antichain; empty only for empty A.
ElementSet max_elements(const Lattice& L, ElementSet a);

bool is_antichain(const Lattice& L, ElementSet a);

/// A <= B: every element of A is below every element of B.
bool rel_leq_sets(const Lattice& L, ElementSet a, ElementSet b);
/// A <=_1 B: every element of A has an upper bound in B.
bool rel_leq1(const Lattice& L, ElementSet a, ElementSet b);
/// A <=_2 B: every element of B has a lower bound in A.
bool rel_leq2(const Lattice& L, ElementSet a, ElementSet b);
/// A =_1 B: A <=_1 B and B <=_1 A.
bool rel_eq1(const Lattice& L, ElementSet a, ElementSet b);

}  // namespace lattle
