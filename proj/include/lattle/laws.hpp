// Executable law registry: every statement the library implements is a
// code-registered check over one lattice, returning a structured verdict.
// Unconditional laws must hold on every bounded lattice; a `fails`
// verdict for one of them can only mean a kernel bug.  Conditional laws
// report hypothesis_never_met when no instance satisfies the hypothesis,
// so vacuity stays visible.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lattle/corpus.hpp"
#include "lattle/filters.hpp"
#include "lattle/lattice.hpp"

namespace lattle {

struct LawId {
    std::string id;         // stable identifier, e.g. "thm2.1.viii"
    std::string statement;  // ASCII rendering of the law
};

enum class LawStatus { holds, fails, hypothesis_never_met };

std::string to_string(LawStatus s);

/// One bound variable of a counterexample; singletons of element-valued
/// symbols keep is_element set so reports can render them bare.
struct LawBinding {
    std::string symbol;
    ElementSet value;
    bool is_element = false;
};

struct LawVerdict {
    std::string law;
    LawStatus status = LawStatus::holds;
    std::int64_t instances_checked = 0;
    std::vector<LawBinding> counterexample;  // nonempty iff status == fails
};

class UnknownLawError : public std::runtime_error {
public:
    explicit UnknownLawError(const std::string& id)
        : std::runtime_error("unknown law '" + id + "'") {}
};

/// Quantification universe for set-valued law variables.
struct SubsetUniverse {
    enum class Kind {
        Default,     // singletons + pairs + principal filters + D + S,
                     // or the full nonempty powerset when n <= 8
        Singletons,
        Pairs,       // singletons + two-element sets
        Filters,     // the default family regardless of n
        Powerset,    // all nonempty subsets (n <= 16)
    };
    Kind kind = Kind::Default;

    /// Nonempty quantification sets in ascending bitmask order.  The
    /// empty set is deliberately excluded: the set-level laws implicitly
    /// quantify over nonempty subsets (their proofs use B <=_1 A v B).
    std::vector<ElementSet> sets(const Lattice& L) const;

    static std::optional<SubsetUniverse> parse(std::string_view name);
};

const std::vector<LawId>& law_catalog();
const LawId* find_law(std::string_view id);

LawVerdict check_law(const Lattice& L, const std::string& id, const SubsetUniverse& u);
std::vector<LawVerdict> check_all(const Lattice& L, const SubsetUniverse& u);

// ---- counterexample search ---------------------------------------------

struct SearchMode {
    bool exhaustive = true;
    std::uint64_t seed = 0;  // random mode
    int budget = 1000;       // random mode: number of candidates drawn
};

struct LawSearchHit {
    Lattice lattice;
    LawVerdict verdict;
};

/// Streams lattices of size 2..n_max (canonical enumeration order, or a
/// seeded random sequence) and returns the first on which the law fails.
/// n_max beyond the soft cap of 9 requires override_cap (checked up
/// front, before any scanning).
std::optional<LawSearchHit> search_law_counterexample(const std::string& id, int n_max,
                                                      const SearchMode& mode,
                                                      const SubsetUniverse& u,
                                                      bool override_cap = false);

// ---- predicate-query search ----------------------------------------------

class QueryError : public std::runtime_error {
public:
    explicit QueryError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Boolean query over named predicates with ! & | and parentheses.
/// Lattice-level predicates: cond1, cond2, stonean, d_stonean,
/// pseudocomplemented.  Filter-level predicates (satisfied when SOME
/// filter matches the whole expression): proper, maximal, prime,
/// coherent, median, closed, d_filter.
class PredicateQuery {
public:
    static PredicateQuery parse(std::string_view text);  // throws QueryError

    bool uses_filter_predicates() const;
    /// Evaluates against a lattice; for filter queries returns the first
    /// matching filter's generator (a placeholder element for pure
    /// lattice-level matches).
    std::optional<Element> matches(const Lattice& L) const;

    struct Node;  // expression tree; defined in laws.cpp

private:
    std::shared_ptr<const Node> root_;
    bool filter_level_ = false;
};

struct PredicateSearchHit {
    Lattice lattice;
    std::optional<Element> filter_generator;
};

std::optional<PredicateSearchHit> search_predicate(const PredicateQuery& q, int n_max,
                                                   const SearchMode& mode,
                                                   bool override_cap = false);

}  // namespace lattle
