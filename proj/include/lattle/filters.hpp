// Filters of a finite bounded lattice and their classification:
// proper, D-filter, closed, coherent (c(F) = F), maximal, prime, median.
// Every filter of a finite lattice is principal, so a filter is carried
// by its generator; the general up-set enumerator lives in the tests as
// an oracle for that fact.
#pragma once

#include "lattle/annihilator.hpp"
#include "lattle/lattice.hpp"

namespace lattle {

struct Filter {
    ElementSet carrier;
    Element generator;  // least element of the carrier

    bool operator==(const Filter&) const = default;
};

struct FilterFlags {
    bool proper = false;
    bool d_filter = false;
    bool closed = false;
    bool coherent = false;
    bool maximal = false;
    bool prime = false;
    bool median = false;
};

class NotAFilterError : public std::runtime_error {
public:
    explicit NotAFilterError(const std::string& msg) : std::runtime_error(msg) {}
};

/// F_x = {y : x <= y}.
Filter principal_filter(const Lattice& L, Element x);

/// One filter per element, ordered by generator index.
std::vector<Filter> all_filters(const Lattice& L);

/// Nonempty, meet-closed and upward closed.
bool is_filter(const Lattice& L, ElementSet a);

/// Validates `a` and wraps it; throws NotAFilterError otherwise.
Filter make_filter(const Lattice& L, ElementSet a);

/// D is contained in F.
bool is_d_filter(const Lattice& L, const Filter& f);

/// c(F) = {x : bar({x}) ^ F = L} (element-wise set meet).
ElementSet c_operator(const Lattice& L, const Filter& f);

bool is_coherent(const Lattice& L, const Filter& f);
bool is_closed_filter(const Lattice& L, const Filter& f);
bool is_proper(const Lattice& L, const Filter& f);
bool is_maximal(const Lattice& L, const Filter& f);
bool is_prime(const Lattice& L, const Filter& f);

/// Maximal, and every member x has a partner y outside F with
/// 1 in x^00 v y^00.
bool is_median(const Lattice& L, const Filter& f);

FilterFlags classify_filter(const Lattice& L, const Filter& f);

}  // namespace lattle
