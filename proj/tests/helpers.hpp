#pragma once

#include <doctest.h>

#include <map>
#include <string>

#include "lattle/corpus.hpp"

namespace testing {

inline const lattle::Lattice& fig(const std::string& key) {
    static std::map<std::string, lattle::Lattice> cache;
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, lattle::build_builtin(key)).first;
    return it->second;
}

inline lattle::Element E(const lattle::Lattice& L, const std::string& label) {
    auto x = L.find(label);
    REQUIRE_MESSAGE(x.has_value(), "unknown label ", label);
    return *x;
}

// Set from single-character labels, e.g. S(L, "abc").
inline lattle::ElementSet S(const lattle::Lattice& L, const std::string& chars) {
    lattle::ElementSet out;
    for (char c : chars) out.add(E(L, std::string(1, c)));
    return out;
}

inline lattle::ElementSet S(const lattle::Lattice& L,
                            const std::vector<std::string>& labels) {
    lattle::ElementSet out;
    for (const auto& l : labels) out.add(E(L, l));
    return out;
}

}  // namespace testing
