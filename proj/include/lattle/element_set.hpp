// Bit-set over the elements of a finite lattice (indices 0..n-1, n <= 64).
#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>

namespace lattle {

/// Index of an element within its lattice.
using Element = int;

/// A subset of lattice elements, held as a 64-bit mask.  Value type;
/// set equality is extensional.  Operations that need the carrier size
/// (complement, full set) take it explicitly.
class ElementSet {
public:
    constexpr ElementSet() = default;

    ElementSet(std::initializer_list<Element> xs) {
        for (Element x : xs) add(x);
    }

    static constexpr ElementSet of_mask(std::uint64_t m) {
        ElementSet s;
        s.bits_ = m;
        return s;
    }

    static constexpr ElementSet single(Element x) {
        return of_mask(std::uint64_t{1} << x);
    }

    static constexpr ElementSet full(int n) {
        return of_mask(n >= 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t mask() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }

    constexpr bool contains(Element x) const {
        return (bits_ >> unsigned(x)) & 1u;
    }

    void add(Element x) {
        assert(x >= 0 && x < 64);
        bits_ |= std::uint64_t{1} << unsigned(x);
    }

    void remove(Element x) { bits_ &= ~(std::uint64_t{1} << unsigned(x)); }

    constexpr bool subset_of(ElementSet o) const {
        return (bits_ & ~o.bits_) == 0;
    }

    /// Least element index present; set must be nonempty.
    Element min() const {
        assert(!empty());
        return Element(std::countr_zero(bits_));
    }

    friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
        return of_mask(a.bits_ & b.bits_);
    }
    friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
        return of_mask(a.bits_ | b.bits_);
    }
    /// Set difference.
    friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
        return of_mask(a.bits_ & ~b.bits_);
    }
    friend constexpr bool operator==(ElementSet a, ElementSet b) {
        return a.bits_ == b.bits_;
    }
    friend constexpr bool operator!=(ElementSet a, ElementSet b) {
        return a.bits_ != b.bits_;
    }

    // Ascending iteration over member indices.
    class iterator {
    public:
        explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
        Element operator*() const { return Element(std::countr_zero(rest_)); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const {
            return rest_ != o.rest_;
        }

    private:
        std::uint64_t rest_;
    };

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace lattle
