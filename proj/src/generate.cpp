// Exhaustive and random generation of bounded lattices on labeled
// elements with bottom pinned at index 0 and top at index n-1.
//
// Exhaustive: depth-first over the unordered middle-element pairs in
// lexicographic order, branching incomparable / i<j / j>i with eager
// transitive propagation, so each strict order on the middles is reached
// exactly once; leaves are kept when every pair of the bounded extension
// has a unique meet and join.
#include "lattle/corpus.hpp"

#include <random>

namespace lattle {

namespace {

using Mask = std::uint64_t;

// Unique-meet/unique-join test over up/down masks for all n elements.
bool is_lattice_order(int n, const std::vector<Mask>& up, const std::vector<Mask>& down) {
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            Mask uppers = up[size_t(x)] & up[size_t(y)];
            Mask minimal = 0;
            for (Mask rest = uppers; rest;) {
                int z = std::countr_zero(rest);
                rest &= rest - 1;
                if ((uppers & down[size_t(z)] & ~(Mask{1} << z)) == 0) minimal |= Mask{1} << z;
            }
            if (std::popcount(minimal) != 1) return false;
            Mask lowers = down[size_t(x)] & down[size_t(y)];
            Mask maximal = 0;
            for (Mask rest = lowers; rest;) {
                int z = std::countr_zero(rest);
                rest &= rest - 1;
                if ((lowers & up[size_t(z)] & ~(Mask{1} << z)) == 0) maximal |= Mask{1} << z;
            }
            if (std::popcount(maximal) != 1) return false;
        }
    }
    return true;
}

// Builds a Lattice from the strict order on the middles (m x m masks,
// middle i maps to element i+1).  Returns nullopt when the bounded
// extension is not a lattice.
std::optional<Lattice> realize(int n, const std::vector<Mask>& mid_up) {
    const int m = n - 2;
    std::vector<Mask> up(size_t(n), 0), down(size_t(n), 0);
    const Mask all = n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    up[0] = all;
    for (int i = 0; i < m; ++i) {
        Mask u = (Mask{1} << (i + 1)) | (Mask{1} << (n - 1));
        for (Mask rest = mid_up[size_t(i)]; rest;) {
            int j = std::countr_zero(rest);
            rest &= rest - 1;
            u |= Mask{1} << (j + 1);
        }
        up[size_t(i + 1)] = u;
    }
    up[size_t(n - 1)] = Mask{1} << (n - 1);
    for (int x = 0; x < n; ++x)
        for (Mask rest = up[size_t(x)]; rest;) {
            int y = std::countr_zero(rest);
            rest &= rest - 1;
            down[size_t(y)] |= Mask{1} << x;
        }
    if (!is_lattice_order(n, up, down)) return std::nullopt;

    LatticeSpec spec;
    spec.name = "n" + std::to_string(n);
    spec.elements = generated_labels(n);
    for (int x = 0; x < n; ++x) {
        for (Mask rest = up[size_t(x)] & ~(Mask{1} << x); rest;) {
            int y = std::countr_zero(rest);
            rest &= rest - 1;
            Mask between = up[size_t(x)] & down[size_t(y)] & ~(Mask{1} << x) & ~(Mask{1} << y);
            if (between == 0) spec.covers.push_back({spec.elements[size_t(x)], spec.elements[size_t(y)]});
        }
    }
    return Lattice::build(spec);
}

}  // namespace

struct LatticeEnumerator::Impl {
    int n = 0, m = 0;
    std::vector<std::pair<int, int>> pairs;  // (i, j), i < j, lexicographic
    std::vector<Mask> lt;                    // lt[i] = {j : i < j strictly}
    std::vector<Mask> gt;                    // transpose
    std::vector<std::pair<int, int>> trail;  // applied strict relations
    struct Frame {
        int k;            // pair index being decided
        int next_choice;  // 0 = incomparable, 1 = lt, 2 = gt, 3 = spent
        bool forced;      // relation already implied; single pass-through
        size_t mark;      // trail size on entry
    };
    std::vector<Frame> stack;
    bool done = false;

    int pair_index(int i, int j) const {  // i < j
        // Lexicographic position of (i, j) among all i' < j' pairs.
        return i * (2 * m - i - 1) / 2 + (j - i - 1);
    }

    bool related(int i, int j) const {
        return ((lt[size_t(i)] >> j) & 1) || ((lt[size_t(j)] >> i) & 1);
    }

    void undo_to(size_t mark) {
        while (trail.size() > mark) {
            auto [a, b] = trail.back();
            trail.pop_back();
            lt[size_t(a)] &= ~(Mask{1} << b);
            gt[size_t(b)] &= ~(Mask{1} << a);
        }
    }

    // Applies a < b together with its transitive consequences.  Fails if
    // a consequence conflicts with an already-decided pair (index < k).
    bool apply_lt(int a, int b, int k) {
        Mask lows = gt[size_t(a)] | (Mask{1} << a);
        Mask highs = lt[size_t(b)] | (Mask{1} << b);
        for (Mask lrest = lows; lrest;) {
            int x = std::countr_zero(lrest);
            lrest &= lrest - 1;
            for (Mask hrest = highs; hrest;) {
                int y = std::countr_zero(hrest);
                hrest &= hrest - 1;
                if (x == y) return false;                       // cycle
                if ((lt[size_t(y)] >> x) & 1) return false;     // opposite direction set
                if ((lt[size_t(x)] >> y) & 1) continue;         // already present
                int lo = x < y ? x : y, hi = x < y ? y : x;
                if (pair_index(lo, hi) < k) return false;       // decided incomparable
                lt[size_t(x)] |= Mask{1} << y;
                gt[size_t(y)] |= Mask{1} << x;
                trail.emplace_back(x, y);
            }
        }
        return true;
    }
};

LatticeEnumerator::LatticeEnumerator(int n, bool override_cap) : impl_(new Impl) {
    if (n < 2) throw std::invalid_argument("lattice enumeration requires n >= 2");
    if (n > 9 && !override_cap) throw SizeCapError(n);
    if (n > 30) throw std::invalid_argument("lattice enumeration capped at n = 30");
    impl_->n = n;
    impl_->m = n - 2;
    for (int i = 0; i < impl_->m; ++i)
        for (int j = i + 1; j < impl_->m; ++j) impl_->pairs.emplace_back(i, j);
    impl_->lt.assign(size_t(std::max(impl_->m, 1)), 0);
    impl_->gt.assign(size_t(std::max(impl_->m, 1)), 0);
    impl_->stack.push_back({0, 0, false, 0});
    if (!impl_->pairs.empty()) {
        auto& f = impl_->stack.back();
        f.forced = impl_->related(impl_->pairs[0].first, impl_->pairs[0].second);
    }
}

LatticeEnumerator::~LatticeEnumerator() = default;
LatticeEnumerator::LatticeEnumerator(LatticeEnumerator&&) noexcept = default;
LatticeEnumerator& LatticeEnumerator::operator=(LatticeEnumerator&&) noexcept = default;

std::optional<Lattice> LatticeEnumerator::next() {
    // Invariant: every frame records the trail size at its entry and
    // restores exactly that level before each of its choices and when it
    // is popped, so backtracking is purely local.
    auto& s = *impl_;
    if (s.done) return std::nullopt;
    while (!s.stack.empty()) {
        Impl::Frame& f = s.stack.back();
        if (f.k == int(s.pairs.size())) {
            // Leaf: one complete strict order on the middles.
            auto candidate = realize(s.n, s.lt);
            s.stack.pop_back();
            if (candidate) return candidate;
            continue;
        }
        auto [i, j] = s.pairs[size_t(f.k)];
        if (f.forced) {
            // Relation already implied by earlier choices; pass through once.
            if (f.next_choice != 0) {
                s.stack.pop_back();
                continue;
            }
            f.next_choice = 3;
            size_t child_mark = s.trail.size();
            int next_k = f.k + 1;
            bool next_forced = next_k < int(s.pairs.size()) &&
                               s.related(s.pairs[size_t(next_k)].first,
                                         s.pairs[size_t(next_k)].second);
            s.stack.push_back({next_k, 0, next_forced, child_mark});
            continue;
        }
        bool descended = false;
        while (f.next_choice < 3) {
            s.undo_to(f.mark);  // clear the previous choice of this frame
            int choice = f.next_choice++;
            bool ok = true;
            if (choice == 1)
                ok = s.apply_lt(i, j, f.k);
            else if (choice == 2)
                ok = s.apply_lt(j, i, f.k);
            if (!ok) continue;
            size_t child_mark = s.trail.size();
            int next_k = f.k + 1;
            bool next_forced = next_k < int(s.pairs.size()) &&
                               s.related(s.pairs[size_t(next_k)].first,
                                         s.pairs[size_t(next_k)].second);
            s.stack.push_back({next_k, 0, next_forced, child_mark});
            descended = true;
            break;
        }
        if (!descended) {
            // `f` may dangle after push_back inside the loop; safe here
            // because we only reach this when no push happened.
            s.undo_to(f.mark);
            s.stack.pop_back();
        }
    }
    s.done = true;
    return std::nullopt;
}

Lattice random_lattice(int n, std::uint64_t seed, int budget) {
    if (n < 2) throw std::invalid_argument("random lattice generation requires n >= 2");
    if (n > 30) throw std::invalid_argument("random lattice generation capped at n = 30");
    const int m = n - 2;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < budget; ++attempt) {
        // Random strict order: random linear arrangement of the middles
        // plus forward edges with probability ~ 1/3, transitively closed.
        std::vector<int> perm(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) perm[size_t(i)] = i;
        for (int i = m - 1; i > 0; --i) {
            int k = int(rng() % std::uint64_t(i + 1));
            std::swap(perm[size_t(i)], perm[size_t(k)]);
        }
        std::vector<Mask> up(size_t(std::max(m, 1)), 0);
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b)
                if (rng() % 3 == 0) up[size_t(perm[size_t(a)])] |= Mask{1} << perm[size_t(b)];
        for (bool changed = true; changed;) {
            changed = false;
            for (int i = 0; i < m; ++i) {
                Mask acc = up[size_t(i)];
                for (Mask rest = up[size_t(i)]; rest;) {
                    int j = std::countr_zero(rest);
                    rest &= rest - 1;
                    acc |= up[size_t(j)];
                }
                if (acc != up[size_t(i)]) {
                    up[size_t(i)] = acc;
                    changed = true;
                }
            }
        }
        if (auto L = realize(n, up)) return *L;
    }
    throw RetryBudgetError(budget);
}

}  // namespace lattle
