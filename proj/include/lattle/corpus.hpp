// Built-in lattice corpus (fig1..fig6) with golden fixture tables, the
// JSON lattice file format, and exhaustive / random generation of small
// bounded lattices for counterexample search.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lattle/lattice.hpp"

namespace lattle {

/// Expected operator tables for a corpus entry, keyed by element label.
/// Rows are stored only where the transcription source states them.
struct GoldenTables {
    std::vector<std::vector<std::string>> zero_row;    // x -> x^0
    std::vector<std::vector<std::string>> dzero_row;   // x -> x^00
    std::vector<std::vector<std::string>> bar_row;     // x -> bar({x})
    std::vector<std::vector<std::string>> dpolar_row;  // x -> {x}^D
    std::vector<std::string> dense;
    std::vector<std::string> sharp;
    std::vector<std::string> closed_filters;  // generator labels
    std::optional<bool> cond1, cond2;
    std::optional<std::pair<std::string, std::string>> cond1_witness;
    std::optional<std::pair<std::string, std::string>> cond2_witness;
    /// c(F_x) per element label, where stated (fig2).
    std::map<std::string, std::vector<std::string>> c_of_principal;
    /// Coherence facts stated for individual principal filters.
    std::vector<std::string> coherent, not_coherent;
};

/// A cell where the transcription source prints a value that disagrees
/// with recomputation (and, where noted, cannot be realized by any
/// lattice).  `expected` keeps the verified value; these records keep the
/// printed one so reports can surface the discrepancy honestly.
struct PrintedCell {
    std::string field;    // "zero_row" | "dzero_row" | "bar_row" | "sharp" |
                          // "closed_filters" | "cond2_witness"
    std::string element;  // row element label, or "" for whole-set fields
    std::vector<std::string> printed;
    std::string note;
};

struct CorpusEntry {
    std::string key;
    LatticeSpec spec;
    GoldenTables expected;          // verified against recomputation
    std::vector<PrintedCell> printed_deviations;
    std::vector<std::string> notes;
};

class UnknownKeyError : public std::runtime_error {
public:
    explicit UnknownKeyError(const std::string& key)
        : std::runtime_error("unknown corpus key '" + key + "'") {}
};

const std::vector<std::string>& corpus_keys();  // fig1..fig6
const CorpusEntry& builtin(const std::string& key);
Lattice build_builtin(const std::string& key);

// ---- lattice file format ---------------------------------------------

class SpecParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, Schema };

    SpecParseError(Kind kind, const std::string& msg, int line, int column)
        : std::runtime_error(msg), kind_(kind), line_(line), column_(column) {}

    Kind kind() const { return kind_; }
    int line() const { return line_; }      // 1-based; 0 when not applicable
    int column() const { return column_; }  // 1-based; 0 when not applicable

private:
    Kind kind_;
    int line_, column_;
};

/// Parses the JSON document {"name", "elements", "covers"}.  Throws
/// SpecParseError with the offending position on malformed input.
LatticeSpec parse_spec(std::string_view text);

/// Canonical serialization; parse(serialize(s)) == s, element and cover
/// order preserved.
std::string serialize_spec(const LatticeSpec& spec);

// ---- generation --------------------------------------------------------

class SizeCapError : public std::runtime_error {
public:
    explicit SizeCapError(int n)
        : std::runtime_error("lattice size " + std::to_string(n) +
                             " exceeds the soft cap of 9 (pass the override flag to proceed)") {}
};

class RetryBudgetError : public std::runtime_error {
public:
    explicit RetryBudgetError(int budget)
        : std::runtime_error("random lattice generation exhausted its retry budget of " +
                             std::to_string(budget)) {}
};

/// Streams every bounded lattice on n labeled elements with bottom fixed
/// at index 0 and top at index n-1, each exactly once.
///
/// Canonical order: the strict order on the n-2 middle elements is chosen
/// pair by pair, pairs (i, j) with i < j in lexicographic order, branch
/// order "incomparable", "i < j", "j < i", with eager transitive
/// propagation; candidates failing the unique-meet/unique-join test are
/// skipped.  Element labels are "0", "a", "b", ..., "1".
class LatticeEnumerator {
public:
    /// Soft cap n <= 9 unless `override_cap` is set; n >= 2 required.
    explicit LatticeEnumerator(int n, bool override_cap = false);
    ~LatticeEnumerator();
    LatticeEnumerator(LatticeEnumerator&&) noexcept;
    LatticeEnumerator& operator=(LatticeEnumerator&&) noexcept;

    std::optional<Lattice> next();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Deterministic for fixed (n, seed): random strict orders on the middle
/// elements are drawn and lattice-tested until one passes; each retry
/// continues the same seeded generator.  Throws RetryBudgetError after
/// `budget` failed draws.
Lattice random_lattice(int n, std::uint64_t seed, int budget = 10000);

/// Labels used by generated lattices: "0", "a", "b", ..., "1".
std::vector<std::string> generated_labels(int n);

}  // namespace lattle
