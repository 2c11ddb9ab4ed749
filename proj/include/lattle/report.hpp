// Analysis reports and their text / JSON / DOT renderings.
#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "lattle/filters.hpp"
#include "lattle/laws.hpp"
#include "lattle/stonean.hpp"

namespace lattle {

struct FilterReportRow {
    std::string generator;
    std::vector<std::string> carrier;
    FilterFlags flags;
};

struct LawSummary {
    int holds = 0;
    int hypothesis_never_met = 0;
    int fails = 0;
    std::vector<std::string> failing;  // ids, in catalog order
};

struct AnalysisReport {
    std::string name;
    int n = 0;
    std::string bottom, top;
    std::vector<std::string> elements;
    std::vector<std::vector<std::string>> zero_row, dzero_row, bar_row, dpolar_row;
    std::vector<std::string> dense, sharp;
    bool pseudocomplemented = false;
    StoneanReport stonean;
    std::vector<FilterReportRow> filters;
    std::vector<LawVerdict> verdicts;
    LawSummary law_summary;
};

AnalysisReport analyze(const Lattice& L, const SubsetUniverse& universe);

/// Set rendering used by all text output: member labels concatenated when
/// every label of the lattice is a single character ("fg"), otherwise
/// comma-joined; "{}" for the empty set.
std::string render_set(const Lattice& L, ElementSet s);

std::string report_text(const AnalysisReport& rep, bool color);
nlohmann::ordered_json report_json(const AnalysisReport& rep);

std::string verdicts_text(const Lattice& L, const std::vector<LawVerdict>& vs, bool color);
nlohmann::ordered_json verdict_json(const Lattice& L, const LawVerdict& v);
nlohmann::ordered_json verdicts_json(const Lattice& L, const std::vector<LawVerdict>& vs);

/// Hasse diagram (covers only), bottom at the lowest rank.
std::string dot_graph(const Lattice& L);

nlohmann::ordered_json spec_json(const LatticeSpec& spec);

}  // namespace lattle
