#include "lattle/report.hpp"

#include <algorithm>
#include <sstream>

namespace lattle {

namespace {

std::vector<std::string> label_list(const Lattice& L, ElementSet s) {
    std::vector<std::string> out;
    for (Element x : s) out.push_back(L.label(x));
    return out;
}

bool single_char_labels(const Lattice& L) {
    for (int i = 0; i < L.size(); ++i)
        if (L.label(i).size() != 1) return false;
    return true;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

struct Palette {
    bool on = false;
    std::string good(const std::string& s) const { return on ? "\x1b[32m" + s + "\x1b[0m" : s; }
    std::string bad(const std::string& s) const { return on ? "\x1b[31m" + s + "\x1b[0m" : s; }
    std::string dim(const std::string& s) const { return on ? "\x1b[2m" + s + "\x1b[0m" : s; }
};

void append_table(std::ostringstream& out, const std::vector<std::string>& row_names,
                  const std::vector<std::vector<std::string>>& columns) {
    // columns[i] holds one cell per row; widths per column.
    std::vector<size_t> width(columns.size(), 0);
    size_t name_width = 0;
    for (const auto& n : row_names) name_width = std::max(name_width, n.size());
    for (size_t i = 0; i < columns.size(); ++i)
        for (const auto& cell : columns[i]) width[i] = std::max(width[i], cell.size());
    for (size_t r = 0; r < row_names.size(); ++r) {
        out << "  ";
        out.width(std::streamsize(name_width));
        out << row_names[r] << " |";
        for (size_t i = 0; i < columns.size(); ++i) {
            out << ' ';
            out.width(std::streamsize(width[i]));
            out << columns[i][r];
        }
        out << '\n';
    }
}

std::string join_labels(const std::vector<std::string>& labels, bool concat) {
    if (labels.empty()) return "{}";
    std::string out;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i && !concat) out += ',';
        out += labels[i];
    }
    return out;
}

}  // namespace

std::string render_set(const Lattice& L, ElementSet s) {
    return join_labels(label_list(L, s), single_char_labels(L));
}

AnalysisReport analyze(const Lattice& L, const SubsetUniverse& universe) {
    AnalysisReport rep;
    rep.name = L.spec().name;
    rep.n = L.size();
    rep.bottom = L.label(L.bottom());
    rep.top = L.label(L.top());
    rep.elements = L.spec().elements;
    const auto& t = L.ops();
    for (Element x = 0; x < L.size(); ++x) {
        rep.zero_row.push_back(label_list(L, t.zero[size_t(x)]));
        rep.dzero_row.push_back(label_list(L, t.dzero[size_t(x)]));
        rep.bar_row.push_back(label_list(L, t.bar_rel[size_t(x)]));
        rep.dpolar_row.push_back(label_list(L, t.dpolar_rel[size_t(x)]));
    }
    rep.dense = label_list(L, t.dense);
    rep.sharp = label_list(L, t.sharp);
    rep.pseudocomplemented = t.pseudocomplemented;
    rep.stonean = stonean_report(L);
    for (const Filter& f : all_filters(L))
        rep.filters.push_back(
            {L.label(f.generator), label_list(L, f.carrier), classify_filter(L, f)});
    rep.verdicts = check_all(L, universe);
    for (const auto& v : rep.verdicts) {
        switch (v.status) {
            case LawStatus::holds: ++rep.law_summary.holds; break;
            case LawStatus::hypothesis_never_met: ++rep.law_summary.hypothesis_never_met; break;
            case LawStatus::fails:
                ++rep.law_summary.fails;
                rep.law_summary.failing.push_back(v.law);
                break;
        }
    }
    return rep;
}

std::string report_text(const AnalysisReport& rep, bool color) {
    Palette pal{color};
    bool concat = true;
    for (const auto& el : rep.elements)
        if (el.size() != 1) concat = false;
    auto fmt = [&](const std::vector<std::string>& labels) {
        return join_labels(labels, concat);
    };

    std::ostringstream out;
    out << "lattice " << rep.name << "  (n=" << rep.n << ", bottom=" << rep.bottom
        << ", top=" << rep.top << ")\n\n";

    std::vector<std::string> row_names = {"x", "x^0", "x^00", "bar x", "x^D"};
    std::vector<std::vector<std::string>> columns;
    for (size_t i = 0; i < rep.elements.size(); ++i)
        columns.push_back({rep.elements[i], fmt(rep.zero_row[i]), fmt(rep.dzero_row[i]),
                           fmt(rep.bar_row[i]), fmt(rep.dpolar_row[i])});
    append_table(out, row_names, columns);

    out << "\n";
    out << "D = " << fmt(rep.dense) << "\n";
    out << "S = " << fmt(rep.sharp) << "\n";
    out << "pseudocomplemented: " << yesno(rep.pseudocomplemented) << "\n";
    auto cond_line = [&](const char* name, const CondCheck& c) {
        out << name << ": " << yesno(c.holds);
        if (c.witness)
            out << "  (witness x=" << rep.elements[size_t(c.witness->first)]
                << " y=" << rep.elements[size_t(c.witness->second)] << ")";
        out << "\n";
    };
    cond_line("stonean (1)", rep.stonean.cond1);
    cond_line("stonean (2)", rep.stonean.cond2);
    out << "D-stonean: " << yesno(rep.stonean.d_stonean) << "\n";

    out << "\nfilters:\n";
    out << "  gen  proper  D-filter  closed  coherent  maximal  prime  median  carrier\n";
    for (const auto& row : rep.filters) {
        std::ostringstream line;
        line << "  ";
        line.width(3);
        line << row.generator << "  ";
        auto col = [&](bool b, int w) {
            line.width(w);
            line << yesno(b);
            line << "  ";
        };
        col(row.flags.proper, 6);
        col(row.flags.d_filter, 8);
        col(row.flags.closed, 6);
        col(row.flags.coherent, 8);
        col(row.flags.maximal, 7);
        col(row.flags.prime, 5);
        col(row.flags.median, 6);
        line << join_labels(row.carrier, concat);
        out << line.str() << "\n";
    }

    out << "\nlaws: " << rep.verdicts.size() << " checked, " << rep.law_summary.holds
        << " hold, " << rep.law_summary.hypothesis_never_met << " hypothesis never met, ";
    std::string fail_part = std::to_string(rep.law_summary.fails) + " fail";
    out << (rep.law_summary.fails ? pal.bad(fail_part) : fail_part) << "\n";
    for (const auto& id : rep.law_summary.failing)
        out << "  " << pal.bad("FAIL") << " " << id << "\n";
    return out.str();
}

nlohmann::ordered_json report_json(const AnalysisReport& rep) {
    nlohmann::ordered_json doc;
    doc["name"] = rep.name;
    doc["n"] = rep.n;
    doc["bottom"] = rep.bottom;
    doc["top"] = rep.top;
    doc["elements"] = rep.elements;
    auto table = nlohmann::ordered_json::array();
    for (size_t i = 0; i < rep.elements.size(); ++i) {
        nlohmann::ordered_json row;
        row["x"] = rep.elements[i];
        row["zero"] = rep.zero_row[i];
        row["double_zero"] = rep.dzero_row[i];
        row["bar"] = rep.bar_row[i];
        row["d_polar"] = rep.dpolar_row[i];
        table.push_back(row);
    }
    doc["table"] = table;
    doc["dense"] = rep.dense;
    doc["sharp"] = rep.sharp;
    doc["pseudocomplemented"] = rep.pseudocomplemented;
    nlohmann::ordered_json st;
    st["cond1"] = rep.stonean.cond1.holds;
    st["cond2"] = rep.stonean.cond2.holds;
    st["d_stonean"] = rep.stonean.d_stonean;
    auto witness = [&](const CondCheck& c) -> nlohmann::ordered_json {
        if (!c.witness) return nullptr;
        return {rep.elements[size_t(c.witness->first)], rep.elements[size_t(c.witness->second)]};
    };
    st["cond1_witness"] = witness(rep.stonean.cond1);
    st["cond2_witness"] = witness(rep.stonean.cond2);
    doc["stonean"] = st;
    auto filters = nlohmann::ordered_json::array();
    for (const auto& row : rep.filters) {
        nlohmann::ordered_json f;
        f["generator"] = row.generator;
        f["carrier"] = row.carrier;
        f["proper"] = row.flags.proper;
        f["d_filter"] = row.flags.d_filter;
        f["closed"] = row.flags.closed;
        f["coherent"] = row.flags.coherent;
        f["maximal"] = row.flags.maximal;
        f["prime"] = row.flags.prime;
        f["median"] = row.flags.median;
        filters.push_back(f);
    }
    doc["filters"] = filters;
    nlohmann::ordered_json laws;
    laws["checked"] = rep.verdicts.size();
    laws["holds"] = rep.law_summary.holds;
    laws["hypothesis_never_met"] = rep.law_summary.hypothesis_never_met;
    laws["fails"] = rep.law_summary.fails;
    laws["failing"] = rep.law_summary.failing;
    doc["laws"] = laws;
    return doc;
}

std::string verdicts_text(const Lattice& L, const std::vector<LawVerdict>& vs, bool color) {
    Palette pal{color};
    std::ostringstream out;
    size_t idw = 0;
    for (const auto& v : vs) idw = std::max(idw, v.law.size());
    for (const auto& v : vs) {
        out << "  ";
        out.width(std::streamsize(idw));
        out << std::left << v.law << std::right << "  ";
        std::string st = to_string(v.status);
        if (v.status == LawStatus::fails)
            out << pal.bad(st);
        else if (v.status == LawStatus::holds)
            out << pal.good(st);
        else
            out << pal.dim(st);
        out << "  instances=" << v.instances_checked;
        if (!v.counterexample.empty()) {
            out << "  [";
            for (size_t i = 0; i < v.counterexample.size(); ++i) {
                const auto& b = v.counterexample[i];
                if (i) out << ", ";
                out << b.symbol << "=" << render_set(L, b.value);
            }
            out << "]";
        }
        out << "\n";
    }
    return out.str();
}

nlohmann::ordered_json verdict_json(const Lattice& L, const LawVerdict& v) {
    nlohmann::ordered_json doc;
    doc["law"] = v.law;
    doc["status"] = to_string(v.status);
    doc["instances_checked"] = v.instances_checked;
    if (!v.counterexample.empty()) {
        nlohmann::ordered_json cex;
        cex["lattice"] = spec_json(L.spec());
        nlohmann::ordered_json bindings;
        for (const auto& b : v.counterexample) {
            if (b.is_element) {
                bindings[b.symbol] = L.label(b.value.min());
            } else {
                auto arr = nlohmann::ordered_json::array();
                for (Element x : b.value) arr.push_back(L.label(x));
                bindings[b.symbol] = arr;
            }
        }
        cex["bindings"] = bindings;
        doc["counterexample"] = cex;
    }
    return doc;
}

nlohmann::ordered_json verdicts_json(const Lattice& L, const std::vector<LawVerdict>& vs) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& v : vs) arr.push_back(verdict_json(L, v));
    return arr;
}

std::string dot_graph(const Lattice& L) {
    std::ostringstream out;
    out << "digraph \"" << L.spec().name << "\" {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=circle, fontsize=11];\n";
    for (int x = 0; x < L.size(); ++x) out << "  \"" << L.label(x) << "\";\n";
    for (const auto& [lo, hi] : L.cover_pairs())
        out << "  \"" << L.label(lo) << "\" -> \"" << L.label(hi) << "\";\n";
    out << "}\n";
    return out.str();
}

nlohmann::ordered_json spec_json(const LatticeSpec& spec) {
    nlohmann::ordered_json doc;
    doc["name"] = spec.name;
    doc["elements"] = spec.elements;
    auto covers = nlohmann::ordered_json::array();
    for (const auto& [lo, hi] : spec.covers) covers.push_back({lo, hi});
    doc["covers"] = covers;
    return doc;
}

}  // namespace lattle
