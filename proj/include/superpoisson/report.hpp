#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "yang_baxter.hpp"

namespace superpoisson::report {

/// Identities checked by each verifier, in the order they are listed.
inline std::vector<std::string> laws_of(const std::string& axiom) {
    static const std::map<std::string, std::vector<std::string>> table{
        {"associativity", {"associativity"}},
        {"Lie superalgebra", {"super-antisymmetry", "super-Jacobi"}},
        {"Leibniz rule", {"Leibniz (left)", "Leibniz (right)"}},
        {"coherence", {"coherence"}},
        {"representation",
         {"left module", "right module", "bimodule", "Lie module", "L-bracket compatibility",
          "R-bracket compatibility", "rho-product compatibility"}},
        {"dualizability", {"dualizability"}},
        {"O-operator", {"product equation", "bracket equation"}},
        {"Rota-Baxter", {"product equation", "bracket equation"}},
        {"representation isomorphism", {"intertwines L", "intertwines R", "intertwines rho"}},
        {"invariance", {"product invariance", "bracket invariance"}},
        {"2-cocycle product identity", {"product identity"}},
        {"2-cocycle bracket identity", {"bracket identity"}},
    };
    auto it = table.find(axiom);
    return it == table.end() ? std::vector<std::string>{} : it->second;
}

inline constexpr std::size_t kMaxWitnessesShown = 8;

inline std::string format_coefficients(const Coefficients& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? " " : "") + format_scalar(c[i]);
    return s + "]";
}

/// `index_spaces[k]` names the basis that the k-th witness index refers to.
inline std::string format(const DefectReport& rep, const std::vector<GradedSpace>& index_spaces) {
    std::ostringstream os;
    os << rep.axiom << ": " << (rep.holds() ? "holds" : "fails") << "\n";
    auto laws = laws_of(rep.axiom);
    for (const auto& w : rep.witnesses)
        if (std::find(laws.begin(), laws.end(), w.law) == laws.end())
            laws.push_back(w.law);
    for (const auto& law : laws) {
        std::vector<const Witness*> ws;
        for (const auto& w : rep.witnesses)
            if (w.law == law)
                ws.push_back(&w);
        std::stable_sort(ws.begin(), ws.end(), [](const Witness* a, const Witness* b) { return a->indices < b->indices; });
        os << "  " << law << ": " << ws.size() << " witness" << (ws.size() == 1 ? "" : "es") << "\n";
        for (std::size_t i = 0; i < ws.size() && i < kMaxWitnessesShown; ++i) {
            os << "    (";
            for (std::size_t k = 0; k < ws[i]->indices.size(); ++k) {
                const auto idx = ws[i]->indices[k];
                os << (k ? ", " : "");
                if (k < index_spaces.size() && idx < index_spaces[k].dim())
                    os << index_spaces[k].name(idx);
                else
                    os << idx;
            }
            os << ") defect " << format_coefficients(ws[i]->defect) << "\n";
        }
        if (ws.size() > kMaxWitnessesShown)
            os << "    ... " << ws.size() - kMaxWitnessesShown << " more\n";
    }
    return os.str();
}

inline std::string format_triple(const std::string& title, const TripleTensor& t) {
    std::ostringstream os;
    const auto& s = t.space();
    const std::size_t nz = t.nonzero_count();
    os << "  " << title << ": " << nz << " nonzero component" << (nz == 1 ? "" : "s") << "\n";
    std::size_t shown = 0;
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            for (std::size_t k = 0; k < s.dim(); ++k)
                if (t(i, j, k) != 0 && shown++ < kMaxWitnessesShown)
                    os << "    " << format_scalar(t(i, j, k)) << " " << s.name(i) << "⊗" << s.name(j) << "⊗"
                       << s.name(k) << "\n";
    if (nz > kMaxWitnessesShown)
        os << "    ... " << nz - kMaxWitnessesShown << " more\n";
    return os.str();
}

inline std::string format(const PybeReport& r) {
    return std::string("PYBE: ") + (r.is_solution ? "solution" : "not a solution") + "\n" +
           format_triple("associative Yang-Baxter defect", r.aybe_defect) +
           format_triple("classical Yang-Baxter defect", r.cybe_defect);
}

} // namespace superpoisson::report
