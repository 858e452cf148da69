#pragma once

// Output formats. The canonical term order everywhere is graded
// lexicographic: total degree descending, ties by x-degree descending. That
// is also the order of the published tables these polynomials are diffed
// against. JSON uses {"terms": [[i, j, "coeff"], ...]} with terms sorted by
// (i, j) descending lexicographically and coefficients as decimal strings.

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "poly.hpp"

namespace tutte {

struct Term {
    int i, j;
    Int c;
};

// total degree descending, then x-degree descending
inline std::vector<Term> graded_terms(const Poly& p) {
    std::vector<Term> ts;
    for (auto& [e, c] : p.terms()) ts.push_back({e.first, e.second, c});
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
        int da = a.i + a.j, db = b.i + b.j;
        if (da != db) return da > db;
        return a.i > b.i;
    });
    return ts;
}

namespace detail {

inline std::string coeff_str(const Int& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

inline std::string render(const Poly& p, bool latex) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : graded_terms(p)) {
        Int a = t.c < 0 ? Int(-t.c) : t.c;
        if (first) {
            if (t.c < 0) os << "-";
            first = false;
        } else {
            os << (t.c < 0 ? " - " : " + ");
        }
        bool has_var = t.i > 0 || t.j > 0;
        if (a != 1 || !has_var) os << a;
        auto var = [&](const char* v, int e) {
            if (e == 0) return;
            os << v;
            if (e > 1) {
                if (latex)
                    os << "^{" << e << "}";
                else
                    os << "^" << e;
            }
        };
        var("x", t.i);
        var("y", t.j);
    }
    return os.str();
}

}  // namespace detail

inline std::string to_plain(const Poly& p) { return detail::render(p, false); }
inline std::string to_latex(const Poly& p) { return detail::render(p, true); }

inline nlohmann::json to_json(const Poly& p) {
    std::vector<Term> ts;
    for (auto& [e, c] : p.terms()) ts.push_back({e.first, e.second, c});
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
        if (a.i != b.i) return a.i > b.i;
        return a.j > b.j;
    });
    nlohmann::json arr = nlohmann::json::array();
    for (const Term& t : ts)
        arr.push_back(nlohmann::json::array({t.i, t.j, detail::coeff_str(t.c)}));
    return nlohmann::json{{"terms", arr}};
}

inline std::string to_json_string(const Poly& p) { return to_json(p).dump(); }

inline Poly poly_from_json(const nlohmann::json& j) {
    Poly p;
    for (auto& t : j.at("terms")) {
        int i = t.at(0).get<int>();
        int jj = t.at(1).get<int>();
        Int c(t.at(2).get<std::string>());
        p.add_term(i, jj, c);
    }
    return p;
}

// univariate rendering for the characteristic polynomial (variable q)
inline std::string univar_plain(const std::map<int, Int>& coeffs, const std::string& var) {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        auto [e, c] = *it;
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || e == 0) os << a;
        if (e > 0) {
            os << var;
            if (e > 1) os << "^" << e;
        }
    }
    return first ? "0" : os.str();
}

}  // namespace tutte
