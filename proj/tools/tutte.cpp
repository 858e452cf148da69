// Command-line front end: compute the Tutte polynomial of a reflection
// arrangement, evaluate specializations, or print the characteristic
// polynomial.
//
// Engines:
//   auto        closed form for the rank-2 primitives, parabolic-table
//               recurrence for the higher primitives, generating-function
//               extraction for G(m,p,n) with n <= 6, basis enumeration
//               otherwise
//   naive       subset sum over all 2^#A subsets (#A <= 22)
//   crapo       basis enumeration with activities (respects --budget/--workers)
//   flats       intersection-lattice identity engine (#A <= 30)
//   egf         generating-function extraction (G(m,p,n), Sym, cyclic only)
//   recurrence  parabolic-table recurrence (primitive groups with a table)

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <tutte/tutte.hpp>

namespace {

using namespace tutte;

#ifndef TUTTE_DEFAULT_TABLES
#define TUTTE_DEFAULT_TABLES ""
#endif

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

// "x=<rat>,y=<rat>"
std::pair<Rat, Rat> parse_eval_point(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("--evaluate", "expected x=..,y=..");
    auto piece = [&](std::string part, const std::string& var) {
        auto eq = part.find('=');
        if (eq == std::string::npos || part.substr(0, eq) != var)
            throw CLI::ValidationError("--evaluate", "expected " + var + "=<rational>");
        return parse_rat(part.substr(eq + 1));
    };
    return {piece(s.substr(0, comma), "x"), piece(s.substr(comma + 1), "y")};
}

GainArrangement arrangement_of(const Atom& a) {
    switch (a.kind) {
        case Atom::Kind::symmetric: return GainArrangement::make(1, 1, a.sym);
        case Atom::Kind::cyclic: return GainArrangement::make(a.cyc, 1, 1);
        case Atom::Kind::imprimitive: return GainArrangement::make(a.m, a.p, a.n);
        default: break;
    }
    throw std::runtime_error(
        "this engine needs an explicit arrangement; only Sym(n), G(m,p,n) and "
        "cyclic groups have one here (primitive groups: use recurrence or auto)");
}

struct Options {
    std::string group, engine = "auto", format = "plain", tables, evaluate;
    std::vector<std::string> series;
    bool charpoly = false, dump = false;
    int workers = 1;
    long long budget = 100000000;
    std::optional<std::uint64_t> shuffle_seed;
};

Poly crapo_with_budget(const GainArrangement& arr, const Options& opt) {
    int rk = arr.ambient_rank();
    Int subsets = binomial(arr.size(), rk);
    if (subsets > opt.budget)
        throw std::runtime_error(
            "basis enumeration would visit about " + subsets.str() + " subsets, over the budget of " +
            std::to_string(opt.budget) +
            "; raise --budget or use --engine egf");
    std::vector<int> order(arr.size());
    std::iota(order.begin(), order.end(), 0);
    if (opt.shuffle_seed) {
        std::mt19937_64 rng(*opt.shuffle_seed);
        std::shuffle(order.begin(), order.end(), rng);
    }
    return tutte_crapo_parallel(arr, order, opt.workers);
}

Poly compute_atom(const Atom& a, Catalog& cat, const Options& opt) {
    const std::string& eng = opt.engine;
    if (eng == "naive" || eng == "crapo") {
        if (a.kind == Atom::Kind::shephard_todd) {
            // even without a realization the subset count is known a priori
            Int subsets = binomial(cat.hyperplanes(a), cat.rank(a));
            if (eng == "crapo" && subsets > opt.budget)
                throw std::runtime_error(
                    "basis enumeration would visit about " + subsets.str() +
                    " subsets, over the budget of " + std::to_string(opt.budget) +
                    "; use --engine recurrence");
        }
        GainArrangement arr = arrangement_of(a);
        return eng == "naive" ? naive_tutte(arr) : crapo_with_budget(arr, opt);
    }
    if (eng == "flats") return tutte_via_flats(arrangement_of(a));
    if (eng == "egf") {
        switch (a.kind) {
            case Atom::Kind::symmetric: return tutte_egf(1, 1, a.sym);
            case Atom::Kind::cyclic: return tutte_egf(a.cyc, 1, 1);
            case Atom::Kind::imprimitive: return tutte_egf(a.m, a.p, a.n);
            default:
                throw std::runtime_error("egf engine covers only G(m,p,n), Sym and cyclic groups");
        }
    }
    if (eng == "recurrence") {
        if (a.kind != Atom::Kind::shephard_todd || a.st <= 22)
            throw std::runtime_error(
                "recurrence engine needs a primitive group of rank >= 3 with a table");
        return cat.tutte(a);
    }
    // auto
    switch (a.kind) {
        case Atom::Kind::shephard_todd:
        case Atom::Kind::cyclic:
            return cat.tutte(a);
        case Atom::Kind::symmetric:
            if (a.sym <= 6) return cat.tutte(a);
            return crapo_with_budget(arrangement_of(a), opt);
        case Atom::Kind::imprimitive:
            if (a.n <= 6) return cat.tutte(a);
            return crapo_with_budget(arrangement_of(a), opt);
    }
    throw std::logic_error("unreachable");
}

void print_poly(const Poly& t, const std::string& format) {
    if (format == "json")
        std::cout << to_json_string(t) << "\n";
    else if (format == "latex")
        std::cout << to_latex(t) << "\n";
    else
        std::cout << to_plain(t) << "\n";
}

int run_series(const Options& opt) {
    int m = -1, p = -1, n = -1;
    for (const auto& tok : opt.series) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--series", "expected m=.. p=.. n=..");
        std::string key = tok.substr(0, eq);
        int val = std::stoi(tok.substr(eq + 1));
        if (key == "m")
            m = val;
        else if (key == "p")
            p = val;
        else if (key == "n")
            n = val;
        else
            throw CLI::ValidationError("--series", "unknown key " + key);
    }
    if (m < 1 || p < 1 || n < 0 || m % p != 0)
        throw CLI::ValidationError("--series", "need m >= 1, p | m, n >= 0");
    nlohmann::json arr = nlohmann::json::array();
    for (int k = 0; k <= n; ++k) {
        Poly t = tutte_egf(m, p, k);
        if (opt.format == "json") {
            nlohmann::json row = to_json(t);
            row["n"] = k;
            arr.push_back(row);
        } else {
            std::cout << "n=" << k << ": "
                      << (opt.format == "latex" ? to_latex(t) : to_plain(t)) << "\n";
        }
    }
    if (opt.format == "json") std::cout << arr.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact Tutte polynomials of reflection arrangements.\n"
        "Characteristic polynomial convention: --charpoly prints\n"
        "  (-1)^rk q^(dim - rk) T(1-q, 0)\n"
        "(dim = ambient dimension, rk = arrangement rank), i.e. the monic-up-\n"
        "to-sign form whose roots are the arrangement exponents."};
    Options opt;
    app.add_option("--group", opt.group,
                   "group name: G4..G34, G(m,p,n), Sym(n), C<k>, or a '+'-product");
    app.add_option("--engine", opt.engine, "auto|naive|crapo|flats|egf|recurrence")
        ->check(CLI::IsMember({"auto", "naive", "crapo", "flats", "egf", "recurrence"}));
    app.add_option("--format", opt.format, "plain|latex|json")
        ->check(CLI::IsMember({"plain", "latex", "json"}));
    app.add_option("--evaluate", opt.evaluate, "evaluate at x=<rat>,y=<rat> (e.g. x=2,y=1/2)");
    app.add_flag("--charpoly", opt.charpoly, "print the characteristic polynomial in q");
    app.add_option("--series", opt.series,
                   "m=M p=P n=N: print the generating-function extractions T[G(m,p,k)], k=0..N")
        ->expected(3);
    app.add_option("--workers", opt.workers, "worker threads for basis enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--tables", opt.tables, "data directory (default: $TUTTE_TABLES or built-in)");
    app.add_option("--budget", opt.budget, "max subsets for basis enumeration (default 1e8)")
        ->check(CLI::PositiveNumber);
    app.add_option("--shuffle-seed", opt.shuffle_seed,
                   "shuffle the hyperplane order for basis enumeration (order-invariance checks)");
    app.add_flag("--dump", opt.dump, "print the arrangement, one hyperplane per line");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!opt.series.empty()) return run_series(opt);
        if (opt.group.empty()) {
            std::cerr << "error: --group or --series required\n";
            return 1;
        }
        GroupDescriptor g = parse_group(opt.group);

        if (opt.dump) {
            for (const Atom& a : g.atoms) arrangement_of(a).dump(std::cout);
            return 0;
        }

        std::string tables_dir = opt.tables;
        if (tables_dir.empty())
            if (const char* env = std::getenv("TUTTE_TABLES")) tables_dir = env;
        if (tables_dir.empty()) tables_dir = TUTTE_DEFAULT_TABLES;
        Catalog cat;
        if (!tables_dir.empty()) cat.load(tables_dir);

        if (opt.charpoly && !opt.evaluate.empty()) {
            std::cerr << "error: --charpoly and --evaluate are mutually exclusive\n";
            return 1;
        }
        Poly t = Poly::one();
        for (const Atom& a : g.atoms) t *= compute_atom(a, cat, opt);
        if (!opt.evaluate.empty()) {
            auto [x0, y0] = parse_eval_point(opt.evaluate);
            Rat v = t.eval(x0, y0);
            std::cout << v << "\n";
            return 0;
        }
        if (opt.charpoly) {
            int rk = cat.rank(g), dim = cat.dimension(g);
            // (-1)^rk q^(dim-rk) T(1-q, 0)
            Poly ty0 = t.at_y0();
            std::map<int, Int> chi;
            for (auto& [e, c] : ty0.terms()) {
                // c (1-q)^i
                for (int s = 0; s <= e.first; ++s) {
                    Int b = binomial(e.first, s);
                    Int coeff = c * b * ((s % 2) ? Int(-1) : Int(1));
                    if (rk % 2) coeff = -coeff;
                    chi[s + dim - rk] += coeff;
                }
            }
            for (auto it = chi.begin(); it != chi.end();)
                it = it->second == 0 ? chi.erase(it) : std::next(it);
            if (opt.format == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (auto it = chi.rbegin(); it != chi.rend(); ++it)
                    arr.push_back(nlohmann::json::array({it->first, it->second.str()}));
                std::cout << nlohmann::json{{"q_terms", arr}}.dump() << "\n";
            } else {
                std::cout << univar_plain(chi, "q") << "\n";
            }
            return 0;
        }
        print_poly(t, opt.format);
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}
