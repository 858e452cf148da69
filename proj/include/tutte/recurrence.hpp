#pragma once

// Tutte polynomials of the primitive groups of rank >= 3 from their parabolic
// conjugacy-class tables. With P running over the proper parabolic classes
// (the trivial subgroup included, the full group excluded):
//
//   T_G(1,y) = [ y^{#A} - sum_P size_P (y-1)^{rk P} T_P(1,y) ] / (y-1)^{rk G}
//   T_G(x,y) =   sum_P size_P (x-1)^{rk G - rk P} T_P(1,y)  +  T_G(1,y)
//
// The division is exact (asserted), and the result's y-degree must come out
// as #A - rk G. The shipped tables list the nontrivial proper classes; the
// trivial class (size 1, rank 0, T = 1) is added here.
//
// The Catalog owns the loaded tables plus memoized Tutte polynomials for
// every group a table can mention: cyclic and symmetric groups, the G(m,p,n)
// series, rank-2 primitives by hyperplane count, and lower-rank primitives
// through this same recurrence.

#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "arrangement.hpp"
#include "egf.hpp"
#include "group.hpp"
#include "poly.hpp"
#include "rank2.hpp"

namespace tutte {

struct ParabolicClass {
    std::string type_name;
    GroupDescriptor type;
    long long size = 0;
};

struct ParabolicTable {
    int st_index = 0;
    int rank = 0;
    int hyperplanes = 0;
    std::vector<ParabolicClass> classes;
};

class Catalog {
public:
    Catalog() = default;

    // dir holds rank2.json and parabolic/G<idx>.json
    explicit Catalog(const std::string& tables_dir) { load(tables_dir); }

    void load(const std::string& tables_dir) {
        namespace fs = std::filesystem;
        fs::path dir(tables_dir);
        load_rank2(dir / "rank2.json");
        fs::path pdir = dir / "parabolic";
        if (fs::is_directory(pdir)) {
            std::vector<fs::path> files;
            for (auto& entry : fs::directory_iterator(pdir))
                if (entry.path().extension() == ".json") files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            for (auto& f : files) load_parabolic_table(f);
        }
    }

    bool has_table(int idx) const { return tables_.count(idx) > 0; }
    const ParabolicTable& table(int idx) const {
        auto it = tables_.find(idx);
        if (it == tables_.end())
            throw std::runtime_error("no parabolic table for G" + std::to_string(idx));
        return it->second;
    }
    const std::map<int, ParabolicTable>& tables() const { return tables_; }

    int rank2_hyperplanes(int idx) const {
        auto it = rank2_.find(idx);
        if (it == rank2_.end())
            throw std::runtime_error("no rank-2 entry for G" + std::to_string(idx));
        return it->second;
    }
    const std::map<int, int>& rank2_entries() const { return rank2_; }

    int rank(const Atom& a) const {
        switch (a.kind) {
            case Atom::Kind::symmetric: return a.sym - 1;
            case Atom::Kind::cyclic: return 1;
            case Atom::Kind::imprimitive:
                return GainArrangement::make(a.m, a.p, a.n).ambient_rank();
            case Atom::Kind::shephard_todd: return shephard_todd_rank(a.st);
        }
        throw std::logic_error("unreachable");
    }
    int rank(const GroupDescriptor& g) const {
        int r = 0;
        for (auto& a : g.atoms) r += rank(a);
        return r;
    }

    int hyperplanes(const Atom& a) const {
        switch (a.kind) {
            case Atom::Kind::symmetric: return a.sym * (a.sym - 1) / 2;
            case Atom::Kind::cyclic: return 1;
            case Atom::Kind::imprimitive:
                return a.m * (a.n * (a.n - 1) / 2) + (a.p != a.m ? a.n : 0);
            case Atom::Kind::shephard_todd:
                return a.st <= 22 ? rank2_hyperplanes(a.st) : table(a.st).hyperplanes;
        }
        throw std::logic_error("unreachable");
    }
    int hyperplanes(const GroupDescriptor& g) const {
        int c = 0;
        for (auto& a : g.atoms) c += hyperplanes(a);
        return c;
    }

    // ambient dimension (for the characteristic-polynomial prefactor)
    int dimension(const Atom& a) const {
        switch (a.kind) {
            case Atom::Kind::symmetric: return a.sym;
            case Atom::Kind::cyclic: return 1;
            case Atom::Kind::imprimitive: return a.n;
            case Atom::Kind::shephard_todd: return shephard_todd_rank(a.st);
        }
        throw std::logic_error("unreachable");
    }
    int dimension(const GroupDescriptor& g) const {
        int d = 0;
        for (auto& a : g.atoms) d += dimension(a);
        return d;
    }

    const Poly& tutte(const Atom& a) {
        auto it = memo_.find(a);
        if (it != memo_.end()) return it->second;
        Poly t;
        switch (a.kind) {
            case Atom::Kind::cyclic:
                t = Poly::x();
                break;
            case Atom::Kind::symmetric:
                t = tutte_egf(1, 1, a.sym);
                break;
            case Atom::Kind::imprimitive:
                // the trivial cases have empty arrangements
                if (a.n == 0 || (a.p == a.m && a.n == 1))
                    t = Poly::one();
                else
                    t = tutte_egf(a.m, a.p, a.n);
                break;
            case Atom::Kind::shephard_todd:
                t = a.st <= 22 ? tutte_rank2(rank2_hyperplanes(a.st))
                               : tutte_from_table(table(a.st));
                break;
        }
        return memo_.emplace(a, std::move(t)).first->second;
    }

    // direct products multiply
    Poly tutte(const GroupDescriptor& g) {
        Poly t = Poly::one();
        for (auto& a : g.atoms) t *= tutte(a);
        return t;
    }

    Poly t1y(const GroupDescriptor& g) { return tutte(g).at_x1(); }

    Poly tutte_from_table(const ParabolicTable& tab) {
        int rk = tab.rank, na = tab.hyperplanes;
        Poly bracket = Poly::term(0, na, Int(1));
        Poly mixed;
        for (const auto& cls : tab.classes) {
            int rp = rank(cls.type);
            Poly t = t1y(cls.type);
            bracket -= (pow_ym1(rp) * t).scaled(Int(cls.size));
            mixed += (pow_xm1(rk - rp) * t).scaled(Int(cls.size));
        }
        // trivial parabolic class: size 1, rank 0, T = 1
        bracket -= Poly::one();
        mixed += pow_xm1(rk);
        Poly t1 = div_ym1(bracket, rk);  // exact, or the table is wrong
        Poly total = mixed + t1;
        if (total.deg_y() != na - rk || total.deg_x() != rk)
            throw std::runtime_error("degree check failed for G" +
                                     std::to_string(tab.st_index));
        return total;
    }

private:
    void load_rank2(const std::filesystem::path& file) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open " + file.string());
        nlohmann::json j;
        in >> j;
        for (auto& row : j) {
            int idx = row.at("index").get<int>();
            int count = row.at("hyperplanes").get<int>();
            if (idx < 4 || idx > 22 || count < 2)
                throw std::runtime_error("bad rank-2 row in " + file.string());
            rank2_[idx] = count;
        }
    }

    void load_parabolic_table(const std::filesystem::path& file) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open " + file.string());
        nlohmann::json j;
        in >> j;
        ParabolicTable tab;
        std::string gname = j.at("group").get<std::string>();
        GroupDescriptor g = parse_group(gname);
        if (g.atoms.size() != 1 || g.atoms[0].kind != Atom::Kind::shephard_todd)
            throw std::runtime_error("table group must be a primitive index: " + gname);
        tab.st_index = g.atoms[0].st;
        tab.rank = j.at("rank").get<int>();
        tab.hyperplanes = j.at("hyperplanes").get<int>();
        if (tab.rank != shephard_todd_rank(tab.st_index))
            throw std::runtime_error("rank mismatch in " + file.string());
        if (tab.hyperplanes <= tab.rank)
            throw std::runtime_error("hyperplane count inconsistent in " + file.string());
        for (auto& row : j.at("classes")) {
            ParabolicClass cls;
            cls.type_name = row.at("type").get<std::string>();
            cls.type = parse_group(cls.type_name);  // throws on unknown names
            cls.size = row.at("size").get<long long>();
            if (cls.size <= 0)
                throw std::runtime_error("class size must be positive in " + file.string());
            if (rank(cls.type) > tab.rank - 1)
                throw std::runtime_error("class rank too large in " + file.string());
            tab.classes.push_back(std::move(cls));
        }
        tables_[tab.st_index] = std::move(tab);
    }

    std::map<int, int> rank2_;
    std::map<int, ParabolicTable> tables_;
    std::map<Atom, Poly> memo_;
};

}  // namespace tutte
