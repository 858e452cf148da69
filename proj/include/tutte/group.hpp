#pragma once

// Names of finite unitary reflection groups as they appear in the parabolic
// tables and on the command line, parsed into a product of atomic factors.
//
// Grammar per '+'-joined factor:
//   [multiplicity digit] body [trailing primes]
// with bodies: "Sym(n)", "G(m,p,n)", "C<k>" (cyclic), "G<idx>" or "ST<idx>"
// (classification index 4..37), and the aliases SL2(F3) = G4, H3 = G23,
// L3 = G25, K5 = G33. Primes mark distinct conjugacy classes of the same
// type and are irrelevant here; a multiplicity digit repeats the factor.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace tutte {

struct Atom {
    enum class Kind { shephard_todd, imprimitive, symmetric, cyclic } kind;
    int st = 0;           // shephard_todd
    int m = 0, p = 0, n = 0;  // imprimitive
    int sym = 0;          // symmetric
    int cyc = 0;          // cyclic order
    friend bool operator==(const Atom&, const Atom&) = default;
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct GroupDescriptor {
    std::vector<Atom> atoms;  // direct product; empty means the trivial group
    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

// classification rank of the primitive group with the given index
inline int shephard_todd_rank(int idx) {
    if (idx >= 4 && idx <= 22) return 2;
    if (idx >= 23 && idx <= 27) return 3;
    if (idx >= 28 && idx <= 32) return 4;
    if (idx == 33) return 5;
    if (idx == 34 || idx == 35) return 6;
    if (idx == 36) return 7;
    if (idx == 37) return 8;
    throw std::invalid_argument("primitive index out of range: " + std::to_string(idx));
}

inline Atom parse_atom(std::string s) {
    while (!s.empty() && s.back() == '\'') s.pop_back();
    if (s.rfind("Sym(", 0) == 0 && s.back() == ')') {
        Atom a{Atom::Kind::symmetric};
        a.sym = std::stoi(s.substr(4, s.size() - 5));
        if (a.sym < 1) throw std::invalid_argument("Sym needs n >= 1");
        return a;
    }
    if (s.rfind("G(", 0) == 0 && s.back() == ')') {
        std::string body = s.substr(2, s.size() - 3);
        int c1 = body.find(','), c2 = body.rfind(',');
        if (c1 < 0 || c2 <= c1) throw std::invalid_argument("bad G(m,p,n): " + s);
        Atom a{Atom::Kind::imprimitive};
        a.m = std::stoi(body.substr(0, c1));
        a.p = std::stoi(body.substr(c1 + 1, c2 - c1 - 1));
        a.n = std::stoi(body.substr(c2 + 1));
        if (a.m < 1 || a.p < 1 || a.m % a.p != 0 || a.n < 0)
            throw std::invalid_argument("bad G(m,p,n): " + s);
        return a;
    }
    if (s == "SL2(F3)") return Atom{Atom::Kind::shephard_todd, 4};
    if (s == "H3") return Atom{Atom::Kind::shephard_todd, 23};
    if (s == "L3") return Atom{Atom::Kind::shephard_todd, 25};
    if (s == "K5") return Atom{Atom::Kind::shephard_todd, 33};
    auto all_digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    if (s.size() > 1 && s[0] == 'C' && all_digits(s.substr(1))) {
        Atom a{Atom::Kind::cyclic};
        a.cyc = std::stoi(s.substr(1));
        if (a.cyc < 2) throw std::invalid_argument("cyclic order must be >= 2");
        return a;
    }
    std::string idx;
    if (s.size() > 1 && s[0] == 'G' && all_digits(s.substr(1))) idx = s.substr(1);
    if (s.size() > 2 && s.rfind("ST", 0) == 0 && all_digits(s.substr(2))) idx = s.substr(2);
    if (!idx.empty()) {
        Atom a{Atom::Kind::shephard_todd};
        a.st = std::stoi(idx);
        shephard_todd_rank(a.st);  // range check
        return a;
    }
    throw std::invalid_argument("unknown group name: '" + s + "'");
}

inline GroupDescriptor parse_group(const std::string& name) {
    GroupDescriptor g;
    std::size_t pos = 0;
    while (pos <= name.size()) {
        std::size_t plus = name.find('+', pos);
        std::string part = name.substr(pos, plus == std::string::npos ? std::string::npos
                                                                      : plus - pos);
        // trim
        std::size_t b = part.find_first_not_of(" \t");
        std::size_t e = part.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty factor in: " + name);
        part = part.substr(b, e - b + 1);
        int mult = 1;
        if (part.size() >= 2 && std::isdigit(static_cast<unsigned char>(part[0])) &&
            std::isupper(static_cast<unsigned char>(part[1]))) {
            mult = part[0] - '0';
            part = part.substr(1);
        }
        Atom a = parse_atom(part);
        for (int t = 0; t < mult; ++t) g.atoms.push_back(a);
        if (plus == std::string::npos) break;
        pos = plus + 1;
    }
    return g;
}

}  // namespace tutte
