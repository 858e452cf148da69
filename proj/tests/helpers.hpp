#pragma once

#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include <tutte/tutte.hpp>

#ifndef TUTTE_TEST_DATA
#define TUTTE_TEST_DATA "."
#endif

namespace tutte_test {

inline std::string data_path(const std::string& rel) {
    return std::string(TUTTE_TEST_DATA) + "/" + rel;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline tutte::Poly load_golden(int idx) {
    nlohmann::json j = nlohmann::json::parse(slurp(data_path("golden/G" + std::to_string(idx) + ".json")));
    return tutte::poly_from_json(j);
}

// one shared catalog over the checked-in tables
inline tutte::Catalog& catalog() {
    static tutte::Catalog cat(data_path("tables"));
    return cat;
}

inline tutte::Atom st_atom(int idx) {
    tutte::Atom a{tutte::Atom::Kind::shephard_todd};
    a.st = idx;
    return a;
}

constexpr int kPrimitives[] = {23, 24, 25, 26, 27, 29, 30, 31, 32, 33, 34};

}  // namespace tutte_test
