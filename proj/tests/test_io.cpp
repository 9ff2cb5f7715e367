#include <doctest.h>

#include <cstdlib>
#include <string>

#include "subspace/bounds.hpp"
#include "subspace/io.hpp"
#include "subspace/scenarios.hpp"

using namespace subspace;

TEST_CASE("matrix JSON round trip is exact") {
    const Matrix M = random_unitary(5, 17);
    const Matrix back = io::parse_matrix_json(io::matrix_to_json(M));
    CHECK(back == M);
}

TEST_CASE("matrix JSON rejects malformed input") {
    CHECK_THROWS_AS(io::parse_matrix_json("not json"), ParseError);
    CHECK_THROWS_AS(io::parse_matrix_json(R"({"n": 2, "re": [[1,2]], "im": [[0,0],[0,0]]})"),
                    ParseError);
    CHECK_THROWS_AS(io::parse_matrix_json(R"({"n": 0, "re": [], "im": []})"),
                    ParseError);
    CHECK_THROWS_AS(
        io::parse_matrix_json(R"({"n": 1, "re": [["x"]], "im": [[0]]})"),
        ParseError);
    CHECK_THROWS_AS(io::parse_matrix_json(R"({"n": 1, "re": [[1]]})"), ParseError);
}

TEST_CASE("split JSON round trip") {
    const auto split = make_split(Disposition::Annular, {{-0.5, 0.5}},
                                  {{-4, -1}, {1, 4}});
    const SpectralSplit back = io::parse_split_json(io::split_to_json(split));
    CHECK(back.disposition == Disposition::Annular);
    CHECK(back.d == doctest::Approx(split.d));
    CHECK(back.alpha == doctest::Approx(split.alpha));
    CHECK(back.beta == doctest::Approx(split.beta));
    CHECK_THROWS_AS(io::parse_split_json(R"({"disposition": "diagonal"})"),
                    ParseError);
}

TEST_CASE("report serialization encodes infinities as strings") {
    BoundReport r;
    r.norm_V = 1.5;
    r.conditions["apriori_tan"] = false;
    r.kappa = kInf;
    r.bound_estin = std::numbers::sqrt2 / 2;
    const std::string json = io::report_to_json(r);
    CHECK(json.find("\"kappa\": \"inf\"") != std::string::npos);
    CHECK(json.find("\"bound_dk\": null") != std::string::npos);
}

TEST_CASE("decimal rendering round trips doubles") {
    for (double x : {0.1, 1.0 / 3.0, -2.5e-17, 6.02214076e23, 0.0}) {
        const std::string s = io::format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
    CHECK(io::format_double(kInf) == "inf");
    CHECK(io::format_double(-kInf) == "-inf");
}

TEST_CASE("boundary CSV has the promised header") {
    NumRangeBoundary b;
    b.points = {Complex(1.0, 2.0)};
    b.angles = {0.5};
    const std::string csv = io::boundary_to_csv(b);
    CHECK(csv.rfind("angle,re,im\n", 0) == 0);
    CHECK(csv.find("0.5,1,2") != std::string::npos);
}
