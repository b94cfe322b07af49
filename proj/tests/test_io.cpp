#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "orthokit/errors.hpp"
#include "orthokit/io.hpp"
#include "orthokit/pythagoras.hpp"
#include "orthokit/rng.hpp"

using namespace orthokit;

TEST_CASE("matrix json round trip") {
    Rng rng(51);
    const ComplexMatrix m = rng.gaussian(3, 4);
    const ComplexMatrix back = matrix_from_json(matrix_to_json(m));
    CHECK((back - m).frobenius_norm() == 0.0);
}

TEST_CASE("plain numeric entries are accepted") {
    const auto j = nlohmann::json::parse(R"({"rows":2,"cols":1,"data":[1.5,[0,2]]})");
    const ComplexMatrix m = matrix_from_json(j);
    CHECK(m(0, 0) == cplx{1.5, 0.0});
    CHECK(m(1, 0) == cplx{0.0, 2.0});
}

TEST_CASE("malformed json is rejected") {
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json::parse(R"({"rows":2})")), OrthokitError);
    CHECK_THROWS_AS(
        matrix_from_json(nlohmann::json::parse(R"({"rows":2,"cols":2,"data":[[1,0]]})")),
        OrthokitError);
    CHECK_THROWS_AS(load_matrix("/nonexistent/path.json"), OrthokitError);
}

TEST_CASE("save and load through a file") {
    const auto path = std::filesystem::temp_directory_path() / "orthokit_io_test.json";
    Rng rng(52);
    const ComplexMatrix m = rng.gaussian(2, 2);
    save_matrix(path.string(), m);
    const ComplexMatrix back = load_matrix(path.string());
    CHECK((back - m).frobenius_norm() < 1e-15);
    std::filesystem::remove(path);
}

TEST_CASE("verdict json layout") {
    OrthoVerdict v;
    v.status = OrthoStatus::CertifiedNotOrthogonal;
    v.reason = VerdictReason::GridDefectViolation;
    v.witness_lambda = cplx{1.0, -2.0};
    const auto j = verdict_to_json(v);
    CHECK(j["status"] == "certified-not-orthogonal");
    CHECK(j["reason"] == "grid-defect-violation");
    CHECK(j["witness_lambda"][1] == -2.0);
}

TEST_CASE("profile csv layout") {
    DefectProfile prof;
    prof.samples = {{cplx{1.0, 0.0}, 0.25}, {cplx{0.0, -1.0}, -0.5}};
    std::ostringstream os;
    write_profile_csv(os, prof);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "re_lambda,im_lambda,defect");
    int rows = 0;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == 2);
}
