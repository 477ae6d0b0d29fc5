#include "doctest.h"

#include "tenspec/json_io.hpp"

using namespace tenspec;

TEST_CASE("tensor JSON round trip")
{
    const Tensor t = random_tensor(3, 2, 4, true);
    const Json j = to_json(t);
    CHECK(j["order"] == 3);
    CHECK(j["dim"] == 2);
    CHECK(j["symmetric"] == true);
    CHECK(j["entries"].size() == 8);
    const Tensor u = tensor_from_json(Json::parse(j.dump()));
    for (std::size_t i = 0; i < t.size(); ++i)
        CHECK(u[i] == t[i]);
    CHECK(u.symmetric_hint());
}

TEST_CASE("tensor JSON rejects malformed input")
{
    Json j = to_json(random_tensor(3, 2, 4));
    j["entries"].erase(0);
    CHECK_THROWS_AS(tensor_from_json(j), DimensionError);
    CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"order":3})")), std::invalid_argument);
    CHECK_THROWS_AS(tensor_from_json(Json::parse(R"({"order":3,"dim":2,"entries":[[1,2,3]]})")),
                    std::invalid_argument);
}

TEST_CASE("polynomial JSON round trip")
{
    const UniPoly p({Complex(1.0, 2.0), 0.0, Complex(-0.5, 0.0)});
    const Json j = to_json(p);
    CHECK(j["coeffs"].size() == 3);
    const UniPoly q = unipoly_from_json(j);
    CHECK(q.degree() == 2);
    CHECK(q.coeff(0) == Complex(1.0, 2.0));
}

TEST_CASE("eigen report JSON carries the documented fields")
{
    const std::vector<Complex> d{1.0, 2.0};
    const Json j = to_json(eigenpairs(Tensor::diagonal(3, d)));
    CHECK(j["count"] == 3);
    CHECK(j["path_failures"] == 0);
    CHECK(j["warnings"].is_array());
    for (const auto& c : j["classes"]) {
        CHECK(c["kind"] == "E");
        CHECK(c["rep"].size() == 2);
        CHECK(c["xtx"].size() == 2);
        CHECK(c["lambdas"].size() == 2);
        CHECK(c["residual"].is_number());
    }
}

TEST_CASE("non-finite values are never serialised")
{
    CHECK_THROWS_AS(to_json(Complex(NAN, 0.0)), NumericalError);
}
