#include "qtoric/json_io.hpp"

#include "qtoric/family.hpp"

#include <doctest.h>

using namespace qtoric;

TEST_CASE("exact integers round-trip through JSON")
{
    CHECK(int_to_json(Int(42)) == Json(42));
    CHECK(int_to_json(Int(-7)) == Json(-7));
    // Beyond int64: decimal strings.
    const Int big = Int("123456789012345678901234567890");
    const Json j = int_to_json(big);
    CHECK(j.is_string());
    CHECK(int_from_json(j, "x") == big);
    CHECK(int_from_json(Json("-5"), "x") == -5);
    CHECK_THROWS_AS(int_from_json(Json("5x"), "x"), JsonSchemaError);
    CHECK_THROWS_AS(int_from_json(Json(1.5), "x"), JsonSchemaError);
}

TEST_CASE("complex JSON round-trip with canonical facet order")
{
    const SimplicialComplex k = build_dual_of_simplex_product({3, 3});
    const SimplicialComplex back = complex_from_json(to_json(k));
    CHECK(back == k);

    CHECK_THROWS_AS(complex_from_json(Json{{"vertices", 2}}), JsonSchemaError);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"vertices":2,"facets":[[1,3]]})")),
                    JsonSchemaError);
    // simplex_product polytope form
    const SimplicialComplex p =
        polytope_from_json(Json::parse(R"({"type":"simplex_product","factors":[3]})"));
    CHECK(p == build_dual_of_simplex_product({3}));
}

TEST_CASE("matrix JSON round-trip")
{
    const CharacteristicMatrix a = generate_matrix({3, 2});
    const CharacteristicMatrix back = matrix_from_json(to_json(a));
    CHECK(matrices_equal(back.entries(), a.entries()));
    CHECK(back.context() == a.context());

    // The simplex_product polytope form parses to the same context.
    const Json with_factors = matrix_json_with_factors(a, {3, 3});
    const CharacteristicMatrix again = matrix_from_json(with_factors);
    CHECK(again.context() == a.context());

    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"n":1,"m":2,"entries":[[1]]})")),
                    JsonSchemaError);
}

TEST_CASE("polynomial JSON keeps string coefficients exactly")
{
    ZPolynomial p(2);
    p.add_term({4, 0}, Int(1));
    p.add_term({3, 1}, Int("987654321098765432109876543210"));
    const Json j = to_json(p);
    CHECK(j.at("mod2") == Json(false));
    // Leading term is listed first.
    CHECK(j.at("terms").at(0).at("exp") == Json::array({4, 0}));
    CHECK(j.at("terms").at(0).at("coef") == Json("1"));
    CHECK(j.at("terms").at(1).at("coef") == Json("987654321098765432109876543210"));
    CHECK(polynomial_from_json(j) == p);

    CHECK_THROWS_AS(polynomial_from_json(Json::parse(R"({"n":2,"terms":[{"exp":[1],"coef":"1"}]})")),
                    JsonSchemaError);
    CHECK_THROWS_AS(
        polynomial_from_json(Json::parse(R"({"n":1,"terms":[{"exp":[-1],"coef":"1"}]})")),
        JsonSchemaError);
}

TEST_CASE("presentation and standard form JSON round-trips")
{
    const RingPresentation pres = hkn_ring({2, 3}).presentation;
    const RingPresentation back = presentation_from_json(to_json(pres));
    CHECK(back == pres);

    const StandardForm sf = reduce_to_standard_form(generate_matrix({4, 3})).form;
    const StandardForm sf_back = standard_form_from_json(to_json(sf));
    CHECK(sf_back.factors() == sf.factors());
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int r = 0; r < 3; ++r)
                CHECK(sf_back.block(i, j)(r) == sf.block(i, j)(r));

    CHECK_THROWS_AS(
        standard_form_from_json(Json::parse(R"x({"n":2,"blocks":{"(1,1)":[1,1,0]}})x")),
        JsonSchemaError);
    CHECK_THROWS_AS(
        standard_form_from_json(Json::parse(R"x({"n":2,"blocks":{"(0,1)":[1,1,0]}})x")),
        JsonSchemaError);
}

TEST_CASE("canonical dumps are stable and end with a newline")
{
    const Json j = to_json(generate_matrix({1, 2}));
    const std::string a = canonical_dump(j);
    const std::string b = canonical_dump(j);
    CHECK(a == b);
    REQUIRE_FALSE(a.empty());
    CHECK(a.back() == '\n');
}
