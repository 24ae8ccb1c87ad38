#include "test_support.hpp"

#include "projendo/error.hpp"
#include "projendo/json_io.hpp"

#include <doctest.h>

#include <functional>

using namespace projendo;
using namespace projendo::testing;
using io::Json;

namespace {

std::string error_code(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

} // namespace

TEST_CASE("rationals and field elements") {
    CHECK(io::to_json(Rational(-3, 4)) == "-3/4");
    CHECK(io::rational_from_json(Json("6/8")) == Rational(3, 4));
    CHECK(io::rational_from_json(Json(-5)) == -5);
    CHECK(error_code([] { io::rational_from_json(Json(0.5)); }) == "schema-violation");
    CHECK(io::field_to_json(NumberField::rationals()) == Json::array({"0", "1"}));
    const auto z5 = NumberField::cyclotomic(5);
    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
        const FieldElement x = random_element(rng, z5);
        CHECK(io::element_from_json(io::to_json(x)) == x);
    }
    CHECK(io::element_from_json(Json("2/3"), z5) == FieldElement::embed(z5, Rational(2, 3)));
    const Json sqrt2 = io::to_json(FieldElement::generator(NumberField::make({-2, 0, 1})));
    CHECK(error_code([&] { io::element_from_json(sqrt2, z5); }) == "field-mismatch");
}

TEST_CASE("forms, maps and matrices") {
    Rng rng(2);
    const auto qi = NumberField::cyclotomic(4);
    for (int t = 0; t < 20; ++t) {
        const Form f = random_form(rng, 3, static_cast<unsigned>(uniform(rng, 0, 4)), t % 2 ? qi : NumberField::rationals());
        CHECK(io::form_from_json(io::to_json(f)) == f);
    }
    const auto m = certify_regular(make_map({form(2, {{1, {3, 0}}, {2, {0, 3}}}), form(2, {{1, {1, 2}}})}));
    const auto back = io::map_from_json(io::to_json(m));
    CHECK(back == m);
    CHECK(back.regularity() == Regularity::CertifiedRegular);
    const FieldMatrix g = random_invertible(rng, 3);
    CHECK(io::matrix_from_json(io::to_json(g)) == g);
    const auto grp = io::group_from_json(io::group_to_json(signed_swap_group()));
    CHECK(grp.order() == 8);
}

TEST_CASE("schema violations") {
    CHECK(error_code([] { io::parse("{"); }) == "malformed-json");
    CHECK(error_code([] { io::form_from_json(io::parse(R"({"vars":2,"terms":[]})")); }) == "schema-violation");
    CHECK(error_code([] { io::form_from_json(io::parse(R"({"vars":2,"degree":2,"terms":[[[1,0],"1"]]})")); }) ==
          "schema-violation");
    CHECK(error_code([] { io::map_from_json(io::parse(R"({"components":[]})")); }) == "schema-violation");
    CHECK(error_code([] {
              io::map_from_json(io::parse(
                  R"({"degree":3,"components":[{"vars":2,"degree":2,"terms":[[[2,0],"1"]]},{"vars":2,"degree":2,"terms":[[[0,2],"1"]]}]})"));
          }) == "schema-violation");
    CHECK(error_code([] { io::map_from_json(io::parse(R"({"components":[{"vars":2,"degree":1,"terms":[[[1,0],"1"]]}],"regularity":"maybe"})")); }) ==
          "schema-violation");
    CHECK(error_code([] { io::group_from_json(io::parse(R"({"generators":[["1","0","0"]]})")); }) == "schema-violation");
    CHECK(error_code([] { io::group_from_json(io::parse(R"({"generators":[["1","1","0","1"]],"cap":20})")); }) ==
          "group-too-large");
    CHECK(error_code([] { io::matrix_from_json(io::parse(R"({"rows":[["1","2"],["3"]]})")); }) == "schema-violation");
}
