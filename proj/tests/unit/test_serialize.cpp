#include "doctest.h"
#include "rsdeep/error.hpp"
#include "rsdeep/serialize.hpp"

using namespace rsdeep;

TEST_CASE("field tower roundtrip") {
  FieldCtx f81 = standard_extension(standard_field(9), 2);
  json j = field_to_json(f81);
  CHECK(j["p"] == 3);
  CHECK(j["tower"].size() == 2);
  CHECK(j["tower"][0] == json::array({1, 0, 1}));
  FieldCtx back = field_from_json(j);
  CHECK(back.order() == 81);
  CHECK(field_to_json(back) == j);
  for (Index a = 0; a < 81; ++a)
    for (Index b = 0; b < 81; b += 7) CHECK(back.mul(a, b) == f81.mul(a, b));
}

TEST_CASE("rational roundtrip") {
  mpq_class v(mpz_class("-123456789012345678901234567890"), mpz_class("11"));
  v.canonicalize();
  CHECK(rational_from_json(rational_to_json(v)) == v);
  CHECK_THROWS_AS(rational_from_json(json{{"num", "1"}, {"den", "0"}}), Error);
}

TEST_CASE("center record roundtrip and tamper detection") {
  FieldCtx f5 = make_prime_field(5);
  FieldCtx ext = standard_extension(f5, 2);
  DeepBallParams params(ext, Poly(f5, {3, 4}), 3);
  json j = center_to_json(params, build_center(params));
  CenterRecord back = center_from_json(j);
  CHECK(center_to_json(back.params, back.center) == j);
  CHECK(j["radius"] == 2);

  json bad = j;
  bad["center"][0] = (bad["center"][0].get<int>() + 1) % 5;
  CHECK_THROWS_AS(center_from_json(bad), Error);
  bad = j;
  bad["k"] = 2;
  CHECK_THROWS_AS(center_from_json(bad), Error);
  CHECK_THROWS_AS(center_from_json(json{{"field", 3}}), Error);
}

TEST_CASE("construction record roundtrip") {
  ConstructionRecord rec = construct_composite(3, 2, mpq_class(1, 2), 2);
  json j = record_to_json(rec);
  CHECK(j["mode"] == "composite");
  CHECK(j["eps"]["exact"] == true);
  ConstructionRecord back = record_from_json(j);
  CHECK(record_to_json(back) == j);
  CHECK(center_matches(back));

  ConstructionRecord t13 = construct_thm13(3, mpq_class(3, 4));
  json k = record_to_json(t13);
  CHECK(k["h_form"] == "2/eps");
  CHECK(record_to_json(record_from_json(k)) == k);

  ConstructionRecord t12 = thm12_parameters(269, mpq_class(1, 2));
  json l = record_to_json(t12);
  CHECK(l["eps"]["exact"] == false);
  CHECK(record_to_json(record_from_json(l)) == l);

  json broken = j;
  broken["mode"] = "other";
  CHECK_THROWS_AS(record_from_json(broken), Error);
}
