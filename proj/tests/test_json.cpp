#include <gtest/gtest.h>

#include "support.hpp"

using namespace rds;
using namespace rds::test;
using Json = nlohmann::json;

TEST(Json, Rationals) {
  EXPECT_EQ(rds::json::encode(R("-6/4")), Json("-3/2"));
  EXPECT_EQ(rds::json::encode(Rational(5)), Json("5"));
  EXPECT_EQ(rds::json::decode_rational(Json("10/4")), R("5/2"));
  EXPECT_EQ(rds::json::decode_rational(Json(7)), Rational(7));
  EXPECT_EQ(code_of([] { rds::json::decode_rational(Json(0.5)); }), Errc::parse);
  EXPECT_EQ(code_of([] { rds::json::decode_rational(Json(nullptr)); }), Errc::parse);
  EXPECT_EQ(code_of([] { rds::json::decode_rational(Json("x")); }), Errc::parse);
}

TEST(Json, ImQuadElement) {
  const ImQuadElement z(7, R("1/2"), -3);
  const auto j = rds::json::encode(z);
  EXPECT_EQ(j, Json::parse(R"({"re":"1/2","im":"-3","k":7})"));
  EXPECT_EQ(rds::json::decode_imquad(j), z);
  EXPECT_THROW(rds::json::decode_imquad(Json::parse(R"({"re":"1","im":"1","k":8})")), Error);
}

TEST(Json, ConfigurationRoundTrip) {
  const Configuration c(3, {P("0", "0"), P("1", "0"), P("1/2", "-1/2")}, "label");
  const auto j = rds::json::encode(c);
  EXPECT_EQ(j["points"][2]["yc"], "-1/2");
  EXPECT_EQ(j["provenance"], "label");
  const auto back = rds::json::decode_configuration(Json::parse(j.dump()));
  EXPECT_EQ(back, c);
  EXPECT_EQ(back.provenance(), "label");
  EXPECT_EQ(code_of([] { rds::json::decode_configuration(Json::parse(R"({"points":[]})")); }), Errc::parse);
  EXPECT_EQ(code_of([] { rds::json::decode_configuration(Json::parse(R"({"k":1,"points":{}})")); }), Errc::parse);
  EXPECT_EQ(code_of([] { rds::json::decode_configuration(Json::parse(R"({"k":"1","points":[]})")); }), Errc::parse);
  EXPECT_EQ(code_of([] { rds::json::decode_configuration(Json::parse(R"({"k":1,"points":[{"x":"1"}]})")); }),
            Errc::parse);
}

TEST(Json, DistanceMatrixRoundTrip) {
  const auto m = distance_matrix(config(1, {P("0", "0"), P("3", "0"), P("0", "4")}));
  const auto j = rds::json::encode(m);
  EXPECT_EQ(j["squared"][1][2], "25");
  EXPECT_EQ(rds::json::decode_distance_matrix(j), m);
}

TEST(Json, CurveRoundTrip) {
  const auto j = Json::parse(R"({"degree":3,"monomials":[{"i":0,"j":2,"k":1,"c":"1"},{"i":3,"j":0,"k":0,"c":"-1/2"}]})");
  const auto c = rds::json::decode_curve(j);
  EXPECT_EQ(c.degree(), 3);
  EXPECT_EQ(c.poly().coefficient({3, 0, 0}), R("-1/2"));
  EXPECT_EQ(rds::json::decode_curve(rds::json::encode(c)), c);
  EXPECT_THROW(rds::json::decode_curve(Json::parse(R"({"degree":2,"monomials":[{"i":1,"j":0,"k":0,"c":"1"}]})")), Error);
  EXPECT_THROW(rds::json::decode_curve(Json::parse(R"({"degree":1,"monomials":[{"i":-1,"j":2,"k":0,"c":"1"}]})")), Error);
}

TEST(Json, LiftedPointAndCertificate) {
  const LiftedPoint p{{0, 0, 1, 0, 3, 4, 5}};
  EXPECT_EQ(rds::json::encode(p), Json::parse(R"(["0","0","1","0","3","4","5"])"));
  EXPECT_EQ(rds::json::decode_lifted_point(rds::json::encode(p)), p);
  const auto cert = rds::json::encode(certify_m(4));
  for (const char* key : {"m", "dim", "K_d", "records", "lhs", "rhs", "ample", "verdict", "reason"}) {
    EXPECT_TRUE(cert.contains(key)) << key;
  }
  EXPECT_EQ(cert["records"][0]["a"], "0");
  EXPECT_EQ(cert["records"][0]["e"], 2);
}

TEST(Json, SearchSpec) {
  SearchSpec s;
  s.k = 2;
  s.numerator_bound = 5;
  s.denominator_bound = 3;
  s.target_size = 4;
  s.require = Requirement::literal_general_position;
  EXPECT_EQ(rds::json::decode_search_spec(rds::json::encode(s)), s);
  const auto plain = rds::json::decode_search_spec(
      Json::parse(R"({"k":1,"numerator_bound":2,"denominator_bound":1,"target_size":3})"));
  EXPECT_EQ(plain.require, Requirement::any);
  EXPECT_EQ(code_of([] {
              rds::json::decode_search_spec(
                  Json::parse(R"({"k":1,"numerator_bound":2,"denominator_bound":1,"target_size":2})"));
            }),
            Errc::invalid_argument);
  EXPECT_EQ(code_of([] {
              rds::json::decode_search_spec(
                  Json::parse(R"({"k":1,"numerator_bound":2,"denominator_bound":1,"target_size":-3})"));
            }),
            Errc::parse);
}

TEST(Json, CheckpointRejectsBadRanges) {
  const auto base = Json::parse(
      R"({"spec":{"k":1,"numerator_bound":1,"denominator_bound":1,"target_size":3},"frontier":[],"found":[],"exhausted_ranges":[[3,1]]})");
  EXPECT_EQ(code_of([&] { rds::json::decode_checkpoint(base); }), Errc::parse);
}
