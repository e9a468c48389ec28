#include "helpers.hpp"

using namespace testing;

TEST_CASE("element encoding") {
  const Json sym = to_json(diag({4, 2}));
  CHECK(sym.dump() == R"({"algebra":{"kind":"sym","n":2},"data":[[4.0,0.0],[0.0,2.0]]})");
  CHECK(to_json(vec({1, 2})).dump() == R"({"algebra":{"kind":"vector","n":2},"data":[1.0,2.0]})");
  CHECK(to_json(spin({1, 0}, 3)).dump() == R"({"algebra":{"dim":2,"kind":"spin"},"data":{"h":[1.0,0.0],"t":3.0}})");

  const Json sum = Json::parse(R"({"algebra":{"kind":"sum","parts":[{"kind":"vector","n":1},{"kind":"spin","dim":1}]},
                                   "data":[[2],{"h":[0.5],"t":1}]})");
  const Element s = element_from_json(sum);
  CHECK(s.algebra() == sum_of({Algebra::vector(1), Algebra::spin(1)}));
  CHECK(s.component(1).spin_scalar() == 1.0);
}

TEST_CASE("elements round-trip bit-exactly") {
  Rng rng(60);
  for (const Algebra& alg : {Algebra::sym(3), Algebra::spin(2), Algebra::vector(4),
                             sum_of({Algebra::sym(2), Algebra::spin(3), Algebra::vector(1)})}) {
    for (int k = 0; k < 10; ++k) {
      const Element a = random_interior(alg, rng, 3.0);
      const Element back = element_from_json(Json::parse(to_json(a).dump()));
      CHECK(back.algebra() == a.algebra());
      CHECK((back.storage().array() == a.storage().array()).all());
    }
  }
}

TEST_CASE("malformed elements") {
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"algebra":{"kind":"sym","n":2},"data":[[1,0]]})")), InvalidInput);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"algebra":{"kind":"sym","n":2}})")), InvalidInput);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"algebra":{"kind":"cube","n":2},"data":[]})")), InvalidInput);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"algebra":{"kind":"vector","n":0},"data":[]})")), InvalidInput);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"algebra":{"kind":"vector","n":2},"data":[1,"x"]})")), InvalidInput);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"algebra":{"kind":"spin","dim":1},"data":{"h":[1]}})")), InvalidInput);
}

TEST_CASE("descriptor encoding round-trips") {
  Rng rng(61);
  const Algebra alg = sum_of({Algebra::sym(2), Algebra::sym(2), Algebra::spin(2)});
  for (Metric m : {Metric::Thompson, Metric::Hilbert}) {
    const IsometryDescriptor d = random_descriptor(alg, m, rng);
    const IsometryDescriptor back = descriptor_from_json(Json::parse(to_json(d).dump()));
    CHECK(back.metric == d.metric);
    CHECK(gap(back.b, d.b) == 0.0);
    CHECK(back.epsilon == d.epsilon);
    CHECK(back.p.has_value() == d.p.has_value());
    CHECK((jordan_iso_matrix(back.iso, alg) - jordan_iso_matrix(d.iso, alg)).cwiseAbs().maxCoeff() == 0.0);
  }
  CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"metric":"H","b":{"algebra":{"kind":"vector","n":2},"data":[1,1]},"epsilon":2})")),
                  InvalidInput);
  CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"metric":"X","b":{"algebra":{"kind":"vector","n":2},"data":[1,1]}})")),
                  InvalidInput);
}

TEST_CASE("metric names") {
  CHECK(metric_from_string("thompson") == Metric::Thompson);
  CHECK(metric_from_string("T") == Metric::Thompson);
  CHECK(metric_from_string("Hilbert") == Metric::Hilbert);
  CHECK(metric_from_string("h") == Metric::Hilbert);
  CHECK_THROWS_AS(metric_from_string("euclid"), InvalidInput);
  CHECK(metric_name(Metric::Hilbert) == "H");
}

TEST_CASE("chain and frame encodings") {
  const ProjectionChain c{{diag({1, 0, 0}), diag({0, 1, 0})}};
  const Json j = to_json(c);
  REQUIRE(j["chain"].size() == 2);
  CHECK(element_from_json(j["chain"][1]).matrix()(1, 1) == 1.0);
  const Json f = to_json(spectral_decomposition(vec({3, 1})));
  CHECK(f["eigenvalues"] == Json::array({3.0, 1.0}));
}
