#include "doctest.h"

#include "taftcross/io.hpp"

using namespace taftcross;

TEST_CASE("scalar json") {
  const CycScalar z = root_of_unity(12, 5) * CycScalar(parse_rational("-3/7")) + CycScalar(2);
  const Json j = to_json(z);
  CHECK(j["order"] == 12);
  CHECK(j["coeffs"].size() == static_cast<std::size_t>(euler_phi(12)));
  CHECK(cyc_from_json(j) == z);
  CHECK(cyc_from_json(Json::parse(j.dump())) == z);

  const Json half = to_json(CycScalar(parse_rational("1/2")));
  CHECK(half.dump() == R"({"order":1,"coeffs":[["1","2"]]})");

  const BigInt big = BigInt(1) << 200;
  const CycScalar b(BigRational(big, 3));
  CHECK(cyc_from_json(to_json(b)) == b);
  CHECK_THROWS(cyc_from_json(Json::parse(R"({"order":1,"coeffs":[["1","0"]]})")));
}

TEST_CASE("Taft element json") {
  const TaftDescriptor d(3, root_of_unity(3, 1));
  const TaftElement e = TaftElement::monomial(d, 2, 1, root_of_unity(3, 2)) - TaftElement::x(d) + TaftElement::one(d);
  const Json j = to_json(e);
  CHECK(j["m"] == 3);
  CHECK(j["terms"].size() == 3);
  CHECK(j["terms"][2]["i"] == 2);
  CHECK(j["terms"][2]["j"] == 1);
  CHECK(taft_element_from_json(j) == e);
}

TEST_CASE("Hopf structure json round trip") {
  const PresentationParams p =
      PresentationParams::t_sigma(2, 4, CycScalar(-1), root_of_unity(4, 1), CycScalar(-1));
  const HopfStructure h = presentation(p);
  const Json j = to_json(h);
  CHECK(j["dim"] == 64);
  CHECK(j["basis"][5] == Json::array({0, 0, 1, 1}));
  const HopfStructure back = hopf_from_json(Json::parse(j.dump()));
  CHECK(structures_equal(h, back));
  CHECK(back.unit == h.unit);
  CHECK(to_json(back).dump() == j.dump());

  // lexicographic order of the multiplication table
  const Json& mult = j["mult"];
  bool sorted = true;
  for (std::size_t i = 1; i < mult.size(); ++i) {
    const auto key = [&](std::size_t k) {
      return std::array<Index, 3>{mult[k][0].get<Index>(), mult[k][1].get<Index>(), mult[k][2].get<Index>()};
    };
    if (!(key(i - 1) < key(i))) sorted = false;
  }
  CHECK(sorted);
}

TEST_CASE("matched pair and report json") {
  const MatchedPair mp = family_alpha(3, root_of_unity(3, 1), CycScalar(2));
  const Json j = to_json(mp);
  CHECK(j["family"] == "alpha");
  CHECK(j["n"] == 3);
  CHECK(cyc_from_json(j["param"]) == CycScalar(2));
  CHECK(sparse_from_json(j["tables"]["right"]["x<|X"]) == mp.generators()->right[1][1]);
  CHECK(j["tables"]["left"].size() == 4);

  AxiomReport r;
  r.record_check("assoc", 3);
  r.record_failure({"assoc", {"X", "x", "H"}, "2*H"});
  const Json rj = to_json(r);
  CHECK(rj["pass"] == false);
  CHECK(rj["checks"]["assoc"] == 3);
  CHECK(rj["failures"][0]["location"][2] == "H");
}
