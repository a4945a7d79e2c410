#include <string>
#include <vector>

#include <doctest.h>

#include "ck/diagram.hpp"
#include "ck/error.hpp"
#include "ck/json_io.hpp"
#include "ck/labeling.hpp"
#include "ck/moves.hpp"
#include "ck/xmod.hpp"
#include "test_util.hpp"

using namespace ck;

namespace {

template <typename F>
std::string thrown_parse_kind(F&& body) {
  try {
    body();
  } catch (const CkError& e) {
    return e.kind();
  }
  return "";
}

// dump -> parse -> dump must reproduce the first rendering byte for byte
template <typename T, typename ToJson, typename FromJson>
void round_trip(const T& value, ToJson&& to, FromJson&& from) {
  std::string first = dump_json(to(value));
  T back = from(parse_json(first));
  CHECK(dump_json(to(back)) == first);
}

}  // namespace

TEST_SUITE("json_io") {

TEST_CASE("fields round trip") {
  round_trip(Field::rationals(), field_to_json, field_from_json);
  round_trip(Field::prime(5), field_to_json, field_from_json);
  CHECK(thrown_parse_kind([] { field_from_json(parse_json("\"R\"")); }) == "ParseError");
  CHECK(thrown_parse_kind([] { field_from_json(parse_json("{\"Fp\": 4}")); }) ==
        "ParseError");
  CHECK(thrown_parse_kind([] { field_from_json(parse_json("{\"Fp\": 1}")); }) ==
        "ParseError");
}

TEST_CASE("groups round trip") {
  round_trip(FiniteGroup::symmetric(3), group_to_json, group_from_json);
  round_trip(FiniteGroup::cyclic(6), group_to_json, group_from_json);
  round_trip(FiniteGroup::trivial(), group_to_json, group_from_json);
}

TEST_CASE("group parsing accepts missing format and rejects other versions") {
  Json j = group_to_json(FiniteGroup::cyclic(3));
  j.erase("format");
  CHECK(group_from_json(j).order() == 3);
  j["format"] = 2;
  CHECK(thrown_parse_kind([&] { group_from_json(j); }) == "ParseError");
}

TEST_CASE("group parsing names schema defects") {
  Json j = group_to_json(FiniteGroup::cyclic(3));
  SUBCASE("missing table") {
    j.erase("table");
    CHECK(thrown_parse_kind([&] { group_from_json(j); }) == "ParseError");
  }
  SUBCASE("order disagrees with table") {
    j["order"] = 4;
    CHECK(thrown_parse_kind([&] { group_from_json(j); }) == "ParseError");
  }
  SUBCASE("non-integer entry") {
    j["table"][0][0] = "x";
    CHECK(thrown_parse_kind([&] { group_from_json(j); }) == "ParseError");
  }
  SUBCASE("broken table is rejected at construction") {
    j["table"][0][0] = 1;
    CHECK(thrown_parse_kind([&] { group_from_json(j); }) == "ParseError");
  }
}

TEST_CASE("crossed modules round trip") {
  round_trip(xmod_z4_z2(), xmod_to_json, xmod_from_json);
  round_trip(xmod_to_1(FiniteGroup::cyclic(6)), xmod_to_json, xmod_from_json);
  round_trip(xmod_one_to(FiniteGroup::symmetric(3)), xmod_to_json, xmod_from_json);
  round_trip(xmod_trivial(), xmod_to_json, xmod_from_json);
}

TEST_CASE("crossed module parsing rejects out-of-range indices") {
  Json j = xmod_to_json(xmod_z4_z2());
  SUBCASE("chi entry") {
    j["chi"][0] = 7;
    CHECK(thrown_parse_kind([&] { xmod_from_json(j); }) == "ParseError");
  }
  SUBCASE("chi length") {
    j["chi"].push_back(0);
    CHECK(thrown_parse_kind([&] { xmod_from_json(j); }) == "ParseError");
  }
  SUBCASE("action entry") {
    j["action"][0][0] = -1;
    CHECK(thrown_parse_kind([&] { xmod_from_json(j); }) == "ParseError");
  }
}

TEST_CASE("diagrams round trip") {
  round_trip(build_lens(5, 2), diagram_to_json, diagram_from_json);
  round_trip(build_lens(1, 1), diagram_to_json, diagram_from_json);
  round_trip(build_poincare(), diagram_to_json, diagram_from_json);
}

TEST_CASE("diagram parsing names schema defects") {
  Json j = diagram_to_json(build_lens(2, 1));
  SUBCASE("sign outside one") {
    j["uppers"][0]["points"][0]["sign"] = 0;
    CHECK(thrown_parse_kind([&] { diagram_from_json(j); }) == "ParseError");
  }
  SUBCASE("missing lowers") {
    j.erase("lowers");
    CHECK(thrown_parse_kind([&] { diagram_from_json(j); }) == "ParseError");
  }
  SUBCASE("taut eps") {
    j["tauts"][0]["factors"][0]["eps"] = 2;
    CHECK(thrown_parse_kind([&] { diagram_from_json(j); }) == "ParseError");
  }
  SUBCASE("point id type") {
    j["lowers"][0]["points"][0] = "p";
    CHECK(thrown_parse_kind([&] { diagram_from_json(j); }) == "ParseError");
  }
}

TEST_CASE("labelings round trip") {
  auto labs = enumerate_labelings(build_lens(4, 1), xmod_z4_z2());
  REQUIRE(!labs.empty());
  round_trip(labs.front(), labeling_to_json, labeling_from_json);
  round_trip(labs.back(), labeling_to_json, labeling_from_json);

  Json j = labeling_to_json(labs.front());
  j["alpha"]["u"] = "x";
  CHECK(thrown_parse_kind([&] { labeling_from_json(j); }) == "ParseError");
}

TEST_CASE("hopf data round trips including fraction constants") {
  round_trip(builtin_kp4(), hopf_to_json, hopf_from_json);
  round_trip(builtin_kp4(Field::prime(5)), hopf_to_json, hopf_from_json);
  round_trip(builtin_group_algebra(Field::rationals(), FiniteGroup::symmetric(3)),
             hopf_to_json, hopf_from_json);

  Field f7 = Field::prime(7);
  FiniteGroup z3 = FiniteGroup::cyclic(3);
  Mat omega = zero_mat(f7, 3, 3);
  for (int g = 0; g < 3; ++g)
    for (int e = 0; e < 3; ++e)
      omega[g][e] = Scalar::from_int(f7, 1 << ((g * e) % 3));
  round_trip(builtin_group_algebra(f7, z3, z3, omega), hopf_to_json, hopf_from_json);
}

TEST_CASE("hopf parsing names schema defects") {
  Json j = hopf_to_json(builtin_kp4());
  SUBCASE("bad scalar") {
    j["counit"][0] = "abc";
    CHECK(thrown_parse_kind([&] { hopf_from_json(j); }) == "ParseError");
  }
  SUBCASE("bad pair key") {
    Json m = j["coproduct"]["0,0"];
    j["coproduct"].erase("0,0");
    j["coproduct"]["0;0"] = m;
    CHECK(thrown_parse_kind([&] { hopf_from_json(j); }) == "ParseError");
  }
  SUBCASE("pair key out of range") {
    Json m = j["coproduct"]["0,0"];
    j["coproduct"]["0,9"] = m;
    CHECK(thrown_parse_kind([&] { hopf_from_json(j); }) == "ParseError");
  }
  SUBCASE("repeated grading") {
    j["components"][1]["grading"] = 0;
    CHECK(thrown_parse_kind([&] { hopf_from_json(j); }) == "ParseError");
  }
  SUBCASE("unit length") {
    j["components"][0]["unit"].push_back("0");
    CHECK(thrown_parse_kind([&] { hopf_from_json(j); }) == "ParseError");
  }
  SUBCASE("ragged matrix") {
    j["antipode"]["0"][0].push_back("0");
    CHECK(thrown_parse_kind([&] { hopf_from_json(j); }) == "ParseError");
  }
}

TEST_CASE("words round trip") {
  Word w = ckt::make_word({{"u1", 1}, {"u2", -1}, {"u1", 1}});
  std::string first = dump_json(word_to_json(w));
  CHECK(dump_json(word_to_json(word_from_json(parse_json(first)))) == first);

  CHECK(thrown_parse_kind([] { word_from_json(parse_json("[[\"u\"]]")); }) ==
        "ParseError");
  CHECK(thrown_parse_kind([] { word_from_json(parse_json("[[\"u\", 2]]")); }) ==
        "ParseError");
}

TEST_CASE("every move descriptor round trips") {
  Word r = ckt::make_word({{"u", 1}});
  std::vector<MoveDescriptor> script = {
      MvRename{"upper", "u", "v"},
      MvRenamePoint{1, 50},
      MvRotateUpper{"u", 2},
      MvRotateTaut{"s", 1},
      MvRebaseTaut{"s", "c", r},
      MvBasepoint{"l", 1},
      MvReverseUpper{"u"},
      MvReverseLower{"l"},
      MvTwoPoint{"u", "l", 0, 1, 1, 90, 91},
      MvStabilize{"s", 0, r, 1, "nu", "nl", 92},
      MvDestabilize{"nu", "nl"},
      MvSlideUpper{"u1", "u2", 1, {60, 61}},
      MvSlideLower{"l1", "l2", {70, 71}},
      MvTrivialUpper{"c", true, 1, "t", "c2"},
      MvRemoveTrivialUpper{"t"},
      MvTrivialLower{"s", 0, r, -1, "m", "s2"},
      MvRemoveTrivialLower{"m"},
  };
  for (const auto& mv : script) {
    CAPTURE(move_name(mv));
    std::string first = dump_json(move_to_json(mv));
    CHECK(dump_json(move_to_json(move_from_json(parse_json(first)))) == first);
  }

  std::string all = dump_json(moves_to_json(script));
  auto back = moves_from_json(parse_json(all));
  CHECK(dump_json(moves_to_json(back)) == all);
}

TEST_CASE("move scripts accept a bare array") {
  std::vector<MoveDescriptor> script = {MvBasepoint{"l", 2}};
  Json with_envelope = moves_to_json(script);
  Json bare = with_envelope["moves"];
  auto parsed = moves_from_json(bare);
  REQUIRE(parsed.size() == 1);
  CHECK(move_name(parsed[0]) == "basepoint");

  CHECK(thrown_parse_kind([] {
          move_from_json(parse_json("{\"move\": \"teleport\"}"));
        }) == "ParseError");
}

TEST_CASE("malformed text fails with ParseError") {
  CHECK(thrown_parse_kind([] { parse_json("{"); }) == "ParseError");
  CHECK(thrown_parse_kind([] { parse_json(""); }) == "ParseError");
  CHECK(thrown_parse_kind([] { diagram_from_json(parse_json("[1, 2]")); }) ==
        "ParseError");
}

TEST_CASE("canonical rendering is deterministic") {
  Json j = diagram_to_json(build_poincare());
  CHECK(dump_json(j) == dump_json(j));
  std::string s = dump_json(j);
  CHECK(!s.empty());
  CHECK(s.back() == '\n');
}

}
