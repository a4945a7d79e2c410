#include <doctest.h>

#include <string>
#include <vector>

#include "ck/diagram.hpp"
#include "ck/error.hpp"
#include "test_util.hpp"

using namespace ck;
using ckt::make_word;
using ckt::mentions;

namespace {

// lens diagram plus a crossing-free upper to a second component
HeegaardDiagram lens_with_spur() {
  HeegaardDiagram d = build_lens(2, 1);
  d.components.push_back("c2");
  d.uppers.push_back({"t", "c", "c2", {}});
  return d;
}

}  // namespace

TEST_SUITE_BEGIN("diagram");

TEST_CASE("builders produce valid diagrams") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 2}, {7, 3}, {8, 3}, {12, 5}}) {
    CAPTURE(p);
    CAPTURE(q);
    HeegaardDiagram d = build_lens(p, q);
    CHECK(validate(d).empty());
    CHECK(d.genus == 1);
    CHECK(d.upper("u").points.size() == static_cast<size_t>(p));
  }
  CHECK(validate(build_poincare()).empty());
  CHECK(validate(build_s3()).empty());
  CHECK(validate(lens_with_spur()).empty());
}

TEST_CASE("lens parameter guard") {
  CHECK_THROWS_AS(build_lens(0, 1), CkError);
  CHECK_THROWS_AS(build_lens(4, 2), CkError);
  CHECK_THROWS_AS(build_lens(3, 3), CkError);
  CHECK_THROWS_AS(build_lens(5, 0), CkError);
  CHECK_THROWS_AS(build_lens(-3, 1), CkError);
}

TEST_CASE("omega reads crossings in lower order") {
  HeegaardDiagram lens = build_lens(5, 2);
  CHECK(omega(lens, "l") == make_word({{"u", 5}}));

  HeegaardDiagram poin = build_poincare();
  CHECK(omega(poin, "l1") ==
        make_word({{"u1", 4}, {"u2", -1}, {"u1", -1}, {"u2", -1}}));
  CHECK(omega(poin, "l2") ==
        make_word({{"u1", -1}, {"u2", -1}, {"u1", -1}, {"u2", 2}}));
}

TEST_CASE("word reduction and inversion") {
  Word w = make_word({{"u", 1}, {"u", -1}, {"v", 1}});
  CHECK(reduce(w) == make_word({{"v", 1}}));
  CHECK(reduce(Word{}).empty());
  CHECK(reduce(make_word({{"u", 3}, {"u", -3}})).empty());
  CHECK(inverse_word(make_word({{"u", 1}, {"v", -1}})) ==
        make_word({{"v", 1}, {"u", -1}}));
  // reduction cancels only adjacent inverse pairs
  Word mixed = make_word({{"u", 1}, {"v", 1}, {"v", -1}, {"u", 1}});
  CHECK(reduce(mixed) == make_word({{"u", 2}}));
}

TEST_CASE("walk follows typed edges") {
  HeegaardDiagram d = lens_with_spur();
  CHECK(walk(d, "c", make_word({{"u", 3}})) == "c");
  CHECK(walk(d, "c", make_word({{"t", 1}})) == "c2");
  CHECK(walk(d, "c2", make_word({{"t", -1}})) == "c");
  CHECK(walk(d, "c2", make_word({{"t", -1}, {"u", 1}, {"t", 1}})) == "c2");
  CHECK_THROWS_AS(walk(d, "c2", make_word({{"t", 1}})), CkError);
  CHECK_THROWS_AS(walk(d, "c", make_word({{"nope", 1}})), CkError);
}

TEST_CASE("validate names each defect") {
  {
    HeegaardDiagram d = build_lens(3, 1);
    d.components.push_back("c");
    CHECK(mentions(validate(d), "duplicate component id"));
  }
  {
    HeegaardDiagram d = build_lens(3, 1);
    d.uppers[0].points[0].sign = 2;
    CHECK(mentions(validate(d), "sign outside"));
  }
  {
    HeegaardDiagram d = build_lens(3, 1);
    d.uppers[0].points[1].id = d.uppers[0].points[0].id;
    CHECK(mentions(validate(d), "appears twice"));
  }
  {
    HeegaardDiagram d = build_lens(3, 1);
    d.lowers[0].points[2] = 99;
    CHECK(mentions(validate(d), "different point multisets"));
  }
  {
    HeegaardDiagram d = build_lens(3, 1);
    d.components.push_back("x");
    CHECK(mentions(validate(d), "component count"));
  }
  {
    HeegaardDiagram d = build_lens(3, 1);
    d.tauts.clear();
    CHECK(mentions(validate(d), "taut count"));
  }
  {
    HeegaardDiagram d = lens_with_spur();
    d.uppers[1].cplus = "c";
    auto report = validate(d);
    CHECK(mentions(report, "disconnected"));
  }
  {
    HeegaardDiagram d = build_lens(3, 1);
    d.tauts[0].factors[1].eps = 1;
    d.tauts[0].factors[0].eps = 1;
    CHECK(mentions(validate(d), "boundary triviality"));
  }
}

TEST_CASE("connected sum merges along chosen regions") {
  HeegaardDiagram a = build_lens(2, 1);
  HeegaardDiagram b = build_lens(3, 1);
  ConnectedSum cs = connected_sum(a, b, "c", "c", "s", "s");
  const HeegaardDiagram& d = cs.diagram;
  CHECK(validate(d).empty());
  CHECK(d.genus == 2);
  CHECK(d.uppers.size() == 2);
  CHECK(d.lowers.size() == 2);
  CHECK(d.tauts.size() == 1);
  CHECK(d.components.size() == 1);

  CircleId u2 = cs.uppers.at("u");
  CircleId l2 = cs.lowers.at("l");
  CHECK(u2 != "u");
  CHECK(l2 != "l");
  CHECK(omega(d, "l") == make_word({{"u", 2}}));
  CHECK(omega(d, l2) == Word(3, Letter{u2, 1}));
  // the second summand's points were relocated injectively
  CHECK(cs.points.size() == 3);

  CHECK_THROWS_AS(connected_sum(a, b, "c", "nope", "s", "s"), CkError);
  CHECK_THROWS_AS(connected_sum(a, b, "c", "c", "s", "nope"), CkError);
}

TEST_CASE("orientation reversal is a valid involution") {
  for (HeegaardDiagram d : {build_lens(5, 2), build_poincare()}) {
    HeegaardDiagram r = reverse_orientation(d);
    CHECK(validate(r).empty());
    CHECK(isomorphic(reverse_orientation(r), d));
  }
  // reversing flips every crossing sign
  HeegaardDiagram r5 = reverse_orientation(build_lens(5, 2));
  CHECK(omega(r5, "l") == make_word({{"u", -5}}));
}

TEST_CASE("isomorphism respects structure, not names") {
  HeegaardDiagram a = build_poincare();
  HeegaardDiagram b = build_poincare();
  CHECK(isomorphic(a, b));

  rename_component(b, "c", "middle");
  rename_upper(b, "u1", "x1");
  rename_upper(b, "u2", "x2");
  rename_lower(b, "l1", "y1");
  rename_lower(b, "l2", "y2");
  rename_region(b, "s", "r");
  for (int p = 1; p <= 12; ++p) rename_point(b, p, p + 100);
  CHECK(validate(b).empty());
  CHECK(isomorphic(a, b));

  CHECK_FALSE(isomorphic(build_lens(5, 2), build_lens(5, 3)));
  CHECK_FALSE(isomorphic(build_lens(2, 1), build_lens(3, 1)));
  CHECK_FALSE(isomorphic(build_lens(5, 2), build_poincare()));
}

TEST_CASE("renames demand fresh targets") {
  HeegaardDiagram d = build_poincare();
  CHECK_THROWS_AS(rename_upper(d, "u1", "u2"), CkError);
  CHECK_THROWS_AS(rename_point(d, 1, 2), CkError);
  CHECK_THROWS_AS(rename_lower(d, "nope", "l3"), CkError);
}

TEST_CASE("lookups fail on unknown ids") {
  HeegaardDiagram d = build_lens(3, 1);
  CHECK_THROWS_AS(d.upper("nope"), CkError);
  CHECK_THROWS_AS(d.lower("nope"), CkError);
  CHECK_THROWS_AS(d.taut("nope"), CkError);
  CHECK_THROWS_AS(d.locate_point(99), CkError);
  CHECK(d.locate_point(2).second->lower == "l");
  CHECK(d.find_upper("nope") == nullptr);
}

TEST_SUITE_END();
