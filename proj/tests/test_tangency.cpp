#include "doctest.h"

#include "monoproj/monodromy.hpp"
#include "monoproj/parse.hpp"
#include "monoproj/tangency.hpp"

using namespace monoproj;

namespace {

Hypersurface curve(const std::string &text, int nvars = 3) {
  return Hypersurface(parse_hypersurface(text, nvars));
}

ProjectivePoint pt(const std::string &text) { return ProjectivePoint(parse_rational_list(text)); }

const char *const circle = "x^2+y^2-z^2";
const char *const nodal = "z*y^2-x^3-x^2*z";
const char *const cusp = "z*y^2-x^3";
const char *const fermat = "x^4+y^4+z^4";
const char *const generic_quartic = "x^4+2*x^3*y-3*x*y^2*z+y^4-x^2*z^2+5*y*z^3+2*z^4+x*y*z^2";

} // namespace

TEST_CASE("intersection_profile examples") {
  auto tangent = intersection_profile(curve(circle), pt("0,1,1"), pt("1,0,0"));
  REQUIRE(tangent.points.size() == 1);
  CHECK(tangent.points[0].multiplicity == 2);
  CHECK(*tangent.points[0].exact == pt("0,1,1"));
  CHECK(tangent.beta() == 1);

  auto secant = intersection_profile(curve(circle), pt("1,0,0"), pt("0,0,1"));
  CHECK(secant.points.size() == 2);
  CHECK(secant.beta() == 0);
  CHECK(secant.degree() == 2);

  auto c = intersection_profile(curve(cusp), pt("0,0,1"), pt("1,0,0"));
  REQUIRE(c.points.size() == 1);
  CHECK(c.points[0].multiplicity == 3);
  CHECK(c.points[0].singular());
  CHECK(c.beta() == 2);

  CHECK_THROWS_AS(intersection_profile(curve("x*y"), pt("0,1,0"), pt("0,0,1")), GeometryError);
}

TEST_CASE("beta and contact order") {
  CHECK(beta(curve(circle), pt("0,1,1"), pt("1,0,0")) == 1);
  CHECK(beta(curve(nodal), pt("0,0,1"), pt("1,3,0")) == 1);
  // Two nodes at (0:0:1) and (0:1:0), joined by x = 0.
  CHECK(beta(curve("x^2*y^2+y^2*z^2+z^2*x^2"), pt("0,0,1"), pt("0,1,0")) == 2);
  CHECK(contact_order(curve(circle), pt("0,1,1"), pt("1,0,0"), pt("0,1,1")) == 1);
  CHECK(contact_order(curve(nodal), pt("0,0,1"), pt("1,3,0"), pt("0,0,1")) == 1);
  CHECK_THROWS_AS(contact_order(curve(circle), pt("0,1,1"), pt("1,0,0"), pt("0,0,1")),
                  GeometryError);
}

TEST_CASE("beta over random lines") {
  for (const char *text : {circle, nodal, cusp, fermat, generic_quartic}) {
    const auto x = curve(text);
    std::uint64_t state = 12345;
    auto next = [&] {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      return static_cast<long>((state >> 33) % 13) - 6;
    };
    for (int i = 0; i < 200; ++i) {
      std::vector<Rational> a{next(), next(), next()}, b{next(), next(), next()};
      if (a == std::vector<Rational>{0, 0, 0} || b == std::vector<Rational>{0, 0, 0})
        continue;
      if (ProjectivePoint(a) == ProjectivePoint(b))
        continue;
      const auto prof = intersection_profile(x, ProjectivePoint(a), ProjectivePoint(b));
      CHECK(prof.degree() == x.degree());
      CHECK(prof.beta() == x.degree() - static_cast<int>(prof.points.size()));
    }
  }
}

TEST_CASE("classify_line") {
  auto cls = [](const char *f, const char *a, const char *b) {
    return classify_line(intersection_profile(curve(f), pt(a), pt(b)).points);
  };
  // Bitangent z = 0 touching at (1:1:0) and (1:-1:0).
  CHECK(cls("(x^2-y^2)^2+z*(x^3+2*y^3+z^3)", "1,0,0", "0,1,0") == LineClass::C1);
  // x = 0 passes through the node (0:0:1) and touches at (0:1:1).
  CHECK(cls("y^4-2*y^3*z+y^2*z^2-x^2*z^2+x^3*z+x^4+x*y^3", "0,0,1", "0,1,0") == LineClass::C2);
  CHECK(cls("x^2*y^2+y^2*z^2+z^2*x^2", "0,0,1", "0,1,0") == LineClass::C3);
  CHECK(cls(nodal, "0,0,1", "1,1,0") == LineClass::C4);
  CHECK(cls(cusp, "0,0,1", "1,0,0") == LineClass::C4);
  CHECK(cls(circle, "0,1,1", "1,0,0") == LineClass::none);
}

TEST_CASE("multitangent lines through a point") {
  auto c = multitangent_lines_through(curve(circle), pt("0,0,1"), 1);
  CHECK(c.records.size() == 2);
  for (const auto &r : c.records) {
    CHECK(r.beta == 1);
    CHECK_FALSE(r.in_v);
  }
  CHECK(c.v_size() == 0);

  auto f = multitangent_lines_through(curve(fermat), pt("1,0,0"), 1);
  REQUIRE(f.records.size() == 4);
  for (const auto &r : f.records) {
    CHECK(r.beta == 3);
    CHECK(r.in_v);
    CHECK(r.line_class == LineClass::C1);
  }
  CHECK(f.v_size() == 4);

  auto g = multitangent_lines_through(curve(generic_quartic), pt("3,-2,7"), 1);
  CHECK(g.records.size() == 12);
  CHECK(g.v_size() == 0);
}

TEST_CASE("inner centre records") {
  auto c = multitangent_lines_through(curve(circle), pt("0,1,1"), 1);
  REQUIRE(c.records.size() == 1);
  CHECK(c.records[0].tangent_at_center);
  CHECK(c.records[0].center_contribution == 1);
  CHECK(c.records[0].beta_minus_center == 0);
  CHECK_FALSE(c.records[0].in_v);

  // Flex of a cubic: the tangent at P meets only P, with multiplicity 3.
  auto flex = multitangent_lines_through(curve("y^2*z-x^3-x*z^2-z^3"), pt("0,1,0"), 1);
  int at_centre = 0;
  for (const auto &r : flex.records)
    if (r.tangent_at_center) {
      ++at_centre;
      CHECK(r.center_contribution == 2);
      CHECK(r.beta_minus_center == 0);
      CHECK_FALSE(r.in_v);
    }
  CHECK(at_centre == 1);
}

TEST_CASE("contained line on a cone") {
  auto r = multitangent_lines_through(curve("x*y"), pt("0,1,1"), 1);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].contained);
  CHECK_FALSE(r.records[0].in_v);
  CHECK(r.v_size() == 0);
}

TEST_CASE("tangent lines match branch points") {
  for (const char *text : {circle, fermat, generic_quartic, nodal}) {
    const auto x = curve(text);
    const auto p = pt("3,-2,7");
    auto tang = multitangent_lines_through(x, p, 21);
    auto setup = setup_projection(x, p, 21);
    auto bps = branch_points(setup);
    REQUIRE(tang.records.size() == bps.size());
    for (std::size_t i = 0; i < bps.size(); ++i) {
      CHECK(std::abs(tang.records[i].parameter.approx() - bps[i].parameter.approx()) < 1e-8);
      CHECK(tang.records[i].parameter.exact == bps[i].parameter.exact);
    }
  }
}

TEST_CASE("simple tangency gives a transposition") {
  const auto x = curve(generic_quartic);
  auto tang = multitangent_lines_through(x, pt("3,-2,7"), 2);
  MonodromyOptions o;
  o.seed = 2;
  auto mono = monodromy_group(setup_projection(x, pt("3,-2,7"), 2), o);
  for (const auto &b : mono.branch_points) {
    const auto it = std::find_if(tang.records.begin(), tang.records.end(), [&](const TangencyRecord &r) {
      return std::abs(r.parameter.approx() - b.parameter.approx()) < 1e-8;
    });
    REQUIRE(it != tang.records.end());
    CHECK(it->beta == 1);
    CHECK(b.cycle_type == std::vector<int>{2, 1, 1});
  }
}

TEST_CASE("tangent cone section check") {
  const auto n = curve(nodal);
  CHECK(tangent_cone_section_check(n, pt("0,0,1"), pt("1,1,0"), std::nullopt, 1).verified);
  CHECK(tangent_cone_section_check(n, pt("0,0,1"), pt("1,-1,0"), std::nullopt, 1).verified);
  CHECK(tangent_cone_section_check(curve(cusp), pt("0,0,1"), pt("1,0,0"), std::nullopt, 1).verified);
  CHECK_THROWS_AS(tangent_cone_section_check(n, pt("0,0,1"), pt("1,2,0"), std::nullopt, 1),
                  GeometryError);
  CHECK_THROWS_AS(tangent_cone_section_check(curve(circle), pt("0,1,1"), pt("1,0,0"), std::nullopt, 1),
                  GeometryError);

  // Surface with a node at (0:0:0:1) whose cone is x^2+y^2-z^2.
  const auto s = curve("w*(x^2+y^2-z^2)+x^3+y^3+z^3", 4);
  const std::vector<Rational> h{4, -3, 0, 0};
  auto res = tangent_cone_section_check(s, pt("0,0,0,1"), pt("3,4,5,0"), h, 9);
  CHECK(res.verified);
  CHECK(res.cone.multiplicity == 2);
  CHECK_THROWS_AS(tangent_cone_section_check(s, pt("0,0,0,1"), pt("3,4,5,0"),
                                             std::vector<Rational>{1, 0, 0, 0}, 9),
                  GeometryError);
}
