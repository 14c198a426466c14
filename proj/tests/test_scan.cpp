#include "doctest.h"

#include <algorithm>

#include "monoproj/parse.hpp"
#include "monoproj/scan.hpp"

using namespace monoproj;

namespace {

Hypersurface curve(const std::string &text) { return Hypersurface(parse_hypersurface(text, 3)); }

ProjectivePoint pt(const std::string &text) { return ProjectivePoint(parse_rational_list(text)); }

const char *const generic_quartic = "x^4+2*x^3*y-3*x*y^2*z+y^4-x^2*z^2+5*y*z^3+2*z^4+x*y*z^2";

ScanOptions options(std::uint64_t seed) {
  ScanOptions o;
  o.monodromy.seed = seed;
  return o;
}

} // namespace

TEST_CASE("grid specs") {
  auto g = parse_grid("-1:1:21");
  CHECK(g.values().size() == 21);
  CHECK(g.values().front() == -1);
  CHECK(g.values()[10] == 0);
  CHECK(parse_grid("0:1/2:3").values()[1] == make_rational(1, 4));
  CHECK(parse_grid("5:7:1").values() == std::vector<Rational>{5});
  CHECK_THROWS_AS(parse_grid("0:1"), ParseError);
  CHECK_THROWS_AS(parse_grid("0:1:x"), ParseError);
}

TEST_CASE("prefilter examples") {
  CHECK_FALSE(prefilter_point(curve("x^2+y^2-z^2"), pt("0,0,1"), 1).pass);
  CHECK_FALSE(prefilter_point(curve("x^2+y^2-z^2"), pt("3,4,5"), 1).pass);
  auto f = prefilter_point(curve("x^4+y^4+z^4"), pt("1,0,0"), 1);
  CHECK(f.pass);
  CHECK(f.v_size == 4);
  CHECK_FALSE(prefilter_point(curve(generic_quartic), pt("3,-2,7"), 1).pass);
}

TEST_CASE("inner samples are smooth rational points") {
  const auto x = curve("x^2+y^2-z^2");
  auto pts = sample_inner_points(x, 50, 4);
  CHECK(pts.size() == 50);
  for (const auto &p : pts) {
    CHECK(x.contains(p));
    CHECK_FALSE(x.is_singular_at(p));
  }
  CHECK(sample_inner_points(x, 50, 4) == pts);
}

TEST_CASE("conic scan is empty") {
  ScanRegion region;
  region.grid = parse_grid("-1:1:7");
  region.inner_samples = 10;
  auto rep = scan_region(curve("x^2+y^2-z^2"), region, options(3));
  CHECK(rep.summary.inner_found == 10);
  CHECK(rep.summary.points <= 49 + 10);
  CHECK(rep.summary.points >= 49);
  CHECK(rep.summary.non_uniform == 0);
  CHECK(rep.summary.candidates == 0);
  CHECK(rep.summary.errors == 0);
  for (const auto &r : rep.records) {
    CHECK(r.status == "uniform");
    CHECK(r.degenerate_galois);
  }
}

TEST_CASE("Fermat quartic non-uniform grid points") {
  ScanRegion region;
  region.grid = parse_grid("-1:1:3");
  region.extra_points = {pt("1,0,0"), pt("0,1,0")};
  const auto x = curve("x^4+y^4+z^4");
  auto rep = scan_region(x, region, options(5));
  CHECK(rep.summary.points == 11);
  std::vector<ProjectivePoint> non_uniform;
  for (const auto &r : rep.records)
    if (r.status == "non_uniform")
      non_uniform.push_back(r.point);
  // The vertices, plus the four points (+-1:0:1), (0:+-1:1) where the
  // projection factors through a double cover.
  const std::vector<ProjectivePoint> expected = {pt("0,0,1"), pt("0,1,0"), pt("1,0,0"),
                                                 pt("1,0,1"), pt("-1,0,1"), pt("0,1,1"),
                                                 pt("0,-1,1")};
  CHECK(non_uniform.size() == expected.size());
  for (const auto &q : expected)
    CHECK(std::find(non_uniform.begin(), non_uniform.end(), q) != non_uniform.end());
  for (const auto &r : rep.records)
    if (r.status == "non_uniform" && *r.order == 8)
      CHECK(to_string(*r.group_class) == "imprimitive");
  auto galois = galois_search(x, region, options(5));
  CHECK(galois.size() == 3);
  for (const auto &r : galois)
    CHECK(*r.order == 4);
}

TEST_CASE("scan determinism and cross-check") {
  ScanRegion region;
  region.random_samples = 6;
  auto o = options(17);
  o.cross_check_fraction = 1.0;
  const auto x = curve(generic_quartic);
  auto a = scan_region(x, region, o);
  auto b = scan_region(x, region, o);
  REQUIRE(a.records.size() == 6);
  CHECK(a.summary.non_uniform == 0);
  CHECK(a.summary.cross_checked == 6);
  CHECK(a.summary.soundness_violations == 0);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].point == b.records[i].point);
    CHECK(a.records[i].status == b.records[i].status);
  }
}

TEST_CASE("singular points are excluded") {
  ScanRegion region;
  region.extra_points = {pt("0,0,1")};
  auto rep = scan_region(curve("z*y^2-x^3-x^2*z"), region, options(1));
  REQUIRE(rep.records.size() == 1);
  CHECK(rep.records[0].status == "excluded");
}
