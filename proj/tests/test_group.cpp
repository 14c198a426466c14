#include "doctest.h"

#include <random>
#include <set>

#include "monoproj/group.hpp"

using namespace monoproj;

namespace {

Permutation cyc(const char *text, int d) { return Permutation::from_cycles(text, d); }

// Brute-force closure oracle, independent of the stabilizer chain.
std::size_t closure_order(int d, const std::vector<Permutation> &gens) {
  std::set<Permutation> seen{Permutation(d)};
  std::vector<Permutation> frontier{Permutation(d)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto &p : frontier)
      for (const auto &g : gens) {
        Permutation q = p * g;
        if (seen.insert(q).second)
          next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

Permutation random_perm(int d, std::mt19937_64 &rng) {
  std::vector<int> img(d);
  for (int i = 0; i < d; ++i)
    img[i] = i;
  for (int i = d - 1; i > 0; --i)
    std::swap(img[i], img[rng() % (i + 1)]);
  return Permutation(img);
}

} // namespace

TEST_CASE("cycle notation round trip and products") {
  auto p = cyc("(1 2)(3 4)", 4);
  CHECK(p.to_cycle_string() == "(1 2)(3 4)");
  CHECK(Permutation(4).to_cycle_string() == "()");
  CHECK(cyc("()", 3).is_identity());
  // Apply left factor first: (1 2) then (2 3) sends 1 -> 2 -> 3.
  auto q = cyc("(1 2)", 3) * cyc("(2 3)", 3);
  CHECK(q[0] == 2);
  CHECK(q.to_cycle_string() == "(1 3 2)");
  CHECK(cyc("(1 2 3 4)", 4).inverse() == cyc("(1 4 3 2)", 4));
  CHECK_THROWS(Permutation(std::vector<int>{0, 0, 1}));
  CHECK_THROWS(cyc("(1 5)", 4));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 30; ++t) {
    auto r = random_perm(7, rng);
    CHECK(Permutation::from_cycles(r.to_cycle_string(), 7) == r);
  }
}

TEST_CASE("cycle_type") {
  CHECK(cycle_type(cyc("(1 2)", 4)) == std::vector<int>{2, 1, 1});
  CHECK(cycle_type(cyc("(1 2 3 4)", 4)) == std::vector<int>{4});
  CHECK(cycle_type(Permutation(3)) == std::vector<int>{1, 1, 1});
}

TEST_CASE("group_from_generators examples") {
  GeneratedGroup s4(4, {cyc("(1 2)", 4), cyc("(1 2 3 4)", 4)});
  CHECK(s4.order() == 24);
  GeneratedGroup c4(4, {cyc("(1 2 3 4)", 4)});
  CHECK(c4.order() == 4);
  GeneratedGroup klein(4, {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)});
  CHECK(klein.order() == 4);
  CHECK_THROWS_AS(GeneratedGroup(4, {cyc("(1 2)", 3)}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratedGroup(65, {}), std::invalid_argument);
  GeneratedGroup trivial(3, {});
  CHECK(trivial.order() == 1);
  CHECK(s4.contains(cyc("(1 3)", 4)));
  CHECK_FALSE(c4.contains(cyc("(1 3)", 4)));
}

TEST_CASE("transitivity and primitivity") {
  GeneratedGroup s4(4, {cyc("(1 2)", 4), cyc("(1 2 3 4)", 4)});
  CHECK(s4.is_transitive());
  CHECK(is_primitive(s4));

  GeneratedGroup c4(4, {cyc("(1 2 3 4)", 4)});
  CHECK(c4.is_transitive());
  CHECK_FALSE(is_primitive(c4));
  auto blocks = find_block_system(c4);
  REQUIRE(blocks);
  CHECK(blocks->blocks == std::vector<std::vector<int>>{{0, 2}, {1, 3}});

  GeneratedGroup s2on3(3, {cyc("(1 2)", 3)});
  CHECK_FALSE(s2on3.is_transitive());
  CHECK_FALSE(is_primitive(s2on3));
}

TEST_CASE("classify") {
  auto s4 = classify(GeneratedGroup(4, {cyc("(1 2)", 4), cyc("(1 2 3 4)", 4)}));
  CHECK(s4.group_class == GroupClass::symmetric);
  CHECK(s4.contains_transposition);
  CHECK_FALSE(s4.regular);

  auto c4 = classify(GeneratedGroup(4, {cyc("(1 2 3 4)", 4)}));
  CHECK(c4.group_class == GroupClass::cyclic_regular);
  CHECK(c4.regular);
  CHECK(c4.order == 4);
  CHECK_FALSE(c4.contains_transposition);

  GeneratedGroup a4g(4, {cyc("(1 2 3)", 4), cyc("(2 3 4)", 4)});
  auto a4 = classify(a4g);
  CHECK(a4.group_class == GroupClass::alternating);
  CHECK(a4.order == 12);
  CHECK(closure_order(4, a4g.generators()) == 12);
  CHECK_FALSE(a4.contains_transposition);

  // Quaternion group acting regularly on 8 points.
  GeneratedGroup q8(8, {cyc("(1 2 4 7)(3 6 8 5)", 8), cyc("(1 3 4 8)(2 5 7 6)", 8)});
  auto q = classify(q8);
  CHECK(q.order == 8);
  CHECK(q.regular);
  CHECK(q.group_class == GroupClass::regular_nonabelian);

  auto klein = classify(GeneratedGroup(4, {cyc("(1 2)(3 4)", 4), cyc("(1 3)(2 4)", 4)}));
  CHECK(klein.regular);
  CHECK(klein.group_class == GroupClass::imprimitive);

  auto s2 = classify(GeneratedGroup(2, {cyc("(1 2)", 2)}));
  CHECK(s2.group_class == GroupClass::symmetric);
  CHECK(s2.regular);

  // D5 on 5 points: primitive, neither symmetric nor regular.
  auto d5 = classify(GeneratedGroup(5, {cyc("(1 2 3 4 5)", 5), cyc("(2 5)(3 4)", 5)}));
  CHECK(d5.group_class == GroupClass::other);
  CHECK(d5.primitive);

  // Transposition hidden behind non-transposition generators: S4 from
  // (1 2)(3 4 ...) style words.
  auto hidden = classify(GeneratedGroup(5, {cyc("(1 2)(3 4 5)", 5), cyc("(1 2 3 4 5)", 5)}));
  CHECK(hidden.contains_transposition);
}

TEST_CASE("BSGS order equals brute-force closure order") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 3 + static_cast<int>(rng() % 5);
    std::vector<Permutation> gens;
    const int ngens = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < ngens; ++k) {
      // Sparse generators keep many groups small and intransitive.
      Permutation p = random_perm(d, rng);
      if (rng() % 2)
        p = p * p;
      gens.push_back(p);
    }
    GeneratedGroup g(d, gens, rng());
    CHECK(g.order() == closure_order(d, gens));
    CHECK(factorial(d) % g.order() == 0);
    for (const auto &s : gens)
      CHECK(g.contains(s));
  }
}

TEST_CASE("classify is stable under conjugation and generator reordering") {
  std::mt19937_64 rng(77);
  const std::vector<std::vector<const char *>> families = {
      {"(1 2 3 4)"}, {"(1 2)", "(1 2 3 4)"}, {"(1 2 3)", "(2 3 4)"},
      {"(1 2)(3 4)", "(1 3)(2 4)"}, {"(1 2 3 4 5)", "(2 5)(3 4)"}};
  for (const auto &fam : families) {
    const int d = fam.size() == 2 && std::string(fam[0]) == "(1 2 3 4 5)" ? 5 : 4;
    std::vector<Permutation> gens;
    for (const char *c : fam)
      gens.push_back(cyc(c, d));
    auto base = classify(GeneratedGroup(d, gens));
    for (int t = 0; t < 5; ++t) {
      auto conj = random_perm(d, rng);
      std::vector<Permutation> cg;
      for (const auto &g : gens)
        cg.push_back(conj.inverse() * g * conj);
      std::reverse(cg.begin(), cg.end());
      auto other = classify(GeneratedGroup(d, cg, rng()));
      CHECK(other.group_class == base.group_class);
      CHECK(other.order == base.order);
      CHECK(other.regular == base.regular);
      CHECK(other.primitive == base.primitive);
    }
  }
}

TEST_CASE("large symmetric group") {
  std::vector<int> cycle(40);
  for (int i = 0; i < 40; ++i)
    cycle[i] = (i + 1) % 40;
  GeneratedGroup s40(40, {cyc("(1 2)", 40), Permutation(cycle)});
  CHECK(s40.order() == factorial(40));
}
