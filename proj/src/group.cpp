#include "monoproj/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace monoproj {

mpz_class factorial(int d) {
  mpz_class f = 1;
  for (int k = 2; k <= d; ++k)
    f *= k;
  return f;
}

GeneratedGroup::GeneratedGroup(int degree, std::vector<Permutation> generators,
                               std::uint64_t seed)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree_ < 1 || degree_ > max_degree)
    throw std::invalid_argument("group degree must be in 1..64");
  for (const auto &g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree mismatch");

  random_schreier_sims(seed);
  while (!verify_schreier_generators()) {
  }
  order_ = 1;
  for (const auto &lvl : levels_)
    order_ *= static_cast<unsigned long>(lvl.orbit.size());
  if (factorial(degree_) % order_ != 0)
    throw std::logic_error("group order does not divide d!");
}

std::pair<Permutation, std::size_t> GeneratedGroup::sift(Permutation p) const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const int x = p[levels_[i].base_point];
    const auto &u = levels_[i].transversal[x];
    if (!u)
      return {std::move(p), i};
    p = p * u->inverse();
  }
  return {std::move(p), levels_.size()};
}

void GeneratedGroup::rebuild_level(std::size_t i) {
  Level &lvl = levels_[i];
  lvl.transversal.assign(static_cast<std::size_t>(degree_), std::nullopt);
  lvl.orbit.clear();
  // Strong generators fixing the first i base points.
  std::vector<const Permutation *> gens;
  for (const auto &s : strong_) {
    bool fixes = true;
    for (std::size_t j = 0; j < i && fixes; ++j)
      fixes = s[base_[j]] == base_[j];
    if (fixes)
      gens.push_back(&s);
  }
  lvl.transversal[lvl.base_point] = Permutation(degree_);
  lvl.orbit.push_back(lvl.base_point);
  for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
    const int x = lvl.orbit[k];
    for (const Permutation *s : gens) {
      const int y = (*s)[x];
      if (!lvl.transversal[y]) {
        lvl.transversal[y] = *lvl.transversal[x] * *s;
        lvl.orbit.push_back(y);
      }
    }
  }
}

void GeneratedGroup::add_strong_generator(const Permutation &h, std::size_t drop_level) {
  strong_.push_back(h);
  if (drop_level == levels_.size()) {
    // h fixes every base point; extend the base by a point it moves.
    int moved = 0;
    while (h[moved] == moved)
      ++moved;
    base_.push_back(moved);
    Level lvl;
    lvl.base_point = moved;
    levels_.push_back(std::move(lvl));
  }
  for (std::size_t i = 0; i <= drop_level && i < levels_.size(); ++i)
    rebuild_level(i);
}

void GeneratedGroup::random_schreier_sims(std::uint64_t seed) {
  std::vector<Permutation> nontrivial;
  for (const auto &g : gens_)
    if (!g.is_identity())
      nontrivial.push_back(g);
  if (nontrivial.empty())
    return;
  for (const auto &g : nontrivial) {
    auto [h, level] = sift(g);
    if (!h.is_identity())
      add_strong_generator(h, level);
  }
  // Product replacement over a pool seeded with the generators.
  std::mt19937_64 rng(seed);
  std::vector<Permutation> pool = nontrivial;
  while (pool.size() < 10)
    pool.push_back(pool[pool.size() % nontrivial.size()]);
  Permutation acc(degree_);
  auto next_random = [&] {
    const std::size_t i = rng() % pool.size();
    std::size_t j = rng() % pool.size();
    if (j == i)
      j = (j + 1) % pool.size();
    pool[i] = (rng() & 1) ? pool[i] * pool[j] : pool[i] * pool[j].inverse();
    acc = acc * pool[i];
    return acc;
  };
  for (int k = 0; k < 50; ++k)
    next_random();
  int quiet = 0;
  while (quiet < 40) {
    auto [h, level] = sift(next_random());
    if (h.is_identity()) {
      ++quiet;
    } else {
      add_strong_generator(h, level);
      quiet = 0;
    }
  }
}

bool GeneratedGroup::verify_schreier_generators() {
  // Every Schreier generator u_x * s * u_{x^s}^{-1} at level i must sift
  // through the chain below i. Returns false after adding a missing one.
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::vector<Permutation> gens;
    for (const auto &s : strong_) {
      bool fixes = true;
      for (std::size_t j = 0; j < i && fixes; ++j)
        fixes = s[base_[j]] == base_[j];
      if (fixes)
        gens.push_back(s);
    }
    const Level &lvl = levels_[i];
    for (int x : lvl.orbit)
      for (const auto &s : gens) {
        const Permutation schreier =
            *lvl.transversal[x] * s * lvl.transversal[s[x]]->inverse();
        auto [h, level] = sift(schreier);
        if (!h.is_identity()) {
          add_strong_generator(h, level);
          return false;
        }
      }
  }
  return true;
}

bool GeneratedGroup::contains(const Permutation &p) const {
  if (p.degree() != degree_)
    return false;
  return sift(p).first.is_identity();
}

std::vector<int> GeneratedGroup::orbit(int point) const {
  std::vector<bool> seen(static_cast<std::size_t>(degree_), false);
  std::vector<int> orb{point};
  seen[point] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto &g : gens_) {
      const int y = g[orb[k]];
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  std::sort(orb.begin(), orb.end());
  return orb;
}

bool GeneratedGroup::is_transitive() const {
  return static_cast<int>(orbit(0).size()) == degree_;
}

namespace {

int find_root(std::vector<int> &parent, int x) {
  while (parent[x] != x)
    x = parent[x] = parent[parent[x]];
  return x;
}

/// Finest block system in which 0 and k share a block.
std::vector<int> minimal_block_partition(const GeneratedGroup &g, int k) {
  const int d = g.degree();
  std::vector<int> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  std::deque<std::pair<int, int>> queue{{0, k}};
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    int ra = find_root(parent, a), rb = find_root(parent, b);
    if (ra == rb)
      continue;
    parent[rb] = ra;
    for (const auto &s : g.generators())
      queue.emplace_back(s[a], s[b]);
  }
  for (int x = 0; x < d; ++x)
    parent[x] = find_root(parent, x);
  return parent;
}

} // namespace

std::optional<BlockSystem> find_block_system(const GeneratedGroup &g) {
  const int d = g.degree();
  if (!g.is_transitive() || d <= 2)
    return std::nullopt;
  std::optional<BlockSystem> best;
  std::size_t best_size = static_cast<std::size_t>(d);
  for (int k = 1; k < d; ++k) {
    const auto roots = minimal_block_partition(g, k);
    std::vector<std::vector<int>> blocks;
    std::vector<int> index(static_cast<std::size_t>(d), -1);
    for (int x = 0; x < d; ++x) {
      if (index[roots[x]] < 0) {
        index[roots[x]] = static_cast<int>(blocks.size());
        blocks.emplace_back();
      }
      blocks[index[roots[x]]].push_back(x);
    }
    if (blocks.size() == 1)
      continue;
    const std::size_t size = blocks.front().size();
    if (size < best_size) {
      best_size = size;
      best = BlockSystem{std::move(blocks)};
    }
  }
  return best;
}

bool is_primitive(const GeneratedGroup &g) {
  return g.is_transitive() && !find_block_system(g);
}

std::string to_string(GroupClass c) {
  switch (c) {
  case GroupClass::symmetric:
    return "symmetric";
  case GroupClass::alternating:
    return "alternating";
  case GroupClass::cyclic_regular:
    return "cyclic_regular";
  case GroupClass::regular_nonabelian:
    return "regular_nonabelian";
  case GroupClass::imprimitive:
    return "imprimitive";
  case GroupClass::other:
    return "other";
  }
  return "other";
}

Classification classify(const GeneratedGroup &g, std::uint64_t seed) {
  Classification c;
  const int d = g.degree();
  const auto &gens = g.generators();
  c.order = g.order();
  c.transitive = g.is_transitive();
  c.blocks = find_block_system(g);
  c.primitive = c.transitive && !c.blocks;
  c.regular = c.transitive && c.order == d;
  c.abelian = true;
  for (std::size_t i = 0; i < gens.size() && c.abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size() && c.abelian; ++j)
      c.abelian = gens[i] * gens[j] == gens[j] * gens[i];

  const bool all_even = std::all_of(gens.begin(), gens.end(),
                                    [](const Permutation &p) { return p.is_even(); });
  const mpz_class full = factorial(d);

  bool cyclic = false;
  if (c.regular && c.abelian) {
    // A regular group has exactly d elements; enumerate and look for a d-cycle.
    std::set<Permutation> elems{Permutation(d)};
    std::vector<Permutation> frontier{Permutation(d)};
    while (!frontier.empty() && !cyclic) {
      std::vector<Permutation> next;
      for (const auto &p : frontier)
        for (const auto &s : gens) {
          Permutation q = p * s;
          if (elems.insert(q).second) {
            cyclic = cyclic || static_cast<int>(q.order()) == d;
            next.push_back(std::move(q));
          }
        }
      frontier = std::move(next);
    }
    cyclic = cyclic || d == 1;
  }

  if (c.order == full)
    c.group_class = GroupClass::symmetric;
  else if (c.order * 2 == full && all_even)
    c.group_class = GroupClass::alternating;
  else if (c.regular && cyclic)
    c.group_class = GroupClass::cyclic_regular;
  else if (c.regular && !c.abelian)
    c.group_class = GroupClass::regular_nonabelian;
  else if (c.transitive && c.blocks)
    c.group_class = GroupClass::imprimitive;
  else
    c.group_class = GroupClass::other;

  auto is_transposition = [](const Permutation &p) {
    const auto cs = p.cycles();
    return cs.size() == 1 && cs.front().size() == 2;
  };
  c.contains_transposition =
      (c.group_class == GroupClass::symmetric && d >= 2) ||
      std::any_of(gens.begin(), gens.end(), is_transposition);
  if (!c.contains_transposition && !gens.empty()) {
    std::mt19937_64 rng(seed);
    for (int sample = 0; sample < 512 && !c.contains_transposition; ++sample) {
      Permutation w(d);
      const int len = 1 + static_cast<int>(rng() % 12);
      for (int k = 0; k < len; ++k)
        w = w * gens[rng() % gens.size()];
      // If w has one 2-cycle and every other cycle is odd, an odd power of
      // w is that transposition.
      int two_cycles = 0;
      bool others_odd = true;
      for (const auto &cyc : w.cycles()) {
        if (cyc.size() == 2)
          ++two_cycles;
        else if (cyc.size() % 2 == 0)
          others_odd = false;
      }
      c.contains_transposition = two_cycles == 1 && others_odd;
    }
  }
  return c;
}

} // namespace monoproj
