#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "monoproj/perm.hpp"

namespace monoproj {

/// Permutation group given by generators, with a base and strong generating
/// set computed at construction (randomized Schreier-Sims followed by a
/// deterministic Schreier-generator check). Immutable afterwards.
class GeneratedGroup {
public:
  static constexpr int max_degree = 64;

  /// Throws std::invalid_argument on mixed degrees or degree > 64.
  GeneratedGroup(int degree, std::vector<Permutation> generators,
                 std::uint64_t seed = 0x5eed);

  int degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return gens_; }
  const std::vector<int> &base() const { return base_; }
  const std::vector<Permutation> &strong_generators() const { return strong_; }
  const mpz_class &order() const { return order_; }

  bool contains(const Permutation &p) const;
  std::vector<int> orbit(int point) const;
  bool is_transitive() const;

private:
  struct Level {
    int base_point = 0;
    /// transversal[x] maps base_point to x; empty when x is not in the orbit.
    std::vector<std::optional<Permutation>> transversal;
    std::vector<int> orbit;
  };

  /// Strips p through the stabilizer chain. Returns the residue and the
  /// level at which sifting stopped (levels_.size() if it went through).
  std::pair<Permutation, std::size_t> sift(Permutation p) const;
  void add_strong_generator(const Permutation &h, std::size_t drop_level);
  void rebuild_level(std::size_t i);
  bool verify_schreier_generators();
  void random_schreier_sims(std::uint64_t seed);

  int degree_;
  std::vector<Permutation> gens_;
  std::vector<int> base_;
  std::vector<Permutation> strong_;
  std::vector<Level> levels_;
  mpz_class order_ = 1;
};

struct BlockSystem {
  std::vector<std::vector<int>> blocks;
};

/// Smallest block of imprimitivity containing {0, k} over all k, as a full
/// block system; nullopt when G is primitive (or intransitive, where blocks
/// are not defined).
std::optional<BlockSystem> find_block_system(const GeneratedGroup &g);

bool is_primitive(const GeneratedGroup &g);

enum class GroupClass {
  symmetric,
  alternating,
  cyclic_regular,
  regular_nonabelian,
  imprimitive,
  other
};

std::string to_string(GroupClass c);

struct Classification {
  GroupClass group_class = GroupClass::other;
  mpz_class order;
  bool transitive = false;
  bool primitive = false;
  /// Transitive with |G| = d: the Galois certificate.
  bool regular = false;
  bool abelian = false;
  /// Seeded search over generators and 512 random words; exact when the
  /// group is symmetric.
  bool contains_transposition = false;
  std::optional<BlockSystem> blocks;
};

Classification classify(const GeneratedGroup &g, std::uint64_t seed = 0x7a11);

/// d! as a big integer.
mpz_class factorial(int d);

} // namespace monoproj
