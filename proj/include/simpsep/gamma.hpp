#pragma once

#include "simpsep/delta.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace simpsep {

/**
 * A morphism [dom] => [cod] of the category Gamma': an increasing map
 * P([dom]) -> P([cod]) respecting disjoint unions and sending non-empty sets
 * to non-empty sets. Such a map is determined by its values on singletons,
 * stored here as the block sequence (f({0}), ..., f({dom})).
 *
 * Invariant: every block is non-empty and max(blocks[j]) < min(blocks[j+1]),
 * which encodes increasingness and forces pairwise disjointness.
 */
struct GammaMor {
  int dom = 0;
  int cod = 0;
  std::vector<std::vector<int>> blocks;  // dom + 1 blocks, each sorted ascending

  GammaMor() : dom(0), cod(0), blocks{{0}} {}  // diagonal on [0]
  GammaMor(int dom_, int cod_, std::vector<std::vector<int>> blocks_);

  // The diagonal morphism with blocks ({0}, ..., {k}).
  static GammaMor diagonal(int k);

  auto operator<=>(const GammaMor&) const = default;

  std::string str() const;  // e.g. "[1]=>[3]:{0 1}{3}"
};

// f(A) for A a subset of [dom]; returns the sorted union of the chosen blocks.
std::vector<int> eval(const GammaMor& f, std::span<const int> A);

bool is_onto(const GammaMor& f);  // union of blocks = [cod]

// The two sides of the bijection between onto Gamma'-morphisms [k] => [k']
// and Delta-epimorphisms [k'] ->> [k].
DeltaMor onto_to_epi(const GammaMor& f);
GammaMor epi_to_onto(const DeltaMor& s);

// delta_*(f): apply a Delta-monomorphism to every block element.
GammaMor push_mono(const DeltaMor& d, const GammaMor& f);

// Unique decomposition f = push_mono(sup, red) with red onto and sup mono.
std::pair<GammaMor, DeltaMor> red_sup(const GammaMor& f);  // (red, sup)

// #_f(i): size of the block containing i, or 0 if i is not covered.
int count_at(const GammaMor& f, int i);

// f^{+i}: attach the uncovered one of {i, i+1} to the block containing the
// other. Empty optional when neither case of the definition applies.
std::optional<GammaMor> plus(const GammaMor& f, int i);

// f_{-i}: delete coordinate i (relabeling the ones above it). Defined iff
// #_f(i) != 1; empty optional otherwise.
std::optional<GammaMor> minus(const GammaMor& f, int i);

// Blockwise containment f({j}) subset of g({j}).
bool subset_leq(const GammaMor& f, const GammaMor& g);

// The order generated by the +i steps: g reachable from f. Implies subset_leq
// but is strictly finer.
bool leq(const GammaMor& f, const GammaMor& g);

// All g with f <= g, BFS over +i steps; contains f, duplicate-free.
std::vector<GammaMor> upper_set(const GammaMor& f);

// Complete duplicate-free list, blocks ordered lexicographically by
// (min, contents).
std::vector<GammaMor> enumerate_gamma(int k, int kp, bool onto_only);

/**
 * The relation R (f -> f^{+i}) and its reflexive-transitive closure on one
 * hom-set Hom([dom],[cod]). Built once, read-only afterwards; intended for
 * the small hom-sets the lemma checkers sweep.
 */
class PosetCache {
 public:
  PosetCache(int dom, int cod);

  const std::vector<GammaMor>& elements() const { return elems_; }
  int index_of(const GammaMor& f) const;  // -1 if absent
  const std::vector<std::vector<int>>& r_edges() const { return edges_; }
  bool reachable(int from, int to) const;
  bool leq(const GammaMor& f, const GammaMor& g) const;
  bool antisymmetric() const;

 private:
  std::vector<GammaMor> elems_;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<bool>> closure_;
};

}  // namespace simpsep
