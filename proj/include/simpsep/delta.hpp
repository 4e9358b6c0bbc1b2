#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace simpsep {

/**
 * A morphism of the simplicial category Delta: a non-decreasing map
 * [dom] -> [cod], stored by its image sequence. Objects are identified
 * with their degree; the underlying set [k] = {0, ..., k} is implicit.
 *
 * Values are immutable after construction and safe to share across threads.
 */
struct DeltaMor {
  int dom = 0;
  int cod = 0;
  std::vector<int> images;  // size dom + 1, non-decreasing, values in [0, cod]

  DeltaMor() : dom(0), cod(0), images{0} {}  // identity on [0]
  DeltaMor(int dom_, int cod_, std::vector<int> images_);

  static DeltaMor identity(int k);

  int operator()(int j) const { return images[static_cast<std::size_t>(j)]; }
  bool is_identity() const { return dom == cod && is_mono_images(); }

  auto operator<=>(const DeltaMor&) const = default;

  std::string str() const;  // e.g. "[2]->[1]:(0 0 1)"

 private:
  bool is_mono_images() const;
  friend bool is_mono(const DeltaMor&);
};

// The face morphism delta_i^k : [k] -> [k+1], skipping i. Requires 0 <= i <= k+1.
DeltaMor face(int k, int i);

// The degeneracy sigma_i^k : [k] -> [k-1], repeating i. Requires k >= 1, 0 <= i <= k-1.
DeltaMor degeneracy(int k, int i);

// g after f. Requires cod(f) = dom(g).
DeltaMor compose(const DeltaMor& g, const DeltaMor& f);

bool is_epi(const DeltaMor& f);   // surjective
bool is_mono(const DeltaMor& f);  // strictly increasing

// Unique factorization f = mono . epi through [r], r + 1 = #distinct image values.
std::pair<DeltaMor, DeltaMor> epi_mono_factor(const DeltaMor& f);  // (epi, mono)

// Canonical section d of an epi s, with s . d = id: d(j) = min s^{-1}(j).
DeltaMor section_of_epi(const DeltaMor& s);

enum class MorKind { all, epi, mono };

// Complete, duplicate-free, lexicographically ordered by image sequence.
std::vector<DeltaMor> enumerate_morphisms(int k, int kp, MorKind kind);

// Standard generator factorization f = delta_{i_1} ... delta_{i_s} sigma_{j_1} ... sigma_{j_t},
// returned left-to-right in composition order (result[0] applied last).
std::vector<DeltaMor> generator_decomposition(const DeltaMor& f);

}  // namespace simpsep
