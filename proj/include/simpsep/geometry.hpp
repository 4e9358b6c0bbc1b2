#pragma once

#include "simpsep/delta.hpp"
#include "simpsep/gamma.hpp"
#include "simpsep/rational.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace simpsep {

/// A point of the standard simplex in exact barycentric coordinates:
/// all coordinates >= 0, summing to exactly 1.
struct BaryPoint {
  std::vector<Rat> coords;

  explicit BaryPoint(std::vector<Rat> coords_);

  int degree() const { return static_cast<int>(coords.size()) - 1; }
  static BaryPoint vertex(int n, int p);
  static BaryPoint barycenter(int n);

  bool operator==(const BaryPoint&) const = default;
};

// The affine map Delta^dom(d) -> Delta^cod(d) induced by a Delta-morphism:
// coordinate j of the image is the total mass of the preimage d^{-1}(j).
BaryPoint pushforward(const DeltaMor& d, const BaryPoint& t);

bool is_interior(const BaryPoint& t);  // every coordinate > 0

using RatioKey = std::pair<int, int>;  // (i, j) with i < j

// lambda_{i,j} = t_j / t_i for all pairs i < j. Requires an interior point.
std::map<RatioKey, Rat> lambda_ratios(const BaryPoint& alpha);

/// An alpha-admissible family of ratio windows: one open interval
/// (a_{i,j}, b_{i,j}) per pair i < j in [n], with 0 < a < b.
struct IntervalFamily {
  int n = 0;
  std::map<RatioKey, std::pair<Rat, Rat>> bounds;

  IntervalFamily() = default;
  IntervalFamily(int n_, std::map<RatioKey, std::pair<Rat, Rat>> bounds_);
};

// Windows (lambda/spread, lambda*spread) around the ratios of alpha.
// Requires alpha interior and spread > 1.
IntervalFamily make_admissible(const BaryPoint& alpha, const Rat& spread);

// An alpha-admissible and a beta-admissible family whose closed windows at
// position (k, l) are disjoint, found by shrinking a common spread. Requires
// the (k, l) ratios of alpha and beta to differ.
std::pair<IntervalFamily, IntervalFamily> make_disjoint_pair(
    const BaryPoint& alpha, const BaryPoint& beta, int k, int l);

enum class Rel { lt, le, eq };  // coef . x  <  / <= / =  rhs

struct LinRow {
  std::vector<Rat> coef;
  Rel rel = Rel::le;
  Rat rhs = 0;
};

/// A finite system of strict/weak rational linear constraints; the polytope
/// language for the W(f, eps) sets.
struct LinSystem {
  int nvars = 0;
  std::vector<LinRow> rows;
};

bool satisfies(const LinSystem& sys, std::span<const Rat> x);

/**
 * The constraint system of W(f, eps) inside Delta^{cod(f)} (open form), or of
 * its closure (closed = true). Writing S_i for the mass of block i:
 *   - simplex constraints t_p >= 0, sum t_p = 1;
 *   - S_i > 0 for each i (open form only; implied by the weak rows in the
 *     closed form);
 *   - a_{i,j} * S_i < S_j < b_{i,j} * S_i for i < j (weak in the closed form);
 *   - total covered mass > 1 - eps (weak in the closed form).
 */
LinSystem w_constraints(const GammaMor& f, const Rat& eps,
                        const IntervalFamily& family, bool closed);

// Exact membership of t in W(f, eps) or its closure.
bool w_member(const GammaMor& f, const Rat& eps, const IntervalFamily& family,
              bool closed, const BaryPoint& t);

}  // namespace simpsep
