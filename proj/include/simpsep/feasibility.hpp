#pragma once

#include "simpsep/geometry.hpp"
#include "simpsep/rational.hpp"

#include <string>
#include <vector>

namespace simpsep {

/// Outcome of an exact feasibility decision. A feasible verdict always
/// carries a witness satisfying every row (strict rows strictly).
struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rat> witness;  // size nvars when feasible
};

/**
 * Decides feasibility of a mixed strict/weak rational linear system by
 * Fourier-Motzkin elimination. Equalities are substituted away first;
 * eliminating a variable between a strict and a weak bound yields a strict
 * combined row. On feasibility a witness is back-substituted, choosing
 * midpoints of the residual intervals. The empty system is feasible with the
 * zero vector as witness. Pure and reentrant.
 *
 * elim_order, when non-empty, overrides the default lowest-index-first
 * elimination order (it must be a permutation of 0..nvars-1); the verdict is
 * independent of the order.
 */
FeasibilityResult feasible(const LinSystem& sys, std::vector<int> elim_order = {});

// Feasibility of the conjunction of two systems over the same variables;
// infeasible exactly when the two polyhedra are disjoint.
FeasibilityResult disjoint(const LinSystem& a, const LinSystem& b);

// Human-readable rendering, one row per line.
std::string debug_str(const LinSystem& sys);

}  // namespace simpsep
