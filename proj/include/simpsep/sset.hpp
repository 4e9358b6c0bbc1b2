#pragma once

#include "simpsep/delta.hpp"

#include <compare>
#include <string>
#include <tuple>
#include <vector>

namespace simpsep {

/// Reference to a non-degenerate cell: (degree, index within that degree).
struct CellRef {
  int degree = 0;
  int index = 0;
  auto operator<=>(const CellRef&) const = default;
};

/**
 * A finite simplicial set in Eilenberg-Zilber normal form: only the
 * non-degenerate cells are stored, every face of a cell is recorded as a
 * normal form (epi, cell), and degeneracies are carried entirely by epi
 * components of simplices. Immutable after construction; all queries are
 * pure and freely shareable across threads.
 */
class FiniteSSet {
 public:
  struct FaceEntry {
    DeltaMor epi;  // [p-1] ->> [q]
    CellRef cell;  // non-degenerate, degree q
  };

  // cell_ids[p] lists the cells of degree p; ids must be globally unique.
  // faces[p][c] lists d_0 .. d_p of cell (p, c); empty for p = 0.
  FiniteSSet(int dim, std::vector<std::vector<std::string>> cell_ids,
             std::vector<std::vector<std::vector<FaceEntry>>> faces);

  int dim() const { return dim_; }
  int cell_count(int degree) const;
  const std::string& cell_id(CellRef c) const;
  CellRef cell_by_id(const std::string& id) const;  // throws if unknown
  bool has_cell(const std::string& id) const;
  const FaceEntry& face(CellRef c, int i) const;

  // Checks the simplicial identities d_i d_j = d_{j-1} d_i (i < j) through
  // the normal-form algebra, plus referential integrity. Throws
  // std::invalid_argument naming the first offending (cell, i, j).
  void validate() const;

 private:
  int dim_;
  std::vector<std::vector<std::string>> cell_ids_;
  std::vector<std::vector<std::vector<FaceEntry>>> faces_;
};

/// A simplex of degree k in normal form: epi : [k] ->> [p] applied to a
/// non-degenerate cell of degree p.
struct Simplex {
  DeltaMor epi;
  CellRef cell;

  int degree() const { return epi.dom; }
  auto operator<=>(const Simplex&) const = default;
};

// The non-degenerate cell (p, c) as a simplex of degree p.
Simplex cell_simplex(const FiniteSSet& S, CellRef c);

// A(delta)(s) in normal form. Requires cod(delta) = degree(s).
Simplex apply(const FiniteSSet& S, const DeltaMor& delta, const Simplex& s);

bool is_degenerate(const Simplex& s);

// All simplices of degree k: every (epi [k] ->> [p], cell of degree p).
// Complete, duplicate-free, deterministic order.
std::vector<Simplex> simplices_of_degree(const FiniteSSet& S, int k);

// Stable printable identifier, e.g. "e@0-0-1" for the epi (0 0 1) on cell e.
std::string simplex_id(const FiniteSSet& S, const Simplex& s);
Simplex parse_simplex_id(const FiniteSSet& S, const std::string& id);

// The three conditions of the degeneration lemma for a non-degenerate x:
// (i) sigma^*(x) lies in tau^*(A_m), (ii) sigma factors through tau by an
// epi, (iii) the kernel of tau refines the kernel of sigma. The lemma says
// they are equivalent; this evaluates each independently.
std::tuple<bool, bool, bool> degen_lemma_check(const FiniteSSet& S, const Simplex& x,
                                               const DeltaMor& sigma, const DeltaMor& tau);

// Delta[n]: one non-degenerate cell per non-empty subset of [n].
FiniteSSet standard_simplex(int n);
// Its boundary: Delta[n] without the top cell.
FiniteSSet boundary(int n);

}  // namespace simpsep
