#pragma once

#include "simpsep/delta.hpp"
#include "simpsep/gamma.hpp"
#include "simpsep/report.hpp"
#include "simpsep/sset.hpp"

#include <map>
#include <memory>
#include <vector>

namespace simpsep {

/**
 * An x-admissible family on a finite simplicial set: for every epimorphism
 * sigma : [N] ->> [n], a subset U_sigma of A_N containing sigma^*(x) and
 * meeting an image tau^*(A_m) exactly when sigma factors through tau.
 * In the discrete setting the U_sigma are finite sets of simplices.
 */
struct AdmissibleFamily {
  const FiniteSSet* sset = nullptr;
  Simplex x;  // non-degenerate, degree n
  int n = 0;
  int N = 0;  // the family lives at degree N >= n
  std::map<std::vector<int>, std::vector<Simplex>> table;  // epi images -> sorted U_sigma

  const std::vector<Simplex>& at(const DeltaMor& sigma) const;
};

// U_sigma = { sigma^*(x) }; admissible by the degeneration lemma.
AdmissibleFamily build_singleton(const FiniteSSet& S, const Simplex& x, int N);

// U_sigma = A_N minus the union of tau^*(A_m) over the epis tau through
// which sigma does not factor.
AdmissibleFamily build_complement(const FiniteSSet& S, const Simplex& x, int N);

// Checks both admissibility axioms by enumeration; throws on violation.
void validate_admissible(const AdmissibleFamily& F);

// The degree-k extension of the family along sigma : [k] ->> [n], k <= N:
// the intersection over all tau : [N] ->> [k] of (tau^*)^{-1}(U_{sigma tau}).
std::vector<Simplex> extend(const AdmissibleFamily& F, const DeltaMor& sigma);

// U_sigma cap V_tau = empty for all sigma, tau (the distinct-cell setup).
bool families_disjoint(const AdmissibleFamily& U, const AdmissibleFamily& V);
// U_sigma cap U_tau = empty for sigma != tau (the same-cell setup).
bool family_self_disjoint(const AdmissibleFamily& U);

/**
 * Memoized computation of the open sets U(sigma) (any degree) and U(f) for
 * Gamma'-morphisms, for one fixed family. The memo tables fill on demand and
 * behave as if computed eagerly; warm_degree() allows pre-filling before
 * concurrent read-only use.
 */
class UCache {
 public:
  explicit UCache(const AdmissibleFamily& F);

  const AdmissibleFamily& family() const { return *fam_; }
  const FiniteSSet& sset() const { return *fam_->sset; }

  // The simplices of degree k, with index lookup.
  const std::vector<Simplex>& level(int k);
  int simplex_index(int k, const Simplex& z);  // -1 if absent

  // U(sigma) for sigma : [k] ->> [n], as sorted indices into level(k).
  // Enforces N >= n + 1 whenever k exceeds N.
  const std::vector<int>& u_of_epi(const DeltaMor& sigma);

  // U(f) = (sup(f)^*)^{-1}(U(red(f))) for f : [n] => [k].
  std::vector<int> u_of_gamma(const GammaMor& f);
  bool in_u_of_gamma(const GammaMor& f, const Simplex& z);

  // Pre-compute level(k) and U(sigma) for every epi [k] ->> [n].
  void warm_degree(int k);

 private:
  struct Level {
    std::vector<Simplex> simplices;
    std::map<Simplex, int> index;
  };
  const Level& level_data(int k);

  const AdmissibleFamily* fam_;
  std::map<int, Level> levels_;
  std::map<std::vector<int>, std::vector<Simplex>> extend_memo_;  // sigma at k <= N
  std::map<std::vector<int>, std::vector<int>> u_memo_;           // sigma images -> indices

  const std::vector<Simplex>& extend_memoized(const DeltaMor& sigma);
};

// Lemma "firstproperties" (i)-(iii) for the extended family, over all epis
// with source degree <= N.
CheckReport check_first_properties(UCache& cache);

// Proposition "uproperties" (a)-(e) for all epis sigma : [k] ->> [n] with
// k <= max_degree, and all monos/epis in range.
CheckReport check_u_properties(UCache& cache, int max_degree);

}  // namespace simpsep
