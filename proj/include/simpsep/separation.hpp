#pragma once

#include "simpsep/admissible.hpp"
#include "simpsep/feasibility.hpp"
#include "simpsep/geometry.hpp"
#include "simpsep/report.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace simpsep {

/**
 * The neighborhood system attached to one admissible family, one interval
 * family and one eps: per degree k <= kmax, for every f : [n] => [k] with
 * U(f) non-empty, the polyhedral piece of U_{k,eps} (the conjunction of
 * W(g, eps) over g >= f) and of U'_{k,eps} (the closure of W(f, eps)).
 *
 * Materializes every Gamma'-hom-set up to kmax, so it is intended for small
 * degrees (compatibility checks, containment); the separation pipeline works
 * factored at high degrees instead.
 */
struct NbhdSystem {
  struct Piece {
    GammaMor f;
    LinSystem open_conj;   // /\_{g >= f} W(g, eps)
    LinSystem closed_sys;  // closure of W(f, eps)
  };
  struct Level {
    std::vector<Simplex> simplices;
    std::vector<Piece> pieces;
    std::vector<std::vector<int>> piece_indices;  // per simplex: pieces with z in U(f)
  };

  const FiniteSSet* sset = nullptr;
  const AdmissibleFamily* family = nullptr;
  IntervalFamily intervals;
  Rat eps;
  int kmax = 0;
  std::vector<Level> levels;
};

NbhdSystem build_regions(const AdmissibleFamily& F, const IntervalFamily& intervals,
                         const Rat& eps, int kmax);

// Membership of (y, beta) in U_{k,eps} (open) or U'_{k,eps} (closed).
bool member(const NbhdSystem& nb, int k, const Simplex& y, const BaryPoint& beta,
            bool closed);

// Membership equivalence across a face map: (y, (delta_i)_* beta) in U_k
// iff (d_i(y), beta) in U_{k-1}, for every y of degree k and sampled beta
// (seeded random interior points plus all vertices and the barycenter).
CheckReport check_compat_face(const NbhdSystem& nb, int k, int i, int samples,
                              std::uint64_t seed, bool closed);

// The degeneracy-map analogue at k -> k+1.
CheckReport check_compat_degen(const NbhdSystem& nb, int k, int i, int samples,
                               std::uint64_t seed, bool closed);

// Reduces (y, beta) to the unique representative with a non-degenerate cell
// and an interior coordinate, applying one defining relation of the
// realization per step.
std::pair<Simplex, BaryPoint> point_normal_form(const FiniteSSet& S, Simplex y,
                                                BaryPoint beta);

/**
 * The pairs (f, g) in Hom([n] => [k]) x Hom([m] => [k]) that the boundary
 * reductions cannot eliminate: all blockwise intersections have at most one
 * element, the supports jointly cover [k], and each block has at most one
 * element outside the other morphism's support. Every other pair transfers a
 * common point of U'_{k} and V'_{k} down to degree k-1 (merge or delete a
 * coordinate, then apply the closed-form compatibility of the face maps), so
 * these are the only pairs needing direct disjointness evidence.
 */
std::vector<std::pair<GammaMor, GammaMor>> irreducible_pairs(int n, int m, int k);

struct EvidenceEntry {
  int k = 0;
  GammaMor f;
  GammaMor g;
  bool f_onto = false;
  bool g_onto = false;
  enum class Kind { set_disjoint, lp_infeasible } kind = Kind::set_disjoint;
};

/// Machine-checkable record of one separation run: the normalized points,
/// the chosen families, eta, and per-(k, f, g) disjointness evidence for
/// every irreducible pair up to kmax = 2(n+2)(m+2).
struct SeparationCertificate {
  const FiniteSSet* sset = nullptr;
  Simplex x;  // non-degenerate
  BaryPoint alpha{{Rat(1)}};
  Simplex y;
  BaryPoint beta{{Rat(1)}};
  bool swapped = false;           // same-cell branch may exchange the points
  std::string branch;             // "distinct-cells" or "same-cell"
  int n = 0, m = 0, N = 0, kmax = 0;
  int ratio_k = -1, ratio_l = -1;  // coordinate pair with disjoint windows
  Rat eta;
  AdmissibleFamily fam_u, fam_v;
  IntervalFamily int_i, int_j;
  std::vector<EvidenceEntry> evidence;
};

struct SeparationOptions {
  int max_depth = 20;  // eta candidates 2^-1 .. 2^-max_depth
  int jobs = 1;        // parallelism for the (k, f, g) sweep; 0 = hardware
};

class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Runs the whole pipeline. Throws std::invalid_argument when the two points
// normalize to the same point of the realization, SearchExhausted when no
// eta up to the requested depth passes.
SeparationCertificate find_eta(const FiniteSSet& S, const Simplex& p1, const BaryPoint& c1,
                               const Simplex& p2, const BaryPoint& c2,
                               const SeparationOptions& opts = {});

// Re-derives every claim of the certificate from scratch. On failure returns
// false and stores a description of the first failure.
bool verify_certificate(const FiniteSSet& S, const SeparationCertificate& cert,
                        std::string* first_failure = nullptr);

// True when (y, beta) lies in U'_{k,eta} for the given family/intervals,
// searched over candidate supports rather than all morphisms.
bool member_closed_union(UCache& cache, const IntervalFamily& intervals, const Rat& eta,
                         const Simplex& y, const BaryPoint& beta);

// Random probes of A_k x Delta^k for every k <= kmax: no probe may land in
// both closed neighborhood unions.
CheckReport probe_disjointness(UCache& uc, const IntervalFamily& int_i, UCache& vc,
                               const IntervalFamily& int_j, const Rat& eta, int kmax,
                               int per_degree, std::uint64_t seed, int jobs = 1);

}  // namespace simpsep
