#pragma once

#include "simpsep/admissible.hpp"
#include "simpsep/report.hpp"
#include "simpsep/separation.hpp"

#include <cstdint>

namespace simpsep {

// Counts of epis [k'] ->> [k], onto Gamma'-morphisms [k] => [k'] and
// binomial(k', k) agree (the binomial cross-checked against a brute-force
// scan of all maps), and the two conversions round-trip, for all
// 0 <= k <= kdom_max, k <= k' <= kcod_max.
CheckReport check_duality(int kdom_max, int kcod_max);

// f <= g implies f_{-i} <= g_{-i} whenever f_{-i} is defined; also that
// g_{-i} is then defined. Sweeps every hom-set with dom <= kdom_max,
// cod <= kcod_max. With uncovered_only the sweep restricts to #_f(i) = 0,
// the only instances the compatibility proofs rely on; the unrestricted
// statement has finite counterexamples, which this checker finds.
CheckReport check_admitted1(int kdom_max, int kcod_max, bool uncovered_only = false);

// The four case bullets relating f, g and (delta_i)_*(g) under the
// hypothesis f_{-i} <= g. uncovered_only as above.
CheckReport check_admitted2(int kdom_max, int kcod_max, bool uncovered_only = false);

// g >= (delta_i)_*(f)^{+i} implies g_{-i} >= f when #_f(i) > 0.
CheckReport check_admitted3(int kdom_max, int kcod_max);

// The order is strictly finer than blockwise inclusion: finds at least one
// pair in Hom([0],[4]) with f subset g but not f <= g, and confirms
// leq => subset_leq over the whole swept range. The report's cases include
// the number of strict witnesses found (violation if none).
CheckReport check_order_remark(int kdom_max, int kcod_max);

// Three-way equivalence of the degeneration lemma conditions on every
// non-degenerate x and all epi pairs from [N], n <= N <= n + extra.
CheckReport check_degen_lemma(const FiniteSSet& S, int extra);

// sigma^*(x) != tau^*(y) for x != y (and for x = y with sigma != tau),
// N <= max(n, m) + extra.
CheckReport check_simpset_lemma(const FiniteSSet& S, int extra);

/// A deterministic base point for family-level checks on a complex: the
/// first non-degenerate cell of maximal degree with its barycenter.
struct CanonicalSetup {
  Simplex x;
  BaryPoint alpha{{Rat(1)}};
  AdmissibleFamily family;
  IntervalFamily intervals;
};
CanonicalSetup canonical_setup(const FiniteSSet& S, int N);  // N = -1 picks n + 1

// Proposition "compatibility" (face and degeneracy statements) plus the
// closed-form variant, on the canonical setup.
CheckReport run_compat_suite(const FiniteSSet& S, const Rat& eps, int kmax, int samples,
                             std::uint64_t seed, int N = -1);

}  // namespace simpsep
