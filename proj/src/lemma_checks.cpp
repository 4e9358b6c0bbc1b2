#include "simpsep/lemma_checks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace simpsep {

namespace {

long long binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  long long acc = 1;
  for (int i = 0; i < r; ++i) acc = acc * (n - i) / (i + 1);
  return acc;
}

// Counts monotone surjections [kp] -> [k] by scanning every map, monotone or
// not; deliberately ignorant of the enumeration code it cross-checks.
long long brute_force_epi_count(int kp, int k) {
  std::vector<int> val(static_cast<std::size_t>(kp) + 1, 0);
  long long count = 0;
  for (;;) {
    bool monotone = true;
    for (int j = 0; j < kp && monotone; ++j)
      if (val[static_cast<std::size_t>(j)] > val[static_cast<std::size_t>(j) + 1]) monotone = false;
    if (monotone) {
      std::vector<char> hit(static_cast<std::size_t>(k) + 1, 0);
      for (int v : val) hit[static_cast<std::size_t>(v)] = 1;
      if (std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; })) ++count;
    }
    int j = kp;
    while (j >= 0 && val[static_cast<std::size_t>(j)] == k) --j;
    if (j < 0) break;
    ++val[static_cast<std::size_t>(j)];
    for (int l = j + 1; l <= kp; ++l) val[static_cast<std::size_t>(l)] = 0;
  }
  return count;
}

int count0(const GammaMor& g, int i) {
  if (i < 0 || i > g.cod) return 0;
  return count_at(g, i);
}

}  // namespace

CheckReport check_duality(int kdom_max, int kcod_max) {
  CheckReport rep;
  for (int k = 0; k <= kdom_max; ++k) {
    for (int kp = k; kp <= kcod_max; ++kp) {
      const auto epis = enumerate_morphisms(kp, k, MorKind::epi);
      const auto ontos = enumerate_gamma(k, kp, true);
      const long long binom = binomial(kp, k);
      const long long brute = brute_force_epi_count(kp, k);
      ++rep.cases;
      if (static_cast<long long>(epis.size()) != binom ||
          static_cast<long long>(ontos.size()) != binom || brute != binom) {
        std::ostringstream os;
        os << "count mismatch at [" << kp << "]->>[" << k << "]: epis=" << epis.size()
           << " ontos=" << ontos.size() << " binom=" << binom << " brute=" << brute;
        rep.violation(os.str());
      }
      for (const DeltaMor& s : epis) {
        ++rep.cases;
        if (!(onto_to_epi(epi_to_onto(s)) == s))
          rep.violation("epi round-trip fails at " + s.str());
      }
      for (const GammaMor& f : ontos) {
        ++rep.cases;
        if (!(epi_to_onto(onto_to_epi(f)) == f))
          rep.violation("onto round-trip fails at " + f.str());
      }
    }
  }
  return rep;
}

CheckReport check_admitted1(int kdom_max, int kcod_max, bool uncovered_only) {
  CheckReport rep;
  for (int k = 0; k <= kdom_max; ++k) {
    for (int kp = k; kp <= kcod_max; ++kp) {
      const PosetCache cache(k, kp);
      const auto& homs = cache.elements();
      for (std::size_t fi = 0; fi < homs.size(); ++fi) {
        const GammaMor& f = homs[fi];
        for (int i = 0; i <= kp; ++i) {
          if (uncovered_only && count_at(f, i) != 0) continue;
          const auto fm = minus(f, i);
          if (!fm) continue;
          for (std::size_t gi = 0; gi < homs.size(); ++gi) {
            ++rep.cases;
            if (!cache.reachable(static_cast<int>(fi), static_cast<int>(gi))) continue;
            const GammaMor& g = homs[gi];
            const auto gm = minus(g, i);
            if (!gm) {
              rep.violation("g_{-i} undefined though f <= g: f=" + f.str() +
                            " g=" + g.str() + " i=" + std::to_string(i));
              continue;
            }
            if (!leq(*fm, *gm))
              rep.violation("f_{-i} <= g_{-i} fails: f=" + f.str() + " g=" + g.str() +
                            " i=" + std::to_string(i));
          }
        }
      }
    }
  }
  return rep;
}

CheckReport check_admitted2(int kdom_max, int kcod_max, bool uncovered_only) {
  CheckReport rep;
  for (int k = 0; k <= kdom_max; ++k) {
    for (int kp = std::max(1, k); kp <= kcod_max; ++kp) {
      if (k > kp - 1) continue;  // Hom([k],[kp-1]) must be non-empty
      const PosetCache upper(k, kp);
      const PosetCache lower(k, kp - 1);
      for (const GammaMor& f : upper.elements()) {
        for (int i = 0; i <= kp; ++i) {
          if (uncovered_only && count_at(f, i) != 0) continue;
          const auto fm = minus(f, i);
          if (!fm) continue;
          for (const GammaMor& g : lower.elements()) {
            ++rep.cases;
            if (!lower.leq(*fm, g)) continue;
            const GammaMor pushed = push_mono(face(kp - 1, i), g);
            const int ci = count0(g, i);
            const int cim1 = count0(g, i - 1);
            bool ok = false;
            std::string which;
            if (ci == 0 && cim1 == 0) {
              ok = upper.leq(f, pushed);
              which = "bullet 1";
            } else if (ci > 0 && cim1 == 0) {
              ok = upper.leq(f, *plus(pushed, i));
              which = "bullet 2";
            } else if (ci == 0 && cim1 > 0) {
              ok = upper.leq(f, *plus(pushed, i - 1));
              which = "bullet 3";
            } else {
              ok = upper.leq(f, *plus(pushed, i - 1)) || upper.leq(f, *plus(pushed, i));
              which = "bullet 4";
            }
            if (!ok)
              rep.violation(which + " fails: f=" + f.str() + " g=" + g.str() +
                            " i=" + std::to_string(i));
          }
        }
      }
    }
  }
  return rep;
}

CheckReport check_admitted3(int kdom_max, int kcod_max) {
  CheckReport rep;
  for (int k = 0; k <= kdom_max; ++k) {
    for (int kp = std::max(1, k); kp <= kcod_max; ++kp) {
      if (k > kp - 1) continue;
      const PosetCache lower(k, kp - 1);
      for (const GammaMor& f : lower.elements()) {
        for (int i = 0; i <= kp - 1; ++i) {
          if (count_at(f, i) == 0) continue;
          const GammaMor seed = *plus(push_mono(face(kp - 1, i), f), i);
          for (const GammaMor& g : upper_set(seed)) {
            ++rep.cases;
            const auto gm = minus(g, i);
            if (!gm) {
              rep.violation("g_{-i} undefined: f=" + f.str() + " g=" + g.str() +
                            " i=" + std::to_string(i));
              continue;
            }
            if (!lower.leq(f, *gm))
              rep.violation("g_{-i} >= f fails: f=" + f.str() + " g=" + g.str() +
                            " i=" + std::to_string(i));
          }
        }
      }
    }
  }
  return rep;
}

CheckReport check_order_remark(int kdom_max, int kcod_max) {
  CheckReport rep;
  // leq => subset_leq over the whole range.
  for (int k = 0; k <= kdom_max; ++k) {
    for (int kp = k; kp <= kcod_max; ++kp) {
      const PosetCache cache(k, kp);
      const auto& homs = cache.elements();
      if (!cache.antisymmetric()) {
        rep.violation("<= is not antisymmetric on Hom([" + std::to_string(k) + "],[" +
                      std::to_string(kp) + "])");
      }
      for (std::size_t fi = 0; fi < homs.size(); ++fi)
        for (std::size_t gi = 0; gi < homs.size(); ++gi) {
          ++rep.cases;
          if (cache.reachable(static_cast<int>(fi), static_cast<int>(gi)) &&
              !subset_leq(homs[fi], homs[gi]))
            rep.violation("leq without subset_leq: f=" + homs[fi].str() +
                          " g=" + homs[gi].str());
        }
    }
  }
  // The converse must fail somewhere in Hom([0],[4]).
  long long witnesses = 0;
  std::string first;
  const PosetCache cache(0, 4);
  const auto& homs = cache.elements();
  for (std::size_t fi = 0; fi < homs.size(); ++fi)
    for (std::size_t gi = 0; gi < homs.size(); ++gi) {
      if (fi == gi) continue;
      ++rep.cases;
      if (subset_leq(homs[fi], homs[gi]) &&
          !cache.reachable(static_cast<int>(fi), static_cast<int>(gi))) {
        if (witnesses == 0) first = homs[fi].str() + " subset " + homs[gi].str();
        ++witnesses;
      }
    }
  if (witnesses == 0)
    rep.violation("no subset-without-leq pair found in Hom([0],[4])");
  return rep;
}

CheckReport check_degen_lemma(const FiniteSSet& S, int extra) {
  CheckReport rep;
  for (int p = 0; p <= S.dim(); ++p) {
    for (int c = 0; c < S.cell_count(p); ++c) {
      const Simplex x = cell_simplex(S, {p, c});
      for (int N = p; N <= p + extra; ++N) {
        const auto sigmas = enumerate_morphisms(N, p, MorKind::epi);
        for (int m = 0; m <= N; ++m) {
          for (const DeltaMor& tau : enumerate_morphisms(N, m, MorKind::epi)) {
            for (const DeltaMor& sigma : sigmas) {
              ++rep.cases;
              const auto [a, b, cc] = degen_lemma_check(S, x, sigma, tau);
              if (a != b || b != cc) {
                std::ostringstream os;
                os << "equivalence fails at x=" << simplex_id(S, x) << " sigma=" << sigma.str()
                   << " tau=" << tau.str() << ": (" << a << "," << b << "," << cc << ")";
                rep.violation(os.str());
              }
            }
          }
        }
      }
    }
  }
  return rep;
}

CheckReport check_simpset_lemma(const FiniteSSet& S, int extra) {
  CheckReport rep;
  std::vector<Simplex> cells;
  for (int p = 0; p <= S.dim(); ++p)
    for (int c = 0; c < S.cell_count(p); ++c) cells.push_back(cell_simplex(S, {p, c}));
  for (const Simplex& x : cells) {
    for (const Simplex& y : cells) {
      const int n = x.degree(), m = y.degree();
      for (int N = std::max(n, m); N <= std::max(n, m) + extra; ++N) {
        for (const DeltaMor& sigma : enumerate_morphisms(N, n, MorKind::epi)) {
          for (const DeltaMor& tau : enumerate_morphisms(N, m, MorKind::epi)) {
            if (x == y && sigma == tau) continue;
            ++rep.cases;
            if (apply(S, sigma, x) == apply(S, tau, y)) {
              rep.violation("sigma^*(x) == tau^*(y) at x=" + simplex_id(S, x) +
                            " y=" + simplex_id(S, y) + " sigma=" + sigma.str() +
                            " tau=" + tau.str());
            }
          }
        }
      }
    }
  }
  return rep;
}

CanonicalSetup canonical_setup(const FiniteSSet& S, int N) {
  int top = S.dim();
  while (top > 0 && S.cell_count(top) == 0) --top;
  if (S.cell_count(top) == 0)
    throw std::invalid_argument("canonical_setup: complex has no cells");
  CanonicalSetup setup;
  setup.x = cell_simplex(S, {top, 0});
  setup.alpha = BaryPoint::barycenter(top);
  if (N < 0) N = top + 1;
  setup.family = build_singleton(S, setup.x, N);
  setup.intervals = make_admissible(setup.alpha, 2);
  return setup;
}

CheckReport run_compat_suite(const FiniteSSet& S, const Rat& eps, int kmax, int samples,
                             std::uint64_t seed, int N) {
  const CanonicalSetup setup = canonical_setup(S, N);
  const NbhdSystem nb = build_regions(setup.family, setup.intervals, eps, kmax);
  CheckReport rep;
  for (int k = 1; k <= kmax; ++k) {
    for (int i = 0; i <= k; ++i) {
      rep.merge(check_compat_face(nb, k, i, samples, seed, false));
      rep.merge(check_compat_face(nb, k, i, samples, seed, true));
    }
  }
  for (int k = 0; k < kmax; ++k) {
    for (int i = 0; i <= k; ++i) {
      rep.merge(check_compat_degen(nb, k, i, samples, seed, false));
      rep.merge(check_compat_degen(nb, k, i, samples, seed, true));
    }
  }
  return rep;
}

}  // namespace simpsep
