#pragma once

// Independent oracles for the test suite: brute-force re-derivations that
// deliberately avoid the code paths they cross-check.

#include "simpsep/admissible.hpp"
#include "simpsep/delta.hpp"
#include "simpsep/gamma.hpp"
#include "simpsep/geometry.hpp"
#include "simpsep/sset.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using namespace simpsep;

// All maps [k] -> [kp] (monotone or not) via an odometer, filtered.
inline std::vector<std::vector<int>> all_functions(int k, int kp) {
  std::vector<std::vector<int>> out;
  std::vector<int> val(static_cast<std::size_t>(k) + 1, 0);
  for (;;) {
    out.push_back(val);
    int j = k;
    while (j >= 0 && val[static_cast<std::size_t>(j)] == kp) --j;
    if (j < 0) break;
    ++val[static_cast<std::size_t>(j)];
    for (int l = j + 1; l <= k; ++l) val[static_cast<std::size_t>(l)] = 0;
  }
  return out;
}

inline bool fn_monotone(const std::vector<int>& v) {
  for (std::size_t j = 1; j < v.size(); ++j)
    if (v[j] < v[j - 1]) return false;
  return true;
}

inline bool fn_surjective(const std::vector<int>& v, int kp) {
  std::vector<char> hit(static_cast<std::size_t>(kp) + 1, 0);
  for (int x : v) hit[static_cast<std::size_t>(x)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

inline bool fn_injective(const std::vector<int>& v) {
  std::set<int> seen(v.begin(), v.end());
  return seen.size() == v.size();
}

// Reachability in the +i graph computed over the fully enumerated hom-set,
// iterating a relation matrix to a fixed point (no BFS shortcuts).
inline bool naive_leq(const GammaMor& f, const GammaMor& g) {
  const auto homs = enumerate_gamma(f.dom, f.cod, false);
  const auto index = [&](const GammaMor& h) {
    return static_cast<std::size_t>(
        std::find(homs.begin(), homs.end(), h) - homs.begin());
  };
  const std::size_t n = homs.size();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    reach[i][i] = 1;
    for (int p = 0; p < homs[i].cod; ++p)
      if (auto nxt = plus(homs[i], p)) reach[i][index(*nxt)] = 1;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!reach[i][j]) continue;
        for (std::size_t l = 0; l < n; ++l)
          if (reach[j][l] && !reach[i][l]) { reach[i][l] = 1; changed = true; }
      }
  }
  return reach[index(f)][index(g)] != 0;
}

// U(sigma) recomputed directly from the definitions, no memoization: the
// degree-k extension of U along each sigma . delta is itself re-derived from
// the family table inside the loop.
inline std::vector<Simplex> naive_u_of_epi(const AdmissibleFamily& F, const DeltaMor& sigma) {
  const FiniteSSet& S = *F.sset;
  const int k = sigma.dom;
  const auto extend_at = [&](const DeltaMor& sig) {
    std::vector<Simplex> kept;
    for (const Simplex& z : simplices_of_degree(S, sig.dom)) {
      bool ok = true;
      for (const DeltaMor& tau : enumerate_morphisms(F.N, sig.dom, MorKind::epi)) {
        const auto& table = F.at(compose(sig, tau));
        if (!std::binary_search(table.begin(), table.end(), apply(S, tau, z))) {
          ok = false;
          break;
        }
      }
      if (ok) kept.push_back(z);
    }
    return kept;
  };
  std::vector<Simplex> out;
  for (const Simplex& z : simplices_of_degree(S, k)) {
    bool ok = true;
    for (int kp = 0; kp <= std::min(F.N, k) && ok; ++kp) {
      for (const DeltaMor& d : enumerate_morphisms(kp, k, MorKind::mono)) {
        const DeltaMor sd = compose(sigma, d);
        if (!is_epi(sd)) continue;
        const auto ext = extend_at(sd);
        if (!std::count(ext.begin(), ext.end(), apply(S, d, z))) { ok = false; break; }
      }
    }
    if (ok) out.push_back(z);
  }
  return out;
}

// U(f) for a Gamma'-morphism, re-derived from naive_u_of_epi.
inline std::vector<Simplex> naive_u_of_gamma(const AdmissibleFamily& F, const GammaMor& f) {
  const auto [red, sup] = red_sup(f);
  const auto u_red = naive_u_of_epi(F, onto_to_epi(red));
  std::vector<Simplex> out;
  for (const Simplex& z : simplices_of_degree(*F.sset, f.cod))
    if (std::count(u_red.begin(), u_red.end(), apply(*F.sset, sup, z))) out.push_back(z);
  return out;
}

inline BaryPoint random_point(std::mt19937_64& rng, int degree) {
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  Rat sum = 0;
  for (Rat& t : c) {
    t = Rat(static_cast<unsigned long>(rng() % 4096) + 1);
    sum += t;
  }
  for (Rat& t : c) t /= sum;
  return BaryPoint(std::move(c));
}

}  // namespace oracle
