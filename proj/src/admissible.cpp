#include "simpsep/admissible.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace simpsep {

namespace {

bool contains(const std::vector<Simplex>& sorted, const Simplex& z) {
  return std::binary_search(sorted.begin(), sorted.end(), z);
}

bool factors_through(const DeltaMor& sigma, const DeltaMor& tau) {
  // Exists rho epi with sigma = rho . tau, i.e. ker(tau) refines ker(sigma);
  // both maps are monotone epis so adjacent collapses decide it.
  for (int i = 0; i < tau.dom; ++i)
    if (tau(i) == tau(i + 1) && sigma(i) != sigma(i + 1)) return false;
  return true;
}

std::vector<Simplex> image_of_degree(const FiniteSSet& S, const DeltaMor& tau, int from_degree) {
  std::vector<Simplex> out;
  for (const Simplex& y : simplices_of_degree(S, from_degree))
    out.push_back(apply(S, tau, y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_family_inputs(const FiniteSSet& S, const Simplex& x, int N) {
  if (is_degenerate(x))
    throw std::invalid_argument("admissible family: x must be non-degenerate");
  if (x.cell.degree > S.dim() || x.cell.index >= S.cell_count(x.cell.degree))
    throw std::invalid_argument("admissible family: x is not a cell of the complex");
  if (N < x.degree())
    throw std::invalid_argument("admissible family: need N >= degree of x");
}

}  // namespace

const std::vector<Simplex>& AdmissibleFamily::at(const DeltaMor& sigma) const {
  const auto it = table.find(sigma.images);
  if (it == table.end())
    throw std::invalid_argument("admissible family: no entry for " + sigma.str());
  return it->second;
}

AdmissibleFamily build_singleton(const FiniteSSet& S, const Simplex& x, int N) {
  check_family_inputs(S, x, N);
  AdmissibleFamily F{&S, x, x.degree(), N, {}};
  for (const DeltaMor& sigma : enumerate_morphisms(N, F.n, MorKind::epi))
    F.table[sigma.images] = {apply(S, sigma, x)};
  return F;
}

AdmissibleFamily build_complement(const FiniteSSet& S, const Simplex& x, int N) {
  check_family_inputs(S, x, N);
  AdmissibleFamily F{&S, x, x.degree(), N, {}};
  const std::vector<Simplex> all = simplices_of_degree(S, N);
  for (const DeltaMor& sigma : enumerate_morphisms(N, F.n, MorKind::epi)) {
    std::set<Simplex> excluded;
    for (int m = 0; m <= N; ++m) {
      for (const DeltaMor& tau : enumerate_morphisms(N, m, MorKind::epi)) {
        if (factors_through(sigma, tau)) continue;
        for (const Simplex& z : image_of_degree(S, tau, m)) excluded.insert(z);
      }
    }
    std::vector<Simplex> u;
    for (const Simplex& z : all)
      if (!excluded.count(z)) u.push_back(z);
    F.table[sigma.images] = std::move(u);
  }
  return F;
}

void validate_admissible(const AdmissibleFamily& F) {
  const FiniteSSet& S = *F.sset;
  const auto sigmas = enumerate_morphisms(F.N, F.n, MorKind::epi);
  if (F.table.size() != sigmas.size())
    throw std::invalid_argument("admissible family: table does not cover all epis");
  for (const DeltaMor& sigma : sigmas) {
    const auto& u = F.at(sigma);
    if (!std::is_sorted(u.begin(), u.end()))
      throw std::invalid_argument("admissible family: unsorted entry");
    if (!contains(u, apply(S, sigma, F.x)))
      throw std::invalid_argument("axiom (i) fails: sigma^*(x) not in U_sigma at " + sigma.str());
  }
  for (int m = 0; m <= F.N; ++m) {
    for (const DeltaMor& tau : enumerate_morphisms(F.N, m, MorKind::epi)) {
      const auto image = image_of_degree(S, tau, m);
      for (const DeltaMor& sigma : sigmas) {
        const auto& u = F.at(sigma);
        bool meets = false;
        for (const Simplex& z : u) {
          if (contains(image, z)) { meets = true; break; }
        }
        if (meets != factors_through(sigma, tau)) {
          std::ostringstream os;
          os << "axiom (ii) fails at sigma=" << sigma.str() << " tau=" << tau.str();
          throw std::invalid_argument(os.str());
        }
      }
    }
  }
}

std::vector<Simplex> extend(const AdmissibleFamily& F, const DeltaMor& sigma) {
  const int k = sigma.dom;
  if (k > F.N) throw std::invalid_argument("extend: degree exceeds N");
  if (!is_epi(sigma) || sigma.cod != F.n)
    throw std::invalid_argument("extend: need an epi [k] ->> [n]");
  const FiniteSSet& S = *F.sset;
  const auto taus = enumerate_morphisms(F.N, k, MorKind::epi);
  std::vector<Simplex> out;
  for (const Simplex& z : simplices_of_degree(S, k)) {
    bool ok = true;
    for (const DeltaMor& tau : taus) {
      if (!contains(F.at(compose(sigma, tau)), apply(S, tau, z))) { ok = false; break; }
    }
    if (ok) out.push_back(z);
  }
  return out;
}

bool families_disjoint(const AdmissibleFamily& U, const AdmissibleFamily& V) {
  for (const auto& [si, us] : U.table)
    for (const auto& [ti, vs] : V.table)
      for (const Simplex& z : us)
        if (contains(vs, z)) return false;
  return true;
}

bool family_self_disjoint(const AdmissibleFamily& U) {
  for (const auto& [si, us] : U.table)
    for (const auto& [ti, vs] : U.table) {
      if (si == ti) continue;
      for (const Simplex& z : us)
        if (contains(vs, z)) return false;
    }
  return true;
}

UCache::UCache(const AdmissibleFamily& F) : fam_(&F) {}

const UCache::Level& UCache::level_data(int k) {
  auto it = levels_.find(k);
  if (it == levels_.end()) {
    Level lvl;
    lvl.simplices = simplices_of_degree(*fam_->sset, k);
    for (std::size_t i = 0; i < lvl.simplices.size(); ++i)
      lvl.index.emplace(lvl.simplices[i], static_cast<int>(i));
    it = levels_.emplace(k, std::move(lvl)).first;
  }
  return it->second;
}

const std::vector<Simplex>& UCache::level(int k) { return level_data(k).simplices; }

int UCache::simplex_index(int k, const Simplex& z) {
  const auto& idx = level_data(k).index;
  const auto it = idx.find(z);
  return it == idx.end() ? -1 : it->second;
}

const std::vector<Simplex>& UCache::extend_memoized(const DeltaMor& sigma) {
  auto it = extend_memo_.find(sigma.images);
  if (it == extend_memo_.end())
    it = extend_memo_.emplace(sigma.images, extend(*fam_, sigma)).first;
  return it->second;
}

const std::vector<int>& UCache::u_of_epi(const DeltaMor& sigma) {
  auto it = u_memo_.find(sigma.images);
  if (it != u_memo_.end()) return it->second;

  const int k = sigma.dom;
  if (!is_epi(sigma) || sigma.cod != fam_->n)
    throw std::invalid_argument("u_of_epi: need an epi [k] ->> [n]");
  if (k > fam_->N && fam_->N < fam_->n + 1)
    throw std::invalid_argument(
        "u_of_epi: querying degrees above N requires N >= n + 1");

  const FiniteSSet& S = *fam_->sset;
  // I_sigma: monos from [k'] with k' <= N whose composite with sigma is epi,
  // smallest sources first so membership tests fail fast.
  std::vector<DeltaMor> deltas;
  for (int kp = fam_->n; kp <= std::min(fam_->N, k); ++kp)
    for (const DeltaMor& d : enumerate_morphisms(kp, k, MorKind::mono))
      if (is_epi(compose(sigma, d))) deltas.push_back(d);

  std::vector<const std::vector<Simplex>*> targets;
  targets.reserve(deltas.size());
  for (const DeltaMor& d : deltas) targets.push_back(&extend_memoized(compose(sigma, d)));

  std::vector<int> out;
  const auto& zs = level(k);
  for (std::size_t zi = 0; zi < zs.size(); ++zi) {
    bool ok = true;
    for (std::size_t di = 0; di < deltas.size(); ++di) {
      if (!contains(*targets[di], apply(S, deltas[di], zs[zi]))) { ok = false; break; }
    }
    if (ok) out.push_back(static_cast<int>(zi));
  }
  return u_memo_.emplace(sigma.images, std::move(out)).first->second;
}

std::vector<int> UCache::u_of_gamma(const GammaMor& f) {
  if (f.dom != fam_->n)
    throw std::invalid_argument("u_of_gamma: dom(f) != degree of x");
  const auto [red, sup] = red_sup(f);
  const DeltaMor sigma = onto_to_epi(red);
  const auto& u_red = u_of_epi(sigma);
  std::vector<int> out;
  const auto& zs = level(f.cod);
  for (std::size_t zi = 0; zi < zs.size(); ++zi) {
    const int idx = simplex_index(sup.dom, apply(*fam_->sset, sup, zs[zi]));
    if (idx >= 0 && std::binary_search(u_red.begin(), u_red.end(), idx))
      out.push_back(static_cast<int>(zi));
  }
  return out;
}

bool UCache::in_u_of_gamma(const GammaMor& f, const Simplex& z) {
  if (f.dom != fam_->n)
    throw std::invalid_argument("in_u_of_gamma: dom(f) != degree of x");
  if (z.degree() != f.cod) return false;
  const auto [red, sup] = red_sup(f);
  const auto& u_red = u_of_epi(onto_to_epi(red));
  const int idx = simplex_index(sup.dom, apply(*fam_->sset, sup, z));
  return idx >= 0 && std::binary_search(u_red.begin(), u_red.end(), idx);
}

void UCache::warm_degree(int k) {
  level(k);
  for (const DeltaMor& sigma : enumerate_morphisms(k, fam_->n, MorKind::epi))
    u_of_epi(sigma);
}

CheckReport check_first_properties(UCache& cache) {
  CheckReport rep;
  const AdmissibleFamily& F = cache.family();
  const FiniteSSet& S = *F.sset;
  for (int k = F.n; k <= F.N; ++k) {
    for (const DeltaMor& sigma : enumerate_morphisms(k, F.n, MorKind::epi)) {
      const std::vector<Simplex> u = extend(F, sigma);
      // (i)
      ++rep.cases;
      if (!contains(u, apply(S, sigma, F.x)))
        rep.violation("(i) fails at " + sigma.str());
      // (ii): (sigma')^*(U_sigma) inside U_{sigma . sigma'}
      for (int kp = k; kp <= F.N; ++kp) {
        for (const DeltaMor& sp : enumerate_morphisms(kp, k, MorKind::epi)) {
          const std::vector<Simplex> target = extend(F, compose(sigma, sp));
          for (const Simplex& z : u) {
            ++rep.cases;
            if (!contains(target, apply(S, sp, z)))
              rep.violation("(ii) fails at " + sigma.str() + " via " + sp.str());
          }
        }
      }
      // (iii)
      for (int kp = 0; kp <= k; ++kp) {
        for (const DeltaMor& tau : enumerate_morphisms(k, kp, MorKind::epi)) {
          const auto image = image_of_degree(S, tau, kp);
          bool meets = false;
          for (const Simplex& z : u)
            if (contains(image, z)) { meets = true; break; }
          ++rep.cases;
          if (meets != factors_through(sigma, tau))
            rep.violation("(iii) fails at sigma=" + sigma.str() + " tau=" + tau.str());
        }
      }
    }
  }
  return rep;
}

CheckReport check_u_properties(UCache& cache, int max_degree) {
  CheckReport rep;
  const AdmissibleFamily& F = cache.family();
  const FiniteSSet& S = *F.sset;
  for (int k = F.n; k <= max_degree; ++k) {
    const auto& zs = cache.level(k);
    for (const DeltaMor& sigma : enumerate_morphisms(k, F.n, MorKind::epi)) {
      const auto& u = cache.u_of_epi(sigma);
      auto in_u = [&](const Simplex& z) {
        const int idx = cache.simplex_index(k, z);
        return idx >= 0 && std::binary_search(u.begin(), u.end(), idx);
      };
      // (a)
      ++rep.cases;
      if (!in_u(apply(S, sigma, F.x)))
        rep.violation("(a) fails at " + sigma.str());
      // (b)
      if (k <= F.N) {
        const std::vector<Simplex> u_table = extend(F, sigma);
        for (int zi : u) {
          ++rep.cases;
          if (!contains(u_table, zs[static_cast<std::size_t>(zi)]))
            rep.violation("(b) fails at " + sigma.str());
        }
      }
      // (c): monos of every source degree, epi composite required
      for (int i = F.n; i <= k; ++i) {
        for (const DeltaMor& d : enumerate_morphisms(i, k, MorKind::mono)) {
          const DeltaMor sd = compose(sigma, d);
          if (!is_epi(sd)) continue;
          const auto& target = cache.u_of_epi(sd);
          for (int zi : u) {
            ++rep.cases;
            const int idx = cache.simplex_index(i, apply(S, d, zs[static_cast<std::size_t>(zi)]));
            if (idx < 0 || !std::binary_search(target.begin(), target.end(), idx))
              rep.violation("(c) fails at sigma=" + sigma.str() + " delta=" + d.str());
          }
        }
      }
      // (d): epis onto [k] from degrees within range
      for (int kp = k; kp <= max_degree; ++kp) {
        for (const DeltaMor& tau : enumerate_morphisms(kp, k, MorKind::epi)) {
          const auto& target = cache.u_of_epi(compose(sigma, tau));
          for (int zi : u) {
            ++rep.cases;
            const int idx =
                cache.simplex_index(kp, apply(S, tau, zs[static_cast<std::size_t>(zi)]));
            if (idx < 0 || !std::binary_search(target.begin(), target.end(), idx))
              rep.violation("(d) fails at sigma=" + sigma.str() + " tau=" + tau.str());
          }
        }
      }
      // (e)
      for (int kp = 0; kp <= k; ++kp) {
        for (const DeltaMor& tau : enumerate_morphisms(k, kp, MorKind::epi)) {
          const auto image = image_of_degree(S, tau, kp);
          bool meets = false;
          for (int zi : u)
            if (contains(image, zs[static_cast<std::size_t>(zi)])) { meets = true; break; }
          ++rep.cases;
          if (meets != factors_through(sigma, tau))
            rep.violation("(e) fails at sigma=" + sigma.str() + " tau=" + tau.str());
        }
      }
    }
  }
  return rep;
}

}  // namespace simpsep
