#include "simpsep/separation.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace simpsep {

namespace {

using mpz = boost::multiprecision::mpz_int;

BaryPoint random_interior(std::mt19937_64& rng, int degree) {
  std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
  Rat sum = 0;
  for (Rat& t : c) {
    t = Rat(static_cast<unsigned long>(rng() % 65536) + 1);
    sum += t;
  }
  for (Rat& t : c) t /= sum;
  return BaryPoint(std::move(c));
}

std::vector<BaryPoint> probe_points(int degree, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BaryPoint> pts;
  pts.reserve(static_cast<std::size_t>(samples + degree + 2));
  for (int s = 0; s < samples; ++s) pts.push_back(random_interior(rng, degree));
  for (int p = 0; p <= degree; ++p) pts.push_back(BaryPoint::vertex(degree, p));
  pts.push_back(BaryPoint::barycenter(degree));
  return pts;
}

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min<int>(jobs, static_cast<int>(n));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

bool sorted_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else return false;
  }
  return true;
}

int find_simplex(const std::vector<Simplex>& list, const Simplex& z) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] == z) return static_cast<int>(i);
  return -1;
}

}  // namespace

NbhdSystem build_regions(const AdmissibleFamily& F, const IntervalFamily& intervals,
                         const Rat& eps, int kmax) {
  if (!(0 < eps && eps < 1))
    throw std::invalid_argument("build_regions: eps must lie in (0,1)");
  if (intervals.n != F.n)
    throw std::invalid_argument("build_regions: interval family degree != n");
  NbhdSystem nb{F.sset, &F, intervals, eps, kmax, {}};
  UCache cache(F);
  for (int k = 0; k <= kmax; ++k) {
    NbhdSystem::Level lvl;
    lvl.simplices = cache.level(k);
    lvl.piece_indices.assign(lvl.simplices.size(), {});
    if (k >= F.n) {
      for (const GammaMor& f : enumerate_gamma(F.n, k, false)) {
        const std::vector<int> u = cache.u_of_gamma(f);
        if (u.empty()) continue;
        NbhdSystem::Piece piece{f, LinSystem{k + 1, {}}, w_constraints(f, eps, intervals, true)};
        for (const GammaMor& g : upper_set(f)) {
          LinSystem wg = w_constraints(g, eps, intervals, false);
          piece.open_conj.rows.insert(piece.open_conj.rows.end(),
                                      std::make_move_iterator(wg.rows.begin()),
                                      std::make_move_iterator(wg.rows.end()));
        }
        const int pi = static_cast<int>(lvl.pieces.size());
        for (int zi : u) lvl.piece_indices[static_cast<std::size_t>(zi)].push_back(pi);
        lvl.pieces.push_back(std::move(piece));
      }
    }
    nb.levels.push_back(std::move(lvl));
  }
  return nb;
}

bool member(const NbhdSystem& nb, int k, const Simplex& y, const BaryPoint& beta,
            bool closed) {
  if (k < 0 || k > nb.kmax)
    throw std::invalid_argument("member: degree out of built range");
  if (y.degree() != k || beta.degree() != k)
    throw std::invalid_argument("member: dimension mismatch");
  const auto& lvl = nb.levels[static_cast<std::size_t>(k)];
  const int zi = find_simplex(lvl.simplices, y);
  if (zi < 0) throw std::invalid_argument("member: simplex not of this complex");
  for (int pi : lvl.piece_indices[static_cast<std::size_t>(zi)]) {
    const auto& piece = lvl.pieces[static_cast<std::size_t>(pi)];
    if (satisfies(closed ? piece.closed_sys : piece.open_conj, beta.coords)) return true;
  }
  return false;
}

CheckReport check_compat_face(const NbhdSystem& nb, int k, int i, int samples,
                              std::uint64_t seed, bool closed) {
  if (k < 1 || k > nb.kmax)
    throw std::invalid_argument("check_compat_face: need 1 <= k <= kmax");
  if (i < 0 || i > k) throw std::invalid_argument("check_compat_face: bad index");
  CheckReport rep;
  const FiniteSSet& S = *nb.sset;
  const DeltaMor di = face(k - 1, i);
  const auto pts = probe_points(k - 1, samples, seed);
  for (const Simplex& y : nb.levels[static_cast<std::size_t>(k)].simplices) {
    const Simplex dy = apply(S, di, y);
    for (const BaryPoint& beta : pts) {
      ++rep.cases;
      const bool up = member(nb, k, y, pushforward(di, beta), closed);
      const bool down = member(nb, k - 1, dy, beta, closed);
      if (up != down) {
        std::ostringstream os;
        os << "face compat fails at k=" << k << " i=" << i << " y=" << simplex_id(S, y)
           << (closed ? " (closed)" : " (open)");
        rep.violation(os.str());
      }
    }
  }
  return rep;
}

CheckReport check_compat_degen(const NbhdSystem& nb, int k, int i, int samples,
                               std::uint64_t seed, bool closed) {
  if (k < 0 || k + 1 > nb.kmax)
    throw std::invalid_argument("check_compat_degen: need k+1 <= kmax");
  if (i < 0 || i > k) throw std::invalid_argument("check_compat_degen: bad index");
  CheckReport rep;
  const FiniteSSet& S = *nb.sset;
  const DeltaMor si = degeneracy(k + 1, i);
  const auto pts = probe_points(k + 1, samples, seed);
  for (const Simplex& y : nb.levels[static_cast<std::size_t>(k)].simplices) {
    const Simplex sy = apply(S, si, y);
    for (const BaryPoint& beta : pts) {
      ++rep.cases;
      const bool down = member(nb, k, y, pushforward(si, beta), closed);
      const bool up = member(nb, k + 1, sy, beta, closed);
      if (up != down) {
        std::ostringstream os;
        os << "degeneracy compat fails at k=" << k << " i=" << i
           << " y=" << simplex_id(S, y) << (closed ? " (closed)" : " (open)");
        rep.violation(os.str());
      }
    }
  }
  return rep;
}

std::pair<Simplex, BaryPoint> point_normal_form(const FiniteSSet& S, Simplex y,
                                                BaryPoint beta) {
  if (beta.degree() != y.degree())
    throw std::invalid_argument("point_normal_form: dimension mismatch");
  for (;;) {
    const int k = y.degree();
    int zero_at = -1;
    for (int j = 0; j <= k; ++j) {
      if (beta.coords[static_cast<std::size_t>(j)] == 0) { zero_at = j; break; }
    }
    if (zero_at >= 0) {
      // beta = (delta_j)_* beta' with the zero coordinate removed, so the
      // point is identified with (d_j(y), beta').
      y = apply(S, face(k - 1, zero_at), y);
      std::vector<Rat> c = beta.coords;
      c.erase(c.begin() + zero_at);
      beta = BaryPoint(std::move(c));
      continue;
    }
    if (is_degenerate(y)) {
      int i = 0;
      while (y.epi.images[static_cast<std::size_t>(i)] !=
             y.epi.images[static_cast<std::size_t>(i) + 1])
        ++i;
      std::vector<int> im = y.epi.images;
      im.erase(im.begin() + i + 1);
      y = Simplex{DeltaMor(k - 1, y.epi.cod, std::move(im)), y.cell};
      beta = pushforward(degeneracy(k, i), beta);
      continue;
    }
    return {std::move(y), std::move(beta)};
  }
}

std::vector<std::pair<GammaMor, GammaMor>> irreducible_pairs(int n, int m, int k) {
  if (n < 0 || m < 0 || k < 0)
    throw std::invalid_argument("irreducible_pairs: negative degree");
  std::vector<std::pair<GammaMor, GammaMor>> out;
  std::vector<std::vector<char>> used_full(static_cast<std::size_t>(n) + 1,
                                           std::vector<char>(static_cast<std::size_t>(m) + 1, 0));
  std::vector<char> used_fonly(static_cast<std::size_t>(n) + 1, 0);
  std::vector<char> used_gonly(static_cast<std::size_t>(m) + 1, 0);
  std::vector<std::vector<int>> fblocks(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<int>> gblocks(static_cast<std::size_t>(m) + 1);

  const std::function<void(int, int, int)> rec = [&](int pos, int fmax, int gmax) {
    if (pos == k + 1) {
      if (fmax == n && gmax == m)
        out.emplace_back(GammaMor(n, k, fblocks), GammaMor(m, k, gblocks));
      return;
    }
    if (std::max(n - fmax, m - gmax) > k + 1 - pos) return;  // cannot finish
    const int fchoices[3] = {-1, fmax, fmax + 1};
    const int gchoices[3] = {-1, gmax, gmax + 1};
    for (int a : fchoices) {
      if (a != -1 && (a < 0 || a > n)) continue;
      for (int b : gchoices) {
        if (b != -1 && (b < 0 || b > m)) continue;
        if (a == -1 && b == -1) continue;
        char* cap = nullptr;
        if (a >= 0 && b >= 0) cap = &used_full[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        else if (a >= 0) cap = &used_fonly[static_cast<std::size_t>(a)];
        else cap = &used_gonly[static_cast<std::size_t>(b)];
        if (*cap) continue;
        *cap = 1;
        if (a >= 0) fblocks[static_cast<std::size_t>(a)].push_back(pos);
        if (b >= 0) gblocks[static_cast<std::size_t>(b)].push_back(pos);
        rec(pos + 1, std::max(fmax, a), std::max(gmax, b));
        if (a >= 0) fblocks[static_cast<std::size_t>(a)].pop_back();
        if (b >= 0) gblocks[static_cast<std::size_t>(b)].pop_back();
        *cap = 0;
      }
    }
  };
  rec(0, -1, -1);
  return out;
}

namespace {

struct PairStatus {
  int k;
  GammaMor f;
  GammaMor g;
  bool set_disjoint;
};

std::vector<PairStatus> classify_pairs(UCache& uc, UCache& vc, int n, int m, int kmax) {
  std::vector<PairStatus> pairs;
  for (int k = 0; k <= kmax; ++k) {
    std::map<GammaMor, std::vector<int>> umemo, vmemo;
    for (auto& [f, g] : irreducible_pairs(n, m, k)) {
      auto ui = umemo.find(f);
      if (ui == umemo.end()) ui = umemo.emplace(f, uc.u_of_gamma(f)).first;
      auto vi = vmemo.find(g);
      if (vi == vmemo.end()) vi = vmemo.emplace(g, vc.u_of_gamma(g)).first;
      pairs.push_back({k, f, g, sorted_disjoint(ui->second, vi->second)});
    }
  }
  return pairs;
}

std::pair<int, int> oriented_ratio_pair(const BaryPoint& a, const BaryPoint& b) {
  for (int kk = 0; kk < a.degree(); ++kk)
    for (int ll = kk + 1; ll <= a.degree(); ++ll)
      if (a.coords[static_cast<std::size_t>(kk)] < b.coords[static_cast<std::size_t>(kk)] &&
          a.coords[static_cast<std::size_t>(ll)] > b.coords[static_cast<std::size_t>(ll)])
        return {kk, ll};
  return {-1, -1};
}

}  // namespace

SeparationCertificate find_eta(const FiniteSSet& S, const Simplex& p1, const BaryPoint& c1,
                               const Simplex& p2, const BaryPoint& c2,
                               const SeparationOptions& opts) {
  auto [x, alpha] = point_normal_form(S, p1, c1);
  auto [y, beta] = point_normal_form(S, p2, c2);
  if (x == y && alpha == beta)
    throw std::invalid_argument("the two points coincide in the realization");

  SeparationCertificate cert;
  cert.sset = &S;
  if (x == y) {
    cert.branch = "same-cell";
    auto pr = oriented_ratio_pair(alpha, beta);
    if (pr.first < 0) {
      std::swap(alpha, beta);
      cert.swapped = true;
      pr = oriented_ratio_pair(alpha, beta);
    }
    if (pr.first < 0)
      throw std::logic_error("no orientable coordinate pair for distinct points");
    cert.ratio_k = pr.first;
    cert.ratio_l = pr.second;
    const int n = x.degree();
    cert.N = (n + 1) * (n + 1);
    cert.fam_u = build_singleton(S, x, cert.N);
    cert.fam_v = cert.fam_u;
    if (!family_self_disjoint(cert.fam_u))
      throw std::runtime_error("singleton family is not self-disjoint");
    std::tie(cert.int_i, cert.int_j) =
        make_disjoint_pair(alpha, beta, cert.ratio_k, cert.ratio_l);
  } else {
    cert.branch = "distinct-cells";
    cert.N = std::max(x.degree(), y.degree()) + 1;
    cert.fam_u = build_singleton(S, x, cert.N);
    cert.fam_v = build_singleton(S, y, cert.N);
    if (!families_disjoint(cert.fam_u, cert.fam_v))
      throw std::runtime_error("singleton families are not disjoint");
    cert.int_i = make_admissible(alpha, 2);
    cert.int_j = make_admissible(beta, 2);
  }
  cert.x = x;
  cert.alpha = alpha;
  cert.y = y;
  cert.beta = beta;
  cert.n = x.degree();
  cert.m = y.degree();
  cert.kmax = 2 * (cert.n + 2) * (cert.m + 2);

  UCache uc(cert.fam_u), vc(cert.fam_v);
  const std::vector<PairStatus> pairs = classify_pairs(uc, vc, cert.n, cert.m, cert.kmax);
  std::vector<std::size_t> needs_lp;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (!pairs[i].set_disjoint) needs_lp.push_back(i);

  // The closures shrink as eta does, so a pair once infeasible stays settled.
  std::vector<char> settled(needs_lp.size(), 0);
  for (int depth = 1; depth <= opts.max_depth; ++depth) {
    const Rat eta(mpz(1), mpz(1) << depth);
    parallel_for(needs_lp.size(), opts.jobs, [&](std::size_t i) {
      if (settled[i]) return;
      const PairStatus& p = pairs[needs_lp[i]];
      settled[i] = !disjoint(w_constraints(p.f, eta, cert.int_i, true),
                             w_constraints(p.g, eta, cert.int_j, true))
                        .feasible;
    });
    if (!std::all_of(settled.begin(), settled.end(), [](char c) { return c != 0; })) continue;

    cert.eta = eta;
    const NbhdSystem nu = build_regions(cert.fam_u, cert.int_i, eta, cert.n);
    const NbhdSystem nv = build_regions(cert.fam_v, cert.int_j, eta, cert.m);
    if (!member(nu, cert.n, cert.x, cert.alpha, false) ||
        !member(nv, cert.m, cert.y, cert.beta, false))
      throw std::runtime_error("input point not contained in its own neighborhood");
    for (const PairStatus& p : pairs) {
      cert.evidence.push_back({p.k, p.f, p.g, is_onto(p.f), is_onto(p.g),
                               p.set_disjoint ? EvidenceEntry::Kind::set_disjoint
                                              : EvidenceEntry::Kind::lp_infeasible});
    }
    return cert;
  }
  throw SearchExhausted("no eta of the form 2^-h passed all disjointness checks up to h = " +
                        std::to_string(opts.max_depth));
}

bool verify_certificate(const FiniteSSet& S, const SeparationCertificate& cert,
                        std::string* first_failure) {
  const auto fail = [&](const std::string& msg) {
    if (first_failure) *first_failure = msg;
    return false;
  };
  try {
    const bool same_cell = cert.branch == "same-cell";
    if (!same_cell && cert.branch != "distinct-cells") return fail("unknown branch");
    if (is_degenerate(cert.x) || is_degenerate(cert.y))
      return fail("point cell not in normal form");
    if (!is_interior(cert.alpha) || !is_interior(cert.beta))
      return fail("point coordinates not interior");
    if (cert.n != cert.x.degree() || cert.m != cert.y.degree() ||
        cert.alpha.degree() != cert.n || cert.beta.degree() != cert.m)
      return fail("degree bookkeeping inconsistent");
    if (cert.kmax != 2 * (cert.n + 2) * (cert.m + 2))
      return fail("kmax != 2(n+2)(m+2)");
    if (!(0 < cert.eta && cert.eta < 1)) return fail("eta outside (0,1)");

    if (same_cell) {
      if (!(cert.x == cert.y)) return fail("same-cell branch with distinct cells");
      if (cert.alpha == cert.beta) return fail("points coincide");
      if (cert.N != (cert.n + 1) * (cert.n + 1)) return fail("same-cell N != (n+1)^2");
      if (!(0 <= cert.ratio_k && cert.ratio_k < cert.ratio_l && cert.ratio_l <= cert.n))
        return fail("ratio pair out of range");
      if (!(cert.alpha.coords[static_cast<std::size_t>(cert.ratio_k)] <
                cert.beta.coords[static_cast<std::size_t>(cert.ratio_k)] &&
            cert.alpha.coords[static_cast<std::size_t>(cert.ratio_l)] >
                cert.beta.coords[static_cast<std::size_t>(cert.ratio_l)]))
        return fail("ratio pair not oriented");
      const auto& wi = cert.int_i.bounds.at({cert.ratio_k, cert.ratio_l});
      const auto& wj = cert.int_j.bounds.at({cert.ratio_k, cert.ratio_l});
      if (!(wi.second < wj.first || wj.second < wi.first))
        return fail("closed ratio windows are not disjoint");
      if (!(cert.fam_u.table == cert.fam_v.table))
        return fail("same-cell certificate with two different families");
    } else {
      if (cert.x == cert.y) return fail("distinct-cells branch with equal cells");
      if (cert.N < std::max(cert.n, cert.m) + 1)
        return fail("N too small for queries above N");
    }

    if (cert.fam_u.n != cert.n || cert.fam_u.N != cert.N || !(cert.fam_u.x == cert.x))
      return fail("U family metadata inconsistent");
    if (cert.fam_v.n != cert.m || cert.fam_v.N != cert.N || !(cert.fam_v.x == cert.y))
      return fail("V family metadata inconsistent");
    validate_admissible(cert.fam_u);
    validate_admissible(cert.fam_v);
    if (same_cell) {
      if (!family_self_disjoint(cert.fam_u)) return fail("family not self-disjoint");
    } else if (!families_disjoint(cert.fam_u, cert.fam_v)) {
      return fail("families not pairwise disjoint");
    }

    for (const auto& [key, lam] : lambda_ratios(cert.alpha)) {
      const auto& w = cert.int_i.bounds.at(key);
      if (!(w.first < lam && lam < w.second)) return fail("I is not alpha-admissible");
    }
    for (const auto& [key, lam] : lambda_ratios(cert.beta)) {
      const auto& w = cert.int_j.bounds.at(key);
      if (!(w.first < lam && lam < w.second)) return fail("J is not beta-admissible");
    }

    UCache uc(cert.fam_u), vc(cert.fam_v);
    std::size_t seen = 0;
    for (int k = 0; k <= cert.kmax; ++k) {
      auto expected = irreducible_pairs(cert.n, cert.m, k);
      std::vector<std::pair<GammaMor, GammaMor>> got;
      for (const EvidenceEntry& e : cert.evidence)
        if (e.k == k) got.emplace_back(e.f, e.g);
      seen += got.size();
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      if (expected != got)
        return fail("evidence does not cover the irreducible pairs at degree " +
                    std::to_string(k));
    }
    if (seen != cert.evidence.size()) return fail("evidence contains out-of-range entries");

    for (const EvidenceEntry& e : cert.evidence) {
      if (e.f.dom != cert.n || e.g.dom != cert.m || e.f.cod != e.k || e.g.cod != e.k)
        return fail("malformed evidence entry");
      if (e.f_onto != is_onto(e.f) || e.g_onto != is_onto(e.g))
        return fail("evidence onto flags wrong");
      if (e.kind == EvidenceEntry::Kind::set_disjoint) {
        if (!sorted_disjoint(uc.u_of_gamma(e.f), vc.u_of_gamma(e.g)))
          return fail("set-level evidence refuted at degree " + std::to_string(e.k) +
                      ", f=" + e.f.str() + ", g=" + e.g.str());
      } else {
        if (disjoint(w_constraints(e.f, cert.eta, cert.int_i, true),
                     w_constraints(e.g, cert.eta, cert.int_j, true))
                .feasible)
          return fail("lp evidence refuted at degree " + std::to_string(e.k) +
                      ", f=" + e.f.str() + ", g=" + e.g.str());
      }
    }

    const NbhdSystem nu = build_regions(cert.fam_u, cert.int_i, cert.eta, cert.n);
    if (!member(nu, cert.n, cert.x, cert.alpha, false))
      return fail("containment of the first point fails");
    const NbhdSystem nv = build_regions(cert.fam_v, cert.int_j, cert.eta, cert.m);
    if (!member(nv, cert.m, cert.y, cert.beta, false))
      return fail("containment of the second point fails");
    return true;
  } catch (const std::exception& ex) {
    return fail(std::string("verification error: ") + ex.what());
  }
}

bool member_closed_union(UCache& cache, const IntervalFamily& intervals, const Rat& eta,
                         const Simplex& y, const BaryPoint& beta) {
  const int k = y.degree();
  if (beta.degree() != k)
    throw std::invalid_argument("member_closed_union: dimension mismatch");
  const int n = cache.family().n;
  if (k < n) return false;  // no morphisms [n] => [k]

  std::vector<int> order(static_cast<std::size_t>(k) + 1);
  for (int p = 0; p <= k; ++p) order[static_cast<std::size_t>(p)] = p;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return beta.coords[static_cast<std::size_t>(a)] < beta.coords[static_cast<std::size_t>(b)];
  });

  std::vector<char> excluded(static_cast<std::size_t>(k) + 1, 0);
  bool found = false;

  // Tests every split of the support into n+1 consecutive runs against the
  // closed ratio windows, then the U(f) membership.
  const auto try_support = [&] {
    std::vector<int> support;
    for (int p = 0; p <= k; ++p)
      if (!excluded[static_cast<std::size_t>(p)]) support.push_back(p);
    if (static_cast<int>(support.size()) < n + 1) return;
    std::vector<Rat> sums(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(n) + 1);
    const std::function<void(std::size_t, int)> split = [&](std::size_t start, int bi) {
      if (found) return;
      const std::size_t rest = support.size() - start;
      const std::size_t blocks_left = static_cast<std::size_t>(n - bi) + 1;
      if (rest < blocks_left) return;
      const std::size_t max_len = bi == n ? rest : rest - blocks_left + 1;
      for (std::size_t len = bi == n ? rest : 1; len <= max_len; ++len) {
        Rat sum = 0;
        blocks[static_cast<std::size_t>(bi)].clear();
        for (std::size_t t = 0; t < len; ++t) {
          blocks[static_cast<std::size_t>(bi)].push_back(support[start + t]);
          sum += beta.coords[static_cast<std::size_t>(support[start + t])];
        }
        sums[static_cast<std::size_t>(bi)] = sum;
        bool windows_ok = true;
        for (int i = 0; i < bi && windows_ok; ++i) {
          const auto& w = intervals.bounds.at({i, bi});
          const Rat& si = sums[static_cast<std::size_t>(i)];
          const Rat& sj = sums[static_cast<std::size_t>(bi)];
          if (!(w.first * si <= sj && sj <= w.second * si)) windows_ok = false;
        }
        if (!windows_ok) continue;
        if (bi == n) {
          GammaMor f(n, k, blocks);
          if (cache.in_u_of_gamma(f, y)) { found = true; return; }
        } else {
          split(start + len, bi + 1);
          if (found) return;
        }
      }
    };
    split(0, 0);
  };

  // Enumerate exclusion sets of total mass <= eta, cheapest coordinates first.
  const std::function<void(std::size_t, Rat)> rec = [&](std::size_t idx, Rat budget) {
    if (found) return;
    try_support();
    for (std::size_t j = idx; j <= static_cast<std::size_t>(k) && !found; ++j) {
      const Rat& c = beta.coords[static_cast<std::size_t>(order[j])];
      if (c > budget) break;  // sorted ascending, nothing further fits
      excluded[static_cast<std::size_t>(order[j])] = 1;
      rec(j + 1, budget - c);
      excluded[static_cast<std::size_t>(order[j])] = 0;
    }
  };
  rec(0, eta);
  return found;
}

CheckReport probe_disjointness(UCache& uc, const IntervalFamily& int_i, UCache& vc,
                               const IntervalFamily& int_j, const Rat& eta, int kmax,
                               int per_degree, std::uint64_t seed, int jobs) {
  CheckReport rep;
  for (int k = 0; k <= kmax; ++k) {
    uc.warm_degree(k);
    vc.warm_degree(k);
    const auto& zs = uc.level(k);
    if (zs.empty()) continue;
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(k) * 0x9E3779B97F4A7C15ull);
    struct Probe {
      Simplex y;
      BaryPoint beta;
    };
    std::vector<Probe> probes;
    probes.reserve(static_cast<std::size_t>(per_degree));
    for (int s = 0; s < per_degree; ++s)
      probes.push_back({zs[rng() % zs.size()], random_interior(rng, k)});
    std::vector<char> bad(probes.size(), 0);
    parallel_for(probes.size(), jobs, [&](std::size_t i) {
      bad[i] = member_closed_union(uc, int_i, eta, probes[i].y, probes[i].beta) &&
               member_closed_union(vc, int_j, eta, probes[i].y, probes[i].beta);
    });
    rep.cases += static_cast<long long>(probes.size());
    for (std::size_t i = 0; i < probes.size(); ++i) {
      if (bad[i])
        rep.violation("common member of the closed unions at degree " + std::to_string(k) +
                      ": " + simplex_id(uc.sset(), probes[i].y));
    }
  }
  return rep;
}

}  // namespace simpsep
