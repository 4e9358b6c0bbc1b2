#include "simpsep/json_io.hpp"
#include "simpsep/lemma_checks.hpp"
#include "simpsep/separation.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace simpsep;

namespace {

Simplex cell(const FiniteSSet& S, const std::string& id) {
  return cell_simplex(S, S.cell_by_id(id));
}

BaryPoint bp(std::initializer_list<const char*> coords) {
  std::vector<Rat> c;
  for (const char* s : coords) c.push_back(parse_rat(s));
  return BaryPoint(std::move(c));
}

}  // namespace

TEST_CASE("region tables") {
  const FiniteSSet S = standard_simplex(1);
  const CanonicalSetup setup = canonical_setup(S, 2);  // x = edge, alpha = midpoint
  const NbhdSystem nb = build_regions(setup.family, setup.intervals, Rat(1, 2), 3);

  // the base point lies in its own open neighborhood (diagonal piece)
  CHECK(member(nb, 1, setup.x, setup.alpha, false));
  CHECK(member(nb, 1, setup.x, setup.alpha, true));

  // degree 0 carries nothing when n > 0
  CHECK(nb.levels[0].pieces.empty());
  for (const auto& pieces : nb.levels[0].piece_indices) CHECK(pieces.empty());

  // per-simplex piece counts match a direct scan of all morphisms
  UCache cache(setup.family);
  for (int k = 1; k <= 3; ++k) {
    const auto& lvl = nb.levels[static_cast<std::size_t>(k)];
    for (std::size_t zi = 0; zi < lvl.simplices.size(); ++zi) {
      long long expected = 0;
      for (const GammaMor& f : enumerate_gamma(1, k, false))
        if (cache.in_u_of_gamma(f, lvl.simplices[zi])) ++expected;
      CHECK(static_cast<long long>(lvl.piece_indices[zi].size()) == expected);
    }
  }
}

TEST_CASE("open membership implies closed membership and grows with eps") {
  const FiniteSSet S = boundary(2);
  const CanonicalSetup setup = canonical_setup(S, 2);
  const NbhdSystem tight = build_regions(setup.family, setup.intervals, Rat(1, 4), 3);
  const NbhdSystem loose = build_regions(setup.family, setup.intervals, Rat(1, 2), 3);
  std::mt19937_64 rng(3);
  for (int k = 1; k <= 3; ++k) {
    for (const Simplex& y : tight.levels[static_cast<std::size_t>(k)].simplices) {
      for (int trial = 0; trial < 40; ++trial) {
        const BaryPoint beta = oracle::random_point(rng, k);
        if (member(tight, k, y, beta, false)) {
          CHECK(member(tight, k, y, beta, true));
          CHECK(member(loose, k, y, beta, false));
        }
      }
    }
  }
}

TEST_CASE("compatibility of the neighborhoods, small sweep") {
  const FiniteSSet S = standard_simplex(1);
  CHECK(run_compat_suite(S, Rat(1, 2), 3, 40, 7).ok());
}

TEST_CASE("a corrupted region table is caught by the checker") {
  const FiniteSSet S = standard_simplex(1);
  const CanonicalSetup setup = canonical_setup(S, 2);
  NbhdSystem nb = build_regions(setup.family, setup.intervals, Rat(1, 2), 2);
  // drop every piece of one degree-1 simplex
  bool dropped = false;
  for (auto& pieces : nb.levels[1].piece_indices) {
    if (!pieces.empty()) {
      pieces.clear();
      dropped = true;
      break;
    }
  }
  REQUIRE(dropped);
  CheckReport rep;
  for (int i = 0; i <= 1; ++i) rep.merge(check_compat_face(nb, 1, i, 40, 7, false));
  CHECK_FALSE(rep.ok());
}

TEST_CASE("point normal forms") {
  const FiniteSSet S = standard_simplex(1);
  {
    // boundary coordinate: all mass at vertex 0 collapses along d_1
    const auto [y, beta] = point_normal_form(S, cell(S, "01"), bp({"1", "0"}));
    CHECK(y == cell(S, "0"));
    CHECK(beta == bp({"1"}));
  }
  {
    const auto [y, beta] = point_normal_form(S, cell(S, "01"), bp({"1/3", "2/3"}));
    CHECK(y == cell(S, "01"));
    CHECK(beta == bp({"1/3", "2/3"}));
  }
  {
    // degenerate simplex collapses through its epi
    const Simplex sv0{degeneracy(1, 0), S.cell_by_id("0")};
    const auto [y, beta] = point_normal_form(S, sv0, bp({"1/3", "2/3"}));
    CHECK(y == cell(S, "0"));
    CHECK(beta == bp({"1"}));
  }
  {
    // combined: degenerate edge of the triangle with a boundary coordinate
    const FiniteSSet D2 = standard_simplex(2);
    const Simplex z{DeltaMor(2, 1, {0, 1, 1}), D2.cell_by_id("01")};
    const auto [y, beta] = point_normal_form(D2, z, bp({"0", "1/2", "1/2"}));
    CHECK(y == cell(D2, "1"));
    CHECK(beta == bp({"1"}));
  }
}

TEST_CASE("irreducible pairs match brute-force filtering") {
  const auto reducible_free = [](const GammaMor& f, const GammaMor& g, int k) {
    // R1: blockwise intersections at most one element
    for (const auto& bf : f.blocks)
      for (const auto& bg : g.blocks) {
        int common = 0;
        for (int v : bf)
          if (std::count(bg.begin(), bg.end(), v)) ++common;
        if (common > 1) return false;
      }
    // R2: joint support covers [k]
    std::vector<char> covered(static_cast<std::size_t>(k) + 1, 0);
    for (const auto& b : f.blocks)
      for (int v : b) covered[static_cast<std::size_t>(v)] = 1;
    for (const auto& b : g.blocks)
      for (int v : b) covered[static_cast<std::size_t>(v)] = 1;
    if (!std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; }))
      return false;
    // R3: at most one element of each block outside the other support
    const auto outside = [](const std::vector<std::vector<int>>& blocks,
                            const GammaMor& other) {
      for (const auto& b : blocks) {
        int out = 0;
        for (int v : b) {
          bool in_other = false;
          for (const auto& ob : other.blocks)
            if (std::count(ob.begin(), ob.end(), v)) { in_other = true; break; }
          if (!in_other) ++out;
        }
        if (out > 1) return false;
      }
      return true;
    };
    return outside(f.blocks, g) && outside(g.blocks, f);
  };

  for (int n = 0; n <= 1; ++n) {
    for (int m = 0; m <= 1; ++m) {
      for (int k = 0; k <= 4; ++k) {
        auto pairs = irreducible_pairs(n, m, k);
        std::sort(pairs.begin(), pairs.end());
        CHECK(std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end());
        std::vector<std::pair<GammaMor, GammaMor>> expected;
        for (const GammaMor& f : enumerate_gamma(n, k, false))
          for (const GammaMor& g : enumerate_gamma(m, k, false))
            if (reducible_free(f, g, k)) expected.emplace_back(f, g);
        std::sort(expected.begin(), expected.end());
        CHECK(pairs == expected);
      }
    }
  }
}

TEST_CASE("irreducible pairs vanish above the support bound") {
  for (int k = 8; k <= 18; ++k) CHECK(irreducible_pairs(1, 1, k).empty());
  for (int k = 3; k <= 8; ++k) CHECK(irreducible_pairs(0, 0, k).empty());
}

TEST_CASE("end-to-end separation of the two vertices of the interval") {
  const FiniteSSet S = standard_simplex(1);
  const SeparationCertificate cert =
      find_eta(S, cell(S, "0"), bp({"1"}), cell(S, "1"), bp({"1"}));
  CHECK(cert.branch == "distinct-cells");
  CHECK(cert.kmax == 8);
  CHECK(cert.n == 0);
  CHECK(cert.m == 0);
  CHECK(cert.eta == Rat(1, 2));  // all evidence is set-level, first eta passes
  for (const EvidenceEntry& e : cert.evidence)
    CHECK(e.kind == EvidenceEntry::Kind::set_disjoint);
  std::string why;
  CHECK(verify_certificate(S, cert, &why));

  // boundary points of the edge normalize to the vertices
  const SeparationCertificate cert2 =
      find_eta(S, cell(S, "01"), bp({"1", "0"}), cell(S, "01"), bp({"0", "1"}));
  CHECK(cert2.branch == "distinct-cells");
  CHECK(verify_certificate(S, cert2));
}

TEST_CASE("equal points are rejected") {
  const FiniteSSet S = standard_simplex(1);
  CHECK_THROWS_AS(find_eta(S, cell(S, "01"), bp({"1/2", "1/2"}), cell(S, "01"),
                           bp({"1/2", "1/2"})),
                  std::invalid_argument);
  // distinct presentations of the same realization point
  const Simplex sv0{degeneracy(1, 0), S.cell_by_id("0")};
  CHECK_THROWS_AS(
      find_eta(S, cell(S, "01"), bp({"1", "0"}), sv0, bp({"1/4", "3/4"})),
      std::invalid_argument);
}

TEST_CASE("certificate mutations are rejected") {
  const FiniteSSet S = standard_simplex(1);
  const SeparationCertificate good =
      find_eta(S, cell(S, "0"), bp({"1"}), cell(S, "1"), bp({"1"}));

  SeparationCertificate dropped = good;
  dropped.evidence.pop_back();
  std::string why;
  CHECK_FALSE(verify_certificate(S, dropped, &why));
  CHECK(why.find("cover") != std::string::npos);

  SeparationCertificate wrong_kmax = good;
  wrong_kmax.kmax = 6;
  CHECK_FALSE(verify_certificate(S, wrong_kmax, &why));

  SeparationCertificate bad_eta = good;
  bad_eta.eta = 2;
  CHECK_FALSE(verify_certificate(S, bad_eta, &why));

  SeparationCertificate tampered = good;
  // claim a set-level disjointness for a pair that does intersect: swap the
  // families so U = V, making the diagonal pair overlap
  tampered.fam_v = tampered.fam_u;
  CHECK_FALSE(verify_certificate(S, tampered, &why));
}

TEST_CASE("closed-union membership agrees with a direct morphism scan") {
  const FiniteSSet S = standard_simplex(1);
  const CanonicalSetup setup = canonical_setup(S, 2);
  UCache cache(setup.family);
  std::mt19937_64 rng(17);
  const Rat eta(1, 4);
  for (int k = 1; k <= 4; ++k) {
    cache.warm_degree(k);
    const auto zs = simplices_of_degree(S, k);
    for (int trial = 0; trial < 30; ++trial) {
      const Simplex y = zs[rng() % zs.size()];
      const BaryPoint beta = oracle::random_point(rng, k);
      bool direct = false;
      for (const GammaMor& f : enumerate_gamma(1, k, false)) {
        if (cache.in_u_of_gamma(f, y) &&
            w_member(f, eta, setup.intervals, true, beta)) {
          direct = true;
          break;
        }
      }
      CHECK(member_closed_union(cache, setup.intervals, eta, y, beta) == direct);
    }
  }
}

TEST_CASE("certificate json round-trip") {
  const FiniteSSet S = standard_simplex(1);
  const SeparationCertificate cert =
      find_eta(S, cell(S, "0"), bp({"1"}), cell(S, "1"), bp({"1"}));
  const Json j = to_json(cert);
  const FiniteSSet S2 = sset_from_json(j.at("sset"));
  const SeparationCertificate back = certificate_from_json(S2, j);
  CHECK(verify_certificate(S2, back));
  CHECK(to_json(back).at("evidence") == j.at("evidence"));
  CHECK(j.at("eta").get<std::string>() == rat_str(cert.eta));
}
