#include "simpsep/delta.hpp"
#include "simpsep/json_io.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace simpsep;

TEST_CASE("face and degeneracy generators") {
  CHECK(face(1, 0).images == std::vector<int>{1, 2});
  CHECK(face(0, 1).images == std::vector<int>{0});
  CHECK(face(2, 2).images == std::vector<int>{0, 1, 3});
  CHECK(degeneracy(1, 0).images == std::vector<int>{0, 0});
  CHECK(degeneracy(2, 0).images == std::vector<int>{0, 0, 1});
  CHECK(degeneracy(3, 1).images == std::vector<int>{0, 1, 1, 2});
  CHECK_THROWS_AS(face(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(degeneracy(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(degeneracy(3, 3), std::invalid_argument);
}

TEST_CASE("composition") {
  CHECK(compose(degeneracy(1, 0), face(0, 0)) == DeltaMor::identity(0));
  CHECK(compose(face(1, 0), face(0, 0)).images == std::vector<int>{2});
  const DeltaMor f(2, 3, {0, 2, 2});
  CHECK(compose(DeltaMor::identity(3), f) == f);
  CHECK(compose(f, DeltaMor::identity(2)) == f);
  CHECK_THROWS_AS(compose(face(0, 0), face(0, 0)), std::invalid_argument);
}

TEST_CASE("epi and mono predicates") {
  CHECK(is_epi(degeneracy(2, 0)));
  CHECK_FALSE(is_mono(degeneracy(2, 0)));
  CHECK(is_mono(face(1, 1)));
  CHECK_FALSE(is_epi(face(1, 1)));
  CHECK(is_epi(DeltaMor::identity(3)));
  CHECK(is_mono(DeltaMor::identity(3)));
}

TEST_CASE("epi-mono factorization") {
  const DeltaMor f(2, 2, {0, 0, 2});
  const auto [e, m] = epi_mono_factor(f);
  CHECK(e.images == std::vector<int>{0, 0, 1});
  CHECK(m.images == std::vector<int>{0, 2});
  CHECK(compose(m, e) == f);

  const DeltaMor epi = degeneracy(3, 1);
  const auto [e2, m2] = epi_mono_factor(epi);
  CHECK(e2 == epi);
  CHECK(m2 == DeltaMor::identity(2));

  const DeltaMor mono = face(2, 0);
  const auto [e3, m3] = epi_mono_factor(mono);
  CHECK(e3 == DeltaMor::identity(2));
  CHECK(m3 == mono);
}

TEST_CASE("factorization is unique among enumerated pairs") {
  for (int k = 0; k <= 3; ++k) {
    for (int kp = 0; kp <= 3; ++kp) {
      for (const DeltaMor& f : enumerate_morphisms(k, kp, MorKind::all)) {
        const auto [e, m] = epi_mono_factor(f);
        CHECK(compose(m, e) == f);
        int recomposing = 0;
        for (int r = 0; r <= std::min(k, kp); ++r) {
          for (const DeltaMor& e2 : enumerate_morphisms(k, r, MorKind::epi))
            for (const DeltaMor& m2 : enumerate_morphisms(r, kp, MorKind::mono))
              if (compose(m2, e2) == f) ++recomposing;
        }
        CHECK(recomposing == 1);
      }
    }
  }
}

TEST_CASE("sections of epis") {
  CHECK(section_of_epi(degeneracy(1, 0)).images == std::vector<int>{0});
  CHECK(section_of_epi(DeltaMor::identity(2)) == DeltaMor::identity(2));
  CHECK(section_of_epi(DeltaMor(3, 1, {0, 0, 1, 1})).images == std::vector<int>{0, 2});
  CHECK_THROWS_AS(section_of_epi(face(1, 1)), std::invalid_argument);
  for (int k = 0; k <= 5; ++k)
    for (int n = 0; n <= k; ++n)
      for (const DeltaMor& s : enumerate_morphisms(k, n, MorKind::epi))
        CHECK(compose(s, section_of_epi(s)) == DeltaMor::identity(n));
}

TEST_CASE("enumeration is complete, ordered and matches brute force") {
  CHECK(enumerate_morphisms(2, 1, MorKind::epi).size() == 2);
  CHECK(enumerate_morphisms(1, 0, MorKind::all).size() == 1);
  for (int k = 0; k <= 2; ++k) {
    for (int kp = 0; kp <= 4; ++kp) {
      const auto all = enumerate_morphisms(k, kp, MorKind::all);
      CHECK(std::is_sorted(all.begin(), all.end()));
      long long mono_count = 0, epi_count = 0, total = 0;
      for (const auto& v : oracle::all_functions(k, kp)) {
        if (!oracle::fn_monotone(v)) continue;
        ++total;
        if (oracle::fn_surjective(v, kp)) ++epi_count;
        if (oracle::fn_injective(v)) ++mono_count;
      }
      CHECK(static_cast<long long>(all.size()) == total);
      CHECK(static_cast<long long>(enumerate_morphisms(k, kp, MorKind::epi).size()) == epi_count);
      CHECK(static_cast<long long>(enumerate_morphisms(k, kp, MorKind::mono).size()) == mono_count);
    }
  }
}

TEST_CASE("associativity and identities on small degrees") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d)
          for (const DeltaMor& f : enumerate_morphisms(a, b, MorKind::all))
            for (const DeltaMor& g : enumerate_morphisms(b, c, MorKind::all))
              for (const DeltaMor& h : enumerate_morphisms(c, d, MorKind::all))
                CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
}

TEST_CASE("generator decomposition recomposes") {
  for (int k = 0; k <= 4; ++k) {
    for (int kp = 0; kp <= 4; ++kp) {
      for (const DeltaMor& f : enumerate_morphisms(k, kp, MorKind::all)) {
        const auto factors = generator_decomposition(f);
        DeltaMor acc = factors.back();
        for (auto it = std::next(factors.rbegin()); it != factors.rend(); ++it)
          acc = compose(*it, acc);
        CHECK(acc == f);
        // faces first, then degeneracies
        bool seen_sigma = false;
        for (const DeltaMor& gen : factors) {
          if (gen.cod < gen.dom) seen_sigma = true;
          else if (gen.cod > gen.dom) CHECK_FALSE(seen_sigma);
        }
      }
    }
  }
}

TEST_CASE("json round-trip") {
  const DeltaMor f(3, 2, {0, 0, 1, 2});
  CHECK(delta_from_json(to_json(f)) == f);
  const Json j = to_json(f);
  CHECK(j.at("dom") == 3);
  CHECK(j.at("cod") == 2);
  CHECK_THROWS(delta_from_json(Json{{"dom", 1}, {"cod", 1}, {"images", {1, 0}}}));
}
