#include "simpsep/feasibility.hpp"

#include "oracles.hpp"

#include <doctest.h>
#include <algorithm>
#include <random>

using namespace simpsep;

namespace {

LinRow row(std::vector<int> coef, Rel rel, const Rat& rhs) {
  std::vector<Rat> c(coef.begin(), coef.end());
  return LinRow{std::move(c), rel, rhs};
}

LinSystem random_system(std::mt19937_64& rng, int max_vars, int max_rows) {
  const int nv = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_vars));
  const int nr = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_rows));
  LinSystem sys{nv, {}};
  for (int r = 0; r < nr; ++r) {
    LinRow lr;
    lr.coef.resize(static_cast<std::size_t>(nv));
    for (auto& c : lr.coef)
      c = Rat(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 3) + 1);
    const unsigned pick = rng() % 10;
    lr.rel = pick < 4 ? Rel::le : pick < 8 ? Rel::lt : Rel::eq;
    lr.rhs = Rat(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 3) + 1);
    sys.rows.push_back(std::move(lr));
  }
  return sys;
}

std::vector<Rat> random_probe(std::mt19937_64& rng, int nv) {
  std::vector<Rat> x(static_cast<std::size_t>(nv));
  for (auto& c : x) c = Rat(static_cast<long>(rng() % 6145) - 3072, 1024);
  return x;
}

}  // namespace

TEST_CASE("simple systems") {
  {  // 0 <= x <= 1
    LinSystem sys{1, {row({-1}, Rel::le, 0), row({1}, Rel::le, 1)}};
    const auto res = feasible(sys);
    REQUIRE(res.feasible);
    CHECK(res.witness[0] >= 0);
    CHECK(res.witness[0] <= 1);
  }
  {  // x > 0, x < 0
    LinSystem sys{1, {row({-1}, Rel::lt, 0), row({1}, Rel::lt, 0)}};
    CHECK_FALSE(feasible(sys).feasible);
  }
  {  // strict vs weak at the same bound
    LinSystem sys{1, {row({1}, Rel::lt, 2), row({-1}, Rel::le, -2)}};
    CHECK_FALSE(feasible(sys).feasible);
  }
  {  // x + y = 1, x >= 0, y >= 0, 2x < y  =>  0 <= x < 1/3
    LinSystem sys{2, {row({1, 1}, Rel::eq, 1), row({-1, 0}, Rel::le, 0),
                      row({0, -1}, Rel::le, 0), row({2, -1}, Rel::lt, 0)}};
    const auto res = feasible(sys);
    REQUIRE(res.feasible);
    CHECK(res.witness[0] >= 0);
    CHECK(res.witness[0] < Rat(1, 3));
    CHECK(res.witness[0] + res.witness[1] == 1);
  }
}

TEST_CASE("empty and degenerate systems") {
  CHECK(feasible(LinSystem{0, {}}).feasible);
  CHECK(feasible(LinSystem{3, {}}).feasible);
  // inconsistent constants after substitution
  LinSystem sys{1, {row({0}, Rel::eq, 1)}};
  CHECK_FALSE(feasible(sys).feasible);
  // equality chain
  LinSystem chain{2, {row({1, -1}, Rel::eq, 0), row({1, 1}, Rel::eq, 2)}};
  const auto res = feasible(chain);
  REQUIRE(res.feasible);
  CHECK(res.witness == std::vector<Rat>{1, 1});
}

TEST_CASE("disjoint polyhedra") {
  // two disjoint intervals on the simplex t0 + t1 = 1
  LinSystem simplex{2, {row({1, 1}, Rel::eq, 1), row({-1, 0}, Rel::le, 0),
                        row({0, -1}, Rel::le, 0)}};
  LinSystem low = simplex;
  low.rows.push_back(row({1, 0}, Rel::le, Rat(1, 4)));  // t0 <= 1/4
  LinSystem high = simplex;
  high.rows.push_back(row({-1, 0}, Rel::le, Rat(-1, 2)));  // t0 >= 1/2
  CHECK_FALSE(disjoint(low, high).feasible);
  CHECK(disjoint(low, low).feasible);
  CHECK_THROWS_AS(disjoint(low, LinSystem{3, {}}), std::invalid_argument);
}

TEST_CASE("closed W systems at a disjoint window pair are disjoint") {
  const BaryPoint alpha({Rat(1, 2), Rat(1, 2)});
  const BaryPoint beta({Rat(1, 3), Rat(2, 3)});
  const auto [fi, fj] = make_disjoint_pair(alpha, beta, 0, 1);
  const GammaMor id = GammaMor::diagonal(1);
  const auto a = w_constraints(id, Rat(1, 2), fi, true);
  const auto b = w_constraints(id, Rat(1, 2), fj, true);
  CHECK_FALSE(disjoint(a, b).feasible);
  // sampled corroboration
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10000; ++trial) {
    const BaryPoint t = oracle::random_point(rng, 1);
    CHECK_FALSE(satisfies(a, t.coords) && satisfies(b, t.coords));
  }
}

TEST_CASE("randomized soundness and completeness") {
  std::mt19937_64 rng(97);
  int feasible_count = 0, infeasible_count = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const LinSystem sys = random_system(rng, 5, 12);
    const auto res = feasible(sys);
    if (res.feasible) {
      ++feasible_count;
      CHECK(satisfies(sys, res.witness));
    } else {
      ++infeasible_count;
      std::mt19937_64 probe_rng(trial);
      for (int probe = 0; probe < 10000; ++probe)
        CHECK_FALSE(satisfies(sys, random_probe(probe_rng, sys.nvars)));
    }
  }
  CHECK(feasible_count > 0);
  CHECK(infeasible_count > 0);
}

TEST_CASE("status is independent of row order and elimination order") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    LinSystem sys = random_system(rng, 4, 10);
    const bool base = feasible(sys).feasible;

    std::shuffle(sys.rows.begin(), sys.rows.end(), rng);
    CHECK(feasible(sys).feasible == base);

    std::vector<int> order(static_cast<std::size_t>(sys.nvars));
    for (int v = 0; v < sys.nvars; ++v) order[static_cast<std::size_t>(v)] = v;
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(feasible(sys, order).feasible == base);
  }
}

TEST_CASE("debug rendering") {
  LinSystem sys{2, {row({1, -2}, Rel::lt, 3)}};
  CHECK(debug_str(sys) == "1*t0 + -2*t1 < 3\n");
}
