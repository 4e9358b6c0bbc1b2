#include "simpsep/geometry.hpp"

#include <stdexcept>

namespace simpsep {

BaryPoint::BaryPoint(std::vector<Rat> coords_) : coords(std::move(coords_)) {
  if (coords.empty()) throw std::invalid_argument("BaryPoint: no coordinates");
  Rat sum = 0;
  for (const Rat& t : coords) {
    if (t < 0) throw std::invalid_argument("BaryPoint: negative coordinate");
    sum += t;
  }
  if (sum != 1) throw std::invalid_argument("BaryPoint: coordinates do not sum to 1");
}

BaryPoint BaryPoint::vertex(int n, int p) {
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
  c.at(static_cast<std::size_t>(p)) = 1;
  return BaryPoint(std::move(c));
}

BaryPoint BaryPoint::barycenter(int n) {
  std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(1) / (n + 1));
  return BaryPoint(std::move(c));
}

BaryPoint pushforward(const DeltaMor& d, const BaryPoint& t) {
  if (t.degree() != d.dom)
    throw std::invalid_argument("pushforward: dimension mismatch");
  std::vector<Rat> out(static_cast<std::size_t>(d.cod) + 1, Rat(0));
  for (int i = 0; i <= d.dom; ++i)
    out[static_cast<std::size_t>(d.images[static_cast<std::size_t>(i)])] +=
        t.coords[static_cast<std::size_t>(i)];
  return BaryPoint(std::move(out));
}

bool is_interior(const BaryPoint& t) {
  for (const Rat& c : t.coords)
    if (c <= 0) return false;
  return true;
}

std::map<RatioKey, Rat> lambda_ratios(const BaryPoint& alpha) {
  if (!is_interior(alpha))
    throw std::invalid_argument("lambda_ratios: point not interior");
  std::map<RatioKey, Rat> out;
  const int n = alpha.degree();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out[{i, j}] = alpha.coords[static_cast<std::size_t>(j)] /
                    alpha.coords[static_cast<std::size_t>(i)];
  return out;
}

IntervalFamily::IntervalFamily(int n_, std::map<RatioKey, std::pair<Rat, Rat>> bounds_)
    : n(n_), bounds(std::move(bounds_)) {
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto it = bounds.find({i, j});
      if (it == bounds.end())
        throw std::invalid_argument("IntervalFamily: missing pair");
      if (!(0 < it->second.first && it->second.first < it->second.second))
        throw std::invalid_argument("IntervalFamily: need 0 < a < b");
    }
  }
}

IntervalFamily make_admissible(const BaryPoint& alpha, const Rat& spread) {
  if (spread <= 1) throw std::invalid_argument("make_admissible: spread must be > 1");
  std::map<RatioKey, std::pair<Rat, Rat>> bounds;
  for (const auto& [key, lam] : lambda_ratios(alpha))
    bounds[key] = {lam / spread, lam * spread};
  return IntervalFamily(alpha.degree(), std::move(bounds));
}

std::pair<IntervalFamily, IntervalFamily> make_disjoint_pair(
    const BaryPoint& alpha, const BaryPoint& beta, int k, int l) {
  if (alpha.degree() != beta.degree())
    throw std::invalid_argument("make_disjoint_pair: points of different degree");
  if (!(0 <= k && k < l && l <= alpha.degree()))
    throw std::invalid_argument("make_disjoint_pair: bad coordinate pair");
  const Rat la = lambda_ratios(alpha).at({k, l});
  const Rat lb = lambda_ratios(beta).at({k, l});
  if (la == lb)
    throw std::invalid_argument("make_disjoint_pair: equal ratios at the chosen pair");
  const Rat lo = la < lb ? la : lb;
  const Rat hi = la < lb ? lb : la;
  // Shrink until the smaller window's upper end clears the bigger one's lower end.
  Rat spread = 2;
  while (lo * spread >= hi / spread) spread = 1 + (spread - 1) / 2;
  return {make_admissible(alpha, spread), make_admissible(beta, spread)};
}

bool satisfies(const LinSystem& sys, std::span<const Rat> x) {
  if (static_cast<int>(x.size()) != sys.nvars)
    throw std::invalid_argument("satisfies: dimension mismatch");
  for (const LinRow& row : sys.rows) {
    Rat lhs = 0;
    for (int v = 0; v < sys.nvars; ++v) {
      const Rat& c = row.coef[static_cast<std::size_t>(v)];
      if (c != 0) lhs += c * x[static_cast<std::size_t>(v)];
    }
    switch (row.rel) {
      case Rel::lt: if (!(lhs < row.rhs)) return false; break;
      case Rel::le: if (!(lhs <= row.rhs)) return false; break;
      case Rel::eq: if (lhs != row.rhs) return false; break;
    }
  }
  return true;
}

LinSystem w_constraints(const GammaMor& f, const Rat& eps,
                        const IntervalFamily& family, bool closed) {
  if (!(0 < eps && eps < 1))
    throw std::invalid_argument("w_constraints: eps must lie in (0,1)");
  if (family.n != f.dom)
    throw std::invalid_argument("w_constraints: family degree != dom(f)");
  const int nv = f.cod + 1;
  LinSystem sys{nv, {}};
  auto zero = [nv] { return std::vector<Rat>(static_cast<std::size_t>(nv), Rat(0)); };

  // Simplex: t_p >= 0, sum t_p = 1.
  for (int p = 0; p < nv; ++p) {
    LinRow row{zero(), Rel::le, 0};
    row.coef[static_cast<std::size_t>(p)] = -1;
    sys.rows.push_back(std::move(row));
  }
  {
    LinRow row{zero(), Rel::eq, 1};
    for (int p = 0; p < nv; ++p) row.coef[static_cast<std::size_t>(p)] = 1;
    sys.rows.push_back(std::move(row));
  }

  const Rel strict_or_weak = closed ? Rel::le : Rel::lt;

  if (!closed) {
    // Block positivity S_i > 0.
    for (const auto& block : f.blocks) {
      LinRow row{zero(), Rel::lt, 0};
      for (int p : block) row.coef[static_cast<std::size_t>(p)] = -1;
      sys.rows.push_back(std::move(row));
    }
  }

  // Ratio windows: a * S_i < S_j and S_j < b * S_i for i < j.
  for (int i = 0; i < f.dom; ++i) {
    for (int j = i + 1; j <= f.dom; ++j) {
      const auto& [a, b] = family.bounds.at({i, j});
      LinRow low{zero(), strict_or_weak, 0};
      LinRow high{zero(), strict_or_weak, 0};
      for (int p : f.blocks[static_cast<std::size_t>(i)]) {
        low.coef[static_cast<std::size_t>(p)] = a;
        high.coef[static_cast<std::size_t>(p)] = -b;
      }
      for (int p : f.blocks[static_cast<std::size_t>(j)]) {
        low.coef[static_cast<std::size_t>(p)] = -1;
        high.coef[static_cast<std::size_t>(p)] = 1;
      }
      sys.rows.push_back(std::move(low));
      sys.rows.push_back(std::move(high));
    }
  }

  // Covered mass: sum over the support > 1 - eps.
  {
    LinRow row{zero(), strict_or_weak, -(1 - eps)};
    for (const auto& block : f.blocks)
      for (int p : block) row.coef[static_cast<std::size_t>(p)] = -1;
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

bool w_member(const GammaMor& f, const Rat& eps, const IntervalFamily& family,
              bool closed, const BaryPoint& t) {
  if (t.degree() != f.cod)
    throw std::invalid_argument("w_member: dimension mismatch");
  return satisfies(w_constraints(f, eps, family, closed), t.coords);
}

}  // namespace simpsep
