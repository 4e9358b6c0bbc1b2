#include "simpsep/feasibility.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace simpsep {

namespace {

struct Bound {
  std::vector<Rat> coef;  // bound expression over the other variables
  Rat constant;
  bool strict;
};

// One elimination record: the variable and its surviving bounds, expressed
// over the variables still present at that stage.
struct ElimStep {
  int var;
  std::vector<Bound> lowers;  // var >(=) expr
  std::vector<Bound> uppers;  // var <(=) expr
};

struct EqStep {
  int var;
  std::vector<Rat> coef;  // var = coef . x + constant
  Rat constant;
};

// Scales so the first nonzero coefficient is +-1; drops or decides
// constant rows. Returns false if the row is an unsatisfiable constant.
bool normalize_row(LinRow& row, bool& keep) {
  keep = false;
  for (const Rat& c : row.coef) {
    if (c != 0) {
      const Rat scale = abs(c);
      if (scale != 1) {
        for (Rat& d : row.coef) d /= scale;
        row.rhs /= scale;
      }
      keep = true;
      return true;
    }
  }
  switch (row.rel) {  // 0 rel rhs
    case Rel::lt: return 0 < row.rhs;
    case Rel::le: return 0 <= row.rhs;
    case Rel::eq: return 0 == row.rhs;
  }
  return false;
}

// Keeps only the tightest row per coefficient vector.
void dedup(std::vector<LinRow>& rows) {
  std::map<std::vector<Rat>, std::size_t> best;
  std::vector<LinRow> out;
  out.reserve(rows.size());
  for (LinRow& row : rows) {
    const auto [it, fresh] = best.try_emplace(row.coef, out.size());
    if (fresh) {
      out.push_back(std::move(row));
      continue;
    }
    LinRow& old = out[it->second];
    if (row.rhs < old.rhs ||
        (row.rhs == old.rhs && row.rel == Rel::lt && old.rel == Rel::le)) {
      old = std::move(row);
    }
  }
  rows = std::move(out);
}

}  // namespace

FeasibilityResult feasible(const LinSystem& sys, std::vector<int> elim_order) {
  const int nv = sys.nvars;
  if (elim_order.empty()) {
    elim_order.resize(static_cast<std::size_t>(nv));
    std::iota(elim_order.begin(), elim_order.end(), 0);
  } else {
    auto check = elim_order;
    std::sort(check.begin(), check.end());
    for (int v = 0; v < nv; ++v)
      if (check[static_cast<std::size_t>(v)] != v)
        throw std::invalid_argument("feasible: elim_order is not a permutation");
  }
  for (const LinRow& row : sys.rows)
    if (static_cast<int>(row.coef.size()) != nv)
      throw std::invalid_argument("feasible: row width != nvars");

  std::vector<LinRow> rows = sys.rows;
  std::vector<EqStep> eq_steps;

  // Substitute equalities away.
  for (;;) {
    int picked = -1, pivot = -1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].rel != Rel::eq) continue;
      for (int v = 0; v < nv; ++v) {
        if (rows[r].coef[static_cast<std::size_t>(v)] != 0) {
          picked = static_cast<int>(r);
          pivot = v;
          break;
        }
      }
      if (picked >= 0) break;
      if (rows[r].rhs != 0) return {false, {}};  // 0 = nonzero
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
      --r;
    }
    if (picked < 0) break;
    LinRow eq = std::move(rows[static_cast<std::size_t>(picked)]);
    rows.erase(rows.begin() + picked);
    const Rat piv = eq.coef[static_cast<std::size_t>(pivot)];
    EqStep step{pivot, std::vector<Rat>(static_cast<std::size_t>(nv), Rat(0)), eq.rhs / piv};
    for (int v = 0; v < nv; ++v)
      if (v != pivot) step.coef[static_cast<std::size_t>(v)] = -eq.coef[static_cast<std::size_t>(v)] / piv;
    for (LinRow& row : rows) {
      Rat& c = row.coef[static_cast<std::size_t>(pivot)];
      if (c == 0) continue;
      for (int v = 0; v < nv; ++v)
        if (v != pivot)
          row.coef[static_cast<std::size_t>(v)] += c * step.coef[static_cast<std::size_t>(v)];
      row.rhs -= c * step.constant;
      c = 0;
    }
    eq_steps.push_back(std::move(step));
  }

  {  // canonicalize before elimination so dedup can merge duplicates
    std::vector<LinRow> canon;
    canon.reserve(rows.size());
    for (LinRow& row : rows) {
      bool keep;
      if (!normalize_row(row, keep)) return {false, {}};
      if (keep) canon.push_back(std::move(row));
    }
    dedup(canon);
    rows = std::move(canon);
  }

  // Fourier-Motzkin on the remaining inequalities.
  std::vector<ElimStep> steps;
  for (int var : elim_order) {
    bool touched = false;
    {  // skip variables already eliminated by an equality or simply absent
      for (const EqStep& e : eq_steps) touched |= (e.var == var);
      if (touched) continue;
      for (const LinRow& row : rows)
        if (row.coef[static_cast<std::size_t>(var)] != 0) { touched = true; break; }
      if (!touched) continue;
    }
    ElimStep step{var, {}, {}};
    std::vector<LinRow> rest;
    for (LinRow& row : rows) {
      const Rat c = row.coef[static_cast<std::size_t>(var)];
      if (c == 0) {
        rest.push_back(std::move(row));
        continue;
      }
      // c*var + R rel rhs  ->  var rel' (rhs - R)/c, direction from sign(c).
      Bound b;
      b.coef.assign(static_cast<std::size_t>(nv), Rat(0));
      for (int v = 0; v < nv; ++v)
        if (v != var) b.coef[static_cast<std::size_t>(v)] = -row.coef[static_cast<std::size_t>(v)] / c;
      b.constant = row.rhs / c;
      b.strict = row.rel == Rel::lt;
      if (c > 0) step.uppers.push_back(std::move(b));
      else step.lowers.push_back(std::move(b));
    }
    for (const Bound& lo : step.lowers) {
      for (const Bound& up : step.uppers) {
        // lo <(=) var <(=) up: emit lo - up <(=) 0.
        LinRow row;
        row.coef.resize(static_cast<std::size_t>(nv));
        for (int v = 0; v < nv; ++v)
          row.coef[static_cast<std::size_t>(v)] =
              lo.coef[static_cast<std::size_t>(v)] - up.coef[static_cast<std::size_t>(v)];
        row.rhs = up.constant - lo.constant;
        row.rel = (lo.strict || up.strict) ? Rel::lt : Rel::le;
        bool keep;
        if (!normalize_row(row, keep)) return {false, {}};
        if (keep) rest.push_back(std::move(row));
      }
    }
    dedup(rest);
    rows = std::move(rest);
    steps.push_back(std::move(step));
  }

  for (LinRow& row : rows) {  // only constant rows can remain
    bool keep;
    if (!normalize_row(row, keep)) return {false, {}};
    assert(!keep);
  }

  // Back-substitute a witness, last-eliminated variable first.
  std::vector<Rat> x(static_cast<std::size_t>(nv), Rat(0));
  auto value_of = [&](const Bound& b) {
    Rat v = b.constant;
    for (int i = 0; i < nv; ++i)
      if (b.coef[static_cast<std::size_t>(i)] != 0)
        v += b.coef[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    return v;
  };
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    bool have_lo = false, have_hi = false, lo_strict = false, hi_strict = false;
    Rat lo, hi;
    for (const Bound& b : it->lowers) {
      const Rat v = value_of(b);
      if (!have_lo || v > lo || (v == lo && b.strict)) {
        lo = v;
        lo_strict = b.strict;
        have_lo = true;
      }
    }
    for (const Bound& b : it->uppers) {
      const Rat v = value_of(b);
      if (!have_hi || v < hi || (v == hi && b.strict)) {
        hi = v;
        hi_strict = b.strict;
        have_hi = true;
      }
    }
    Rat& slot = x[static_cast<std::size_t>(it->var)];
    if (have_lo && have_hi) {
      assert(lo < hi || (lo == hi && !lo_strict && !hi_strict));
      slot = lo == hi ? lo : (lo + hi) / 2;
    } else if (have_lo) {
      slot = lo + 1;
    } else if (have_hi) {
      slot = hi - 1;
    }
  }
  for (auto it = eq_steps.rbegin(); it != eq_steps.rend(); ++it) {
    Rat v = it->constant;
    for (int i = 0; i < nv; ++i)
      if (it->coef[static_cast<std::size_t>(i)] != 0)
        v += it->coef[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    x[static_cast<std::size_t>(it->var)] = v;
  }
  assert(satisfies(sys, x));
  return {true, std::move(x)};
}

FeasibilityResult disjoint(const LinSystem& a, const LinSystem& b) {
  if (a.nvars != b.nvars)
    throw std::invalid_argument("disjoint: variable-count mismatch");
  LinSystem both = a;
  both.rows.insert(both.rows.end(), b.rows.begin(), b.rows.end());
  return feasible(both);
}

std::string debug_str(const LinSystem& sys) {
  std::ostringstream os;
  for (const LinRow& row : sys.rows) {
    bool first = true;
    for (int v = 0; v < sys.nvars; ++v) {
      const Rat& c = row.coef[static_cast<std::size_t>(v)];
      if (c == 0) continue;
      if (!first) os << " + ";
      os << rat_str(c) << "*t" << v;
      first = false;
    }
    if (first) os << "0";
    os << (row.rel == Rel::lt ? " < " : row.rel == Rel::le ? " <= " : " = ");
    os << rat_str(row.rhs) << '\n';
  }
  return os.str();
}

}  // namespace simpsep
