#include "simpsep/sset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace simpsep {

FiniteSSet::FiniteSSet(int dim, std::vector<std::vector<std::string>> cell_ids,
                       std::vector<std::vector<std::vector<FaceEntry>>> faces)
    : dim_(dim), cell_ids_(std::move(cell_ids)), faces_(std::move(faces)) {
  if (dim_ < 0) throw std::invalid_argument("FiniteSSet: negative dimension");
  if (cell_ids_.size() != static_cast<std::size_t>(dim_) + 1 ||
      faces_.size() != cell_ids_.size())
    throw std::invalid_argument("FiniteSSet: tables must cover degrees 0..dim");
  validate();
}

int FiniteSSet::cell_count(int degree) const {
  if (degree < 0 || degree > dim_) return 0;
  return static_cast<int>(cell_ids_[static_cast<std::size_t>(degree)].size());
}

const std::string& FiniteSSet::cell_id(CellRef c) const {
  return cell_ids_.at(static_cast<std::size_t>(c.degree)).at(static_cast<std::size_t>(c.index));
}

CellRef FiniteSSet::cell_by_id(const std::string& id) const {
  for (int p = 0; p <= dim_; ++p) {
    const auto& ids = cell_ids_[static_cast<std::size_t>(p)];
    const auto it = std::find(ids.begin(), ids.end(), id);
    if (it != ids.end()) return {p, static_cast<int>(it - ids.begin())};
  }
  throw std::invalid_argument("unknown cell id: " + id);
}

bool FiniteSSet::has_cell(const std::string& id) const {
  for (const auto& ids : cell_ids_)
    if (std::find(ids.begin(), ids.end(), id) != ids.end()) return true;
  return false;
}

const FiniteSSet::FaceEntry& FiniteSSet::face(CellRef c, int i) const {
  return faces_.at(static_cast<std::size_t>(c.degree))
      .at(static_cast<std::size_t>(c.index))
      .at(static_cast<std::size_t>(i));
}

void FiniteSSet::validate() const {
  std::map<std::string, CellRef> seen;
  for (int p = 0; p <= dim_; ++p) {
    const auto& ids = cell_ids_[static_cast<std::size_t>(p)];
    for (std::size_t c = 0; c < ids.size(); ++c) {
      if (!seen.emplace(ids[c], CellRef{p, static_cast<int>(c)}).second)
        throw std::invalid_argument("duplicate cell id: " + ids[c]);
    }
    if (faces_[static_cast<std::size_t>(p)].size() != ids.size())
      throw std::invalid_argument("face table size mismatch at degree " + std::to_string(p));
    for (std::size_t c = 0; c < ids.size(); ++c) {
      const auto& entries = faces_[static_cast<std::size_t>(p)][c];
      if (entries.size() != static_cast<std::size_t>(p == 0 ? 0 : p + 1))
        throw std::invalid_argument("cell " + ids[c] + ": expected " +
                                    std::to_string(p == 0 ? 0 : p + 1) + " faces");
      for (const FaceEntry& e : entries) {
        if (!is_epi(e.epi) || e.epi.dom != p - 1 || e.epi.cod != e.cell.degree)
          throw std::invalid_argument("cell " + ids[c] + ": malformed face normal form");
        if (e.cell.degree < 0 || e.cell.degree > dim_ ||
            e.cell.index >= cell_count(e.cell.degree))
          throw std::invalid_argument("cell " + ids[c] + ": face references missing cell");
      }
    }
  }
  // d_i d_j = d_{j-1} d_i for i < j, evaluated through the normal-form algebra.
  for (int p = 2; p <= dim_; ++p) {
    for (int c = 0; c < cell_count(p); ++c) {
      const Simplex top = cell_simplex(*this, {p, c});
      for (int j = 1; j <= p; ++j) {
        for (int i = 0; i < j; ++i) {
          const Simplex a = apply(*this, simpsep::face(p - 2, i),
                                  apply(*this, simpsep::face(p - 1, j), top));
          const Simplex b = apply(*this, simpsep::face(p - 2, j - 1),
                                  apply(*this, simpsep::face(p - 1, i), top));
          if (!(a == b)) {
            std::ostringstream os;
            os << "simplicial identity violated at cell "
               << cell_ids_[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)]
               << ": d_" << i << " d_" << j << " != d_" << j - 1 << " d_" << i;
            throw std::invalid_argument(os.str());
          }
        }
      }
    }
  }
}

Simplex cell_simplex(const FiniteSSet& S, CellRef c) {
  if (c.degree > S.dim() || c.index >= S.cell_count(c.degree))
    throw std::invalid_argument("cell_simplex: no such cell");
  return {DeltaMor::identity(c.degree), c};
}

Simplex apply(const FiniteSSet& S, const DeltaMor& delta, const Simplex& s) {
  if (delta.cod != s.degree())
    throw std::invalid_argument("apply: cod(delta) != degree of simplex");
  auto [e, mu] = epi_mono_factor(compose(s.epi, delta));
  // A(mu . e)(cell) = A(e)(A(mu)(cell)); peel mu one missing value at a time,
  // each step a face lookup followed by renormalization.
  if (mu.is_identity()) return {std::move(e), s.cell};
  int a = -1;
  for (int v = mu.cod; v >= 0; --v) {
    if (!std::binary_search(mu.images.begin(), mu.images.end(), v)) { a = v; break; }
  }
  const FiniteSSet::FaceEntry& entry = S.face(s.cell, a);
  std::vector<int> im(mu.images.size());
  for (std::size_t j = 0; j < im.size(); ++j)
    im[j] = mu.images[j] < a ? mu.images[j] : mu.images[j] - 1;
  const Simplex inner =
      apply(S, DeltaMor(mu.dom, mu.cod - 1, std::move(im)), {entry.epi, entry.cell});
  return {compose(inner.epi, e), inner.cell};
}

bool is_degenerate(const Simplex& s) { return !s.epi.is_identity(); }

std::vector<Simplex> simplices_of_degree(const FiniteSSet& S, int k) {
  std::vector<Simplex> out;
  for (int p = 0; p <= std::min(k, S.dim()); ++p) {
    const auto epis = enumerate_morphisms(k, p, MorKind::epi);
    for (int c = 0; c < S.cell_count(p); ++c)
      for (const DeltaMor& e : epis) out.push_back({e, {p, c}});
  }
  return out;
}

std::string simplex_id(const FiniteSSet& S, const Simplex& s) {
  std::ostringstream os;
  os << S.cell_id(s.cell) << '@';
  for (std::size_t j = 0; j < s.epi.images.size(); ++j)
    os << (j ? "-" : "") << s.epi.images[j];
  return os.str();
}

Simplex parse_simplex_id(const FiniteSSet& S, const std::string& id) {
  const auto at = id.rfind('@');
  if (at == std::string::npos)
    throw std::invalid_argument("bad simplex id: " + id);
  const CellRef cell = S.cell_by_id(id.substr(0, at));
  std::vector<int> im;
  std::istringstream is(id.substr(at + 1));
  std::string part;
  while (std::getline(is, part, '-')) im.push_back(std::stoi(part));
  Simplex s{DeltaMor(static_cast<int>(im.size()) - 1, cell.degree, std::move(im)), cell};
  if (!is_epi(s.epi)) throw std::invalid_argument("bad simplex id (epi part): " + id);
  return s;
}

std::tuple<bool, bool, bool> degen_lemma_check(const FiniteSSet& S, const Simplex& x,
                                               const DeltaMor& sigma, const DeltaMor& tau) {
  if (is_degenerate(x)) throw std::invalid_argument("degen_lemma_check: x must be non-degenerate");
  if (!is_epi(sigma) || !is_epi(tau) || sigma.dom != tau.dom || sigma.cod != x.degree())
    throw std::invalid_argument("degen_lemma_check: need epis [N]->>[n], [N]->>[m]");
  const Simplex sx = apply(S, sigma, x);
  bool in_image = false;
  for (const Simplex& y : simplices_of_degree(S, tau.cod)) {
    if (apply(S, tau, y) == sx) { in_image = true; break; }
  }
  bool factors = false;
  for (const DeltaMor& rho : enumerate_morphisms(tau.cod, sigma.cod, MorKind::epi)) {
    if (compose(rho, tau) == sigma) { factors = true; break; }
  }
  bool kernel = true;
  for (int i = 0; i <= tau.dom && kernel; ++i)
    for (int j = i + 1; j <= tau.dom && kernel; ++j)
      if (tau(i) == tau(j) && sigma(i) != sigma(j)) kernel = false;
  return {in_image, factors, kernel};
}

namespace {

std::string subset_id(const std::vector<int>& verts, int n) {
  std::ostringstream os;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (n > 9 && i) os << '-';
    os << verts[i];
  }
  return os.str();
}

FiniteSSet simplex_like(int n, bool with_top) {
  if (n < 0) throw std::invalid_argument("negative simplex degree");
  if (!with_top && n == 0)
    throw std::invalid_argument("boundary of a point is empty");
  const int dim = with_top ? n : n - 1;
  std::vector<std::vector<std::vector<int>>> subsets(static_cast<std::size_t>(dim) + 1);
  // Non-empty subsets of [n] of size p+1, lexicographic per degree.
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (!cur.empty() && static_cast<int>(cur.size()) <= dim + 1)
      subsets[cur.size() - 1].push_back(cur);
    for (int v = next; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);

  std::vector<std::vector<std::string>> ids(static_cast<std::size_t>(dim) + 1);
  std::map<std::vector<int>, int> index;
  for (int p = 0; p <= dim; ++p) {
    for (const auto& verts : subsets[static_cast<std::size_t>(p)]) {
      index[verts] = static_cast<int>(ids[static_cast<std::size_t>(p)].size());
      ids[static_cast<std::size_t>(p)].push_back(subset_id(verts, n));
    }
  }
  std::vector<std::vector<std::vector<FiniteSSet::FaceEntry>>> faces(
      static_cast<std::size_t>(dim) + 1);
  for (int p = 0; p <= dim; ++p) {
    for (const auto& verts : subsets[static_cast<std::size_t>(p)]) {
      std::vector<FiniteSSet::FaceEntry> entries;
      for (int i = 0; p > 0 && i <= p; ++i) {
        std::vector<int> sub = verts;
        sub.erase(sub.begin() + i);
        entries.push_back({DeltaMor::identity(p - 1), {p - 1, index.at(sub)}});
      }
      faces[static_cast<std::size_t>(p)].push_back(std::move(entries));
    }
  }
  return FiniteSSet(dim, std::move(ids), std::move(faces));
}

}  // namespace

FiniteSSet standard_simplex(int n) { return simplex_like(n, true); }

FiniteSSet boundary(int n) { return simplex_like(n, false); }

}  // namespace simpsep
