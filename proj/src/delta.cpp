#include "simpsep/delta.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace simpsep {

DeltaMor::DeltaMor(int dom_, int cod_, std::vector<int> images_)
    : dom(dom_), cod(cod_), images(std::move(images_)) {
  if (dom < 0 || cod < 0)
    throw std::invalid_argument("DeltaMor: negative degree");
  if (images.size() != static_cast<std::size_t>(dom) + 1)
    throw std::invalid_argument("DeltaMor: image sequence has wrong length");
  int prev = 0;
  for (int v : images) {
    if (v < prev || v > cod)
      throw std::invalid_argument("DeltaMor: images not monotone into [cod]");
    prev = v;
  }
}

DeltaMor DeltaMor::identity(int k) {
  std::vector<int> im(static_cast<std::size_t>(k) + 1);
  std::iota(im.begin(), im.end(), 0);
  return DeltaMor(k, k, std::move(im));
}

bool DeltaMor::is_mono_images() const {
  for (std::size_t j = 1; j < images.size(); ++j)
    if (images[j] <= images[j - 1]) return false;
  return true;
}

std::string DeltaMor::str() const {
  std::ostringstream os;
  os << '[' << dom << "]->[" << cod << "]:(";
  for (std::size_t j = 0; j < images.size(); ++j)
    os << (j ? " " : "") << images[j];
  os << ')';
  return os.str();
}

DeltaMor face(int k, int i) {
  if (k < 0 || i < 0 || i > k + 1)
    throw std::invalid_argument("face: index out of range");
  std::vector<int> im(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) im[static_cast<std::size_t>(j)] = j < i ? j : j + 1;
  return DeltaMor(k, k + 1, std::move(im));
}

DeltaMor degeneracy(int k, int i) {
  if (k < 1 || i < 0 || i > k - 1)
    throw std::invalid_argument("degeneracy: index out of range");
  std::vector<int> im(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) im[static_cast<std::size_t>(j)] = j <= i ? j : j - 1;
  return DeltaMor(k, k - 1, std::move(im));
}

DeltaMor compose(const DeltaMor& g, const DeltaMor& f) {
  if (f.cod != g.dom)
    throw std::invalid_argument("compose: cod(f) != dom(g)");
  std::vector<int> im(f.images.size());
  for (std::size_t j = 0; j < im.size(); ++j)
    im[j] = g.images[static_cast<std::size_t>(f.images[j])];
  return DeltaMor(f.dom, g.cod, std::move(im));
}

bool is_epi(const DeltaMor& f) {
  // Monotone, so surjectivity means: starts at 0, ends at cod, steps <= 1.
  if (f.images.front() != 0 || f.images.back() != f.cod) return false;
  for (std::size_t j = 1; j < f.images.size(); ++j)
    if (f.images[j] - f.images[j - 1] > 1) return false;
  return true;
}

bool is_mono(const DeltaMor& f) { return f.is_mono_images(); }

std::pair<DeltaMor, DeltaMor> epi_mono_factor(const DeltaMor& f) {
  std::vector<int> distinct;
  for (int v : f.images)
    if (distinct.empty() || distinct.back() != v) distinct.push_back(v);
  const int r = static_cast<int>(distinct.size()) - 1;
  std::vector<int> epi_im(f.images.size());
  int pos = 0;
  for (std::size_t j = 0; j < f.images.size(); ++j) {
    while (distinct[static_cast<std::size_t>(pos)] != f.images[j]) ++pos;
    epi_im[j] = pos;
  }
  return {DeltaMor(f.dom, r, std::move(epi_im)), DeltaMor(r, f.cod, std::move(distinct))};
}

DeltaMor section_of_epi(const DeltaMor& s) {
  if (!is_epi(s)) throw std::invalid_argument("section_of_epi: not an epimorphism");
  std::vector<int> im(static_cast<std::size_t>(s.cod) + 1, -1);
  for (int j = s.dom; j >= 0; --j)
    im[static_cast<std::size_t>(s.images[static_cast<std::size_t>(j)])] = j;
  return DeltaMor(s.cod, s.dom, std::move(im));
}

std::vector<DeltaMor> enumerate_morphisms(int k, int kp, MorKind kind) {
  if (k < 0 || kp < 0) throw std::invalid_argument("enumerate_morphisms: negative degree");
  std::vector<DeltaMor> out;
  std::vector<int> im(static_cast<std::size_t>(k) + 1, 0);
  // Odometer over non-decreasing sequences, lexicographic order.
  for (;;) {
    DeltaMor m(k, kp, im);
    switch (kind) {
      case MorKind::all: out.push_back(std::move(m)); break;
      case MorKind::epi: if (is_epi(m)) out.push_back(std::move(m)); break;
      case MorKind::mono: if (is_mono(m)) out.push_back(std::move(m)); break;
    }
    int j = k;
    while (j >= 0 && im[static_cast<std::size_t>(j)] == kp) --j;
    if (j < 0) break;
    const int v = ++im[static_cast<std::size_t>(j)];
    for (int l = j + 1; l <= k; ++l) im[static_cast<std::size_t>(l)] = v;
  }
  return out;
}

std::vector<DeltaMor> generator_decomposition(const DeltaMor& f) {
  std::vector<DeltaMor> factors;
  auto [e, mu] = epi_mono_factor(f);
  // Mono part: peel the largest missing value a, mu = face(a) . mu'.
  DeltaMor m = mu;
  while (m.dom != m.cod) {
    int a = m.cod;
    for (int v = m.cod; v >= 0; --v) {
      if (!std::binary_search(m.images.begin(), m.images.end(), v)) { a = v; break; }
    }
    factors.push_back(face(m.cod - 1, a));
    std::vector<int> im(m.images.size());
    for (std::size_t j = 0; j < im.size(); ++j)
      im[j] = m.images[j] < a ? m.images[j] : m.images[j] - 1;
    m = DeltaMor(m.dom, m.cod - 1, std::move(im));
  }
  // Epi part: peel the largest collapse point j (e(j) = e(j+1)), e = e' . sigma_j.
  std::vector<DeltaMor> sig;
  DeltaMor s = e;
  while (s.dom != s.cod) {
    int j = -1;
    for (int l = s.dom - 1; l >= 0; --l) {
      if (s.images[static_cast<std::size_t>(l)] == s.images[static_cast<std::size_t>(l) + 1]) { j = l; break; }
    }
    sig.push_back(degeneracy(s.dom, j));
    std::vector<int> im(s.images.begin(), s.images.end());
    im.erase(im.begin() + j + 1);
    s = DeltaMor(s.dom - 1, s.cod, std::move(im));
  }
  // sig was collected outermost-last; composition order wants it reversed.
  factors.insert(factors.end(), sig.rbegin(), sig.rend());
  if (factors.empty()) factors.push_back(DeltaMor::identity(f.dom));
  return factors;
}

}  // namespace simpsep
