#include "simpsep/gamma.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace simpsep {

GammaMor::GammaMor(int dom_, int cod_, std::vector<std::vector<int>> blocks_)
    : dom(dom_), cod(cod_), blocks(std::move(blocks_)) {
  if (dom < 0 || cod < 0)
    throw std::invalid_argument("GammaMor: negative degree");
  if (blocks.size() != static_cast<std::size_t>(dom) + 1)
    throw std::invalid_argument("GammaMor: wrong number of blocks");
  int prev_max = -1;
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("GammaMor: empty block");
    int prev = prev_max;
    for (int v : b) {
      if (v <= prev || v > cod)
        throw std::invalid_argument("GammaMor: blocks not strictly ordered into [cod]");
      prev = v;
    }
    prev_max = b.back();
  }
}

GammaMor GammaMor::diagonal(int k) {
  std::vector<std::vector<int>> bl(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) bl[static_cast<std::size_t>(j)] = {j};
  return GammaMor(k, k, std::move(bl));
}

std::string GammaMor::str() const {
  std::ostringstream os;
  os << '[' << dom << "]=>[" << cod << "]:";
  for (const auto& b : blocks) {
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
    os << '}';
  }
  return os.str();
}

std::vector<int> eval(const GammaMor& f, std::span<const int> A) {
  std::vector<int> out;
  for (int j : A) {
    if (j < 0 || j > f.dom) throw std::invalid_argument("eval: element out of range");
    const auto& b = f.blocks[static_cast<std::size_t>(j)];
    out.insert(out.end(), b.begin(), b.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_onto(const GammaMor& f) {
  int count = 0;
  for (const auto& b : f.blocks) count += static_cast<int>(b.size());
  // Blocks are pairwise disjoint, so counting suffices.
  return count == f.cod + 1;
}

DeltaMor onto_to_epi(const GammaMor& f) {
  if (!is_onto(f)) throw std::invalid_argument("onto_to_epi: morphism is not onto");
  std::vector<int> im(static_cast<std::size_t>(f.cod) + 1);
  for (int j = 0; j <= f.dom; ++j)
    for (int v : f.blocks[static_cast<std::size_t>(j)]) im[static_cast<std::size_t>(v)] = j;
  return DeltaMor(f.cod, f.dom, std::move(im));
}

GammaMor epi_to_onto(const DeltaMor& s) {
  if (!is_epi(s)) throw std::invalid_argument("epi_to_onto: not an epimorphism");
  std::vector<std::vector<int>> bl(static_cast<std::size_t>(s.cod) + 1);
  for (int i = 0; i <= s.dom; ++i)
    bl[static_cast<std::size_t>(s.images[static_cast<std::size_t>(i)])].push_back(i);
  return GammaMor(s.cod, s.dom, std::move(bl));
}

GammaMor push_mono(const DeltaMor& d, const GammaMor& f) {
  if (!is_mono(d)) throw std::invalid_argument("push_mono: d is not a monomorphism");
  if (d.dom != f.cod) throw std::invalid_argument("push_mono: dom(d) != cod(f)");
  std::vector<std::vector<int>> bl(f.blocks.size());
  for (std::size_t j = 0; j < bl.size(); ++j) {
    bl[j].reserve(f.blocks[j].size());
    for (int v : f.blocks[j]) bl[j].push_back(d.images[static_cast<std::size_t>(v)]);
  }
  return GammaMor(f.dom, d.cod, std::move(bl));
}

std::pair<GammaMor, DeltaMor> red_sup(const GammaMor& f) {
  std::vector<int> support;
  for (const auto& b : f.blocks) support.insert(support.end(), b.begin(), b.end());
  std::sort(support.begin(), support.end());
  const int r = static_cast<int>(support.size()) - 1;
  std::vector<std::vector<int>> bl(f.blocks.size());
  for (std::size_t j = 0; j < bl.size(); ++j) {
    for (int v : f.blocks[j]) {
      const auto it = std::lower_bound(support.begin(), support.end(), v);
      bl[j].push_back(static_cast<int>(it - support.begin()));
    }
  }
  return {GammaMor(f.dom, r, std::move(bl)), DeltaMor(r, f.cod, std::move(support))};
}

int count_at(const GammaMor& f, int i) {
  if (i < 0 || i > f.cod) throw std::invalid_argument("count_at: index out of range");
  for (const auto& b : f.blocks)
    if (std::binary_search(b.begin(), b.end(), i)) return static_cast<int>(b.size());
  return 0;
}

std::optional<GammaMor> plus(const GammaMor& f, int i) {
  if (i < 0 || i > f.cod - 1) throw std::invalid_argument("plus: index out of range");
  const int ci = count_at(f, i);
  const int ci1 = count_at(f, i + 1);
  int attach;      // the element to adjoin
  int neighbor;    // the covered one identifying the block
  if (ci == 0 && ci1 >= 1) { attach = i; neighbor = i + 1; }
  else if (ci >= 1 && ci1 == 0) { attach = i + 1; neighbor = i; }
  else return std::nullopt;
  auto bl = f.blocks;
  for (auto& b : bl) {
    if (std::binary_search(b.begin(), b.end(), neighbor)) {
      b.insert(std::lower_bound(b.begin(), b.end(), attach), attach);
      break;
    }
  }
  return GammaMor(f.dom, f.cod, std::move(bl));
}

std::optional<GammaMor> minus(const GammaMor& f, int i) {
  if (i < 0 || i > f.cod) throw std::invalid_argument("minus: index out of range");
  if (count_at(f, i) == 1) return std::nullopt;
  std::vector<std::vector<int>> bl(f.blocks.size());
  for (std::size_t j = 0; j < bl.size(); ++j) {
    for (int v : f.blocks[j]) {
      if (v == i) continue;
      // For i < cod this is sigma_i(v); for i = cod only the deletion applies.
      bl[j].push_back(v > i ? v - 1 : v);
    }
  }
  return GammaMor(f.dom, f.cod - 1, std::move(bl));
}

bool subset_leq(const GammaMor& f, const GammaMor& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw std::invalid_argument("subset_leq: hom-set mismatch");
  for (std::size_t j = 0; j < f.blocks.size(); ++j)
    if (!std::includes(g.blocks[j].begin(), g.blocks[j].end(),
                       f.blocks[j].begin(), f.blocks[j].end()))
      return false;
  return true;
}

bool leq(const GammaMor& f, const GammaMor& g) {
  if (f.dom != g.dom || f.cod != g.cod)
    throw std::invalid_argument("leq: hom-set mismatch");
  if (!subset_leq(f, g)) return false;  // necessary, prunes the search
  if (f == g) return true;
  std::set<GammaMor> seen{f};
  std::deque<GammaMor> queue{f};
  while (!queue.empty()) {
    GammaMor cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < cur.cod; ++i) {
      auto next = plus(cur, i);
      if (!next || !subset_leq(*next, g)) continue;
      if (*next == g) return true;
      if (seen.insert(*next).second) queue.push_back(std::move(*next));
    }
  }
  return false;
}

std::vector<GammaMor> upper_set(const GammaMor& f) {
  std::set<GammaMor> seen{f};
  std::deque<GammaMor> queue{f};
  std::vector<GammaMor> out{f};
  while (!queue.empty()) {
    GammaMor cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < cur.cod; ++i) {
      auto next = plus(cur, i);
      if (next && seen.insert(*next).second) {
        out.push_back(*next);
        queue.push_back(std::move(*next));
      }
    }
  }
  return out;
}

namespace {

// Emits the non-empty subsets of [lo, hi] in lexicographic order of their
// sorted element sequences (which is also (min, contents) order).
void for_each_block(int lo, int hi, std::vector<int>& prefix,
                    const std::function<void(const std::vector<int>&)>& fn) {
  for (int m = lo; m <= hi; ++m) {
    prefix.push_back(m);
    fn(prefix);
    for_each_block(m + 1, hi, prefix, fn);
    prefix.pop_back();
  }
}

void enumerate_rec(int j, int dom, int cod, int lo, int covered, bool onto_only,
                   std::vector<std::vector<int>>& acc, std::vector<GammaMor>& out) {
  if (j > dom) {
    if (!onto_only || covered == cod + 1)
      out.emplace_back(dom, cod, acc);
    return;
  }
  const int remaining_blocks = dom - j + 1;
  if (cod + 1 - lo < remaining_blocks) return;  // not enough room
  std::vector<int> prefix;
  for_each_block(lo, cod, prefix, [&](const std::vector<int>& block) {
    if (onto_only) {
      // Every element below the block's span must already be covered.
      if (block.front() != lo) return;
      int expect = lo;
      for (int v : block) {
        if (v != expect) return;
        ++expect;
      }
    }
    acc.push_back(block);
    enumerate_rec(j + 1, dom, cod, block.back() + 1,
                  covered + static_cast<int>(block.size()), onto_only, acc, out);
    acc.pop_back();
  });
}

}  // namespace

std::vector<GammaMor> enumerate_gamma(int k, int kp, bool onto_only) {
  if (k < 0 || kp < 0) throw std::invalid_argument("enumerate_gamma: negative degree");
  std::vector<GammaMor> out;
  std::vector<std::vector<int>> acc;
  enumerate_rec(0, k, kp, 0, 0, onto_only, acc, out);
  return out;
}

PosetCache::PosetCache(int dom, int cod) : elems_(enumerate_gamma(dom, cod, false)) {
  std::map<GammaMor, int> index;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    index.emplace(elems_[i], static_cast<int>(i));
  edges_.resize(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    for (int p = 0; p < cod; ++p) {
      auto next = plus(elems_[i], p);
      if (next) edges_[i].push_back(index.at(*next));
    }
  }
  closure_.assign(elems_.size(), std::vector<bool>(elems_.size(), false));
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    std::deque<int> queue{static_cast<int>(i)};
    closure_[i][i] = true;
    while (!queue.empty()) {
      const int cur = queue.front();
      queue.pop_front();
      for (int nxt : edges_[static_cast<std::size_t>(cur)]) {
        if (!closure_[i][static_cast<std::size_t>(nxt)]) {
          closure_[i][static_cast<std::size_t>(nxt)] = true;
          queue.push_back(nxt);
        }
      }
    }
  }
}

int PosetCache::index_of(const GammaMor& f) const {
  // Enumeration order coincides with lexicographic block order.
  const auto it = std::lower_bound(elems_.begin(), elems_.end(), f);
  if (it == elems_.end() || !(*it == f)) return -1;
  return static_cast<int>(it - elems_.begin());
}

bool PosetCache::reachable(int from, int to) const {
  return closure_[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
}

bool PosetCache::leq(const GammaMor& f, const GammaMor& g) const {
  const int i = index_of(f);
  const int j = index_of(g);
  if (i < 0 || j < 0) throw std::invalid_argument("PosetCache::leq: morphism not in hom-set");
  return reachable(i, j);
}

bool PosetCache::antisymmetric() const {
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::size_t j = 0; j < elems_.size(); ++j)
      if (i != j && closure_[i][j] && closure_[j][i]) return false;
  return true;
}

}  // namespace simpsep
