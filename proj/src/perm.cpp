#include "mggs/perm.hpp"

#include <algorithm>
#include <deque>

#include "mggs/errors.hpp"

namespace mggs {

Perm perm_identity(std::size_t n) {
  Perm g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = static_cast<std::uint32_t>(i);
  return g;
}

Perm perm_mul(const Perm& g, const Perm& h) {
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = h[g[i]];
  return r;
}

Perm perm_inverse(const Perm& g) {
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[g[i]] = static_cast<std::uint32_t>(i);
  return r;
}

bool perm_is_identity(const Perm& g) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] != i) return false;
  return true;
}

PermGroup::PermGroup(std::size_t degree, const std::vector<Perm>& generators) : n_(degree) {
  for (const auto& g : generators) {
    if (g.size() != n_) throw DimensionError("generator of the wrong degree");
    if (perm_is_identity(g)) continue;
    gens_.push_back(g);
    if (std::all_of(base_.begin(), base_.end(), [&](std::uint32_t b) { return g[b] == b; })) add_base_point_for(g);
  }
  for (std::size_t l = 0; l < levels_.size(); ++l) rebuild(l);

  // Holt's SCHREIERSIMS: walk the chain from the bottom; whenever a Schreier
  // generator fails to sift, add its residue and resume at the level it reached.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    const Level& lv = levels_[i];
    for (std::size_t oi = 0; oi < lv.orbit.size() && !restarted; ++oi) {
      const std::uint32_t x = lv.orbit[oi];
      const Perm& ux = lv.transversal[lv.slot[x]];
      for (const auto& s : lv.gens) {
        const std::uint32_t y = s[x];
        Perm sg = perm_mul(perm_mul(ux, s), perm_inverse(lv.transversal[lv.slot[y]]));
        if (perm_is_identity(sg)) continue;
        auto [h, j] = strip(std::move(sg), static_cast<std::size_t>(i) + 1);
        if (perm_is_identity(h)) continue;
        if (j == levels_.size()) add_base_point_for(h);
        gens_.push_back(std::move(h));
        for (std::size_t l = 0; l <= j; ++l) rebuild(l);
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

void PermGroup::add_base_point_for(const Perm& g) {
  // g fixes every current base point when this is called
  for (std::uint32_t x = 0; x < n_; ++x)
    if (g[x] != x) {
      base_.push_back(x);
      levels_.emplace_back();
      return;
    }
}

void PermGroup::rebuild(std::size_t level) {
  Level& lv = levels_[level];
  lv.gens.clear();
  for (const auto& g : gens_) {
    bool fixes = true;
    for (std::size_t b = 0; b < level && fixes; ++b) fixes = g[base_[b]] == base_[b];
    if (fixes) lv.gens.push_back(g);
  }
  lv.slot.assign(n_, -1);
  lv.transversal.clear();
  lv.orbit.clear();
  const std::uint32_t b = base_[level];
  lv.slot[b] = 0;
  lv.transversal.push_back(perm_identity(n_));
  lv.orbit.push_back(b);
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const std::uint32_t x = lv.orbit[k];
    for (const auto& s : lv.gens) {
      const std::uint32_t y = s[x];
      if (lv.slot[y] >= 0) continue;
      lv.slot[y] = static_cast<std::int32_t>(lv.transversal.size());
      lv.transversal.push_back(perm_mul(lv.transversal[lv.slot[x]], s));
      lv.orbit.push_back(y);
    }
  }
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const std::int32_t s = levels_[j].slot[g[base_[j]]];
    if (s < 0) return {std::move(g), j};
    g = perm_mul(g, perm_inverse(levels_[j].transversal[s]));
  }
  return {std::move(g), levels_.size()};
}

bool PermGroup::contains(const Perm& g) const {
  if (g.size() != n_) throw DimensionError("permutation of the wrong degree");
  auto [h, j] = strip(g, 0);
  return j == levels_.size() && perm_is_identity(h);
}

std::vector<std::size_t> PermGroup::basic_orbit_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& lv : levels_) out.push_back(lv.orbit.size());
  return out;
}

unsigned __int128 PermGroup::order() const {
  unsigned __int128 r = 1;
  const unsigned __int128 limit = ~static_cast<unsigned __int128>(0);
  for (const auto& lv : levels_) {
    if (r > limit / lv.orbit.size()) throw ResourceError("group order exceeds 128 bits");
    r *= lv.orbit.size();
  }
  return r;
}

std::string to_string_u128(unsigned __int128 x) {
  if (x == 0) return "0";
  std::string s;
  while (x > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(x % 10)));
    x /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string PermGroup::order_string() const { return to_string_u128(order()); }

}  // namespace mggs
