#include "mggs/layered.hpp"

#include <algorithm>
#include <deque>

#include "mggs/errors.hpp"

namespace mggs {

namespace {

std::size_t first_nonzero(const Portrait& g, unsigned level, std::size_t width) {
  for (std::size_t i = 0; i < width; ++i)
    if (g.label_at(level, i).t != 0) return i;
  return width;
}

}  // namespace

LayeredGroup::LayeredGroup(Residue p, unsigned depth, const std::vector<Portrait>& generators)
    : p_(p), depth_(depth) {
  require_odd_prime(p);
  std::deque<Portrait> queue;
  for (const auto& g : generators) {
    if (g.p() != p) throw DomainError("generator over a different alphabet");
    if (g.depth() < depth) throw DepthError("generator shallower than the group depth");
    Portrait t = g.truncate(depth);
    if (!t.has_sigma_labels()) throw DomainError("generator has a label outside <sigma>");
    queue.push_back(std::move(t));
  }
  std::vector<Portrait> found;
  while (!queue.empty()) {
    auto [r, level] = sift(std::move(queue.front()));
    queue.pop_front();
    if (level == depth_) continue;
    insert(r, level);
    queue.push_back(r.pow(p_));
    for (const auto& x : found) queue.push_back(commutator(r, x));
    found.push_back(std::move(r));
  }
}

std::pair<Portrait, unsigned> LayeredGroup::sift(Portrait g) const {
  std::size_t b = 0;
  std::size_t width = 1;
  for (unsigned level = 0; level < depth_; ++level, width *= p_) {
    for (; b < basis_.size() && basis_[b].level == level; ++b) {
      const Residue c = g.label_at(level, basis_[b].pivot).t;
      if (c != 0) g = g * basis_[b].inverse_powers[c];
    }
    if (first_nonzero(g, level, width) != width) return {std::move(g), level};
  }
  return {std::move(g), depth_};
}

void LayeredGroup::insert(const Portrait& residue, unsigned level) {
  std::size_t width = 1;
  for (unsigned l = 0; l < level; ++l) width *= p_;
  const std::size_t pivot = first_nonzero(residue, level, width);
  // normalise the pivot coordinate to 1
  const Portrait h = residue.pow(inv_mod(residue.label_at(level, pivot).t, p_));
  const Portrait hinv = h.inverse();
  Element e{level, pivot, {Portrait(p_, depth_)}};
  for (Residue c = 1; c < p_; ++c) e.inverse_powers.push_back(e.inverse_powers.back() * hinv);
  const auto pos = std::lower_bound(basis_.begin(), basis_.end(), e, [](const Element& x, const Element& y) {
    return std::tie(x.level, x.pivot) < std::tie(y.level, y.pivot);
  });
  basis_.insert(pos, std::move(e));
}

std::vector<std::size_t> LayeredGroup::level_ranks() const {
  std::vector<std::size_t> out(depth_, 0);
  for (const auto& e : basis_) ++out[e.level];
  return out;
}

bool LayeredGroup::contains(const Portrait& g) const {
  if (g.p() != p_) return false;
  if (g.depth() < depth_)
    throw DepthError("membership at depth " + std::to_string(depth_) + " needs a portrait at least that deep");
  Portrait t = g.truncate(depth_);
  if (!t.has_sigma_labels()) return false;
  return sift(std::move(t)).second == depth_;
}

LayeredGroup layered_group(const MggsGroup& g, const std::vector<Word>& gens, unsigned depth) {
  std::vector<Portrait> ps;
  for (const auto& w : gens) ps.push_back(evaluate(w, g, depth));
  return LayeredGroup(g.p(), depth, ps);
}

bool member_at_depth(const Portrait& g, const LayeredGroup& q) { return q.contains(g); }

}  // namespace mggs
