#include "mggs/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include <omp.h>

#include "mggs/errors.hpp"

namespace mggs {

class QuotientBuilder {
 public:
  QuotientBuilder(const MggsGroup& g, const std::vector<Word>& gens, unsigned depth, const QuotientBudget& budget)
      : budget_(budget) {
    if (portrait_size(g.p(), depth) > budget.max_labels)
      throw ResourceError("depth " + std::to_string(depth) + " portraits exceed the label budget of " +
                          std::to_string(budget.max_labels));
    q_.p_ = g.p();
    q_.depth_ = depth;
    q_.gens_ = gens;
    for (const auto& w : gens) gen_portraits_.push_back(evaluate(w, g, depth));
    insert(Portrait(g.p(), depth), 0, 0);
  }

  /// Inserts if absent; returns true if the element is new.
  bool insert(Portrait x, std::size_t parent, std::size_t via) {
    auto [it, fresh] = index_.try_emplace(x, order_.size());
    if (!fresh) return false;
    if (order_.size() >= budget_.max_elements)
      throw ResourceError("quotient exceeds the element budget of " + std::to_string(budget_.max_elements));
    order_.push_back(std::move(x));
    parent_.push_back(parent);
    via_.push_back(via);
    return true;
  }

  void run_serial() {
    std::size_t begin = 0;
    while (begin < order_.size()) {
      const std::size_t end = order_.size();
      for (std::size_t i = begin; i < end; ++i)
        for (std::size_t k = 0; k < gen_portraits_.size(); ++k) insert(order_[i] * gen_portraits_[k], i, k);
      begin = end;
    }
  }

  void run_parallel() {
    constexpr std::size_t kChunk = 1u << 14;
    const std::size_t ng = gen_portraits_.size();
    std::vector<Portrait> products;
    std::size_t begin = 0;
    while (begin < order_.size()) {
      const std::size_t end = order_.size();
      for (std::size_t lo = begin; lo < end; lo += kChunk) {
        const std::size_t hi = std::min(end, lo + kChunk);
        products.assign((hi - lo) * ng, Portrait(q_.p_, 0));
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(lo); i < static_cast<std::ptrdiff_t>(hi); ++i)
          for (std::size_t k = 0; k < ng; ++k) products[(i - lo) * ng + k] = order_[i] * gen_portraits_[k];
        for (std::size_t i = lo; i < hi; ++i)
          for (std::size_t k = 0; k < ng; ++k) insert(std::move(products[(i - lo) * ng + k]), i, k);
      }
      begin = end;
    }
  }

  QuotientGroup finish() {
    // canonical order: lexicographic on labels; the identity sorts first
    std::vector<std::size_t> perm(order_.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return order_[x] < order_[y]; });
    std::vector<std::size_t> rank(order_.size());
    for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = i;
    q_.elements_.reserve(order_.size());
    for (std::size_t i : perm) {
      q_.elements_.push_back(std::move(order_[i]));
      q_.parent_.push_back(rank[parent_[i]]);
      q_.via_.push_back(via_[i]);
    }
    return std::move(q_);
  }

 private:
  QuotientBudget budget_;
  QuotientGroup q_;
  std::vector<Portrait> gen_portraits_;
  std::unordered_map<Portrait, std::size_t, PortraitHash> index_;
  std::vector<Portrait> order_;
  std::vector<std::size_t> parent_, via_;
};

QuotientGroup enumerate_quotient_serial(const MggsGroup& g, const std::vector<Word>& gens, unsigned depth,
                                        const QuotientBudget& budget) {
  QuotientBuilder b(g, gens, depth, budget);
  b.run_serial();
  return b.finish();
}

QuotientGroup enumerate_quotient(const MggsGroup& g, const std::vector<Word>& gens, unsigned depth,
                                 const QuotientBudget& budget) {
  QuotientBuilder b(g, gens, depth, budget);
  b.run_parallel();
  return b.finish();
}

std::optional<std::size_t> QuotientGroup::find(const Portrait& g) const {
  if (g.depth() < depth_)
    throw DepthError("portrait of depth " + std::to_string(g.depth()) + " against a quotient of depth " +
                     std::to_string(depth_));
  if (g.p() != p_) return std::nullopt;
  const Portrait t = g.depth() == depth_ ? g : g.truncate(depth_);
  auto it = std::lower_bound(elements_.begin(), elements_.end(), t);
  if (it == elements_.end() || *it != t) return std::nullopt;
  return static_cast<std::size_t>(it - elements_.begin());
}

Word QuotientGroup::word_for(std::size_t i) const {
  if (i >= elements_.size()) throw DomainError("element index out of range");
  std::vector<std::size_t> path;
  while (!elements_[i].is_identity()) {
    path.push_back(via_[i]);
    i = parent_[i];
  }
  Word w(p_);
  for (auto it = path.rbegin(); it != path.rend(); ++it) w *= gens_[*it];
  return w;
}

bool QuotientGroup::operator==(const QuotientGroup& o) const {
  return p_ == o.p_ && depth_ == o.depth_ && gens_ == o.gens_ && elements_ == o.elements_ &&
         parent_ == o.parent_ && via_ == o.via_;
}

std::vector<Word> standard_generators(const MggsGroup& g) {
  std::vector<Word> gens{Word::a(g.p())};
  for (std::size_t j = 0; j < g.rank(); ++j) gens.push_back(Word::b(g.standard(j)));
  return gens;
}

bool member_at_depth(const Portrait& g, const QuotientGroup& q) { return q.contains(g); }

PermGroup leaf_group(const MggsGroup& g, const std::vector<Word>& gens, unsigned depth) {
  std::size_t degree = 1;
  for (unsigned i = 0; i < depth; ++i) degree *= g.p();
  if (degree > (1u << 20)) throw ResourceError("leaf group degree too large");
  std::vector<Perm> perms;
  for (const auto& w : gens) perms.push_back(evaluate(w, g, depth).leaf_permutation());
  return PermGroup(degree, perms);
}

bool member_at_depth(const Portrait& g, const PermGroup& q, unsigned depth) {
  if (g.depth() < depth) throw DepthError("portrait shallower than the leaf group");
  return q.contains(g.truncate(depth).leaf_permutation());
}

}  // namespace mggs
