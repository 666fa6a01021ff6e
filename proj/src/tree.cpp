#include "mggs/tree.hpp"

#include <algorithm>
#include <numeric>

#include "mggs/errors.hpp"

namespace mggs {

namespace {

std::size_t ipow(std::size_t base, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

}  // namespace

AffineLabel AffineLabel::then(AffineLabel next, Residue p) const {
  // next(this(x)) = nu*(u*x + t) + nt
  return {static_cast<std::uint16_t>(mul_mod(next.u, u, p)),
          static_cast<std::uint16_t>(add_mod(mul_mod(next.u, t, p), next.t, p))};
}

AffineLabel AffineLabel::inverse(Residue p) const {
  const Residue ui = inv_mod(u, p);
  return {static_cast<std::uint16_t>(ui), static_cast<std::uint16_t>(neg_mod(mul_mod(ui, t, p), p))};
}

std::size_t portrait_size(Residue p, unsigned depth) { return (ipow(p, depth) - 1) / (p - 1); }

Portrait::Portrait(Residue p, unsigned depth) : p_(p), depth_(depth), labels_(portrait_size(p, depth)) {
  require_odd_prime(p);
}

Portrait::Portrait(Residue p, unsigned depth, std::vector<AffineLabel> labels)
    : p_(p), depth_(depth), labels_(std::move(labels)) {
  require_odd_prime(p);
  if (labels_.size() != portrait_size(p, depth))
    throw DimensionError("portrait of depth " + std::to_string(depth) + " needs " +
                         std::to_string(portrait_size(p, depth)) + " labels, got " +
                         std::to_string(labels_.size()));
  for (const auto& l : labels_)
    if (l.u == 0 || l.u >= p || l.t >= p) throw DomainError("label is not an affine permutation of F_p");
}

std::size_t Portrait::level_offset(unsigned level) const { return portrait_size(p_, level); }

Portrait Portrait::rooted(AffineLabel label, Residue p, unsigned depth) {
  Portrait g(p, depth);
  if (depth > 0) g.labels_[0] = label;
  return g;
}

Portrait Portrait::from_sections(AffineLabel root, std::span<const Portrait> sections) {
  if (sections.empty()) throw DimensionError("from_sections needs p sections");
  const Residue p = sections[0].p();
  const unsigned d = sections[0].depth();
  if (sections.size() != p) throw DimensionError("from_sections needs exactly p sections");
  for (const auto& s : sections)
    if (s.p() != p || s.depth() != d) throw DimensionError("sections must share p and depth");
  Portrait g(p, d + 1);
  g.labels_[0] = root;
  for (unsigned l = 0; l < d; ++l) {
    const std::size_t width = ipow(p, l);
    for (Residue x = 0; x < p; ++x)
      for (std::size_t i = 0; i < width; ++i) g.set_label(l + 1, x * width + i, sections[x].label_at(l, i));
  }
  return g;
}

std::size_t Portrait::index_of(const Vertex& v) const {
  if (v.size() >= depth_) throw DepthError("vertex of length " + std::to_string(v.size()) +
                                           " has no label in a portrait of depth " + std::to_string(depth_));
  std::size_t idx = 0;
  for (Residue x : v) {
    if (x >= p_) throw DomainError("vertex letter out of range");
    idx = idx * p_ + x;
  }
  return level_offset(static_cast<unsigned>(v.size())) + idx;
}

AffineLabel Portrait::label(const Vertex& v) const { return labels_[index_of(v)]; }

AffineLabel Portrait::label_at(unsigned level, std::size_t index_in_level) const {
  return labels_[level_offset(level) + index_in_level];
}

void Portrait::set_label(unsigned level, std::size_t index_in_level, AffineLabel l) {
  labels_[level_offset(level) + index_in_level] = l;
}

Vertex Portrait::apply(const Vertex& v) const {
  if (v.size() > depth_)
    throw DepthError("vertex of length " + std::to_string(v.size()) + " below a portrait of depth " +
                     std::to_string(depth_));
  Vertex out(v.size());
  std::size_t idx = 0;  // index in level of the current prefix of v
  for (unsigned l = 0; l < v.size(); ++l) {
    if (v[l] >= p_) throw DomainError("vertex letter out of range");
    out[l] = label_at(l, idx).apply(v[l], p_);
    idx = idx * p_ + v[l];
  }
  return out;
}

std::size_t Portrait::apply_index(unsigned level, std::size_t index_in_level) const {
  if (level > depth_) throw DepthError("vertex below portrait");
  std::size_t width = ipow(p_, level);
  std::size_t src_prefix = 0, img = 0;
  for (unsigned l = 0; l < level; ++l) {
    width /= p_;
    const Residue x = static_cast<Residue>((index_in_level / width) % p_);
    img = img * p_ + label_at(l, src_prefix).apply(x, p_);
    src_prefix = src_prefix * p_ + x;
  }
  return img;
}

Portrait Portrait::operator*(const Portrait& h) const {
  if (h.p_ != p_) throw DomainError("portraits over different alphabets");
  const unsigned d = std::min(depth_, h.depth_);
  Portrait r(p_, d);
  std::vector<std::size_t> img{0}, next;
  for (unsigned l = 0; l < d; ++l) {
    const std::size_t off = level_offset(l);
    const std::size_t width = img.size();
    const bool need_next = l + 1 < d;
    if (need_next) next.assign(width * p_, 0);
    for (std::size_t i = 0; i < width; ++i) {
      const AffineLabel gl = labels_[off + i];
      r.labels_[off + i] = gl.then(h.labels_[off + img[i]], p_);
      if (need_next) {
        for (Residue x = 0; x < p_; ++x) next[i * p_ + x] = img[i] * p_ + gl.apply(x, p_);
      }
    }
    if (need_next) img.swap(next);
  }
  return r;
}

Portrait Portrait::inverse() const {
  Portrait r(p_, depth_);
  std::vector<std::size_t> img{0}, next;
  for (unsigned l = 0; l < depth_; ++l) {
    const std::size_t off = level_offset(l);
    const std::size_t width = img.size();
    const bool need_next = l + 1 < depth_;
    if (need_next) next.assign(width * p_, 0);
    for (std::size_t i = 0; i < width; ++i) {
      const AffineLabel gl = labels_[off + i];
      r.labels_[off + img[i]] = gl.inverse(p_);
      if (need_next) {
        for (Residue x = 0; x < p_; ++x) next[i * p_ + x] = img[i] * p_ + gl.apply(x, p_);
      }
    }
    if (need_next) img.swap(next);
  }
  return r;
}

Portrait Portrait::pow(std::int64_t k) const {
  Portrait base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Portrait result(p_, depth_);
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Portrait Portrait::conjugate(const Portrait& h) const { return h.inverse() * (*this) * h; }

Portrait Portrait::section(const Vertex& v) const {
  if (v.size() > depth_) throw DepthError("section below the portrait depth");
  std::size_t base = 0;
  for (Residue x : v) {
    if (x >= p_) throw DomainError("vertex letter out of range");
    base = base * p_ + x;
  }
  const unsigned d = depth_ - static_cast<unsigned>(v.size());
  Portrait r(p_, d);
  std::size_t width = 1;
  for (unsigned l = 0; l < d; ++l) {
    const unsigned src_level = l + static_cast<unsigned>(v.size());
    for (std::size_t i = 0; i < width; ++i) r.set_label(l, i, label_at(src_level, base * width + i));
    width *= p_;
  }
  return r;
}

Portrait Portrait::truncate(unsigned n) const {
  if (n > depth_) throw DepthError("cannot truncate to a larger depth");
  return Portrait(p_, n, std::vector<AffineLabel>(labels_.begin(), labels_.begin() + portrait_size(p_, n)));
}

bool Portrait::is_identity() const {
  return std::all_of(labels_.begin(), labels_.end(), [](AffineLabel l) { return l.is_identity(); });
}

bool Portrait::has_sigma_labels() const {
  return std::all_of(labels_.begin(), labels_.end(), [](AffineLabel l) { return l.u == 1; });
}

bool Portrait::has_delta_labels() const {
  return std::all_of(labels_.begin(), labels_.end(), [](AffineLabel l) { return l.t == 0; });
}

std::vector<std::uint32_t> Portrait::leaf_permutation() const {
  std::vector<std::uint32_t> img{0}, next;
  for (unsigned l = 0; l < depth_; ++l) {
    const std::size_t off = level_offset(l);
    next.assign(img.size() * p_, 0);
    for (std::size_t i = 0; i < img.size(); ++i) {
      const AffineLabel gl = labels_[off + i];
      for (Residue x = 0; x < p_; ++x) next[i * p_ + x] = static_cast<std::uint32_t>(img[i] * p_ + gl.apply(x, p_));
    }
    img.swap(next);
  }
  return img;
}

Portrait compose(const Portrait& g, const Portrait& h) { return g * h; }
Portrait section(const Portrait& g, const Vertex& v) { return g.section(v); }
Vertex apply(const Portrait& g, const Vertex& v) { return g.apply(v); }
Portrait rooted(AffineLabel label, Residue p, unsigned depth) { return Portrait::rooted(label, p, depth); }

Portrait kappa(unsigned m, const Portrait& g, unsigned max_depth) {
  const unsigned d = g.depth() + m;
  if (d > max_depth) throw DepthError("kappa_" + std::to_string(m) + " exceeds the maximum depth");
  const Residue p = g.p();
  Portrait r(p, d);
  const std::size_t copies = ipow(p, m);
  std::size_t width = 1;
  for (unsigned l = 0; l < g.depth(); ++l) {
    for (std::size_t c = 0; c < copies; ++c)
      for (std::size_t i = 0; i < width; ++i) r.set_label(m + l, c * width + i, g.label_at(l, i));
    width *= p;
  }
  return r;
}

bool equal_at_depth(const Portrait& g, const Portrait& h, unsigned n) {
  if (g.depth() < n || h.depth() < n)
    throw DepthError("comparison at depth " + std::to_string(n) + " needs portraits at least that deep");
  if (g.p() != h.p()) return false;
  const std::size_t count = portrait_size(g.p(), n);
  return std::equal(g.labels().begin(), g.labels().begin() + count, h.labels().begin());
}

Portrait commutator(const Portrait& g, const Portrait& h) { return g.inverse() * h.inverse() * g * h; }

Portrait directed(const FpVec& x, unsigned depth) {
  const Residue p = x.modulus();
  if (x.size() != p - 1) throw DimensionError("directed element needs a vector of length p-1");
  Portrait r(p, depth);
  // Vertex 0^k i sits at level k+1 with index i.
  for (unsigned level = 1; level < depth; ++level)
    for (Residue i = 1; i < p; ++i) r.set_label(level, i, AffineLabel::shift(x[i - 1], p));
  return r;
}

std::size_t PortraitHash::operator()(const Portrait& g) const noexcept {
  std::uint64_t h = 1469598103934665603ull ^ g.depth();
  for (const auto& l : g.labels()) {
    h ^= (static_cast<std::uint64_t>(l.u) << 16) | l.t;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace mggs
