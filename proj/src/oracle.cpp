#include "mggs/oracle.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "mggs/autgrp.hpp"
#include "mggs/coordinates.hpp"
#include "mggs/errors.hpp"
#include "mggs/layered.hpp"
#include "mggs/quotient.hpp"

namespace mggs {

namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

CheckResult start(const std::string& name, const MggsGroup& g, unsigned depth) {
  CheckResult r;
  r.name = name;
  r.p = g.p();
  for (const auto& row : g.matrix().row_vectors()) r.rows.push_back(row.entries());
  r.depth = depth;
  r.passed = true;
  return r;
}

CheckResult& fail(CheckResult& r, std::string witness) {
  if (r.passed) {
    r.passed = false;
    r.witness = std::move(witness);
  }
  return r;
}

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Portrait a_portrait(Residue p, unsigned depth) { return Portrait::rooted(AffineLabel::shift(1, p), p, depth); }

/// psi_n^{-1}(x, id, ..., id): x placed below the vertex 0^n.
Portrait below_zero(unsigned n, const Portrait& x) {
  Portrait r(x.p(), x.depth() + n);
  std::size_t width = 1;
  for (unsigned l = 0; l < x.depth(); ++l) {
    for (std::size_t i = 0; i < width; ++i) r.set_label(n + l, i, x.label_at(l, i));
    width *= x.p();
  }
  return r;
}

std::string vec_str(const std::vector<Residue>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace

std::vector<Residue> forced_a_coords_shifted(const std::vector<FpVec>& n, const MggsGroup& g) {
  const Residue p = g.p();
  if (n.size() != p) throw DimensionError("forced A-coordinates need p B-coordinate vectors");
  std::vector<Residue> s(p, 0);
  for (Residue k = 0; k < p; ++k)
    for (Residue i = 0; i < p; ++i)
      s[k] = add_mod(s[k], n[i].dot(g.column(static_cast<std::int64_t>(k) - i + 1)), p);
  return s;
}

Word random_word(std::mt19937_64& rng, const MggsGroup& g, int syllables, bool with_c) {
  const Residue p = g.p();
  Word w(p);
  for (int i = 0; i < syllables; ++i) {
    const auto kind = rng() % (with_c ? 3 : 2);
    if (kind == 0) {
      w *= Word::a(p, 1 + rng() % (p - 1));
    } else if (kind == 1) {
      FpVec n(p, g.rank());
      while (n.is_zero())
        for (std::size_t j = 0; j < n.size(); ++j) n.set(j, rng() % p);
      w *= Word::b(n);
    } else {
      w *= Word::c(p, rng() % 2 ? 1 : -1);
    }
  }
  return w;
}

Word random_stabilizer_word(std::mt19937_64& rng, const MggsGroup& g, int syllables) {
  const Residue p = g.p();
  std::vector<Gen> syl;
  bool a_turn = rng() % 2;
  for (int i = 0; i < syllables; ++i, a_turn = !a_turn) {
    if (a_turn) {
      syl.push_back(PowA{static_cast<Residue>(1 + rng() % (p - 1))});
    } else {
      FpVec n(p, g.rank());
      while (n.is_zero())
        for (std::size_t j = 0; j < n.size(); ++j) n.set(j, rng() % p);
      syl.push_back(PowB{n});
    }
  }
  Word w(p, syl);
  return w * Word::a(p, -static_cast<std::int64_t>(w.a_exponent_sum()));
}

unsigned membership_depth(Residue p, unsigned depth, std::size_t max_leaves) {
  return ipow(p, depth + 1) <= max_leaves ? depth + 1 : depth;
}

CheckResult check_global_equations(const MggsGroup& g, unsigned depth, bool mutate) {
  Stopwatch sw;
  auto r = start(mutate ? "global_equations_mutant" : "global_equations", g, depth);
  if (depth < 2) throw DepthError("the global equations need depth >= 2");
  const Residue p = g.p();
  const auto gens = regularisation_gens(g);
  const auto coords = [&](const std::vector<FpVec>& n) {
    return mutate ? forced_a_coords_shifted(n, g) : forced_a_coords(n, g);
  };

  // only if: coordinates of stabiliser elements of Q(G_reg, depth), all of
  // them when the quotient is small, sampled words otherwise
  const unsigned m = membership_depth(p, depth);
  const auto reg = layered_group(g, gens, m);
  const bool enumerate = layered_group(g, gens, depth).order_exponent() * std::log(p) <= std::log(200000.0);
  std::vector<std::pair<Word, Portrait>> samples;
  if (enumerate) {
    const auto q = enumerate_quotient(g, gens, depth);
    for (std::size_t i = 0; i < q.size(); ++i)
      if (q.elements()[i].in_first_level_stabilizer()) samples.emplace_back(q.word_for(i), q.elements()[i]);
  } else {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 2000; ++i) {
      Word w(p);
      for (int k = 0, len = 1 + static_cast<int>(rng() % 12); k < len; ++k)
        w *= gens[rng() % gens.size()].pow(rng() % 2 ? 1 : -1);
      w *= Word::a(p, -static_cast<std::int64_t>(w.a_exponent_sum()));
      samples.emplace_back(w, evaluate(w, g, depth));
    }
  }
  std::size_t stab = 0;
  for (const auto& [w, x] : samples) {
    if (!r.passed) break;
    ++stab;
    const auto c = b_coordinates(w, g);
    const auto s = coords(c.n);
    const auto secs = sections_of_word(w, g);
    for (Residue k = 0; k < p && r.passed; ++k) {
      const std::string where = "word " + w.to_string() + ", k=" + std::to_string(k);
      const auto ab_words = secs[k].over_ab();
      if (evaluate(secs[k], g, depth - 1) != section(x, {k})) {
        fail(r, where + ": section word disagrees with the portrait");
      } else if (x.label({k}) != AffineLabel::shift(s[k], p)) {
        fail(r, where + ": label at vertex k is sigma^" + std::to_string(x.label({k}).t) +
                    " but the forced A-coordinate is " + std::to_string(s[k]));
      } else if (ab_words && abelianize(secs[k], g).b != c.n[k]) {
        fail(r, where + ": B-part of the section differs from n_k");
      }
    }
  }

  // if: psi_1^{-1}(a^{s_k} b^{n_k}) lies in G_reg for every choice of n
  const std::size_t per_slot = ipow(p, static_cast<unsigned>(g.rank()));
  const double total = std::pow(static_cast<double>(per_slot), static_cast<double>(p));
  const bool exhaustive = total <= 20000;
  const std::size_t count = exhaustive ? static_cast<std::size_t>(total) : 2000;
  std::mt19937_64 rng(12345);
  for (std::size_t code = 0; code < count && r.passed; ++code) {
    std::vector<FpVec> n(p, g.zero_coordinates());
    std::size_t c = code;
    for (Residue k = 0; k < p; ++k)
      for (std::size_t j = 0; j < g.rank(); ++j) {
        n[k].set(j, exhaustive ? static_cast<std::int64_t>(c % p) : static_cast<std::int64_t>(rng() % p));
        if (exhaustive) c /= p;
      }
    const auto s = coords(n);
    std::vector<Portrait> secs;
    for (Residue k = 0; k < p; ++k) secs.push_back(evaluate(Word::a(p, s[k]) * Word::b(n[k]), g, m - 1));
    if (!member_at_depth(Portrait::from_sections(AffineLabel::identity(), secs), reg)) {
      std::string ns;
      for (const auto& v : n) ns += v.to_string();
      fail(r, "B-coordinates " + ns + " with A-coordinates " + vec_str(s) + " give an element outside G_reg at depth " +
                  std::to_string(m));
    }
  }
  r.detail = std::to_string(stab) + (enumerate ? " stabiliser elements of Q(G_reg," : " sampled stabiliser words at depth ") +
             std::to_string(depth) + (enumerate ? "); " : "; ") +
             std::to_string(count) + (exhaustive ? " (all)" : " (sampled)") +
             " B-coordinate choices tested in G_reg at depth " + std::to_string(m);
  r.elapsed_ms = sw.ms();
  return r;
}

CheckResult check_symmetric_counterexample(const MggsGroup& g) {
  Stopwatch sw;
  auto r = start("symmetric_counterexample", g, 3);
  if (g.classification() != Classification::Symmetric)
    throw PreconditionError("the counterexample concerns symmetric groups");
  const Residue p = g.p();
  constexpr unsigned kDepth = 3;
  const Portrait a = a_portrait(p, kDepth);
  const Portrait c = evaluate(Word::c(p), g, kDepth);
  const Word dw = commutator(Word::a(p), Word::c(p));
  const Portrait ad = a * evaluate(dw, g, kDepth);

  if (a.conjugate(c) != ad) return fail(r, "a^c differs from a [a,c]");
  if (!ad.pow(p).is_identity()) return fail(r, "a [a,c] does not have order p at depth 3");
  const bool trivial_at_2 = equal_at_depth(ad, a, 2);

  const auto in_g = layered_group(g, standard_generators(g), kDepth);
  const auto in_reg = layered_group(g, regularisation_gens(g), kDepth);
  if (!member_at_depth(c, in_reg)) return fail(r, "c is not in Q(G_reg,3)");
  if (member_at_depth(c, in_g)) return fail(r, "c lies in Q(G,3)");

  // candidates kappa_1(y) c, y sigma-labelled of depth 2
  const std::size_t labels = portrait_size(p, 2);
  const std::size_t total = ipow(p, static_cast<unsigned>(labels));
  std::size_t found = std::numeric_limits<std::size_t>::max();
  std::size_t bad_conj = std::numeric_limits<std::size_t>::max();
#pragma omp parallel for schedule(static) reduction(min : found, bad_conj)
  for (std::ptrdiff_t code = 0; code < static_cast<std::ptrdiff_t>(total); ++code) {
    std::vector<AffineLabel> ls(labels);
    std::size_t x = static_cast<std::size_t>(code);
    for (auto& l : ls) {
      l = AffineLabel::shift(static_cast<std::int64_t>(x % p), p);
      x /= p;
    }
    const Portrait h = kappa(1, Portrait(p, 2, ls)) * c;
    if (a.conjugate(h) != ad) bad_conj = std::min(bad_conj, static_cast<std::size_t>(code));
    if (member_at_depth(h, in_g)) found = std::min(found, static_cast<std::size_t>(code));
  }
  if (bad_conj != std::numeric_limits<std::size_t>::max())
    return fail(r, "candidate " + std::to_string(bad_conj) + " does not conjugate a to a d");
  if (found != std::numeric_limits<std::size_t>::max())
    return fail(r, "candidate " + std::to_string(found) + " (kappa_1(y) c) lies in Stab_G(1) modulo Stab(3)");
  r.detail = "d = " + dw.to_string() + "; a d = a at depth 2: " + (trivial_at_2 ? "yes" : "no") + "; " +
             std::to_string(total) + " candidates kappa_1(y) c searched at depth 3, none in Q(G,3)";
  r.elapsed_ms = sw.ms();
  return r;
}

CheckResult check_order_p_prop(const MggsGroup& g, unsigned trials, unsigned depth, std::uint64_t seed) {
  Stopwatch sw;
  auto r = start("order_p", g, depth);
  r.seed = seed;
  const Residue p = g.p();
  const auto gens = regularisation_gens(g);
  const auto reg = layered_group(g, gens, depth);
  const bool symmetric = g.classification() == Classification::Symmetric;
  const Portrait a = a_portrait(p, depth);
  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < trials && r.passed; ++t) {
    const Word x = random_word(rng, g, 1 + static_cast<int>(rng() % 8), symmetric);
    const Word y = commutator(Word::a(p), x);
    const auto h = order_p_conjugator(y, g, depth);
    if (!equal_at_depth(a.conjugate(h.h), evaluate(Word::a(p) * y, g, depth), depth))
      fail(r, "x = " + x.to_string() + ": a^h differs from a^x");
    else if (!member_at_depth(h.h, reg))
      fail(r, "x = " + x.to_string() + ": h is not in G_reg at depth " + std::to_string(depth));
  }
  r.detail = std::to_string(trials) + " conjugators a^h = a^x verified at depth " + std::to_string(depth);
  if (r.passed && symmetric) {
    const auto ce = check_symmetric_counterexample(g);
    if (!ce.passed) fail(r, "counterexample: " + ce.witness);
    r.detail += "; " + ce.detail;
  }
  r.elapsed_ms = sw.ms();
  return r;
}

CheckResult check_kappa_closure(const MggsGroup& g, unsigned depth) {
  Stopwatch sw;
  auto r = start("kappa_closure", g, depth);
  if (depth < 2) throw DepthError("kappa closure needs depth >= 2");
  const Residue p = g.p();
  const auto reg = layered_group(g, regularisation_gens(g), depth);
  std::ostringstream detail;
  for (std::size_t j = 0; j < g.rank() && r.passed; ++j) {
    Residue s = 0;
    for (Residue i = 1; i < p; ++i) s = add_mod(s, g.basis_row(j)[i - 1], p);
    const Word inner = Word::a(p, s) * Word::b(g.standard(j));
    if (!member_at_depth(kappa(1, evaluate(inner, g, depth - 1)), reg))
      fail(r, "kappa_1(" + inner.to_string() + ") not in Q(G_reg," + std::to_string(depth) + ")");
    const Portrait b = evaluate(Word::b(g.standard(j)), g, depth);
    const Word ba = commutator(Word::b(g.standard(j)), Word::a(p));
    for (unsigned n = 1; n < depth && r.passed; ++n) {
      const Portrait lhs = commutator(b, kappa(n, a_portrait(p, depth - n)));
      if (lhs != below_zero(n, evaluate(ba, g, depth - n)))
        fail(r, "[b^{s_" + std::to_string(j + 1) + "}, kappa_" + std::to_string(n) + "(a)] differs from psi_" +
                    std::to_string(n) + "^{-1}([b,a], id, ...)");
    }
  }
  detail << "kappa_1(a^s b^{s_j}) in Q(G_reg," << depth << ") and glay identity for n < " << depth;

  // kappa_1(a) normalises G iff G is regular; visible from depth 3 on
  const unsigned d3 = std::max(depth, 3u);
  const auto in_g = layered_group(g, standard_generators(g), d3);
  const Portrait k1a = kappa(1, a_portrait(p, d3 - 1));
  bool normalises = true;
  for (const auto& w : standard_generators(g))
    normalises = normalises && member_at_depth(evaluate(w, g, d3).conjugate(k1a), in_g);
  const bool symmetric = g.classification() == Classification::Symmetric;
  if (symmetric == normalises)
    fail(r, std::string("kappa_1(a) ") + (normalises ? "normalises" : "does not normalise") + " Q(G," +
                std::to_string(d3) + ") for a " + to_string(g.classification()) + " group");
  detail << "; kappa_1(a) normalises G at depth " << d3 << ": " << (normalises ? "yes" : "no");

  if (symmetric && r.passed) {
    const unsigned d = std::max(depth, 4u);
    const Portrait k1b = kappa(1, evaluate(Word::b(g.standard(0)), g, d - 1));
    const Portrait k2a = kappa(2, a_portrait(p, d - 2));
    const Portrait k1c = kappa(1, evaluate(Word::c(p), g, d - 1));
    if (commutator(k1b, k2a) != k1c) fail(r, "[kappa_1(b), kappa_2(a)] differs from kappa_1(c)");
    const bool literal = commutator(k2a, k1b) == k1c;
    const bool literal_inv = commutator(k2a, k1b) == k1c.inverse();
    detail << "; [kappa_1(b), kappa_2(a)] = kappa_1(c) at depth " << d << "; reversed order gives "
           << (literal ? "kappa_1(c)" : literal_inv ? "kappa_1(c)^-1" : "neither");
  }
  r.detail = detail.str();
  r.elapsed_ms = sw.ms();
  return r;
}

CheckResult check_kappa_uncorrected(const MggsGroup& g, unsigned depth) {
  Stopwatch sw;
  auto r = start("kappa_uncorrected", g, depth);
  const Residue p = g.p();
  const auto reg = layered_group(g, regularisation_gens(g), depth);
  std::size_t tested = 0;
  for (std::size_t j = 0; j < g.rank() && r.passed; ++j) {
    Residue s = 0;
    for (Residue i = 1; i < p; ++i) s = add_mod(s, g.basis_row(j)[i - 1], p);
    if (s == 0) continue;
    ++tested;
    if (member_at_depth(kappa(1, evaluate(Word::b(g.standard(j)), g, depth - 1)), reg))
      fail(r, "kappa_1(b^{s_" + std::to_string(j + 1) + "}) lies in Q(G_reg," + std::to_string(depth) + ")");
  }
  r.detail = std::to_string(tested) + " generators with s != 0 tested";
  r.elapsed_ms = sw.ms();
  return r;
}

namespace {

struct ScanTally {
  std::size_t centralizers = 0, normalizers = 0, mismatches = 0;
  std::size_t first_mismatch = std::numeric_limits<std::size_t>::max();
};

class CentralizerScan {
 public:
  explicit CentralizerScan(unsigned depth) : depth_(depth), a_(a_portrait(3, depth)) {
    const std::size_t labels = portrait_size(3, depth);
    for (std::size_t v = 0; v < labels; ++v) {
      std::vector<AffineLabel> allowed;
      const bool affine = depth <= 2 || v == 0;
      for (std::uint16_t u = 1; u < (affine ? 3 : 2); ++u)
        for (std::uint16_t t = 0; t < 3; ++t) allowed.push_back({u, t});
      space_.push_back(std::move(allowed));
    }
    total_ = 1;
    for (const auto& s : space_) total_ *= s.size();
  }

  std::size_t total() const { return total_; }

  Portrait decode(std::size_t code) const {
    std::vector<AffineLabel> ls(space_.size());
    for (std::size_t v = 0; v < space_.size(); ++v) {
      ls[v] = space_[v][code % space_[v].size()];
      code /= space_[v].size();
    }
    return Portrait(3, depth_, ls);
  }

  void visit(std::size_t code, ScanTally& t) const {
    const Portrait g = decode(code);
    bool equal_sections = true;
    for (Residue x = 1; x < 3 && equal_sections; ++x) equal_sections = section(g, {x}) == section(g, {0});
    const bool pred_c = equal_sections && g.label({}).u == 1;
    const bool pred_n = equal_sections;
    const bool cen = a_ * g == g * a_;
    const Portrait conj = a_.conjugate(g);
    const bool nor = conj == Portrait::rooted(conj.label({}), 3, depth_) && conj.label({}).u == 1;
    t.centralizers += cen;
    t.normalizers += nor;
    if (cen != pred_c || nor != pred_n) {
      ++t.mismatches;
      t.first_mismatch = std::min(t.first_mismatch, code);
    }
  }

 private:
  unsigned depth_;
  Portrait a_;
  std::vector<std::vector<AffineLabel>> space_;
  std::size_t total_;
};

}  // namespace

CheckResult check_centralizer_normalizer_A(unsigned depth, bool parallel) {
  Stopwatch sw;
  if (depth < 1 || depth > 3) throw DepthError("the centraliser scan supports depth 1..3");
  CheckResult r;
  r.name = parallel ? "centralizer_normalizer_A" : "centralizer_normalizer_A_serial";
  r.p = 3;
  r.depth = depth;
  r.passed = true;
  const CentralizerScan scan(depth);
  ScanTally tally;
  if (parallel) {
    std::size_t c = 0, n = 0, m = 0, first = std::numeric_limits<std::size_t>::max();
#pragma omp parallel for schedule(dynamic, 4096) reduction(+ : c, n, m) reduction(min : first)
    for (std::ptrdiff_t code = 0; code < static_cast<std::ptrdiff_t>(scan.total()); ++code) {
      ScanTally t;
      scan.visit(static_cast<std::size_t>(code), t);
      c += t.centralizers;
      n += t.normalizers;
      m += t.mismatches;
      first = std::min(first, t.first_mismatch);
    }
    tally = {c, n, m, first};
  } else {
    for (std::size_t code = 0; code < scan.total(); ++code) scan.visit(code, tally);
  }
  if (tally.mismatches > 0) {
    const Portrait g = scan.decode(tally.first_mismatch);
    std::string labels;
    for (const auto& l : g.labels()) labels += "[" + std::to_string(l.u) + "," + std::to_string(l.t) + "]";
    fail(r, "portrait " + labels + " contradicts the predicted shape");
  }
  r.detail = std::to_string(scan.total()) + " portraits scanned (" +
             (depth <= 2 ? std::string("all affine labels") : std::string("affine root, sigma labels below")) +
             "): " + std::to_string(tally.centralizers) + " centralise a, " + std::to_string(tally.normalizers) +
             " normalise <a>, " + std::to_string(tally.mismatches) + " mismatches";
  r.elapsed_ms = sw.ms();
  return r;
}

CheckResult check_contraction(const MggsGroup& g, unsigned trials, std::uint64_t seed) {
  Stopwatch sw;
  auto r = start("contraction", g, 0);
  r.seed = seed;
  const Residue p = g.p();
  std::mt19937_64 rng(seed);
  std::size_t longer = 0, reducible = 0;
  for (unsigned t = 0; t < trials && r.passed; ++t) {
    const Word w = random_stabilizer_word(rng, g, 1 + static_cast<int>(rng() % 16));
    const auto secs = sections_of_word(w, g);
    std::size_t total = 0;
    for (const auto& s : secs) total += syllable_length(s);
    const std::size_t len = syllable_length(w);
    if (total > len + p - 1)
      fail(r, "word " + w.to_string() + ": section lengths sum to " + std::to_string(total) + " > " +
                  std::to_string(len + p - 1));
    if (len > 1) {
      ++longer;
      for (Residue i = 1; i < p; ++i)
        if (syllable_length(secs[0] * secs[i].inverse()) < len) {
          ++reducible;
          break;
        }
    }
  }
  r.detail = std::to_string(trials) + " random stabiliser words; " + std::to_string(reducible) + " of " +
             std::to_string(longer) + " words of length > 1 have some i != 0 with |g|_0 g|_i^-1| < |g|";
  if (r.passed && reducible != longer)
    fail(r, "some word of length > 1 has no i with |g|_0 g|_i^-1| < |g| (see detail)");
  r.elapsed_ms = sw.ms();
  return r;
}

CheckResult check_abelianization_rank(const MggsGroup& g, unsigned depth) {
  Stopwatch sw;
  auto r = start("abelianization_rank", g, depth);
  const Residue p = g.p();
  const auto gens = standard_generators(g);
  const bool enumerate = layered_group(g, gens, depth).order_exponent() * std::log(p) <= std::log(1e5);
  std::vector<Word> words;
  if (enumerate) {
    const auto q = enumerate_quotient(g, gens, depth);
    for (std::size_t i = 0; i < q.size(); ++i) words.push_back(q.word_for(i));
  } else {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) words.push_back(random_word(rng, g, 1 + static_cast<int>(rng() % 12), false));
  }
  std::vector<FpVec> rows;
  for (const auto& w : words) {
    const auto ab = abelianize(w, g);
    FpVec v(p, g.rank() + 1);
    v.set(0, ab.a);
    for (std::size_t j = 0; j < g.rank(); ++j) v.set(j + 1, ab.b[j]);
    rows.push_back(v);
  }
  const std::size_t rank = FpMat(p, g.rank() + 1, rows).rank();
  if (rank != g.rank() + 1)
    fail(r, "image spans a subspace of rank " + std::to_string(rank) + " < " + std::to_string(g.rank() + 1));
  r.detail = std::to_string(words.size()) + (enumerate ? " elements of Q(G," : " sampled words at depth ") +
             std::to_string(depth) + (enumerate ? ")" : "") + "; abelianised image has rank " + std::to_string(rank);
  r.elapsed_ms = sw.ms();
  return r;
}

CheckResult check_relation_abelianization(const MggsGroup& g, unsigned depth) {
  Stopwatch sw;
  auto r = start("relation_abelianization", g, depth);
  const auto gens = standard_generators(g);
  const auto q = enumerate_quotient(g, gens, depth);
  std::vector<Portrait> gp;
  for (const auto& w : gens) gp.push_back(evaluate(w, g, depth));
  std::size_t relations = 0;
  const Abelianization zero{0, g.zero_coordinates()};
  for (std::size_t i = 0; i < q.size() && r.passed; ++i)
    for (std::size_t k = 0; k < gens.size() && r.passed; ++k) {
      const auto j = q.find(q.elements()[i] * gp[k]);
      if (!j) return fail(r, "quotient not closed under generator " + gens[k].to_string());
      const Word rel = q.word_for(i) * gens[k] * q.word_for(*j).inverse();
      ++relations;
      if (abelianize(rel, g) != zero)
        fail(r, "relation " + rel.to_string() + " is trivial at depth " + std::to_string(depth) +
                    " but abelianises to a non-zero vector");
    }
  r.detail = std::to_string(relations) + " relations from the BFS tree";
  r.elapsed_ms = sw.ms();
  return r;
}

CheckResult check_homomorphism(const MggsGroup& g, unsigned trials, unsigned depth, std::uint64_t seed) {
  Stopwatch sw;
  auto r = start("homomorphism", g, depth);
  r.seed = seed;
  const Residue p = g.p();
  std::mt19937_64 rng(seed);
  for (unsigned t = 0; t < trials && r.passed; ++t) {
    Word w1 = random_word(rng, g, 1 + static_cast<int>(rng() % 10), true);
    Word w2 = random_word(rng, g, 1 + static_cast<int>(rng() % 10), true);
    if (rng() % 2) w1 *= Word::kappa_a(p, 1 + static_cast<unsigned>(rng() % 2));
    if (evaluate(w1 * w2, g, depth) != evaluate(w1, g, depth) * evaluate(w2, g, depth))
      fail(r, "evaluate(w1 w2) differs for w1 = " + w1.to_string() + ", w2 = " + w2.to_string());

    const Word s = w2 * Word::a(p, -static_cast<std::int64_t>(w2.a_exponent_sum()));
    const auto secs = sections_of_word(s, g);
    const Portrait ps = evaluate(s, g, depth);
    for (Residue k = 0; k < p && r.passed; ++k)
      if (evaluate(secs[k], g, depth - 1) != section(ps, {k}))
        fail(r, "section " + std::to_string(k) + " of " + s.to_string() + " differs from its section word");

    std::vector<AffineLabel> l1(portrait_size(p, depth)), l2(portrait_size(p, depth));
    for (auto* ls : {&l1, &l2})
      for (auto& l : *ls) l = {static_cast<std::uint16_t>(1 + rng() % (p - 1)), static_cast<std::uint16_t>(rng() % p)};
    const Portrait x(p, depth, l1), y(p, depth, l2);
    Vertex v;
    for (unsigned i = 0, len = 1 + static_cast<unsigned>(rng() % (depth - 1)); i < len; ++i)
      v.push_back(static_cast<Residue>(rng() % p));
    if (section(x * y, v) != section(x, v) * section(y, x.apply(v))) fail(r, "section of a product differs");
  }
  r.detail = std::to_string(trials) + " random word pairs, stabiliser sections and portrait pairs";
  r.elapsed_ms = sw.ms();
  return r;
}

CheckResult check_normalizer_census(const MggsGroup& g, unsigned depth) {
  Stopwatch sw;
  auto r = start("normalizer_census", g, depth);
  const Residue p = g.p();
  if (depth < 3) throw DepthError("the census needs depth >= 3 to constrain d_2");
  // Quotient membership where the layered group is cheap; otherwise the
  // conjugates must be literally a power of a or a directed b^n.
  const bool by_quotient = p <= 7;
  std::vector<std::optional<LayeredGroup>> quotients(depth + 1);
  std::vector<std::vector<Portrait>> gens(depth + 1);
  for (unsigned m = 2; m <= depth; ++m) {
    if (by_quotient) quotients[m].emplace(layered_group(g, standard_generators(g), m));
    for (const auto& w : standard_generators(g)) gens[m].push_back(evaluate(w, g, m));
  }
  const auto directed_power = [&](const Portrait& x, unsigned m) {
    if (!x.label({}).is_identity()) return x == Portrait::rooted(x.label({}), p, m) && x.label({}).u == 1;
    FpVec v(p, p - 1);
    for (Residue i = 1; i < p; ++i) {
      if (x.label({i}).u != 1) return false;
      v.set(i - 1, x.label({i}).t);
    }
    const auto n = g.matrix().coordinates(v);
    return n && x == evaluate(Word::b(*n), g, m);
  };
  const auto normalises = [&](const std::vector<Unit>& d) {
    const unsigned m = static_cast<unsigned>(d.size());
    const Portrait x = diagonal_scaling(p, d, m);
    for (const auto& gen : gens[m]) {
      const Portrait y = gen.conjugate(x);
      if (by_quotient ? !member_at_depth(y, *quotients[m]) : !directed_power(y, m)) return false;
    }
    return true;
  };

  // depth-first over prefixes (d_0, ..., d_{m-1}), pruned at every depth
  const auto units = all_units(p);
  std::set<std::pair<Residue, Residue>> census;
  std::size_t passing = 0, visited = 0;
  std::vector<Unit> prefix;
  const std::function<void()> extend = [&]() {
    for (const auto& u : units) {
      prefix.push_back(u);
      ++visited;
      if (prefix.size() < 2 || normalises(prefix)) {
        if (prefix.size() == depth) {
          ++passing;
          census.insert({prefix[0].value(), prefix[1].value()});
        } else {
          extend();
        }
      }
      prefix.pop_back();
    }
  };
  extend();

  const auto U = compute_U(g);
  const auto W = compute_W(p, compute_V(g, U).scalars);
  std::set<std::pair<Residue, Residue>> solver;
  for (const auto& d0 : U)
    for (const auto& d1 : units)
      if (solve_normalizer_sequence(g, d0, d1)) solver.insert({d0.value(), d1.value()});

  for (const auto& pr : census)
    if (!solver.count(pr))
      return fail(r, "(d0, d1) = (" + std::to_string(pr.first) + ", " + std::to_string(pr.second) +
                         ") normalises at depth " + std::to_string(depth) + " but the solver has no sequence");
  for (const auto& pr : solver)
    if (!census.count(pr))
      return fail(r, "(d0, d1) = (" + std::to_string(pr.first) + ", " + std::to_string(pr.second) +
                         ") solved but fails at depth " + std::to_string(depth));
  if (passing != census.size()) fail(r, "some (d0, d1) admits more than one prefix at depth");
  r.detail = std::to_string(visited) + " prefixes visited (" +
             (by_quotient ? "quotient membership" : "conjugates must be a^k or b^n") + "): " +
             std::to_string(census.size()) + " normalising pairs (d0, d1), solver agrees; |U| |W| = " +
             std::to_string(U.size() * W.size());
  r.elapsed_ms = sw.ms();
  return r;
}

CheckResult check_normalizer_parameters(const MggsGroup& g, unsigned depth) {
  Stopwatch sw;
  auto r = start("normalizer_parameters", g, depth);
  const auto U = compute_U(g);
  const auto W = compute_W(g.p(), compute_V(g, U).scalars);
  std::vector<Portrait> seen;
  for (const auto& d0 : U)
    for (const auto& w : W) {
      const std::string pair = "(d0, w) = (" + std::to_string(d0.value()) + ", " + std::to_string(w.value()) + ")";
      NormalizerSequence seq;
      try {
        seq = normalizer_sequence(g, d0, w);
      } catch (const Error& e) {
        return fail(r, pair + ": " + e.what());
      }
      const auto chk = normalizer_conjugation_check(seq, g, depth);
      if (!chk.passed) return fail(r, pair + ": " + chk.witness);
      const Portrait x = seq.portrait(2);
      if (std::find(seen.begin(), seen.end(), x) != seen.end()) return fail(r, pair + ": repeats a depth-2 portrait");
      seen.push_back(x);
    }
  r.detail = std::to_string(seen.size()) + " pairs = |U| |W| = " + std::to_string(U.size()) + " * " +
             std::to_string(W.size()) + ", all pass the conjugation check at depth " + std::to_string(depth);
  r.elapsed_ms = sw.ms();
  return r;
}

}  // namespace mggs
