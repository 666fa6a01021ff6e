#include "mggs/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mggs/errors.hpp"

namespace mggs {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_trivial(const Gen& s) {
  return std::visit(overloaded{[](const PowA& x) { return x.k == 0; },
                               [](const PowB& x) { return x.n.is_zero(); },
                               [](const PowC& x) { return x.k == 0; },
                               [](const PowKappaA& x) { return x.k == 0; }},
                    s);
}

/// Merges b into a if they are of the same kind; returns false otherwise.
bool try_merge(Gen& a, const Gen& b, Residue p) {
  if (a.index() != b.index()) return false;
  if (auto* x = std::get_if<PowA>(&a)) {
    x->k = add_mod(x->k, std::get<PowA>(b).k, p);
  } else if (auto* y = std::get_if<PowB>(&a)) {
    y->n += std::get<PowB>(b).n;
  } else if (auto* z = std::get_if<PowC>(&a)) {
    z->k += std::get<PowC>(b).k;
  } else {
    auto& ka = std::get<PowKappaA>(a);
    const auto& kb = std::get<PowKappaA>(b);
    if (ka.level != kb.level) return false;
    ka.k = add_mod(ka.k, kb.k, p);
  }
  return true;
}

Gen inverse_of(const Gen& s, Residue p) {
  return std::visit(overloaded{[p](const PowA& x) -> Gen { return PowA{neg_mod(x.k, p)}; },
                               [](const PowB& x) -> Gen { return PowB{-x.n}; },
                               [](const PowC& x) -> Gen { return PowC{-x.k}; },
                               [p](const PowKappaA& x) -> Gen { return PowKappaA{x.level, neg_mod(x.k, p)}; }},
                    s);
}

void check_modulus(const Gen& s, Residue p) {
  if (const auto* b = std::get_if<PowB>(&s)) {
    if (b->n.modulus() != p) throw DomainError("b-syllable over a different field than the word");
  } else if (const auto* k = std::get_if<PowKappaA>(&s)) {
    if (k->level == 0) throw DomainError("kappa_0(a) is a; use an a-syllable");
  }
}

}  // namespace

Word::Word(Residue p, std::vector<Gen> syllables) : p_(p), syl_(std::move(syllables)) {
  for (const auto& s : syl_) check_modulus(s, p_);
}

Word Word::a(Residue p, std::int64_t k) { return reduce(Word(p, {PowA{reduce(k, p)}})); }
Word Word::b(const FpVec& n) { return reduce(Word(n.modulus(), {PowB{n}})); }
Word Word::c(Residue p, std::int64_t k) { return reduce(Word(p, {PowC{k}})); }
Word Word::kappa_a(Residue p, unsigned level, std::int64_t k) {
  if (level == 0) return a(p, k);
  return reduce(Word(p, {PowKappaA{level, reduce(k, p)}}));
}

Word reduce(const Word& w) {
  Word out(w.p_);
  for (const auto& s : w.syl_) {
    check_modulus(s, w.p_);
    if (is_trivial(s)) continue;
    if (!out.syl_.empty() && try_merge(out.syl_.back(), s, w.p_)) {
      if (is_trivial(out.syl_.back())) out.syl_.pop_back();
      continue;
    }
    out.syl_.push_back(s);
  }
  return out;
}

Word Word::operator*(const Word& o) const {
  Word r = *this;
  r *= o;
  return r;
}

Word& Word::operator*=(const Word& o) {
  if (o.p_ != p_) throw DomainError("words over different fields");
  syl_.insert(syl_.end(), o.syl_.begin(), o.syl_.end());
  *this = reduce(*this);
  return *this;
}

Word Word::inverse() const {
  Word r(p_);
  for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) r.syl_.push_back(inverse_of(*it, p_));
  return reduce(r);
}

Word Word::pow(std::int64_t k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word r(p_);
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) r *= base;
  return r;
}

bool Word::over_ab() const {
  return std::all_of(syl_.begin(), syl_.end(),
                     [](const Gen& s) { return std::holds_alternative<PowA>(s) || std::holds_alternative<PowB>(s); });
}

Residue Word::a_exponent_sum() const {
  Residue t = 0;
  for (const auto& s : syl_)
    if (const auto* a = std::get_if<PowA>(&s)) t = add_mod(t, a->k, p_);
  return t;
}

std::string Word::to_string() const {
  if (syl_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : syl_) {
    if (!first) os << " * ";
    first = false;
    std::visit(overloaded{[&](const PowA& x) { os << "a" << (x.k == 1 ? "" : "^" + std::to_string(x.k)); },
                          [&](const PowB& x) {
                            os << "b[";
                            for (std::size_t i = 0; i < x.n.size(); ++i) os << (i ? "," : "") << x.n[i];
                            os << "]";
                          },
                          [&](const PowC& x) { os << "c" << (x.k == 1 ? "" : "^" + std::to_string(x.k)); },
                          [&](const PowKappaA& x) {
                            os << "k" << x.level << "(a)" << (x.k == 1 ? "" : "^" + std::to_string(x.k));
                          }},
               s);
  }
  return os.str();
}

Word commutator(const Word& x, const Word& y) { return x.inverse() * y.inverse() * x * y; }

Portrait evaluate(const Gen& s, const MggsGroup& g, unsigned depth) {
  const Residue p = g.p();
  return std::visit(
      overloaded{[&](const PowA& x) { return Portrait::rooted(AffineLabel::shift(x.k, p), p, depth); },
                 [&](const PowB& x) { return directed(g.exponent_vector(x.n), depth); },
                 [&](const PowC& x) {
                   if (depth == 0) return Portrait(p, 0);
                   const Word cw = commutator(Word::b(g.standard(0)), Word::a(p));
                   std::vector<Portrait> secs(p, Portrait(p, depth - 1));
                   secs[0] = evaluate(cw, g, depth - 1).pow(x.k);
                   return Portrait::from_sections(AffineLabel::identity(), secs);
                 },
                 [&](const PowKappaA& x) {
                   if (depth <= x.level) return Portrait(p, depth);
                   return kappa(x.level, Portrait::rooted(AffineLabel::shift(x.k, p), p, depth - x.level));
                 }},
      s);
}

Portrait evaluate(const Word& w, const MggsGroup& g, unsigned depth) {
  if (w.p() != g.p()) throw DomainError("word and group over different fields");
  Portrait r(g.p(), depth);
  for (const auto& s : w.syllables()) r = r * evaluate(s, g, depth);
  return r;
}

Abelianization abelianize(const Word& w, const MggsGroup& g) {
  Abelianization ab{0, g.zero_coordinates()};
  for (const auto& s : w.syllables()) {
    if (const auto* a = std::get_if<PowA>(&s)) {
      ab.a = add_mod(ab.a, a->k, g.p());
    } else if (const auto* b = std::get_if<PowB>(&s)) {
      if (b->n.size() != g.rank()) throw DimensionError("b-vector length differs from the rank");
      ab.b += b->n;
    } else {
      throw DomainError("abelianize is defined on words over a and b only: " + w.to_string());
    }
  }
  return ab;
}

std::size_t syllable_length(const Word& w) { return reduce(w).size(); }

std::vector<Word> sections_of_word(const Word& w, const MggsGroup& g) {
  const Residue p = g.p();
  if (w.a_exponent_sum() != 0)
    throw PreconditionError("word does not stabilise the first level: " + w.to_string());
  std::vector<Word> secs(p, Word(p));
  const Word c_section = commutator(Word::b(g.standard(0)), Word::a(p));
  Residue shift = 0;
  for (const auto& s : w.syllables()) {
    if (const auto* a = std::get_if<PowA>(&s)) {
      shift = add_mod(shift, a->k, p);
    } else if (const auto* b = std::get_if<PowB>(&s)) {
      for (Residue k = 0; k < p; ++k) {
        const Residue j = add_mod(k, shift, p);
        if (j == 0)
          secs[k] *= Word::b(b->n);
        else
          secs[k] *= Word::a(p, b->n.dot(g.column(j)));
      }
    } else if (const auto* c = std::get_if<PowC>(&s)) {
      secs[neg_mod(shift, p)] *= c_section.pow(c->k);
    } else {
      const auto& ka = std::get<PowKappaA>(s);
      for (Residue k = 0; k < p; ++k) secs[k] *= Word::kappa_a(p, ka.level - 1, ka.k);
    }
  }
  return secs;
}

namespace {

class WordParser {
 public:
  WordParser(std::string text, const MggsGroup& g) : g_(g) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  Word parse() {
    const Residue p = g_.p();
    if (s_.empty() || s_ == "1" || s_ == "id") return Word(p);
    Word w(p);
    while (true) {
      w *= factor();
      if (pos_ == s_.size()) break;
      expect('*');
    }
    return w;
  }

 private:
  Word factor() {
    const Residue p = g_.p();
    if (pos_ >= s_.size()) fail("expected a generator");
    Word base(p);
    const char ch = s_[pos_++];
    if (ch == 'a') {
      base = Word::a(p);
    } else if (ch == 'c') {
      base = Word::c(p);
    } else if (ch == 'b') {
      if (pos_ < s_.size() && s_[pos_] == '[') {
        ++pos_;
        std::vector<std::int64_t> entries{integer()};
        while (pos_ < s_.size() && s_[pos_] == ',') {
          ++pos_;
          entries.push_back(integer());
        }
        expect(']');
        if (entries.size() != g_.rank())
          fail("b-vector has " + std::to_string(entries.size()) + " entries, the rank is " +
               std::to_string(g_.rank()));
        base = Word::b(FpVec(p, entries));
      } else {
        if (g_.rank() != 1) fail("bare 'b' needs rank 1; write b[...]");
        base = Word::b(g_.standard(0));
      }
    } else if (ch == 'k') {
      const std::int64_t level = integer();
      if (level < 1) fail("kappa level must be at least 1");
      expect('(');
      expect('a');
      expect(')');
      base = Word::kappa_a(p, static_cast<unsigned>(level));
    } else if (ch == '(') {
      Word inner(p);
      while (true) {
        inner *= factor();
        if (pos_ < s_.size() && s_[pos_] == '*') {
          ++pos_;
          continue;
        }
        break;
      }
      expect(')');
      base = inner;
    } else {
      --pos_;
      fail(std::string("unexpected character '") + ch + "'");
    }
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      return base.pow(integer());
    }
    return base;
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) fail("expected an integer");
    if (pos_ - start > 12) fail("integer too long");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  void expect(char ch) {
    if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("word syntax error at position " + std::to_string(pos_) + ": " + msg);
  }

  const MggsGroup& g_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const std::string& text, const MggsGroup& g) { return WordParser(text, g).parse(); }

}  // namespace mggs
