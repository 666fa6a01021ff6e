#include "mggs/fp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mggs/errors.hpp"

namespace mggs {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_odd_prime(Residue p) {
  if (p < 3 || p >= kMaxPrime || !is_prime(p))
    throw DomainError("modulus " + std::to_string(p) + " is not an odd prime below 2^15");
}

Residue reduce(std::int64_t x, Residue p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  return static_cast<Residue>(r < 0 ? r + p : r);
}

Residue add_mod(Residue a, Residue b, Residue p) {
  Residue s = a + b;
  return s >= p ? s - p : s;
}

Residue sub_mod(Residue a, Residue b, Residue p) { return a >= b ? a - b : a + p - b; }

Residue neg_mod(Residue a, Residue p) { return a == 0 ? 0 : p - a; }

Residue mul_mod(Residue a, Residue b, Residue p) {
  return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p);
}

Residue pow_mod(Residue a, std::uint64_t e, Residue p) {
  Residue result = 1 % p;
  Residue base = a % p;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    e >>= 1;
  }
  return result;
}

Residue inv_mod(Residue a, Residue p) {
  a %= p;
  if (a == 0) throw DomainError("zero has no inverse mod " + std::to_string(p));
  // p is prime, so a^(p-2) is the inverse.
  return pow_mod(a, p - 2, p);
}

unsigned unit_order(Residue u, Residue p) {
  if (u % p == 0) throw DomainError("zero is not a unit");
  unsigned k = 1;
  Residue x = u % p;
  while (x != 1) {
    x = mul_mod(x, u, p);
    ++k;
  }
  return k;
}

FpScalar::FpScalar(std::int64_t value, Residue p) : value_(reduce(value, p)), p_(p) {}

FpScalar FpScalar::operator+(FpScalar o) const { return FpScalar(add_mod(value_, o.value_, p_), p_); }
FpScalar FpScalar::operator-(FpScalar o) const { return FpScalar(sub_mod(value_, o.value_, p_), p_); }
FpScalar FpScalar::operator*(FpScalar o) const { return FpScalar(mul_mod(value_, o.value_, p_), p_); }
FpScalar FpScalar::operator-() const { return FpScalar(neg_mod(value_, p_), p_); }

Unit::Unit(std::int64_t value, Residue p) : value_(reduce(value, p)), p_(p) {
  if (value_ == 0) throw DomainError("0 is not a unit mod " + std::to_string(p));
}

Unit Unit::operator*(Unit o) const {
  if (o.p_ != p_) throw DomainError("units with different moduli");
  return Unit(mul_mod(value_, o.value_, p_), p_);
}

FpVec::FpVec(Residue p, std::size_t length) : p_(p), e_(length, 0) {}

FpVec::FpVec(Residue p, std::span<const std::int64_t> entries) : p_(p) {
  e_.reserve(entries.size());
  for (auto x : entries) e_.push_back(reduce(x, p));
}

FpVec::FpVec(Residue p, std::initializer_list<std::int64_t> entries)
    : FpVec(p, std::span<const std::int64_t>(entries.begin(), entries.size())) {}

FpVec FpVec::unit_vector(Residue p, std::size_t length, std::size_t index) {
  FpVec v(p, length);
  v.e_.at(index) = 1;
  return v;
}

bool FpVec::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](Residue x) { return x == 0; });
}

void FpVec::set(std::size_t i, std::int64_t value) { e_.at(i) = reduce(value, p_); }

void FpVec::check_compatible(const FpVec& o) const {
  if (o.p_ != p_) throw DomainError("vectors over different fields");
  if (o.e_.size() != e_.size())
    throw DimensionError("vector lengths differ: " + std::to_string(e_.size()) + " vs " +
                         std::to_string(o.e_.size()));
}

FpVec FpVec::operator+(const FpVec& o) const {
  FpVec r = *this;
  r += o;
  return r;
}

FpVec& FpVec::operator+=(const FpVec& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] = add_mod(e_[i], o.e_[i], p_);
  return *this;
}

FpVec FpVec::operator-(const FpVec& o) const { return *this + (-o); }

FpVec FpVec::operator-() const {
  FpVec r = *this;
  for (auto& x : r.e_) x = neg_mod(x, p_);
  return r;
}

FpVec FpVec::scaled(Residue c) const {
  FpVec r = *this;
  for (auto& x : r.e_) x = mul_mod(x, c % p_, p_);
  return r;
}

Residue FpVec::dot(const FpVec& o) const {
  check_compatible(o);
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < e_.size(); ++i) acc = (acc + static_cast<std::uint64_t>(e_[i]) * o.e_[i]) % p_;
  return static_cast<Residue>(acc);
}

std::string FpVec::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < e_.size(); ++i) os << (i ? "," : "") << e_[i];
  os << ')';
  return os.str();
}

FpMat::FpMat(Residue p, std::size_t cols, std::vector<FpVec> rows) : p_(p), cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (r.modulus() != p) throw DomainError("matrix row over a different field");
    if (r.size() != cols)
      throw DimensionError("row of length " + std::to_string(r.size()) + " in a matrix with " +
                           std::to_string(cols) + " columns");
  }
}

FpVec FpMat::column(std::size_t j) const {
  FpVec c(p_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c.set(i, rows_[i][j]);
  return c;
}

FpMat FpMat::rref() const {
  std::vector<std::vector<Residue>> m;
  m.reserve(rows_.size());
  for (const auto& r : rows_) m.push_back(r.entries());

  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols_ && lead < m.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[lead], m[pivot]);
    const Residue inv = inv_mod(m[lead][col], p_);
    for (auto& x : m[lead]) x = mul_mod(x, inv, p_);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == lead || m[i][col] == 0) continue;
      const Residue f = m[i][col];
      for (std::size_t j = 0; j < cols_; ++j) m[i][j] = sub_mod(m[i][j], mul_mod(f, m[lead][j], p_), p_);
    }
    ++lead;
  }
  std::vector<FpVec> out;
  for (std::size_t i = 0; i < lead; ++i) {
    FpVec v(p_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) v.set(j, m[i][j]);
    out.push_back(std::move(v));
  }
  return FpMat(p_, cols_, std::move(out));
}

std::size_t FpMat::rank() const { return rref().rows(); }

bool FpMat::spans(const FpVec& v) const {
  if (v.size() != cols_) throw DimensionError("vector length does not match column count");
  std::vector<FpVec> rows = rows_;
  rows.push_back(v);
  return FpMat(p_, cols_, std::move(rows)).rank() == rank();
}

std::optional<FpVec> FpMat::coordinates(const FpVec& v) const {
  if (v.size() != cols_) throw DimensionError("vector length does not match column count");
  // Solve x * M = v by reducing the augmented transpose [M^T | v^T].
  const std::size_t r = rows_.size();
  std::vector<std::vector<Residue>> a(cols_, std::vector<Residue>(r + 1, 0));
  for (std::size_t j = 0; j < cols_; ++j) {
    for (std::size_t i = 0; i < r; ++i) a[j][i] = rows_[i][j];
    a[j][r] = v[j];
  }
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < r && lead < cols_; ++col) {
    std::size_t piv = lead;
    while (piv < cols_ && a[piv][col] == 0) ++piv;
    if (piv == cols_) continue;
    std::swap(a[lead], a[piv]);
    const Residue inv = inv_mod(a[lead][col], p_);
    for (auto& x : a[lead]) x = mul_mod(x, inv, p_);
    for (std::size_t i = 0; i < cols_; ++i) {
      if (i == lead || a[i][col] == 0) continue;
      const Residue f = a[i][col];
      for (std::size_t j = 0; j <= r; ++j) a[i][j] = sub_mod(a[i][j], mul_mod(f, a[lead][j], p_), p_);
    }
    pivot_col_of_row.push_back(col);
    ++lead;
  }
  for (std::size_t i = lead; i < cols_; ++i)
    if (a[i][r] != 0) return std::nullopt;
  FpVec x(p_, r);
  for (std::size_t i = 0; i < lead; ++i) x.set(pivot_col_of_row[i], a[i][r]);
  return x;
}

FpVec perm_apply(const FpVec& v, Unit u) {
  const Residue p = u.modulus();
  if (v.modulus() != p) throw DomainError("vector and unit over different fields");
  if (v.size() != p - 1)
    throw DimensionError("perm_apply needs a vector of length p-1 = " + std::to_string(p - 1));
  FpVec w(p, v.size());
  for (Residue i = 1; i < p; ++i) w.set(i - 1, v[mul_mod(u.value(), i, p) - 1]);
  return w;
}

FpMat perm_apply(const FpMat& m, Unit u) {
  std::vector<FpVec> rows;
  for (const auto& r : m.row_vectors()) rows.push_back(perm_apply(r, u));
  return FpMat(m.modulus(), m.cols(), std::move(rows));
}

bool row_space_equal(const FpMat& a, const FpMat& b) {
  if (a.modulus() != b.modulus()) throw DomainError("matrices over different fields");
  if (a.cols() != b.cols()) throw DimensionError("matrices with different column counts");
  return a.rref() == b.rref();
}

std::optional<FpScalar> scalar_action(const FpMat& e, Unit u) {
  const Residue p = e.modulus();
  std::optional<Residue> lambda;
  for (const auto& row : e.row_vectors()) {
    const FpVec image = perm_apply(row, u);
    std::size_t k = 0;
    while (k < row.size() && row[k] == 0) ++k;
    if (k == row.size()) continue;
    const Residue l = mul_mod(image[k], inv_mod(row[k], p), p);
    if (l == 0 || image != row.scaled(l)) return std::nullopt;
    if (lambda && *lambda != l) return std::nullopt;
    lambda = l;
  }
  if (!lambda) return std::nullopt;
  return FpScalar(*lambda, p);
}

std::vector<Unit> unit_subgroup_generated(Residue p, std::span<const Unit> gens) {
  std::set<Residue> seen{1};
  std::vector<Residue> frontier{1};
  while (!frontier.empty()) {
    std::vector<Residue> next;
    for (Residue x : frontier) {
      for (const Unit& g : gens) {
        if (g.modulus() != p) throw DomainError("generator over a different field");
        Residue y = mul_mod(x, g.value(), p);
        if (seen.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Unit> out;
  for (Residue x : seen) out.emplace_back(x, p);
  return out;
}

std::vector<Unit> all_units(Residue p) {
  std::vector<Unit> out;
  for (Residue x = 1; x < p; ++x) out.emplace_back(x, p);
  return out;
}

}  // namespace mggs
