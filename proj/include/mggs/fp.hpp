#pragma once

// Arithmetic over the prime field F_p and the linear algebra of the defining
// space E: row reduction, row-space comparison, and the index permutation
// action of the unit group F_p^x on vectors of length p-1.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mggs {

using Residue = std::uint32_t;

/// Largest supported modulus; products of two residues fit in 32 bits.
inline constexpr Residue kMaxPrime = 1u << 15;

bool is_prime(std::uint64_t n);

/// Throws DomainError unless p is an odd prime below kMaxPrime.
void require_odd_prime(Residue p);

Residue reduce(std::int64_t x, Residue p);
Residue add_mod(Residue a, Residue b, Residue p);
Residue sub_mod(Residue a, Residue b, Residue p);
Residue neg_mod(Residue a, Residue p);
Residue mul_mod(Residue a, Residue b, Residue p);
Residue pow_mod(Residue a, std::uint64_t e, Residue p);
/// Inverse of a nonzero residue; DomainError for zero.
Residue inv_mod(Residue a, Residue p);
/// Multiplicative order of a unit.
unsigned unit_order(Residue u, Residue p);

class FpScalar {
 public:
  FpScalar(std::int64_t value, Residue p);

  Residue value() const { return value_; }
  Residue modulus() const { return p_; }

  FpScalar operator+(FpScalar o) const;
  FpScalar operator-(FpScalar o) const;
  FpScalar operator*(FpScalar o) const;
  FpScalar operator-() const;

  bool operator==(const FpScalar&) const = default;

 private:
  Residue value_;
  Residue p_;
};

/// A nonzero element of F_p, i.e. an element of F_p^x.
class Unit {
 public:
  Unit(std::int64_t value, Residue p);

  Residue value() const { return value_; }
  Residue modulus() const { return p_; }
  Unit inverse() const { return Unit(inv_mod(value_, p_), p_); }
  Unit operator*(Unit o) const;

  bool operator==(const Unit&) const = default;
  auto operator<=>(const Unit&) const = default;

 private:
  Residue value_;
  Residue p_;
};

class FpVec {
 public:
  FpVec() = default;
  FpVec(Residue p, std::size_t length);
  FpVec(Residue p, std::span<const std::int64_t> entries);
  FpVec(Residue p, std::initializer_list<std::int64_t> entries);

  static FpVec unit_vector(Residue p, std::size_t length, std::size_t index);

  Residue modulus() const { return p_; }
  std::size_t size() const { return e_.size(); }
  bool empty() const { return e_.empty(); }
  bool is_zero() const;

  Residue operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, std::int64_t value);
  const std::vector<Residue>& entries() const { return e_; }

  FpVec operator+(const FpVec& o) const;
  FpVec operator-(const FpVec& o) const;
  FpVec operator-() const;
  FpVec scaled(Residue c) const;
  FpVec& operator+=(const FpVec& o);
  Residue dot(const FpVec& o) const;

  bool operator==(const FpVec&) const = default;
  auto operator<=>(const FpVec&) const = default;

  std::string to_string() const;

 private:
  void check_compatible(const FpVec& o) const;

  Residue p_ = 0;
  std::vector<Residue> e_;
};

class FpMat {
 public:
  FpMat() = default;
  FpMat(Residue p, std::size_t cols, std::vector<FpVec> rows);

  Residue modulus() const { return p_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const FpVec& row(std::size_t i) const { return rows_[i]; }
  const std::vector<FpVec>& row_vectors() const { return rows_; }
  Residue at(std::size_t i, std::size_t j) const { return rows_[i][j]; }

  /// Column j as a vector of length rows().
  FpVec column(std::size_t j) const;

  /// Reduced row-echelon form with zero rows removed.
  FpMat rref() const;
  std::size_t rank() const;
  /// True iff v lies in the row space.
  bool spans(const FpVec& v) const;
  /// Coordinates of v with respect to the rows, if v is in the row space.
  /// Requires linearly independent rows.
  std::optional<FpVec> coordinates(const FpVec& v) const;

  bool operator==(const FpMat&) const = default;

 private:
  Residue p_ = 0;
  std::size_t cols_ = 0;
  std::vector<FpVec> rows_;
};

/// Index permutation of a vector of length p-1 (positions 1..p-1):
/// result_i = v_{u*i mod p}.
FpVec perm_apply(const FpVec& v, Unit u);

/// Applies perm_apply row by row.
FpMat perm_apply(const FpMat& m, Unit u);

bool row_space_equal(const FpMat& a, const FpMat& b);

/// The common scalar lambda with perm_apply(row, u) = lambda * row for every
/// row of E, if one exists.
std::optional<FpScalar> scalar_action(const FpMat& e, Unit u);

/// Closure of gens under multiplication, sorted ascending by residue.
std::vector<Unit> unit_subgroup_generated(Residue p, std::span<const Unit> gens);

/// All units 1..p-1.
std::vector<Unit> all_units(Residue p);

}  // namespace mggs
