#pragma once

// Multi-GGS groups: construction from a defining space E, the constant /
// symmetric / regular trichotomy, and the B-coordinate system of the first
// level stabiliser.

#include <string>
#include <vector>

#include "mggs/fp.hpp"

namespace mggs {

enum class Classification { Constant, Symmetric, Regular };

std::string to_string(Classification c);

class MggsGroup {
 public:
  /// Validates p and the rows (length p-1, nonzero, linearly independent).
  MggsGroup(Residue p, std::vector<FpVec> rows);

  Residue p() const { return p_; }
  std::size_t rank() const { return e_.rows(); }
  const FpMat& matrix() const { return e_; }
  const FpVec& basis_row(std::size_t j) const { return e_.row(j); }
  /// Column e_i for i in 0..p-1 (indices mod p); e_0 is the zero column.
  const FpVec& column(std::int64_t i) const;
  Classification classification() const { return classification_; }

  /// n . E, the vector (n.e_1, ..., n.e_{p-1}).
  FpVec exponent_vector(const FpVec& n) const;
  /// The standard basis vector s_j of F_p^r (0-based j).
  FpVec standard(std::size_t j) const { return FpVec::unit_vector(p_, rank(), j); }
  FpVec zero_coordinates() const { return FpVec(p_, rank()); }

  /// The group defined by the full space F_p^{p-1} with the standard basis.
  static MggsGroup full_space(Residue p);

  bool operator==(const MggsGroup& o) const { return p_ == o.p_ && e_ == o.e_; }

 private:
  Residue p_;
  FpMat e_;
  std::vector<FpVec> columns_;
  Classification classification_;
};

MggsGroup construct(Residue p, std::vector<FpVec> rows);

/// s_k = sum_i n_i . e_{k-i}, indices mod p, e_0 = 0.
std::vector<Residue> forced_a_coords(const std::vector<FpVec>& n, const MggsGroup& g);

}  // namespace mggs
