#include "mggs/group.hpp"

#include "mggs/errors.hpp"

namespace mggs {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::Constant: return "constant";
    case Classification::Symmetric: return "symmetric";
    case Classification::Regular: return "regular";
  }
  return "?";
}

MggsGroup::MggsGroup(Residue p, std::vector<FpVec> rows) : p_(p) {
  require_odd_prime(p);
  if (rows.empty()) throw RankError("E needs at least one basis row");
  for (const auto& r : rows) {
    if (r.modulus() != p) throw DomainError("basis row over a different field");
    if (r.size() != p - 1)
      throw DimensionError("basis rows must have length p-1 = " + std::to_string(p - 1) + ", got " +
                           std::to_string(r.size()));
    if (r.is_zero()) throw RankError("zero basis row");
  }
  e_ = FpMat(p, p - 1, std::move(rows));
  if (e_.rank() != e_.rows())
    throw RankError("basis rows are linearly dependent (rank " + std::to_string(e_.rank()) + " < " +
                    std::to_string(e_.rows()) + ")");

  columns_.reserve(p);
  columns_.push_back(FpVec(p, e_.rows()));
  for (Residue i = 1; i < p; ++i) columns_.push_back(e_.column(i - 1));

  const FpVec ones(p, std::vector<std::int64_t>(p - 1, 1));
  const FpMat constant_space(p, p - 1, {ones});
  if (row_space_equal(e_, constant_space)) {
    classification_ = Classification::Constant;
  } else if (e_.rows() == 1) {
    const FpVec& b = e_.row(0);
    bool symmetric = true;
    for (Residue i = 1; i < p; ++i) symmetric = symmetric && b[i - 1] == b[p - i - 1];
    classification_ = symmetric ? Classification::Symmetric : Classification::Regular;
  } else {
    classification_ = Classification::Regular;
  }
}

const FpVec& MggsGroup::column(std::int64_t i) const { return columns_[reduce(i, p_)]; }

FpVec MggsGroup::exponent_vector(const FpVec& n) const {
  if (n.size() != rank()) throw DimensionError("coordinate vector must have length r");
  FpVec out(p_, p_ - 1);
  for (Residue i = 1; i < p_; ++i) out.set(i - 1, n.dot(columns_[i]));
  return out;
}

MggsGroup MggsGroup::full_space(Residue p) {
  std::vector<FpVec> rows;
  for (Residue i = 0; i + 1 < p; ++i) rows.push_back(FpVec::unit_vector(p, p - 1, i));
  return MggsGroup(p, std::move(rows));
}

MggsGroup construct(Residue p, std::vector<FpVec> rows) { return MggsGroup(p, std::move(rows)); }

std::vector<Residue> forced_a_coords(const std::vector<FpVec>& n, const MggsGroup& g) {
  const Residue p = g.p();
  if (n.size() != p) throw DimensionError("forced A-coordinates need p B-coordinate vectors");
  std::vector<Residue> s(p, 0);
  for (Residue k = 0; k < p; ++k) {
    Residue acc = 0;
    for (Residue i = 0; i < p; ++i)
      acc = add_mod(acc, n[i].dot(g.column(static_cast<std::int64_t>(k) - i)), p);
    s[k] = acc;
  }
  return s;
}

}  // namespace mggs
