#include "mggs/examples.hpp"

#include "mggs/errors.hpp"

namespace mggs {

namespace {

const FpVec& ex3_row() {
  static const FpVec row{13, {1, 2, 11, 3, 12, 10, 10, 12, 3, 11, 2, 1}};
  return row;
}

}  // namespace

MggsGroup example1() { return construct(5, {FpVec(5, {1, 2, 2, 1})}); }

MggsGroup example2(Residue p) {
  std::vector<std::int64_t> row;
  for (Residue i = 1; i < p; ++i) row.push_back(i);
  return construct(p, {FpVec(p, row)});
}

MggsGroup example3() {
  const FpVec& b = ex3_row();
  return construct(13, {b, perm_apply(b, Unit(3, 13)), perm_apply(b, Unit(9, 13))});
}

MggsGroup gupta_sidki(Residue p) {
  std::vector<std::int64_t> row(p - 1, 0);
  row[0] = 1;
  row[1] = p - 1;
  return construct(p, {FpVec(p, row)});
}

std::vector<NamedGroup> named_groups() {
  return {{"ex1", example1()},       {"ex2-5", example2(5)},    {"ex2-7", example2(7)},
          {"ex3", example3()},       {"gs3", gupta_sidki(3)},   {"gs5", gupta_sidki(5)},
          {"gs7", gupta_sidki(7)},   {"full3", MggsGroup::full_space(3)}, {"full5", MggsGroup::full_space(5)}};
}

MggsGroup named_group(const std::string& name) {
  for (auto& ng : named_groups())
    if (ng.name == name) return ng.group;
  throw DomainError("unknown group name '" + name + "'");
}

}  // namespace mggs
