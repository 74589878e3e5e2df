#pragma once

#include <tdlc/errors.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tdlc {

// A finite group given by its multiplication table. Everything downstream
// (coordinate groups of the shift backend, finite quotients in oracle sweeps)
// is enumerated through this representation; there is no abstract-group
// dependency.
struct FiniteGroupTable {
  std::uint32_t order = 1;
  std::uint16_t identity = 0;
  std::vector<std::uint16_t> product;  // row-major, order x order
  std::vector<std::uint16_t> inverse;
  std::string label = "trivial";

  std::uint16_t mul(std::uint16_t i, std::uint16_t j) const {
    return product[static_cast<std::size_t>(i) * order + j];
  }
  std::uint16_t inv(std::uint16_t i) const { return inverse[i]; }
  std::uint16_t power(std::uint16_t x, long n) const;

  // Exhaustive check of the table axioms; intended for order <= 512.
  void validate() const;

  static FiniteGroupTable cyclic(unsigned n);
  static FiniteGroupTable symmetric(unsigned n);  // n <= 4
  static FiniteGroupTable from_product(std::string label, std::uint32_t order,
                                       std::vector<std::uint16_t> product);
};

using TablePtr = std::shared_ptr<const FiniteGroupTable>;

TablePtr preset_table(const std::string& name);  // "Z<n>" or "S<n>"
bool same_table(const TablePtr& a, const TablePtr& b);

// Subsets of a finite group, kept sorted and duplicate-free. Used both for
// subgroups (coordinate constraints) and for raw product sets.
using ElemSet = std::vector<std::uint16_t>;

namespace fset {

ElemSet trivial(const FiniteGroupTable& F);
ElemSet full(const FiniteGroupTable& F);
bool contains(const ElemSet& s, std::uint16_t x);
bool subset(const ElemSet& a, const ElemSet& b);
bool is_subgroup(const FiniteGroupTable& F, const ElemSet& s);
ElemSet closure(const FiniteGroupTable& F, const ElemSet& generators);
ElemSet intersect(const ElemSet& a, const ElemSet& b);
ElemSet product(const FiniteGroupTable& F, const ElemSet& a, const ElemSet& b);
ElemSet conjugate(const FiniteGroupTable& F, std::uint16_t g, const ElemSet& s);
std::string render(const ElemSet& s);

}  // namespace fset

}  // namespace tdlc
