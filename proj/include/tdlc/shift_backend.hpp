#pragma once

#include <tdlc/finite_group.hpp>
#include <tdlc/numbers.hpp>
#include <tdlc/report.hpp>
#include <tdlc/verdict.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tdlc::shift {

// Element of G = F^Z with finite support; only non-identity entries stored.
struct Element {
  TablePtr F;
  std::map<long, std::uint16_t> support;

  static Element identity(TablePtr F) { return Element{std::move(F), {}}; }
  std::uint16_t at(long k) const;
  Element mul(const Element& other) const;
  Element inverse() const;
  Element power(long n) const;
  Element shifted(long t) const;  // sigma^t(f), (sigma^t f)_k = f_{k+t}
  bool is_identity() const { return support.empty(); }
  bool operator==(const Element&) const;
  std::string describe() const;
};

// Coordinate-wise product subgroup of F^Z: one subgroup of F per coordinate,
// constant (the tails) outside a finite window. Houses both the compact open
// subgroups (full tails) and the closed tail patterns arising as plus/minus
// parts. Canonical form: columns equal to the neighbouring tail are absorbed.
struct Subgroup {
  TablePtr F;
  ElemSet left;   // value at every coordinate < lo
  ElemSet right;  // value at every coordinate >= lo + cols.size()
  long lo = 0;
  std::vector<ElemSet> cols;

  static Subgroup whole_group(TablePtr F);
  static Subgroup from_columns(TablePtr F, long lo, std::vector<ElemSet> cols,
                               ElemSet left, ElemSet right);

  const ElemSet& at(long k) const;
  long window_lo() const { return lo; }
  long window_hi() const { return lo + static_cast<long>(cols.size()) - 1; }
  bool is_open() const;          // <=> both tails are all of F
  bool is_whole_group() const;
  bool operator==(const Subgroup&) const;
  std::string describe() const;

  void normalize();
};

// alpha(x) = g * sigma^s(x) * g^{-1}; the semidirect normal form makes
// composition and inversion closed-form.
struct Automorphism {
  TablePtr F;
  long s = 0;
  Element g;

  static Automorphism shift_by(TablePtr F, long s);
  static Automorphism inner(Element g);
  bool is_identity() const { return s == 0 && g.is_identity(); }
  bool pure_shift() const { return g.is_identity(); }
  std::string describe() const;
};

Subgroup make_windowed(TablePtr F, const std::vector<std::pair<long, ElemSet>>& assignments);

// A*B = C tested coordinate-wise by finite set products in F.
bool product_set_equality(const Subgroup& A, const Subgroup& B, const Subgroup& C);

// (H g H)^n = H g^n H at every constrained coordinate.
bool double_coset_power(const Subgroup& U, const Element& g, long n);

Verdict dense_orbit_demo(unsigned width, const TablePtr& F, const Automorphism& alpha);

struct Backend {
  using Sub = Subgroup;
  using Aut = Automorphism;
  using Elem = Element;

  static const char* name() { return "shift"; }

  // contract operations
  static Natural index(const Sub& U, const Sub& V);
  static Sub intersect(const Sub& U, const Sub& V);
  static Sub apply(const Aut& a, const Sub& U);
  static bool member(const Elem& g, const Sub& U);
  static bool equal(const Sub& U, const Sub& V) { return U == V; }
  static bool normalises(const Aut& a, const Sub& U);

  static Aut inverse(const Aut& a);
  static Aut compose(const Aut& a, const Aut& b);  // a after b
  static Aut inner(const Elem& g) { return Automorphism::inner(g); }
  static bool is_compact_open(const Sub& U) { return U.is_open(); }
  static std::string describe(const Sub& U) { return U.describe(); }

  static Natural relative_index(const Aut& a, const Sub& U);
  static PlusPart<Sub> plus_part(const Aut& a, const Sub& U, long depth);
  static Verdict tidy_above_certificate(const Aut& a, const Sub& U);
  static Verdict tidy_below_direct(const Aut& a, const Sub& U);
  static LCriterionResult l_criterion(const Aut& a, const Sub& U);
  static std::optional<Sub> step2_enlarge(const Aut& a, const Sub& U);
  static Verdict ustar_clopen(const Aut& a, const Sub& U);
  static std::optional<bool> power_coset_exact(const Elem& g, const Sub& U, long n);
  static bool element_power_member(const Elem& g, long n, const Sub& U);
};

}  // namespace tdlc::shift
