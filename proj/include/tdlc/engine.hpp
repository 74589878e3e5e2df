#pragma once

#include <tdlc/numbers.hpp>
#include <tdlc/report.hpp>
#include <tdlc/verdict.hpp>

#include <concepts>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tdlc {

// Contract every concrete group family implements. Beyond the six basic
// subgroup operations a backend supplies the exact certificates the generic
// algorithms rely on; anything it cannot certify it reports Undecided.
template <class B>
concept GroupBackend = requires(const typename B::Aut& a, const typename B::Sub& u,
                                const typename B::Elem& g, long n) {
  { B::index(u, u) } -> std::convertible_to<Natural>;
  { B::intersect(u, u) } -> std::convertible_to<typename B::Sub>;
  { B::member(g, u) } -> std::convertible_to<bool>;
  { B::equal(u, u) } -> std::convertible_to<bool>;
  { B::normalises(a, u) } -> std::convertible_to<bool>;
  { B::inverse(a) } -> std::convertible_to<typename B::Aut>;
  { B::compose(a, a) } -> std::convertible_to<typename B::Aut>;
  { B::meet_apply(a, u, u) } -> std::convertible_to<typename B::Sub>;
  { B::relative_index(a, u) } -> std::convertible_to<Natural>;
  { B::plus_part(a, u, n) } -> std::convertible_to<PlusPart<typename B::Sub>>;
  { B::tidy_above_certificate(a, u) } -> std::convertible_to<Verdict>;
  { B::tidy_below_direct(a, u) } -> std::convertible_to<Verdict>;
  { B::l_criterion(a, u) } -> std::convertible_to<LCriterionResult>;
  { B::is_compact_open(u) } -> std::convertible_to<bool>;
};

using IndexChain = std::vector<std::pair<long, Natural>>;

template <class Sub>
struct TidinessReport {
  Verdict tidy_above;
  Verdict tidy_below;
  Verdict tidy;
  Verdict minimising;
  Natural relative_index;
  std::string plus_part_form;
  std::string minus_part_form;
  bool parts_exact = false;
};

template <class Sub>
struct TidyingAboveResult {
  Sub result;        // deepest intersection reached
  bool certified = false;
  long depth = 0;
  IndexChain chain;  // (depth, relative index) along the descent
  Verdict certificate;
};

template <class Sub>
struct TidyingFullResult {
  Sub subgroup;
  bool certified = false;
  bool step2_used = false;
  IndexChain chain;
  TidinessReport<Sub> report;
  LCriterionResult l_after_step1;
};

template <class Sub>
struct EngineScaleResult {
  Natural scale;  // certified value; an upper bound when not certified
  Sub witness;
  IndexChain index_chain;
  bool certified = false;
  TidinessReport<Sub> report;
};

template <class B>
  requires GroupBackend<B>
struct Engine {
  using Sub = typename B::Sub;
  using Aut = typename B::Aut;
  using Elem = typename B::Elem;

  static Natural relative_index(const Aut& a, const Sub& U) {
    return B::relative_index(a, U);
  }

  static Aut power(const Aut& a, long n) {
    if (n < 1) throw BadInput("automorphism power needs n >= 1");
    Aut acc = a;
    for (long i = 1; i < n; ++i) acc = B::compose(a, acc);
    return acc;
  }

  // Step 1 of the tidying recipe: descend along U_{n+1} = U n a(U_n), i.e.
  // U_n equals the intersection of the first n+1 automorphism iterates of U.
  // The relative-index chain is non-increasing; the loop stops at the first
  // depth whose backend certificate confirms tidiness above. The window
  // parameter caps how long the chain may sit constant without a certificate
  // before the run is called off early.
  static TidyingAboveResult<Sub> tidying_above(const Aut& a, const Sub& U,
                                               const Budgets& budgets) {
    TidyingAboveResult<Sub> out{U, false, 0, {}, Verdict::make_undecided("not started")};
    Sub Un = U;
    long constant_run = 1;
    Natural prev = 0;
    for (long n = 0; n <= budgets.max_depth; ++n) {
      if (n > 0) {
        Sub next = B::meet_apply(a, Un, U);
        constant_run = 1;
        Natural r_next = B::relative_index(a, next);
        if (!out.chain.empty() && r_next == prev) constant_run++;
        Un = std::move(next);
      }
      Natural r = B::relative_index(a, Un);
      out.chain.emplace_back(n, r);
      prev = r;
      Verdict cert = B::tidy_above_certificate(a, Un);
      if (cert.yes()) {
        out.result = Un;
        out.certified = true;
        out.depth = n;
        out.certificate = std::move(cert);
        return out;
      }
    }
    out.result = Un;
    out.depth = budgets.max_depth;
    out.certificate = Verdict::make_undecided(
        "DepthExceeded: no tidy-above certificate within max_depth=" +
        std::to_string(budgets.max_depth));
    return out;
  }

  static Verdict is_tidy_above(const Aut& a, const Sub& U) {
    return B::tidy_above_certificate(a, U);
  }

  static std::pair<PlusPart<Sub>, PlusPart<Sub>> plus_minus_parts(const Aut& a,
                                                                  const Sub& U,
                                                                  long depth) {
    return {B::plus_part(a, U, depth), B::plus_part(B::inverse(a), U, depth)};
  }

  // Direct backend rule first; when it cannot decide, the tidy/L-criterion
  // equivalence converts a decided L-criterion into a tidy-below verdict.
  static Verdict tidy_below_verdict(const Aut& a, const Sub& U) {
    Verdict direct = B::tidy_below_direct(a, U);
    if (direct.decided()) return direct;
    Verdict above = B::tidy_above_certificate(a, U);
    if (!above.yes()) return direct;
    LCriterionResult l = B::l_criterion(a, U);
    if (l.verdict.yes())
      return Verdict::make_yes(l.verdict.certificate,
                               "tidy above with L_U <= U forces tidy, hence tidy below");
    if (l.verdict.no())
      return Verdict::make_no(l.verdict.certificate,
                              "tidy above with L_U not contained in U rules out tidy below");
    return direct;
  }

  static LCriterionResult l_criterion(const Aut& a, const Sub& U) {
    return B::l_criterion(a, U);
  }

  static TidinessReport<Sub> tidiness_report(const Aut& a, const Sub& U) {
    TidinessReport<Sub> rep;
    rep.tidy_above = B::tidy_above_certificate(a, U);
    rep.relative_index = B::relative_index(a, U);
    auto parts = plus_minus_parts(a, U, 4);
    rep.plus_part_form = parts.first.closed_form;
    rep.minus_part_form = parts.second.closed_form;
    rep.parts_exact = parts.first.exact && parts.second.exact;
    if (rep.tidy_above.no()) {
      rep.tidy_below = Verdict::make_undecided("not evaluated: tidy above already fails");
      rep.tidy = Verdict::make_no(rep.tidy_above.certificate, "not tidy above");
    } else if (rep.tidy_above.yes()) {
      rep.tidy_below = tidy_below_verdict(a, U);
      if (rep.tidy_below.yes())
        rep.tidy = Verdict::make_yes(Json{{"above", rep.tidy_above.certificate},
                                          {"below", rep.tidy_below.certificate}},
                                     "tidy above and tidy below");
      else if (rep.tidy_below.no())
        rep.tidy = Verdict::make_no(rep.tidy_below.certificate, "not tidy below");
      else
        rep.tidy = Verdict::make_undecided(rep.tidy_below.reason);
    } else {
      rep.tidy_below = Verdict::make_undecided(rep.tidy_above.reason);
      rep.tidy = Verdict::make_undecided(rep.tidy_above.reason);
    }
    // minimising iff tidy; the equivalence is cross-checked independently by
    // the oracle sweeps.
    rep.minimising = rep.tidy;
    if (rep.minimising.decided())
      rep.minimising.reason = "minimising iff tidy: " + rep.tidy.reason;
    return rep;
  }

  // Full recipe: Step 1 (tidying above), then the L-criterion; when L_U is
  // not contained in U, the backend enlarges by the closure of the L-group
  // and Step 1 reruns on the enlargement.
  static TidyingFullResult<Sub> tidying_full(const Aut& a, const Sub& U,
                                             const Budgets& budgets) {
    TidyingFullResult<Sub> out{U, false, false, {}, {}, {}};
    auto s1 = tidying_above(a, U, budgets);
    out.chain = s1.chain;
    out.subgroup = s1.result;
    if (!s1.certified) {
      out.report = tidiness_report(a, s1.result);
      out.l_after_step1 = LCriterionResult{
          Verdict::make_undecided("tidying above did not certify"), ""};
      return out;
    }
    out.l_after_step1 = B::l_criterion(a, s1.result);
    if (out.l_after_step1.verdict.yes()) {
      out.subgroup = s1.result;
    } else if (out.l_after_step1.verdict.no()) {
      auto enlarged = B::step2_enlarge(a, s1.result);
      if (!enlarged) {
        out.report = tidiness_report(a, s1.result);
        return out;
      }
      auto s2 = tidying_above(a, *enlarged, budgets);
      if (!s2.certified) {
        out.report = tidiness_report(a, s2.result);
        return out;
      }
      out.step2_used = true;
      out.subgroup = s2.result;
      long base = out.chain.empty() ? 0 : out.chain.back().first + 1;
      for (auto& [d, r] : s2.chain) out.chain.emplace_back(base + d, r);
    } else {
      out.report = tidiness_report(a, s1.result);
      return out;
    }
    out.report = tidiness_report(a, out.subgroup);
    out.certified = out.report.tidy.yes();
    return out;
  }

  static EngineScaleResult<Sub> scale(const Aut& a, const Sub& seed,
                                      const Budgets& budgets) {
    if (!B::is_compact_open(seed)) throw BadInput("scale seed must be compact open");
    auto full = tidying_full(a, seed, budgets);
    EngineScaleResult<Sub> out{0, full.subgroup, full.chain, full.certified, full.report};
    out.scale = B::relative_index(a, full.subgroup);
    if (out.index_chain.empty() || out.index_chain.back().second != out.scale)
      out.index_chain.emplace_back(
          out.index_chain.empty() ? 0 : out.index_chain.back().first + 1, out.scale);
    return out;
  }

  // Modular function via the index-ratio representation; indices are taken
  // against U, so only intersections with automorphism images are needed.
  static Rational modular(const Aut& inner_g, const Sub& U) {
    Natural num = B::index(U, B::meet_apply(B::inverse(inner_g), U, U));
    Natural den = B::index(U, B::meet_apply(inner_g, U, U));
    return Rational(num) / Rational(den);
  }

  static Verdict scale_modular_identity(const Aut& g, const Sub& seed, const Sub& second,
                                        const Budgets& budgets) {
    auto s_fwd = scale(g, seed, budgets);
    auto s_bwd = scale(B::inverse(g), seed, budgets);
    if (!s_fwd.certified || !s_bwd.certified)
      return Verdict::make_undecided("scale undecided for g or g^-1");
    Rational d1 = modular(g, seed);
    Rational d2 = modular(g, second);
    Json cert;
    cert["scale_g"] = to_dec(s_fwd.scale);
    cert["scale_g_inverse"] = to_dec(s_bwd.scale);
    cert["modular_first"] = to_dec(d1);
    cert["modular_second"] = to_dec(d2);
    if (d1 != d2)
      return Verdict::make_no(cert, "modular value depends on the subgroup (bug)");
    bool identity_holds = Rational(s_fwd.scale) / Rational(s_bwd.scale) == d1;
    // the witness tidy for g must be minimising for g^-1 as well
    bool same_minimising =
        B::relative_index(B::inverse(g), s_fwd.witness) == s_bwd.scale;
    cert["witness_minimises_inverse"] = same_minimising;
    if (identity_holds && same_minimising)
      return Verdict::make_yes(cert, "s(g)/s(g^-1) = Delta(g), witnesses shared");
    return Verdict::make_no(cert, "scale/modular identity violated");
  }

  static Verdict normaliser_witness(const Aut& g, const std::vector<Sub>& family,
                                    const Budgets& budgets) {
    if (family.empty()) throw BadInput("family must be nonempty");
    for (std::size_t i = 0; i < family.size(); ++i)
      if (B::normalises(g, family[i])) {
        Json cert;
        cert["family_index"] = i;
        return Verdict::make_yes(cert, "g normalises a member of the family");
      }
    auto s_fwd = scale(g, family.front(), budgets);
    if (s_fwd.certified && s_fwd.scale > 1) {
      Json cert;
      cert["scale_g"] = to_dec(s_fwd.scale);
      return Verdict::make_no(cert, "s(g) > 1, so g normalises no compact open subgroup");
    }
    auto s_bwd = scale(B::inverse(g), family.front(), budgets);
    if (s_bwd.certified && s_bwd.scale > 1) {
      Json cert;
      cert["scale_g_inverse"] = to_dec(s_bwd.scale);
      return Verdict::make_no(cert, "s(g^-1) > 1, so g normalises no compact open subgroup");
    }
    return Verdict::make_undecided("no normalised member found within the family");
  }

  // (UgU)^n = Ug^nU; exact set equality where the backend can enumerate it,
  // otherwise the index consequence |U : U n g^n U g^-n| = |U : U n gUg^-1|^n.
  static Verdict power_coset_check(const Elem& g, const Sub& U, long n) {
    if (n < 1) throw BadInput("power must be >= 1");
    Aut a = B::inner(g);
    Verdict above = B::tidy_above_certificate(a, U);
    if (!above.yes())
      return Verdict::make_undecided("precondition failed: U is not tidy above for g");
    if (auto exact = B::power_coset_exact(g, U, n)) {
      Json cert;
      cert["mode"] = "set-equality";
      cert["n"] = n;
      return *exact ? Verdict::make_yes(cert, "double-coset powers coincide")
                    : Verdict::make_no(cert, "double-coset power equality fails");
    }
    Natural step = B::index(U, B::meet_apply(a, U, U));
    Natural lhs = B::index(U, B::meet_apply(power(a, n), U, U));
    Natural rhs = pow_nat(step, static_cast<unsigned long>(n));
    Json cert;
    cert["mode"] = "index";
    cert["n"] = n;
    cert["index_power_n"] = to_dec(lhs);
    cert["index_step_to_n"] = to_dec(rhs);
    return lhs == rhs ? Verdict::make_yes(cert, "index consequence of the coset identity")
                      : Verdict::make_no(cert, "index consequence fails");
  }

  static Verdict periodic_witness(const Elem& g, const Sub& U, const Budgets& budgets) {
    Aut a = B::inner(g);
    Verdict above = B::tidy_above_certificate(a, U);
    if (!above.yes())
      return Verdict::make_undecided("precondition failed: U is not tidy above for g");
    for (long n = 1; n <= budgets.power_bound; ++n)
      if (B::element_power_member(g, n, U) && B::is_compact_open(U)) {
        Json cert;
        cert["power_in_U"] = n;
        return Verdict::make_yes(
            cert, "g^n lies in the compact subgroup U, so <g> has compact closure");
      }
    auto s_fwd = scale(a, U, budgets);
    if (s_fwd.certified && s_fwd.scale > 1) {
      Json cert;
      cert["scale_g"] = to_dec(s_fwd.scale);
      return Verdict::make_no(cert, "s(g) > 1 excludes periodicity");
    }
    auto s_bwd = scale(B::inverse(a), U, budgets);
    if (s_bwd.certified && s_bwd.scale > 1) {
      Json cert;
      cert["scale_g_inverse"] = to_dec(s_bwd.scale);
      return Verdict::make_no(cert, "s(g^-1) > 1 excludes periodicity");
    }
    return Verdict::make_undecided("no power fell into U within the bound");
  }

  static Verdict ustar_clopen_check(const Aut& a, const Sub& U) {
    return B::ustar_clopen(a, U);
  }
};

}  // namespace tdlc
