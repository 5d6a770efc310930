#include "biqtor/diag_tor.hpp"

#include <sstream>
#include <stdexcept>

#include "biqtor/koszul.hpp"

namespace biqtor {

FieldTag FieldTag::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rational();
  if (text.rfind("fp:", 0) == 0) {
    const unsigned long p = std::stoul(text.substr(3));
    return prime(static_cast<std::uint32_t>(p));
  }
  throw std::invalid_argument("field must be 'q' or 'fp:<p>', got '" + text + "'");
}

std::vector<std::size_t> TorResult::nonzero_degrees() const {
  std::vector<std::size_t> out;
  for (const auto& d : degrees)
    if (!d.is_zero) out.push_back(d.degree);
  return out;
}

std::vector<LaurentPoly> diagonal_generators(const RootDatum& datum, const TorusSubgroup& s1,
                                             const TorusSubgroup& s2) {
  const std::size_t r1 = s1.rank(), joint = s1.rank() + s2.rank();
  auto res1 = fundamental_restrictions(datum, s1);
  auto res2 = fundamental_restrictions(datum, s2);
  std::vector<LaurentPoly> out;
  out.reserve(res1.size());
  for (std::size_t j = 0; j < res1.size(); ++j)
    out.push_back(res1[j].embed(joint, 0) - res2[j].embed(joint, r1));
  return out;
}

namespace {

template <class F>
TorResult run_tor(F field, const RootDatum& datum, const TorusSubgroup& s1,
                  const TorusSubgroup& s2, const FieldTag& tag, const TorOptions& opts) {
  AffineContext<F> ctx(s1.rank() + s2.rank(), std::move(field));
  ctx.order = opts.order;
  ctx.budget = opts.budget;
  ctx.certify = opts.certify;

  std::vector<Polynomial<F>> elems;
  for (const auto& z : diagonal_generators(datum, s1, s2))
    elems.push_back(laurent_to_affine(ctx, z));

  KoszulHomology<F> hom = koszul_homology(ctx, elems, datum.rank);

  TorResult out;
  out.field = tag;
  out.diagnostic_only = !tag.is_rational();
  out.stats = hom.stats;
  for (const auto& d : hom.degrees) {
    TorDegree td;
    td.degree = d.degree;
    td.is_zero = d.is_zero;
    td.finite_dim = d.finite_dim;
    if (d.presentation) {
      td.presentation_rank = d.presentation->free_rank;
      for (const auto& rel : d.presentation->relations) {
        std::ostringstream os;
        os << "(";
        for (std::size_t p = 0; p < rel.size(); ++p)
          os << (p ? ", " : "") << rel[p].to_string(ctx.field);
        os << ")";
        td.presentation_relations.push_back(os.str());
      }
    }
    out.degrees.push_back(std::move(td));
  }
  return out;
}

void check_inputs(const RootDatum& datum, const TorusSubgroup& s1, const TorusSubgroup& s2) {
  if (s1.ambient_rank != datum.rank || s2.ambient_rank != datum.rank)
    throw std::invalid_argument("tor pipeline: subgroup ambient rank differs from group rank");
  if (!s1.is_subtorus() || !s2.is_subtorus())
    throw std::invalid_argument("tor pipeline: inputs must be subtori of the maximal torus");
}

}  // namespace

TorResult tor_good_group(const RootDatum& datum, const TorusSubgroup& s1, const TorusSubgroup& s2,
                         const FieldTag& field, const TorOptions& opts) {
  check_inputs(datum, s1, s2);
  if (field.is_rational()) return run_tor(RationalField{}, datum, s1, s2, field, opts);
  return run_tor(PrimeField(field.p), datum, s1, s2, field, opts);
}

VerificationReport verify_theorem(const RootDatum& datum, const TorusSubgroup& s1,
                                  const TorusSubgroup& s2, const TorOptions& opts) {
  check_inputs(datum, s1, s2);
  VerificationReport report;
  report.classification = classify_pair(datum, s1, s2);
  report.bound = vanishing_bound(datum, s1, s2);
  try {
    report.tor = tor_good_group(datum, s1, s2, FieldTag::rational(), opts);
  } catch (const BudgetError& e) {
    report.inconclusive = e.what();
    report.theorem_consistent = true;  // vacuous: nothing observed
    return report;
  }
  report.observed_nonzero_degrees = report.tor.nonzero_degrees();

  const bool lax_or_strict = report.classification.verdict != BiquotientVerdict::Neither;
  report.theorem_consistent = true;
  if (lax_or_strict)
    for (std::size_t d : report.observed_nonzero_degrees)
      if (static_cast<long>(d) > report.bound) report.theorem_consistent = false;

  if (datum.spec.is_torus()) {
    TorProfile profile = toral_tor(datum.rank, s1, s2);
    report.exact = profile;
    bool agree = true;
    for (const auto& d : report.tor.degrees) {
      const bool exact_zero = profile.is_zero(d.degree);
      if (exact_zero != d.is_zero) agree = false;
      auto qd = profile.q_dim(d.degree);
      if (qd.has_value() != d.finite_dim.has_value()) agree = false;
      if (qd && d.finite_dim && *qd != *d.finite_dim) agree = false;
    }
    if (!agree)
      throw std::logic_error(
          "verify_theorem: exact toral profile disagrees with the Koszul computation");
    report.cross_checked = true;
  }
  return report;
}

namespace {

KGroupDescriptor from_tor_degree(const TorDegree& d) {
  KGroupDescriptor out;
  if (d.finite_dim) {
    out.q_dim = *d.finite_dim;
  } else {
    out.infinite_rank = true;
  }
  return out;
}

}  // namespace

KTheoryReport ktheory_biquotient(const RootDatum& datum, const TorusSubgroup& s1,
                                 const TorusSubgroup& s2, const TorOptions& opts) {
  check_inputs(datum, s1, s2);
  PairClassification cls = classify_pair(datum, s1, s2);
  if (cls.verdict != BiquotientVerdict::Strict)
    throw HypothesisError("strict biquotient condition",
                          "pair classifies as " + to_string(cls.verdict));
  if (s1.rank() + s2.rank() + 1 < datum.rank)
    throw HypothesisError("rank inequality",
                          "rank S1 + rank S2 < rank G - 1, the two-column assumption fails");

  KTheoryReport report;
  report.strict_condition_held = true;
  report.rank_inequality_held = true;
  report.maximal_rank = s1.rank() + s2.rank() == datum.rank;

  TorResult tor = tor_good_group(datum, s1, s2, FieldTag::rational(), opts);
  report.k0 = from_tor_degree(tor.degrees.at(0));
  report.k1 = datum.rank >= 1 ? from_tor_degree(tor.degrees.at(1)) : KGroupDescriptor{false, Int(0), {}, 0, Int(0)};

  if (datum.spec.is_torus()) {
    // exact integral invariants through the closed form
    TorProfile profile = toral_tor(datum.rank, s1, s2);
    auto fill = [&](KGroupDescriptor& g, std::size_t degree) {
      g.multiplicity = profile.multiplicity(degree);
      if (profile.has_finite_rank(degree)) {
        g.z_rank = profile.z_rank(degree);
      } else {
        g.infinite_rank = true;
        g.group_ring_of = profile.coefficient_group;
      }
    };
    fill(report.k0, 0);
    fill(report.k1, 1);
  }

  if (report.maximal_rank && !report.k1.is_zero())
    throw std::logic_error("ktheory_biquotient: K^1 must vanish in the maximal-rank case");
  return report;
}

}  // namespace biqtor
