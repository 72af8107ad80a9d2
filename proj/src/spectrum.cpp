#include "anderson/spectrum.hpp"

#include <stdexcept>

#include "anderson/sampler.hpp"

namespace anderson {

namespace {

bool top_contains(const LocIdeal& top, const LocElem& x) {
  return membership(x, top).status == MembershipStatus::Member;
}

// Shape-level containment: extension-of-P sits inside (M + X R[X])_A iff
// P is contained in M, since content(f) <= P forces f(0) in M.
bool extension_inside_top(const LocIdeal& ext, const LocIdeal& top) {
  return ext.base_ideal().subset_of(top.base_ideal());
}

MaximalityWitness build_maximality_witness(const RingSpec& ring,
                                           const IdealOfR& m,
                                           const LocElem& x) {
  RingElem f0 = x.num().constant_term();
  // f0 is outside the maximal ideal M, so f0 is invertible mod M: some y
  // has y*f0 - 1 in M.
  for (long long yi = 0; yi < ring.cardinality(); ++yi) {
    RingElem y = RingElem::at_index(ring, yi);
    RingElem residue = RingElem::one(ring) - y * f0;
    if (m.contains(residue)) {
      bool ok = (y * f0 + residue).is_one();
      return MaximalityWitness{x, f0, y, residue, ok};
    }
  }
  throw std::logic_error("no unit combination found over a maximal ideal");
}

}  // namespace

SpectrumReport maximal_spectrum(const RingSpec& ring, int samples,
                                std::uint64_t seed, long long cap) {
  require_within_cap(ring, cap);
  auto maxes = max_ideals(ring, cap);
  auto mins = min_primes(ring, cap);

  std::vector<LocIdeal> extensions;
  std::vector<LocIdeal> tops;
  for (const auto& p : mins) extensions.push_back(LocIdeal::extension_of(p));
  for (const auto& m : maxes) tops.push_back(LocIdeal::i_plus_x(m));

  // |Max(R[X]_A)| = |Max(R)| and each minimal prime extends; the report
  // carries one entry per base ideal by construction.
  SpectrumReport report{ring,
                        maxes,
                        mins,
                        std::move(extensions),
                        std::move(tops),
                        {},
                        {},
                        {},
                        true,
                        true,
                        true,
                        1};

  LocElem one = LocElem::embed(Poly::constant(RingElem::one(ring)),
                               MultSetKind::ConstantTermOne);
  for (const auto& top : report.tops) {
    report.tops_proper.push_back(!top_contains(top, one));
  }

  Sampler sampler(seed);
  for (std::size_t t = 0; t < report.tops.size(); ++t) {
    const IdealOfR& m = report.base_max_ideals[t];
    std::vector<MaximalityWitness> witnesses;
    int built = 0;
    while (built < samples) {
      Poly num = sampler.poly(ring, 3);
      if (m.contains(num.constant_term())) continue;  // x must avoid the top
      LocElem x = LocElem::fraction(num, sampler.poly_in_a(ring, 3),
                                    MultSetKind::ConstantTermOne);
      witnesses.push_back(build_maximality_witness(ring, m, x));
      ++built;
    }
    report.top_maximality.push_back(std::move(witnesses));
  }

  LocElem x_elem = LocElem::embed(Poly::variable(ring),
                                  MultSetKind::ConstantTermOne);
  for (std::size_t b = 0; b < report.extensions.size(); ++b) {
    for (std::size_t t = 0; t < report.tops.size(); ++t) {
      if (!extension_inside_top(report.extensions[b], report.tops[t])) continue;
      ChainVerification chain{
          b, t,
          true,
          top_contains(report.tops[t], x_elem),
          membership(x_elem, report.extensions[b]).status ==
              MembershipStatus::Member,
      };
      report.chains.push_back(chain);
    }
  }

  // Distinct maximal (resp. minimal prime) base ideals are incomparable,
  // and the exact rules transport that to the localized layer.
  for (std::size_t i = 0; i < report.tops.size(); ++i) {
    for (std::size_t j = 0; j < report.tops.size(); ++j) {
      if (i == j) continue;
      if (report.base_max_ideals[i].subset_of(report.base_max_ideals[j])) {
        report.tops_pairwise_incomparable = false;
      }
    }
  }
  for (std::size_t i = 0; i < report.extensions.size(); ++i) {
    for (std::size_t j = 0; j < report.extensions.size(); ++j) {
      if (i == j) continue;
      if (report.base_min_primes[i].subset_of(report.base_min_primes[j])) {
        report.bottoms_pairwise_incomparable = false;
      }
    }
  }

  report.dimension_in_scope = all_primes_maximal(ring, cap);
  report.krull_dimension = 1;
  return report;
}

RingElem QuotientMap::project(const RingElem& x) const {
  return RingElem(field, {x.coord(component) % prime});
}

RingElem QuotientMap::eval(const LocElem& x) const {
  if (x.kind() != MultSetKind::ConstantTermOne &&
      x.kind() != MultSetKind::UnitConstantTerm) {
    throw std::domain_error("quotient evaluation needs a unit constant term");
  }
  RingElem den0 = project(x.den().constant_term());
  return project(x.num().constant_term()) * inverse(den0);
}

std::pair<QuotientMap, QuotientVerification> quotient_by_top(
    const LocIdeal& top, int samples, std::uint64_t seed, long long cap) {
  if (top.shape() != LocIdeal::Shape::IPlusX) {
    throw std::invalid_argument("quotient defined for I-plus-X tops only");
  }
  const RingSpec& ring = top.ring();
  const IdealOfR& m = top.base_ideal();

  // Identify which local factor M constrains; R/M is Z_p for its prime.
  std::optional<QuotientMap> map;
  for (const auto& factor : local_factors(ring, cap)) {
    IdealOfR candidate = factor.maximal_ideal_of(ring);
    if (candidate == m) {
      map = QuotientMap{RingSpec({factor.prime}), factor.component,
                        factor.prime, m};
      break;
    }
  }
  if (!map) throw std::invalid_argument("top is not over a maximal ideal");

  QuotientVerification check;
  Sampler sampler(seed);
  auto sample = [&]() {
    Poly den = sampler.poly(ring, 2);
    while (!is_unit(den.constant_term())) den = sampler.poly(ring, 2);
    return LocElem::fraction(sampler.poly(ring, 2), den,
                             MultSetKind::UnitConstantTerm);
  };
  for (int s = 0; s < samples; ++s) {
    LocElem a = sample();
    LocElem b = sample();
    ++check.samples;
    if (map->eval(loc_add(a, b)) != map->eval(a) + map->eval(b)) {
      check.additive_ok = false;
    }
    if (map->eval(loc_mul(a, b)) != map->eval(a) * map->eval(b)) {
      check.multiplicative_ok = false;
    }
    // Kernel agrees with the exact membership rule. eval(a) = 0 iff the
    // numerator constant term lies in M.
    LocElem a_kind_a = LocElem::fraction(
        inverse(a.den().constant_term()) * a.num(),
        inverse(a.den().constant_term()) * a.den(),
        MultSetKind::ConstantTermOne);
    bool in_kernel = map->eval(a).is_zero();
    bool in_top = membership(a_kind_a, top).status == MembershipStatus::Member;
    if (in_kernel != in_top) check.kernel_ok = false;
  }
  // Constants alone hit every residue.
  for (long long v = 0; v < map->prime; ++v) {
    bool hit = false;
    for (long long r = 0; r < ring.cardinality() && !hit; ++r) {
      if (map->project(RingElem::at_index(ring, r)).coord(0) == v) hit = true;
    }
    if (!hit) check.surjective_ok = false;
  }
  return {*map, check};
}

}  // namespace anderson
