#include "anderson/loc_ideal.hpp"

#include <stdexcept>

#include "anderson/linalg.hpp"
#include "anderson/sampler.hpp"

namespace anderson {

LocIdeal::LocIdeal(Shape shape, RingSpec ring, std::optional<IdealOfR> base,
                   std::vector<Poly> gens, MembershipPolicy policy)
    : shape_(shape),
      ring_(std::move(ring)),
      base_(std::move(base)),
      gens_(std::move(gens)),
      policy_(policy) {}

LocIdeal LocIdeal::extension_of(IdealOfR base) {
  RingSpec ring = base.ring();
  std::vector<Poly> gens;
  for (const auto& g : base.generators()) gens.push_back(Poly::constant(g));
  return LocIdeal(Shape::ExtensionOfR, std::move(ring), std::move(base),
                  std::move(gens), MembershipPolicy{});
}

LocIdeal LocIdeal::i_plus_x(IdealOfR base) {
  RingSpec ring = base.ring();
  std::vector<Poly> gens;
  for (const auto& g : base.generators()) gens.push_back(Poly::constant(g));
  gens.push_back(Poly::variable(ring));
  return LocIdeal(Shape::IPlusX, std::move(ring), std::move(base),
                  std::move(gens), MembershipPolicy{});
}

LocIdeal LocIdeal::general(const RingSpec& ring, std::vector<Poly> gens,
                           MembershipPolicy policy) {
  for (const auto& g : gens) {
    if (g.ring() != ring) throw RingMismatchError();
  }
  return LocIdeal(Shape::General, ring, std::nullopt, std::move(gens), policy);
}

const IdealOfR& LocIdeal::base_ideal() const {
  if (!base_) throw std::logic_error("General-shape ideal has no base ideal");
  return *base_;
}

namespace {

void require_kind_a(const LocElem& x) {
  if (x.kind() != MultSetKind::ConstantTermOne) {
    throw std::domain_error("membership implemented for kind A only");
  }
}

// Expresses r as a ring-linear combination of the generators; exact.
std::optional<std::vector<RingElem>> combination_in_r(
    const RingElem& r, const std::vector<RingElem>& gens) {
  if (gens.empty()) {
    if (r.is_zero()) return std::vector<RingElem>{};
    return std::nullopt;
  }
  std::vector<std::vector<RingElem>> a{gens};
  return solve_linear(r.ring(), a, {r});
}

// Member witness for the extension rule: every coefficient of f lies in
// I, so f = sum I-generators * cofactors with the original denominator.
MembershipResult extension_member(const LocElem& x, const LocIdeal& j) {
  const auto& base_gens = j.base_ideal().generators();
  std::vector<std::vector<RingElem>> cof_coeffs(
      base_gens.size(), std::vector<RingElem>());
  int deg = x.num().degree() ? *x.num().degree() : -1;
  for (int d = 0; d <= deg; ++d) {
    auto combo = combination_in_r(x.num().coeff(d), base_gens);
    if (!combo) throw std::logic_error("content containment without witness");
    for (std::size_t i = 0; i < base_gens.size(); ++i) {
      cof_coeffs[i].push_back((*combo)[i]);
    }
  }
  std::vector<Poly> cofactors;
  for (auto& coeffs : cof_coeffs) {
    cofactors.push_back(Poly::from_coeffs(x.ring(), std::move(coeffs)));
  }
  MembershipWitness witness{std::move(cofactors), x.den()};
  return MembershipResult{MembershipStatus::Member, std::move(witness),
                          std::nullopt, "content-in-ideal"};
}

// Member witness for the I-plus-X rule: f = f(0) + X * (rest), with f(0)
// written in the I-generators.
MembershipResult i_plus_x_member(const LocElem& x, const LocIdeal& j) {
  const auto& base_gens = j.base_ideal().generators();
  auto combo = combination_in_r(x.num().constant_term(), base_gens);
  if (!combo) throw std::logic_error("constant term containment without witness");
  std::vector<Poly> cofactors;
  for (const auto& c : *combo) {
    cofactors.push_back(Poly::constant(c));
  }
  Poly rest = x.num() - Poly::constant(x.num().constant_term());
  cofactors.push_back(rest.is_zero() ? Poly::zero(x.ring())
                                     : rest.shift_down(1));
  MembershipWitness witness{std::move(cofactors), x.den()};
  return MembershipResult{MembershipStatus::Member, std::move(witness),
                          std::nullopt, "constant-term-in-ideal"};
}

// One linear solve for: f * h = sum gens[i] * q_i with h = 1 + X*h',
// deg(h) <= den_deg, deg(q_i) <= cof_deg. Unknowns are the coefficients
// of h' and of every q_i.
std::optional<MembershipWitness> general_search(const Poly& f,
                                                const std::vector<Poly>& gens,
                                                const Poly& outer_den,
                                                int cof_deg, int den_deg) {
  const RingSpec& ring = f.ring();
  int f_deg = f.degree() ? *f.degree() : 0;
  int max_gen_deg = 0;
  for (const auto& g : gens) {
    if (g.degree() && *g.degree() > max_gen_deg) max_gen_deg = *g.degree();
  }
  int rows_deg = std::max(f_deg + den_deg, max_gen_deg + cof_deg);
  const std::size_t h_unknowns = den_deg;
  const std::size_t q_unknowns = gens.size() * (cof_deg + 1);
  std::vector<std::vector<RingElem>> a(
      rows_deg + 1,
      std::vector<RingElem>(h_unknowns + q_unknowns, RingElem::zero(ring)));
  std::vector<RingElem> b;
  // f * (1 + X h') - sum gens q = 0, so rows carry -f on the rhs and
  // columns f*X^{1+j} for h', -gens*X^j for q.
  for (int r = 0; r <= rows_deg; ++r) b.push_back(-f.coeff(r));
  for (std::size_t j = 0; j < h_unknowns; ++j) {
    for (int r = 0; r <= rows_deg; ++r) {
      int shift = r - static_cast<int>(j) - 1;
      if (shift >= 0) a[r][j] = f.coeff(shift);
    }
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (int jj = 0; jj <= cof_deg; ++jj) {
      std::size_t col = h_unknowns + i * (cof_deg + 1) + jj;
      for (int r = jj; r <= rows_deg; ++r) {
        a[r][col] = -gens[i].coeff(r - jj);
      }
    }
  }
  auto solution = solve_linear(ring, a, b);
  if (!solution) return std::nullopt;

  std::vector<RingElem> h_coeffs{RingElem::one(ring)};
  for (std::size_t j = 0; j < h_unknowns; ++j) h_coeffs.push_back((*solution)[j]);
  Poly h = Poly::from_coeffs(ring, std::move(h_coeffs));
  std::vector<Poly> cofactors;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<RingElem> coeffs(
        solution->begin() + h_unknowns + i * (cof_deg + 1),
        solution->begin() + h_unknowns + (i + 1) * (cof_deg + 1));
    cofactors.push_back(Poly::from_coeffs(ring, std::move(coeffs)));
  }
  return MembershipWitness{std::move(cofactors), h * outer_den};
}

}  // namespace

MembershipResult membership(const LocElem& x, const LocIdeal& j) {
  require_kind_a(x);
  if (x.ring() != j.ring()) throw RingMismatchError();

  switch (j.shape()) {
    case LocIdeal::Shape::ExtensionOfR: {
      if (content(x.num()).subset_of(j.base_ideal())) {
        auto result = extension_member(x, j);
        if (!membership_witness_valid(x, j, *result.witness)) {
          throw std::logic_error("extension witness failed to recombine");
        }
        return result;
      }
      return MembershipResult{MembershipStatus::NotMember, std::nullopt,
                              std::nullopt, "content-not-in-ideal"};
    }
    case LocIdeal::Shape::IPlusX: {
      if (j.base_ideal().contains(x.num().constant_term())) {
        auto result = i_plus_x_member(x, j);
        if (!membership_witness_valid(x, j, *result.witness)) {
          throw std::logic_error("i-plus-x witness failed to recombine");
        }
        return result;
      }
      return MembershipResult{MembershipStatus::NotMember, std::nullopt,
                              std::nullopt, "constant-term-not-in-ideal"};
    }
    case LocIdeal::Shape::General: {
      // g is a unit of the localization, so x = f/g lies in J iff f does.
      // An exclusion cut refutes membership at every degree, so it runs
      // before the bounded search and turns its verdict into NotMember.
      if (auto cut = exact_exclusion(x.num(), j.generator_polys())) {
        return MembershipResult{MembershipStatus::NotMember, std::nullopt,
                                std::nullopt, *cut};
      }
      MembershipPolicy policy = j.policy();
      auto witness =
          general_search(x.num(), j.generator_polys(), x.den(),
                         policy.cofactor_degree, policy.denominator_degree);
      if (witness) {
        if (!membership_witness_valid(x, j, *witness)) {
          throw std::logic_error("general witness failed to recombine");
        }
        return MembershipResult{MembershipStatus::Member, std::move(witness),
                                std::nullopt, ""};
      }
      return MembershipResult{
          MembershipStatus::NotFoundUpTo, std::nullopt,
          std::max(policy.cofactor_degree, policy.denominator_degree), ""};
    }
  }
  throw std::logic_error("unreachable");
}

bool membership_witness_valid(const LocElem& x, const LocIdeal& j,
                              const MembershipWitness& witness) {
  const auto& gens = j.generator_polys();
  if (witness.cofactors.size() != gens.size()) return false;
  if (!in_multiplicative_set(witness.denominator,
                             MultSetKind::ConstantTermOne)) {
    return false;
  }
  Poly combo = Poly::zero(x.ring());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    combo = combo + gens[i] * witness.cofactors[i];
  }
  // combo/denominator = num/den, cross-multiplied.
  return combo * x.den() == x.num() * witness.denominator;
}

namespace {

int lowest_nonzero_index(const Poly& p) {
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (!p.coeffs()[i].is_zero()) return static_cast<int>(i);
  return -1;
}

}  // namespace

std::optional<std::string> exact_exclusion(const Poly& target,
                                           const std::vector<Poly>& gens,
                                           long long cap) {
  const RingSpec& ring = target.ring();
  if (target.is_zero()) return std::nullopt;
  std::vector<Poly> nonzero;
  for (const auto& g : gens)
    if (!g.is_zero()) nonzero.push_back(g);
  // target * h = 0 with h regular forces target = 0.
  if (nonzero.empty()) return "zero-ideal-cut";

  // If every generator is divisible by X^k, so is any member: with h in A,
  // the lowest k coefficients of target * h determine those of target one
  // by one. X is regular, so after the cut both sides can be divided by
  // X^k and the remaining cuts applied to the quotients.
  int strip = lowest_nonzero_index(nonzero.front());
  for (const auto& g : nonzero)
    strip = std::min(strip, lowest_nonzero_index(g));
  Poly reduced = target;
  if (strip > 0) {
    if (lowest_nonzero_index(target) < strip) return "low-order-cut";
    reduced = target.shift_down(strip);
    for (auto& g : nonzero) g = g.shift_down(strip);
  }

  IdealOfR coeff_sum = IdealOfR::zero_ideal(ring);
  std::vector<RingElem> const_terms;
  for (const auto& g : nonzero) {
    coeff_sum = ideal_sum(coeff_sum, content(g, cap));
    const_terms.push_back(g.constant_term());
  }
  if (!content(reduced, cap).subset_of(coeff_sum)) {
    return "content-cut";
  }
  if (!IdealOfR::from_generators(ring, const_terms, cap)
           .contains(reduced.constant_term())) {
    return "constant-term-cut";
  }
  return std::nullopt;
}

OracleCheckReport exact_rule_oracle_check(const RingSpec& ring, int trials,
                                          std::uint64_t seed, int brute_degree,
                                          long long cap) {
  require_within_cap(ring, cap);
  OracleCheckReport report;
  report.trials = trials;
  report.seed = seed;
  report.brute_degree = brute_degree;

  auto lattice = ideal_lattice(ring, cap);
  Sampler sampler(seed);

  // All h = 1 + X*(...) with deg(h) <= brute_degree, enumerated explicitly
  // so the brute-force side shares no code with the exact rules.
  std::vector<Poly> denominators;
  {
    const long long card = ring.cardinality();
    long long count = 1;
    for (int d = 0; d < brute_degree; ++d) count *= card;
    for (long long code = 0; code < count; ++code) {
      std::vector<RingElem> coeffs{RingElem::one(ring)};
      long long rest = code;
      for (int d = 0; d < brute_degree; ++d) {
        coeffs.push_back(RingElem::at_index(ring, rest % card));
        rest /= card;
      }
      denominators.push_back(Poly::from_coeffs(ring, std::move(coeffs)));
    }
  }

  for (int t = 0; t < trials; ++t) {
    Poly f = sampler.poly(ring, 3);
    Poly g = sampler.poly_in_a(ring, 3);
    const IdealOfR& ideal =
        lattice[sampler.below(static_cast<long long>(lattice.size()))].ideal;
    LocElem x =
        LocElem::fraction(f, g, MultSetKind::ConstantTermOne);

    bool rule_ext =
        membership(x, LocIdeal::extension_of(ideal)).status ==
        MembershipStatus::Member;
    bool rule_ipx =
        membership(x, LocIdeal::i_plus_x(ideal)).status ==
        MembershipStatus::Member;

    bool brute_ext = false;
    bool brute_ipx = false;
    for (const auto& h : denominators) {
      Poly fh = f * h;
      bool all_in = true;
      int deg = fh.degree() ? *fh.degree() : -1;
      for (int d = 0; d <= deg && all_in; ++d) {
        if (!ideal.contains(fh.coeff(d))) all_in = false;
      }
      if (all_in) brute_ext = true;
      if (ideal.contains(fh.constant_term())) brute_ipx = true;
      if (brute_ext && brute_ipx) break;
    }

    if (rule_ext != brute_ext) {
      ++report.disagreements;
      report.details.push_back(OracleDisagreement{
          "extension rule disagreement at trial " + std::to_string(t)});
    }
    if (rule_ipx != brute_ipx) {
      ++report.disagreements;
      report.details.push_back(OracleDisagreement{
          "i-plus-x rule disagreement at trial " + std::to_string(t)});
    }
  }
  return report;
}

}  // namespace anderson
