#include "anderson/poly.hpp"

#include <stdexcept>

#include "anderson/linalg.hpp"

namespace anderson {

Poly::Poly(RingSpec ring, std::vector<RingElem> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::zero(const RingSpec& ring) { return Poly(ring, {}); }

Poly Poly::constant(const RingElem& c) {
  return Poly(c.ring(), {c});
}

Poly Poly::variable(const RingSpec& ring) {
  return Poly(ring, {RingElem::zero(ring), RingElem::one(ring)});
}

Poly Poly::monomial(const RingSpec& ring, const RingElem& c, int degree) {
  if (c.ring() != ring) throw RingMismatchError();
  std::vector<RingElem> coeffs(degree + 1, RingElem::zero(ring));
  coeffs[degree] = c;
  return Poly(ring, std::move(coeffs));
}

Poly Poly::from_coeffs(const RingSpec& ring, std::vector<RingElem> coeffs) {
  for (const auto& c : coeffs) {
    if (c.ring() != ring) throw RingMismatchError();
  }
  return Poly(ring, std::move(coeffs));
}

std::optional<int> Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

RingElem Poly::coeff(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return RingElem::zero(ring_);
}

RingElem Poly::leading_coeff() const {
  if (coeffs_.empty()) return RingElem::zero(ring_);
  return coeffs_.back();
}

RingElem Poly::eval(const RingElem& x) const {
  if (x.ring() != ring_) throw RingMismatchError();
  RingElem acc = RingElem::zero(ring_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Poly Poly::shift_down(int k) const {
  for (int i = 0; i < k && i < static_cast<int>(coeffs_.size()); ++i) {
    if (!coeffs_[i].is_zero()) {
      throw std::invalid_argument("low coefficients do not vanish");
    }
  }
  if (static_cast<int>(coeffs_.size()) <= k) return zero(ring_);
  return Poly(ring_, std::vector<RingElem>(coeffs_.begin() + k, coeffs_.end()));
}

bool Poly::operator==(const Poly& other) const {
  if (ring_ != other.ring_) throw RingMismatchError();
  return coeffs_ == other.coeffs_;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.ring_ != b.ring_) throw RingMismatchError();
  std::vector<RingElem> coeffs;
  std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  coeffs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) coeffs.push_back(a.coeff(i) + b.coeff(i));
  return Poly(a.ring_, std::move(coeffs));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.ring_ != b.ring_) throw RingMismatchError();
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.ring_);
  std::vector<RingElem> coeffs(a.coeffs_.size() + b.coeffs_.size() - 1,
                               RingElem::zero(a.ring_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      coeffs[i + j] = coeffs[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Poly(a.ring_, std::move(coeffs));
}

Poly operator*(const RingElem& c, const Poly& p) {
  return Poly::constant(c) * p;
}

Poly Poly::operator-() const {
  std::vector<RingElem> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) coeffs.push_back(-c);
  return Poly(ring_, std::move(coeffs));
}

IdealOfR content(const Poly& p, long long cap) {
  return IdealOfR::from_generators(p.ring(), p.coeffs(), cap);
}

bool in_multiplicative_set(const Poly& p, MultSetKind kind) {
  if (p.is_zero()) return false;
  switch (kind) {
    case MultSetKind::ConstantTermOne:
      return p.constant_term().is_one();
    case MultSetKind::UnitConstantTerm:
      return is_unit(p.constant_term());
    case MultSetKind::UnitContent:
      return content(p).is_unit_ideal();
    case MultSetKind::Monic:
      return p.leading_coeff().is_one();
    case MultSetKind::UnitLowestCoeff: {
      for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (!p.coeff(i).is_zero()) return p.coeff(i).is_one();
      }
      return false;
    }
  }
  return false;
}

BoundedMembershipResult membership_bounded(const Poly& target,
                                           const std::vector<Poly>& gens,
                                           int cofactor_degree) {
  const RingSpec& ring = target.ring();
  for (const auto& g : gens) {
    if (g.ring() != ring) throw RingMismatchError();
  }
  if (cofactor_degree < 0) throw std::invalid_argument("negative degree bound");

  // Rows match coefficients of X^0 .. X^D where D bounds every product.
  int max_gen_deg = -1;
  for (const auto& g : gens) {
    if (g.degree() && *g.degree() > max_gen_deg) max_gen_deg = *g.degree();
  }
  int target_deg = target.degree() ? *target.degree() : -1;
  int rows_deg = std::max(target_deg, max_gen_deg + cofactor_degree);
  if (rows_deg < 0) rows_deg = 0;

  const std::size_t unknowns = gens.size() * (cofactor_degree + 1);
  std::vector<std::vector<RingElem>> a(
      rows_deg + 1, std::vector<RingElem>(unknowns, RingElem::zero(ring)));
  std::vector<RingElem> b;
  b.reserve(rows_deg + 1);
  for (int r = 0; r <= rows_deg; ++r) b.push_back(target.coeff(r));
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (int j = 0; j <= cofactor_degree; ++j) {
      std::size_t col = i * (cofactor_degree + 1) + j;
      for (int r = j; r <= rows_deg; ++r) {
        a[r][col] = gens[i].coeff(r - j);
      }
    }
  }

  auto solution = solve_linear(ring, a, b);
  if (!solution) {
    return BoundedMembershipResult{false, cofactor_degree, std::nullopt};
  }
  CombinationWitness witness;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<RingElem> coeffs(
        solution->begin() + i * (cofactor_degree + 1),
        solution->begin() + (i + 1) * (cofactor_degree + 1));
    witness.cofactors.push_back(Poly::from_coeffs(ring, std::move(coeffs)));
  }
  if (!witness_recombines(target, gens, witness)) {
    throw std::logic_error("membership witness failed to recombine");
  }
  return BoundedMembershipResult{true, cofactor_degree, std::move(witness)};
}

bool witness_recombines(const Poly& target, const std::vector<Poly>& gens,
                        const CombinationWitness& witness) {
  if (witness.cofactors.size() != gens.size()) return false;
  Poly acc = Poly::zero(target.ring());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    acc = acc + gens[i] * witness.cofactors[i];
  }
  return acc == target;
}

}  // namespace anderson
