#include "anderson/ideal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace anderson {

namespace {

// Additive closure of the R-multiples of the generators, as a bitmap over
// canonical indices. The result is automatically R-stable.
std::vector<long long> close_under_ideal_ops(const RingSpec& ring,
                                             const std::vector<RingElem>& gens) {
  const long long card = ring.cardinality();
  std::vector<char> in_set(card, 0);
  std::vector<long long> multiples;
  for (const auto& g : gens) {
    if (g.ring() != ring) throw RingMismatchError();
    for (long long r = 0; r < card; ++r) {
      long long idx = (RingElem::at_index(ring, r) * g).index();
      if (!in_set[idx]) {
        in_set[idx] = 1;
        multiples.push_back(idx);
      }
    }
  }
  std::vector<char> closed(card, 0);
  closed[0] = 1;
  std::vector<long long> worklist{0};
  while (!worklist.empty()) {
    long long x = worklist.back();
    worklist.pop_back();
    RingElem xe = RingElem::at_index(ring, x);
    for (long long m : multiples) {
      long long s = (xe + RingElem::at_index(ring, m)).index();
      if (!closed[s]) {
        closed[s] = 1;
        worklist.push_back(s);
      }
    }
  }
  std::vector<long long> out;
  for (long long i = 0; i < card; ++i) {
    if (closed[i]) out.push_back(i);
  }
  return out;
}

bool set_is_ideal(const RingSpec& ring, const std::vector<long long>& sorted) {
  auto member = [&](long long idx) {
    return std::binary_search(sorted.begin(), sorted.end(), idx);
  };
  if (!member(0)) return false;
  const long long card = ring.cardinality();
  for (long long a : sorted) {
    RingElem ae = RingElem::at_index(ring, a);
    for (long long b : sorted) {
      if (!member((ae + RingElem::at_index(ring, b)).index())) return false;
    }
    for (long long r = 0; r < card; ++r) {
      if (!member((ae * RingElem::at_index(ring, r)).index())) return false;
    }
  }
  return true;
}

}  // namespace

IdealOfR::IdealOfR(RingSpec ring, std::vector<long long> elements,
                   std::vector<RingElem> gens)
    : ring_(std::move(ring)),
      elements_(std::move(elements)),
      gens_(std::move(gens)) {}

IdealOfR IdealOfR::from_generators(const RingSpec& ring,
                                   std::vector<RingElem> gens, long long cap) {
  require_within_cap(ring, cap);
  auto elements = close_under_ideal_ops(ring, gens);
  return IdealOfR(ring, std::move(elements), std::move(gens));
}

IdealOfR IdealOfR::from_elements(const RingSpec& ring,
                                 std::vector<long long> sorted_indices,
                                 std::vector<RingElem> gens) {
  if (!set_is_ideal(ring, sorted_indices)) {
    throw std::invalid_argument("element set is not an ideal");
  }
  return IdealOfR(ring, std::move(sorted_indices), std::move(gens));
}

IdealOfR IdealOfR::zero_ideal(const RingSpec& ring) {
  return IdealOfR(ring, {0}, {});
}

IdealOfR IdealOfR::unit_ideal(const RingSpec& ring) {
  std::vector<long long> all(ring.cardinality());
  for (long long i = 0; i < ring.cardinality(); ++i) all[i] = i;
  return IdealOfR(ring, std::move(all), {RingElem::one(ring)});
}

std::vector<RingElem> IdealOfR::elements() const {
  std::vector<RingElem> out;
  out.reserve(elements_.size());
  for (long long idx : elements_) out.push_back(RingElem::at_index(ring_, idx));
  return out;
}

bool IdealOfR::contains(const RingElem& x) const {
  if (x.ring() != ring_) throw RingMismatchError();
  return std::binary_search(elements_.begin(), elements_.end(), x.index());
}

bool IdealOfR::is_unit_ideal() const {
  return static_cast<long long>(elements_.size()) == ring_.cardinality();
}

bool IdealOfR::operator==(const IdealOfR& other) const {
  if (ring_ != other.ring_) throw RingMismatchError();
  return elements_ == other.elements_;
}

bool IdealOfR::subset_of(const IdealOfR& other) const {
  if (ring_ != other.ring_) throw RingMismatchError();
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

IdealOfR ideal_sum(const IdealOfR& a, const IdealOfR& b) {
  if (a.ring() != b.ring()) throw RingMismatchError();
  const RingSpec& ring = a.ring();
  std::vector<char> in_set(ring.cardinality(), 0);
  for (long long x : a.element_indices()) {
    RingElem xe = RingElem::at_index(ring, x);
    for (long long y : b.element_indices()) {
      in_set[(xe + RingElem::at_index(ring, y)).index()] = 1;
    }
  }
  std::vector<long long> out;
  for (long long i = 0; i < ring.cardinality(); ++i) {
    if (in_set[i]) out.push_back(i);
  }
  std::vector<RingElem> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g);
  // A sum of ideals is an ideal; skip the element-set recheck.
  return IdealOfR(ring, std::move(out), std::move(gens));
}

IdealOfR ideal_product(const IdealOfR& a, const IdealOfR& b) {
  if (a.ring() != b.ring()) throw RingMismatchError();
  const RingSpec& ring = a.ring();
  std::vector<RingElem> gens;
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) gens.push_back(x * y);
  }
  return IdealOfR::from_generators(ring, std::move(gens));
}

IdealOfR annihilator(const IdealOfR& ideal) {
  const RingSpec& ring = ideal.ring();
  std::vector<long long> out;
  for (long long r = 0; r < ring.cardinality(); ++r) {
    RingElem re = RingElem::at_index(ring, r);
    bool kills = true;
    for (const auto& g : ideal.generators()) {
      if (!(re * g).is_zero()) {
        kills = false;
        break;
      }
    }
    if (kills) out.push_back(r);
  }
  std::vector<RingElem> gens;
  for (long long idx : out) {
    if (idx != 0) gens.push_back(RingElem::at_index(ring, idx));
  }
  return IdealOfR::from_elements(ring, std::move(out), std::move(gens));
}

namespace {

std::optional<std::vector<RingElem>> generating_subset(
    const IdealOfR& ideal, std::size_t k) {
  const RingSpec& ring = ideal.ring();
  std::vector<long long> nonzero;
  for (long long idx : ideal.element_indices()) {
    if (idx != 0) nonzero.push_back(idx);
  }
  if (k == 0) {
    if (ideal.is_zero()) return std::vector<RingElem>{};
    return std::nullopt;
  }
  if (k == 1) {
    for (long long idx : nonzero) {
      std::vector<RingElem> gens{RingElem::at_index(ring, idx)};
      if (IdealOfR::from_generators(ring, gens).element_indices() ==
          ideal.element_indices()) {
        return gens;
      }
    }
    return std::nullopt;
  }
  // Larger generating sets never occur for products of cyclic rings (every
  // ideal splits into cyclic components), so keep this branch guarded
  // rather than combinatorial.
  throw std::logic_error("minimal generating set larger than 1 not expected");
}

}  // namespace

std::vector<LatticeEntry> ideal_lattice(const RingSpec& ring, long long cap) {
  require_within_cap(ring, cap);
  const long long card = ring.cardinality();

  std::map<std::vector<long long>, IdealOfR> seen;
  std::vector<IdealOfR> worklist;
  for (long long i = 0; i < card; ++i) {
    auto principal = IdealOfR::from_generators(
        ring, {RingElem::at_index(ring, i)}, cap);
    if (seen.emplace(principal.element_indices(), principal).second) {
      worklist.push_back(principal);
    }
  }
  // Close under pairwise sums; sums of ideals are ideals, so no reclosure.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<IdealOfR> current;
    current.reserve(seen.size());
    for (const auto& [_, ideal] : seen) current.push_back(ideal);
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        IdealOfR s = ideal_sum(current[i], current[j]);
        if (seen.emplace(s.element_indices(), s).second) grew = true;
      }
    }
  }

  std::vector<LatticeEntry> out;
  for (const auto& [_, ideal] : seen) {
    for (std::size_t k = 0;; ++k) {
      auto gens = generating_subset(ideal, k);
      if (gens) {
        out.push_back(LatticeEntry{ideal, static_cast<int>(k), *gens});
        break;
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const LatticeEntry& a, const LatticeEntry& b) {
              if (a.ideal.size() != b.ideal.size())
                return a.ideal.size() < b.ideal.size();
              return a.ideal.element_indices() < b.ideal.element_indices();
            });
  return out;
}

std::vector<IdealOfR> max_ideals(const RingSpec& ring, long long cap) {
  auto lattice = ideal_lattice(ring, cap);
  std::vector<IdealOfR> proper;
  for (const auto& entry : lattice) {
    if (entry.ideal.is_proper()) proper.push_back(entry.ideal);
  }
  std::vector<IdealOfR> out;
  for (const auto& m : proper) {
    bool maximal = true;
    for (const auto& other : proper) {
      if (m != other && m.subset_of(other)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(m);
  }
  return out;
}

std::vector<IdealOfR> prime_ideals(const RingSpec& ring, long long cap) {
  auto lattice = ideal_lattice(ring, cap);
  std::vector<IdealOfR> out;
  for (const auto& entry : lattice) {
    const IdealOfR& p = entry.ideal;
    if (!p.is_proper()) continue;
    // Prime iff the complement is multiplicatively closed.
    bool prime = true;
    for (long long x = 0; x < ring.cardinality() && prime; ++x) {
      RingElem xe = RingElem::at_index(ring, x);
      if (p.contains(xe)) continue;
      for (long long y = x; y < ring.cardinality(); ++y) {
        RingElem ye = RingElem::at_index(ring, y);
        if (p.contains(ye)) continue;
        if (p.contains(xe * ye)) {
          prime = false;
          break;
        }
      }
    }
    if (prime) out.push_back(p);
  }
  return out;
}

std::vector<IdealOfR> min_primes(const RingSpec& ring, long long cap) {
  auto primes = prime_ideals(ring, cap);
  auto maxes = max_ideals(ring, cap);
  // Finite commutative rings are zero-dimensional: primes = maximal ideals.
  auto same = [&]() {
    if (primes.size() != maxes.size()) return false;
    for (const auto& p : primes) {
      bool found = false;
      for (const auto& m : maxes) {
        if (p == m) found = true;
      }
      if (!found) return false;
    }
    return true;
  };
  if (!same()) {
    throw std::logic_error("prime ideal that is not maximal in a finite ring");
  }
  std::vector<IdealOfR> out;
  for (const auto& p : primes) {
    bool minimal = true;
    for (const auto& q : primes) {
      if (q != p && q.subset_of(p)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(p);
  }
  return out;
}

bool all_primes_maximal(const RingSpec& ring, long long cap) {
  min_primes(ring, cap);  // throws if the invariant fails
  return true;
}

namespace {

bool is_nilpotent_zn(long long x, long long n) {
  long long y = x % n;
  for (long long k = 0; k < n; ++k) {
    if (y == 0) return true;
    y = (y * x) % n;
  }
  return y == 0;
}

}  // namespace

bool is_reduced(const RingSpec& ring) {
  // x is nilpotent in a product iff every coordinate is nilpotent.
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    long long n = ring.modulus(i);
    for (long long x = 1; x < n; ++x) {
      if (is_nilpotent_zn(x, n)) return false;
    }
  }
  return true;
}

bool is_vnr(const RingSpec& ring) {
  // a has b with a*a*b = a in a product iff each coordinate does.
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    long long n = ring.modulus(i);
    for (long long a = 0; a < n; ++a) {
      long long aa = (a * a) % n;
      bool found = false;
      for (long long b = 0; b < n; ++b) {
        if ((aa * b) % n == a) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

RingPredicates predicates(const RingSpec& ring, long long cap) {
  require_within_cap(ring, cap);
  RingPredicates p{};
  p.is_reduced = is_reduced(ring);
  p.is_vnr = is_vnr(ring);

  auto lattice = ideal_lattice(ring, cap);
  p.is_pir = true;
  for (const auto& entry : lattice) {
    if (entry.min_generators > 1) p.is_pir = false;
  }
  auto maxes = max_ideals(ring, cap);
  p.is_local = maxes.size() == 1;
  p.is_field = p.is_local && maxes[0].is_zero();

  // Cross-check: von Neumann regular iff reduced and zero-dimensional.
  if (p.is_vnr != (p.is_reduced && all_primes_maximal(ring, cap))) {
    throw std::logic_error("vnr characterization cross-check failed");
  }
  return p;
}

RingElem LocalFactor::project(const RingElem& x) const {
  return RingElem(factor, {x.coord(component) % modulus});
}

IdealOfR LocalFactor::maximal_ideal_of(const RingSpec& parent) const {
  std::vector<long long> coords(parent.arity(), 1);
  coords[component] = prime;
  return IdealOfR::from_generators(parent, {RingElem(parent, coords)});
}

std::vector<LocalFactor> local_factors(const RingSpec& ring, long long cap) {
  require_within_cap(ring, cap);
  std::vector<LocalFactor> out;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    for (auto [p, e] : factorize(ring.modulus(i))) {
      long long pe = 1;
      for (int k = 0; k < e; ++k) pe *= p;
      out.push_back(LocalFactor{RingSpec({pe}), i, p, e, pe});
    }
  }
  return out;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_squarefree(long long n) {
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return false;
  }
  return true;
}

}  // namespace anderson
