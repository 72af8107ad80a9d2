#include "anderson/ring.hpp"

#include <limits>
#include <numeric>

namespace anderson {

RingSpec::RingSpec(std::vector<long long> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) {
    throw std::invalid_argument("ring needs at least one factor");
  }
  for (long long n : moduli_) {
    if (n < 2) {
      throw std::invalid_argument("every modulus must be at least 2");
    }
  }
}

long long RingSpec::cardinality() const {
  long long card = 1;
  for (long long n : moduli_) {
    if (card > std::numeric_limits<long long>::max() / n) {
      throw std::overflow_error("ring cardinality overflows");
    }
    card *= n;
  }
  return card;
}

void require_within_cap(const RingSpec& ring, long long cap) {
  long long card = 1;
  for (long long n : ring.moduli()) {
    card *= n;
    if (card > cap) throw CapExceededError();
  }
}

RingElem::RingElem(RingSpec ring, std::vector<long long> coords)
    : ring_(std::move(ring)), coords_(std::move(coords)) {
  if (coords_.size() != ring_.arity()) throw DimensionMismatchError();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    long long n = ring_.modulus(i);
    coords_[i] %= n;
    if (coords_[i] < 0) coords_[i] += n;
  }
}

RingElem RingElem::zero(const RingSpec& ring) {
  return RingElem(ring, std::vector<long long>(ring.arity(), 0));
}

RingElem RingElem::one(const RingSpec& ring) {
  return RingElem(ring, std::vector<long long>(ring.arity(), 1));
}

RingElem RingElem::from_int(const RingSpec& ring, long long k) {
  return RingElem(ring, std::vector<long long>(ring.arity(), k));
}

RingElem RingElem::at_index(const RingSpec& ring, long long index) {
  std::vector<long long> coords(ring.arity());
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    coords[i] = index % ring.modulus(i);
    index /= ring.modulus(i);
  }
  return RingElem(ring, std::move(coords));
}

long long RingElem::index() const {
  long long idx = 0;
  long long stride = 1;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    idx += coords_[i] * stride;
    stride *= ring_.modulus(i);
  }
  return idx;
}

bool RingElem::is_zero() const {
  for (long long c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool RingElem::is_one() const {
  for (long long c : coords_) {
    if (c != 1) return false;
  }
  return true;
}

bool RingElem::operator==(const RingElem& other) const {
  require_same_ring(*this, other);
  return coords_ == other.coords_;
}

void require_same_ring(const RingElem& a, const RingElem& b) {
  if (a.ring() != b.ring()) throw RingMismatchError();
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  std::vector<long long> coords(a.coords_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] = (coords[i] + b.coords_[i]) % a.ring_.modulus(i);
  }
  return RingElem(a.ring_, std::move(coords));
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  return a + (-b);
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  require_same_ring(a, b);
  std::vector<long long> coords(a.coords_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] = (coords[i] * b.coords_[i]) % a.ring_.modulus(i);
  }
  return RingElem(a.ring_, std::move(coords));
}

RingElem RingElem::operator-() const {
  std::vector<long long> coords(coords_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] = (ring_.modulus(i) - coords[i]) % ring_.modulus(i);
  }
  return RingElem(ring_, std::move(coords));
}

bool is_unit(const RingElem& a) {
  for (std::size_t i = 0; i < a.ring().arity(); ++i) {
    if (gcd_ll(a.coord(i), a.ring().modulus(i)) != 1) return false;
  }
  return true;
}

RingElem inverse(const RingElem& a) {
  if (!is_unit(a)) throw NotAUnitError();
  std::vector<long long> coords(a.ring().arity());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    coords[i] = mod_inverse(a.coord(i), a.ring().modulus(i));
  }
  return RingElem(a.ring(), std::move(coords));
}

long long gcd_ll(long long a, long long b) {
  return std::gcd(a, b);
}

long long xgcd(long long a, long long b, long long& s, long long& t) {
  long long old_r = a, r = b;
  long long old_s = 1, cur_s = 0;
  long long old_t = 0, cur_t = 1;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * cur_s;
    old_s = cur_s;
    cur_s = tmp;
    tmp = old_t - q * cur_t;
    old_t = cur_t;
    cur_t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

long long mod_inverse(long long a, long long n) {
  long long s, t;
  long long g = xgcd(((a % n) + n) % n, n, s, t);
  if (g != 1) throw NotAUnitError();
  return ((s % n) + n) % n;
}

}  // namespace anderson
