#include "anderson/literals.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "anderson/errors.hpp"

namespace anderson {

namespace {

std::string strip(std::string_view text) {
  size_t b = 0;
  size_t e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  return std::string(text.substr(b, e - b));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

long long parse_int(const std::string& text, const std::string& what) {
  if (text.empty()) throw ParseError("empty " + what);
  size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad " + what + ": '" + text + "'");
  }
  if (pos != text.size())
    throw ParseError("bad " + what + ": '" + text + "'");
  return value;
}

// Splits at top-level occurrences of sep, respecting ( ) and [ ] nesting.
std::vector<std::string> split_top(const std::string& text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

RingSpec parse_ring(std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw ParseError("empty ring literal");
  std::vector<long long> moduli;
  for (std::string part : split_top(s, 'x')) {
    part = strip(part);
    // Tolerate an uppercase separator: "Z2XZ3" splits into "Z2", "Z3" only
    // when lowercased first, so handle 'X' by re-splitting.
    std::vector<std::string> sub;
    {
      std::string piece;
      for (char c : part) {
        if (c == 'X') {
          sub.push_back(piece);
          piece.clear();
        } else {
          piece.push_back(c);
        }
      }
      sub.push_back(piece);
    }
    for (std::string chunk : sub) {
      chunk = strip(chunk);
      if (chunk.empty()) throw ParseError("bad ring literal: '" + s + "'");
      if (chunk[0] == 'Z' || chunk[0] == 'z') chunk = chunk.substr(1);
      long long n = parse_int(chunk, "ring modulus");
      if (n < 2) throw ParseError("ring modulus must be at least 2");
      moduli.push_back(n);
    }
  }
  return RingSpec(std::move(moduli));
}

std::string format_ring(const RingSpec& ring) {
  std::string out;
  for (size_t i = 0; i < ring.moduli().size(); ++i) {
    if (i > 0) out += "x";
    out += "Z" + std::to_string(ring.moduli()[i]);
  }
  return out;
}

RingElem parse_elem(const RingSpec& ring, std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw ParseError("empty element literal");
  if (!s.empty() && s.front() == '(' && s.back() == ')')
    s = strip(std::string_view(s).substr(1, s.size() - 2));
  std::vector<std::string> parts = split_top(s, ':');
  if (parts.size() == 1) {
    long long v = parse_int(strip(parts[0]), "element");
    return RingElem::from_int(ring, v);
  }
  if (parts.size() != ring.moduli().size())
    throw ParseError("element tuple has " + std::to_string(parts.size()) +
                     " coordinates, ring has " +
                     std::to_string(ring.moduli().size()));
  std::vector<long long> coords;
  coords.reserve(parts.size());
  for (const std::string& part : parts)
    coords.push_back(parse_int(strip(part), "element coordinate"));
  return RingElem(ring, std::move(coords));
}

std::string format_elem(const RingElem& x) {
  std::string out;
  for (size_t i = 0; i < x.coords().size(); ++i) {
    if (i > 0) out += ":";
    out += std::to_string(x.coords()[i]);
  }
  return out;
}

namespace {

// One additive term of a polynomial literal: coefficient text and X-power.
struct Term {
  RingElem coeff;
  int power = 0;
};

Term parse_term(const RingSpec& ring, const std::string& raw) {
  std::string s = strip(raw);
  if (s.empty()) throw ParseError("empty polynomial term");
  std::string coeff_text;
  size_t i = 0;
  if (s[0] == '(') {
    int depth = 0;
    size_t close = std::string::npos;
    for (size_t j = 0; j < s.size(); ++j) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')' && --depth == 0) {
        close = j;
        break;
      }
    }
    if (close == std::string::npos)
      throw ParseError("unbalanced parentheses in term '" + s + "'");
    coeff_text = s.substr(1, close - 1);
    i = close + 1;
  } else {
    while (i < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == ':'))
      ++i;
    coeff_text = s.substr(0, i);
  }
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  Term term{coeff_text.empty() ? RingElem::one(ring)
                               : parse_elem(ring, coeff_text),
            0};
  if (i == s.size()) {
    if (coeff_text.empty())
      throw ParseError("empty polynomial term");
    return term;
  }
  if (s[i] != 'X' && s[i] != 'x')
    throw ParseError("bad polynomial term '" + s + "'");
  ++i;
  term.power = 1;
  if (i < s.size() && s[i] == '^') {
    long long p = parse_int(s.substr(i + 1), "exponent");
    if (p < 0) throw ParseError("negative exponent");
    term.power = static_cast<int>(p);
    i = s.size();
  }
  if (i != s.size()) throw ParseError("bad polynomial term '" + s + "'");
  return term;
}

}  // namespace

Poly parse_poly(const RingSpec& ring, std::string_view text) {
  std::string s = strip(text);
  if (s.empty()) throw ParseError("empty polynomial literal");
  if (s.front() == '(' && s.back() == ')') {
    // Strip one outer paren pair only when it wraps the whole literal.
    int depth = 0;
    bool wraps = true;
    for (size_t j = 0; j + 1 < s.size(); ++j) {
      if (s[j] == '(') ++depth;
      if (s[j] == ')') --depth;
      if (depth == 0) {
        wraps = false;
        break;
      }
    }
    if (wraps) return parse_poly(ring, std::string_view(s).substr(1, s.size() - 2));
  }
  // Split into signed terms at top-level '+' and '-'.
  Poly result = Poly::zero(ring);
  std::string cur;
  int sign = +1;
  int depth = 0;
  auto flush = [&](int next_sign) {
    if (strip(cur).empty()) throw ParseError("empty polynomial term");
    Term t = parse_term(ring, cur);
    Poly mono = Poly::monomial(ring, t.coeff, t.power);
    result = (sign > 0) ? result + mono : result - mono;
    cur.clear();
    sign = next_sign;
  };
  for (size_t j = 0; j < s.size(); ++j) {
    char c = s[j];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-') && j > 0) {
      flush(c == '+' ? +1 : -1);
    } else if (depth == 0 && c == '-' && j == 0) {
      sign = -1;
    } else if (depth == 0 && c == '+' && j == 0) {
      sign = +1;
    } else {
      cur.push_back(c);
    }
  }
  flush(+1);
  return result;
}

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int d = p.degree().value(); d >= 0; --d) {
    const RingElem c = p.coeff(d);
    if (c.is_zero()) continue;
    if (!first) out += "+";
    first = false;
    const bool is_one = (c == RingElem::one(p.ring()));
    std::string coeff_text = format_elem(c);
    if (p.ring().moduli().size() > 1) coeff_text = "(" + coeff_text + ")";
    if (d == 0) {
      out += coeff_text;
    } else {
      if (!is_one) out += coeff_text;
      out += "X";
      if (d >= 2) out += "^" + std::to_string(d);
    }
  }
  return out;
}

MultSetKind parse_kind(std::string_view text) {
  const std::string s = lower(strip(text));
  if (s == "a") return MultSetKind::ConstantTermOne;
  if (s == "abar") return MultSetKind::UnitConstantTerm;
  if (s == "n") return MultSetKind::UnitContent;
  if (s == "u") return MultSetKind::Monic;
  if (s == "utilde") return MultSetKind::UnitLowestCoeff;
  throw ParseError("unknown multiplicative-set kind '" + std::string(strip(text)) + "'");
}

std::string format_kind(MultSetKind kind) {
  switch (kind) {
    case MultSetKind::ConstantTermOne: return "A";
    case MultSetKind::UnitConstantTerm: return "Abar";
    case MultSetKind::UnitContent: return "N";
    case MultSetKind::Monic: return "U";
    case MultSetKind::UnitLowestCoeff: return "Utilde";
  }
  throw ParseError("unknown multiplicative-set kind");
}

LocElem parse_fraction(std::string_view text) {
  std::string s = strip(text);
  std::vector<std::string> at = split_top(s, '@');
  if (at.size() != 2)
    throw ParseError("fraction literal needs '@RING:KIND': '" + s + "'");
  std::vector<std::string> tail = split_top(strip(at[1]), ':');
  if (tail.size() != 2)
    throw ParseError("fraction literal needs '@RING:KIND': '" + s + "'");
  RingSpec ring = parse_ring(tail[0]);
  MultSetKind kind = parse_kind(tail[1]);
  std::vector<std::string> parts = split_top(strip(at[0]), '/');
  if (parts.empty() || parts.size() > 2)
    throw ParseError("bad fraction '" + s + "'");
  Poly num = parse_poly(ring, parts[0]);
  Poly den = parts.size() == 2 ? parse_poly(ring, parts[1])
                               : Poly::constant(RingElem::one(ring));
  return LocElem::fraction(num, den, kind);
}

std::string format_fraction(const LocElem& x) {
  return "(" + format_poly(x.num()) + ")/(" + format_poly(x.den()) + ")@" +
         format_ring(x.ring()) + ":" + format_kind(x.kind());
}

LocIdeal parse_ideal_spec(const RingSpec& ring, std::string_view text,
                          MembershipPolicy policy) {
  std::string s = strip(text);
  if (s.empty()) throw ParseError("empty ideal spec");
  if (s.front() == '[') {
    if (s.back() != ']') throw ParseError("unbalanced '[' in ideal spec");
    std::string inside = strip(std::string_view(s).substr(1, s.size() - 2));
    std::vector<Poly> gens;
    if (!inside.empty())
      for (const std::string& part : split_top(inside, ';'))
        gens.push_back(parse_poly(ring, part));
    return LocIdeal::general(ring, std::move(gens), policy);
  }
  if (s.front() != '(') throw ParseError("ideal spec must start with '(' or '['");
  int depth = 0;
  size_t close = std::string::npos;
  for (size_t j = 0; j < s.size(); ++j) {
    if (s[j] == '(') ++depth;
    if (s[j] == ')' && --depth == 0) {
      close = j;
      break;
    }
  }
  if (close == std::string::npos)
    throw ParseError("unbalanced '(' in ideal spec");
  std::string inside = strip(std::string_view(s).substr(1, close - 1));
  std::string rest = lower(strip(std::string_view(s).substr(close + 1)));
  std::vector<RingElem> gens;
  if (!inside.empty())
    for (const std::string& part : split_top(inside, ','))
      gens.push_back(parse_elem(ring, part));
  IdealOfR base = IdealOfR::from_generators(ring, gens);
  if (rest.empty()) return LocIdeal::extension_of(base);
  if (rest == "+x") return LocIdeal::i_plus_x(base);
  throw ParseError("bad ideal spec suffix '" + rest + "'");
}

std::string format_ideal_spec(const LocIdeal& ideal) {
  if (ideal.shape() == LocIdeal::Shape::General) {
    std::string out = "[";
    for (size_t i = 0; i < ideal.generator_polys().size(); ++i) {
      if (i > 0) out += "; ";
      out += format_poly(ideal.generator_polys()[i]);
    }
    return out + "]";
  }
  std::string out = "(";
  const std::vector<RingElem> gens = ideal.base_ideal().generators();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i > 0) out += ",";
    out += format_elem(gens[i]);
  }
  out += ")";
  if (ideal.shape() == LocIdeal::Shape::IPlusX) out += "+X";
  return out;
}

}  // namespace anderson
