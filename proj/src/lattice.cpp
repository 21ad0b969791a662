#include "fuzzyrel/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace fuzzyrel {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::StructureMismatch: return "structure mismatch";
    case ErrorKind::ShapeMismatch: return "shape mismatch";
    case ErrorKind::NotAnEquivalence: return "not a fuzzy equivalence";
    case ErrorKind::NotAnLFunction: return "not an L-function";
    case ErrorKind::NotUniform: return "not uniform";
    case ErrorKind::NotASolution: return "not a solution";
    case ErrorKind::PreconditionViolation: return "precondition violation";
    case ErrorKind::SpaceTooLarge: return "enumeration space too large";
    case ErrorKind::Parse: return "parse error";
  }
  return "error";
}

TruthValue::TruthValue(long num, unsigned long den) : value_(num, den) {
  if (den == 0) throw Error(ErrorKind::Parse, "zero denominator");
  value_.canonicalize();
}

TruthValue::TruthValue(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

[[noreturn]] void bad_scalar(std::string_view text) {
  throw Error(ErrorKind::Parse, "malformed scalar '" + std::string(text) + "'");
}

}  // namespace

TruthValue TruthValue::parse(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_scalar(text);
    const mpz_class d{std::string(den)};
    if (d == 0) bad_scalar(text);
    return TruthValue(mpq_class(mpz_class(std::string(num)), d));
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac)) bad_scalar(text);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const mpz_class num = mpz_class(std::string(whole)) * scale +
                          mpz_class(std::string(frac));
    return TruthValue(mpq_class(num, scale));
  }
  if (!all_digits(text)) bad_scalar(text);
  return TruthValue(mpq_class(mpz_class(std::string(text))));
}

std::string TruthValue::to_string() const { return value_.get_str(); }

std::string TruthValue::to_decimal_string() const {
  mpz_class den = value_.get_den();
  unsigned twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return to_string();
  const unsigned digits = std::max(twos, fives);
  if (digits == 0) return value_.get_num().get_str();
  mpz_class scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const mpz_class scaled = value_.get_num() * (scale / value_.get_den());
  const mpz_class whole = scaled / scale;
  std::string frac = mpz_class(scaled % scale).get_str();
  frac.insert(0, digits - frac.size(), '0');
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  return whole.get_str() + (frac.empty() ? "" : "." + frac);
}

Lattice Lattice::chain(unsigned n) {
  if (n == 0) throw Error(ErrorKind::PreconditionViolation, "chain length must be positive");
  return Lattice(LatticeKind::FiniteChain, n);
}

Lattice Lattice::parse(std::string_view tag) {
  if (tag == "boolean") return boolean();
  if (tag == "godel" || tag == "goedel") return goedel();
  if (tag == "lukasiewicz") return lukasiewicz();
  if (tag == "product") return product();
  if (tag.starts_with("chain:")) {
    const auto digits = tag.substr(6);
    unsigned n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n > 0) return chain(n);
  }
  throw Error(ErrorKind::Parse, "unknown lattice '" + std::string(tag) + "'");
}

std::string Lattice::name() const {
  switch (kind_) {
    case LatticeKind::Boolean: return "boolean";
    case LatticeKind::Goedel: return "godel";
    case LatticeKind::Lukasiewicz: return "lukasiewicz";
    case LatticeKind::Product: return "product";
    case LatticeKind::FiniteChain: return "chain:" + std::to_string(n_);
  }
  return {};
}

bool Lattice::contains(const TruthValue& x) const {
  const mpq_class& q = x.rational();
  if (sgn(q) < 0 || cmp(q, 1) > 0) return false;
  switch (kind_) {
    case LatticeKind::Boolean:
      return sgn(q) == 0 || cmp(q, 1) == 0;
    case LatticeKind::FiniteChain:
      return mpz_class(n_) % q.get_den() == 0;
    default:
      return true;
  }
}

void Lattice::require(const TruthValue& x) const {
  if (!contains(x)) {
    throw Error(ErrorKind::StructureMismatch,
                "value " + x.to_string() + " is not in the carrier of " + name());
  }
}

TruthValue Lattice::chain_element(unsigned k) const {
  if (kind_ != LatticeKind::FiniteChain || k > n_) {
    throw Error(ErrorKind::StructureMismatch,
                "a" + std::to_string(k) + " is not an element of " + name());
  }
  return TruthValue(static_cast<long>(k), n_);
}

TruthValue Lattice::tensor(const TruthValue& x, const TruthValue& y) const {
  switch (kind_) {
    case LatticeKind::Boolean:
    case LatticeKind::Goedel:
      return meet(x, y);
    case LatticeKind::Lukasiewicz:
    case LatticeKind::FiniteChain: {
      mpq_class s = x.rational() + y.rational() - 1;
      if (sgn(s) < 0) return TruthValue::zero();
      return TruthValue(std::move(s));
    }
    case LatticeKind::Product:
      return TruthValue(mpq_class(x.rational() * y.rational()));
  }
  return {};
}

TruthValue Lattice::implies(const TruthValue& x, const TruthValue& y) const {
  if (x <= y) return TruthValue::one();
  switch (kind_) {
    case LatticeKind::Boolean:
    case LatticeKind::Goedel:
      return y;
    case LatticeKind::Lukasiewicz:
    case LatticeKind::FiniteChain:
      return TruthValue(mpq_class(1 - x.rational() + y.rational()));
    case LatticeKind::Product:
      return TruthValue(mpq_class(y.rational() / x.rational()));
  }
  return {};
}

TruthValue Lattice::equiv(const TruthValue& x, const TruthValue& y) const {
  return meet(implies(x, y), implies(y, x));
}

TruthValue parse_value(const Lattice& lattice, std::string_view text) {
  TruthValue v;
  if (!text.empty() && text.front() == 'a' &&
      lattice.kind() == LatticeKind::FiniteChain) {
    const auto digits = text.substr(1);
    unsigned k = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) bad_scalar(text);
    v = lattice.chain_element(k);
  } else {
    v = TruthValue::parse(text);
  }
  lattice.require(v);
  return v;
}

TruthValue otimes(const Lattice& lattice, const TruthValue& x, const TruthValue& y) {
  lattice.require(x);
  lattice.require(y);
  return lattice.tensor(x, y);
}

TruthValue residuum(const Lattice& lattice, const TruthValue& x, const TruthValue& y) {
  lattice.require(x);
  lattice.require(y);
  return lattice.implies(x, y);
}

TruthValue biresiduum(const Lattice& lattice, const TruthValue& x, const TruthValue& y) {
  lattice.require(x);
  lattice.require(y);
  return lattice.equiv(x, y);
}

TruthValue meet_all(const Lattice& lattice, std::span<const TruthValue> values) {
  TruthValue acc = lattice.top();
  for (const auto& v : values) {
    lattice.require(v);
    if (v < acc) acc = v;
  }
  return acc;
}

TruthValue join_all(const Lattice& lattice, std::span<const TruthValue> values) {
  TruthValue acc = lattice.bottom();
  for (const auto& v : values) {
    lattice.require(v);
    if (acc < v) acc = v;
  }
  return acc;
}

SubalgebraResult saturate(const Lattice& lattice, std::span<const TruthValue> seeds,
                          std::size_t cap) {
  std::set<TruthValue> closure{lattice.bottom(), lattice.top()};
  for (const auto& s : seeds) {
    lattice.require(s);
    closure.insert(s);
  }
  auto finish = [&](bool finite) {
    return SubalgebraResult{finite, {closure.begin(), closure.end()}};
  };
  if (closure.size() > cap) return finish(false);

  // Every lattice here is a chain, so ∧ and ∨ never produce new elements.
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<TruthValue> snapshot(closure.begin(), closure.end());
    for (const auto& x : snapshot) {
      for (const auto& y : snapshot) {
        for (auto&& z : {lattice.tensor(x, y), lattice.implies(x, y)}) {
          if (closure.insert(z).second) {
            grew = true;
            if (closure.size() > cap) return finish(false);
          }
        }
      }
    }
  }
  return finish(true);
}

SubalgebraResult generated_subalgebra(const Lattice& lattice,
                                      std::span<const TruthValue> seeds, std::size_t cap) {
  if (lattice.kind() != LatticeKind::Lukasiewicz) return saturate(lattice, seeds, cap);

  // The MV-subalgebra generated by finitely many rationals is the grid
  // {0, 1/d, ..., 1} where d is the lcm of their denominators.
  mpz_class d = 1;
  for (const auto& s : seeds) {
    lattice.require(s);
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), s.rational().get_den_mpz_t());
  }
  if (d + 1 > cap) return saturate(lattice, seeds, 0);
  SubalgebraResult grid{true, {}};
  const unsigned long steps = d.get_ui();
  grid.elements.reserve(steps + 1);
  for (unsigned long k = 0; k <= steps; ++k) {
    grid.elements.emplace_back(mpq_class(mpz_class(k), d));
  }
  return grid;
}

}  // namespace fuzzyrel
