#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "fuzzyrel/error.hpp"

namespace fuzzyrel {

/// An exact truth degree in [0,1]. Chain elements a_k of FiniteChain(n) are
/// stored as k/n.
class TruthValue {
 public:
  TruthValue() = default;
  TruthValue(long num) : value_(num) {}
  TruthValue(long num, unsigned long den);
  explicit TruthValue(mpq_class value);

  static TruthValue zero() { return TruthValue(0); }
  static TruthValue one() { return TruthValue(1); }

  /// Parses "1", "0.3", "3/10" into an exact rational. Range is not checked.
  static TruthValue parse(std::string_view text);

  const mpq_class& rational() const { return value_; }

  /// Lowest-terms fraction, e.g. "3/10", "1", "0".
  std::string to_string() const;
  /// Terminating decimal when one exists ("0.3"), else the fraction.
  std::string to_decimal_string() const;

  friend bool operator==(const TruthValue& a, const TruthValue& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const TruthValue& a,
                                          const TruthValue& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_{0};
};

enum class LatticeKind { Boolean, Goedel, Lukasiewicz, Product, FiniteChain };

/// A complete residuated lattice on a subset of [0,1].
///
/// The member operations assume their operands already belong to the
/// carrier; the free functions below (otimes, residuum, ...) validate first
/// and throw ErrorKind::StructureMismatch otherwise. Relations validate their
/// entries once at construction and then use the member operations.
class Lattice {
 public:
  static Lattice boolean() { return Lattice(LatticeKind::Boolean, 0); }
  static Lattice goedel() { return Lattice(LatticeKind::Goedel, 0); }
  static Lattice lukasiewicz() { return Lattice(LatticeKind::Lukasiewicz, 0); }
  static Lattice product() { return Lattice(LatticeKind::Product, 0); }
  static Lattice chain(unsigned n);

  /// "boolean" | "godel" | "lukasiewicz" | "product" | "chain:<n>"
  static Lattice parse(std::string_view tag);
  std::string name() const;

  LatticeKind kind() const { return kind_; }
  /// Number of steps n of FiniteChain(n); 0 for the other kinds.
  unsigned chain_length() const { return n_; }
  bool locally_finite() const { return kind_ != LatticeKind::Product; }

  bool contains(const TruthValue& x) const;
  /// Throws StructureMismatch when x is not in the carrier.
  void require(const TruthValue& x) const;

  /// Element a_k of a finite chain.
  TruthValue chain_element(unsigned k) const;

  TruthValue bottom() const { return TruthValue::zero(); }
  TruthValue top() const { return TruthValue::one(); }

  TruthValue meet(const TruthValue& x, const TruthValue& y) const {
    return y < x ? y : x;
  }
  TruthValue join(const TruthValue& x, const TruthValue& y) const {
    return x < y ? y : x;
  }
  TruthValue tensor(const TruthValue& x, const TruthValue& y) const;
  TruthValue implies(const TruthValue& x, const TruthValue& y) const;
  TruthValue equiv(const TruthValue& x, const TruthValue& y) const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  Lattice(LatticeKind kind, unsigned n) : kind_(kind), n_(n) {}

  LatticeKind kind_;
  unsigned n_;
};

/// Reads a scalar in the context of a lattice: plain rationals everywhere,
/// plus the index notation "a<k>" for finite chains. Validates membership.
TruthValue parse_value(const Lattice& lattice, std::string_view text);

TruthValue otimes(const Lattice& lattice, const TruthValue& x,
                  const TruthValue& y);
TruthValue residuum(const Lattice& lattice, const TruthValue& x,
                    const TruthValue& y);
TruthValue biresiduum(const Lattice& lattice, const TruthValue& x,
                      const TruthValue& y);
/// Infimum; the empty meet is 1.
TruthValue meet_all(const Lattice& lattice, std::span<const TruthValue> values);
/// Supremum; the empty join is 0.
TruthValue join_all(const Lattice& lattice, std::span<const TruthValue> values);

struct SubalgebraResult {
  bool finite = false;
  /// Sorted ascending; the partial closure when the cap was exceeded.
  std::vector<TruthValue> elements;
};

/// Closure of seeds ∪ {0,1} under ∧, ∨, ⊗, →. Reports !finite once the
/// closure grows past `cap` elements.
SubalgebraResult generated_subalgebra(const Lattice& lattice,
                                      std::span<const TruthValue> seeds,
                                      std::size_t cap);

/// Plain saturation without the Łukasiewicz grid shortcut.
SubalgebraResult saturate(const Lattice& lattice,
                          std::span<const TruthValue> seeds, std::size_t cap);

}  // namespace fuzzyrel
