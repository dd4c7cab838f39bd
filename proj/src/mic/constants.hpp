#pragma once

// Exact monic integer Chebyshev constants for catalogued sets.

#include <optional>
#include <string>
#include <vector>

#include "mic/certify.hpp"
#include "mic/constant_value.hpp"
#include "mic/farey.hpp"
#include "mic/numpoly.hpp"

namespace mic {

/// a + c*sqrt(s) with s squarefree and > 1 whenever c != 0; s = 1 otherwise.
class SymbolicEndpoint {
 public:
  SymbolicEndpoint(Rational a = 0) : a_(std::move(a)) {}  // NOLINT: rationals convert implicitly
  /// a + c*sqrt(radicand); square factors of the radicand are pulled out.
  SymbolicEndpoint(Rational a, Rational c, const BigInt& radicand);

  /// Grammar: sums, products and quotients of rationals, sqrt(N) and
  /// parentheses, all within a single quadratic field.
  static SymbolicEndpoint parse(std::string_view text);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return c_; }
  const BigInt& surd() const { return s_; }
  bool is_rational() const { return sgn(c_) == 0; }

  int sign() const;
  SymbolicEndpoint operator-() const { return SymbolicEndpoint(-a_, -c_, s_); }
  friend SymbolicEndpoint operator+(const SymbolicEndpoint& x, const SymbolicEndpoint& y);
  friend SymbolicEndpoint operator-(const SymbolicEndpoint& x, const SymbolicEndpoint& y) { return x + (-y); }
  friend SymbolicEndpoint operator*(const SymbolicEndpoint& x, const SymbolicEndpoint& y);
  friend SymbolicEndpoint operator/(const SymbolicEndpoint& x, const SymbolicEndpoint& y);
  friend std::strong_ordering operator<=>(const SymbolicEndpoint& x, const SymbolicEndpoint& y);
  friend bool operator==(const SymbolicEndpoint& x, const SymbolicEndpoint& y) {
    return x.a_ == y.a_ && x.c_ == y.c_ && x.s_ == y.s_;
  }

  std::string to_string() const;
  double approx() const;

 private:
  Rational a_;
  Rational c_ = 0;
  BigInt s_ = 1;
};

struct CatalogConstant {
  ConstantValue value;
  std::string provenance;
};

/// 1/b for a reduced non-integer a/b, 0 for integers.
ConstantValue point_constant(const Rational& p);

/// max 1/b_i. Integer points contribute 0 and raise DomainError unless
/// allow_integers is set.
ConstantValue finite_set_constant(const std::vector<Rational>& points, bool allow_integers = false);

/// Finite sets with quadratic irrational members: a lone irrational point
/// (value 0) or a pair m +- u, h +- u about an integer or half-integer with
/// u^2 rational. Rational-only sets defer to finite_set_constant. Other sets
/// are outside the catalog.
std::optional<CatalogConstant> symbolic_set_constant(const std::vector<SymbolicEndpoint>& points);

/// Exact constant of [lo, hi] when a catalogued relation applies; throws
/// DomainError when lo >= hi.
std::optional<CatalogConstant> interval_constant(const SymbolicEndpoint& lo, const SymbolicEndpoint& hi);

enum class ConjectureStatus { Conjectured, ProvenEqual };

struct ConjectureValue {
  ConstantValue value;
  ConjectureStatus status = ConjectureStatus::Conjectured;
  std::string basis;  ///< why the status holds
};

/// max(1/b1, 1/b2) over non-integer endpoints. ProvenEqual only with a
/// certified witness for this pair or a catalogued interval of equal value.
ConjectureValue conjecture_value(const FareyPair& pair, const WitnessRecord* witness = nullptr);

enum class SetMap {
  Shift,     ///< z -> z + m
  Negate,    ///< z -> -z
  Square,    ///< pullback under z^2
  Logistic,  ///< pullback under z(1 - z)
};

/// Constant of the preimage: degree-one maps preserve it, degree-two maps
/// take the square root.
ConstantValue transform_constant(const ConstantValue& value, SetMap map);

const char* status_name(ConjectureStatus s);

}  // namespace mic
