#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gds/rational.hpp"

namespace gds {

// Variable kinds, listed in printing order. kSym covers auxiliary named
// variables (x, y_1, ...) used by alternative surface presentations.
enum class VarKind : std::uint8_t { kH, kX0, kXNode, kT, kW, kSym };

struct VarInfo {
  VarKind kind;
  std::string name;   // node id for kXNode, symbol name for kSym
  int rank;           // node level for kXNode, index for kSym, 0 otherwise
  std::uint32_t id;   // interning order
};

/// Interned variable handle. Two VarIds are equal iff they denote the same
/// (kind, name, rank) triple. Copying is free.
class VarId {
 public:
  static VarId h();
  static VarId x0();
  static VarId node(std::string_view node_id, int level);
  static VarId t();
  static VarId w();
  static VarId sym(std::string_view name, int index = 0);

  VarKind kind() const { return info_->kind; }
  const std::string& name() const { return info_->name; }
  int rank() const { return info_->rank; }
  std::uint32_t id() const { return info_->id; }

  /// Plain-text spelling: h, X_0, X_<node>, T, W or the symbol name.
  std::string to_string() const;
  std::string to_latex() const;

  friend bool operator==(VarId a, VarId b) { return a.info_ == b.info_; }
  friend bool operator!=(VarId a, VarId b) { return a.info_ != b.info_; }
  // Interning order; cheap, used for container keys.
  friend bool operator<(VarId a, VarId b) { return a.info_->id < b.info_->id; }

 private:
  explicit VarId(const VarInfo* info) : info_(info) {}
  static VarId intern(VarKind kind, std::string_view name, int rank);

  const VarInfo* info_;
};

/// Fixed presentation order: h < X_0 < X_e by (level, id) < T < W < symbols.
bool var_order_less(VarId a, VarId b);

/// Sorts in the fixed presentation order.
void sort_vars(std::vector<VarId>& vars);

/// Power product of variables. Factors are kept sorted by interning id and
/// never carry a zero exponent.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  static Monomial of(VarId v, std::uint32_t exponent = 1);
  /// Factors in any order; zero exponents are dropped, repeats add up.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree(VarId v) const;
  std::uint32_t total_degree() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) to hold for `*this` dividing `other`.
  Monomial quotient_of(const Monomial& other) const;
  Monomial without(VarId v) const;
  Monomial with_exponent(VarId v, std::uint32_t exponent) const;

  // Lexicographic order with variables ranked by interning id; a genuine
  // monomial order, used both for storage and for exact division.
  friend bool operator<(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

 private:
  std::vector<Factor> factors_;
};

class Poly;
using Substitution = std::map<VarId, Poly>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// No stored coefficient is zero. Values are immutable in practice: every
/// operation returns a fresh polynomial.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rat>;

  Poly() = default;
  Poly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  Poly(std::int64_t constant) : Poly(Rat(constant)) {}  // NOLINT
  static Poly var(VarId v, std::uint32_t exponent = 1);
  static Poly term(const Rat& coeff, Monomial mono);
  /// Builds `v - c`.
  static Poly linear(VarId v, const Rat& c);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the empty monomial.
  Rat constant_term() const;
  Rat coefficient(const Monomial& mono) const;

  std::uint32_t degree_in(VarId v) const;
  std::uint32_t total_degree() const;
  bool involves(VarId v) const;
  /// Variables present, in the fixed presentation order.
  std::vector<VarId> variables() const;

  /// Coefficient of v^k viewed as a polynomial in v over the other variables.
  Poly coefficient_in(VarId v, std::uint32_t k) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Rat& rhs);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& b) { return a *= b; }
  friend Poly operator*(const Rat& a, Poly b) { return b *= a; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

  /// Terms ordered by the fixed variable order (highest first), coefficients
  /// as `p/q` with `/1` omitted, exponents as `^k`.
  std::string to_string() const;
  std::string to_latex() const;
  /// Terms in printing order, each with its factors in presentation order.
  std::vector<std::pair<std::vector<Monomial::Factor>, Rat>> display_terms() const;

  friend std::ostream& operator<<(std::ostream& out, const Poly& p);

  /// In-place accumulation of c·mono.
  void add_term(const Monomial& mono, const Rat& coeff);

 private:

  TermMap terms_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly pow(const Poly& base, std::uint32_t exponent);

/// Replaces each mapped variable by its image; unmapped variables stay.
Poly substitute(const Poly& p, const Substitution& s);

/// substitute applied to each factor, then multiplied out. Much cheaper than
/// expanding the product first when the images are large.
Poly substitute_product(const std::vector<Poly>& factors, const Substitution& s);

/// Returns r with r * q == p, or throws Error(kNotDivisible).
Poly divide_exact(const Poly& p, const Poly& q);
std::optional<Poly> try_divide_exact(const Poly& p, const Poly& q);

/// Divides by h^k exactly, or throws Error(kNotDivisible).
Poly divide_by_var_power(const Poly& p, VarId v, std::uint32_t k);

Poly partial(const Poly& p, VarId v);

/// Minimum over terms of the total exponent carried by `vars`.
/// std::nullopt stands for +infinity (the zero polynomial).
std::optional<std::uint32_t> order_in(const Poly& p, const std::set<VarId>& vars);

/// Maps an identifier to a variable; used by the polynomial reader.
using VarResolver = std::function<VarId(std::string_view)>;

/// Resolves h, X_0, T and W; every other identifier becomes a symbol.
VarId default_resolve(std::string_view ident);

/// Reads the text syntax produced by Poly::to_string (and a little more:
/// parentheses, repeated factors, leading signs). Throws Error(kParseError).
Poly parse_poly(std::string_view text, const VarResolver& resolve = default_resolve);

}  // namespace gds
