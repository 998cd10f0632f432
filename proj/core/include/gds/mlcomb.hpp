#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gds/charts.hpp"
#include "gds/poly.hpp"
#include "gds/presentation.hpp"
#include "gds/report.hpp"
#include "gds/trees.hpp"

namespace gds {

/// Throws kNotFine.
bool ml_trivial(const LabelledTree& lt);

struct CombPolynomial {
  Poly p;         // in T
  Rat root;       // distinguished root
  Poly cofactor;  // p / (T − root)
};

struct CombNormalForm {
  int n = 0;
  std::vector<CombPolynomial> polys;  // P_1 .. P_n
};

/// P_i is the sibling polynomial of the i-th chain node. The root of P_i is
/// the label of the next chain node, or the smallest leaf label for P_n.
/// Throws kNotAComb (also for the trivial tree) and kNotFine.
CombNormalForm comb_normal_form(const LabelledTree& lt);

/// x, y_1, ..., y_{n+1}.
std::vector<VarId> comb_variables(int n);

/// x y_{i+1} = P~_1(y_1)...P~_{i−1}(y_{i−1}) P_i(y_i) for 1 ≤ i ≤ n, then
/// (y_{j−1} − λ_{j−1}) y_{i+1} = y_j P~_j(y_j)...P~_{i−1}(y_{i−1}) P_i(y_i)
/// for 2 ≤ j ≤ i ≤ n.
std::vector<Generator> comb_equations(const CombNormalForm& nf);

/// x ↦ h, y_1 ↦ X_0, y_k ↦ X of the (k−1)-th chain node. Throws kNotAComb.
Substitution comb_renaming(const LabelledTree& lt);

/// Renamed comb equations coincide with the presentation generators.
CheckReport comb_presentation_check(const LabelledTree& lt);

struct DanielewskiForm {
  int n = 0;  // chain length
  Poly p;     // in T
};

/// Present iff the tree is a nontrivial comb with all leaves on one level.
std::optional<DanielewskiForm> ordinary_danielewski_form(const LabelledTree& lt);

/// x z − P(y).
Poly danielewski_surface(const Poly& p);

/// x z − P(y) vanishes on every chart with x = h, y the variable of the
/// second to last chain node (X_0 when n = 1) and z that of the last.
CheckReport collapsed_surface_check(const LabelledTree& lt, const std::vector<ChartExpansion>& charts);

struct QHPData {
  int m = 1;
  int n = 1;
  int q = 0;
  Poly surface;                      // x z − (t^n − 1)
  std::array<int, 3> action_exponents{};  // residues of (1, q, −1) mod m
  int invariance_residue = 0;        // q n mod m
  bool invariant = true;             // invariance_residue == 0
};

/// Throws kInvalidArgument unless m, n ≥ 1, kDivisibilityViolation unless
/// n | m, and kGcdViolation unless gcd(q, m/n) = 1.
QHPData qhp_quotient_data(int m, int n, int q);

}  // namespace gds
