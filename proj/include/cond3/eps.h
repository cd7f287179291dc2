#ifndef COND3_EPS_H_
#define COND3_EPS_H_

#include <string>
#include <vector>

#include "cond3/cycnum.h"
#include "cond3/lfield.h"
#include "cond3/qgroup.h"
#include "cond3/report.h"

namespace cond3 {

// sum over k = F_{2^f} of chi_2(Tr(xi^3)); f even, f <= 12.
CycNum gauss_cubic(int f);
// sum over k of chi_2(Tr(xi + xi^3)); f odd, f <= 13.
CycNum gauss_cubic_linear(int f);
// Affine solutions of z^2 + z = w^3 (linear = false) or w^3 + w over F_{2^f}.
long affine_count(int f, bool linear);

// Exponent j with v = z^j (z a primitive 24th root of unity), or -1.
int root_exponent(const CycNum& v);

// A character value table on the unit quotient U_E^1 / U_E^3, whose elements
// 1 + x1 u + x2 u^2 (x1, x2 in k) are indexed by (pos(x1), pos(x2)). Values are
// exponents of the primitive 24th root of unity, -1 when undetermined.
class UnitQuotient {
 public:
  explicit UnitQuotient(const Tower& T);
  int size() const { return static_cast<int>(k_.size() * k_.size()); }
  int index(u64 x1, u64 x2) const;
  u64 x1(int id) const { return k_[id / k_.size()]; }
  u64 x2(int id) const { return k_[id % k_.size()]; }
  int mul(int a, int b) const;
  int identity() const { return 0; }
  // Element of a unit series known modulo u^3 with constant term 1; -1 otherwise.
  int of_series(const Series& s) const;

 private:
  const GF2Field* K_;
  std::vector<u64> k_;
};

struct PhiConstraint {
  int f = 0;
  std::vector<int> values;       // exponents mod 24, -1 when undetermined
  std::vector<char> norm_subgroup;  // closure of the computed norm elements
  int determined = 0;
  CycNum phi_delta2_cubed;
  CycNum phi_delta2;            // f odd
  CycNum phi_delta2_sq_plus_delta2_plus_1;  // f odd
  std::vector<std::string> conflicts;
};

// Builds the value table from the U^2 rule, the norm elements of the tower and
// the special values; each check is added to `rep`.
PhiConstraint build_phi_constraints(const Tower& T, const Toggles& t, Report* rep);

// Every character of the unit quotient agreeing with the table, as exponent tables.
std::vector<std::vector<int>> phi_extensions(const UnitQuotient& G, const std::vector<int>& values);

// phi(delta2^3)^-1 sum_xi phi(1 + xi u)^-1 psi_E(xi u^-2).
CycNum twisted_unit_sum(const Tower& T, const UnitQuotient& G, const PhiConstraint& c, const std::vector<int>& ext);

Report verify_gauss_cubic(int f);
Report verify_gauss_cubic_linear(int f);
// Constraint table, all consistent extensions, the level-one sum and the
// epsilon-factor assembly for every zeta' in the sweep.
Report verify_epsilon(int f, const Toggles& t, int precision = 60);
// Partial-character and toggle-independence properties.
Report verify_eps_properties(int f, const Toggles& t, int precision = 60);

}  // namespace cond3

#endif  // COND3_EPS_H_
