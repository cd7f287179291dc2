#ifndef COND3_CHARS_H_
#define COND3_CHARS_H_

#include <utility>
#include <vector>

#include "cond3/cycnum.h"
#include "cond3/qgroup.h"
#include "cond3/report.h"

namespace cond3 {

// Class function on a subgroup H of the finite quotient of Q x| Z, with the
// scalar lambda by which the central element (1, N) acts. The value at
// (g, n0 + kN) is value(g, n0) * lambda^k.
class GChar {
 public:
  GChar(const GradedGroup& g, const Subgroup& h);

  const GradedGroup& group() const { return *g_; }
  const Subgroup& domain() const { return h_; }
  const CycNum& value(int id) const { return vals_[id]; }
  void set_value(int id, const CycNum& v) { vals_[id] = v; }
  const CycNum& lambda() const { return lambda_; }
  void set_lambda(const CycNum& l) { lambda_ = l; }

  CycNum at(const GradedQElem& x) const;
  // Value at an id times lambda^carry.
  CycNum at(int id, int carry) const;
  CycNum degree() const { return vals_[g_->identity()]; }

  GChar operator+(const GChar& o) const;
  GChar operator-(const GChar& o) const;
  GChar operator*(const GChar& o) const;  // pointwise product
  GChar scaled(const CycNum& c) const;
  bool operator==(const GChar& o) const;
  bool is_class_function() const;

 private:
  void check_compatible(const GChar& o) const;

  const GradedGroup* g_;
  Subgroup h_;
  std::vector<CycNum> vals_;
  CycNum lambda_{1};
};

GChar trivial_char(const GradedGroup& g, const Subgroup& h);
GChar induce(const GChar& chi, const Subgroup& target);
GChar restrict(const GChar& chi, const Subgroup& h);
// x -> chi(y^-1 x y) on `domain` (requires y^-1 domain y inside chi's domain).
GChar conjugate(const GChar& chi, int y, const Subgroup& domain);
// Character determined by its values on generators; throws on inconsistency.
GChar from_generators(const GradedGroup& g, const Subgroup& h,
                      const std::vector<std::pair<GradedQElem, CycNum>>& gens, const CycNum& lambda);

// (g, n) -> s^(fn) q^-n with s the chosen square root of -2.
GChar phi0(const GradedGroup& g, const Subgroup& h);
// chi * phi0^-1.
GChar normalize(const GChar& chi);
// Average of a * conj(b) over the common domain after normalization; throws
// std::domain_error unless both normalized central scalars are 1.
CycNum inner_product(const GChar& a, const GChar& b);
// (chi(x)^2 - chi(x^2)) / 2 at each id of the domain.
std::vector<CycNum> determinant(const GChar& chi);

// Faithful character of C4 with g(1,1,gamma0) -> i; on the graded quotient for
// f even this is phi * phi0 on C4 x Z.
GChar build_phi(const GradedGroup& g);
// Ungraded tau = Ind_{C4}^Q phi - Ind_{C6}^Q (phi|Z x 1).
GChar build_tau(const GradedGroup& q);
// f odd: phi1 on C, phi2 on C6 x| Z.
GChar build_phi1(const GradedGroup& g);
GChar build_phi2(const GradedGroup& g);
// tau_q on the full graded quotient.
GChar build_tau_q(const GradedGroup& g);

// Res_K Ind_H chi against the sum over K\G/H of Ind_{K meet xHx^-1}^K (chi^x).
bool mackey_holds(const GChar& chi, const Subgroup& k);
// <Ind chi, psi>_G = <chi, Res psi>_H.
bool frobenius_reciprocity_holds(const GChar& chi, const GChar& psi);

Report verify_tau(const Toggles& t);
Report verify_tau_q(int f, const Toggles& t);
Report verify_hom_dimensions(int f, const Toggles& t);
Report verify_quadratic_induction(int f, const Toggles& t);
Report verify_tau_trace(int f, const Toggles& t);
Report verify_det_tau(int f, const Toggles& t);
// Reciprocity, Mackey, class-function and degree properties on the pairs used.
Report verify_character_properties(int f, const Toggles& t);

}  // namespace cond3

#endif  // COND3_CHARS_H_
