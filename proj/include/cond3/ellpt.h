#ifndef COND3_ELLPT_H_
#define COND3_ELLPT_H_

#include "cond3/cycnum.h"
#include "cond3/qgroup.h"
#include "cond3/report.h"

namespace cond3 {

// E: z^2 + z = w^3 and E': z^2 + z = w^3 + w over F_2.
enum class Curve { kE, kEprime };

// Projective point count over F_{2^m}, 1 <= m <= 24.
long count_points(Curve c, int m);

struct TwistedMap {
  QElem g;
  long n = 1;
  int f = 1;
};

// Smallest d >= 1 with (g,n)^d = (1, nd).
int cocycle_order(const TwistedMap& t);
// Degree M of the search field F_{2^M}: lcm(f n d, 2).
int search_degree(const TwistedMap& t);

// Points of E (with infinity) fixed by (z,w) -> (z^(q^-n) + a^-1 b w^(q^-n) + a^-1 c,
// a (w^(q^-n) + (a^-1 b)^2)). Throws ResourceBound when the search degree
// exceeds max_degree.
long fixed_point_count(const TwistedMap& t, int max_degree = 24);
// Trace on H^1 (pullback by the inverse): 1 + q^n - #Fix.
long lefschetz_trace(const TwistedMap& t, int max_degree = 24);
// lefschetz_trace * q^-n.
CycNum twisted_trace(const TwistedMap& t, int max_degree = 24);

Report verify_point_counts(int f);
Report verify_h1_character(int f, const Toggles& t, int max_degree = 24);
Report verify_action_preserves_curve();
// Hasse bounds, the trace recursion a_2m = a_m^2 - 2^(m+1), conjugation
// invariance of fixed-point counts and the convention check.
Report verify_curve_properties(int f, const Toggles& t, int max_degree = 24);

}  // namespace cond3

#endif  // COND3_ELLPT_H_
