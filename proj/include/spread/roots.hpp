#ifndef SPREAD_ROOTS_HPP
#define SPREAD_ROOTS_HPP

// Real-root isolation (Descartes' rule of signs with interval bisection,
// exact rational endpoints) and Sturm-sequence root counting.

#include "spread/poly.hpp"

#include <vector>

namespace spread {

// Closed interval with exact rational endpoints.  For an isolated root
// the interval contains exactly one real root of the query polynomial.
struct RatInterval {
  Rat lo, hi;
  bool point() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  friend bool operator==(const RatInterval &a, const RatInterval &b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

// One disjoint interval per distinct real root, sorted ascending, each of
// width <= width.  Operates on the square-free part internally; exact
// rational roots come back as degenerate [r, r] intervals.  Endpoints are
// dyadic (bisection of a power-of-two root bound).
std::vector<RatInterval> isolate_real_roots(const ZPoly &p, const Rat &width);

// Number of distinct real roots in (lo, hi].  Endpoint roots are the
// caller's problem: factor them out first.
int sturm_count(const ZPoly &p, const Rat &lo, const Rat &hi);

// open-interval companion; identical given the no-endpoint-root precondition
int sturm_count_open(const ZPoly &p, const Rat &lo, const Rat &hi);

// distinct real roots strictly greater than x (counts in (x, B] for a
// root bound B); requires p(x) != 0
int count_roots_above(const ZPoly &p, const Rat &x);

// smallest power of two exceeding the Cauchy root bound of p
Rat root_bound_pow2(const ZPoly &p);

}  // namespace spread

#endif
