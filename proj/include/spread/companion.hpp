#ifndef SPREAD_COMPANION_HPP
#define SPREAD_COMPANION_HPP

// Kronecker spread companion Sc = S (x) I - I (x) S: an m^2 x m^2
// symmetric matrix whose spectrum is the pairwise eigenvalue differences
// of S, so its largest eigenvalue is the spread of S.

#include "spread/poly.hpp"

#include <vector>

namespace spread {

struct SpreadCompanion {
  int m = 0;
  std::vector<std::vector<Rat>> sc;  // m^2 x m^2
};

SpreadCompanion build_companion(const std::vector<std::vector<Rat>> &s);

std::vector<std::vector<double>> companion_double(const SpreadCompanion &c);

// charpoly of Sc in T; for integer S this equals the spread resultant
// res_lambda(p(lambda), p(lambda+T)) of p = charpoly(S)
Poly<Rat> companion_charpoly(const SpreadCompanion &c);

// Rayleigh quotient of Sc at x (x) y; always <= spread(S)
Rat rayleigh_lower_bound(const std::vector<std::vector<Rat>> &s,
                         const std::vector<Rat> &x, const std::vector<Rat> &y);
double rayleigh_lower_bound(const std::vector<std::vector<double>> &s,
                            const std::vector<double> &x,
                            const std::vector<double> &y);

}  // namespace spread

#endif
