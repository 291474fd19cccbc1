#include "spread/companion.hpp"

#include "spread/bohemian.hpp"

#include <stdexcept>

namespace spread {

SpreadCompanion build_companion(const std::vector<std::vector<Rat>> &s) {
  const int m = static_cast<int>(s.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (s[i][j] != s[j][i]) throw std::invalid_argument("matrix is not symmetric");
  SpreadCompanion c;
  c.m = m;
  c.sc.assign(static_cast<size_t>(m) * m, std::vector<Rat>(static_cast<size_t>(m) * m));
  // row/column index (i,j) <-> i*m + j
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
          Rat v(0);
          if (j == l) v += s[i][k];
          if (i == k) v -= s[j][l];
          c.sc[static_cast<size_t>(i * m + j)][static_cast<size_t>(k * m + l)] = v;
        }
  return c;
}

std::vector<std::vector<double>> companion_double(const SpreadCompanion &c) {
  const size_t n = c.sc.size();
  std::vector<std::vector<double>> d(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) d[i][j] = c.sc[i][j].get_d();
  return d;
}

Poly<Rat> companion_charpoly(const SpreadCompanion &c) {
  return berkowitz_charpoly(c.sc);
}

Rat rayleigh_lower_bound(const std::vector<std::vector<Rat>> &s,
                         const std::vector<Rat> &x, const std::vector<Rat> &y) {
  const int m = static_cast<int>(s.size());
  Rat xx(0), yy(0);
  for (const Rat &v : x) xx += v * v;
  for (const Rat &v : y) yy += v * v;
  if (xx == 0 || yy == 0) throw std::invalid_argument("zero vector");
  SpreadCompanion c = build_companion(s);
  std::vector<Rat> xy(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      xy[static_cast<size_t>(i * m + j)] = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
  Rat q(0);
  for (size_t r = 0; r < xy.size(); ++r) {
    Rat row(0);
    for (size_t t = 0; t < xy.size(); ++t) row += c.sc[r][t] * xy[t];
    q += xy[r] * row;
  }
  return q / (xx * yy);
}

double rayleigh_lower_bound(const std::vector<std::vector<double>> &s,
                            const std::vector<double> &x,
                            const std::vector<double> &y) {
  const size_t m = s.size();
  double xx = 0, yy = 0;
  for (double v : x) xx += v * v;
  for (double v : y) yy += v * v;
  if (xx == 0 || yy == 0) throw std::invalid_argument("zero vector");
  // (x (x) y)' Sc (x (x) y) = (x'Sx)(y'y) - (x'x)(y'Sy)
  double xsx = 0, ysy = 0;
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      xsx += x[i] * s[i][j] * x[j];
      ysy += y[i] * s[i][j] * y[j];
    }
  return (xsx * yy - xx * ysy) / (xx * yy);
}

}  // namespace spread
