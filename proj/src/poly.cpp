#include "spread/poly.hpp"

#include <sstream>

namespace spread {

std::string poly_to_text(const ZPoly &p, const std::string &var) {
  std::ostringstream os;
  os << var << ":";
  if (p.zero()) {
    os << " 0";
    return os.str();
  }
  for (const auto &c : p.coeffs()) os << ' ' << c.get_str();
  return os.str();
}

std::pair<std::string, ZPoly> poly_from_text(const std::string &line) {
  auto colon = line.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("polynomial text: missing variable tag");
  std::string var = line.substr(0, colon);
  std::istringstream is(line.substr(colon + 1));
  std::vector<Int> c;
  std::string tok;
  while (is >> tok) c.emplace_back(tok);
  return {var, ZPoly(std::move(c))};
}

std::string bipoly_to_text(const TAPoly &p, const std::string &main_var,
                           const std::string &sub_var) {
  std::ostringstream os;
  os << main_var << '/' << sub_var << ":";
  for (const auto &c : p.coeffs()) {
    os << " [";
    for (size_t i = 0; i < c.coeffs().size(); ++i) {
      if (i) os << ' ';
      os << c[i].get_str();
    }
    os << ']';
  }
  return os.str();
}

TAPoly bipoly_from_text(const std::string &line) {
  auto colon = line.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("bivariate text: missing variable tag");
  std::vector<ZPoly> coeffs;
  size_t pos = colon + 1;
  while (true) {
    auto open = line.find('[', pos);
    if (open == std::string::npos) break;
    auto close = line.find(']', open);
    if (close == std::string::npos)
      throw std::invalid_argument("bivariate text: unbalanced bracket");
    std::istringstream is(line.substr(open + 1, close - open - 1));
    std::vector<Int> c;
    std::string tok;
    while (is >> tok) c.emplace_back(tok);
    coeffs.emplace_back(std::move(c));
    pos = close + 1;
  }
  return TAPoly(std::move(coeffs));
}

}  // namespace spread
