#ifndef SPREAD_ENUMERATE_HPP
#define SPREAD_ENUMERATE_HPP

// One representative per permutation-similarity class of S_m({a,1}):
// canonical graph enumeration (lexicographically minimal upper-triangle
// bit string) plus diagonal augmentation.

#include "spread/bohemian.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace spread {

// Canonical adjacency representative of a graph-isomorphism class.
// Bits are the strict upper triangle in colex order; bit set = edge.
struct GraphClass {
  int m = 0;
  std::uint64_t adj = 0;
  friend bool operator==(const GraphClass &a, const GraphClass &b) {
    return a.m == b.m && a.adj == b.adj;
  }
  friend bool operator<(const GraphClass &a, const GraphClass &b) {
    return a.adj < b.adj;
  }
};

// lexicographically minimal adjacency bit string over all vertex
// permutations (bit (0,1) most significant); idempotent
std::uint64_t canonical_form(std::uint64_t adj, int m);

// exactly one representative per isomorphism class, sorted; 2 <= m <= 9
std::vector<GraphClass> nonisomorphic_graphs(int m);

// E + (a-1)(D+G): a G-bit of 1 places entry a off-diagonal, a dmask bit
// of 1 places a on the diagonal
SymBohemian assemble(const GraphClass &g, std::uint16_t dmask,
                     std::optional<Rat> a);

// (2^m - 1) * U_m semi-canonical matrices: every diagonal mask except
// all-ones, in canonical graph order then mask order
void for_each_candidate(int m, const std::optional<Rat> &a,
                        const std::function<void(const SymBohemian &)> &fn);
std::vector<SymBohemian> candidates(int m, const std::optional<Rat> &a);

std::string to_graph6(const GraphClass &g);
GraphClass from_graph6(const std::string &line);

}  // namespace spread

#endif
