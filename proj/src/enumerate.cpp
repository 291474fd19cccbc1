#include "spread/enumerate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>

namespace spread {

namespace {

constexpr int kMaxM = 9;

struct Canon {
  int m, nb;
  std::array<std::uint16_t, kMaxM> rows{};  // adjacency row bitmasks
  std::uint64_t best;

  // depth d: positions 0..d-1 already assigned; cur holds C(d,2) bits,
  // most significant bit first
  void dfs(int d, std::uint16_t used, std::array<int, kMaxM> &perm,
           std::uint64_t cur) {
    if (d == m) {
      if (cur < best) best = cur;
      return;
    }
    // candidate blocks: adjacency of v to the placed vertices, bit for
    // perm[0] most significant
    struct Cand {
      std::uint64_t block;
      int v;
    };
    std::array<Cand, kMaxM> cands;
    int nc = 0;
    for (int v = 0; v < m; ++v) {
      if ((used >> v) & 1) continue;
      std::uint64_t block = 0;
      for (int t = 0; t < d; ++t)
        block = (block << 1) | ((rows[static_cast<size_t>(v)] >> perm[static_cast<size_t>(t)]) & 1);
      cands[static_cast<size_t>(nc++)] = {block, v};
    }
    std::sort(cands.begin(), cands.begin() + nc,
              [](const Cand &a, const Cand &b) { return a.block < b.block; });
    const int placed_bits = d * (d + 1) / 2;  // C(d+1,2) after this level
    for (int c = 0; c < nc; ++c) {
      std::uint64_t next = (cur << d) | cands[static_cast<size_t>(c)].block;
      if (next > (best >> (nb - placed_bits))) return;  // sorted: the rest are no better
      perm[static_cast<size_t>(d)] = cands[static_cast<size_t>(c)].v;
      dfs(d + 1, used | std::uint16_t(1 << cands[static_cast<size_t>(c)].v), perm, next);
    }
  }
};

}  // namespace

std::uint64_t canonical_form(std::uint64_t adj, int m) {
  if (m < 1 || m > kMaxM) throw std::domain_error("canonical_form: m out of range");
  const int nb = m * (m - 1) / 2;
  if (nb == 0) return 0;
  Canon c;
  c.m = m;
  c.nb = nb;
  c.best = (nb == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << nb) - 1);
  for (int j = 1; j < m; ++j)
    for (int i = 0; i < j; ++i)
      if ((adj >> pair_index(i, j)) & 1) {
        c.rows[static_cast<size_t>(i)] |= std::uint16_t(1) << j;
        c.rows[static_cast<size_t>(j)] |= std::uint16_t(1) << i;
      }
  std::array<int, kMaxM> perm{};
  c.dfs(0, 0, perm, 0);
  // best is stored MSB-first over nb bits; convert back to colex bit order.
  // Bit t of the string (t-th pair in colex order) sits at position nb-1-t.
  std::uint64_t out = 0;
  for (int t = 0; t < nb; ++t)
    if ((c.best >> (nb - 1 - t)) & 1) out |= std::uint64_t(1) << t;
  return out;
}

namespace {

// inverse of the conversion at the end of canonical_form
std::uint64_t to_msb_string(std::uint64_t adj, int nb) {
  std::uint64_t out = 0;
  for (int t = 0; t < nb; ++t)
    if ((adj >> t) & 1) out |= std::uint64_t(1) << (nb - 1 - t);
  return out;
}

}  // namespace

std::vector<GraphClass> nonisomorphic_graphs(int m) {
  if (m < 2 || m > kMaxM) throw std::domain_error("nonisomorphic_graphs: 2 <= m <= 9");
  // canonical augmentation: extend each canonical (n-1)-vertex graph by a
  // new vertex with every neighbourhood, canonicalize, dedupe
  std::vector<std::uint64_t> cur{0};  // single graph on one vertex
  for (int n = 2; n <= m; ++n) {
    const int parent_bits = (n - 1) * (n - 2) / 2;
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> next;
    for (std::uint64_t parent : cur) {
      for (std::uint32_t nbhd = 0; nbhd < (1u << (n - 1)); ++nbhd) {
        std::uint64_t child = parent | (std::uint64_t(nbhd) << parent_bits);
        std::uint64_t canon = canonical_form(child, n);
        if (seen.insert(canon).second) next.push_back(canon);
      }
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end(), [m](std::uint64_t a, std::uint64_t b) {
    return to_msb_string(a, m * (m - 1) / 2) < to_msb_string(b, m * (m - 1) / 2);
  });
  std::vector<GraphClass> out;
  out.reserve(cur.size());
  for (std::uint64_t adj : cur) out.push_back({m, adj});
  return out;
}

SymBohemian assemble(const GraphClass &g, std::uint16_t dmask,
                     std::optional<Rat> a) {
  SymBohemian s;
  s.m = g.m;
  s.a_value = std::move(a);
  const int nb = g.m * (g.m - 1) / 2;
  const std::uint64_t umask = (nb == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << nb) - 1);
  s.upper = ~g.adj & umask;                                        // edge -> entry a
  s.diag = static_cast<std::uint16_t>(~dmask & ((1u << g.m) - 1));  // mask -> a
  return s;
}

void for_each_candidate(int m, const std::optional<Rat> &a,
                        const std::function<void(const SymBohemian &)> &fn) {
  auto graphs = nonisomorphic_graphs(m);
  const std::uint16_t all_ones = static_cast<std::uint16_t>((1u << m) - 1);
  for (const auto &g : graphs)
    for (std::uint16_t d = 0; d < all_ones; ++d)  // skip the all-ones mask
      fn(assemble(g, d, a));
}

std::vector<SymBohemian> candidates(int m, const std::optional<Rat> &a) {
  std::vector<SymBohemian> out;
  for_each_candidate(m, a, [&](const SymBohemian &s) { out.push_back(s); });
  return out;
}

std::string to_graph6(const GraphClass &g) {
  std::string s;
  s.push_back(static_cast<char>(g.m + 63));
  const int nb = g.m * (g.m - 1) / 2;
  int bit = 0;
  while (bit < nb) {
    int chunk = 0;
    for (int i = 0; i < 6; ++i) {
      chunk <<= 1;
      if (bit < nb && ((g.adj >> bit) & 1)) chunk |= 1;
      ++bit;
    }
    s.push_back(static_cast<char>(chunk + 63));
  }
  return s;
}

GraphClass from_graph6(const std::string &line) {
  if (line.empty()) throw std::invalid_argument("graph6: empty line");
  int m = line[0] - 63;
  if (m < 1 || m > kMaxM) throw std::invalid_argument("graph6: unsupported order");
  const int nb = m * (m - 1) / 2;
  std::uint64_t adj = 0;
  int bit = 0;
  for (size_t c = 1; c < line.size() && bit < nb; ++c) {
    int chunk = line[c] - 63;
    if (chunk < 0 || chunk > 63) throw std::invalid_argument("graph6: bad character");
    for (int i = 5; i >= 0 && bit < nb; --i, ++bit)
      if ((chunk >> i) & 1) adj |= std::uint64_t(1) << bit;
  }
  if (bit < nb) throw std::invalid_argument("graph6: truncated line");
  return {m, adj};
}

}  // namespace spread
