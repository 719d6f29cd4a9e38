#include "rauzy/surface.hpp"

#include <map>
#include <numeric>

#include "rauzy/error.hpp"
#include "rauzy/rational.hpp"

namespace rauzy {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Rank over Q by Gaussian elimination.
std::size_t rank_of(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

GluedSurface glue(const LabeledPermutation& p) {
  const std::size_t n = p.size();
  // Slots 0..n are top corners T0..Tn, n+1..2n+1 are B0..Bn.
  UnionFind uf(2 * n + 2);
  auto top_slot = [](std::size_t i) { return i; };
  auto bottom_slot = [n](std::size_t i) { return n + 1 + i; };
  uf.unite(top_slot(0), bottom_slot(0));
  uf.unite(top_slot(n), bottom_slot(n));
  for (Letter x = 0; x < n; ++x) {
    const std::size_t i = p.top_position(x), j = p.bottom_position(x);
    uf.unite(top_slot(i), bottom_slot(j));
    uf.unite(top_slot(i + 1), bottom_slot(j + 1));
  }

  GluedSurface s;
  s.letters = n;
  s.from_irreducible = is_irreducible(p);
  std::map<std::size_t, std::size_t> class_id;  // root -> dense id, in corner order
  auto dense = [&](std::size_t slot) {
    auto [it, inserted] = class_id.try_emplace(uf.find(slot), class_id.size());
    return it->second;
  };
  s.top_corner_class.resize(n + 1);
  s.bottom_corner_class.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) s.top_corner_class[i] = dense(top_slot(i));
  for (std::size_t i = 0; i <= n; ++i) s.bottom_corner_class[i] = dense(bottom_slot(i));
  s.vertex_count = class_id.size();
  s.euler_char = static_cast<long>(s.vertex_count) - static_cast<long>(n) + 1;
  s.genus = (2 - s.euler_char) / 2;

  s.tail.resize(n);
  s.head.resize(n);
  s.side_closed.resize(n);
  for (Letter x = 0; x < n; ++x) {
    s.tail[x] = s.top_corner_class[p.top_position(x)];
    s.head[x] = s.top_corner_class[p.top_position(x) + 1];
    s.side_closed[x] = s.tail[x] == s.head[x];
  }
  // Walking the boundary once crosses every top side forwards and every
  // bottom side backwards.
  s.face_boundary.assign(n, 0);
  for (Letter x : p.top()) s.face_boundary[x] += 1;
  for (Letter x : p.bottom()) s.face_boundary[x] -= 1;

  s.side_homology_nonzero.resize(n);
  for (Letter x = 0; x < n; ++x)
    s.side_homology_nonzero[x] = s.side_closed[x] && side_homology_nonzero(s, x);
  return s;
}

bool side_homology_nonzero(const GluedSurface& s, Letter x) {
  if (x >= s.letters) fail(ErrorKind::Domain, "side index out of range");
  if (s.tail[x] != s.head[x]) fail(ErrorKind::Domain, "side is not a closed curve");
  // A closed side is a 1-cycle e_x; it is trivial in H_1 iff e_x = c * d(face)
  // for some integer c.
  for (Letter y = 0; y < s.letters; ++y)
    if (y != x && s.face_boundary[y] != 0) return true;
  return s.face_boundary[x] != 1 && s.face_boundary[x] != -1;
}

std::size_t homology_rank(const GluedSurface& s) {
  std::vector<std::vector<Rational>> d1(s.vertex_count, std::vector<Rational>(s.letters));
  for (Letter x = 0; x < s.letters; ++x) {
    d1[s.head[x]][x] += 1;
    d1[s.tail[x]][x] -= 1;
  }
  std::vector<std::vector<Rational>> d2(1, std::vector<Rational>(s.letters));
  for (Letter x = 0; x < s.letters; ++x) d2[0][x] = s.face_boundary[x];
  return s.letters - rank_of(std::move(d1)) - rank_of(std::move(d2));
}

StratumLabel stratum_of_central(std::size_t n) {
  if (n < 2) fail(ErrorKind::Domain, "stratum needs n >= 2");
  StratumLabel out;
  out.genus = static_cast<long>(n / 2);
  const long g = out.genus;
  if (n % 2 == 0)
    out.zero_orders = {2 * g - 2};
  else
    out.zero_orders = {g - 1, g - 1};
  out.label = "H(";
  for (std::size_t i = 0; i < out.zero_orders.size(); ++i)
    out.label += (i ? "," : "") + std::to_string(out.zero_orders[i]);
  out.label += ")";
  out.torus_warning = g < 2;
  return out;
}

}  // namespace rauzy
