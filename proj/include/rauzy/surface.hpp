#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rauzy/perm.hpp"

namespace rauzy {

// Corners of the 2n-gon. Top corners T0..Tn sit left to right along the top
// row, bottom corners B0..Bn along the bottom row; T0 = B0 (leftmost) and
// Tn = Bn (rightmost), leaving 2n distinct corners.
struct Corner {
  enum class Row { Top, Bottom } row;
  std::size_t index;
};

// The surface X(pi_t, pi_b) as a CW complex: one vertex per corner class, one
// edge per letter (oriented left to right), one face.
struct GluedSurface {
  std::size_t letters = 0;
  std::vector<std::size_t> top_corner_class;     // size n+1
  std::vector<std::size_t> bottom_corner_class;  // size n+1
  std::size_t vertex_count = 0;
  long euler_char = 0;
  long genus = 0;
  // Cellular boundaries: each side x runs from tail[x] to head[x]; the face
  // boundary assigns +1 per top traversal and -1 per bottom traversal.
  std::vector<std::size_t> tail;
  std::vector<std::size_t> head;
  std::vector<long> face_boundary;
  std::vector<bool> side_closed;
  std::vector<bool> side_homology_nonzero;
  bool from_irreducible = true;

  std::size_t corner_class(const Corner& c) const {
    return c.row == Corner::Row::Top ? top_corner_class.at(c.index) : bottom_corner_class.at(c.index);
  }
};

GluedSurface glue(const LabeledPermutation& p);

// Whether the closed side x is nonzero in H_1(X; Z). Throws Domain when the
// side is not closed.
bool side_homology_nonzero(const GluedSurface& s, Letter x);

// rank of H_1(X; Q) from the chain complex, independent of the Euler
// characteristic route.
std::size_t homology_rank(const GluedSurface& s);

struct StratumLabel {
  std::string label;            // "H(2)", "H(1,1)", ...
  long genus = 0;
  std::vector<long> zero_orders;
  bool torus_warning = false;   // genus 1 strata
};

// Stratum of the central component: H(2g-2) for n = 2g, H(g-1,g-1) for n = 2g+1.
StratumLabel stratum_of_central(std::size_t n);

}  // namespace rauzy
