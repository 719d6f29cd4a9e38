#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rauzy/linalg.hpp"
#include "rauzy/perm.hpp"

namespace rauzy {

enum class Move { Top, Bottom, Flip };

char move_char(Move m) noexcept;  // 't', 'b', 'f'
Move move_from_char(char c);      // throws Parse

struct EdgeRecord {
  Move kind;
  LabeledPermutation source;
  LabeledPermutation target;
  std::optional<Letter> winner;  // empty iff kind == Flip
  std::optional<Letter> loser;
};

// Top move: the top row wins. The loser (last bottom letter) is reinserted in
// the bottom row immediately to the right of the winner. Reducible inputs are
// rejected with InvalidMove.
EdgeRecord apply_top(const LabeledPermutation& p);

// Bottom move: the bottom row wins; the top row is edited symmetrically.
EdgeRecord apply_bottom(const LabeledPermutation& p);

// Both rows reversed and swapped. Defined on every input.
EdgeRecord apply_flip(const LabeledPermutation& p);

EdgeRecord apply_move(const LabeledPermutation& p, Move m);

// Id + E(winner, loser) for Rauzy moves, Id for flips.
IntMatrix edge_matrix(const EdgeRecord& e);

}  // namespace rauzy
