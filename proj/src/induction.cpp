#include "rauzy/induction.hpp"

#include <algorithm>

#include "rauzy/error.hpp"

namespace rauzy {

char move_char(Move m) noexcept {
  switch (m) {
    case Move::Top: return 't';
    case Move::Bottom: return 'b';
    case Move::Flip: return 'f';
  }
  return '?';
}

Move move_from_char(char c) {
  switch (c) {
    case 't': return Move::Top;
    case 'b': return Move::Bottom;
    case 'f': return Move::Flip;
    default: fail(ErrorKind::Parse, std::string("unknown move '") + c + "' (expected t, b or f)");
  }
}

namespace {

void require_irreducible(const LabeledPermutation& p) {
  if (p.top_last() == p.bottom_last())
    fail(ErrorKind::InvalidMove, "winner equals loser in " + p.display());
  if (!is_irreducible(p)) fail(ErrorKind::InvalidMove, "reducible permutation " + p.display());
}

// Removes the last entry of `row` and reinserts it right after `anchor`.
std::vector<Letter> reinsert_after(std::vector<Letter> row, Letter anchor) {
  const Letter moved = row.back();
  row.pop_back();
  auto it = std::find(row.begin(), row.end(), anchor);
  row.insert(it + 1, moved);
  return row;
}

}  // namespace

EdgeRecord apply_top(const LabeledPermutation& p) {
  require_irreducible(p);
  const Letter winner = p.top_last(), loser = p.bottom_last();
  LabeledPermutation target(p.alphabet_ptr(), p.top(), reinsert_after(p.bottom(), winner));
  return EdgeRecord{Move::Top, p, std::move(target), winner, loser};
}

EdgeRecord apply_bottom(const LabeledPermutation& p) {
  require_irreducible(p);
  const Letter winner = p.bottom_last(), loser = p.top_last();
  LabeledPermutation target(p.alphabet_ptr(), reinsert_after(p.top(), winner), p.bottom());
  return EdgeRecord{Move::Bottom, p, std::move(target), winner, loser};
}

EdgeRecord apply_flip(const LabeledPermutation& p) {
  std::vector<Letter> top(p.bottom().rbegin(), p.bottom().rend());
  std::vector<Letter> bottom(p.top().rbegin(), p.top().rend());
  LabeledPermutation target(p.alphabet_ptr(), std::move(top), std::move(bottom));
  return EdgeRecord{Move::Flip, p, std::move(target), std::nullopt, std::nullopt};
}

EdgeRecord apply_move(const LabeledPermutation& p, Move m) {
  switch (m) {
    case Move::Top: return apply_top(p);
    case Move::Bottom: return apply_bottom(p);
    case Move::Flip: return apply_flip(p);
  }
  fail(ErrorKind::Internal, "unknown move kind");
}

IntMatrix edge_matrix(const EdgeRecord& e) {
  IntMatrix m = IntMatrix::identity(e.source.size());
  if (e.kind != Move::Flip) m(*e.winner, *e.loser) += 1;
  return m;
}

}  // namespace rauzy
