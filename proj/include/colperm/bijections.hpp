#ifndef COLPERM_BIJECTIONS_HPP
#define COLPERM_BIJECTIONS_HPP

#include "colperm/perm.hpp"

namespace colperm {

// Prepends h^(colour) to phi: former symbols < h keep their value, former
// symbols >= h shift up by one, every colour travelling with its symbol.
// h ranges over 1..n+1.
ColouredPermutation insert_prefix(const ColouredPermutation& phi, int h,
                                  int colour);

// Places a new smallest symbol 1^(colour) at the given position (1..n+1),
// shifting every pre-existing symbol up by one.
ColouredPermutation insert_symbol_one(const ColouredPermutation& beta,
                                      int position, int colour);

struct SymbolOneRemoval {
  ColouredPermutation rest;
  int position = 0;  // where symbol 1 sat, 1-based
  int colour = 0;    // its colour
};

// Removes the element carrying symbol 1 and decrements the other symbols,
// colours travelling with their symbols. Left inverse of insert_symbol_one:
// insert_symbol_one(rest, position, colour) reproduces the input.
SymbolOneRemoval delete_symbol_one(const ColouredPermutation& beta);

// Symbol at position i becomes n+1-|psi_i|, colours unchanged. Involution;
// transports occurrences: complementing host and pattern together preserves
// occurrence counts.
ColouredPermutation complement_perm(const ColouredPermutation& psi);

}  // namespace colperm

#endif  // COLPERM_BIJECTIONS_HPP
