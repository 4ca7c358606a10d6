#include "colperm/bijections.hpp"

namespace colperm {

ColouredPermutation insert_prefix(const ColouredPermutation& phi, int h,
                                  int colour) {
  const int n = phi.size();
  if (h < 1 || h > n + 1) {
    throw std::invalid_argument("inserted symbol must lie in 1..n+1");
  }
  if (colour < 1 || colour > phi.rank()) {
    throw std::invalid_argument("colour outside 1..rank");
  }
  std::vector<Element> elems;
  elems.reserve(static_cast<std::size_t>(n) + 1);
  elems.push_back({h, colour});
  for (const Element& e : phi.elements()) {
    elems.push_back({e.symbol < h ? e.symbol : e.symbol + 1, e.colour});
  }
  return ColouredPermutation(std::move(elems), phi.rank());
}

ColouredPermutation insert_symbol_one(const ColouredPermutation& beta,
                                      int position, int colour) {
  const int n = beta.size();
  if (position < 1 || position > n + 1) {
    throw std::invalid_argument("insertion position must lie in 1..n+1");
  }
  if (colour < 1 || colour > beta.rank()) {
    throw std::invalid_argument("colour outside 1..rank");
  }
  std::vector<Element> elems;
  elems.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n + 1; ++i) {
    if (i == position) {
      elems.push_back({1, colour});
    } else {
      const Element& e = beta.element_at(i < position ? i : i - 1);
      elems.push_back({e.symbol + 1, e.colour});
    }
  }
  return ColouredPermutation(std::move(elems), beta.rank());
}

SymbolOneRemoval delete_symbol_one(const ColouredPermutation& beta) {
  const int n = beta.size();
  if (n < 1) {
    throw std::invalid_argument("cannot delete from the empty permutation");
  }
  SymbolOneRemoval out;
  std::vector<Element> elems;
  elems.reserve(static_cast<std::size_t>(n) - 1);
  for (int i = 1; i <= n; ++i) {
    const Element& e = beta.element_at(i);
    if (e.symbol == 1) {
      out.position = i;
      out.colour = e.colour;
    } else {
      elems.push_back({e.symbol - 1, e.colour});
    }
  }
  out.rest = ColouredPermutation(std::move(elems), beta.rank());
  return out;
}

ColouredPermutation complement_perm(const ColouredPermutation& psi) {
  const int n = psi.size();
  std::vector<Element> elems;
  elems.reserve(static_cast<std::size_t>(n));
  for (const Element& e : psi.elements()) {
    elems.push_back({n + 1 - e.symbol, e.colour});
  }
  return ColouredPermutation(std::move(elems), psi.rank());
}

}  // namespace colperm
