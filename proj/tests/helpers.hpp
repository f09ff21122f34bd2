#ifndef MIDEAL_TESTS_HELPERS_HPP
#define MIDEAL_TESTS_HELPERS_HPP

#include <cassert>
#include <string>

#include "mideal/io.hpp"

// idl("x y", "x^2, x*y") -> the ideal (x^2, xy) in K[x,y].
inline mideal::MonomialIdeal idl(const std::string& vars,
                                 const std::string& gens) {
  return mideal::parse_ideal("vars: " + vars + "\n" + gens + "\n");
}

// mono("x y", "x*y^2") -> a single monomial over the given variables.
inline mideal::Monomial mono(const std::string& vars, const std::string& m) {
  const mideal::MonomialIdeal i = idl(vars, m);
  assert(i.num_generators() == 1);
  return i.generators().front();
}

#endif
