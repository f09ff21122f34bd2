#ifndef MIDEAL_IO_HPP
#define MIDEAL_IO_HPP

#include <string>
#include <vector>

#include "mideal/graphs.hpp"
#include "mideal/ideal.hpp"

namespace mideal {

/// Ideal text format. First significant line declares the ring, either
/// listing names ("vars: x y z") or as a range ("vars: x1..x7"); the rest
/// lists generators separated by commas or newlines, e.g. "x*y^2" or
/// "x1x4x5" (the "*" is optional; adjacent names are matched greedily,
/// longest declared name first). "1" is the unit ideal; no generators is
/// the zero ideal, which adds a warning. "#" starts a comment.
MonomialIdeal parse_ideal(const std::string& text,
                          std::vector<std::string>* warnings = nullptr);

/// Canonical text for an ideal; parse_ideal(serialize_ideal(I)) == I.
std::string serialize_ideal(const MonomialIdeal& ideal);

/// Graph text format: vertex count on the first significant line, then one
/// "i j" edge per line, 1-indexed. "#" starts a comment.
SimpleGraph parse_graph(const std::string& text);

std::string serialize_graph(const SimpleGraph& graph);

} // namespace mideal

#endif
