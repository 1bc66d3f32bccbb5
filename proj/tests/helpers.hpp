#pragma once

#include "bochert/group.hpp"

#include <initializer_list>
#include <string>
#include <vector>

inline bochert::Group make_group(std::size_t n, std::initializer_list<const char *> gens,
                                 std::string label = "test") {
  std::vector<bochert::Permutation> ps;
  for (const char *g : gens)
    ps.push_back(bochert::parse_cycles(g, n));
  return bochert::Group(bochert::GeneratorSet(n, std::move(ps), std::move(label)));
}

inline bochert::Permutation cyc(const char *text, std::size_t n) {
  return bochert::parse_cycles(text, n);
}
