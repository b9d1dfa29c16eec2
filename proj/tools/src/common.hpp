#pragma once

#include "angmom_cli/commands.hpp"

#include <angmom/errors.hpp>

#include <string>

namespace angmom::cli::detail {

inline void header_meta(Table &t, const std::string &command) {
  t.meta("tool", std::string("angmom"));
  t.meta("version", std::string(kVersion));
  t.meta("command", command);
}

inline void pair_meta(Table &t, const PairArgs &p) {
  t.meta("j1", p.j1.to_string());
  t.meta("m1", p.m1.to_string());
  t.meta("j2", p.j2.to_string());
  t.meta("m2", p.m2.to_string());
}

inline void require_pair(const PairArgs &p) {
  require_jm(p.j1, p.m1, "(j1,m1)");
  require_jm(p.j2, p.m2, "(j2,m2)");
}

inline void require_integer_pair(const PairArgs &p) {
  require_pair(p);
  if (!p.j1.is_integer() || !p.j2.is_integer())
    throw HalfIntegerUnsupported("this command needs integer j1 and j2");
}

// (-1)^n for integer n
inline int parity(int n) { return n % 2 == 0 ? 1 : -1; }

} // namespace angmom::cli::detail
