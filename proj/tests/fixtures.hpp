// Inline copies of the golden tables, independent of the JSON fixtures
// (test_io checks that the shipped files parse to exactly these).

#ifndef LALG_TESTS_FIXTURES_HPP
#define LALG_TESTS_FIXTURES_HPP

#include "lalg/algebra.hpp"

namespace lalg::fixtures {

// 4-element L-algebra over {x,y,z,1}, unit last.
inline MagmaTable table1() {
  return make_magma(4, 3,
                    {{3, 1, 2, 3},
                     {3, 3, 0, 3},
                     {3, 0, 3, 3},
                     {0, 1, 2, 3}},
                    {"x", "y", "z", "1"});
}

// 3-element pre-L-algebra over {a,b,1} with a*b = b*a = 1 but a != b.
inline MagmaTable table2() {
  return make_magma(3, 2,
                    {{2, 2, 2},
                     {2, 2, 2},
                     {0, 1, 2}},
                    {"a", "b", "1"});
}

// 2-element L-algebra over {0,1}.
inline MagmaTable two_elt() {
  return make_magma(2, 1, {{1, 1}, {0, 1}}, {"0", "1"});
}

// The surjection table1 -> table2: x,1 -> 1, y -> a, z -> b.
inline ElementMap witness_f() {
  ElementMap f;
  f.domain = table1();
  f.codomain = table2();
  f.images = {2, 0, 1, 2};
  return f;
}

}  // namespace lalg::fixtures

#endif
