// Canonical algebra constructions. Basis orders are fixed so symbolic output
// is comparable across runs:
//   field               dim 1, basis {1}
//   two_dim             basis {a, b} with x*y = y for basis elements
//   mat(n)              matrix units E_ij in row-major order
//   seaweed3            {E11, E12, E22, E32, E33} in Mat_3, labels a..e
//   upper_triangular(n) E_ij with i <= j, row-major
//   truncated_poly(m)   1, x, ..., x^(m-1) with x^m = 0
#pragma once

#include <vector>

#include "algindex/structure_constants.hpp"

namespace algindex {

StructureConstants build_field();
StructureConstants build_two_dim();
StructureConstants build_mat(std::size_t n);
StructureConstants build_seaweed3();
StructureConstants build_upper_triangular(std::size_t n);
StructureConstants build_truncated_poly(std::size_t m);

// Dispatch by family name ("mat", "two_dim", ...); param is n or m where the
// family takes one. Unknown names throw input_error.
StructureConstants build_named(const std::string& family, std::size_t param = 0);

// The ten-algebra test catalog: field, two_dim, seaweed3, mat(2), mat(3),
// upper_triangular(2,3), truncated_poly(2..4). mat(1) coincides with field.
std::vector<StructureConstants> catalog();

}  // namespace algindex
