#pragma once

#include <vector>

#include "pipelat/coxeter.hpp"

namespace pipelat {

// Exact tests on cones spanned by finitely many vectors over Q(sqrt5).

// beta is a nonnegative combination of gens (phase-one simplex, Bland's rule).
bool cone_membership(const std::vector<RootVec>& gens, const RootVec& beta);
// Same question by enumerating linearly independent subsets (Caratheodory).
bool cone_membership_subsets(const std::vector<RootVec>& gens, const RootVec& beta);

// beta is among gens and is not a nonnegative combination of the gens that
// are not positive multiples of beta. Dimension <= 4 uses subset enumeration.
bool is_extreme_ray(const std::vector<RootVec>& gens, const RootVec& beta);
bool is_extreme_ray_simplex(const std::vector<RootVec>& gens, const RootVec& beta);
bool is_extreme_ray_subsets(const std::vector<RootVec>& gens, const RootVec& beta);

// No nontrivial nonnegative combination of gens vanishes.
bool is_pointed(const std::vector<RootVec>& gens);

bool positively_parallel(const RootVec& v, const RootVec& beta);

}  // namespace pipelat
