#pragma once

#include <string>
#include <vector>

#include "homlin/polynomial.hpp"

namespace homlin {

/// Families whose characteristic polynomial the library computes.
/// typeA is the homogenized Linial arrangement (lattice = bond lattice of
/// Gamma_2n); typeB is the m = 2 Dowling specialization.
enum class ChiFamily { braid, typeA, typeB, dowling };
ChiFamily chi_family_from_string(const std::string& name);
std::string to_string(ChiFamily f);

enum class ChiRoute {
    poset_mobius,              // Moebius recursion on the combinatorial poset
    dperm_counts,              // signed (labeled) D-permutation cycle counts
    id_forests,                // signed ID-forest tree counts (typeA only)
    rational_arrangement,      // exact intersection poset of the arrangement
    finite_field_interpolation // point counts at good primes, interpolated
};
ChiRoute chi_route_from_string(const std::string& name);
std::string to_string(ChiRoute r);

/// Characteristic polynomial by the requested route; ParameterError when the
/// route is unavailable for (family, n, m) within the stated budgets.
IntPolynomial chi_by_route(ChiFamily family, int n, int m, ChiRoute route, bool force = false);

std::vector<ChiRoute> available_chi_routes(ChiFamily family, int n, int m, bool force = false);

/// Expected length (top rank) of the family's intersection lattice.
int chi_length(ChiFamily family, int n);

} // namespace homlin
