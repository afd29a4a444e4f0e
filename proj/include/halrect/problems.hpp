#pragma once

#include <iosfwd>

#include "halrect/core.hpp"

namespace halrect {

// Build a catalog problem by name and dimension.  Throws std::out_of_range
// for unknown names or unsupported dimensions.
Problem lookup(const std::string& name, int n);

// Every (name, n) pair the catalog provides, in catalog order.
std::vector<std::pair<std::string, int>> catalog_entries();

// Objective in original coordinates, with the same non-finite handling as
// the solver sees: NaN and infinities come back unchanged here.
double eval_raw(const Problem& problem, const Vec& x);

// Shift the feasible box by rho times its side lengths, clamping the lower
// bound so the reference minimizer stays inside.  Requires x_star.
Problem perturb(const Problem& problem, double rho);

// |f(x_star) - f_star|; +inf when the problem carries no minimizer.
double verify_optimum(const Problem& problem);

// Line-oriented manifest of the catalog: name, n, bounds, optimum, tags.
void write_manifest(std::ostream& out);

}  // namespace halrect
