#pragma once

#include <string>
#include <vector>

#include "quasitoric/polytope.hpp"

namespace quasitoric {

/// Built-in polytope specs used by the `example` command and the test
/// suites. Each returns the JSON spec text so reports can embed it.
namespace fixtures {

/// Segment [0, ..] with normals (s, -t) and quasilattice generated by s and
/// t; irrational t/s gives a genuinely non-lattice quasilattice.
std::string interval(double s = 1.0, double t = 1.4142135623730951);

/// Right triangle with legs s, t and slant normal (-t, -s).
std::string triangle(double s = 1.0, double t = 1.4142135623730951);

/// Regular pentagon with unit circumradius; no lattice makes it rational.
std::string pentagon();

/// Unit square with the standard lattice: the honest toric case.
std::string square();

/// Octahedron |x|+|y|+|z| <= 1: every vertex meets four facets.
std::string octahedron();

std::vector<std::string> names();

/// Spec text by fixture name; s, t apply to interval and triangle.
std::string by_name(const std::string& name, double s = 1.0, double t = 1.4142135623730951);

}  // namespace fixtures

}  // namespace quasitoric
