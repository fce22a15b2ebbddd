#pragma once

#include "pachner/complex.hpp"

namespace pachner::gen {

// The solid d-simplex on labels 1..d+1.
Complex simplex(int d);
// The boundary of the (d+1)-simplex on labels 1..d+2: the minimal d-sphere.
Complex sphere(int d);
// Join with a new apex labelled max + 1.
Complex cone(const Complex& c);
// Join with two new apexes labelled max + 1 and max + 2.
Complex suspension(const Complex& c);
// Facets F1 u F2; the label sets must be disjoint (LabelClash otherwise).
Complex join(const Complex& a, const Complex& b);
// Shifts every label by `offset`.
Complex relabel_shift(const Complex& c, Vertex offset);

// The 6-vertex real projective plane.
Complex rp2_6();
// Boundary of the octahedron, built as the double suspension of two points.
Complex octahedron();

}  // namespace pachner::gen
