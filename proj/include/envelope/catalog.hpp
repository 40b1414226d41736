#pragma once

#include "envelope/algebras.hpp"

// Small algebras and modules used by tests, self-checks and the CLI.
namespace envelope::catalog {

AlgebraPresentation ground_field();        // R, commutative, unit
AlgebraPresentation dual_numbers();        // R[x]/(x^2), |x| = 0
AlgebraPresentation group_algebra_z2();    // R[Z/2]
AlgebraPresentation upper_triangular2();   // basis 1, e12, e22
AlgebraPresentation aff1();                // [e,f] = f
AlgebraPresentation sl2();                 // e, f, h
AlgebraPresentation abelian_lie(int dim);  // zero bracket, degree 0
AlgebraPresentation lambda_aff1();         // polyvectors on aff(1), wedge + Schouten
AlgebraPresentation zero_bracket(const AlgebraPresentation& commutative);

ModulePresentation regular_module(const AlgebraPresentation& a);
ModulePresentation trivial_module(const AlgebraPresentation& a, int dim = 1, int degree = 0);
// Degrees raised by s; left and bracket actions pick up the Koszul sign of moving past s.
ModulePresentation shifted_module(const AlgebraPresentation& a, const ModulePresentation& m, int s);
ModulePresentation direct_sum(const AlgebraPresentation& a, const ModulePresentation& m1, const ModulePresentation& m2);

}  // namespace envelope::catalog
