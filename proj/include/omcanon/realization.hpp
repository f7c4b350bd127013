#pragma once

#include "omcanon/chirotope.hpp"
#include "omcanon/linalg.hpp"
#include "omcanon/oriented_matroid.hpp"

#include <vector>

namespace omc {

/// Determinant of a square matrix.
Rational determinant(Matrix a);

/// chi(B) = sign det of the columns in B. Throws Error for a zero column or
/// a matrix whose rank is below its number of rows.
Chirotope chirotope_from_matrix(const Matrix& m);

/// Multiplies column i by P(i).
Matrix reorient_columns(const Matrix& m, const SignVector& p);

/// Placing (beneath-beyond) triangulation of the cone spanned by the columns,
/// inserting them in `order`. Bases are returned as column masks. Throws Error
/// if the configuration has a positive circuit.
std::vector<Mask> placing_triangulation(const Matrix& m, const std::vector<int>& order);

/// Sign vector of (column_i . x). Throws Error if x lies on a hyperplane.
SignVector chamber_of(const Matrix& m, const Vector& x);

/// A point in the open chamber of tope P: the sum of the rays of the
/// cocircuits conformal to P.
Vector interior_point(const OrientedMatroid& om, const Matrix& m, const SignVector& p);

/// Whether x lies in the closed cone over the columns of `basis`.
bool in_cone(const Matrix& m, Mask basis, const Vector& x);

}  // namespace omc
