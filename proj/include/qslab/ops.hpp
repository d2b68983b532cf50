#pragma once

#include <functional>
#include <vector>

#include "qslab/field.hpp"

namespace qslab {

// Conservative second-difference of g(v): out_c = sum_axis (G_+ - 2 G_c + G_-) / dx_axis^2
// written as a difference of face fluxes so the cell sum telescopes to zero.
// Ghost cells wrap for Periodic and mirror the edge cell for ZeroFlux.
std::vector<double> flux_laplacian_values(const std::vector<double>& g, const Grid& grid);
Field flux_laplacian(const std::function<double(double)>& g, const Field& f);

// Centered first derivatives, same ghost rules.
VectorField gradient(const Field& f);
Field divergence(const VectorField& vf);

// Centered derivative of raw cell values along one axis, same ghost rules.
std::vector<double> axis_derivative(const std::vector<double>& v, const Grid& grid, int axis);

// Scalar curl d(u_y)/dx - d(u_x)/dy; 2D only.
Field curl2d(const VectorField& vf);

// (cell_volume * sum |v|^p)^(1/p); p = infinity gives max |v|. Requires p >= 1.
double lp_norm(const Field& f, double p);
double lp_norm(const std::vector<double>& v, const Grid& g, double p);

// Midpoint quadrature: cell_volume * sum v.
double integrate(const Field& f);
double integrate(const std::vector<double>& v, const Grid& g);

// Max distance from the mass centroid among cells at or above the threshold;
// zero when no cell qualifies or the field has no mass.
double support_radius(const Field& f, double threshold);

}  // namespace qslab
