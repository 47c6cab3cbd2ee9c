#pragma once

#include "degvisc/fields.hpp"

#include <array>
#include <vector>

namespace degvisc {

enum class BCKind { Periodic, SlipBox };

/// Boundary treatment. SlipBox: Neumann density, u·n = 0 and vanishing
/// tangential vorticity, realized by even/odd reflection across each face.
struct BCMode {
    BCKind kind = BCKind::Periodic;

    static BCMode periodic() { return {BCKind::Periodic}; }
    static BCMode slip_box() { return {BCKind::SlipBox}; }
    /// The only mode compatible with the grid's topology.
    static BCMode for_grid(const Grid& g) { return g.topology == Topology::Periodic ? periodic() : slip_box(); }
};

/// \throws TopologyError when bc does not match the grid topology.
void require_compatible(const Grid& g, BCMode bc);

/// Sign of the mirror image across a box face: Even for density and
/// tangential velocity, Odd for the normal velocity component.
enum class Parity { Even, Odd };

/// Parity of velocity component `comp` across faces normal to `axis`.
inline Parity velocity_parity(int comp, int axis) { return comp == axis ? Parity::Odd : Parity::Even; }

/// Centered difference (f[i+1] - f[i-1]) / 2h along one axis.
ScalarField ddx(const ScalarField& f, int axis, Parity parity, BCMode bc);
/// out += scale * ddx(f, axis, parity).
void add_ddx(ScalarField& out, const ScalarField& f, int axis, Parity parity, double scale);

/// Compact conservative form of d/dx_a (w d f/dx_a): face weights are the
/// arithmetic means of neighbouring cell weights; w == nullptr means w = 1.
ScalarField face_diffusion(const ScalarField* w, const ScalarField& f, int axis, Parity parity, BCMode bc);
/// out += scale * face_diffusion(w, f, axis, parity).
void add_face_diffusion(ScalarField& out, const ScalarField* w, const ScalarField& f, int axis, Parity parity,
                        double scale);

/// Centered gradient; components are odd across faces normal to their axis.
VectorField gradient(const ScalarField& f, BCMode bc);
/// Sum of centered differences. On the torus this is exactly the negative
/// transpose of `gradient` under the midpoint inner product.
ScalarField divergence(const VectorField& F, BCMode bc);
/// Standard (2N+1)-point Laplacian with Neumann reflection on boxes.
ScalarField laplacian(const ScalarField& f, BCMode bc);

/// Velocity gradient samples d(a, c) = du_c/dx_a with symmetrization helpers.
struct VelocityGradient {
    Grid grid;
    std::array<std::array<std::vector<double>, 3>, 3> d;

    int dim() const { return grid.dim; }
    double grad(int a, int c, std::size_t i) const { return d[a][c][i]; }
    /// Entry (a, c) of D u = (grad u + grad u^T) / 2.
    double sym(int a, int c, std::size_t i) const { return 0.5 * (d[a][c][i] + d[c][a][i]); }
    double div(std::size_t i) const;
    double grad_norm2(std::size_t i) const;
    double sym_norm2(std::size_t i) const;
};

VelocityGradient sym_gradient(const VectorField& u, BCMode bc);

/// 2D: single component du_2/dx_1 - du_1/dx_2; 3D: the three curl components.
std::vector<ScalarField> vorticity(const VectorField& u, BCMode bc);

/// Interior data embedded in a grid padded by one ghost layer per face.
struct GhostedState {
    Grid padded;
    ScalarField rho;
    VectorField u;
    /// Linear index in the padded grid of interior cell (i0, i1, i2).
    std::size_t interior_index(int i0, int i1 = 0, int i2 = 0) const;
};

/// Fills ghost layers: density even, normal velocity odd, tangential velocity even.
/// \throws TopologyError on periodic grids.
GhostedState apply_bc(const State& state, BCMode bc);

/// Sum over all box faces of rho_face (u·n)_face times face area, with face
/// values averaged from the interior cell and its ghost.
double boundary_mass_flux(const GhostedState& g);

}  // namespace degvisc
