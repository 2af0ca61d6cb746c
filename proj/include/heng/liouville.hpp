#pragma once

#include <Eigen/Dense>
#include <complex>

#include "heng/model.hpp"

namespace heng {

using Matrix3c = Eigen::Matrix3cd;
using Matrix9c = Eigen::Matrix<std::complex<double>, 9, 9>;
using Vector9c = Eigen::Matrix<std::complex<double>, 9, 1>;

enum class Basis { Rotating, Dressed };

// 3x3 Hermitian unit-trace state of the working medium. States are indexed
// 0,1,2 for |1>,|2>,|3>. Positivity is *reported*, not enforced: non-secular
// equations may produce small negative eigenvalues.
struct DensityMatrix3 {
  Matrix3c m = Matrix3c::Zero();
  Basis basis = Basis::Rotating;

  // Checks hermiticity (entrywise) and unit trace to `tol`; throws NumericError.
  static DensityMatrix3 validated(const Matrix3c& m, Basis basis,
                                  double tol = 1e-12);
  double min_eigenvalue() const;
};

// Rotation V with |i_tilde> = sum_j V_ij |j_rot>; V diagonalizes the rotated
// Hamiltonian at tan(theta) = Omega/Delta.
Eigen::Matrix3d dressing_rotation(const DressedFrame& frame);
DensityMatrix3 to_dressed(const DensityMatrix3& rho, const DressedFrame& frame);
DensityMatrix3 to_rotating(const DensityMatrix3& rho, const DressedFrame& frame);

// The four bath rates plus the condensate cycle rate R = Omega*Im(rho_32).
struct BathRates {
  double Rc2 = 0.0, Rc3 = 0.0; // cold bath
  double Rh2 = 0.0, Rh3 = 0.0; // hot bath
  double R = 0.0;              // cycle rate

  double Rc() const { return Rc2 + Rc3; }
  double Rh() const { return -(Rh2 + Rh3); }
};

BathRates rates_rotating(const DensityMatrix3& rho, const DressedFrame& frame,
                         const BathSpec& cold, const BathSpec& hot);
BathRates rates_dressed(const DensityMatrix3& rho_tilde, const DressedFrame& frame,
                        const BathSpec& cold, const BathSpec& hot);

// Full generator acting on vec(rho) (column-major) in the rotating basis:
// coherent commutator plus the cold and hot dissipative terms, kept separate.
struct Generator {
  Matrix9c coherent = Matrix9c::Zero();
  Matrix9c cold = Matrix9c::Zero();
  Matrix9c hot = Matrix9c::Zero();
  DressedFrame frame;

  Matrix9c total() const { return coherent + cold + hot; }
  double norm_inf() const;
  Matrix3c apply(const Matrix3c& rho) const;
};

Generator assemble_generator(const EngineParams& params, double Omega,
                             const BathSpec& cold, const BathSpec& hot);

// Unique unit-trace kernel element of the generator, solved by replacing one
// row of the vectorized system with the trace constraint. Throws
// DegenerateSteadyState when the kernel is not one-dimensional.
DensityMatrix3 steady_state(const Generator& gen);

// Fixed-step RK4 integration of rho' = gen(rho); independent oracle for
// steady_state. Requires dt*|gen| < 0.1 and checks trace drift < 1e-9.
DensityMatrix3 integrate_eom(const Generator& gen, const DensityMatrix3& rho0,
                             double t_final, double dt);

// Omega = 0 limit: rates and coherence decays of the three-level laser
// equations (theta = 0, e2_tilde = e2, e3_tilde = e3 - omega).
struct LambRates {
  double gamma_c_down = 0.0, gamma_c_up = 0.0;
  double gamma_h_down = 0.0, gamma_h_up = 0.0;
  double decay_23 = 0.0, decay_13 = 0.0, decay_12 = 0.0;
};
LambRates lamb_limit(const EngineParams& params, const BathSpec& cold,
                     const BathSpec& hot);

// Omega = 0 steady-state populations: |2> (|3>) in equilibrium with the cold
// (hot) bath. With zero hot coupling the top level is taken unpopulated.
struct LambPopulations {
  double rho11 = 0.0, rho22 = 0.0, rho33 = 0.0;
};
LambPopulations lamb_populations(const EngineParams& params, const BathSpec& cold,
                                 const BathSpec& hot);

} // namespace heng
