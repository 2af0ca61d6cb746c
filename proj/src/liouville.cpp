#include "heng/liouville.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "heng/errors.hpp"

namespace heng {

namespace {

using std::numbers::pi;
using Complex = std::complex<double>;

// Spectral density and occupation of one bath sampled at the two dressed
// energies relevant for it (e~2, e~3 for the cold bath; e~2+w, e~3+w for the
// hot bath). The occupation is only evaluated where J is nonzero, so energies
// outside a step-function band never raise spurious domain errors.
struct BathSample {
  double J2 = 0.0, n2 = 0.0;
  double J3 = 0.0, n3 = 0.0;
};

BathSample sample(const BathSpec& bath, double E2, double E3) {
  BathSample s;
  s.J2 = spectral_density(bath, E2);
  if (s.J2 != 0.0) s.n2 = occupation(bath, E2);
  s.J3 = spectral_density(bath, E3);
  if (s.J3 != 0.0) s.n3 = occupation(bath, E3);
  return s;
}

BathSample sample_cold(const BathSpec& cold, const DressedFrame& f) {
  return sample(cold, f.e2_tilde, f.e3_tilde);
}

BathSample sample_hot(const BathSpec& hot, const DressedFrame& f) {
  return sample(hot, f.e2_tilde + f.omega, f.e3_tilde + f.omega);
}

// Complex-linear extension of Re(rho_23); agrees on Hermitian matrices.
Complex sym23(const Matrix3c& r) { return 0.5 * (r(1, 2) + r(2, 1)); }

// Cold-bath rates as complex-linear functionals (real on Hermitian input).
Complex rate_c2(const Matrix3c& r, const BathSample& c, double sin_t, double cos_t) {
  return pi * c.J2 *
         (-(c.n2 + 1.0) * sin_t * sym23(r) +
          (1.0 + cos_t) * ((c.n2 + 1.0) * r(1, 1) - c.n2 * r(0, 0)));
}
Complex rate_c3(const Matrix3c& r, const BathSample& c, double sin_t, double cos_t) {
  return pi * c.J3 *
         ((c.n3 + 1.0) * sin_t * sym23(r) +
          (1.0 - cos_t) * ((c.n3 + 1.0) * r(1, 1) - c.n3 * r(0, 0)));
}
Complex rate_h2(const Matrix3c& r, const BathSample& h, double sin_t, double cos_t) {
  return pi * h.J2 *
         (-(h.n2 + 1.0) * sin_t * sym23(r) +
          (1.0 - cos_t) * ((h.n2 + 1.0) * r(2, 2) - h.n2 * r(0, 0)));
}
Complex rate_h3(const Matrix3c& r, const BathSample& h, double sin_t, double cos_t) {
  return pi * h.J3 *
         ((h.n3 + 1.0) * sin_t * sym23(r) +
          (1.0 + cos_t) * ((h.n3 + 1.0) * r(2, 2) - h.n3 * r(0, 0)));
}

// Cold dissipator: population rows from the rates, coherence rows from the
// dissipative equations-of-motion, completed by index swap so Hermitian
// states map to Hermitian derivatives.
Matrix3c apply_cold(const Matrix3c& r, const BathSample& c, double sin_t,
                    double cos_t) {
  Matrix3c d = Matrix3c::Zero();
  const Complex rc = rate_c2(r, c, sin_t, cos_t) + rate_c3(r, c, sin_t, cos_t);
  d(0, 0) += rc;
  d(1, 1) -= rc;

  const double pop_n = c.J2 * c.n2 - c.J3 * c.n3;
  const double pop_e = c.J3 * (1.0 + c.n3) - c.J2 * (1.0 + c.n2);
  const double k23 = c.J2 * (1.0 + c.n2) * (1.0 + cos_t) +
                     c.J3 * (1.0 + c.n3) * (1.0 - cos_t);
  d(1, 2) += -0.5 * pi *
             ((r(0, 0) * pop_n + r(2, 2) * pop_e) * sin_t + r(1, 2) * k23);
  d(2, 1) += -0.5 * pi *
             ((r(0, 0) * pop_n + r(2, 2) * pop_e) * sin_t + r(2, 1) * k23);

  const double k12 = c.J2 * (1.0 + 2.0 * c.n2) * (1.0 + cos_t) +
                     c.J3 * (1.0 + 2.0 * c.n3) * (1.0 - cos_t);
  const double x12 = c.J3 * (1.0 + c.n3) - c.J2 * (1.0 + c.n2);
  d(0, 1) += -0.5 * pi *
             ((r(0, 1) - r(1, 0)) * k12 + (r(0, 2) - r(2, 0)) * x12 * sin_t);
  d(1, 0) += -0.5 * pi *
             ((r(1, 0) - r(0, 1)) * k12 + (r(2, 0) - r(0, 2)) * x12 * sin_t);

  const double k13 = c.J2 * c.n2 * (1.0 + cos_t) + c.J3 * c.n3 * (1.0 - cos_t);
  const double x13 = c.J2 * c.n2 - c.J3 * c.n3;
  d(0, 2) += -0.5 * pi * (r(0, 2) * k13 + r(1, 0) * x13 * sin_t);
  d(2, 0) += -0.5 * pi * (r(2, 0) * k13 + r(0, 1) * x13 * sin_t);
  return d;
}

Matrix3c apply_hot(const Matrix3c& r, const BathSample& h, double sin_t,
                   double cos_t) {
  Matrix3c d = Matrix3c::Zero();
  const Complex rh = rate_h2(r, h, sin_t, cos_t) + rate_h3(r, h, sin_t, cos_t);
  d(0, 0) += rh;
  d(2, 2) -= rh;

  const double pop_n = h.J2 * h.n2 - h.J3 * h.n3;
  const double pop_e = h.J3 * (1.0 + h.n3) - h.J2 * (1.0 + h.n2);
  const double k23 = h.J2 * (1.0 + h.n2) * (1.0 - cos_t) +
                     h.J3 * (1.0 + h.n3) * (1.0 + cos_t);
  d(1, 2) += -0.5 * pi *
             ((r(0, 0) * pop_n + r(1, 1) * pop_e) * sin_t + r(1, 2) * k23);
  d(2, 1) += -0.5 * pi *
             ((r(0, 0) * pop_n + r(1, 1) * pop_e) * sin_t + r(2, 1) * k23);

  const double k13 = h.J3 * (1.0 + 2.0 * h.n3) * (1.0 + cos_t) +
                     h.J2 * (1.0 + 2.0 * h.n2) * (1.0 - cos_t);
  const double x13 = h.J3 * (1.0 + h.n3) - h.J2 * (1.0 + h.n2);
  d(0, 2) += -0.5 * pi * (r(0, 2) * k13 + r(0, 1) * x13 * sin_t);
  d(2, 0) += -0.5 * pi * (r(2, 0) * k13 + r(1, 0) * x13 * sin_t);

  const double k12 = h.J3 * h.n3 * (1.0 + cos_t) + h.J2 * h.n2 * (1.0 - cos_t);
  d(0, 1) += -0.5 * pi * r(0, 1) * k12;
  d(1, 0) += -0.5 * pi * r(1, 0) * k12;
  return d;
}

Matrix3c rotated_hamiltonian(const EngineParams& p, double Omega) {
  Matrix3c h = Matrix3c::Zero();
  h(1, 1) = p.e2;
  h(2, 2) = p.e2 + p.detuning();
  h(1, 2) = 0.5 * Omega;
  h(2, 1) = 0.5 * Omega;
  return h;
}

template <typename F>
Matrix9c matrix_of(F&& apply) {
  Matrix9c out = Matrix9c::Zero();
  for (int k = 0; k < 9; ++k) {
    Matrix3c basis = Matrix3c::Zero();
    basis(k % 3, k / 3) = 1.0;
    const Matrix3c img = apply(basis);
    out.col(k) = Eigen::Map<const Vector9c>(img.data());
  }
  return out;
}

void require_basis(const DensityMatrix3& rho, Basis expected, const char* fn) {
  if (rho.basis != expected)
    throw std::invalid_argument(std::string(fn) + ": density matrix is in the wrong basis");
}

} // namespace

DensityMatrix3 DensityMatrix3::validated(const Matrix3c& m, Basis basis, double tol) {
  const Matrix3c herm_err = m - m.adjoint();
  if (herm_err.cwiseAbs().maxCoeff() > tol)
    throw NumericError("density matrix is not Hermitian to tolerance");
  if (std::abs(m.trace() - Complex(1.0)) > tol)
    throw NumericError("density matrix trace differs from 1 beyond tolerance");
  return DensityMatrix3{m, basis};
}

double DensityMatrix3::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix3c> es(0.5 * (m + m.adjoint()));
  return es.eigenvalues().minCoeff();
}

Eigen::Matrix3d dressing_rotation(const DressedFrame& frame) {
  const double c = std::cos(0.5 * frame.theta);
  const double s = std::sin(0.5 * frame.theta);
  Eigen::Matrix3d v;
  v << 1, 0, 0,
       0, c, -s,
       0, s, c;
  return v;
}

DensityMatrix3 to_dressed(const DensityMatrix3& rho, const DressedFrame& frame) {
  require_basis(rho, Basis::Rotating, "to_dressed");
  const Eigen::Matrix3d v = dressing_rotation(frame);
  return DensityMatrix3{v * rho.m * v.transpose(), Basis::Dressed};
}

DensityMatrix3 to_rotating(const DensityMatrix3& rho, const DressedFrame& frame) {
  require_basis(rho, Basis::Dressed, "to_rotating");
  const Eigen::Matrix3d v = dressing_rotation(frame);
  return DensityMatrix3{v.transpose() * rho.m * v, Basis::Rotating};
}

BathRates rates_rotating(const DensityMatrix3& rho, const DressedFrame& frame,
                         const BathSpec& cold, const BathSpec& hot) {
  require_basis(rho, Basis::Rotating, "rates_rotating");
  const BathSample c = sample_cold(cold, frame);
  const BathSample h = sample_hot(hot, frame);
  const double sin_t = std::sin(frame.theta);
  const double cos_t = std::cos(frame.theta);
  BathRates out;
  out.Rc2 = rate_c2(rho.m, c, sin_t, cos_t).real();
  out.Rc3 = rate_c3(rho.m, c, sin_t, cos_t).real();
  out.Rh2 = rate_h2(rho.m, h, sin_t, cos_t).real();
  out.Rh3 = rate_h3(rho.m, h, sin_t, cos_t).real();
  out.R = frame.rabi * std::imag(rho.m(2, 1));
  return out;
}

BathRates rates_dressed(const DensityMatrix3& rho_tilde, const DressedFrame& frame,
                        const BathSpec& cold, const BathSpec& hot) {
  require_basis(rho_tilde, Basis::Dressed, "rates_dressed");
  const BathSample c = sample_cold(cold, frame);
  const BathSample h = sample_hot(hot, frame);
  const double sin_t = std::sin(frame.theta);
  const double cos_t = std::cos(frame.theta);
  const Matrix3c& r = rho_tilde.m;
  const double re23 = 0.5 * (r(1, 2) + r(2, 1)).real();

  BathRates out;
  out.Rc2 = pi * c.J2 *
            ((1.0 + cos_t) * ((c.n2 + 1.0) * r(1, 1).real() - c.n2 * r(0, 0).real()) +
             (c.n2 + 1.0) * sin_t * re23);
  out.Rc3 = pi * c.J3 *
            ((1.0 - cos_t) * ((c.n3 + 1.0) * r(2, 2).real() - c.n3 * r(0, 0).real()) +
             (c.n3 + 1.0) * sin_t * re23);
  out.Rh2 = pi * h.J2 *
            ((1.0 - cos_t) * ((h.n2 + 1.0) * r(1, 1).real() - h.n2 * r(0, 0).real()) -
             (h.n2 + 1.0) * sin_t * re23);
  out.Rh3 = pi * h.J3 *
            ((1.0 + cos_t) * ((h.n3 + 1.0) * r(2, 2).real() - h.n3 * r(0, 0).real()) -
             (h.n3 + 1.0) * sin_t * re23);
  out.R = frame.rabi * std::imag(to_rotating(rho_tilde, frame).m(2, 1));
  return out;
}

double Generator::norm_inf() const {
  return total().cwiseAbs().rowwise().sum().maxCoeff();
}

Matrix3c Generator::apply(const Matrix3c& rho) const {
  const Vector9c v = total() * Eigen::Map<const Vector9c>(rho.data());
  return Eigen::Map<const Matrix3c>(v.data());
}

Generator assemble_generator(const EngineParams& params, double Omega,
                             const BathSpec& cold, const BathSpec& hot) {
  const DressedFrame frame = dressed_frame(params, Omega);
  const BathSample c = sample_cold(cold, frame);
  const BathSample h = sample_hot(hot, frame);
  const double sin_t = std::sin(frame.theta);
  const double cos_t = std::cos(frame.theta);
  const Matrix3c ham = rotated_hamiltonian(params, Omega);

  Generator gen;
  gen.frame = frame;
  gen.coherent = matrix_of([&](const Matrix3c& r) -> Matrix3c {
    return Complex(0.0, -1.0) * (ham * r - r * ham);
  });
  gen.cold = matrix_of([&](const Matrix3c& r) { return apply_cold(r, c, sin_t, cos_t); });
  gen.hot = matrix_of([&](const Matrix3c& r) { return apply_hot(r, h, sin_t, cos_t); });
  return gen;
}

DensityMatrix3 steady_state(const Generator& gen) {
  const Matrix9c a = gen.total();
  const double a_norm = a.norm();

  // Diagonal components of vec(rho) in column-major order.
  constexpr int trace_rows[3] = {0, 4, 8};
  for (int attempt = 0; attempt < 3; ++attempt) {
    Matrix9c sys = a;
    sys.row(trace_rows[attempt]).setZero();
    for (int k : trace_rows) sys(trace_rows[attempt], k) = 1.0;
    Vector9c b = Vector9c::Zero();
    b(trace_rows[attempt]) = 1.0;

    Eigen::FullPivLU<Matrix9c> lu(sys);
    if (!lu.isInvertible()) continue;
    const Vector9c x = lu.solve(b);
    Matrix3c rho = Eigen::Map<const Matrix3c>(x.data());
    rho = 0.5 * (rho + rho.adjoint().eval());
    const double tr = rho.trace().real();
    if (!(std::abs(tr) > 1e-300)) continue;
    rho /= tr;

    const double residual =
        (a * Eigen::Map<const Vector9c>(rho.data())).norm();
    if (residual <= 1e-10 * std::max(a_norm, 1e-300))
      return DensityMatrix3{rho, Basis::Rotating};
    break; // solved but not a kernel element: fall through to diagnostics
  }

  Eigen::JacobiSVD<Matrix9c> svd(a);
  const auto& sv = svd.singularValues();
  int kernel_dim = 0;
  for (int i = 0; i < 9; ++i)
    if (sv(i) <= 1e-10 * sv(0)) ++kernel_dim;
  std::ostringstream msg;
  msg << "steady state is not unique or not reachable: kernel dimension "
      << kernel_dim << " (singular values " << sv.transpose() << ")";
  throw DegenerateSteadyState(kernel_dim, msg.str());
}

DensityMatrix3 integrate_eom(const Generator& gen, const DensityMatrix3& rho0,
                             double t_final, double dt) {
  if (!(dt > 0.0) || !(t_final >= 0.0))
    throw std::invalid_argument("integrate_eom: t_final and dt must be positive");
  if (dt * gen.norm_inf() >= 0.1)
    throw std::invalid_argument("integrate_eom: dt too large for stability (dt*|gen| >= 0.1)");

  const Matrix9c a = gen.total();
  Vector9c v = Eigen::Map<const Vector9c>(rho0.m.data());
  const long n_full = static_cast<long>(t_final / dt);
  const double rest = t_final - static_cast<double>(n_full) * dt;

  auto step = [&a](Vector9c& y, double h) {
    const Vector9c k1 = a * y;
    const Vector9c k2 = a * (y + 0.5 * h * k1).eval();
    const Vector9c k3 = a * (y + 0.5 * h * k2).eval();
    const Vector9c k4 = a * (y + h * k3).eval();
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };

  for (long i = 0; i < n_full; ++i) step(v, dt);
  if (rest > 0.0) step(v, rest);

  Matrix3c rho = Eigen::Map<const Matrix3c>(v.data());
  const double drift = std::abs(rho.trace() - rho0.m.trace());
  if (drift > 1e-9)
    throw NumericError("integrate_eom: trace drift " + std::to_string(drift) +
                       " exceeds 1e-9");
  return DensityMatrix3{rho, Basis::Rotating};
}

LambRates lamb_limit(const EngineParams& params, const BathSpec& cold,
                     const BathSpec& hot) {
  LambRates lr;
  const double jc = spectral_density(cold, params.e2);
  if (jc != 0.0) {
    const double nc = occupation(cold, params.e2);
    lr.gamma_c_down = 2.0 * pi * jc * (1.0 + nc);
    lr.gamma_c_up = 2.0 * pi * jc * nc;
  }
  const double jh = spectral_density(hot, params.e3);
  if (jh != 0.0) {
    const double nh = occupation(hot, params.e3);
    lr.gamma_h_down = 2.0 * pi * jh * (1.0 + nh);
    lr.gamma_h_up = 2.0 * pi * jh * nh;
  }
  lr.decay_23 = 0.5 * (lr.gamma_c_down + lr.gamma_h_down);
  lr.decay_13 = 0.5 * (lr.gamma_h_up + lr.gamma_h_down + lr.gamma_c_up);
  lr.decay_12 = 0.5 * (lr.gamma_c_up + lr.gamma_c_down + lr.gamma_h_up);
  return lr;
}

LambPopulations lamb_populations(const EngineParams& params, const BathSpec& cold,
                                 const BathSpec& hot) {
  const LambRates lr = lamb_limit(params, cold, hot);
  const double r2 = lr.gamma_c_down > 0.0 ? lr.gamma_c_up / lr.gamma_c_down : 0.0;
  const double r3 = lr.gamma_h_down > 0.0 ? lr.gamma_h_up / lr.gamma_h_down : 0.0;
  LambPopulations p;
  p.rho11 = 1.0 / (1.0 + r2 + r3);
  p.rho22 = r2 * p.rho11;
  p.rho33 = r3 * p.rho11;
  return p;
}

} // namespace heng
