#pragma once

#include "activeflux/types.hpp"

#include <array>
#include <memory>
#include <string>

namespace af {

class ScalarLaw;
class SystemLaw;

class Model {
public:
    virtual ~Model() = default;

    virtual std::string name() const = 0;
    virtual int size() const = 0;
    // x-direction flux of the conservative variables.
    virtual Vec flux(const Vec& q) const = 0;
    // Largest |eigenvalue| of the x-direction flux Jacobian.
    virtual double max_speed(const Vec& q) const = 0;

    virtual const ScalarLaw* as_scalar() const { return nullptr; }
    virtual const SystemLaw* as_system() const { return nullptr; }
};

class ScalarLaw : public Model {
public:
    int size() const override { return 1; }
    Vec flux(const Vec& q) const override { return scalar_vec(f(q[0])); }
    double max_speed(const Vec& q) const override { return std::abs(a(q[0])); }
    const ScalarLaw* as_scalar() const override { return this; }

    virtual double f(double q) const = 0;
    virtual double a(double q) const = 0;
    // Two-dimensional fluxes and speeds; default is the same law in both directions.
    virtual double fy(double q) const { return f(q); }
    virtual std::array<double, 2> speed2d(double q) const { return {a(q), a(q)}; }
    double fx(double q) const { return f(q); }

    // Rankine-Hugoniot speed.
    virtual double shock_speed(double ql, double qr) const;
    // Inverse of a; only meaningful for strictly monotone a.
    virtual double inverse_speed(double s) const = 0;
    // Whether f is convex, so that riemann() can use the shock/fan dichotomy.
    virtual bool convex() const { return true; }
};

// Exact self-similar solution of the scalar Riemann problem at xi = x/t.
double exact_scalar_riemann(const ScalarLaw& law, double ql, double qr, double xi);

// Systems: conservative variables are what the scheme stores; all eigen
// quantities are expressed in the working variables w.
// Eigenvalue index 0 is the fastest right-going family.
class SystemLaw : public Model {
public:
    const SystemLaw* as_system() const override { return this; }
    double max_speed(const Vec& q) const override;

    virtual Vec to_working(const Vec& q) const = 0;
    virtual Vec to_conservative(const Vec& w) const = 0;
    // Throws NumericalError when w is outside the admissible set.
    virtual void check_working(const Vec& w) const = 0;

    virtual Vec eigenvalues(const Vec& w) const = 0;
    // Rows are left eigenvectors: R J R^-1 = diag(lambda).
    virtual Mat left_eigenvectors(const Vec& w) const = 0;
    // R^-1.
    virtual Mat right_eigenvectors(const Vec& w) const = 0;
    // Jacobian of the quasilinear form in working variables.
    virtual Mat working_jacobian(const Vec& w) const = 0;

    // R^-1 e_k e_k^T R.
    Mat projector(const Vec& w, int k) const;

    virtual bool has_characteristic_variables() const { return false; }
    virtual Vec to_characteristic(const Vec& w) const;
    virtual Vec from_characteristic(const Vec& Q) const;
    // lambda_i expressed through the characteristic variables.
    virtual Vec characteristic_speeds(const Vec& Q) const;
};

std::shared_ptr<const ScalarLaw> burgers();
std::shared_ptr<const ScalarLaw> quartic();
std::shared_ptr<const ScalarLaw> linear_advection(double ax, double ay = 0.0);
std::shared_ptr<const SystemLaw> p_system(double gamma = 1.4);
std::shared_ptr<const SystemLaw> isentropic_euler(double kappa = 1.0, double gamma = 1.4);
std::shared_ptr<const SystemLaw> full_euler(double gamma = 1.4);

// Quartic law helpers.
double quartic_shock_speed(double ql, double qr);
double quartic_rarefaction(double xi);

// Euler helpers in primitive variables (rho, v, p).
Vec euler_primitive_to_conservative(const Vec& w, double gamma);
Vec euler_conservative_to_primitive(const Vec& q, double gamma);

} // namespace af
