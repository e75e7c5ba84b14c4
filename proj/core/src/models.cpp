#include "activeflux/models.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace af {

double ScalarLaw::shock_speed(double ql, double qr) const {
    if (ql == qr)
        return a(ql);
    return (f(ql) - f(qr)) / (ql - qr);
}

double exact_scalar_riemann(const ScalarLaw& law, double ql, double qr, double xi) {
    const double al = law.a(ql), ar = law.a(qr);
    if (al > ar) {
        return xi < law.shock_speed(ql, qr) ? ql : qr;
    }
    if (al == ar)
        return xi < al ? ql : qr;
    if (xi <= al)
        return ql;
    if (xi >= ar)
        return qr;
    return law.inverse_speed(xi);
}

namespace {

class Burgers final : public ScalarLaw {
public:
    std::string name() const override { return "burgers"; }
    double f(double q) const override { return 0.5 * q * q; }
    double a(double q) const override { return q; }
    double inverse_speed(double s) const override { return s; }
    double shock_speed(double ql, double qr) const override { return 0.5 * (ql + qr); }
};

class Quartic final : public ScalarLaw {
public:
    std::string name() const override { return "quartic"; }
    double f(double q) const override {
        const double q2 = q * q;
        return 0.25 * q2 * q2;
    }
    double a(double q) const override { return q * q * q; }
    double inverse_speed(double s) const override { return std::cbrt(s); }
    double shock_speed(double ql, double qr) const override { return quartic_shock_speed(ql, qr); }
};

class LinearAdvection final : public ScalarLaw {
public:
    LinearAdvection(double ax, double ay) : ax_(ax), ay_(ay) {}
    std::string name() const override { return "linear-advection"; }
    double f(double q) const override { return ax_ * q; }
    double a(double) const override { return ax_; }
    double fy(double q) const override { return ay_ * q; }
    std::array<double, 2> speed2d(double) const override { return {ax_, ay_}; }
    double shock_speed(double, double) const override { return ax_; }
    double inverse_speed(double) const override {
        throw ContractViolation("linear advection has no inverse wave speed");
    }

private:
    double ax_, ay_;
};

[[noreturn, gnu::noinline, gnu::cold]] void inadmissible(double value, const char* what) {
    std::ostringstream os;
    os << "inadmissible state: " << what << " = " << value;
    throw NumericalError(os.str());
}

inline void require_positive(double value, const char* what) {
    if (!(value > 0.0 && value <= std::numeric_limits<double>::max())) [[unlikely]]
        inadmissible(value, what);
}

// rho_t + v_x = 0, v_t + p(rho)_x = 0 with p = rho^gamma.
class PSystem final : public SystemLaw {
public:
    explicit PSystem(double gamma) : g_(gamma) {}
    std::string name() const override { return "p-system"; }
    int size() const override { return 2; }

    double sound(double rho) const { return std::sqrt(g_ * std::pow(rho, g_ - 1.0)); }

    Vec flux(const Vec& q) const override {
        check_working(q);
        Vec r(2);
        r << q[1], std::pow(q[0], g_);
        return r;
    }
    Vec to_working(const Vec& q) const override {
        check_working(q);
        return q;
    }
    Vec to_conservative(const Vec& w) const override { return w; }
    void check_working(const Vec& w) const override { require_positive(w[0], "rho"); }

    Vec eigenvalues(const Vec& w) const override {
        const double c = sound(w[0]);
        Vec l(2);
        l << c, -c;
        return l;
    }
    Mat left_eigenvectors(const Vec& w) const override {
        const double c = sound(w[0]);
        Mat R(2, 2);
        R << c, 1.0, c, -1.0;
        return R;
    }
    Mat right_eigenvectors(const Vec& w) const override {
        const double c = sound(w[0]);
        Mat Ri(2, 2);
        Ri << 0.5 / c, 0.5 / c, 0.5, -0.5;
        return Ri;
    }
    Mat working_jacobian(const Vec& w) const override {
        const double c = sound(w[0]);
        Mat J(2, 2);
        J << 0.0, 1.0, c * c, 0.0;
        return J;
    }

    bool has_characteristic_variables() const override { return true; }
    Vec to_characteristic(const Vec& w) const override {
        const double s = 2.0 * w[0] * sound(w[0]) / (g_ + 1.0);
        Vec Q(2);
        Q << s + w[1], s - w[1];
        return Q;
    }
    Vec from_characteristic(const Vec& Q) const override {
        const double base = (g_ + 1.0) * (Q[0] + Q[1]) / (4.0 * std::sqrt(g_));
        require_positive(base, "rho");
        Vec w(2);
        w << std::pow(base, 2.0 / (g_ + 1.0)), 0.5 * (Q[0] - Q[1]);
        return w;
    }
    Vec characteristic_speeds(const Vec& Q) const override {
        // c = sqrt(gamma) rho^((gamma-1)/2) written through rho^((gamma+1)/2) directly
        const double base = (g_ + 1.0) * (Q[0] + Q[1]) / (4.0 * std::sqrt(g_));
        require_positive(base, "rho");
        const double c = std::sqrt(g_) * std::pow(base, (g_ - 1.0) / (g_ + 1.0));
        Vec l(2);
        l << c, -c;
        return l;
    }

private:
    double g_;
};

// Conservative (rho, rho v), working (rho, v), p = kappa rho^gamma.
class IsentropicEuler final : public SystemLaw {
public:
    IsentropicEuler(double kappa, double gamma) : k_(kappa), g_(gamma) {}
    std::string name() const override { return "isentropic-euler"; }
    int size() const override { return 2; }

    double sound(double rho) const { return std::sqrt(g_ * k_ * std::pow(rho, g_ - 1.0)); }

    Vec flux(const Vec& q) const override {
        require_positive(q[0], "rho");
        const double v = q[1] / q[0];
        Vec r(2);
        r << q[1], q[1] * v + k_ * std::pow(q[0], g_);
        return r;
    }
    Vec to_working(const Vec& q) const override {
        require_positive(q[0], "rho");
        Vec w(2);
        w << q[0], q[1] / q[0];
        return w;
    }
    Vec to_conservative(const Vec& w) const override {
        Vec q(2);
        q << w[0], w[0] * w[1];
        return q;
    }
    void check_working(const Vec& w) const override { require_positive(w[0], "rho"); }

    Vec eigenvalues(const Vec& w) const override {
        const double c = sound(w[0]);
        Vec l(2);
        l << w[1] + c, w[1] - c;
        return l;
    }
    Mat left_eigenvectors(const Vec& w) const override {
        const double cr = sound(w[0]) / w[0];
        Mat R(2, 2);
        R << cr, 1.0, -cr, 1.0;
        return R;
    }
    Mat right_eigenvectors(const Vec& w) const override {
        const double rc = 0.5 * w[0] / sound(w[0]);
        Mat Ri(2, 2);
        Ri << rc, -rc, 0.5, 0.5;
        return Ri;
    }
    Mat working_jacobian(const Vec& w) const override {
        const double c = sound(w[0]);
        Mat J(2, 2);
        J << w[1], w[0], c * c / w[0], w[1];
        return J;
    }

    bool has_characteristic_variables() const override { return true; }
    Vec to_characteristic(const Vec& w) const override {
        const double s = 2.0 * sound(w[0]) / (g_ - 1.0);
        Vec Q(2);
        Q << w[1] + s, w[1] - s;
        return Q;
    }
    Vec from_characteristic(const Vec& Q) const override {
        const double c = 0.25 * (g_ - 1.0) * (Q[0] - Q[1]);
        require_positive(c, "sound speed");
        Vec w(2);
        w << std::pow(c * c / (g_ * k_), 1.0 / (g_ - 1.0)), 0.5 * (Q[0] + Q[1]);
        return w;
    }
    Vec characteristic_speeds(const Vec& Q) const override {
        const double c = 0.25 * (g_ - 1.0) * (Q[0] - Q[1]);
        require_positive(c, "sound speed");
        const double v = 0.5 * (Q[0] + Q[1]);
        Vec l(2);
        l << v + c, v - c;
        return l;
    }

private:
    double k_, g_;
};

// Conservative (rho, rho v, e), working (rho, v, p).
class FullEuler final : public SystemLaw {
public:
    explicit FullEuler(double gamma) : g_(gamma) {}
    std::string name() const override { return "euler"; }
    int size() const override { return 3; }

    Vec flux(const Vec& q) const override {
        const Vec w = to_working(q);
        Vec r(3);
        r << q[1], q[1] * w[1] + w[2], w[1] * (q[2] + w[2]);
        return r;
    }
    Vec to_working(const Vec& q) const override {
        const Vec w = euler_conservative_to_primitive(q, g_);
        check_working(w);
        return w;
    }
    Vec to_conservative(const Vec& w) const override { return euler_primitive_to_conservative(w, g_); }
    void check_working(const Vec& w) const override {
        require_positive(w[0], "rho");
        require_positive(w[2], "p");
    }

    Vec eigenvalues(const Vec& w) const override {
        const double c = std::sqrt(g_ * w[2] / w[0]);
        Vec l(3);
        l << w[1] + c, w[1], w[1] - c;
        return l;
    }
    Mat left_eigenvectors(const Vec& w) const override {
        const double rho = w[0], p = w[2];
        const double c = std::sqrt(g_ * p / rho);
        const double rmg = std::pow(rho, -g_);
        Mat R(3, 3);
        R << 0.0, 1.0, c / (g_ * p),
            -g_ * p * rmg / rho, 0.0, rmg,
            0.0, -1.0, c / (g_ * p);
        return R;
    }
    Mat right_eigenvectors(const Vec& w) const override {
        const double rho = w[0], p = w[2];
        const double c = std::sqrt(g_ * p / rho);
        Mat Ri(3, 3);
        Ri << rho / (2.0 * c), -std::pow(rho, 1.0 + g_) / (g_ * p), rho / (2.0 * c),
            0.5, 0.0, -0.5,
            g_ * p / (2.0 * c), 0.0, g_ * p / (2.0 * c);
        return Ri;
    }
    Mat working_jacobian(const Vec& w) const override {
        Mat J(3, 3);
        J << w[1], w[0], 0.0,
            0.0, w[1], 1.0 / w[0],
            0.0, g_ * w[2], w[1];
        return J;
    }

private:
    double g_;
};

} // namespace

double SystemLaw::max_speed(const Vec& q) const {
    return eigenvalues(to_working(q)).cwiseAbs().maxCoeff();
}

Mat SystemLaw::projector(const Vec& w, int k) const {
    const Mat R = left_eigenvectors(w);
    const Mat Ri = right_eigenvectors(w);
    return Ri.col(k) * R.row(k);
}

Vec SystemLaw::to_characteristic(const Vec&) const {
    throw ContractViolation(name() + " has no characteristic variables");
}
Vec SystemLaw::from_characteristic(const Vec&) const {
    throw ContractViolation(name() + " has no characteristic variables");
}
Vec SystemLaw::characteristic_speeds(const Vec&) const {
    throw ContractViolation(name() + " has no characteristic variables");
}

std::shared_ptr<const ScalarLaw> burgers() { return std::make_shared<Burgers>(); }
std::shared_ptr<const ScalarLaw> quartic() { return std::make_shared<Quartic>(); }
std::shared_ptr<const ScalarLaw> linear_advection(double ax, double ay) {
    return std::make_shared<LinearAdvection>(ax, ay);
}
std::shared_ptr<const SystemLaw> p_system(double gamma) { return std::make_shared<PSystem>(gamma); }
std::shared_ptr<const SystemLaw> isentropic_euler(double kappa, double gamma) {
    return std::make_shared<IsentropicEuler>(kappa, gamma);
}
std::shared_ptr<const SystemLaw> full_euler(double gamma) { return std::make_shared<FullEuler>(gamma); }

double quartic_shock_speed(double ql, double qr) {
    return (ql * ql * ql + qr * ql * ql + qr * qr * ql + qr * qr * qr) / 4.0;
}

double quartic_rarefaction(double xi) { return std::cbrt(xi); }

Vec euler_primitive_to_conservative(const Vec& w, double gamma) {
    Vec q(3);
    q << w[0], w[0] * w[1], w[2] / (gamma - 1.0) + 0.5 * w[0] * w[1] * w[1];
    return q;
}

Vec euler_conservative_to_primitive(const Vec& q, double gamma) {
    if (!(q[0] > 0.0) || !std::isfinite(q[0])) {
        std::ostringstream os;
        os << "inadmissible state: rho = " << q[0];
        throw NumericalError(os.str());
    }
    const double v = q[1] / q[0];
    Vec w(3);
    w << q[0], v, (gamma - 1.0) * (q[2] - 0.5 * q[1] * v);
    return w;
}

} // namespace af
