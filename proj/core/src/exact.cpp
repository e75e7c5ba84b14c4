#include "activeflux/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace af {

PiecewiseLinearBurgers::PiecewiseLinearBurgers(std::vector<double> nodes, std::vector<double> values, double period)
    : x_(std::move(nodes)), q_(std::move(values)), period_(period) {
    if (x_.size() != q_.size() || x_.size() < 2)
        throw ContractViolation("piecewise linear Burgers data needs matching node and value arrays");
    for (std::size_t k = 1; k < x_.size(); ++k)
        if (!(x_[k] > x_[k - 1]))
            throw ContractViolation("piecewise linear Burgers nodes must increase");
    if (period_ > 0.0 && !(x_.back() < x_.front() + period_))
        throw ContractViolation("periodic node set must lie within one period");
    t_shock_ = std::numeric_limits<double>::infinity();
    const int segments = period_ > 0.0 ? count() : count() - 1;
    for (int k = 0; k < segments; ++k) {
        const double x0 = x_[k];
        const double x1 = (k + 1 < count()) ? x_[k + 1] : x_.front() + period_;
        const double q1 = (k + 1 < count()) ? q_[k + 1] : q_.front();
        const double slope = (q1 - q_[k]) / (x1 - x0);
        if (slope < 0.0)
            t_shock_ = std::min(t_shock_, -1.0 / slope);
    }
}

void PiecewiseLinearBurgers::check_time(double t) const {
    if (!(t >= 0.0) || t >= t_shock_) {
        std::ostringstream os;
        os << "piecewise linear Burgers solution requested at t = " << t << ", shock forms at " << t_shock_;
        throw NumericalError(os.str());
    }
}

double PiecewiseLinearBurgers::moved(int k, double t) const {
    if (k < count())
        return x_[k] + q_[k] * t;
    return x_.front() + period_ + q_.front() * t;
}

double PiecewiseLinearBurgers::node_value(int k) const { return k < count() ? q_[k] : q_.front(); }

double PiecewiseLinearBurgers::value(double t, double x) const {
    check_time(t);
    const int last = period_ > 0.0 ? count() : count() - 1;
    const double lo = moved(0, t);
    if (period_ > 0.0) {
        x = lo + std::fmod(x - lo, period_);
        if (x < lo)
            x += period_;
    } else {
        if (x <= lo)
            return q_.front();
        if (x >= moved(last, t))
            return q_.back();
    }
    // Binary search on the moved nodes, which stay sorted before the shock time.
    int a = 0, b = last;
    while (b - a > 1) {
        const int mid = (a + b) / 2;
        if (moved(mid, t) <= x)
            a = mid;
        else
            b = mid;
    }
    const double xa = moved(a, t), xb = moved(b, t);
    const double s = (x - xa) / (xb - xa);
    return node_value(a) * (1.0 - s) + node_value(b) * s;
}

double PiecewiseLinearBurgers::primitive(double t, double x) const {
    const int last = period_ > 0.0 ? count() : count() - 1;
    double sum = 0.0;
    for (int k = 0; k < last; ++k) {
        const double xa = moved(k, t), xb = moved(k + 1, t);
        if (x <= xa)
            break;
        const double qa = node_value(k), qb = node_value(k + 1);
        if (x >= xb) {
            sum += 0.5 * (qa + qb) * (xb - xa);
        } else {
            const double qx = qa + (qb - qa) * (x - xa) / (xb - xa);
            sum += 0.5 * (qa + qx) * (x - xa);
            break;
        }
    }
    return sum;
}

double PiecewiseLinearBurgers::average(double t, double a, double b) const {
    check_time(t);
    if (!(b > a))
        throw ContractViolation("average needs b > a");
    const double lo = moved(0, t);
    if (period_ > 0.0) {
        const double total = primitive(t, lo + period_);
        auto full = [&](double x) {
            const double shifts = std::floor((x - lo) / period_);
            return shifts * total + primitive(t, x - shifts * period_);
        };
        return (full(b) - full(a)) / (b - a);
    }
    const double hi = moved(count() - 1, t);
    auto full = [&](double x) {
        if (x < lo)
            return (x - lo) * q_.front();
        if (x > hi)
            return primitive(t, hi) + (x - hi) * q_.back();
        return primitive(t, x);
    };
    return (full(b) - full(a)) / (b - a);
}

double exact_burgers_piecewise_linear(const std::vector<double>& nodes, const std::vector<double>& values,
                                      double t, double x) {
    return PiecewiseLinearBurgers(nodes, values).value(t, x);
}

EulerRiemann::EulerRiemann(const Vec& left, const Vec& right, double gamma)
    : rl_(left[0]), vl_(left[1]), pl_(left[2]), rr_(right[0]), vr_(right[1]), pr_(right[2]), g_(gamma) {
    if (!(rl_ > 0.0 && pl_ > 0.0 && rr_ > 0.0 && pr_ > 0.0))
        throw NumericalError("exact Euler Riemann solver needs positive density and pressure");
    cl_ = std::sqrt(g_ * pl_ / rl_);
    cr_ = std::sqrt(g_ * pr_ / rr_);
    if (2.0 * (cl_ + cr_) / (g_ - 1.0) <= vr_ - vl_)
        throw NumericalError("Riemann data generate vacuum");

    const double z = (g_ - 1.0) / (2.0 * g_);
    double p = std::pow((cl_ + cr_ - 0.5 * (g_ - 1.0) * (vr_ - vl_)) /
                            (cl_ / std::pow(pl_, z) + cr_ / std::pow(pr_, z)),
                        1.0 / z);
    bool converged = false;
    for (iterations_ = 1; iterations_ <= 100; ++iterations_) {
        double dl, dr;
        const double f = side_function(p, rl_, pl_, cl_, &dl) + side_function(p, rr_, pr_, cr_, &dr) + vr_ - vl_;
        double next = p - f / (dl + dr);
        if (next <= 0.0)
            next = 0.5 * p;
        const double change = 2.0 * std::abs(next - p) / (next + p);
        p = next;
        if (change < 1e-12) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NumericalError("exact Euler Riemann solver: Newton iteration did not converge");
    p_star_ = p;
    double dl, dr;
    v_star_ = 0.5 * (vl_ + vr_) + 0.5 * (side_function(p, rr_, pr_, cr_, &dr) - side_function(p, rl_, pl_, cl_, &dl));
}

double EulerRiemann::side_function(double p, double rho, double pk, double c, double* deriv) const {
    if (p > pk) {
        const double A = 2.0 / ((g_ + 1.0) * rho);
        const double B = (g_ - 1.0) / (g_ + 1.0) * pk;
        const double s = std::sqrt(A / (p + B));
        *deriv = s * (1.0 - 0.5 * (p - pk) / (B + p));
        return (p - pk) * s;
    }
    const double ratio = p / pk;
    *deriv = std::pow(ratio, -(g_ + 1.0) / (2.0 * g_)) / (rho * c);
    return 2.0 * c / (g_ - 1.0) * (std::pow(ratio, (g_ - 1.0) / (2.0 * g_)) - 1.0);
}

double EulerRiemann::pressure_function(double p) const {
    double dl, dr;
    return side_function(p, rl_, pl_, cl_, &dl) + side_function(p, rr_, pr_, cr_, &dr) + vr_ - vl_;
}

double EulerRiemann::star_density_left() const {
    const double ratio = p_star_ / pl_;
    if (p_star_ > pl_) {
        const double g6 = (g_ - 1.0) / (g_ + 1.0);
        return rl_ * (ratio + g6) / (g6 * ratio + 1.0);
    }
    return rl_ * std::pow(ratio, 1.0 / g_);
}

double EulerRiemann::star_density_right() const {
    const double ratio = p_star_ / pr_;
    if (p_star_ > pr_) {
        const double g6 = (g_ - 1.0) / (g_ + 1.0);
        return rr_ * (ratio + g6) / (g6 * ratio + 1.0);
    }
    return rr_ * std::pow(ratio, 1.0 / g_);
}

EulerRiemann::Wave EulerRiemann::left_wave() const {
    if (p_star_ > pl_) {
        const double s = vl_ - cl_ * std::sqrt((g_ + 1.0) / (2.0 * g_) * p_star_ / pl_ + (g_ - 1.0) / (2.0 * g_));
        return {true, s, s};
    }
    const double c_star = cl_ * std::pow(p_star_ / pl_, (g_ - 1.0) / (2.0 * g_));
    return {false, vl_ - cl_, v_star_ - c_star};
}

EulerRiemann::Wave EulerRiemann::right_wave() const {
    if (p_star_ > pr_) {
        const double s = vr_ + cr_ * std::sqrt((g_ + 1.0) / (2.0 * g_) * p_star_ / pr_ + (g_ - 1.0) / (2.0 * g_));
        return {true, s, s};
    }
    const double c_star = cr_ * std::pow(p_star_ / pr_, (g_ - 1.0) / (2.0 * g_));
    return {false, vr_ + cr_, v_star_ + c_star};
}

Vec EulerRiemann::sample(double xi) const {
    Vec w(3);
    if (xi <= v_star_) {
        const Wave wave = left_wave();
        if (xi <= wave.head) {
            w << rl_, vl_, pl_;
        } else if (xi >= wave.tail) {
            w << star_density_left(), v_star_, p_star_;
        } else {
            const double c = 2.0 / (g_ + 1.0) * (cl_ + 0.5 * (g_ - 1.0) * (vl_ - xi));
            const double v = 2.0 / (g_ + 1.0) * (cl_ + 0.5 * (g_ - 1.0) * vl_ + xi);
            w << rl_ * std::pow(c / cl_, 2.0 / (g_ - 1.0)), v, pl_ * std::pow(c / cl_, 2.0 * g_ / (g_ - 1.0));
        }
    } else {
        const Wave wave = right_wave();
        if (xi >= wave.head) {
            w << rr_, vr_, pr_;
        } else if (xi <= wave.tail) {
            w << star_density_right(), v_star_, p_star_;
        } else {
            const double c = 2.0 / (g_ + 1.0) * (cr_ - 0.5 * (g_ - 1.0) * (vr_ - xi));
            const double v = 2.0 / (g_ + 1.0) * (-cr_ + 0.5 * (g_ - 1.0) * vr_ + xi);
            w << rr_ * std::pow(c / cr_, 2.0 / (g_ - 1.0)), v, pr_ * std::pow(c / cr_, 2.0 * g_ / (g_ - 1.0));
        }
    }
    return w;
}

Vec exact_euler_riemann(const Vec& left, const Vec& right, double xi, double gamma) {
    return EulerRiemann(left, right, gamma).sample(xi);
}

} // namespace af
