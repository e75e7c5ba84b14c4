#include <doctest.h>

#include "activeflux/exact.hpp"
#include "activeflux/models.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>

using namespace af;

namespace {

Vec v2(double a, double b) {
    Vec r(2);
    r << a, b;
    return r;
}
Vec v3(double a, double b, double c) {
    Vec r(3);
    r << a, b, c;
    return r;
}

// Jacobian of the conservative flux by central differences, moved into working
// variables: J_w = (dq/dw)^-1 (df/dq) (dq/dw).
Mat fd_working_jacobian(const SystemLaw& law, const Vec& w) {
    const int m = law.size();
    const double h = 1e-6;
    Mat dfdq(m, m), dqdw(m, m);
    const Vec q = law.to_conservative(w);
    for (int k = 0; k < m; ++k) {
        Vec e = Vec::Zero(m);
        e[k] = h * std::max(1.0, std::abs(q[k]));
        dfdq.col(k) = (law.flux(q + e) - law.flux(q - e)) / (2.0 * e[k]);
        Vec ew = Vec::Zero(m);
        ew[k] = h * std::max(1.0, std::abs(w[k]));
        dqdw.col(k) = (law.to_conservative(w + ew) - law.to_conservative(w - ew)) / (2.0 * ew[k]);
    }
    return dqdw.inverse() * dfdq * dqdw;
}

Vec random_working(const SystemLaw& law, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> pos(0.1, 3.0), vel(-2.0, 2.0);
    if (law.size() == 3)
        return v3(pos(rng), vel(rng), pos(rng));
    return v2(pos(rng), vel(rng));
}

} // namespace

TEST_CASE("scalar model examples") {
    auto b = burgers();
    CHECK(b->a(3.0) == 3.0);
    CHECK(b->f(2.0) == 2.0);
    CHECK(b->shock_speed(1.0, 0.0) == 0.5);

    auto q = quartic();
    CHECK(q->shock_speed(1.0, -5.0) == -26.0);
    CHECK(quartic_shock_speed(1.0, -5.0) == -26.0);
    CHECK(q->shock_speed(1.3, 1.3) == doctest::Approx(q->a(1.3)).epsilon(1e-15));
    CHECK(quartic_rarefaction(0.7) == doctest::Approx(std::cbrt(0.7)));
    CHECK(q->inverse_speed(1.0) == 1.0);
}

TEST_CASE("exact_scalar_riemann examples") {
    auto b = burgers();
    CHECK(exact_scalar_riemann(*b, 1.0, 0.0, 0.4) == 1.0);
    CHECK(exact_scalar_riemann(*b, 1.0, 0.0, 0.6) == 0.0);
    CHECK(exact_scalar_riemann(*b, -1.0, 1.0, 0.3) == doctest::Approx(0.3));
    CHECK(exact_scalar_riemann(*b, -1.0, 1.0, -2.0) == -1.0);
    CHECK(exact_scalar_riemann(*b, -1.0, 1.0, 2.0) == 1.0);

    auto q = quartic();
    CHECK(exact_scalar_riemann(*q, -1.0, 1.0, 0.0) == 0.0);
    // the shock runs left at -26: the left state lies behind it
    CHECK(exact_scalar_riemann(*q, 1.0, -5.0, -27.0) == 1.0);
    CHECK(exact_scalar_riemann(*q, 1.0, -5.0, -25.0) == -5.0);
}

TEST_CASE("exact_scalar_riemann obeys Rankine-Hugoniot and the Lax condition") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    for (auto law : {burgers(), quartic()}) {
        for (int trial = 0; trial < 200; ++trial) {
            const double ql = U(rng), qr = U(rng);
            if (law->a(ql) > law->a(qr)) {
                const double s = (law->f(ql) - law->f(qr)) / (ql - qr);
                CHECK(law->a(ql) > s);
                CHECK(s > law->a(qr));
                CHECK(exact_scalar_riemann(*law, ql, qr, s - 1e-9) == ql);
                CHECK(exact_scalar_riemann(*law, ql, qr, s + 1e-9) == qr);
            } else {
                // continuous fan: samples are monotone between the states
                double prev = ql;
                for (int k = 0; k <= 50; ++k) {
                    const double xi = law->a(ql) - 1.0 + k * (law->a(qr) - law->a(ql) + 2.0) / 50.0;
                    const double v = exact_scalar_riemann(*law, ql, qr, xi);
                    CHECK((qr - ql) * (v - prev) >= -1e-14);
                    prev = v;
                }
            }
        }
    }
}

TEST_CASE("p-system examples") {
    auto p = p_system();
    CHECK(p->size() == 2);
    CHECK(p->has_characteristic_variables());
    const Vec l = p->eigenvalues(v2(1.0, 0.3));
    CHECK(l[0] == doctest::Approx(std::sqrt(1.4)));
    CHECK(l[1] == doctest::Approx(-std::sqrt(1.4)));
    CHECK(p->eigenvalues(v2(1.0, -2.0)) == l);
    const Vec w = v2(0.7, -0.4);
    const Vec back = p->from_characteristic(p->to_characteristic(w));
    CHECK(back[0] == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(back[1] == doctest::Approx(-0.4).epsilon(1e-14));
    CHECK_THROWS_AS(p->check_working(v2(-0.1, 0.0)), NumericalError);
}

TEST_CASE("isentropic Euler examples") {
    auto e = isentropic_euler();
    const Vec l = e->eigenvalues(v2(1.0, 0.0));
    CHECK(l[0] == doctest::Approx(std::sqrt(1.4)));
    CHECK(l[1] == doctest::Approx(-std::sqrt(1.4)));
    const Vec w = v2(2.3, 0.8);
    const Vec back = e->from_characteristic(e->to_characteristic(w));
    CHECK(back[0] == doctest::Approx(2.3).epsilon(1e-13));
    CHECK(back[1] == doctest::Approx(0.8).epsilon(1e-13));
    std::mt19937_64 rng(1);
    for (int k = 0; k < 100; ++k) {
        const Vec s = random_working(*e, rng);
        const double c = std::sqrt(1.4 * std::pow(s[0], 0.4));
        if (std::abs(s[1]) < c) {
            const Vec lam = e->eigenvalues(s);
            CHECK(lam[1] < 0.0);
            CHECK(lam[0] > 0.0);
        }
    }
    CHECK_THROWS_AS(e->to_working(v2(0.0, 1.0)), NumericalError);
}

TEST_CASE("full Euler examples") {
    auto e = full_euler();
    CHECK_FALSE(e->has_characteristic_variables());
    CHECK_THROWS_AS(e->to_characteristic(v3(1, 0, 1)), ContractViolation);
    const Vec w = v3(1.3, 0.4, 0.9);
    const Mat F0 = e->projector(w, 1);
    Mat expect = Mat::Zero(3, 3);
    expect(0, 0) = 1.0;
    expect(0, 2) = -1.3 / (1.4 * 0.9);
    CHECK((F0 - expect).cwiseAbs().maxCoeff() < 1e-14);

    const Vec q = e->to_conservative(w);
    CHECK(q[2] == doctest::Approx(0.9 / 0.4 + 0.5 * 1.3 * 0.16));
    const Vec w2 = e->to_working(q);
    CHECK((w2 - w).cwiseAbs().maxCoeff() < 1e-14);
    CHECK_THROWS_AS(e->to_working(v3(1.0, 0.0, -1.0)), NumericalError);

    std::mt19937_64 rng(2);
    for (int k = 0; k < 100; ++k) {
        const Vec s = random_working(*e, rng);
        Mat sum = Mat::Zero(3, 3), weighted = Mat::Zero(3, 3);
        const Vec lam = e->eigenvalues(s);
        for (int i = 0; i < 3; ++i) {
            sum += e->projector(s, i);
            weighted += e->projector(s, i) * lam[i];
        }
        CHECK((sum - Mat::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((weighted - e->working_jacobian(s)).cwiseAbs().maxCoeff() < 1e-10 * (1.0 + lam.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("eigen-structure matches the flux Jacobian") {
    std::mt19937_64 rng(42);
    for (auto law : {p_system(), isentropic_euler(), full_euler()}) {
        for (int k = 0; k < 1000; ++k) {
            const Vec w = random_working(*law, rng);
            const Mat R = law->left_eigenvectors(w), Ri = law->right_eigenvectors(w);
            const int m = law->size();
            REQUIRE((R * Ri - Mat::Identity(m, m)).cwiseAbs().maxCoeff() < 1e-12);
            const Mat Jw = law->working_jacobian(w);
            const Mat D = R * Jw * Ri;
            const Vec lam = law->eigenvalues(w);
            const double scale = 1.0 + lam.cwiseAbs().maxCoeff();
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j)
                    REQUIRE(std::abs(D(i, j) - (i == j ? lam[i] : 0.0)) < 1e-10 * scale);
            // symbolic Jacobian agrees with the flux
            const Mat Jfd = fd_working_jacobian(*law, w);
            REQUIRE((Jfd - Jw).cwiseAbs().maxCoeff() < 1e-6 * scale);
            const Vec q = law->to_conservative(w);
            REQUIRE((law->to_conservative(law->to_working(q)) - q).cwiseAbs().maxCoeff() < 1e-12 * (1 + q.norm()));
        }
    }
}

TEST_CASE("characteristic transport reproduces the quasilinear form") {
    // Smooth profile w(x); compare dQ/dt = -lambda dQ/dx, mapped to w, with
    // dw/dt = -J(w) dw/dx. Central differences make the residual O(h^2).
    for (auto law : {p_system(), isentropic_euler()}) {
        auto w_of = [](double x) { return v2(1.0 + 0.3 * std::sin(x), 0.2 * std::cos(2.0 * x)); };
        auto residual = [&](double h) {
            double worst = 0.0;
            for (double x : {0.1, 0.7, 1.9, 3.0}) {
                const Vec w = w_of(x);
                const Vec dw = (w_of(x + h) - w_of(x - h)) / (2.0 * h);
                const Vec Qp = law->to_characteristic(w_of(x + h)), Qm = law->to_characteristic(w_of(x - h));
                const Vec Q = law->to_characteristic(w);
                const Vec lam = law->characteristic_speeds(Q);
                const Vec dQdt = -(lam.array() * ((Qp - Qm) / (2.0 * h)).array()).matrix();
                // map a small Q increment back to w
                const double e = 1e-7;
                const Vec wt = (law->from_characteristic(Q + e * dQdt) - law->from_characteristic(Q - e * dQdt)) /
                               (2.0 * e);
                const Vec ref = -law->working_jacobian(w) * dw;
                worst = std::max(worst, (wt - ref).cwiseAbs().maxCoeff());
            }
            return worst;
        };
        const double r1 = residual(1e-2), r2 = residual(5e-3);
        CHECK(r1 < 1e-3);
        CHECK(r1 / r2 > 3.5);
    }
}

TEST_CASE("Euler Riemann solver") {
    const EulerRiemann same(v3(1.0, 0.2, 1.0), v3(1.0, 0.2, 1.0));
    for (double xi : {-2.0, 0.0, 0.5, 3.0}) {
        const Vec s = same.sample(xi);
        CHECK(s[0] == doctest::Approx(1.0));
        CHECK(s[1] == doctest::Approx(0.2));
        CHECK(s[2] == doctest::Approx(1.0));
    }

    const EulerRiemann sod(v3(1.0, 0.0, 1.0), v3(0.125, 0.0, 0.1));
    const double p_bisect = oracle::bisect(
        [](double p) { return oracle::euler_pressure_function(p, 1.0, 0.0, 1.0, 0.125, 0.0, 0.1, 1.4); }, 1e-6, 1.0);
    CHECK(p_bisect == doctest::Approx(0.30313).epsilon(1e-4));
    CHECK(sod.p_star() == doctest::Approx(p_bisect).epsilon(1e-11));
    CHECK(std::abs(sod.pressure_function(sod.p_star())) < 1e-12);
    CHECK(sod.v_star() == doctest::Approx(0.92745).epsilon(1e-4));
    CHECK(sod.right_wave().shock);
    CHECK_FALSE(sod.left_wave().shock);
    CHECK(sod.right_wave().head == doctest::Approx(1.75216).epsilon(1e-4));
    CHECK(sod.star_density_left() == doctest::Approx(0.42632).epsilon(1e-4));
    CHECK(sod.star_density_right() == doctest::Approx(0.26557).epsilon(1e-4));

    const EulerRiemann collide(v3(1.0, 1.0, 1.0), v3(1.0, -1.0, 1.0));
    CHECK(std::abs(collide.sample(0.0)[1]) < 1e-14);
    CHECK(collide.left_wave().shock);
    CHECK(collide.right_wave().shock);

    CHECK_THROWS_AS(EulerRiemann(v3(1.0, -20.0, 1.0), v3(1.0, 20.0, 1.0)), NumericalError);
    CHECK(exact_euler_riemann(v3(1.0, 0.0, 1.0), v3(0.125, 0.0, 0.1), 10.0)[0] == 0.125);
}

TEST_CASE("piecewise linear Burgers evolution") {
    // slope-zero segment translates
    const PiecewiseLinearBurgers flat({0.0, 1.0}, {0.5, 0.5});
    CHECK(flat.value(0.2, 0.6) == doctest::Approx(0.5));
    CHECK(exact_burgers_piecewise_linear({0.0, 1.0}, {0.5, 0.5}, 0.2, 0.6) == doctest::Approx(0.5));

    // q0 = x: solution x / (1 + t)
    const PiecewiseLinearBurgers ramp({-1.0, 0.0, 2.0}, {-1.0, 0.0, 2.0});
    for (double x : {-0.5, 0.3, 1.7})
        CHECK(ramp.value(0.4, x) == doctest::Approx(x / 1.4).epsilon(1e-14));
    CHECK(ramp.average(0.4, 0.0, 1.0) == doctest::Approx(0.5 / 1.4).epsilon(1e-14));

    const PiecewiseLinearBurgers drop({0.0, 1.0, 2.0}, {1.0, 0.0, 0.0});
    CHECK(drop.shock_time() == doctest::Approx(1.0));
    CHECK_THROWS(drop.value(1.0, 0.5));
    CHECK_THROWS(drop.value(1.5, 0.5));

    // Gaussian at 3000 nodes against the characteristic root
    const int n = 3000;
    std::vector<double> xs(n), qs(n);
    auto q0 = [](double x) { return std::exp(-100.0 * (x - 0.5) * (x - 0.5)); };
    for (int k = 0; k < n; ++k) {
        xs[k] = double(k) / n;
        qs[k] = q0(xs[k]);
    }
    const PiecewiseLinearBurgers g(xs, qs, 1.0);
    for (double x : {0.3, 0.5, 0.55, 0.6, 0.9}) {
        const double xi = oracle::exact_footpoint(x, 0.05, q0, [](double q) { return q; }, 0.2);
        CHECK(g.value(0.05, x) == doctest::Approx(q0(xi)).epsilon(1e-5));
    }
}
