#include "qedsat/random.hpp"

#include <cmath>

namespace qedsat {

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

Matrix2c Rng::haar_unitary2() {
    Matrix2c z;
    z << normal_complex(), normal_complex(), normal_complex(), normal_complex();
    // Gram-Schmidt on the columns, then fix the phases so the implied R has
    // a positive diagonal.
    Vector2c q0 = z.col(0);
    const double n0 = q0.norm();
    q0 /= n0;
    Vector2c q1 = z.col(1) - q0.dot(z.col(1)) * q0;
    q1.normalize();
    // r11 = q1^dagger z1; rotate q1 so r11 > 0
    const Complex r11 = q1.dot(z.col(1));
    if (std::abs(r11) > 0.0) q1 *= r11 / std::abs(r11);
    Matrix2c u;
    u.col(0) = q0;
    u.col(1) = q1;
    return u;
}

PureTwoQubitState Rng::random_max_entangled() {
    const Matrix2c u = haar_unitary2();
    const Matrix2c v = haar_unitary2();
    Matrix4c uv = Matrix4c::Zero();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) uv(2 * i + k, 2 * j + l) = u(i, j) * v(k, l);
    return normalize(uv * bell_state(BellState::PhiPlus).amps());
}

PureTwoQubitState Rng::random_state() {
    Vector4c v;
    for (int i = 0; i < 4; ++i) v[i] = normal_complex();
    return normalize(v);
}

}  // namespace qedsat
