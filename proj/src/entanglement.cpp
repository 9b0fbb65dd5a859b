#include "qedsat/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include "qedsat/errors.hpp"

namespace qedsat {

PureTwoQubitState PureTwoQubitState::normalized(const Vector4c& v) {
    const double n = v.norm();
    if (!(n > 0.0) || !std::isfinite(n))
        throw ZeroVector("cannot normalize a zero or non-finite vector");
    return PureTwoQubitState(v / n);
}

PureTwoQubitState normalize(const Vector4c& v) { return PureTwoQubitState::normalized(v); }

double concurrence_raw(const Vector4c& v) {
    return 2.0 * std::abs(v[0] * v[3] - v[1] * v[2]);
}

double concurrence(const PureTwoQubitState& s) {
    return std::clamp(concurrence_raw(s.amps()), 0.0, 1.0);
}

double fidelity(const PureTwoQubitState& a, const PureTwoQubitState& b) {
    return std::norm(a.amps().dot(b.amps()));
}

const char* bell_name(BellState b) {
    switch (b) {
        case BellState::PhiPlus: return "Phi+";
        case BellState::PhiMinus: return "Phi-";
        case BellState::PsiPlus: return "Psi+";
        case BellState::PsiMinus: return "Psi-";
    }
    return "?";
}

PureTwoQubitState bell_state(BellState b) {
    Vector4c v = Vector4c::Zero();
    switch (b) {
        case BellState::PhiPlus: v << 1, 0, 0, 1; break;
        case BellState::PhiMinus: v << 1, 0, 0, -1; break;
        case BellState::PsiPlus: v << 0, 1, 1, 0; break;
        case BellState::PsiMinus: v << 0, 1, -1, 0; break;
    }
    return normalize(v);
}

namespace {

const Eigen::Matrix4d& bell_transform() {
    static const Eigen::Matrix4d u = [] {
        const double r = 1.0 / std::sqrt(2.0);
        Eigen::Matrix4d m;
        // rows: Phi+, Phi-, Psi+, Psi- over columns (RR, RL, LR, LL)
        m << r, 0, 0, r,
             r, 0, 0, -r,
             0, r, r, 0,
             0, r, -r, 0;
        return m;
    }();
    return u;
}

}  // namespace

Vector4c bell_coords(const Vector4c& v) { return bell_transform() * v; }

Vector4c bell_coords(const PureTwoQubitState& s) { return bell_coords(s.amps()); }

Vector4c from_bell_coords(const Vector4c& bell) {
    return bell_transform().transpose() * bell;
}

const char* plane_name(BellPlane p) {
    return p == BellPlane::PhiMinusPsiPlus ? "(Phi-,Psi+)" : "(Phi+,Psi-)";
}

std::string BellClassification::describe() const {
    switch (kind) {
        case Kind::Bell: return bell_name(which);
        case Kind::PlanarFamily:
            return std::string("planar ") + plane_name(plane) + " xi=" + std::to_string(angle);
        case Kind::NotMaximal:
            return "not maximal (C=" + std::to_string(concurrence) + ")";
    }
    return "?";
}

BellClassification classify(const PureTwoQubitState& s, double tol) {
    BellClassification out{};
    out.concurrence = concurrence(s);

    for (BellState b : {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus,
                        BellState::PsiMinus}) {
        if (fidelity(s, bell_state(b)) >= 1.0 - tol) {
            out.kind = BellClassification::Kind::Bell;
            out.which = b;
            return out;
        }
    }

    if (out.concurrence >= 1.0 - tol) {
        const Vector4c bc = bell_coords(s);
        // support in (Phi-, Psi+) -> indices 1,2; in (Phi+, Psi-) -> 0,3
        const double w12 = std::norm(bc[1]) + std::norm(bc[2]);
        const double w03 = std::norm(bc[0]) + std::norm(bc[3]);
        for (auto [plane, ia, ib, leak] :
             {std::tuple{BellPlane::PhiMinusPsiPlus, 1, 2, w03},
              std::tuple{BellPlane::PhiPlusPsiMinus, 0, 3, w12}}) {
            if (leak > tol) continue;
            // strip global phase against the larger coefficient, then both
            // must be real for a planar-family member
            const Complex big = std::abs(bc[ia]) >= std::abs(bc[ib]) ? bc[ia] : bc[ib];
            const Complex phase = big / std::abs(big);
            const Complex ca = bc[ia] / phase;
            const Complex cb = bc[ib] / phase;
            if (std::abs(ca.imag()) > tol || std::abs(cb.imag()) > tol) continue;
            out.kind = BellClassification::Kind::PlanarFamily;
            out.plane = plane;
            out.angle = std::atan2(cb.real(), ca.real());
            return out;
        }
    }

    out.kind = BellClassification::Kind::NotMaximal;
    return out;
}

}  // namespace qedsat
