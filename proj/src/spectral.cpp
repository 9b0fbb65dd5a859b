#include "qedsat/spectral.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "qedsat/errors.hpp"

namespace qedsat {

namespace {

EigenSystem assemble_system(const Matrix4c& m, std::vector<std::pair<Complex, Vector4c>> raw) {
    EigenSystem sys;
    sys.matrix_norm = m.norm();
    std::sort(raw.begin(), raw.end(),
              [](const auto& x, const auto& y) { return std::abs(x.first) > std::abs(y.first); });
    double worst = 0.0;
    for (auto& [value, vec] : raw) {
        vec.normalize();
        const double residual = (m * vec - value * vec).norm();
        worst = std::max(worst, residual);
        sys.pairs.push_back({value, normalize(vec), residual});
    }
    if (worst > kResidualBound * sys.matrix_norm)
        throw SolverFailure("eigensolver residual " + std::to_string(worst) +
                            " exceeds bound " +
                            std::to_string(kResidualBound * sys.matrix_norm));
    if (sys.pairs.size() >= 2) {
        const double top = std::abs(sys.pairs[0].value);
        sys.degenerate_dominant =
            std::abs(sys.pairs[1].value) >= top - kDominanceTie * top;
    }
    return sys;
}

}  // namespace

EigenSystem eigendecompose(const Matrix4c& m) {
    if (!m.allFinite()) throw SolverFailure("matrix has non-finite entries");
    if (!(m.norm() > 0.0)) throw SolverFailure("matrix is zero");
    Eigen::ComplexEigenSolver<Matrix4c> solver(m, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) throw SolverFailure("ComplexEigenSolver failed");
    std::vector<std::pair<Complex, Vector4c>> raw;
    raw.reserve(4);
    for (int i = 0; i < 4; ++i) raw.emplace_back(solver.eigenvalues()[i], solver.eigenvectors().col(i));
    return assemble_system(m, std::move(raw));
}

EigenSystem eigendecompose(const ScatteringMatrix& m) { return eigendecompose(m.entries); }

Matrix4c BhabhaParams::reconstruct() const {
    Matrix4c m;
    m << a, -b, -b, d,
         b,  e,  f, -b,
         b,  f,  e, -b,
         d,  b,  b,  a;
    return m;
}

BhabhaParams bhabha_params(const ScatteringMatrix& m, double tol) {
    const PatternReport report = matches_pattern(m, structural_pattern(ProcessKind::Bhabha), tol);
    if (!report.matches)
        throw PatternViolation("matrix violates the Bhabha pattern in class " +
                               report.worst_class + " (relative deviation " +
                               std::to_string(report.worst_violation) + ")");
    BhabhaParams p;
    p.a = m.entries(0, 0);
    p.b = m.entries(1, 0);
    p.d = m.entries(0, 3);
    p.e = m.entries(1, 1);
    p.f = m.entries(1, 2);
    p.s1 = p.a - p.d + p.e + p.f;
    p.t = (-p.a + p.d + p.e + p.f) * (-p.a + p.d + p.e + p.f) - 16.0 * p.b * p.b;
    const double scale = m.entries.cwiseAbs().maxCoeff();
    const double imag_size = std::max({std::abs(p.a.imag()), std::abs(p.b.imag()),
                                       std::abs(p.d.imag()), std::abs(p.e.imag()),
                                       std::abs(p.f.imag())});
    p.params_real = imag_size <= tol * scale;
    p.s2 = std::sqrt(std::abs(p.t.real()));
    p.r = std::sqrt(p.s1.real() * p.s1.real() + p.s2 * p.s2);
    p.eta = std::atan2(p.s2, p.s1.real());
    return p;
}

namespace {

PureTwoQubitState planar_state(double phi_minus_coeff, double psi_plus_coeff) {
    Vector4c bell = Vector4c::Zero();
    bell[1] = phi_minus_coeff;
    bell[2] = psi_plus_coeff;
    return normalize(from_bell_coords(bell));
}

}  // namespace

BhabhaEigenResult bhabha_analytic_eigensystem(const BhabhaParams& params) {
    if (!params.params_real)
        throw ComplexParams(
            "Bhabha parameters are materially complex; use the generic eigendecompose");

    const double a = params.a.real(), b = params.b.real(), d = params.d.real(),
                 e = params.e.real(), f = params.f.real();
    const Matrix4c m = params.reconstruct();
    const double scale = m.cwiseAbs().maxCoeff();

    const double s1 = a - d + e + f;
    const double sigma = -a + d + e + f;
    const double t = params.t.real();

    const Complex lambda1(a + d, 0.0);
    const Complex lambda2(e - f, 0.0);

    BhabhaEigenResult result;
    std::vector<std::pair<Complex, Vector4c>> raw;
    const Vector4c phi_plus = bell_state(BellState::PhiPlus).amps();
    const Vector4c psi_minus = bell_state(BellState::PsiMinus).amps();
    raw.emplace_back(lambda1, phi_plus);
    raw.emplace_back(lambda2, psi_minus);

    if (std::abs(4.0 * b) <= 1e-14 * scale) {
        // Ultrarelativistic block-diagonal limit: Bell eigenbasis.
        result.branch = BhabhaBranch::BlockDiagonal;
        raw.emplace_back(Complex(a - d, 0.0), bell_state(BellState::PhiMinus).amps());
        raw.emplace_back(Complex(e + f, 0.0), bell_state(BellState::PsiPlus).amps());
        result.spanning_set = {bell_state(BellState::PhiPlus), bell_state(BellState::PsiMinus),
                               bell_state(BellState::PhiMinus), bell_state(BellState::PsiPlus)};
    } else if (t >= 0.0) {
        result.branch = BhabhaBranch::RealEigen;
        const double root = std::sqrt(t);
        for (double sign : {+1.0, -1.0}) {
            const double x = (sigma + sign * root) / (4.0 * b);
            Vector4c v;
            v << -1.0, x, x, 1.0;
            raw.emplace_back(Complex(0.5 * (s1 + sign * root), 0.0), v);
        }
        // angles of lambda3/lambda4 within the (Phi-, Psi+) plane
        const double x3 = (sigma + root) / (4.0 * b);
        const double x4 = (sigma - root) / (4.0 * b);
        result.delta3 = std::atan2(std::sqrt(2.0) * x3, -std::sqrt(2.0));
        result.delta4 = std::atan2(std::sqrt(2.0) * x4, -std::sqrt(2.0));
    } else {
        result.branch = BhabhaBranch::ComplexPair;
        const double s2 = params.s2;
        const Complex i(0.0, 1.0);
        for (double sign : {+1.0, -1.0}) {
            const Complex x = (sigma + sign * i * s2) / (4.0 * b);
            Vector4c v;
            v << -1.0, x, x, 1.0;
            raw.emplace_back(0.5 * Complex(s1, sign * s2), v);
        }
        // Real maximally entangled spanning set {Phi+, Psi-, Xi3, Xi4 = Psi+}.
        const double w = sigma / (4.0 * b);
        Vector4c xi3;
        xi3 << -1.0, w, w, 1.0;
        result.spanning_set = {bell_state(BellState::PhiPlus), bell_state(BellState::PsiMinus),
                               normalize(xi3), bell_state(BellState::PsiPlus)};
        result.beta = std::atan2(std::sqrt(2.0) * w, -std::sqrt(2.0));
    }

    result.system = assemble_system(m, std::move(raw));
    return result;
}

AsymptotePrediction predict_asymptote(const ScatteringMatrix& m,
                                      const PureTwoQubitState& initial) {
    const EigenSystem sys = eigendecompose(m);

    Matrix4c vmat;
    for (int i = 0; i < 4; ++i) vmat.col(i) = sys.pairs[i].vector.amps();
    const Eigen::FullPivLU<Matrix4c> lu(vmat);
    AsymptotePrediction pred;
    pred.eigenvalues.reserve(4);
    for (const auto& p : sys.pairs) pred.eigenvalues.push_back(p.value);

    if (lu.rank() < 4) {
        pred.kind = AsymptotePrediction::Kind::CycleTie;
        pred.detail = "eigenvector matrix is rank-deficient (defective map)";
        return pred;
    }
    const Vector4c coeff = lu.solve(initial.amps());
    pred.coefficients.assign(coeff.data(), coeff.data() + 4);

    const double coeff_scale = coeff.cwiseAbs().maxCoeff();
    const double lambda_max = std::abs(sys.pairs[0].value);

    // Keep eigencomponents actually present in the initial state, then group
    // indices whose eigenvalues coincide (a degenerate eigenspace acts as a
    // single stationary direction).
    std::vector<int> live;
    for (int i = 0; i < 4; ++i)
        if (std::abs(coeff[i]) > 1e-10 * coeff_scale) live.push_back(i);

    std::vector<std::vector<int>> groups;
    std::vector<bool> used(live.size(), false);
    for (size_t i = 0; i < live.size(); ++i) {
        if (used[i]) continue;
        std::vector<int> group{live[i]};
        used[i] = true;
        for (size_t j = i + 1; j < live.size(); ++j) {
            if (used[j]) continue;
            if (std::abs(sys.pairs[live[i]].value - sys.pairs[live[j]].value) <=
                kDominanceTie * lambda_max) {
                group.push_back(live[j]);
                used[j] = true;
            }
        }
        groups.push_back(std::move(group));
    }

    // Find the groups of largest |lambda|.
    double best = -1.0;
    for (const auto& g : groups) best = std::max(best, std::abs(sys.pairs[g[0]].value));
    std::vector<const std::vector<int>*> top;
    for (const auto& g : groups)
        if (std::abs(sys.pairs[g[0]].value) >= best - kDominanceTie * lambda_max)
            top.push_back(&g);

    if (top.size() == 1) {
        Vector4c v = Vector4c::Zero();
        for (int idx : *top[0]) v += coeff[idx] * sys.pairs[idx].vector.amps();
        pred.kind = AsymptotePrediction::Kind::Converges;
        pred.state = normalize(v);
        pred.detail = "unique dominant eigenvalue";
        return pred;
    }

    if (top.size() == 2 && top[0]->size() == 1 && top[1]->size() == 1) {
        const Complex l1 = sys.pairs[(*top[0])[0]].value;
        const Complex l2 = sys.pairs[(*top[1])[0]].value;
        const bool conjugate_pair =
            std::abs(l1 - std::conj(l2)) <= kDominanceTie * lambda_max &&
            std::abs(l1.imag()) > kDominanceTie * lambda_max;
        if (conjugate_pair) {
            pred.kind = AsymptotePrediction::Kind::PlanarLimit;
            // The orbit lives in the real span of the dominant component.
            const Vector4c cv = coeff[(*top[0])[0]] * sys.pairs[(*top[0])[0]].vector.amps();
            const Vector4c u = cv.real().cast<Complex>();
            const Vector4c w = cv.imag().cast<Complex>();
            const Vector4c bu = bell_coords(u), bw = bell_coords(w);
            const double span_mp =
                std::norm(bu[1]) + std::norm(bu[2]) + std::norm(bw[1]) + std::norm(bw[2]);
            const double span_pm =
                std::norm(bu[0]) + std::norm(bu[3]) + std::norm(bw[0]) + std::norm(bw[3]);
            const double total = span_mp + span_pm;
            if (span_pm <= 1e-9 * total)
                pred.plane = BellPlane::PhiMinusPsiPlus;
            else if (span_mp <= 1e-9 * total)
                pred.plane = BellPlane::PhiPlusPsiMinus;
            pred.detail = "dominant complex-conjugate pair";
            return pred;
        }
    }

    pred.kind = AsymptotePrediction::Kind::CycleTie;
    pred.detail = "magnitude tie between distinct eigendirections";
    return pred;
}

}  // namespace qedsat
