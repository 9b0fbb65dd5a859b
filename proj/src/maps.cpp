#include "qedsat/maps.hpp"

#include <cmath>
#include <set>

#include "qedsat/entanglement.hpp"
#include "qedsat/errors.hpp"

namespace qedsat {

int SymbolPattern::signed_group_count() const {
    int count = 0;
    for (const auto& cls : classes) {
        std::set<int> signs_present(cls.signs.begin(), cls.signs.end());
        count += static_cast<int>(signs_present.size());
    }
    return count;
}

bool SymbolPattern::is_partition() const {
    std::set<std::pair<int, int>> seen;
    for (const auto& cls : classes)
        for (const auto& pos : cls.positions)
            if (!seen.insert(pos).second) return false;
    return seen.size() == 16;
}

namespace {

PatternClass make_class(std::string label,
                        std::initializer_list<std::tuple<int, int, int>> entries) {
    PatternClass cls;
    cls.label = std::move(label);
    for (auto [i, j, s] : entries) {
        cls.positions.emplace_back(i, j);
        cls.signs.push_back(s);
    }
    return cls;
}

SymbolPattern bhabha_pattern() {
    SymbolPattern p;
    p.process = ProcessKind::Bhabha;
    p.classes = {
        make_class("A", {{0, 0, +1}, {3, 3, +1}}),
        make_class("B", {{1, 0, +1}, {2, 0, +1}, {3, 1, +1}, {3, 2, +1},
                         {0, 1, -1}, {0, 2, -1}, {1, 3, -1}, {2, 3, -1}}),
        make_class("D", {{0, 3, +1}, {3, 0, +1}}),
        make_class("E", {{1, 1, +1}, {2, 2, +1}}),
        make_class("F", {{1, 2, +1}, {2, 1, +1}}),
    };
    return p;
}

SymbolPattern moller_pattern() {
    // Mirror of the Bhabha layout: fixed Bell eigenvectors are Phi- (A-D)
    // and Psi+ (E+F); the remaining pair acts on the (Phi+, Psi-) plane.
    SymbolPattern p;
    p.process = ProcessKind::Moller;
    p.classes = {
        make_class("A", {{0, 0, +1}, {3, 3, +1}}),
        make_class("B", {{1, 0, +1}, {0, 2, +1}, {1, 3, +1}, {3, 2, +1},
                         {0, 1, -1}, {2, 0, -1}, {2, 3, -1}, {3, 1, -1}}),
        make_class("D", {{0, 3, +1}, {3, 0, +1}}),
        make_class("E", {{1, 1, +1}, {2, 2, +1}}),
        make_class("F", {{1, 2, +1}, {2, 1, +1}}),
    };
    return p;
}

SymbolPattern annihilation_pattern() {
    SymbolPattern p;
    p.process = ProcessKind::Annihilation;
    p.classes = {
        make_class("A", {{0, 0, +1}, {3, 3, -1}}),
        make_class("B", {{1, 0, +1}, {2, 0, +1}, {1, 3, -1}, {2, 3, -1}}),
        make_class("D", {{0, 3, +1}, {3, 0, -1}}),
        make_class("E", {{1, 1, +1}, {2, 2, +1}}),
        make_class("F", {{1, 2, +1}, {2, 1, +1}}),
        make_class("Z", {{0, 1, +1}, {0, 2, +1}, {3, 1, +1}, {3, 2, +1}}),
    };
    return p;
}

SymbolPattern compton_pattern() {
    SymbolPattern p;
    p.process = ProcessKind::Compton;
    p.classes = {
        make_class("A", {{0, 0, +1}, {3, 3, +1}}),
        make_class("B", {{0, 1, +1}, {1, 0, +1}, {2, 3, +1}, {3, 2, +1}}),
        make_class("C", {{2, 0, +1}, {3, 1, +1}, {0, 2, -1}, {1, 3, -1}}),
        make_class("D", {{3, 0, +1}, {0, 3, -1}}),
        make_class("E", {{1, 1, +1}, {2, 2, +1}}),
        make_class("F", {{2, 1, +1}, {1, 2, -1}}),
    };
    return p;
}

}  // namespace

SymbolPattern structural_pattern(ProcessKind process) {
    switch (process) {
        case ProcessKind::Bhabha: return bhabha_pattern();
        case ProcessKind::Moller: return moller_pattern();
        case ProcessKind::Annihilation: return annihilation_pattern();
        case ProcessKind::Compton: return compton_pattern();
    }
    throw Error("unknown process");
}

PatternReport matches_pattern(const Matrix4c& m, const SymbolPattern& pattern, double tol) {
    const double scale = m.cwiseAbs().maxCoeff();
    PatternReport report;
    report.matches = true;
    if (!(scale > 0.0)) return report;  // zero matrix matches trivially

    for (const auto& cls : pattern.classes) {
        Complex mean(0.0, 0.0);
        for (size_t k = 0; k < cls.positions.size(); ++k)
            mean += double(cls.signs[k]) * m(cls.positions[k].first, cls.positions[k].second);
        mean /= double(cls.positions.size());
        for (size_t k = 0; k < cls.positions.size(); ++k) {
            const Complex v =
                double(cls.signs[k]) * m(cls.positions[k].first, cls.positions[k].second);
            const double dev = std::abs(v - mean) / scale;
            if (dev > report.worst_violation) {
                report.worst_violation = dev;
                report.worst_class = cls.label;
                report.worst_position = cls.positions[k];
            }
        }
    }
    report.matches = report.worst_violation <= tol;
    return report;
}

PatternReport matches_pattern(const ScatteringMatrix& m, const SymbolPattern& pattern,
                              double tol) {
    if (m.basis != Basis::Computational)
        throw Error("matches_pattern expects the computational basis");
    return matches_pattern(m.entries, pattern, tol);
}

namespace {

Matrix4c bell_unitary() {
    Matrix4c u = Matrix4c::Zero();
    const double r = 1.0 / std::sqrt(2.0);
    u(0, 0) = r; u(0, 3) = r;
    u(1, 0) = r; u(1, 3) = -r;
    u(2, 1) = r; u(2, 2) = r;
    u(3, 1) = r; u(3, 2) = -r;
    return u;
}

}  // namespace

ScatteringMatrix to_bell_basis(const ScatteringMatrix& m) {
    if (m.basis != Basis::Computational)
        throw Error("to_bell_basis expects the computational basis");
    static const Matrix4c u = bell_unitary();
    ScatteringMatrix out = m;
    out.entries = u * m.entries * u.adjoint();
    out.basis = Basis::Bell;
    return out;
}

ScatteringMatrix from_bell_basis(const ScatteringMatrix& m) {
    if (m.basis != Basis::Bell) throw Error("from_bell_basis expects the Bell basis");
    static const Matrix4c u = bell_unitary();
    ScatteringMatrix out = m;
    out.entries = u.adjoint() * m.entries * u;
    out.basis = Basis::Computational;
    return out;
}

Matrix4c matrix_power(const Matrix4c& m, int n) {
    Matrix4c out = Matrix4c::Identity();
    for (int k = 0; k < n; ++k) out = (out * m).eval();
    return out;
}

}  // namespace qedsat
