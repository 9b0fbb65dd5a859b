// Structural view of the scattering matrices: the per-process sign/equality
// patterns ("symbol patterns"), the pattern-match predicate used by the
// self-similarity checks, and the computational <-> Bell basis transform.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qedsat/scattering_matrix.hpp"

namespace qedsat {

// One equivalence class of matrix positions sharing a symbol, each position
// carrying a relative sign (the Bhabha pattern has B at four positions and
// -B at four others, one class with mixed signs).
struct PatternClass {
    std::string label;
    std::vector<std::pair<int, int>> positions;
    std::vector<int> signs;
};

struct SymbolPattern {
    ProcessKind process;
    std::vector<PatternClass> classes;

    // Number of (class, sign) groups; 6 for the fermionic patterns
    // ({A, B, -B, D, E, F}).
    int signed_group_count() const;

    // Every position appears in exactly one class.
    bool is_partition() const;
};

// The published Bhabha layout; Moller / annihilation / Compton layouts were
// recovered numerically (equal/opposite-entry intersection over random
// (mu, theta) samples) and frozen here. Tests re-derive them from scratch.
SymbolPattern structural_pattern(ProcessKind process);

struct PatternReport {
    bool matches = false;
    double worst_violation = 0.0;  // |deviation| / ||M||_max
    std::string worst_class;
    std::pair<int, int> worst_position{-1, -1};
};

// True iff all intra-class equalities and sign relations hold within
// tol * max|M_ij|. Works on any matrix in the computational basis.
PatternReport matches_pattern(const ScatteringMatrix& m, const SymbolPattern& pattern,
                              double tol = 1e-9);
PatternReport matches_pattern(const Matrix4c& m, const SymbolPattern& pattern, double tol = 1e-9);

// Similarity transform by the computational -> Bell unitary. Involutive
// with from_bell_basis; preserves the spectrum exactly.
ScatteringMatrix to_bell_basis(const ScatteringMatrix& m);
ScatteringMatrix from_bell_basis(const ScatteringMatrix& m);

// Plain n-fold matrix product.
Matrix4c matrix_power(const Matrix4c& m, int n);

}  // namespace qedsat
