#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "splinedict/adapt.hpp"
#include "splinedict/bspline.hpp"
#include "splinedict/dictionary.hpp"

namespace splinedict {

/// Sparse-approximation instance: atom columns normalized to unit Euclidean
/// length (original norms kept for coefficient back-scaling), the signal
/// sample vector, and an absolute residual-norm tolerance.
class PursuitProblem {
public:
    PursuitProblem(Eigen::MatrixXd atoms, Eigen::VectorXd signal, double tol);

    /// Checks that the sampled atoms share the signal's grid.
    static PursuitProblem build(const SampledMatrix& atoms, const SampledSignal& sig, double tol);

    const Eigen::MatrixXd& columns() const noexcept { return normalized_; }
    const Eigen::VectorXd& signal() const noexcept { return f_; }
    const Eigen::VectorXd& column_norms() const noexcept { return norms_; }
    double tol() const noexcept { return tol_; }
    std::size_t atom_count() const noexcept { return static_cast<std::size_t>(normalized_.cols()); }
    std::size_t sample_count() const noexcept { return static_cast<std::size_t>(normalized_.rows()); }

    /// Gram matrix of the normalized columns; cached for swap/prune scoring.
    const Eigen::MatrixXd& gram() const noexcept { return gram_; }
    /// Inner products of the normalized columns with the signal.
    const Eigen::VectorXd& column_signal_products() const noexcept { return colf_; }

private:
    Eigen::MatrixXd normalized_;
    Eigen::MatrixXd gram_;
    Eigen::VectorXd f_;
    Eigen::VectorXd colf_;
    Eigen::VectorXd norms_;
    double tol_;
};

struct StageLog {
    std::size_t oomp_atoms = 0;
    double oomp_residual = 0.0;
    bool stagnated = false;
    /// Residual norm before any selection, then after each OOMP step.
    std::vector<double> oomp_residual_history;
    std::size_t total_swaps = 0;
    std::size_t total_pruned = 0;
    std::size_t refine_rounds = 0;
};

/// Selected atom indices with least-squares coefficients in original
/// (unnormalized) atom scale.
struct AtomicDecomposition {
    std::vector<std::size_t> gamma;
    std::vector<double> coeffs;
    double residual_norm = 0.0;
    StageLog stage_log;
    std::size_t k() const noexcept { return gamma.size(); }
};

/// Forward greedy selection: pick the atom whose span-orthogonal component
/// best aligns with the residual, until residual_norm <= tol or no usable
/// atom remains (stagnation, flagged in the log).  Ties go to the lowest
/// column index.
AtomicDecomposition oomp(const PursuitProblem& prob);

/// Least-squares decomposition on a caller-chosen index set.
AtomicDecomposition least_squares_decomposition(const PursuitProblem& prob,
                                                std::vector<std::size_t> gamma);

/// Fixed-size refinement: repeatedly apply the (selected, dictionary) atom
/// exchange with the largest exact residual decrease; stop when the best
/// predicted improvement is below 1e-9 relative.
AtomicDecomposition swap_refine(const AtomicDecomposition& dec, const PursuitProblem& prob);

/// Backward pruning: remove the atom whose removal keeps the refitted
/// residual smallest, while it stays within the budget.
AtomicDecomposition boomp_prune(const AtomicDecomposition& dec, const PursuitProblem& prob,
                                double budget);

/// oomp, then alternate swap_refine and boomp_prune (budget = the forward
/// stage's residual norm) until a refinement round performs no exchange.
AtomicDecomposition sparse_approximate(const PursuitProblem& prob);

/// Pointwise sum of coefficient-weighted atoms on the grid.
std::vector<double> reconstruct(const AtomicDecomposition& dec, const SplineDictionary& dict,
                                std::span<const double> grid);

} // namespace splinedict
