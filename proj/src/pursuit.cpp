#include "splinedict/pursuit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "splinedict/errors.hpp"

namespace splinedict {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

PursuitProblem::PursuitProblem(MatrixXd atoms, VectorXd signal, double tol)
    : f_(std::move(signal)), tol_(tol) {
    if (atoms.cols() < 1)
        fail(errc::bad_count, "pursuit needs at least one atom column");
    if (atoms.rows() != f_.size())
        fail(errc::bad_count, "atom sample count " + std::to_string(atoms.rows()) +
                                  " does not match signal length " + std::to_string(f_.size()));
    if (!(tol > 0.0))
        fail(errc::bad_count, "tolerance must be positive");
    norms_ = atoms.colwise().norm();
    normalized_ = std::move(atoms);
    for (Index j = 0; j < normalized_.cols(); ++j)
        if (norms_(j) > 0.0)
            normalized_.col(j) /= norms_(j);
    gram_.noalias() = normalized_.transpose() * normalized_;
    colf_.noalias() = normalized_.transpose() * f_;
}

PursuitProblem PursuitProblem::build(const SampledMatrix& atoms, const SampledSignal& sig,
                                     double tol) {
    if (atoms.grid != sig.grid())
        fail(errc::endpoint_mismatch, "sampled atoms do not share the signal's grid");
    VectorXd f = Eigen::Map<const VectorXd>(sig.values.data(),
                                            static_cast<Index>(sig.values.size()));
    return PursuitProblem(atoms.values, std::move(f), tol);
}

namespace {

// Exact least-squares state on the normalized columns of an index set.
struct LsState {
    VectorXd c; // normalized-scale coefficients
    VectorXd r; // f - Asel * c
    double rn = 0.0;
    MatrixXd R; // triangular factor with R^T R = Asel^T Asel
};

LsState ls_refit(const PursuitProblem& prob, const std::vector<std::size_t>& idx) {
    LsState st;
    const auto K = static_cast<Index>(idx.size());
    if (K == 0) {
        st.r = prob.signal();
        st.rn = st.r.norm();
        return st;
    }
    const MatrixXd& An = prob.columns();
    const VectorXd& f = prob.signal();
    MatrixXd Asel(An.rows(), K);
    for (Index s = 0; s < K; ++s)
        Asel.col(s) = An.col(static_cast<Index>(idx[static_cast<std::size_t>(s)]));
    Eigen::HouseholderQR<MatrixXd> qr(Asel);
    st.c = qr.solve(f);
    st.r = f - Asel * st.c;
    st.rn = st.r.norm();
    st.R = qr.matrixQR().topLeftCorner(K, K).triangularView<Eigen::Upper>();
    // A rank-deficient selection breaks the unpivoted solve (huge coefficients,
    // residual above ||f||); redo those with a rank-revealing factorization,
    // truncating at the numerical-rank threshold.
    const double fn = f.norm();
    if (!st.c.allFinite() || st.rn > fn * (1.0 + 1e-9)) {
        Eigen::CompleteOrthogonalDecomposition<MatrixXd> cod;
        cod.setThreshold(1e-10);
        cod.compute(Asel);
        st.c = cod.solve(f);
        st.r = f - Asel * st.c;
        st.rn = st.r.norm();
    }
    return st;
}

// Coefficients in original atom scale plus the exact residual norm.
void finalize(AtomicDecomposition& dec, const PursuitProblem& prob, const LsState& st) {
    const std::size_t K = dec.gamma.size();
    dec.coeffs.resize(K);
    for (std::size_t i = 0; i < K; ++i) {
        const double nrm = prob.column_norms()(static_cast<Index>(dec.gamma[i]));
        dec.coeffs[i] = nrm > 0.0 ? st.c(static_cast<Index>(i)) / nrm : 0.0;
    }
    dec.residual_norm = st.rn;
}

// diag of (Asel^T Asel)^{-1}, from the triangular factor.
VectorXd inverse_gram_diagonal(const MatrixXd& R) {
    const Index K = R.rows();
    MatrixXd V = R.transpose().triangularView<Eigen::Lower>().solve(MatrixXd::Identity(K, K));
    return V.colwise().squaredNorm();
}

constexpr std::size_t kMaxSwapSteps = 100000;

} // namespace

AtomicDecomposition oomp(const PursuitProblem& prob) {
    const MatrixXd& An = prob.columns();
    const Index L = An.rows();
    const Index N = An.cols();
    const Index max_k = std::min(L, N);

    MatrixXd D = An;
    VectorXd r = prob.signal();
    MatrixXd Q(L, max_k);
    std::vector<char> alive(static_cast<std::size_t>(N), 1);
    for (Index j = 0; j < N; ++j)
        if (!(prob.column_norms()(j) > 0.0))
            alive[static_cast<std::size_t>(j)] = 0;

    AtomicDecomposition dec;
    StageLog& log = dec.stage_log;
    Index k = 0;
    while (true) {
        const double rn = r.norm();
        log.oomp_residual_history.push_back(rn);
        if (rn <= prob.tol())
            break;
        if (k == max_k) {
            log.stagnated = true;
            break;
        }
        const VectorXd w = D.colwise().squaredNorm();
        const VectorXd s = An.transpose() * r;
        Index best = -1;
        double best_crit = -1.0;
        for (Index j = 0; j < N; ++j) {
            if (!alive[static_cast<std::size_t>(j)] || w(j) < 1e-20)
                continue;
            const double crit = std::abs(s(j)) / std::sqrt(w(j));
            if (crit > best_crit) {
                best_crit = crit;
                best = j;
            }
        }
        if (best < 0 || best_crit <= 1e-10 * rn) {
            log.stagnated = true;
            break;
        }
        VectorXd q = D.col(best) / std::sqrt(w(best));
        if (k > 0) {
            // one reorthogonalization pass when the defect is visible
            const VectorXd p = Q.leftCols(k).transpose() * q;
            if (p.cwiseAbs().maxCoeff() > 1e-8) {
                q.noalias() -= Q.leftCols(k) * p;
                const double qn = q.norm();
                if (qn < 1e-14) {
                    log.stagnated = true;
                    break;
                }
                q /= qn;
            }
        }
        const VectorXd t = D.transpose() * q;
        D.noalias() -= q * t.transpose();
        r.noalias() -= q * q.dot(r);
        Q.col(k) = q;
        alive[static_cast<std::size_t>(best)] = 0;
        dec.gamma.push_back(static_cast<std::size_t>(best));
        ++k;
    }

    finalize(dec, prob, ls_refit(prob, dec.gamma));
    log.oomp_atoms = dec.gamma.size();
    log.oomp_residual = dec.residual_norm;
    return dec;
}

AtomicDecomposition least_squares_decomposition(const PursuitProblem& prob,
                                                std::vector<std::size_t> gamma) {
    for (std::size_t idx : gamma)
        if (idx >= prob.atom_count())
            fail(errc::index_out_of_range, "atom index " + std::to_string(idx) +
                                               " outside dictionary of size " +
                                               std::to_string(prob.atom_count()));
    AtomicDecomposition dec;
    dec.gamma = std::move(gamma);
    if (dec.gamma.empty()) {
        dec.residual_norm = prob.signal().norm();
        return dec;
    }
    finalize(dec, prob, ls_refit(prob, dec.gamma));
    return dec;
}

AtomicDecomposition swap_refine(const AtomicDecomposition& dec0, const PursuitProblem& prob) {
    AtomicDecomposition dec = dec0;
    const auto K = static_cast<Index>(dec.gamma.size());
    if (K == 0)
        return dec;

    const MatrixXd& G = prob.gram();
    const VectorXd& sf = prob.column_signal_products();
    const Index N = G.cols();

    std::vector<std::size_t> idx = dec.gamma;
    LsState st = ls_refit(prob, idx);
    std::vector<char> insel(static_cast<std::size_t>(N), 0);
    for (std::size_t s : idx)
        insel[s] = 1;

    std::size_t swaps = 0;
    MatrixXd Gsub(N, K);
    while (swaps < kMaxSwapSteps) {
        const double rn = st.rn;
        if (rn == 0.0)
            break;
        const double rn2 = rn * rn;

        const VectorXd g = inverse_gram_diagonal(st.R);
        for (Index s = 0; s < K; ++s)
            Gsub.col(s) = G.col(static_cast<Index>(idx[static_cast<std::size_t>(s)]));
        // W[a,s] = <atom a, q_s>; M2[a,s] = <atom a, dual of selected s>
        MatrixXd W = st.R.triangularView<Eigen::Upper>().solve<Eigen::OnTheRight>(Gsub);
        MatrixXd M2 = st.R.transpose().triangularView<Eigen::Lower>().solve<Eigen::OnTheRight>(W);
        const VectorXd aperp2 = (1.0 - W.rowwise().squaredNorm().array()).max(0.0);
        const VectorXd sall = sf - Gsub * st.c;

        double best_res = rn2;
        Index best_s = -1;
        Index best_a = -1;
        for (Index si = 0; si < K; ++si) {
            const double cs = st.c(si);
            const double gs = g(si);
            const double res_rm = rn2 + cs * cs / gs;
            const double scale = cs / gs;
            for (Index a = 0; a < N; ++a) {
                if (insel[static_cast<std::size_t>(a)])
                    continue;
                const double m = M2(a, si);
                const double om2 = aperp2(a) + m * m / gs;
                if (om2 <= 1e-16)
                    continue;
                const double rho = sall(a) + scale * m;
                const double res_new = res_rm - rho * rho / om2;
                if (res_new < best_res) {
                    best_res = res_new;
                    best_s = si;
                    best_a = a;
                }
            }
        }
        if (best_s < 0)
            break;
        const double predicted = std::sqrt(std::max(best_res, 0.0));
        if (predicted >= rn * (1.0 - 1e-9))
            break;

        const std::size_t old = idx[static_cast<std::size_t>(best_s)];
        idx[static_cast<std::size_t>(best_s)] = static_cast<std::size_t>(best_a);
        LsState trial = ls_refit(prob, idx);
        if (trial.rn >= rn) {
            idx[static_cast<std::size_t>(best_s)] = old;
            break;
        }
        insel[old] = 0;
        insel[static_cast<std::size_t>(best_a)] = 1;
        st = std::move(trial);
        ++swaps;
    }

    dec.gamma = std::move(idx);
    finalize(dec, prob, st);
    dec.stage_log.total_swaps += swaps;
    return dec;
}

AtomicDecomposition boomp_prune(const AtomicDecomposition& dec0, const PursuitProblem& prob,
                                double budget) {
    AtomicDecomposition dec = dec0;
    std::vector<std::size_t> idx = dec.gamma;
    LsState st = ls_refit(prob, idx);
    std::size_t pruned = 0;
    while (!idx.empty()) {
        const auto K = static_cast<Index>(idx.size());
        const double rn2 = st.rn * st.rn;
        const VectorXd g = inverse_gram_diagonal(st.R);
        Index drop = -1;
        double best = std::numeric_limits<double>::infinity();
        for (Index s = 0; s < K; ++s) {
            const double removal = rn2 + st.c(s) * st.c(s) / g(s);
            if (removal < best) {
                best = removal;
                drop = s;
            }
        }
        if (drop < 0)
            break;
        std::vector<std::size_t> trial = idx;
        trial.erase(trial.begin() + drop);
        LsState refit = ls_refit(prob, trial);
        if (refit.rn <= budget) {
            idx = std::move(trial);
            st = std::move(refit);
            ++pruned;
        } else {
            break;
        }
    }
    dec.gamma = std::move(idx);
    finalize(dec, prob, st);
    dec.stage_log.total_pruned += pruned;
    return dec;
}

AtomicDecomposition sparse_approximate(const PursuitProblem& prob) {
    AtomicDecomposition dec = oomp(prob);
    const double budget = dec.residual_norm;
    while (true) {
        const std::size_t before = dec.stage_log.total_swaps;
        dec = swap_refine(dec, prob);
        ++dec.stage_log.refine_rounds;
        if (dec.stage_log.total_swaps == before)
            break;
        dec = boomp_prune(dec, prob, budget);
    }
    return dec;
}

std::vector<double> reconstruct(const AtomicDecomposition& dec, const SplineDictionary& dict,
                                std::span<const double> grid) {
    std::vector<double> out(grid.size(), 0.0);
    for (std::size_t i = 0; i < dec.gamma.size(); ++i) {
        const std::size_t atom = dec.gamma[i];
        const double coef = dec.coeffs[i];
        if (atom >= dict.atom_count())
            fail(errc::index_out_of_range,
                 "decomposition refers to atom " + std::to_string(atom) + " of " +
                     std::to_string(dict.atom_count()));
        for (std::size_t k = 0; k < grid.size(); ++k)
            out[k] += coef * dict.evaluate_atom(atom, grid[k]);
    }
    return out;
}

} // namespace splinedict
