#include "splinedict/bspline.hpp"

#include <ostream>
#include <string>
#include <vector>

#include "splinedict/errors.hpp"
#include "splinedict/format.hpp"

namespace splinedict {

namespace {

// Order-1 base case: the indicator of [y_i, y_{i+1}), with the last nonempty
// interval closed at d.
inline double indicator(const std::vector<double>& y, std::size_t i, double x) {
    if (y[i] <= x && x < y[i + 1]) return 1.0;
    if (x == y.back() && y[i] < y[i + 1] && y[i + 1] == y.back()) return 1.0;
    return 0.0;
}

inline void check_domain(const ExtendedPartition& ext, double x) {
    if (x < ext.c() || x > ext.d())
        fail(errc::x_out_of_domain, "x = " + std::to_string(x) + " outside [" +
                                        std::to_string(ext.c()) + ", " + std::to_string(ext.d()) + "]");
}

} // namespace

double SplineBasis::eval_bspline(const ExtendedPartition& ext, std::size_t j, double x) {
    if (j >= ext.basis_size())
        fail(errc::index_out_of_range,
             "basis index " + std::to_string(j) + " not in [0, " + std::to_string(ext.basis_size()) + ")");
    check_domain(ext, x);
    const auto& y = ext.knots();
    const auto m = static_cast<std::size_t>(ext.order());

    // local slice of the recursion triangle over knots y_j .. y_{j+m}
    std::vector<double> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = indicator(y, j + i, x);
    for (std::size_t ord = 2; ord <= m; ++ord) {
        for (std::size_t i = 0; i + ord <= m; ++i) {
            double acc = 0.0;
            const double d1 = y[j + i + ord - 1] - y[j + i];
            if (d1 > 0.0) acc += (x - y[j + i]) / d1 * v[i];
            const double d2 = y[j + i + ord] - y[j + i + 1];
            if (d2 > 0.0) acc += (y[j + i + ord] - x) / d2 * v[i + 1];
            v[i] = acc;
        }
    }
    return v[0];
}

SplineBasis::SplineBasis(Partition p, int order)
    : partition_(std::move(p)), ext_(partition_, order) {}

void SplineBasis::evaluate_all(double x, std::span<double> out) const {
    check_domain(ext_, x);
    const auto& y = ext_.knots();
    const auto m = static_cast<std::size_t>(ext_.order());
    const std::size_t nk = y.size();

    // one triangular pass shares all order-(m-1) values
    std::vector<double> v(nk - 1);
    for (std::size_t i = 0; i + 1 < nk; ++i) v[i] = indicator(y, i, x);
    for (std::size_t ord = 2; ord <= m; ++ord) {
        for (std::size_t i = 0; i + ord < nk; ++i) {
            double acc = 0.0;
            const double d1 = y[i + ord - 1] - y[i];
            if (d1 > 0.0) acc += (x - y[i]) / d1 * v[i];
            const double d2 = y[i + ord] - y[i + 1];
            if (d2 > 0.0) acc += (y[i + ord] - x) / d2 * v[i + 1];
            v[i] = acc;
        }
    }
    for (std::size_t j = 0; j < size(); ++j) out[j] = v[j];
}

std::pair<double, double> SplineBasis::support(std::size_t j) const {
    if (j >= size())
        fail(errc::index_out_of_range,
             "basis index " + std::to_string(j) + " not in [0, " + std::to_string(size()) + ")");
    const auto& y = ext_.knots();
    return {y[j], y[j + static_cast<std::size_t>(order())]};
}

SampledMatrix sample(const SplineBasis& basis, std::span<const double> grid) {
    if (grid.empty())
        fail(errc::x_out_of_domain, "sampling grid is empty");
    SampledMatrix out;
    out.grid.assign(grid.begin(), grid.end());
    out.values.resize(static_cast<Eigen::Index>(grid.size()), static_cast<Eigen::Index>(basis.size()));
    std::vector<double> row(basis.size());
    for (std::size_t g = 0; g < grid.size(); ++g) {
        basis.evaluate_all(grid[g], row);
        for (std::size_t j = 0; j < row.size(); ++j)
            out.values(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(j)) = row[j];
    }
    return out;
}

void write_sampled_csv(const SampledMatrix& m, std::ostream& os) {
    os << "x";
    for (Eigen::Index j = 0; j < m.values.cols(); ++j) os << ",f" << j;
    os << "\n";
    for (Eigen::Index i = 0; i < m.values.rows(); ++i) {
        os << format_double(m.grid[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = 0; j < m.values.cols(); ++j) os << "," << format_double(m.values(i, j));
        os << "\n";
    }
}

} // namespace splinedict
