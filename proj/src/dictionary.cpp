#include "splinedict/dictionary.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <utility>

#include "splinedict/errors.hpp"
#include "splinedict/format.hpp"

namespace splinedict {

SplineDictionary::SplineDictionary(Partition parent, std::vector<Partition> subs, int order)
    : parent_(std::move(parent)), order_(order) {
    if (subs.empty())
        fail(errc::bad_count, "dictionary needs at least one subpartition");
    Partition u = union_partitions(subs);
    if (!(u == parent_))
        fail(errc::union_mismatch, "union of subpartitions does not equal the parent partition");
    bases_.reserve(subs.size());
    for (std::size_t j = 0; j < subs.size(); ++j) {
        bases_.emplace_back(subs[j], order);
        for (std::size_t i = 0; i < bases_.back().size(); ++i)
            atoms_.push_back(AtomRef{j, i});
    }
}

SplineDictionary SplineDictionary::cardinal(double c, double d, double b, double bprime, int order) {
    if (!(d > c) || !(b > 0.0) || !(bprime > 0.0))
        fail(errc::non_increasing, "cardinal dictionary needs d > c and positive steps");
    const double rr = bprime / b;
    const auto r = static_cast<std::size_t>(std::llround(rr));
    if (r == 0 || std::abs(rr - static_cast<double>(r)) > 1e-9 * static_cast<double>(r))
        fail(errc::non_divisible, "coarse step is not an integer multiple of the fine step");
    const double mm = (d - c) / b;
    const auto m_count = static_cast<std::size_t>(std::llround(mm));
    if (m_count < 1 || std::abs(mm - static_cast<double>(m_count)) > 1e-9 * static_cast<double>(m_count))
        fail(errc::non_divisible, "interval length is not an integer multiple of the fine step");

    std::vector<double> fine(m_count + 1);
    for (std::size_t i = 0; i <= m_count; ++i)
        fine[i] = c + static_cast<double>(i) * b;
    fine.front() = c;
    fine.back() = d;
    Partition parent{fine};

    std::vector<Partition> subs;
    subs.reserve(r);
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<double> pts;
        pts.push_back(c);
        for (std::size_t i = 1; i < m_count; ++i)
            if (i % r == j)
                pts.push_back(fine[i]);
        pts.push_back(d);
        subs.emplace_back(std::move(pts));
    }
    return SplineDictionary(std::move(parent), std::move(subs), order);
}

const SplineBasis& SplineDictionary::subpartition_basis(std::size_t j) const {
    if (j >= bases_.size())
        fail(errc::index_out_of_range, "subpartition index " + std::to_string(j) + " out of range");
    return bases_[j];
}

AtomRef SplineDictionary::atom(std::size_t idx) const {
    if (idx >= atoms_.size())
        fail(errc::index_out_of_range, "atom index " + std::to_string(idx) + " out of range");
    return atoms_[idx];
}

double SplineDictionary::evaluate_atom(std::size_t idx, double x) const {
    const AtomRef a = atom(idx);
    return bases_[a.subpartition].evaluate(a.index, x);
}

std::pair<double, double> SplineDictionary::atom_support(std::size_t idx) const {
    const AtomRef a = atom(idx);
    return bases_[a.subpartition].support(a.index);
}

SampledMatrix sample(const SplineDictionary& dict, std::span<const double> grid) {
    SampledMatrix out;
    out.grid.assign(grid.begin(), grid.end());
    const auto rows = static_cast<Eigen::Index>(grid.size());
    out.values.resize(rows, static_cast<Eigen::Index>(dict.atom_count()));
    Eigen::Index col = 0;
    for (std::size_t j = 0; j < dict.subpartition_count(); ++j) {
        const SplineBasis& basis = dict.subpartition_basis(j);
        SampledMatrix block = sample(basis, grid);
        out.values.middleCols(col, block.values.cols()) = block.values;
        col += block.values.cols();
    }
    return out;
}

int numerical_rank(const Eigen::MatrixXd& m) {
    if (m.size() == 0)
        return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const Eigen::VectorXd& sv = svd.singularValues();
    if (sv.size() == 0)
        return 0;
    const double cutoff = sv(0) * 1e-10;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff)
            ++rank;
    return rank;
}

int span_rank(const SplineDictionary& dict, std::span<const double> grid) {
    return numerical_rank(sample(dict, grid).values);
}

nlohmann::json dictionary_metadata(const SplineDictionary& dict) {
    nlohmann::json j;
    j["order"] = dict.order();
    j["parent"] = dict.parent().points();
    j["subpartitions"] = nlohmann::json::array();
    for (std::size_t s = 0; s < dict.subpartition_count(); ++s)
        j["subpartitions"].push_back(dict.subpartition_basis(s).partition().points());
    j["space_dimension"] = dict.space_dimension();
    nlohmann::json atoms = nlohmann::json::array();
    for (std::size_t i = 0; i < dict.atom_count(); ++i) {
        const AtomRef a = dict.atom(i);
        const auto [lo, hi] = dict.atom_support(i);
        atoms.push_back({{"subpartition", a.subpartition},
                         {"index", a.index},
                         {"support", {lo, hi}}});
    }
    j["atoms"] = std::move(atoms);
    return j;
}

} // namespace splinedict
