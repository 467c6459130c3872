#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "splinedict/bspline.hpp"
#include "splinedict/partition.hpp"

namespace splinedict {

/// Which subpartition basis an atom came from, and its index there (0-based).
struct AtomRef {
    std::size_t subpartition;
    std::size_t index;
    bool operator==(const AtomRef&) const = default;
};

/// Redundant B-spline dictionary for the spline space of a parent partition,
/// assembled by concatenating the clamped bases of n subpartition spaces.
/// Atom order is subpartition-major, basis-index-minor.  With n = 1 this is
/// exactly the B-spline basis of the parent space.
class SplineDictionary {
public:
    /// Requires union(subs) == parent (exact point equality).
    SplineDictionary(Partition parent, std::vector<Partition> subs, int order);

    /// Dictionary over the uniform partition of step b built from the
    /// bprime/b shifted coarse subpartitions of step bprime.
    static SplineDictionary cardinal(double c, double d, double b, double bprime, int order);

    int order() const noexcept { return order_; }
    const Partition& parent() const noexcept { return parent_; }
    std::size_t subpartition_count() const noexcept { return bases_.size(); }
    const SplineBasis& subpartition_basis(std::size_t j) const;

    std::size_t atom_count() const noexcept { return atoms_.size(); }
    AtomRef atom(std::size_t idx) const;
    double evaluate_atom(std::size_t idx, double x) const;
    std::pair<double, double> atom_support(std::size_t idx) const;

    /// Dimension m + N of the spanned spline space.
    std::size_t space_dimension() const noexcept {
        return parent_.interior_count() + static_cast<std::size_t>(order_);
    }

private:
    Partition parent_;
    std::vector<SplineBasis> bases_;
    std::vector<AtomRef> atoms_;
    int order_;
};

inline SplineDictionary build_dictionary(Partition parent, std::vector<Partition> subs, int order) {
    return SplineDictionary(std::move(parent), std::move(subs), order);
}

SampledMatrix sample(const SplineDictionary& dict, std::span<const double> grid);

/// Numerical rank of the sampled dictionary: singular values above
/// max_sv * 1e-10.  Equals m + N for any valid dictionary on a dense grid.
int span_rank(const SplineDictionary& dict, std::span<const double> grid);
int numerical_rank(const Eigen::MatrixXd& m);

/// Metadata export: parent partition, order, subpartition count, and
/// per-atom origin with support intervals.
nlohmann::json dictionary_metadata(const SplineDictionary& dict);

} // namespace splinedict
