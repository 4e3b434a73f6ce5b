#ifndef PEAKALG_SUBSPACE_HPP
#define PEAKALG_SUBSPACE_HPP

#include <cstddef>
#include <vector>

#include "peakalg/rational.hpp"

namespace peakalg {

/// Incrementally built span of rational vectors of a fixed dimension.
///
/// Rows are kept in echelon form: each row has a distinct pivot column,
/// pivot entry 1, and zeros in the pivots of all earlier rows. Every row
/// also records its expression in terms of the generators passed to
/// insert(), so members can be written back in the caller's basis.
class Subspace {
public:
    explicit Subspace(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    /// Number of insert() calls so far (dependent generators included).
    std::size_t generator_count() const { return generators_; }

    /// Adds a generator; returns true when it enlarged the span.
    bool insert(const std::vector<Rational>& v);

    struct Reduction {
        /// v minus its projection onto the span along the pivot columns.
        std::vector<Rational> residual;
        /// Coefficients over all generators; meaningful when member is true.
        std::vector<Rational> coordinates;
        bool member = false;
    };

    Reduction reduce(const std::vector<Rational>& v) const;
    bool contains(const std::vector<Rational>& v) const { return reduce(v).member; }

private:
    struct Row {
        std::size_t pivot;
        std::vector<Rational> values;
        std::vector<std::size_t> support;
        std::vector<Rational> combo;
    };

    std::size_t dim_;
    std::size_t generators_ = 0;
    std::vector<Row> rows_;
};

} // namespace peakalg

#endif
