#include "peakalg/subspace.hpp"

#include <stdexcept>

namespace peakalg {

Subspace::Reduction Subspace::reduce(const std::vector<Rational>& v) const
{
    if (v.size() != dim_)
        throw std::invalid_argument("Subspace: vector has the wrong dimension");
    Reduction r;
    r.residual = v;
    r.coordinates.assign(generators_, Rational(0));
    for (const Row& row : rows_) {
        const Rational c = r.residual[row.pivot];
        if (sgn(c) == 0)
            continue;
        for (std::size_t j : row.support)
            r.residual[j] -= c * row.values[j];
        for (std::size_t g = 0; g < row.combo.size(); ++g)
            if (sgn(row.combo[g]) != 0)
                r.coordinates[g] += c * row.combo[g];
    }
    r.member = true;
    for (const auto& x : r.residual) {
        if (sgn(x) != 0) {
            r.member = false;
            break;
        }
    }
    return r;
}

bool Subspace::insert(const std::vector<Rational>& v)
{
    Reduction r = reduce(v);
    const std::size_t self = generators_++;
    if (r.member)
        return false;

    std::size_t pivot = 0;
    while (sgn(r.residual[pivot]) == 0)
        ++pivot;
    const Rational scale = 1 / r.residual[pivot];

    Row row;
    row.pivot = pivot;
    row.values = std::move(r.residual);
    for (std::size_t j = 0; j < row.values.size(); ++j) {
        if (sgn(row.values[j]) != 0) {
            row.values[j] *= scale;
            row.support.push_back(j);
        }
    }
    // residual = v - sum c_r row_r, so row = (gen_self - coordinates) * scale.
    row.combo.assign(generators_, Rational(0));
    for (std::size_t g = 0; g < self; ++g)
        row.combo[g] = -r.coordinates[g] * scale;
    row.combo[self] = scale;
    rows_.push_back(std::move(row));
    return true;
}

} // namespace peakalg
