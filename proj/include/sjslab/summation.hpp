/*
 * summation.hpp — compensated (Neumaier) accumulation.
 *
 * Diagnostic series are summed in ascending level order with error
 * compensation so reports are bit-reproducible and survive 1e4+ terms
 * without drift.
 */

#pragma once

#include <cmath>
#include <cstddef>

namespace sjslab {

template <class Scalar = double>
class CompensatedSum {
public:
    void add(Scalar term) {
        const Scalar t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term))
            comp_ += (sum_ - t) + term;
        else
            comp_ += (term - t) + sum_;
        sum_ = t;
        ++count_;
    }

    Scalar value() const { return sum_ + comp_; }
    std::size_t count() const { return count_; }

private:
    Scalar sum_ = 0;
    Scalar comp_ = 0;
    std::size_t count_ = 0;
};

} // namespace sjslab
