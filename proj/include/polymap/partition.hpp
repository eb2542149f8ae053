#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "error.hpp"

namespace polymap {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Circle angles 0 = t_0 < t_1 < ... < t_n = 2*pi; the open arc (t_k, t_{k+1})
// carries vertex k of the boundary step function.
class Partition {
public:
    explicit Partition(std::vector<double> angles) : angles_(std::move(angles)) {
        if (angles_.size() < 4) fail(errc::invalid_partition, "need at least 3 arcs");
        for (double t : angles_)
            if (!std::isfinite(t)) fail(errc::invalid_partition, "non-finite angle");
        if (std::fabs(angles_.front()) > 1e-12 || std::fabs(angles_.back() - two_pi) > 1e-12)
            fail(errc::invalid_partition, "partition must run from 0 to 2*pi");
        angles_.front() = 0.0;  // canonical endpoints
        angles_.back() = two_pi;
        for (std::size_t k = 0; k + 1 < angles_.size(); ++k)
            if (!(angles_[k] < angles_[k + 1]))
                fail(errc::invalid_partition, "angles must increase strictly");
    }

    std::size_t arcs() const { return angles_.size() - 1; }
    const std::vector<double>& angles() const { return angles_; }

    double operator[](std::size_t k) const {
        if (k >= angles_.size()) fail(errc::index_range, "partition index out of range");
        return angles_[k];
    }

    double arc_length(std::size_t k) const {
        if (k + 1 >= angles_.size()) fail(errc::index_range, "arc index out of range");
        return angles_[k + 1] - angles_[k];
    }

private:
    std::vector<double> angles_;
};

inline Partition equal_partition(std::size_t n) {
    std::vector<double> t(n + 1);
    for (std::size_t k = 0; k < n; ++k) t[k] = two_pi * static_cast<double>(k) / static_cast<double>(n);
    t[n] = two_pi;
    return Partition(std::move(t));
}

}  // namespace polymap
