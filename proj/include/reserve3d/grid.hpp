#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace reserve3d {

// Dense row-major 2D array.
template <class T>
class Grid2 {
public:
    Grid2() = default;
    Grid2(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    const std::vector<T>& data() const noexcept { return data_; }
    std::vector<T>& data() noexcept { return data_; }

    bool operator==(const Grid2&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// Dense 3D array indexed (occurrence, lag, runoff), last index fastest.
template <class T>
class Grid3 {
public:
    Grid3() = default;
    Grid3(std::size_t n0, std::size_t n1, std::size_t n2, T fill = T{})
        : n0_(n0), n1_(n1), n2_(n2), data_(n0 * n1 * n2, fill) {}

    std::size_t extent0() const noexcept { return n0_; }
    std::size_t extent1() const noexcept { return n1_; }
    std::size_t extent2() const noexcept { return n2_; }
    std::size_t size() const noexcept { return data_.size(); }

    std::size_t flat_index(std::size_t a, std::size_t b, std::size_t c) const {
        assert(a < n0_ && b < n1_ && c < n2_);
        return (a * n1_ + b) * n2_ + c;
    }

    T& operator()(std::size_t a, std::size_t b, std::size_t c) { return data_[flat_index(a, b, c)]; }
    const T& operator()(std::size_t a, std::size_t b, std::size_t c) const { return data_[flat_index(a, b, c)]; }

    const std::vector<T>& data() const noexcept { return data_; }
    std::vector<T>& data() noexcept { return data_; }

    bool operator==(const Grid3&) const = default;

private:
    std::size_t n0_ = 0;
    std::size_t n1_ = 0;
    std::size_t n2_ = 0;
    std::vector<T> data_;
};

} // namespace reserve3d
