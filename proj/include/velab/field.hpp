/// @file field.hpp
/// @brief Row-major 2D scalar field on the (x, y) node lattice.
///
/// Node (i, j) sits at x = i*dx, y = j*dy; storage index is j*nx + i, so a
/// row is one wall-parallel line and row 0 is the wall.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace velab {

class Field2D {
public:
    Field2D() = default;
    Field2D(int nx, int ny, double value = 0.0)
        : nx_(nx), ny_(ny), data_(static_cast<std::size_t>(nx) * ny, value) {}

    int nx() const noexcept { return nx_; }
    int ny() const noexcept { return ny_; }
    std::size_t size() const noexcept { return data_.size(); }

    double& operator()(int i, int j) noexcept { return data_[static_cast<std::size_t>(j) * nx_ + i]; }
    double operator()(int i, int j) const noexcept { return data_[static_cast<std::size_t>(j) * nx_ + i]; }
    double& operator[](std::size_t k) noexcept { return data_[k]; }
    double operator[](std::size_t k) const noexcept { return data_[k]; }

    std::span<double> row(int j) noexcept { return {data_.data() + static_cast<std::size_t>(j) * nx_, static_cast<std::size_t>(nx_)}; }
    std::span<const double> row(int j) const noexcept { return {data_.data() + static_cast<std::size_t>(j) * nx_, static_cast<std::size_t>(nx_)}; }

    double* data() noexcept { return data_.data(); }
    const double* data() const noexcept { return data_.data(); }
    std::span<const double> values() const noexcept { return data_; }

    bool same_shape(const Field2D& other) const noexcept { return nx_ == other.nx_ && ny_ == other.ny_; }

    Field2D& operator+=(const Field2D& o);
    Field2D& operator-=(const Field2D& o);
    Field2D& operator*=(double s);

    friend bool operator==(const Field2D&, const Field2D&) = default;

private:
    int nx_ = 0;
    int ny_ = 0;
    std::vector<double> data_;
};

Field2D operator+(Field2D a, const Field2D& b);
Field2D operator-(Field2D a, const Field2D& b);
Field2D operator*(double s, Field2D a);

/// a*x + b*y, elementwise.
Field2D axpby(double a, const Field2D& x, double b, const Field2D& y);

double max_abs(const Field2D& f);
/// max over i of |f(i, j)| for one row.
double max_abs_row(const Field2D& f, int j);

}  // namespace velab
