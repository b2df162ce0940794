#include "velab/field.hpp"

#include <algorithm>
#include <cmath>

#include "velab/error.hpp"

namespace velab {

namespace {
void require_same_shape(const Field2D& a, const Field2D& b) {
    if (!a.same_shape(b)) throw ValidationError("field shape mismatch");
}
}  // namespace

Field2D& Field2D::operator+=(const Field2D& o) {
    require_same_shape(*this, o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

Field2D& Field2D::operator-=(const Field2D& o) {
    require_same_shape(*this, o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

Field2D& Field2D::operator*=(double s) {
    for (double& v : data_) v *= s;
    return *this;
}

Field2D operator+(Field2D a, const Field2D& b) { return a += b; }
Field2D operator-(Field2D a, const Field2D& b) { return a -= b; }
Field2D operator*(double s, Field2D a) { return a *= s; }

Field2D axpby(double a, const Field2D& x, double b, const Field2D& y) {
    require_same_shape(x, y);
    Field2D out(x.nx(), x.ny());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = a * x[k] + b * y[k];
    return out;
}

double max_abs(const Field2D& f) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

double max_abs_row(const Field2D& f, int j) {
    double m = 0.0;
    for (double v : f.row(j)) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace velab
