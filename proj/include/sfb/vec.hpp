#pragma once

#include <array>
#include <cmath>
#include <initializer_list>

#include "sfb/errors.hpp"

namespace sfb {

// Ambient vector in R^{n+1}. The dimension is a runtime value so the
// dimension-generic formulas read as written; quadrature entry points
// validate dim == 3 (n = 2) themselves.
class Vec {
  public:
    static constexpr int kMaxDim = 8;

    Vec() : dim_(0) {}
    explicit Vec(int dim) : dim_(dim) {
        require(dim >= 1 && dim <= kMaxDim, Errc::DimensionMismatch, "vector dimension out of range");
        c_.fill(0.0);
    }
    Vec(std::initializer_list<double> xs) : dim_(static_cast<int>(xs.size())) {
        require(dim_ >= 1 && dim_ <= kMaxDim, Errc::DimensionMismatch, "vector dimension out of range");
        int i = 0;
        for (double x : xs) c_[i++] = x;
    }
    static Vec zero(int dim) { return Vec(dim); }
    static Vec axis(int dim, int k) {
        Vec v(dim);
        v[k] = 1.0;
        return v;
    }

    int dim() const { return dim_; }
    double operator[](int i) const { return c_[i]; }
    double& operator[](int i) { return c_[i]; }

    double dot(const Vec& o) const {
        check_same(o);
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) s += c_[i] * o.c_[i];
        return s;
    }
    double norm2() const { return dot(*this); }
    double norm() const { return std::sqrt(norm2()); }

    Vec operator+(const Vec& o) const {
        check_same(o);
        Vec r(dim_);
        for (int i = 0; i < dim_; ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }
    Vec operator-(const Vec& o) const {
        check_same(o);
        Vec r(dim_);
        for (int i = 0; i < dim_; ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }
    Vec operator*(double t) const {
        Vec r(dim_);
        for (int i = 0; i < dim_; ++i) r.c_[i] = c_[i] * t;
        return r;
    }
    Vec operator-() const { return *this * -1.0; }
    Vec& operator+=(const Vec& o) {
        check_same(o);
        for (int i = 0; i < dim_; ++i) c_[i] += o.c_[i];
        return *this;
    }

    // Cross product, 3-dimensional vectors only.
    Vec cross(const Vec& o) const {
        check_same(o);
        require(dim_ == 3, Errc::DimensionMismatch, "cross product needs dim 3");
        return Vec{c_[1] * o.c_[2] - c_[2] * o.c_[1],
                   c_[2] * o.c_[0] - c_[0] * o.c_[2],
                   c_[0] * o.c_[1] - c_[1] * o.c_[0]};
    }

    Vec normalized() const {
        double n = norm();
        require(n > 1e-12, Errc::ZeroVector, "cannot normalize near-zero vector");
        return *this * (1.0 / n);
    }

  private:
    void check_same(const Vec& o) const {
        require(dim_ == o.dim_, Errc::DimensionMismatch, "mixed vector dimensions");
    }

    std::array<double, kMaxDim> c_{};
    int dim_;
};

inline Vec operator*(double t, const Vec& v) { return v * t; }

}  // namespace sfb
