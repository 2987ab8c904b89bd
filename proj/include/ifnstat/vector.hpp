#pragma once

#include <boost/container/small_vector.hpp>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace ifnstat {

using Index = std::int64_t;

/// A point of a finite-dimensional real vector space.
///
/// Coordinates live inline for dimensions up to four, so the hot loops of the
/// detectors (one evaluation per index k) never touch the heap.
class Vector {
  public:
    using storage_type = boost::container::small_vector<double, 4>;
    using const_iterator = storage_type::const_iterator;

    Vector() = default;

    explicit Vector(std::size_t dimension, double fill = 0.0) : coords_(dimension, fill) {}

    Vector(std::initializer_list<double> coords) : coords_(coords) {}

    static Vector scalar(double value) { return Vector{value}; }

    std::size_t dimension() const noexcept { return coords_.size(); }
    bool empty() const noexcept { return coords_.empty(); }

    double operator[](std::size_t i) const { return coords_[i]; }
    double& operator[](std::size_t i) { return coords_[i]; }

    const_iterator begin() const noexcept { return coords_.begin(); }
    const_iterator end() const noexcept { return coords_.end(); }

    bool is_finite() const noexcept {
        for (double c : coords_) {
            if (!std::isfinite(c)) return false;
        }
        return true;
    }

    Vector& operator+=(const Vector& rhs) {
        check_same_dimension(rhs);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
        return *this;
    }

    Vector& operator-=(const Vector& rhs) {
        check_same_dimension(rhs);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
        return *this;
    }

    Vector& operator*=(double a) noexcept {
        for (double& c : coords_) c *= a;
        return *this;
    }

    friend Vector operator+(Vector lhs, const Vector& rhs) { return lhs += rhs; }
    friend Vector operator-(Vector lhs, const Vector& rhs) { return lhs -= rhs; }
    friend Vector operator*(double a, Vector v) noexcept { return v *= a; }
    friend Vector operator-(Vector v) noexcept { return v *= -1.0; }

    friend bool operator==(const Vector& a, const Vector& b) noexcept {
        return a.coords_ == b.coords_;
    }

    std::string to_string() const;

  private:
    void check_same_dimension(const Vector& rhs) const {
        if (rhs.coords_.size() != coords_.size()) {
            throw std::invalid_argument("vector dimension mismatch: " +
                                        std::to_string(coords_.size()) + " vs " +
                                        std::to_string(rhs.coords_.size()));
        }
    }

    storage_type coords_;
};

}  // namespace ifnstat
