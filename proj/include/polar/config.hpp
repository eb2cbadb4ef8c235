#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polar {

/// Tolerance on |u| - 1 accepted when a configuration or probe direction is built.
inline constexpr double kUnitTolerance = 1e-12;

/// Thrown when a resource budget (net size, enumeration size) would be exceeded.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Strictly positive exponent p of the potential.
class Exponent {
public:
    explicit Exponent(double p) : p_(p) {
        if (!(p > 0.0) || !std::isfinite(p))
            throw std::invalid_argument("exponent must be a finite positive number, got " +
                                        std::to_string(p));
    }
    double value() const noexcept { return p_; }
    operator double() const noexcept { return p_; }

private:
    double p_;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

/// Throws unless |v| is within kUnitTolerance of 1 and v has the expected dimension.
void require_unit(std::span<const double> v, std::size_t dim, const char* what);

/// Returns v / |v|; throws on the zero vector.
std::vector<double> normalized(std::span<const double> v);

/// A multiset of n unit vectors in R^d, stored row-major.
class Configuration {
public:
    Configuration() = default;

    /// Validates every row to unit norm within kUnitTolerance.
    Configuration(int dim, std::vector<double> rowmajor);

    static Configuration from_rows(int dim, const std::vector<std::vector<double>>& rows);

    /// Normalizes every row first; rejects zero rows.
    static Configuration from_directions(int dim, const std::vector<std::vector<double>>& rows);

    /// The standard basis e_1..e_d.
    static Configuration orthonormal_basis(int dim);

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return dim_ == 0 ? 0 : data_.size() / dim_; }

    /// Theorems assume n >= d; smaller configurations are allowed but flagged.
    bool underdetermined() const noexcept { return size() < static_cast<std::size_t>(dim_); }

    std::span<const double> operator[](std::size_t i) const {
        return {data_.data() + i * dim_, static_cast<std::size_t>(dim_)};
    }
    std::span<const double> data() const noexcept { return data_; }

    void append(std::span<const double> u);

    std::vector<std::vector<double>> rows() const;

    friend bool operator==(const Configuration&, const Configuration&) = default;

private:
    int dim_ = 0;
    std::vector<double> data_;
};

/// Applies the d x d row-major matrix q to every vector (q is expected to be orthogonal).
Configuration transform(const Configuration& config, std::span<const double> q);

}  // namespace polar
