#include "polar/config.hpp"

#include <algorithm>
#include <sstream>

namespace polar {

void require_unit(std::span<const double> v, std::size_t dim, const char* what) {
    if (v.size() != dim) {
        std::ostringstream os;
        os << what << ": dimension mismatch (expected " << dim << ", got " << v.size() << ")";
        throw std::invalid_argument(os.str());
    }
    const double r = norm(v);
    if (!(std::abs(r - 1.0) <= kUnitTolerance)) {
        std::ostringstream os;
        os.precision(17);
        os << what << ": vector is not unit (norm " << r << ")";
        throw std::invalid_argument(os.str());
    }
}

std::vector<double> normalized(std::span<const double> v) {
    const double r = norm(v);
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("cannot normalize a zero vector");
    std::vector<double> out(v.begin(), v.end());
    for (double& x : out) x /= r;
    return out;
}

Configuration::Configuration(int dim, std::vector<double> rowmajor)
    : dim_(dim), data_(std::move(rowmajor)) {
    if (dim < 1) throw std::invalid_argument("configuration dimension must be >= 1");
    if (data_.empty() || data_.size() % dim != 0)
        throw std::invalid_argument("configuration needs n >= 1 vectors of length d");
    for (std::size_t i = 0; i < size(); ++i) require_unit((*this)[i], dim_, "configuration");
}

Configuration Configuration::from_rows(int dim, const std::vector<std::vector<double>>& rows) {
    std::vector<double> flat;
    flat.reserve(rows.size() * static_cast<std::size_t>(std::max(dim, 0)));
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != dim)
            throw std::invalid_argument("configuration row has wrong dimension");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return Configuration(dim, std::move(flat));
}

Configuration Configuration::from_directions(int dim, const std::vector<std::vector<double>>& rows) {
    std::vector<std::vector<double>> unit;
    unit.reserve(rows.size());
    for (const auto& r : rows) unit.push_back(normalized(r));
    return from_rows(dim, unit);
}

Configuration Configuration::orthonormal_basis(int dim) {
    std::vector<double> flat(static_cast<std::size_t>(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) flat[static_cast<std::size_t>(i) * dim + i] = 1.0;
    return Configuration(dim, std::move(flat));
}

void Configuration::append(std::span<const double> u) {
    require_unit(u, dim_, "configuration");
    data_.insert(data_.end(), u.begin(), u.end());
}

std::vector<std::vector<double>> Configuration::rows() const {
    std::vector<std::vector<double>> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.emplace_back((*this)[i].begin(), (*this)[i].end());
    return out;
}

Configuration transform(const Configuration& config, std::span<const double> q) {
    const auto d = static_cast<std::size_t>(config.dim());
    if (q.size() != d * d) throw std::invalid_argument("transform: matrix size mismatch");
    std::vector<double> flat(config.size() * d);
    for (std::size_t i = 0; i < config.size(); ++i) {
        const auto u = config[i];
        for (std::size_t r = 0; r < d; ++r) flat[i * d + r] = dot(q.subspan(r * d, d), u);
    }
    return Configuration(config.dim(), std::move(flat));
}

}  // namespace polar
