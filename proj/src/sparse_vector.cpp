#include "textcat/sparse_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace textcat {

void SparseVector::validate() const {
    std::uint32_t prev = 0;
    bool first = true;
    for (const auto& e : entries) {
        if (e.index >= dim)
            throw std::invalid_argument("sparse vector: index out of range");
        if (!first && e.index <= prev)
            throw std::invalid_argument("sparse vector: indices not strictly increasing");
        if (e.weight == 0.0)
            throw std::invalid_argument("sparse vector: stored zero weight");
        prev = e.index;
        first = false;
    }
}

SparseVector make_sparse(std::uint32_t dim, std::vector<SparseEntry> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    SparseVector v;
    v.dim = dim;
    v.entries.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size();) {
        std::uint32_t idx = raw[i].index;
        double w = 0.0;
        for (; i < raw.size() && raw[i].index == idx; ++i) w += raw[i].weight;
        if (w != 0.0) v.entries.push_back({idx, w});
    }
    v.validate();
    return v;
}

double dot(const SparseVector& u, const SparseVector& v) {
    double s = 0.0;
    auto a = u.entries.begin(), ae = u.entries.end();
    auto b = v.entries.begin(), be = v.entries.end();
    while (a != ae && b != be) {
        if (a->index < b->index) {
            ++a;
        } else if (b->index < a->index) {
            ++b;
        } else {
            s += a->weight * b->weight;
            ++a;
            ++b;
        }
    }
    return s;
}

double norm(const SparseVector& u) {
    double s = 0.0;
    for (const auto& e : u.entries) s += e.weight * e.weight;
    return std::sqrt(s);
}

double squared_distance(const SparseVector& u, const SparseVector& v) {
    double s = 0.0;
    auto a = u.entries.begin(), ae = u.entries.end();
    auto b = v.entries.begin(), be = v.entries.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->index < b->index)) {
            s += a->weight * a->weight;
            ++a;
        } else if (a == ae || b->index < a->index) {
            s += b->weight * b->weight;
            ++b;
        } else {
            double d = a->weight - b->weight;
            s += d * d;
            ++a;
            ++b;
        }
    }
    return s;
}

double cosine(const SparseVector& u, const SparseVector& v) {
    if (u.dim != v.dim)
        throw std::invalid_argument("cosine: dimension mismatch");
    double nu = norm(u), nv = norm(v);
    if (nu == 0.0 || nv == 0.0) return 0.0;
    return dot(u, v) / (nu * nv);
}

}  // namespace textcat
