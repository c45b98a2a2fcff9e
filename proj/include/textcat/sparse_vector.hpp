#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace textcat {

struct SparseEntry {
    std::uint32_t index = 0;
    double weight = 0.0;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

// Sparse feature vector. Entries are sorted by strictly increasing index,
// zero weights are never stored, and every index is < dim.
struct SparseVector {
    std::uint32_t dim = 0;
    std::vector<SparseEntry> entries;

    bool empty() const { return entries.empty(); }
    std::size_t nnz() const { return entries.size(); }

    // Throws std::invalid_argument if the invariants above are violated.
    void validate() const;

    friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

// Builds a vector from unordered (index, weight) pairs: sorts by index,
// sums duplicate indices and drops entries that end up exactly zero.
SparseVector make_sparse(std::uint32_t dim, std::vector<SparseEntry> raw);

double dot(const SparseVector& u, const SparseVector& v);
double norm(const SparseVector& u);
double squared_distance(const SparseVector& u, const SparseVector& v);

// dot(u,v) / (|u||v|), or 0 if either norm is zero.
// Throws std::invalid_argument on dimension mismatch.
double cosine(const SparseVector& u, const SparseVector& v);

}  // namespace textcat
