#pragma once

#include <cstdint>
#include <vector>

namespace netpers {

/// Dense vector over the two-element field, packed 64 bits per word.
class Z2Vector {
public:
    Z2Vector() = default;
    explicit Z2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1ull; }
    void set(std::size_t i) { words_[i >> 6] |= 1ull << (i & 63); }
    void flip(std::size_t i) { words_[i >> 6] ^= 1ull << (i & 63); }

    void operator^=(const Z2Vector& other);
    bool is_zero() const;
    int lowest_set() const;  // -1 when zero

    bool operator==(const Z2Vector& other) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Column-echelon workspace: absorbs vectors one at a time, tracking the span.
/// Used for ranks, membership tests and quotient-space coordinates.
class Z2ColumnSpace {
public:
    explicit Z2ColumnSpace(std::size_t ambient_dim) : dim_(ambient_dim) {}

    /// Reduces v against the stored basis. Returns true (and stores the
    /// residue) when v was independent; false when v was already in the span.
    bool insert(Z2Vector v);

    /// Residue of v after reduction against the basis (not stored).
    Z2Vector reduce(Z2Vector v) const;

    bool contains(const Z2Vector& v) const { return reduce(v).is_zero(); }
    std::size_t rank() const { return basis_.size(); }

private:
    std::size_t dim_;
    std::vector<Z2Vector> basis_;  // each with a distinct lowest set bit
    std::vector<int> pivots_;
};

}  // namespace netpers
