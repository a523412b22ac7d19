#include "netpers/z2_algebra.hpp"

#include <bit>
#include <stdexcept>

namespace netpers {

void Z2Vector::operator^=(const Z2Vector& other) {
    if (size_ != other.size_) throw std::logic_error("Z2Vector size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
}

bool Z2Vector::is_zero() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

int Z2Vector::lowest_set() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
    return -1;
}

bool Z2ColumnSpace::insert(Z2Vector v) {
    v = reduce(std::move(v));
    int low = v.lowest_set();
    if (low < 0) return false;
    basis_.push_back(std::move(v));
    pivots_.push_back(low);
    return true;
}

Z2Vector Z2ColumnSpace::reduce(Z2Vector v) const {
    for (;;) {
        int low = v.lowest_set();
        if (low < 0) return v;
        bool hit = false;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (pivots_[i] == low) {
                v ^= basis_[i];
                hit = true;
                break;
            }
        }
        if (!hit) return v;
    }
}

}  // namespace netpers
