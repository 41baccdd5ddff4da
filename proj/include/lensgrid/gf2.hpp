#pragma once

#include <cstdint>
#include <vector>

namespace lensgrid {

// Dense GF(2) matrix, rows packed 64 columns per word.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols);

    void set(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] |= std::uint64_t(1) << (c % 64); }
    void flip(std::size_t r, std::size_t c) { data_[r * words_ + c / 64] ^= std::uint64_t(1) << (c % 64); }
    bool get(std::size_t r, std::size_t c) const { return (data_[r * words_ + c / 64] >> (c % 64)) & 1; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    // Rank by row reduction, pivoting on the lowest column index; destroys the contents.
    std::size_t eliminate();

private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> data_;
};

}
