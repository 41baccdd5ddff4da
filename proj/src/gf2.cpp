#include "lensgrid/gf2.hpp"

namespace lensgrid {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0)
{
}

std::size_t BitMatrix::eliminate()
{
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t(1) << (c % 64);
        std::size_t piv = rank;
        while (piv < rows_ && !(data_[piv * words_ + w] & bit)) ++piv;
        if (piv == rows_) continue;
        if (piv != rank)
            for (std::size_t k = w; k < words_; ++k) std::swap(data_[piv * words_ + k], data_[rank * words_ + k]);
        const std::uint64_t* src = &data_[rank * words_];
        for (std::size_t r = rank + 1; r < rows_; ++r) {
            std::uint64_t* dst = &data_[r * words_];
            if (dst[w] & bit)
                for (std::size_t k = w; k < words_; ++k) dst[k] ^= src[k];
        }
        ++rank;
    }
    return rank;
}

}
