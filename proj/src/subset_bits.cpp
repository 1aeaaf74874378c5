#include "posetkit/subset_bits.hpp"

#include <algorithm>
#include <bit>

namespace posetkit {

SubsetBits::SubsetBits(int universe_size)
    : n_(universe_size), words_(static_cast<std::size_t>((universe_size + 63) / 64), 0) {
    if (universe_size < 0) {
        throw Error(Errc::usage_error, "subset universe size must be nonnegative");
    }
}

int SubsetBits::count() const noexcept {
    int total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool SubsetBits::empty() const noexcept {
    for (std::uint64_t w : words_) {
        if (w != 0) return false;
    }
    return true;
}

void SubsetBits::check_index(int i) const {
    if (i < 0 || i >= n_) {
        throw Error(Errc::usage_error,
                    "subset index " + std::to_string(i) + " out of range for universe of " +
                        std::to_string(n_));
    }
}

void SubsetBits::check_same_universe(const SubsetBits& other) const {
    if (n_ != other.n_) {
        throw Error(Errc::usage_error,
                    "subsets bound to different posets (" + std::to_string(n_) + " vs " +
                        std::to_string(other.n_) + " elements)");
    }
}

bool SubsetBits::test(int i) const {
    check_index(i);
    return (words_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u;
}

void SubsetBits::set(int i) {
    check_index(i);
    words_[static_cast<std::size_t>(i) / 64] |= std::uint64_t{1} << (i % 64);
}

void SubsetBits::reset(int i) {
    check_index(i);
    words_[static_cast<std::size_t>(i) / 64] &= ~(std::uint64_t{1} << (i % 64));
}

SubsetBits SubsetBits::with(int i) const {
    SubsetBits r = *this;
    r.set(i);
    return r;
}

SubsetBits SubsetBits::without(int i) const {
    SubsetBits r = *this;
    r.reset(i);
    return r;
}

int SubsetBits::lowest_bit(std::uint64_t word) noexcept {
    return std::countr_zero(word);
}

int SubsetBits::min_element() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
    }
    return -1;
}

int SubsetBits::max_element() const noexcept {
    for (std::size_t w = words_.size(); w-- > 0;) {
        if (words_[w] != 0) return static_cast<int>(w * 64) + 63 - std::countl_zero(words_[w]);
    }
    return -1;
}

std::vector<int> SubsetBits::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int i) { out.push_back(i); });
    return out;
}

bool SubsetBits::is_subset_of(const SubsetBits& other) const {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
}

bool SubsetBits::intersects(const SubsetBits& other) const {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & other.words_[w]) != 0) return true;
    }
    return false;
}

SubsetBits& SubsetBits::operator|=(const SubsetBits& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

SubsetBits& SubsetBits::operator&=(const SubsetBits& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

SubsetBits& SubsetBits::operator-=(const SubsetBits& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

SubsetBits SubsetBits::complement() const {
    SubsetBits r(n_);
    for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = ~words_[w];
    if (!r.words_.empty() && n_ % 64 != 0) {
        r.words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }
    return r;
}

bool SubsetBits::operator==(const SubsetBits& other) const {
    return n_ == other.n_ && words_ == other.words_;
}

bool SubsetBits::operator<(const SubsetBits& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    return std::lexicographical_compare(words_.begin(), words_.end(), other.words_.begin(),
                                        other.words_.end());
}

SubsetBits SubsetBits::all(int universe_size) {
    return SubsetBits(universe_size).complement();
}

SubsetBits SubsetBits::of(int universe_size, std::initializer_list<int> indices) {
    SubsetBits r(universe_size);
    for (int i : indices) r.set(i);
    return r;
}

} // namespace posetkit
