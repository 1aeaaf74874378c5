#pragma once

#include "posetkit/errors.hpp"

#include <cstdint>
#include <vector>

namespace posetkit {

/// A subset of the elements of one poset, as a fixed-width bit vector.
/// The binding to the poset is its element count: combining two SubsetBits
/// of different universe sizes is a contract violation (Errc::usage_error).
/// Bits at positions >= universe_size() are always zero.
class SubsetBits {
public:
    SubsetBits() = default;
    explicit SubsetBits(int universe_size);

    int universe_size() const noexcept { return n_; }
    int count() const noexcept;
    bool empty() const noexcept;

    bool test(int i) const;
    void set(int i);
    void reset(int i);
    SubsetBits with(int i) const;    // copy with bit i set
    SubsetBits without(int i) const; // copy with bit i cleared

    // -1 when no bit qualifies
    int min_element() const noexcept;
    int max_element() const noexcept;

    std::vector<int> elements() const; // ascending indices

    bool is_subset_of(const SubsetBits& other) const;
    bool intersects(const SubsetBits& other) const;

    SubsetBits& operator|=(const SubsetBits& other);
    SubsetBits& operator&=(const SubsetBits& other);
    SubsetBits& operator-=(const SubsetBits& other); // set difference

    friend SubsetBits operator|(SubsetBits a, const SubsetBits& b) { return a |= b; }
    friend SubsetBits operator&(SubsetBits a, const SubsetBits& b) { return a &= b; }
    friend SubsetBits operator-(SubsetBits a, const SubsetBits& b) { return a -= b; }

    SubsetBits complement() const;

    bool operator==(const SubsetBits& other) const;
    bool operator!=(const SubsetBits& other) const { return !(*this == other); }
    // Word-lexicographic; only used as a deterministic total order for maps.
    bool operator<(const SubsetBits& other) const;

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                int b = lowest_bit(bits);
                fn(static_cast<int>(w * 64) + b);
                bits &= bits - 1;
            }
        }
    }

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    static SubsetBits all(int universe_size);
    static SubsetBits of(int universe_size, std::initializer_list<int> indices);

private:
    static int lowest_bit(std::uint64_t word) noexcept;
    void check_index(int i) const;
    void check_same_universe(const SubsetBits& other) const;

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace posetkit
