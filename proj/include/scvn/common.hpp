#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace scvn {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Slack applied to the floating-point thresholds (satisfaction, mismatch).
inline constexpr double kFeasTol = 1e-9;

/// Maximum number of knowledge bases a library may hold (bitset width).
inline constexpr int kMaxKbCount = 64;

class InvalidConfig : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when the mismatch degree is requested for a sender with no constructed KB.
class UndefinedMismatch : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a pair shares no jointly constructed KB.
class NoCommonKnowledge : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class InstanceTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

class UnstableQueue : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

double distance(const Point& a, const Point& b);

/// Set of constructed knowledge bases of one vehicle; bit n set means KB n is stored.
class KbSet {
public:
    constexpr KbSet() = default;
    constexpr explicit KbSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr KbSet full(int count) {
        return KbSet(count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
    }
    static KbSet from_indicator(const std::vector<int>& indicator);

    constexpr bool contains(int n) const { return (bits_ >> n) & 1u; }
    constexpr void set(int n) { bits_ |= std::uint64_t{1} << n; }
    constexpr void reset(int n) { bits_ &= ~(std::uint64_t{1} << n); }
    constexpr void flip(int n) { bits_ ^= std::uint64_t{1} << n; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr std::uint64_t bits() const { return bits_; }

    constexpr KbSet operator&(KbSet o) const { return KbSet(bits_ & o.bits_); }
    constexpr KbSet operator|(KbSet o) const { return KbSet(bits_ | o.bits_); }
    /// Members of this set absent from `o`.
    constexpr KbSet minus(KbSet o) const { return KbSet(bits_ & ~o.bits_); }
    constexpr bool is_subset_of(KbSet o) const { return (bits_ & ~o.bits_) == 0; }

    friend constexpr bool operator==(KbSet, KbSet) = default;

    /// Binary string, KB 0 first, padded to `count` characters.
    std::string to_string(int count) const;
    static KbSet parse(const std::string& text);

    template <typename F>
    constexpr void for_each(F&& f) const {
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            f(std::countr_zero(b));
        }
    }

private:
    std::uint64_t bits_ = 0;
};

/// Dense row-major matrix.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const T* row(std::size_t r) const { return data_.data() + r * cols_; }
    T* row(std::size_t r) { return data_.data() + r * cols_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

}  // namespace scvn
