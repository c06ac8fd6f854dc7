#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace singular_lab {

// Parts and Frobenius entries are machine integers; counts are unbounded.
using part_t = int;
using count_t = boost::multiprecision::cpp_int;

/// A weakly decreasing sequence of positive integers. The empty partition is allowed.
class Partition {
public:
    Partition() = default;

    /// Validating constructor: parts must already be weakly decreasing and positive.
    explicit Partition(std::vector<part_t> parts) : parts_(std::move(parts))
    {
        for (std::size_t j = 0; j < parts_.size(); ++j) {
            if (parts_[j] < 1) {
                throw validation_error("partition parts must be positive");
            }
            if (j > 0 && parts_[j - 1] < parts_[j]) {
                throw validation_error("partition parts must be weakly decreasing");
            }
        }
    }

    Partition(std::initializer_list<part_t> parts) : Partition(std::vector<part_t>(parts)) {}

    /// Normalizing builder: sorts an arbitrary multiset of parts and drops zeros.
    /// Negative entries are still rejected.
    static Partition from_multiset(std::vector<part_t> parts)
    {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    const std::vector<part_t> &parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    part_t operator[](std::size_t j) const { return parts_[j]; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    long long weight() const noexcept
    {
        return std::accumulate(parts_.begin(), parts_.end(), 0LL);
    }

    // rank(empty) = 0
    long long rank() const noexcept
    {
        if (parts_.empty()) {
            return 0;
        }
        return static_cast<long long>(parts_.front()) - static_cast<long long>(parts_.size());
    }

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &, const Partition &) = default;

private:
    std::vector<part_t> parts_;
};

/// Two strictly decreasing rows of nonnegative integers of equal length.
/// Column t (0-based here) encodes the hook at diagonal cell t.
class FrobeniusSymbol {
public:
    FrobeniusSymbol() = default;

    FrobeniusSymbol(std::vector<part_t> top, std::vector<part_t> bottom)
        : top_(std::move(top)), bottom_(std::move(bottom))
    {
        if (top_.size() != bottom_.size()) {
            throw validation_error("Frobenius rows must have equal length");
        }
        check_row(top_, "top");
        check_row(bottom_, "bottom");
    }

    const std::vector<part_t> &top() const noexcept { return top_; }
    const std::vector<part_t> &bottom() const noexcept { return bottom_; }
    std::size_t size() const noexcept { return top_.size(); }
    bool empty() const noexcept { return top_.empty(); }

    long long weight() const noexcept
    {
        long long w = 0;
        for (std::size_t t = 0; t < top_.size(); ++t) {
            w += static_cast<long long>(top_[t]) + bottom_[t] + 1;
        }
        return w;
    }

    // top[0] - bottom[0]; 0 for the empty symbol.
    long long rank() const noexcept
    {
        return empty() ? 0 : static_cast<long long>(top_[0]) - bottom_[0];
    }

    long long column_difference(std::size_t t) const
    {
        return static_cast<long long>(top_.at(t)) - bottom_.at(t);
    }

    /// Columns [first, last) as a new symbol.
    FrobeniusSymbol slice(std::size_t first, std::size_t last) const
    {
        last = std::min(last, size());
        first = std::min(first, last);
        return FrobeniusSymbol(std::vector<part_t>(top_.begin() + first, top_.begin() + last),
                               std::vector<part_t>(bottom_.begin() + first, bottom_.begin() + last));
    }

    FrobeniusSymbol swapped_rows() const { return FrobeniusSymbol(bottom_, top_); }

    /// Juxtaposition of columns; throws validation_error if the result is not a symbol.
    friend FrobeniusSymbol concat(const FrobeniusSymbol &left, const FrobeniusSymbol &right)
    {
        std::vector<part_t> top = left.top_;
        std::vector<part_t> bottom = left.bottom_;
        top.insert(top.end(), right.top_.begin(), right.top_.end());
        bottom.insert(bottom.end(), right.bottom_.begin(), right.bottom_.end());
        return FrobeniusSymbol(std::move(top), std::move(bottom));
    }

    friend bool operator==(const FrobeniusSymbol &, const FrobeniusSymbol &) = default;
    friend auto operator<=>(const FrobeniusSymbol &, const FrobeniusSymbol &) = default;

private:
    static void check_row(const std::vector<part_t> &row, const char *name)
    {
        for (std::size_t t = 0; t < row.size(); ++t) {
            if (row[t] < 0) {
                throw validation_error(std::string("Frobenius ") + name + " row has a negative entry");
            }
            if (t > 0 && row[t - 1] <= row[t]) {
                throw validation_error(std::string("Frobenius ") + name + " row must be strictly decreasing");
            }
        }
    }

    std::vector<part_t> top_;
    std::vector<part_t> bottom_;
};

inline Partition conjugate(const Partition &p)
{
    if (p.empty()) {
        return {};
    }
    std::vector<part_t> out(static_cast<std::size_t>(p[0]), 0);
    for (part_t part : p) {
        for (part_t c = 0; c < part; ++c) {
            ++out[static_cast<std::size_t>(c)];
        }
    }
    return Partition(std::move(out));
}

inline std::size_t durfee_side(const Partition &p) noexcept
{
    std::size_t d = 0;
    while (d < p.length() && p[d] >= static_cast<part_t>(d + 1)) {
        ++d;
    }
    return d;
}

inline FrobeniusSymbol to_frobenius(const Partition &p)
{
    const std::size_t d = durfee_side(p);
    const Partition c = conjugate(p);
    std::vector<part_t> top(d), bottom(d);
    for (std::size_t t = 0; t < d; ++t) {
        top[t] = p[t] - static_cast<part_t>(t + 1);
        bottom[t] = c[t] - static_cast<part_t>(t + 1);
    }
    return FrobeniusSymbol(std::move(top), std::move(bottom));
}

inline Partition from_frobenius(const FrobeniusSymbol &f)
{
    const std::size_t d = f.size();
    std::vector<part_t> parts;
    parts.reserve(d);
    for (std::size_t t = 0; t < d; ++t) {
        parts.push_back(f.top()[t] + static_cast<part_t>(t + 1));
    }
    // Rows below the Durfee square: row j counts the columns t with b_t + t >= j.
    if (d > 0) {
        const part_t longest = f.bottom()[0] + 1;
        for (part_t row = static_cast<part_t>(d) + 1; row <= longest; ++row) {
            part_t len = 0;
            for (std::size_t t = 0; t < d; ++t) {
                if (f.bottom()[t] + static_cast<part_t>(t + 1) >= row) {
                    ++len;
                }
            }
            parts.push_back(len);
        }
    }
    return Partition(std::move(parts));
}

inline Partition scale(part_t c, const Partition &p)
{
    if (c < 1) {
        throw validation_error("scale factor must be positive");
    }
    std::vector<part_t> out(p.begin(), p.end());
    for (auto &x : out) {
        x *= c;
    }
    return Partition(std::move(out));
}

inline Partition partition_union(const Partition &p, const Partition &q)
{
    std::vector<part_t> out;
    out.reserve(p.length() + q.length());
    std::merge(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(out), std::greater<>());
    return Partition(std::move(out));
}

/// p(0), ..., p(n_max) by Euler's pentagonal recurrence.
inline std::vector<count_t> partition_counts(long long n_max)
{
    if (n_max < 0) {
        return {};
    }
    std::vector<count_t> p(static_cast<std::size_t>(n_max) + 1);
    p[0] = 1;
    for (long long n = 1; n <= n_max; ++n) {
        count_t sum = 0;
        for (long long j = 1;; ++j) {
            const long long g1 = j * (3 * j - 1) / 2;
            if (g1 > n) {
                break;
            }
            const long long g2 = j * (3 * j + 1) / 2;
            count_t term = p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) {
                term += p[static_cast<std::size_t>(n - g2)];
            }
            if (j % 2 == 1) {
                sum += term;
            } else {
                sum -= term;
            }
        }
        p[static_cast<std::size_t>(n)] = sum;
    }
    return p;
}

inline count_t partition_count(long long n)
{
    if (n < 0) {
        return 0;
    }
    return partition_counts(n).back();
}

/// Calls fn(parts) for every partition of n in lexicographically decreasing order,
/// starting with (n) and ending with (1^n). The span is only valid during the call.
template <typename Fn>
void for_each_partition(part_t n, Fn &&fn)
{
    if (n < 0) {
        return;
    }
    if (n == 0) {
        fn(std::span<const part_t>{});
        return;
    }
    std::vector<part_t> a{n};
    while (true) {
        fn(std::span<const part_t>(a));
        // Rightmost part larger than one.
        std::size_t j = a.size();
        part_t ones = 0;
        while (j > 0 && a[j - 1] == 1) {
            --j;
            ++ones;
        }
        if (j == 0) {
            return;
        }
        --j;
        const part_t v = --a[j];
        a.resize(j + 1);
        part_t rest = ones + 1;
        while (rest > 0) {
            const part_t x = std::min(v, rest);
            a.push_back(x);
            rest -= x;
        }
    }
}

inline std::vector<Partition> enumerate_partitions(part_t n)
{
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const part_t> parts) {
        out.emplace_back(std::vector<part_t>(parts.begin(), parts.end()));
    });
    return out;
}

} // namespace singular_lab
