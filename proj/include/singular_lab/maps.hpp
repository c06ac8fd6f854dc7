#pragma once

#include <cstddef>
#include <vector>

#include "blocks.hpp"
#include "errors.hpp"
#include "partition.hpp"

namespace singular_lab {

/// Dyson map d_r: subtract one from every part, then add a part of size r - 1 + length.
/// Requires rank(p) <= r. On the empty partition d_1 gives the empty partition,
/// d_r (r >= 2) gives the single part r - 1, and r <= 0 is rejected.
inline Partition dyson(long long r, const Partition &p)
{
    if (p.rank() > r) {
        throw domain_error("Dyson map requires rank(p) <= r");
    }
    if (p.empty()) {
        if (r <= 0) {
            throw domain_error("Dyson map on the empty partition requires r >= 1");
        }
        return r == 1 ? Partition{} : Partition{static_cast<part_t>(r - 1)};
    }
    std::vector<part_t> out;
    out.reserve(p.length() + 1);
    out.push_back(static_cast<part_t>(r - 1 + static_cast<long long>(p.length())));
    for (part_t x : p) {
        if (x > 1) {
            out.push_back(x - 1);
        }
    }
    if (out.front() == 0) {
        out.erase(out.begin());
    }
    return Partition(std::move(out));
}

/// The same map computed directly on Frobenius symbols.
inline FrobeniusSymbol dyson_frobenius(long long r, const FrobeniusSymbol &f)
{
    if (f.rank() > r) {
        throw domain_error("Dyson map requires rank <= r");
    }
    const std::size_t d = f.size();
    const auto &a = f.top();
    const auto &b = f.bottom();
    if (d == 0) {
        if (r <= 0) {
            throw domain_error("Dyson map on the empty partition requires r >= 1");
        }
        if (r == 1) {
            return {};
        }
        return FrobeniusSymbol({static_cast<part_t>(r - 2)}, {0});
    }
    const auto head = static_cast<part_t>(b[0] + r - 1);
    if (d == 1) {
        if (a[0] >= 2) {
            return FrobeniusSymbol({head, a[0] - 2}, {1, 0});
        }
        if (a[0] == 1) {
            return FrobeniusSymbol({head}, {1});
        }
        if (b[0] >= 1 - r) {
            return FrobeniusSymbol({head}, {0});
        }
        return {}; // a_1 = 0, b_1 = -r
    }

    std::vector<part_t> top{head};
    std::vector<part_t> bottom;
    for (std::size_t t = 1; t < d; ++t) {
        bottom.push_back(b[t] + 2);
    }
    if (a[d - 1] >= 2) {
        for (std::size_t t = 0; t < d; ++t) {
            top.push_back(a[t] - 2);
        }
        bottom.push_back(1);
        bottom.push_back(0);
    } else if (a[d - 1] == 1) {
        for (std::size_t t = 0; t + 1 < d; ++t) {
            top.push_back(a[t] - 2);
        }
        bottom.push_back(1);
    } else if (a[d - 2] == 1) {
        for (std::size_t t = 0; t + 2 < d; ++t) {
            top.push_back(a[t] - 2);
        }
    } else {
        for (std::size_t t = 0; t + 1 < d; ++t) {
            top.push_back(a[t] - 2);
        }
        bottom.push_back(0);
    }
    return FrobeniusSymbol(std::move(top), std::move(bottom));
}

/// Inverse of d_r. The largest part of a nonempty image is the appended part
/// r - 1 + length, which fixes the preimage length; the empty partition is the
/// image of (1^(1-r)) for r <= 1.
inline Partition dyson_inverse(long long r, const Partition &p)
{
    if (p.empty()) {
        if (r > 1) {
            throw domain_error("empty partition is not in the image of d_r for r >= 2");
        }
        return Partition(std::vector<part_t>(static_cast<std::size_t>(1 - r), 1));
    }
    const long long len = static_cast<long long>(p[0]) - r + 1;
    const long long survivors = static_cast<long long>(p.length()) - 1;
    if (len < survivors || len < 0) {
        throw domain_error("partition is not in the image of d_r");
    }
    std::vector<part_t> out;
    out.reserve(static_cast<std::size_t>(len));
    for (std::size_t j = 1; j < p.length(); ++j) {
        out.push_back(p[j] + 1);
    }
    out.resize(static_cast<std::size_t>(len), 1);
    Partition pre(std::move(out));
    if (pre.rank() > r || (pre.empty() && r <= 0) || dyson(r, pre) != p) {
        throw domain_error("partition is not in the image of d_r");
    }
    return pre;
}

inline FrobeniusSymbol dyson_inverse_frobenius(long long r, const FrobeniusSymbol &f)
{
    return to_frobenius(dyson_inverse(r, from_frobenius(f)));
}

/// s_u: column (a, b) -> (a - u, b + u).
inline FrobeniusSymbol shift(long long u, const FrobeniusSymbol &f)
{
    std::vector<part_t> top, bottom;
    for (std::size_t t = 0; t < f.size(); ++t) {
        const long long x = f.top()[t] - u;
        const long long y = f.bottom()[t] + u;
        if (x < 0 || y < 0) {
            throw domain_error("shift produces a negative entry");
        }
        top.push_back(static_cast<part_t>(x));
        bottom.push_back(static_cast<part_t>(y));
    }
    return FrobeniusSymbol(std::move(top), std::move(bottom));
}

/// c_u: column (a, b) -> (b - u, a + u). An involution.
inline FrobeniusSymbol shifted_conjugate(long long u, const FrobeniusSymbol &f)
{
    std::vector<part_t> top, bottom;
    for (std::size_t t = 0; t < f.size(); ++t) {
        const long long x = f.bottom()[t] - u;
        const long long y = f.top()[t] + u;
        if (x < 0 || y < 0) {
            throw domain_error("shifted conjugate produces a negative entry");
        }
        top.push_back(static_cast<part_t>(x));
        bottom.push_back(static_cast<part_t>(y));
    }
    return FrobeniusSymbol(std::move(top), std::move(bottom));
}

/// A pair of partitions into distinct parts, congruent to i and to k - i (mod k).
class WrightInput {
public:
    WrightInput(ModulusPair mod, Partition mu1, Partition mu2)
        : mod_(mod), mu1_(std::move(mu1)), mu2_(std::move(mu2))
    {
        check(mu1_, mod_.i(), "first");
        check(mu2_, mod_.k() - mod_.i(), "second");
    }

    const ModulusPair &modulus() const noexcept { return mod_; }
    const Partition &mu1() const noexcept { return mu1_; }
    const Partition &mu2() const noexcept { return mu2_; }
    int m() const noexcept { return static_cast<int>(mu1_.length()) - static_cast<int>(mu2_.length()); }
    long long weight() const noexcept { return mu1_.weight() + mu2_.weight(); }

    friend bool operator==(const WrightInput &, const WrightInput &) = default;

private:
    void check(const Partition &p, int residue, const char *which) const
    {
        for (std::size_t j = 0; j < p.length(); ++j) {
            if (p[j] % mod_.k() != residue % mod_.k()) {
                throw validation_error(std::string(which) + " Wright partition has a part with the wrong residue");
            }
            if (j > 0 && p[j] == p[j - 1]) {
                throw validation_error(std::string(which) + " Wright partition must have distinct parts");
            }
        }
    }

    ModulusPair mod_;
    Partition mu1_;
    Partition mu2_;
};

struct WrightOutput {
    Partition kappa; // every part a multiple of k
    int m = 0;

    friend bool operator==(const WrightOutput &, const WrightOutput &) = default;
};

/// k * C(m, 2) + i * m with C(m, 2) = m(m-1)/2 for every integer m.
inline long long wright_offset(const ModulusPair &mod, long long m) noexcept
{
    return mod.k() * (m * (m - 1) / 2) + mod.i() * m;
}

/// Modified Wright map phi. With a_j, b_j the decoded parts of mu1, mu2 and
/// m >= 0, the columns (a_{m+j}, b_j) form a symbol mu and the leftover a_j give
/// nu_j = a_j - m + j; the image is (k (nu U mu), m). For m < 0 the rows trade
/// places and the union is conjugated.
inline WrightOutput wright_forward(const WrightInput &w)
{
    const int k = w.modulus().k();
    const int i = w.modulus().i();
    std::vector<part_t> a, b;
    for (part_t x : w.mu1()) {
        a.push_back((x - i) / k);
    }
    for (part_t y : w.mu2()) {
        b.push_back((y - (k - i)) / k);
    }
    const int m = w.m();
    const bool negative = m < 0;
    const std::vector<part_t> &lead = negative ? b : a;
    const std::vector<part_t> &other = negative ? a : b;
    const auto big_m = static_cast<std::size_t>(negative ? -m : m);

    FrobeniusSymbol mu(std::vector<part_t>(lead.begin() + static_cast<std::ptrdiff_t>(big_m), lead.end()), other);
    std::vector<part_t> nu;
    for (std::size_t j = 0; j < big_m; ++j) {
        nu.push_back(lead[j] - static_cast<part_t>(big_m) + static_cast<part_t>(j + 1));
    }
    Partition joined = partition_union(Partition::from_multiset(std::move(nu)), from_frobenius(mu));
    if (negative) {
        joined = conjugate(joined);
    }
    return {joined.empty() ? Partition{} : scale(k, joined), m};
}

/// Inverse of phi. Let rho = kappa / k (conjugated when m < 0). Since
/// nu_M = a_M >= a_{M+1} + 1 = mu_1, the parts of nu are the M = |m| largest
/// parts of rho, padded with zeros when rho is shorter; what is left is mu.
inline WrightInput wright_inverse(const ModulusPair &mod, const Partition &kappa, int m)
{
    const int k = mod.k();
    const int i = mod.i();
    std::vector<part_t> rho_parts;
    for (part_t x : kappa) {
        if (x % k != 0) {
            throw validation_error("Wright inverse requires every part to be a multiple of k");
        }
        rho_parts.push_back(x / k);
    }
    Partition rho(std::move(rho_parts));
    if (m < 0) {
        rho = conjugate(rho);
    }
    const auto big_m = static_cast<std::size_t>(m < 0 ? -m : m);
    std::vector<part_t> nu(big_m, 0);
    std::vector<part_t> rest;
    for (std::size_t j = 0; j < rho.length(); ++j) {
        if (j < big_m) {
            nu[j] = rho[j];
        } else {
            rest.push_back(rho[j]);
        }
    }
    const FrobeniusSymbol mu = to_frobenius(Partition(std::move(rest)));

    std::vector<part_t> lead;
    for (std::size_t j = 0; j < big_m; ++j) {
        lead.push_back(nu[j] + static_cast<part_t>(big_m) - static_cast<part_t>(j + 1));
    }
    lead.insert(lead.end(), mu.top().begin(), mu.top().end());
    for (std::size_t j = 1; j < lead.size(); ++j) {
        if (lead[j - 1] <= lead[j]) {
            throw domain_error("Wright inverse reconstruction is not strictly decreasing");
        }
    }
    const std::vector<part_t> &a = m < 0 ? mu.bottom() : lead;
    const std::vector<part_t> &b = m < 0 ? lead : mu.bottom();
    std::vector<part_t> mu1, mu2;
    for (part_t x : a) {
        mu1.push_back(k * x + i);
    }
    for (part_t y : b) {
        mu2.push_back(k * y + (k - i));
    }
    return WrightInput(mod, Partition(std::move(mu1)), Partition(std::move(mu2)));
}

} // namespace singular_lab
