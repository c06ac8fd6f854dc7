#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "blocks.hpp"
#include "errors.hpp"
#include "maps.hpp"
#include "partition.hpp"

namespace singular_lab {

/// Intermediate ladder of psi_m: blocks[v-1] = D_v, gammas[v-1] = Gamma_v for
/// v = 1..m+1. When the last dotted block is positive the ladder is the one
/// computed on the row-swapped symbol with modulus (k, k-i); `row_swapped` is
/// then set and `modulus` is that dual pair.
struct PsiTrace {
    ModulusPair modulus{3, 1};
    int m = 0;
    bool row_swapped = false;
    std::vector<FrobeniusSymbol> blocks;
    std::vector<FrobeniusSymbol> gammas;
};

namespace detail {

// Concatenation step producing Gamma_{v+1} from L = D_{v+1} and R = Gamma_v.
// Odd v = 2w+1 uses c_{g-f+1} with f = 2-i, g = wk+1, h = k-i-1;
// even v = 2w uses s_{g+1} with f = k-i-2, g = wk-1, h = 1-i.
// Every hypothesis and conclusion of the concatenation step is asserted.
struct psi_step_params {
    long long f;
    long long g;
    long long h;
    bool conjugating;

    psi_step_params(const ModulusPair &mod, long long v)
    {
        const long long k = mod.k();
        const long long i = mod.i();
        const long long w = v / 2;
        conjugating = (v % 2 == 1);
        if (conjugating) {
            f = 2 - i;
            g = w * k + 1;
            h = k - i - 1;
        } else {
            f = k - i - 2;
            g = w * k - 1;
            h = 1 - i;
        }
    }

    long long dyson_r() const noexcept { return f - 2 * g + 1; }
    // Columns of Gamma_{v+1} coming from L satisfy a - b <= f - 2g - 2; the
    // first column from d_r(R) satisfies a - b >= f - 2g - 1.
    long long split_threshold() const noexcept { return f - 2 * g - 1; }

    FrobeniusSymbol map_left(const FrobeniusSymbol &left) const
    {
        return conjugating ? shifted_conjugate(g - f + 1, left) : shift(g + 1, left);
    }

    FrobeniusSymbol unmap_left(const FrobeniusSymbol &left) const
    {
        return conjugating ? shifted_conjugate(g - f + 1, left) : shift(-(g + 1), left);
    }
};

inline std::string step_label(long long v)
{
    return "psi step v=" + std::to_string(v) + ": ";
}

inline FrobeniusSymbol psi_step(const ModulusPair &mod, long long v, const FrobeniusSymbol &left,
                                const FrobeniusSymbol &right)
{
    const psi_step_params q(mod, v);
    const std::string at = step_label(v);
    check_invariant(!right.empty(), at + "R must be nonempty");
    check_invariant(q.g >= 1 && 2 * q.g >= q.f + 1, at + "step parameters out of range");
    check_invariant(q.conjugating ? q.h >= q.f : q.h <= q.f, at + "step parameter h out of range");

    const long long alpha1 = right.top()[0];
    const long long beta1 = right.bottom()[0];
    for (std::size_t y = 0; y < left.size(); ++y) {
        const long long d = left.column_difference(y);
        check_invariant(q.conjugating ? d >= q.f : d <= q.f, at + "condition i) fails");
    }
    check_invariant(right.rank() <= q.f - 2 * q.g + 1, at + "condition ii) fails");
    if (q.conjugating) {
        check_invariant(beta1 - q.g + 1 >= 0, at + "condition iv) lower bound fails");
    } else {
        check_invariant(alpha1 + q.g - q.f - 1 >= 0, at + "condition iv) lower bound fails");
    }
    if (!left.empty()) {
        const long long a_last = left.top().back();
        const long long b_last = left.bottom().back();
        if (q.conjugating) {
            check_invariant(a_last > alpha1 + q.g - 1, at + "condition iii) fails");
            check_invariant(b_last > beta1 - q.g + 1, at + "condition iv) fails");
        } else {
            check_invariant(a_last > beta1 - q.g + q.f + 1, at + "condition iii) fails");
            check_invariant(b_last > alpha1 + q.g - q.f - 1, at + "condition iv) fails");
        }
    }

    FrobeniusSymbol mu;
    try {
        mu = concat(q.map_left(left), dyson_frobenius(q.dyson_r(), right));
    } catch (const std::exception &e) {
        throw invariant_error(at + "concatenation is not a Frobenius symbol (" + e.what() + ")");
    }

    const std::size_t t = left.size();
    for (std::size_t y = 0; y < t; ++y) {
        check_invariant(mu.column_difference(y) <= q.f - 2 * q.g - 2, at + "conclusion (2) fails on L columns");
    }
    if (t < mu.size()) {
        check_invariant(mu.column_difference(t) >= q.split_threshold(), at + "conclusion (2) fails at the joint");
    }
    if (!left.empty()) {
        if (q.conjugating && left.rank() >= q.h) {
            check_invariant(mu.rank() <= -q.h + 2 * q.f - 2 * q.g - 2, at + "conclusion (3) fails");
        }
        if (!q.conjugating && left.rank() <= q.h) {
            check_invariant(mu.rank() <= q.h - 2 * q.g - 2, at + "conclusion (3) fails");
        }
    }
    check_invariant(left.weight() + right.weight() - mu.weight() == 2 * q.g - q.f,
                    at + "conclusion (5) weight ledger fails");
    check_invariant(2 * q.g - q.f == mod.i() + (v - 1) * mod.k(), at + "weight drop differs from i+(v-1)k");
    return mu;
}

inline long long rank_bound(const ModulusPair &mod, long long v)
{
    return 1 - mod.i() - (v - 1) * mod.k();
}

// psi_m for a dotted symbol whose last dotted block is negative.
inline PsiTrace psi_negative_trace(const DottedSymbol &d)
{
    const auto &run = *d.run();
    const auto &dec = d.blocks();
    const FrobeniusSymbol &sym = d.symbol();
    const auto m = static_cast<long long>(run.length());
    const std::size_t e = run.end_block;
    check_invariant(dec.block(e).kind == BlockKind::negative, "psi: last dotted block must be negative");

    PsiTrace trace;
    trace.modulus = d.modulus();
    trace.m = static_cast<int>(m);
    trace.blocks.push_back(sym.slice(dec.block(e).first, sym.size()));
    for (long long v = 2; v <= m; ++v) {
        const ParityBlock &b = dec.block(e - static_cast<std::size_t>(v) + 1);
        trace.blocks.push_back(sym.slice(b.first, b.last));
    }
    trace.blocks.push_back(sym.slice(0, dec.block(e - static_cast<std::size_t>(m) + 1).first));

    trace.gammas.push_back(trace.blocks[0]);
    for (long long v = 1; v <= m; ++v) {
        const FrobeniusSymbol &gamma = trace.gammas.back();
        check_invariant(gamma.rank() <= rank_bound(d.modulus(), v),
                        step_label(v) + "rank condition on Gamma_v fails");
        trace.gammas.push_back(
            psi_step(d.modulus(), v, trace.blocks[static_cast<std::size_t>(v)], gamma));
    }
    long long drop = 0;
    for (long long v = 1; v <= m; ++v) {
        drop += d.modulus().i() + (v - 1) * d.modulus().k();
    }
    check_invariant(sym.weight() - trace.gammas.back().weight() == drop, "psi: total weight ledger fails");
    return trace;
}

inline DottedSymbol swap_dotted(const DottedSymbol &d)
{
    DottedSymbol out(d.modulus().dual(), d.symbol().swapped_rows(), d.run());
    check_invariant(out.blocks().all().size() == d.blocks().all().size(), "row swap changed the block structure");
    return out;
}

// Inverse ladder for the negative-last case, returning D_{m+1} ... D_1 joined.
inline DottedSymbol psi_negative_inverse(const ModulusPair &mod, int m, const Partition &p)
{
    std::vector<FrobeniusSymbol> blocks(static_cast<std::size_t>(m) + 1);
    FrobeniusSymbol gamma = to_frobenius(p);
    for (long long v = m; v >= 1; --v) {
        const psi_step_params q(mod, v);
        std::size_t t = 0;
        while (t < gamma.size() && gamma.column_difference(t) < q.split_threshold()) {
            ++t;
        }
        blocks[static_cast<std::size_t>(v)] = q.unmap_left(gamma.slice(0, t));
        gamma = dyson_inverse_frobenius(q.dyson_r(), gamma.slice(t, gamma.size()));
    }
    blocks[0] = gamma;

    FrobeniusSymbol joined;
    for (std::size_t v = blocks.size(); v-- > 0;) {
        try {
            joined = concat(joined, blocks[v]);
        } catch (const validation_error &) {
            throw domain_error("psi inverse: blocks do not join into a Frobenius symbol");
        }
    }
    const BlockDecomposition dec = decompose_blocks(mod, joined);
    const std::size_t start_d1 = joined.size() - blocks[0].size();
    if (blocks[0].empty() || dec.block_of_column(start_d1) == 0) {
        throw domain_error("psi inverse: D_1 does not start a parity block");
    }
    const std::size_t e = dec.block_of_column(start_d1);
    if (dec.block(e).first != start_d1 || dec.block(e).kind != BlockKind::negative ||
        e < static_cast<std::size_t>(m) || e - static_cast<std::size_t>(m) + 1 > 2) {
        throw domain_error("psi inverse: partition is not in the image");
    }
    const DotStart start = e - static_cast<std::size_t>(m) + 1 == 1 ? DotStart::first_nonneutral
                                                                       : DotStart::second_nonneutral;
    return DottedSymbol(mod, std::move(joined), DottedRun{start, e});
}

} // namespace detail

/// Full D/Gamma ladder of psi_m with every step condition asserted.
inline PsiTrace gamma_trace(const DottedSymbol &d)
{
    if (!d.run()) {
        throw domain_error("psi requires at least one dotted block");
    }
    if (d.signed_dots() > 0) {
        return detail::psi_negative_trace(d);
    }
    PsiTrace trace = detail::psi_negative_trace(detail::swap_dotted(d));
    trace.row_swapped = true;
    return trace;
}

/// psi_m: a dotted symbol of weight n with m dots and negative last dotted block
/// goes to a partition of n - k C(m,2) - i m. A positive last block is handled on
/// the row-swapped symbol with modulus (k, k-i) and the result conjugated back,
/// giving weight n - k C(m+1,2) + i m.
inline Partition psi_forward(const DottedSymbol &d)
{
    const PsiTrace trace = gamma_trace(d);
    Partition out = from_frobenius(trace.gammas.back());
    return trace.row_swapped ? conjugate(out) : out;
}

/// Inverse of psi. m > 0 asks for a negative last dotted block with m dots,
/// m < 0 for a positive last dotted block with |m| dots.
inline DottedSymbol psi_inverse(const ModulusPair &mod, int m, const Partition &p)
{
    if (m == 0) {
        throw domain_error("psi inverse requires m != 0");
    }
    DottedSymbol out = m > 0 ? detail::psi_negative_inverse(mod, m, p)
                             : detail::swap_dotted(detail::psi_negative_inverse(mod.dual(), -m, conjugate(p)));
    if (out.signed_dots() != m || psi_forward(out) != p) {
        throw domain_error("psi inverse: partition is not in the image");
    }
    return out;
}

/// Overpartition with no part divisible by k whose overlined parts are all
/// congruent to i or -i (mod k). Requires k != 2i.
class RestrictedOverpartition {
public:
    RestrictedOverpartition(ModulusPair mod, Partition plain, Partition over_i, Partition over_minus_i)
        : mod_(mod), plain_(std::move(plain)), over_i_(std::move(over_i)), over_minus_i_(std::move(over_minus_i))
    {
        if (mod_.self_dual()) {
            throw domain_error("restricted overpartitions are unsupported for k = 2i");
        }
        for (part_t x : plain_) {
            if (x % mod_.k() == 0) {
                throw validation_error("restricted overpartition has a part divisible by k");
            }
        }
        check_overlined(over_i_, mod_.i());
        check_overlined(over_minus_i_, mod_.k() - mod_.i());
    }

    const ModulusPair &modulus() const noexcept { return mod_; }
    const Partition &plain() const noexcept { return plain_; }
    const Partition &over_i() const noexcept { return over_i_; }
    const Partition &over_minus_i() const noexcept { return over_minus_i_; }

    int statistic() const noexcept
    {
        return static_cast<int>(over_i_.length()) - static_cast<int>(over_minus_i_.length());
    }

    long long weight() const noexcept { return plain_.weight() + over_i_.weight() + over_minus_i_.weight(); }

    /// Parts in weakly decreasing order; among equal values the overlined one comes first.
    std::vector<std::pair<part_t, bool>> parts() const
    {
        std::vector<std::pair<part_t, bool>> out;
        for (part_t x : plain_) {
            out.emplace_back(x, false);
        }
        for (part_t x : over_i_) {
            out.emplace_back(x, true);
        }
        for (part_t x : over_minus_i_) {
            out.emplace_back(x, true);
        }
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }

    friend bool operator==(const RestrictedOverpartition &, const RestrictedOverpartition &) = default;

private:
    void check_overlined(const Partition &p, int residue) const
    {
        for (std::size_t j = 0; j < p.length(); ++j) {
            if (p[j] % mod_.k() != residue) {
                throw validation_error("overlined part has a residue other than i or -i");
            }
            if (j > 0 && p[j] == p[j - 1]) {
                throw validation_error("overlined parts must be distinct");
            }
        }
    }

    ModulusPair mod_;
    Partition plain_;
    Partition over_i_;
    Partition over_minus_i_;
};

/// Singular overpartition -> restricted overpartition: apply psi (when dotted),
/// pull the multiples of k out, and decode them with the inverse Wright map.
/// The overline statistic of the result equals the signed dot count.
inline RestrictedOverpartition andrews_forward(const DottedSymbol &d)
{
    const ModulusPair &mod = d.modulus();
    if (mod.self_dual()) {
        throw domain_error("the composed bijection is unsupported for k = 2i");
    }
    const int m = d.signed_dots();
    const Partition sigma = m != 0 ? psi_forward(d) : from_frobenius(d.symbol());
    std::vector<part_t> kappa, gamma;
    for (part_t x : sigma) {
        (x % mod.k() == 0 ? kappa : gamma).push_back(x);
    }
    const WrightInput w = wright_inverse(mod, Partition(std::move(kappa)), m);
    return RestrictedOverpartition(mod, Partition(std::move(gamma)), w.mu1(), w.mu2());
}

inline DottedSymbol andrews_inverse(const RestrictedOverpartition &r)
{
    const ModulusPair &mod = r.modulus();
    const WrightOutput w = wright_forward(WrightInput(mod, r.over_i(), r.over_minus_i()));
    const Partition sigma = partition_union(w.kappa, r.plain());
    if (w.m == 0) {
        return DottedSymbol(mod, to_frobenius(sigma));
    }
    return psi_inverse(mod, w.m, sigma);
}

} // namespace singular_lab
