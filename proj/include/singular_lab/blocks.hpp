#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace singular_lab {

/// The pair (k, i) with k >= 3 and 1 <= i <= k - 1.
class ModulusPair {
public:
    ModulusPair(int k, int i) : k_(k), i_(i)
    {
        if (k < 3) {
            throw validation_error("modulus k must be at least 3");
        }
        if (i < 1 || i > k - 1) {
            throw validation_error("residue i must satisfy 1 <= i <= k-1");
        }
    }

    int k() const noexcept { return k_; }
    int i() const noexcept { return i_; }

    // (k, k-i): the modulus seen by the row-swapped symbol.
    ModulusPair dual() const { return {k_, k_ - i_}; }

    // i and -i coincide modulo k.
    bool self_dual() const noexcept { return 2 * i_ == k_; }

    friend bool operator==(const ModulusPair &, const ModulusPair &) = default;

private:
    int k_;
    int i_;
};

enum class ColumnParity { positive, negative, neutral };

inline ColumnParity column_parity(const ModulusPair &mod, long long a, long long b) noexcept
{
    const long long d = a - b;
    if (d >= mod.k() - mod.i() - 1) {
        return ColumnParity::positive;
    }
    if (d <= 1 - mod.i()) {
        return ColumnParity::negative;
    }
    return ColumnParity::neutral;
}

enum class BlockKind { neutral, positive, negative };

inline char block_letter(BlockKind kind) noexcept
{
    switch (kind) {
    case BlockKind::neutral:
        return 'E';
    case BlockKind::positive:
        return 'P';
    case BlockKind::negative:
        return 'N';
    }
    return '?';
}

/// Columns [first, last), 0-based. For P/N blocks the anchor is always `first`.
struct ParityBlock {
    std::size_t first = 0;
    std::size_t last = 0;
    BlockKind kind = BlockKind::neutral;

    std::size_t size() const noexcept { return last - first; }
    std::optional<std::size_t> anchor() const noexcept
    {
        if (kind == BlockKind::neutral) {
            return std::nullopt;
        }
        return first;
    }

    friend bool operator==(const ParityBlock &, const ParityBlock &) = default;
};

/// Split of a symbol into an optional leading all-neutral block E followed by
/// maximal parity blocks whose anchors alternate in parity.
///
/// Non-neutral blocks are numbered 1..count() in the accessors below; the E
/// block, if present, is not numbered. An empty E is represented by its absence.
class BlockDecomposition {
public:
    BlockDecomposition() = default;
    explicit BlockDecomposition(std::vector<ParityBlock> blocks) : blocks_(std::move(blocks)) {}

    const std::vector<ParityBlock> &all() const noexcept { return blocks_; }

    bool has_neutral_head() const noexcept
    {
        return !blocks_.empty() && blocks_.front().kind == BlockKind::neutral;
    }

    std::size_t count() const noexcept { return blocks_.size() - (has_neutral_head() ? 1 : 0); }

    // 1-based among non-neutral blocks.
    const ParityBlock &block(std::size_t number) const
    {
        if (number < 1 || number > count()) {
            throw domain_error("block number out of range");
        }
        return blocks_[number - 1 + (has_neutral_head() ? 1 : 0)];
    }

    std::optional<ParityBlock> neutral_head() const
    {
        if (has_neutral_head()) {
            return blocks_.front();
        }
        return std::nullopt;
    }

    /// Block number (1-based, non-neutral) containing column t, or 0 for the E block.
    std::size_t block_of_column(std::size_t t) const
    {
        const std::size_t offset = has_neutral_head() ? 1 : 0;
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            if (t >= blocks_[b].first && t < blocks_[b].last) {
                return b + 1 - offset;
            }
        }
        throw domain_error("column out of range");
    }

    // e.g. "EPNPN"
    std::string pattern() const
    {
        std::string s;
        for (const auto &b : blocks_) {
            s.push_back(block_letter(b.kind));
        }
        return s;
    }

    friend bool operator==(const BlockDecomposition &, const BlockDecomposition &) = default;

private:
    std::vector<ParityBlock> blocks_;
};

inline BlockDecomposition decompose_blocks(const ModulusPair &mod, const FrobeniusSymbol &f)
{
    std::vector<ParityBlock> blocks;
    const std::size_t n = f.size();
    std::size_t t = 0;
    while (t < n && column_parity(mod, f.top()[t], f.bottom()[t]) == ColumnParity::neutral) {
        ++t;
    }
    if (t > 0) {
        blocks.push_back({0, t, BlockKind::neutral});
    }
    while (t < n) {
        const ColumnParity anchor = column_parity(mod, f.top()[t], f.bottom()[t]);
        const std::size_t first = t++;
        while (t < n) {
            const ColumnParity c = column_parity(mod, f.top()[t], f.bottom()[t]);
            if (c != ColumnParity::neutral && c != anchor) {
                break;
            }
            ++t;
        }
        blocks.push_back(
            {first, t, anchor == ColumnParity::positive ? BlockKind::positive : BlockKind::negative});
    }
    return BlockDecomposition(std::move(blocks));
}

/// Frobenius symbol with at most one overlined entry per row. Overlines are
/// 0-based column indices.
struct OverlinedFrobenius {
    FrobeniusSymbol symbol;
    std::optional<std::size_t> top_overline;
    std::optional<std::size_t> bottom_overline;

    OverlinedFrobenius() = default;
    OverlinedFrobenius(FrobeniusSymbol s, std::optional<std::size_t> top, std::optional<std::size_t> bottom)
        : symbol(std::move(s)), top_overline(top), bottom_overline(bottom)
    {
        if ((top && *top >= symbol.size()) || (bottom && *bottom >= symbol.size())) {
            throw validation_error("overlined column out of range");
        }
    }

    friend bool operator==(const OverlinedFrobenius &, const OverlinedFrobenius &) = default;
};

inline bool is_singular(const ModulusPair &mod, const OverlinedFrobenius &o)
{
    const BlockDecomposition dec = decompose_blocks(mod, o.symbol);
    auto anchor_block = [&](std::size_t col, BlockKind kind) -> std::size_t {
        const std::size_t b = dec.block_of_column(col);
        if (b == 0 || dec.block(b).first != col || dec.block(b).kind != kind) {
            return 0;
        }
        return b;
    };
    if (!o.top_overline && !o.bottom_overline) {
        return true;
    }
    if (o.top_overline && !o.bottom_overline) {
        return anchor_block(*o.top_overline, BlockKind::positive) != 0;
    }
    if (!o.top_overline && o.bottom_overline) {
        return anchor_block(*o.bottom_overline, BlockKind::negative) != 0;
    }
    const std::size_t p = anchor_block(*o.top_overline, BlockKind::positive);
    const std::size_t q = anchor_block(*o.bottom_overline, BlockKind::negative);
    return p != 0 && q != 0 && (p + 1 == q || q + 1 == p);
}

enum class DotStart { first_nonneutral, second_nonneutral };

/// Dots cover non-neutral blocks start..end_block, with start = 1 or 2.
struct DottedRun {
    DotStart start = DotStart::first_nonneutral;
    std::size_t end_block = 1;

    std::size_t first_block() const noexcept { return start == DotStart::first_nonneutral ? 1 : 2; }
    std::size_t length() const noexcept { return end_block + 1 - first_block(); }

    friend bool operator==(const DottedRun &, const DottedRun &) = default;
};

/// Canonical form of a (k,i)-singular overpartition: a symbol with a run of
/// dotted parity blocks (conditions S1/S2/S3).
class DottedSymbol {
public:
    DottedSymbol(ModulusPair mod, FrobeniusSymbol symbol, std::optional<DottedRun> run = std::nullopt)
        : mod_(mod), symbol_(std::move(symbol)), blocks_(decompose_blocks(mod_, symbol_)), run_(run)
    {
        if (run_) {
            const std::size_t b = blocks_.count();
            if (run_->end_block < run_->first_block() || run_->end_block > b) {
                throw validation_error("dotted run does not fit the parity blocks");
            }
        }
    }

    const ModulusPair &modulus() const noexcept { return mod_; }
    const FrobeniusSymbol &symbol() const noexcept { return symbol_; }
    const BlockDecomposition &blocks() const noexcept { return blocks_; }
    const std::optional<DottedRun> &run() const noexcept { return run_; }
    long long weight() const noexcept { return symbol_.weight(); }

    /// +#dots if the last dotted block is N, -#dots if it is P, 0 without dots.
    int signed_dots() const
    {
        if (!run_) {
            return 0;
        }
        const int len = static_cast<int>(run_->length());
        return blocks_.block(run_->end_block).kind == BlockKind::negative ? len : -len;
    }

    // e.g. "EP.N.P.N" with '.' marking the following block as dotted.
    std::string pattern() const
    {
        std::string s;
        const std::size_t offset = blocks_.has_neutral_head() ? 1 : 0;
        for (std::size_t b = 0; b < blocks_.all().size(); ++b) {
            const std::size_t number = b + 1 - offset;
            if (run_ && b >= offset && number >= run_->first_block() && number <= run_->end_block) {
                s.push_back('.');
            }
            s.push_back(block_letter(blocks_.all()[b].kind));
        }
        return s;
    }

    friend bool operator==(const DottedSymbol &x, const DottedSymbol &y)
    {
        return x.mod_ == y.mod_ && x.symbol_ == y.symbol_ && x.run_ == y.run_;
    }

private:
    ModulusPair mod_;
    FrobeniusSymbol symbol_;
    BlockDecomposition blocks_;
    std::optional<DottedRun> run_;
};

inline DottedSymbol dotted_from_overlined(const ModulusPair &mod, const OverlinedFrobenius &o)
{
    if (!is_singular(mod, o)) {
        throw domain_error("overlined symbol is not (k,i)-singular");
    }
    const BlockDecomposition dec = decompose_blocks(mod, o.symbol);
    if (!o.top_overline && !o.bottom_overline) {
        return DottedSymbol(mod, o.symbol);
    }
    if (o.top_overline && o.bottom_overline) {
        const std::size_t end =
            std::max(dec.block_of_column(*o.top_overline), dec.block_of_column(*o.bottom_overline));
        return DottedSymbol(mod, o.symbol, DottedRun{DotStart::second_nonneutral, end});
    }
    const std::size_t col = o.top_overline ? *o.top_overline : *o.bottom_overline;
    return DottedSymbol(mod, o.symbol, DottedRun{DotStart::first_nonneutral, dec.block_of_column(col)});
}

// Overlines go on the anchors of the last dotted block and, for a run starting
// at the second block, of its predecessor: top row on P, bottom row on N.
inline OverlinedFrobenius from_dotted(const DottedSymbol &d)
{
    OverlinedFrobenius o(d.symbol(), std::nullopt, std::nullopt);
    if (!d.run()) {
        return o;
    }
    const auto &dec = d.blocks();
    auto mark = [&](std::size_t number) {
        const ParityBlock &b = dec.block(number);
        auto &slot = b.kind == BlockKind::positive ? o.top_overline : o.bottom_overline;
        if (slot) {
            throw domain_error("dotted run places two overlines in one row");
        }
        slot = b.first;
    };
    mark(d.run()->end_block);
    if (d.run()->start == DotStart::second_nonneutral) {
        mark(d.run()->end_block - 1);
    }
    return o;
}

/// All dotted runs on f: none, then runs from the first block ending at 1..B,
/// then runs from the second block ending at 2..B.
inline std::vector<DottedSymbol> dotted_configurations(const ModulusPair &mod, const FrobeniusSymbol &f)
{
    std::vector<DottedSymbol> out;
    out.emplace_back(mod, f);
    const std::size_t b = out.front().blocks().count();
    for (std::size_t e = 1; e <= b; ++e) {
        out.emplace_back(mod, f, DottedRun{DotStart::first_nonneutral, e});
    }
    for (std::size_t e = 2; e <= b; ++e) {
        out.emplace_back(mod, f, DottedRun{DotStart::second_nonneutral, e});
    }
    return out;
}

} // namespace singular_lab
