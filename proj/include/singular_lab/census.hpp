#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "bijections.hpp"
#include "blocks.hpp"
#include "maps.hpp"
#include "partition.hpp"

namespace singular_lab {

// Counts refined by the signed statistic m; absent keys are zero.
using RefinedCounts = std::map<int, count_t>;

inline count_t total(const RefinedCounts &counts)
{
    count_t s = 0;
    for (const auto &[m, c] : counts) {
        s += c;
    }
    return s;
}

inline count_t at(const RefinedCounts &counts, int m)
{
    const auto it = counts.find(m);
    return it == counts.end() ? count_t(0) : it->second;
}

template <typename Fn>
void for_each_singular(const ModulusPair &mod, part_t n, Fn &&fn)
{
    for_each_partition(n, [&](std::span<const part_t> parts) {
        const FrobeniusSymbol f = to_frobenius(Partition(std::vector<part_t>(parts.begin(), parts.end())));
        for (const DottedSymbol &d : dotted_configurations(mod, f)) {
            fn(d);
        }
    });
}

/// Every dotted symbol of weight n: partitions in lexicographically decreasing
/// order, each followed by its dotted configurations.
inline std::vector<DottedSymbol> enumerate_singular(const ModulusPair &mod, part_t n)
{
    std::vector<DottedSymbol> out;
    for_each_singular(mod, n, [&](const DottedSymbol &d) { out.push_back(d); });
    return out;
}

/// Qbar_{k,i}(n, m) for every m, counted from the block structure of each
/// partition of n without materializing the dotted symbols.
inline RefinedCounts count_singular_by_m(const ModulusPair &mod, part_t n)
{
    RefinedCounts out;
    for_each_partition(n, [&](std::span<const part_t> parts) {
        const FrobeniusSymbol f = to_frobenius(Partition(std::vector<part_t>(parts.begin(), parts.end())));
        const BlockDecomposition dec = decompose_blocks(mod, f);
        out[0] += 1;
        for (std::size_t e = 1; e <= dec.count(); ++e) {
            const int sign = dec.block(e).kind == BlockKind::negative ? 1 : -1;
            out[sign * static_cast<int>(e)] += 1;
            if (e >= 2) {
                out[sign * static_cast<int>(e - 1)] += 1;
            }
        }
    });
    return out;
}

inline count_t count_singular(const ModulusPair &mod, part_t n)
{
    return total(count_singular_by_m(mod, n));
}

inline count_t count_singular(const ModulusPair &mod, part_t n, int m)
{
    return at(count_singular_by_m(mod, n), m);
}

namespace detail {

// Partitions of n into parts <= max_part accepted by `allowed`; distinct parts when `distinct`.
template <typename Allowed, typename Fn>
void for_each_restricted_partition(part_t n, part_t max_part, const Allowed &allowed, bool distinct,
                                   std::vector<part_t> &stack, Fn &fn)
{
    if (n == 0) {
        fn(std::span<const part_t>(stack));
        return;
    }
    for (part_t x = std::min(n, max_part); x >= 1; --x) {
        if (!allowed(x)) {
            continue;
        }
        stack.push_back(x);
        for_each_restricted_partition(n - x, distinct ? x - 1 : x, allowed, distinct, stack, fn);
        stack.pop_back();
    }
}

template <typename Allowed, typename Fn>
void for_each_restricted_partition(part_t n, const Allowed &allowed, bool distinct, Fn &&fn)
{
    std::vector<part_t> stack;
    for_each_restricted_partition(n, n, allowed, distinct, stack, fn);
}

inline Partition to_partition(std::span<const part_t> parts)
{
    return Partition(std::vector<part_t>(parts.begin(), parts.end()));
}

} // namespace detail

/// Visits every overpartition of n with no part divisible by k and overlines
/// only on parts congruent to +-i (mod k). Overlined parts are chosen as two
/// independent distinct-part partitions; the plain parts fill the remainder.
template <typename Fn>
void for_each_restricted(const ModulusPair &mod, part_t n, Fn &&fn)
{
    if (mod.self_dual()) {
        throw domain_error("restricted overpartitions are unsupported for k = 2i");
    }
    const int k = mod.k();
    const int i = mod.i();
    auto res_i = [&](part_t x) { return x % k == i; };
    auto res_minus_i = [&](part_t x) { return x % k == k - i; };
    auto plain_ok = [&](part_t x) { return x % k != 0; };
    for (part_t w1 = 0; w1 <= n; ++w1) {
        detail::for_each_restricted_partition(w1, res_i, true, [&](std::span<const part_t> mu1) {
            const Partition over_i = detail::to_partition(mu1);
            for (part_t w2 = 0; w1 + w2 <= n; ++w2) {
                detail::for_each_restricted_partition(w2, res_minus_i, true, [&](std::span<const part_t> mu2) {
                    const Partition over_minus_i = detail::to_partition(mu2);
                    detail::for_each_restricted_partition(
                        n - w1 - w2, plain_ok, false, [&](std::span<const part_t> plain) {
                            fn(RestrictedOverpartition(mod, detail::to_partition(plain), over_i, over_minus_i));
                        });
                });
            }
        });
    }
}

inline std::vector<RestrictedOverpartition> enumerate_restricted(const ModulusPair &mod, part_t n)
{
    std::vector<RestrictedOverpartition> out;
    for_each_restricted(mod, n, [&](const RestrictedOverpartition &r) { out.push_back(r); });
    return out;
}

/// Cbar_{k,i}(n, m). The overlined pairs are enumerated; the plain parts are
/// counted with a coin-change table over parts not divisible by k.
inline RefinedCounts count_restricted_by_m(const ModulusPair &mod, part_t n)
{
    if (mod.self_dual()) {
        throw domain_error("restricted overpartitions are unsupported for k = 2i");
    }
    const int k = mod.k();
    const int i = mod.i();
    if (n < 0) {
        return {};
    }
    std::vector<count_t> plain(static_cast<std::size_t>(n) + 1);
    plain[0] = 1;
    for (part_t x = 1; x <= n; ++x) {
        if (x % k == 0) {
            continue;
        }
        for (part_t s = x; s <= n; ++s) {
            plain[static_cast<std::size_t>(s)] += plain[static_cast<std::size_t>(s - x)];
        }
    }
    RefinedCounts out;
    auto res_i = [&](part_t x) { return x % k == i; };
    auto res_minus_i = [&](part_t x) { return x % k == k - i; };
    for (part_t w1 = 0; w1 <= n; ++w1) {
        detail::for_each_restricted_partition(w1, res_i, true, [&](std::span<const part_t> mu1) {
            for (part_t w2 = 0; w1 + w2 <= n; ++w2) {
                detail::for_each_restricted_partition(w2, res_minus_i, true, [&](std::span<const part_t> mu2) {
                    const int m = static_cast<int>(mu1.size()) - static_cast<int>(mu2.size());
                    out[m] += plain[static_cast<std::size_t>(n - w1 - w2)];
                });
            }
        });
    }
    return out;
}

inline count_t count_restricted(const ModulusPair &mod, part_t n)
{
    return total(count_restricted_by_m(mod, n));
}

inline count_t count_restricted(const ModulusPair &mod, part_t n, int m)
{
    return at(count_restricted_by_m(mod, n), m);
}

/// Exact coefficients of a power series up to q^cutoff.
struct SeriesTruncation {
    std::vector<count_t> coefficients;
    int cutoff = 0;
};

/// prod_{n>=0} (1+q^{nk+i})(1+q^{(n+1)k-i}) / prod_{j=1}^{k-1} (1-q^{nk+j}),
/// truncated at q^cutoff. Only factors with exponent <= cutoff contribute.
inline SeriesTruncation product_series(const ModulusPair &mod, int cutoff)
{
    if (cutoff < 0) {
        throw validation_error("series cutoff must be nonnegative");
    }
    const auto size = static_cast<std::size_t>(cutoff) + 1;
    std::vector<count_t> c(size);
    c[0] = 1;
    auto times_one_plus = [&](int e) {
        for (int j = cutoff; j >= e; --j) {
            c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - e)];
        }
    };
    auto over_one_minus = [&](int e) {
        for (int j = e; j <= cutoff; ++j) {
            c[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j - e)];
        }
    };
    const int k = mod.k();
    const int i = mod.i();
    for (int n = 0; n * k <= cutoff; ++n) {
        if (n * k + i <= cutoff) {
            times_one_plus(n * k + i);
        }
        if ((n + 1) * k - i <= cutoff) {
            times_one_plus((n + 1) * k - i);
        }
        for (int j = 1; j < k && n * k + j <= cutoff; ++j) {
            over_one_minus(n * k + j);
        }
    }
    return {std::move(c), cutoff};
}

/// Counts at one (n, m). `restricted` is empty when that count was skipped (k = 2i).
struct VerificationRecord {
    int n = 0;
    int m = 0;
    count_t singular;
    std::optional<count_t> restricted;
    count_t formula;
};

struct VerificationReport {
    int k = 3;
    int i = 1;
    int n_max = 0;
    std::vector<VerificationRecord> records;
    std::vector<count_t> singular_totals;
    std::vector<count_t> series;
    // Verdicts: (a) refined formula, (b) totals vs series, (c) singular vs
    // restricted refined counts, (d) bijection round trips.
    bool refined_formula = true;
    bool series_totals = true;
    std::optional<bool> refined_restricted;
    bool roundtrips = true;
    long long objects_checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    bool passed() const noexcept
    {
        return refined_formula && series_totals && refined_restricted.value_or(true) && roundtrips;
    }
};

namespace detail {

struct per_n_result {
    std::vector<VerificationRecord> records;
    count_t singular_total;
    std::optional<count_t> restricted_total;
    bool refined_formula = true;
    bool refined_restricted = true;
    bool roundtrips = true;
    long long objects = 0;
    std::vector<std::string> failures;
};

inline per_n_result verify_one(const ModulusPair &mod, int n, const std::vector<count_t> &p)
{
    per_n_result out;
    const bool with_restricted = !mod.self_dual();
    const RefinedCounts q = count_singular_by_m(mod, n);
    RefinedCounts c;
    if (with_restricted) {
        c = count_restricted_by_m(mod, n);
        out.restricted_total = total(c);
    }
    out.singular_total = total(q);
    auto p_at = [&](long long x) { return x < 0 ? count_t(0) : p[static_cast<std::size_t>(x)]; };

    for (int m = -(n + 1); m <= n + 1; ++m) {
        VerificationRecord rec{n, m, at(q, m), std::nullopt, p_at(n - wright_offset(mod, m))};
        if (with_restricted) {
            rec.restricted = at(c, m);
        }
        if (rec.singular != rec.formula) {
            out.refined_formula = false;
            out.failures.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                   ": Qbar != p(n - k C(m,2) - i m)");
        }
        if (rec.restricted && *rec.restricted != rec.singular) {
            out.refined_restricted = false;
            out.failures.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m) + ": Qbar != Cbar");
        }
        if (rec.singular != 0 || rec.formula != 0 || rec.restricted.value_or(0) != 0) {
            out.records.push_back(std::move(rec));
        }
    }

    auto fail = [&](const std::string &what) {
        out.roundtrips = false;
        if (out.failures.size() < 20) {
            out.failures.push_back("n=" + std::to_string(n) + ": " + what);
        }
    };
    for_each_singular(mod, n, [&](const DottedSymbol &d) {
        ++out.objects;
        try {
            const int m = d.signed_dots();
            if (m != 0) {
                const Partition sigma = psi_forward(d);
                if (sigma.weight() != n - wright_offset(mod, m)) {
                    fail("psi weight law fails on " + d.pattern());
                }
                if (psi_inverse(mod, m, sigma) != d) {
                    fail("psi round trip fails on " + d.pattern());
                }
            }
            if (with_restricted) {
                const RestrictedOverpartition r = andrews_forward(d);
                if (r.weight() != n || r.statistic() != m || andrews_inverse(r) != d) {
                    fail("composed bijection round trip fails on " + d.pattern());
                }
            }
        } catch (const std::exception &e) {
            fail(std::string("exception: ") + e.what());
        }
    });
    if (with_restricted) {
        for_each_restricted(mod, n, [&](const RestrictedOverpartition &r) {
            ++out.objects;
            try {
                if (andrews_forward(andrews_inverse(r)) != r) {
                    fail("inverse composed bijection round trip fails");
                }
            } catch (const std::exception &e) {
                fail(std::string("exception: ") + e.what());
            }
        });
    }
    return out;
}

} // namespace detail

/// Checks, for every n <= n_max and every m, the refined counting formula, the
/// series coefficients against the totals, the equality of the singular and
/// restricted refined counts (skipped when k = 2i), and the round trips of both
/// bijections on every enumerated object. Failures are reported, not thrown.
///
/// Work over n is spread across `threads` workers that share nothing mutable;
/// results are merged in order of n so the report is deterministic.
inline VerificationReport verify_identities(const ModulusPair &mod, int n_max, unsigned threads = 1)
{
    if (n_max < 0) {
        throw validation_error("n_max must be nonnegative");
    }
    VerificationReport report;
    report.k = mod.k();
    report.i = mod.i();
    report.n_max = n_max;
    const std::vector<count_t> p = partition_counts(n_max);
    report.series = product_series(mod, n_max).coefficients;

    std::vector<detail::per_n_result> results(static_cast<std::size_t>(n_max) + 1);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int n = next++; n <= n_max; n = next++) {
            results[static_cast<std::size_t>(n)] = detail::verify_one(mod, n, p);
        }
    };
    threads = std::clamp(threads, 1u, static_cast<unsigned>(n_max) + 1);
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();

    if (!mod.self_dual()) {
        report.refined_restricted = true;
    } else {
        report.notes.push_back("singular vs restricted comparison skipped: k = 2i");
    }
    for (int n = 0; n <= n_max; ++n) {
        auto &r = results[static_cast<std::size_t>(n)];
        report.records.insert(report.records.end(), r.records.begin(), r.records.end());
        report.singular_totals.push_back(r.singular_total);
        report.refined_formula = report.refined_formula && r.refined_formula;
        report.roundtrips = report.roundtrips && r.roundtrips;
        if (report.refined_restricted) {
            *report.refined_restricted = *report.refined_restricted && r.refined_restricted;
        }
        if (r.singular_total != report.series[static_cast<std::size_t>(n)] ||
            (r.restricted_total && *r.restricted_total != r.singular_total)) {
            report.series_totals = false;
            report.failures.push_back("n=" + std::to_string(n) + ": totals disagree with the series coefficient");
        }
        report.objects_checked += r.objects;
        report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
    }
    return report;
}

} // namespace singular_lab
