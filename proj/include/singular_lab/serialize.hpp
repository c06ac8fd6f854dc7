#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bijections.hpp"
#include "blocks.hpp"
#include "census.hpp"
#include "maps.hpp"
#include "partition.hpp"

// JSON encodings. Column and block indices are 1-based in JSON.
namespace singular_lab::codec {

using nlohmann::json;

/// Decimal integer: a JSON number when it fits in 64 bits, a decimal string otherwise.
inline json count(const count_t &c)
{
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
        return c.convert_to<std::int64_t>();
    }
    return c.str();
}

inline json encode(const Partition &p) { return p.parts(); }

inline json encode(const FrobeniusSymbol &f) { return {{"top", f.top()}, {"bottom", f.bottom()}}; }

inline json encode_run(const std::optional<DottedRun> &run)
{
    if (!run) {
        return {{"start", nullptr}, {"end_block", 0}};
    }
    return {{"start", run->start == DotStart::first_nonneutral ? "first" : "second"}, {"end_block", run->end_block}};
}

inline json encode(const DottedSymbol &d)
{
    return {{"k", d.modulus().k()},
            {"i", d.modulus().i()},
            {"top", d.symbol().top()},
            {"bottom", d.symbol().bottom()},
            {"dots", encode_run(d.run())}};
}

inline json encode(const OverlinedFrobenius &o)
{
    auto column = [](const std::optional<std::size_t> &c) -> json {
        return c ? json(*c + 1) : json(nullptr);
    };
    return {{"top", o.symbol.top()},
            {"bottom", o.symbol.bottom()},
            {"top_overline", column(o.top_overline)},
            {"bottom_overline", column(o.bottom_overline)}};
}

inline json encode(const BlockDecomposition &dec)
{
    json out = json::array();
    for (const auto &b : dec.all()) {
        out.push_back({{"kind", std::string(1, block_letter(b.kind))},
                       {"first", b.first + 1},
                       {"last", b.last},
                       {"anchor", b.anchor() ? json(*b.anchor() + 1) : json(nullptr)}});
    }
    return out;
}

inline json encode(const RestrictedOverpartition &r)
{
    return {{"k", r.modulus().k()},
            {"i", r.modulus().i()},
            {"plain", r.plain().parts()},
            {"over_i", r.over_i().parts()},
            {"over_minus_i", r.over_minus_i().parts()}};
}

inline json encode(const WrightInput &w)
{
    return {{"k", w.modulus().k()}, {"i", w.modulus().i()}, {"mu1", w.mu1().parts()}, {"mu2", w.mu2().parts()}};
}

inline json encode(const WrightOutput &w) { return {{"kappa", w.kappa.parts()}, {"m", w.m}}; }

inline json encode(const PsiTrace &t)
{
    json blocks = json::array();
    json gammas = json::array();
    for (const auto &b : t.blocks) {
        blocks.push_back(encode(b));
    }
    for (const auto &g : t.gammas) {
        gammas.push_back(encode(g));
    }
    return {{"k", t.modulus.k()},   {"i", t.modulus.i()}, {"m", t.m},
            {"row_swapped", t.row_swapped}, {"blocks", blocks},    {"gammas", gammas}};
}

inline json encode(const SeriesTruncation &s)
{
    json coeffs = json::array();
    for (const auto &c : s.coefficients) {
        coeffs.push_back(count(c));
    }
    return {{"cutoff", s.cutoff}, {"coefficients", coeffs}};
}

inline json encode(const RefinedCounts &counts)
{
    json out = json::object();
    for (const auto &[m, c] : counts) {
        out[std::to_string(m)] = count(c);
    }
    return out;
}

inline json encode(const VerificationReport &r)
{
    json records = json::array();
    for (const auto &rec : r.records) {
        records.push_back({{"n", rec.n},
                           {"m", rec.m},
                           {"singular", count(rec.singular)},
                           {"restricted", rec.restricted ? count(*rec.restricted) : json(nullptr)},
                           {"formula", count(rec.formula)}});
    }
    json series = json::array();
    for (const auto &c : r.series) {
        series.push_back(count(c));
    }
    json totals = json::array();
    for (const auto &c : r.singular_totals) {
        totals.push_back(count(c));
    }
    return {{"k", r.k},
            {"i", r.i},
            {"n_max", r.n_max},
            {"verdicts",
             {{"refined_formula", r.refined_formula},
              {"series_totals", r.series_totals},
              {"refined_restricted", r.refined_restricted ? json(*r.refined_restricted) : json(nullptr)},
              {"roundtrips", r.roundtrips},
              {"all", r.passed()}}},
            {"objects_checked", r.objects_checked},
            {"records", records},
            {"singular_totals", totals},
            {"series", series},
            {"failures", r.failures},
            {"notes", r.notes}};
}

namespace detail {

inline std::vector<part_t> int_array(const json &j, const char *what)
{
    if (!j.is_array()) {
        throw validation_error(std::string(what) + " must be an array of integers");
    }
    std::vector<part_t> out;
    for (const auto &x : j) {
        if (!x.is_number_integer()) {
            throw validation_error(std::string(what) + " must contain only integers");
        }
        const auto v = x.get<long long>();
        if (v < std::numeric_limits<part_t>::min() || v > std::numeric_limits<part_t>::max()) {
            throw validation_error(std::string(what) + " entry out of range");
        }
        out.push_back(static_cast<part_t>(v));
    }
    return out;
}

inline const json &field(const json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw validation_error(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

inline int int_field(const json &j, const char *key)
{
    const json &v = field(j, key);
    if (!v.is_number_integer()) {
        throw validation_error(std::string("field \"") + key + "\" must be an integer");
    }
    return v.get<int>();
}

inline std::optional<std::size_t> column_field(const json &j, const char *key, std::size_t size)
{
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    const json &v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1 || static_cast<std::size_t>(v.get<long long>()) > size) {
        throw validation_error(std::string("field \"") + key + "\" must be a column number in 1..size");
    }
    return static_cast<std::size_t>(v.get<long long>()) - 1;
}

} // namespace detail

inline Partition decode_partition(const json &j) { return Partition(detail::int_array(j, "partition")); }

inline FrobeniusSymbol decode_frobenius(const json &j)
{
    return FrobeniusSymbol(detail::int_array(detail::field(j, "top"), "top"),
                           detail::int_array(detail::field(j, "bottom"), "bottom"));
}

/// Either a Frobenius symbol object or a partition array.
inline FrobeniusSymbol decode_symbol_or_partition(const json &j)
{
    return j.is_array() ? to_frobenius(decode_partition(j)) : decode_frobenius(j);
}

inline ModulusPair decode_modulus(const json &j)
{
    return ModulusPair(detail::int_field(j, "k"), detail::int_field(j, "i"));
}

inline std::optional<DottedRun> decode_run(const json &j)
{
    if (j.is_null()) {
        return std::nullopt;
    }
    const json &start = detail::field(j, "start");
    if (start.is_null()) {
        return std::nullopt;
    }
    if (!start.is_string() || (start != "first" && start != "second")) {
        throw validation_error("dots.start must be \"first\", \"second\" or null");
    }
    const int end = detail::int_field(j, "end_block");
    if (end < 1) {
        throw validation_error("dots.end_block must be positive");
    }
    return DottedRun{start == "first" ? DotStart::first_nonneutral : DotStart::second_nonneutral,
                     static_cast<std::size_t>(end)};
}

inline DottedSymbol decode_dotted(const json &j, const ModulusPair &mod)
{
    return DottedSymbol(mod, decode_frobenius(j), j.contains("dots") ? decode_run(j.at("dots")) : std::nullopt);
}

inline DottedSymbol decode_dotted(const json &j) { return decode_dotted(j, decode_modulus(j)); }

inline OverlinedFrobenius decode_overlined(const json &j)
{
    FrobeniusSymbol f = decode_frobenius(j);
    const std::size_t size = f.size();
    return OverlinedFrobenius(std::move(f), detail::column_field(j, "top_overline", size),
                              detail::column_field(j, "bottom_overline", size));
}

inline RestrictedOverpartition decode_restricted(const json &j, const ModulusPair &mod)
{
    return RestrictedOverpartition(mod, decode_partition(detail::field(j, "plain")),
                                   decode_partition(detail::field(j, "over_i")),
                                   decode_partition(detail::field(j, "over_minus_i")));
}

inline RestrictedOverpartition decode_restricted(const json &j) { return decode_restricted(j, decode_modulus(j)); }

inline WrightInput decode_wright_input(const json &j, const ModulusPair &mod)
{
    return WrightInput(mod, decode_partition(detail::field(j, "mu1")), decode_partition(detail::field(j, "mu2")));
}

} // namespace singular_lab::codec
