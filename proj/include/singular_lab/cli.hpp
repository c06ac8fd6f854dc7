#pragma once

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bijections.hpp"
#include "blocks.hpp"
#include "census.hpp"
#include "maps.hpp"
#include "partition.hpp"
#include "serialize.hpp"

// Command-line front end. Every command parses its input, calls one library
// operation and prints the result; exit 0 on success, 1 when a verification
// fails, 2 on invalid input.
namespace singular_lab::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_invalid = 2;

using nlohmann::json;

namespace detail {

inline std::string trim_left(const std::string &s)
{
    const auto pos = s.find_first_not_of(" \t\r\n");
    return pos == std::string::npos ? std::string() : s.substr(pos);
}

// Inline JSON when the text starts with '[' or '{', otherwise a file path.
inline json load_input(const std::string &source)
{
    const std::string text = trim_left(source);
    if (!text.empty() && (text.front() == '[' || text.front() == '{')) {
        return json::parse(text);
    }
    std::ifstream in(source);
    if (!in) {
        throw validation_error("cannot open input file " + source);
    }
    return json::parse(in);
}

inline std::string join(const std::vector<part_t> &xs, const char *sep = " ")
{
    std::ostringstream os;
    for (std::size_t j = 0; j < xs.size(); ++j) {
        os << (j ? sep : "") << xs[j];
    }
    return os.str();
}

inline std::string symbol_text(const FrobeniusSymbol &f)
{
    if (f.empty()) {
        return "( / )";
    }
    return "(" + join(f.top()) + " / " + join(f.bottom()) + ")";
}

inline std::string partition_text(const Partition &p) { return "(" + join(p.parts(), ",") + ")"; }

inline std::string overpartition_text(const RestrictedOverpartition &r)
{
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (const auto &[x, over] : r.parts()) {
        os << (first ? "" : ",") << (over ? "~" : "") << x;
        first = false;
    }
    os << ")";
    return os.str();
}

// Checks that k, i embedded in an input object (if any) agree with the flags.
inline void check_embedded_modulus(const json &j, const ModulusPair &mod)
{
    if (!j.is_object()) {
        return;
    }
    if ((j.contains("k") && j.at("k") != mod.k()) || (j.contains("i") && j.at("i") != mod.i())) {
        throw validation_error("k, i in the input disagree with --k, --i");
    }
}

inline unsigned default_threads()
{
    if (const char *env = std::getenv("SINGULAR_LAB_THREADS")) {
        try {
            const int t = std::stoi(env);
            if (t > 0) {
                return static_cast<unsigned>(t);
            }
        } catch (const std::exception &) {
        }
    }
    return 1;
}

struct Emitter {
    std::ostream &out;
    bool table;

    void emit(const json &j, const std::string &text) const
    {
        if (table) {
            out << text;
            if (!text.empty() && text.back() != '\n') {
                out << '\n';
            }
        } else {
            out << j.dump(2) << '\n';
        }
    }
};

inline json partition_payload(const Partition &p)
{
    return {{"partition", codec::encode(p)}, {"frobenius", codec::encode(to_frobenius(p))}, {"weight", p.weight()}};
}

inline std::string partition_table(const Partition &p)
{
    return "partition " + partition_text(p) + "\nfrobenius " + symbol_text(to_frobenius(p)) + "\nweight    " +
           std::to_string(p.weight()) + "\n";
}

inline std::string report_table(const VerificationReport &r)
{
    std::ostringstream os;
    os << "k=" << r.k << " i=" << r.i << " n_max=" << r.n_max << "\n";
    os << std::setw(4) << "n" << std::setw(5) << "m" << std::setw(12) << "Qbar(n,m)" << std::setw(12)
       << "Cbar(n,m)" << std::setw(12) << "p-formula" << "\n";
    for (const auto &rec : r.records) {
        os << std::setw(4) << rec.n << std::setw(5) << rec.m << std::setw(12) << rec.singular << std::setw(12)
           << (rec.restricted ? rec.restricted->str() : std::string("-")) << std::setw(12) << rec.formula << "\n";
    }
    auto verdict = [](bool ok) { return ok ? "PASS" : "FAIL"; };
    os << "refined formula     " << verdict(r.refined_formula) << "\n";
    os << "series totals       " << verdict(r.series_totals) << "\n";
    os << "singular=restricted " << (r.refined_restricted ? verdict(*r.refined_restricted) : "SKIPPED") << "\n";
    os << "round trips         " << verdict(r.roundtrips) << " (" << r.objects_checked << " objects)\n";
    for (const auto &f : r.failures) {
        os << "failure: " << f << "\n";
    }
    for (const auto &note : r.notes) {
        os << "note: " << note << "\n";
    }
    os << (r.passed() ? "ALL PASS" : "FAILED") << "\n";
    return os.str();
}

} // namespace detail

/// Runs one invocation; args excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Singular overpartition bijections, counts and identity checks", "singular_lab"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string input;
    int k = 0;
    int i = 0;
    auto add_format = [&](CLI::App *sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    };
    auto add_modulus = [&](CLI::App *sub) {
        sub->add_option("--k", k, "Modulus k >= 3")->required();
        sub->add_option("--i", i, "Residue 1 <= i <= k-1")->required();
    };
    auto add_input = [&](CLI::App *sub) {
        sub->add_option("--input", input, "Inline JSON or path to a JSON file")->required();
    };

    auto *convert = app.add_subcommand("convert", "Partition <-> Frobenius symbol");
    add_input(convert);
    add_format(convert);

    auto *blocks = app.add_subcommand("blocks", "Parity blocks, anchors and dotted configurations");
    add_modulus(blocks);
    add_input(blocks);
    add_format(blocks);
    bool list_configs = false;
    blocks->add_flag("--configurations", list_configs, "List every dotted configuration");

    std::string map_name;
    long long r_param = 0;
    long long u_param = 0;
    std::optional<int> m_param;
    auto *map = app.add_subcommand("map", "Apply one map");
    map->add_option("name", map_name, "Map name")
        ->required()
        ->check(CLI::IsMember({"dyson", "dyson-inverse", "shift", "shifted-conjugate", "wright", "wright-inverse",
                               "psi", "psi-inverse", "andrews", "andrews-inverse"}));
    map->add_option("--k", k, "Modulus k >= 3");
    map->add_option("--i", i, "Residue 1 <= i <= k-1");
    map->add_option("--r", r_param, "Dyson parameter r");
    map->add_option("--u", u_param, "Shift parameter u");
    map->add_option("--m", m_param, "Signed dot count / Wright statistic");
    add_input(map);
    add_format(map);

    auto *trace = app.add_subcommand("trace", "D/Gamma ladder of psi_m");
    add_modulus(trace);
    add_input(trace);
    add_format(trace);

    int n = 0;
    bool by_m = false;
    bool restricted = false;
    auto *count = app.add_subcommand("count", "Count singular (or restricted) overpartitions of n");
    add_modulus(count);
    count->add_option("--n", n, "Weight")->required()->check(CLI::NonNegativeNumber);
    count->add_option("--m", m_param, "Only this value of the statistic");
    count->add_flag("--by-m", by_m, "Refine by the statistic m");
    count->add_flag("--restricted", restricted, "Count restricted overpartitions instead");
    add_format(count);

    int cutoff = 0;
    auto *series = app.add_subcommand("series", "Truncated product series");
    add_modulus(series);
    series->add_option("--cutoff,-T", cutoff, "Highest exponent")->required()->check(CLI::NonNegativeNumber);
    add_format(series);

    int max_n = 0;
    unsigned threads = detail::default_threads();
    auto *verify = app.add_subcommand("verify", "Check every identity for all n <= max-n");
    add_modulus(verify);
    verify->add_option("--max-n", max_n, "Largest weight")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("--threads", threads, "Worker threads (default: SINGULAR_LAB_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    add_format(verify);

    std::vector<const char *> argv{"singular_lab"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }

    const detail::Emitter emit{out, format == "table"};
    try {
        auto modulus = [&] { return ModulusPair(k, i); };

        if (convert->parsed()) {
            const json j = detail::load_input(input);
            const Partition p = j.is_array() ? codec::decode_partition(j) : from_frobenius(codec::decode_frobenius(j));
            json payload = detail::partition_payload(p);
            payload["rank"] = p.rank();
            payload["conjugate"] = codec::encode(conjugate(p));
            emit.emit(payload, detail::partition_table(p) + "rank      " + std::to_string(p.rank()) +
                                   "\nconjugate " + detail::partition_text(conjugate(p)));
            return exit_ok;
        }

        if (blocks->parsed()) {
            const ModulusPair mod = modulus();
            const json j = detail::load_input(input);
            detail::check_embedded_modulus(j, mod);
            const FrobeniusSymbol f = codec::decode_symbol_or_partition(j);
            const BlockDecomposition dec = decompose_blocks(mod, f);
            const auto configs = dotted_configurations(mod, f);
            json payload{{"k", mod.k()},
                         {"i", mod.i()},
                         {"frobenius", codec::encode(f)},
                         {"pattern", dec.pattern()},
                         {"blocks", codec::encode(dec)},
                         {"configuration_count", configs.size()}};
            std::ostringstream text;
            text << "symbol   " << detail::symbol_text(f) << "\npattern  " << dec.pattern() << "\n";
            for (const auto &b : dec.all()) {
                text << block_letter(b.kind) << "  columns " << b.first + 1 << "-" << b.last;
                if (b.anchor()) {
                    text << "  anchor " << *b.anchor() + 1;
                }
                text << "\n";
            }
            text << "configurations " << configs.size() << "\n";
            if (j.is_object() && (j.contains("top_overline") || j.contains("bottom_overline"))) {
                const OverlinedFrobenius o = codec::decode_overlined(j);
                const bool singular = is_singular(mod, o);
                payload["singular"] = singular;
                text << "singular " << (singular ? "yes" : "no") << "\n";
                if (singular) {
                    const DottedSymbol d = dotted_from_overlined(mod, o);
                    payload["dotted"] = codec::encode(d);
                    text << "dotted   " << d.pattern() << "  m=" << d.signed_dots() << "\n";
                }
            }
            if (list_configs) {
                json list = json::array();
                for (const auto &d : configs) {
                    list.push_back({{"pattern", d.pattern()},
                                    {"m", d.signed_dots()},
                                    {"dots", codec::encode_run(d.run())},
                                    {"overlined", codec::encode(from_dotted(d))}});
                    text << "  " << d.pattern() << "  m=" << d.signed_dots() << "\n";
                }
                payload["configurations"] = list;
            }
            emit.emit(payload, text.str());
            return exit_ok;
        }

        if (map->parsed()) {
            const json j = detail::load_input(input);
            if (map_name == "dyson" || map_name == "dyson-inverse") {
                const FrobeniusSymbol f = codec::decode_symbol_or_partition(j);
                const Partition p = from_frobenius(f);
                const Partition q = map_name == "dyson" ? dyson(r_param, p) : dyson_inverse(r_param, p);
                emit.emit(detail::partition_payload(q), detail::partition_table(q));
                return exit_ok;
            }
            if (map_name == "shift" || map_name == "shifted-conjugate") {
                const FrobeniusSymbol f = codec::decode_symbol_or_partition(j);
                const FrobeniusSymbol g = map_name == "shift" ? shift(u_param, f) : shifted_conjugate(u_param, f);
                emit.emit(codec::encode(g), detail::symbol_text(g));
                return exit_ok;
            }
            const ModulusPair mod = modulus();
            detail::check_embedded_modulus(j, mod);
            if (map_name == "wright") {
                const WrightOutput w = wright_forward(codec::decode_wright_input(j, mod));
                emit.emit(codec::encode(w), "kappa " + detail::partition_text(w.kappa) + "\nm     " +
                                               std::to_string(w.m));
                return exit_ok;
            }
            if (map_name == "wright-inverse") {
                const Partition kappa = codec::decode_partition(j.is_object() ? codec::detail::field(j, "kappa") : j);
                const int m = m_param ? *m_param : codec::detail::int_field(j, "m");
                const WrightInput w = wright_inverse(mod, kappa, m);
                emit.emit(codec::encode(w), "mu1 " + detail::partition_text(w.mu1()) + "\nmu2 " +
                                               detail::partition_text(w.mu2()));
                return exit_ok;
            }
            if (map_name == "psi") {
                const DottedSymbol d = codec::decode_dotted(j, mod);
                if (m_param && *m_param != d.signed_dots()) {
                    throw validation_error("--m disagrees with the dots of the input");
                }
                const Partition p = psi_forward(d);
                emit.emit(detail::partition_payload(p), detail::partition_table(p));
                return exit_ok;
            }
            if (map_name == "psi-inverse") {
                if (!m_param) {
                    throw validation_error("psi-inverse requires --m");
                }
                const Partition p = from_frobenius(codec::decode_symbol_or_partition(j));
                const DottedSymbol d = psi_inverse(mod, *m_param, p);
                emit.emit(codec::encode(d), detail::symbol_text(d.symbol()) + "\npattern " + d.pattern());
                return exit_ok;
            }
            if (map_name == "andrews") {
                const RestrictedOverpartition r = andrews_forward(codec::decode_dotted(j, mod));
                emit.emit(codec::encode(r), detail::overpartition_text(r));
                return exit_ok;
            }
            const DottedSymbol d = andrews_inverse(codec::decode_restricted(j, mod));
            emit.emit(codec::encode(d), detail::symbol_text(d.symbol()) + "\npattern " + d.pattern());
            return exit_ok;
        }

        if (trace->parsed()) {
            const ModulusPair mod = modulus();
            const json j = detail::load_input(input);
            detail::check_embedded_modulus(j, mod);
            const PsiTrace t = gamma_trace(codec::decode_dotted(j, mod));
            std::ostringstream text;
            if (t.row_swapped) {
                text << "(rows swapped, modulus (" << t.modulus.k() << "," << t.modulus.i() << "))\n";
            }
            for (std::size_t v = 0; v < t.blocks.size(); ++v) {
                text << "D_" << v + 1 << "     " << detail::symbol_text(t.blocks[v]) << "\n";
            }
            for (std::size_t v = 0; v < t.gammas.size(); ++v) {
                text << "Gamma_" << v + 1 << " " << detail::symbol_text(t.gammas[v]) << "\n";
            }
            emit.emit(codec::encode(t), text.str());
            return exit_ok;
        }

        if (count->parsed()) {
            const ModulusPair mod = modulus();
            const RefinedCounts counts =
                restricted ? count_restricted_by_m(mod, n) : count_singular_by_m(mod, n);
            json payload{{"k", mod.k()},
                         {"i", mod.i()},
                         {"n", n},
                         {"kind", restricted ? "restricted" : "singular"},
                         {"total", codec::count(total(counts))}};
            std::ostringstream text;
            text << (restricted ? "Cbar" : "Qbar") << "(" << n << ") = " << total(counts) << "\n";
            if (m_param) {
                payload["m"] = *m_param;
                payload["count"] = codec::count(at(counts, *m_param));
                text << "m=" << *m_param << ": " << at(counts, *m_param) << "\n";
            }
            if (by_m) {
                payload["by_m"] = codec::encode(counts);
                for (const auto &[m, c] : counts) {
                    text << "m=" << m << ": " << c << "\n";
                }
            }
            emit.emit(payload, text.str());
            return exit_ok;
        }

        if (series->parsed()) {
            const SeriesTruncation s = product_series(modulus(), cutoff);
            std::ostringstream text;
            for (std::size_t j = 0; j < s.coefficients.size(); ++j) {
                text << j << " " << s.coefficients[j] << "\n";
            }
            emit.emit(codec::encode(s), text.str());
            return exit_ok;
        }

        if (verify->parsed()) {
            const VerificationReport r = verify_identities(modulus(), max_n, threads);
            emit.emit(codec::encode(r), detail::report_table(r));
            return r.passed() ? exit_ok : exit_verification_failed;
        }
    } catch (const nlohmann::json::exception &e) {
        err << "singular_lab: malformed JSON: " << e.what() << "\n";
        return exit_invalid;
    } catch (const invariant_error &e) {
        err << "singular_lab: internal invariant failed: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception &e) {
        err << "singular_lab: " << e.what() << "\n";
        return exit_invalid;
    }
    err << "singular_lab: no command\n";
    return exit_invalid;
}

} // namespace singular_lab::cli
