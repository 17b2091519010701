#pragma once

// Output formatting for experiment results: CSV rows and small JSON
// documents. Field order and the 9-significant-digit float convention are
// part of the output contract, so everything funnels through the helpers
// here; identical inputs must yield byte-identical files.

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "percolation.hpp"
#include "pfs.hpp"

namespace permuperc {

// Every floating-point value in CSV or JSON output is rendered with %.9g.
// glibc converts correctly rounded under the default IEEE mode, so exact
// decimal ties go to an even final digit.
inline std::string format_g9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

namespace detail {

inline void json_escape_into(std::string& out, std::string_view s) {
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char ubuf[8];
                    std::snprintf(ubuf, sizeof ubuf, "\\u%04x",
                                  static_cast<unsigned>(static_cast<unsigned char>(ch)));
                    out += ubuf;
                } else {
                    out += ch;
                }
        }
    }
}

}  // namespace detail

// Insertion-ordered JSON object builder. Vendor serializers emit doubles at
// round-trip precision and reorder keys, both of which would break the
// output contract, hence this small fluent writer.
class JsonObject {
public:
    JsonObject& num(std::string_view key, double v) { return raw(key, format_g9(v)); }
    JsonObject& num(std::string_view key, std::uint64_t v) { return raw(key, std::to_string(v)); }
    JsonObject& num(std::string_view key, std::int64_t v) { return raw(key, std::to_string(v)); }
    JsonObject& num(std::string_view key, int v) { return raw(key, std::to_string(v)); }

    JsonObject& boolean(std::string_view key, bool v) { return raw(key, v ? "true" : "false"); }

    JsonObject& str(std::string_view key, std::string_view v) {
        comma();
        emit_key(key);
        out_ += '"';
        detail::json_escape_into(out_, v);
        out_ += '"';
        return *this;
    }

    // Pre-serialized JSON value (nested arrays or objects).
    JsonObject& raw(std::string_view key, std::string_view v) {
        comma();
        emit_key(key);
        out_ += v;
        return *this;
    }

    std::string close() {
        out_ += '}';
        return std::move(out_);
    }

private:
    void comma() {
        if (!first_) out_ += ',';
        first_ = false;
    }
    void emit_key(std::string_view key) {
        out_ += '"';
        detail::json_escape_into(out_, key);
        out_ += "\":";
    }

    std::string out_ = "{";
    bool first_ = true;
};

template <typename T>
inline std::string json_int_array(const std::vector<T>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    out += ']';
    return out;
}

inline std::string json_double_array(const std::vector<double>& xs) {
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += format_g9(xs[i]);
    }
    out += ']';
    return out;
}

// ---------------------------------------------------------------------------
// Component reports

inline constexpr std::string_view component_csv_header =
    "n,p,seed,largest,second_largest,num_components,isolated,connected,giant_fraction";

inline std::string component_csv_row(int n, double p, std::uint64_t seed,
                                     const ComponentReport& rep) {
    std::string row = std::to_string(n);
    row += ',';
    row += format_g9(p);
    row += ',';
    row += std::to_string(seed);
    row += ',';
    row += std::to_string(rep.largest);
    row += ',';
    row += std::to_string(rep.second_largest);
    row += ',';
    row += std::to_string(rep.num_components);
    row += ',';
    row += std::to_string(rep.isolated_count);
    row += ',';
    row += rep.connected ? "1" : "0";
    row += ',';
    row += format_g9(rep.giant_fraction);
    return row;
}

inline std::string component_json(const ComponentReport& rep) {
    return JsonObject{}
        .raw("component_sizes", json_int_array(rep.component_sizes))
        .num("num_components", rep.num_components)
        .num("isolated_count", rep.isolated_count)
        .num("largest", rep.largest)
        .num("second_largest", rep.second_largest)
        .num("giant_fraction", rep.giant_fraction)
        .boolean("connected", rep.connected)
        .num("count_in_components_geq_r", rep.count_in_components_geq_r)
        .close();
}

// ---------------------------------------------------------------------------
// Search summaries

inline std::string pfs_summary_json(const PfsState& st) {
    return JsonObject{}
        .num("rounds", st.rounds)
        .num("discovered", st.size())
        .raw("w_per_round", json_int_array(st.w_after_round))
        .raw("frontier_sizes", json_int_array(st.frontier_sizes))
        .num("max_weight", st.max_weight)
        .raw("min_face_dim_per_round", json_int_array(st.min_face_dim_per_round))
        .num("queried_edges", st.queried_edges)
        .boolean("stopped_at_r", st.stopped_at_r)
        .close();
}

// ---------------------------------------------------------------------------
// Monte Carlo / oracle rows: one operation per row, parameters packed into a
// single semicolon-joined column so the column count stays fixed.

inline constexpr std::string_view oracle_csv_header = "operation,params,estimate,stderr,trials";

inline std::string oracle_csv_row(std::string_view operation, std::string_view params,
                                  double estimate, double std_error, long long trials) {
    std::string row(operation);
    row += ',';
    row += params;
    row += ',';
    row += format_g9(estimate);
    row += ',';
    row += format_g9(std_error);
    row += ',';
    row += std::to_string(trials);
    return row;
}

// ---------------------------------------------------------------------------
// Isoperimetry rows

inline constexpr std::string_view iso_csv_header = "n,k,i_k,harper_bound";
inline constexpr std::string_view iso_csv_header_witness = "n,k,i_k,harper_bound,witness_set";

// Ranks as lowercase hex joined by '-', keeping the cell comma-free.
inline std::string hex_rank_list(const std::vector<std::uint64_t>& ranks) {
    std::string out;
    char buf[24];
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (i) out += '-';
        std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(ranks[i]));
        out += buf;
    }
    return out;
}

inline std::string iso_csv_row(int n, std::uint64_t k, double i_k, double harper,
                               const std::vector<std::uint64_t>* witness = nullptr) {
    std::string row = std::to_string(n);
    row += ',';
    row += std::to_string(k);
    row += ',';
    row += format_g9(i_k);
    row += ',';
    row += format_g9(harper);
    if (witness != nullptr) {
        row += ',';
        row += hex_rank_list(*witness);
    }
    return row;
}

}  // namespace permuperc
