#pragma once

#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace hhq::cli {

// Flat report rows shared by the JSON and CSV writers. Numbers are
// rendered with 17 significant digits so parsed values round-trip the
// underlying doubles exactly.

struct Value {
    enum class Kind { Null, Num, Int, Bool, Text };

    Kind kind = Kind::Null;
    double num = 0.0;
    long long integer = 0;
    bool flag = false;
    std::string text;

    static Value null() { return {}; }
    static Value of(double d) {
        Value v;
        v.kind = Kind::Num;
        v.num = d;
        return v;
    }
    static Value of_int(long long i) {
        Value v;
        v.kind = Kind::Int;
        v.integer = i;
        return v;
    }
    static Value of_bool(bool b) {
        Value v;
        v.kind = Kind::Bool;
        v.flag = b;
        return v;
    }
    static Value of(std::string s) {
        Value v;
        v.kind = Kind::Text;
        v.text = std::move(s);
        return v;
    }
};

using Record = std::vector<std::pair<std::string, Value>>;

inline std::string format_double(double d) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

inline void write_json_value(std::ostream& os, const Value& v) {
    switch (v.kind) {
        case Value::Kind::Null: os << "null"; break;
        case Value::Kind::Num: os << format_double(v.num); break;
        case Value::Kind::Int: os << v.integer; break;
        case Value::Kind::Bool: os << (v.flag ? "true" : "false"); break;
        case Value::Kind::Text:
            os << '"' << json_escape(v.text) << '"';
            break;
    }
}

/// Top-level JSON document: meta fields first, then a "records" array.
inline void write_json(std::ostream& os, const Record& meta,
                       const std::vector<Record>& records) {
    os << "{\n";
    for (const auto& [key, value] : meta) {
        os << "  \"" << json_escape(key) << "\": ";
        write_json_value(os, value);
        os << ",\n";
    }
    os << "  \"records\": [";
    for (std::size_t i = 0; i < records.size(); ++i) {
        os << (i == 0 ? "\n" : ",\n") << "    {";
        const Record& rec = records[i];
        for (std::size_t f = 0; f < rec.size(); ++f) {
            if (f) os << ", ";
            os << '"' << json_escape(rec[f].first) << "\": ";
            write_json_value(os, rec[f].second);
        }
        os << "}";
    }
    os << "\n  ]\n}\n";
}

/// CSV with a mandatory header row derived from the first record. Nulls
/// become empty cells; the record fields never contain commas.
inline void write_csv(std::ostream& os, const std::vector<Record>& records) {
    if (records.empty()) return;
    const Record& head = records.front();
    for (std::size_t f = 0; f < head.size(); ++f)
        os << (f ? "," : "") << head[f].first;
    os << "\n";
    for (const Record& rec : records) {
        for (std::size_t f = 0; f < rec.size(); ++f) {
            if (f) os << ',';
            const Value& v = rec[f].second;
            switch (v.kind) {
                case Value::Kind::Null: break;
                case Value::Kind::Num: os << format_double(v.num); break;
                case Value::Kind::Int: os << v.integer; break;
                case Value::Kind::Bool:
                    os << (v.flag ? "true" : "false");
                    break;
                case Value::Kind::Text: os << v.text; break;
            }
        }
        os << "\n";
    }
}

} // namespace hhq::cli
