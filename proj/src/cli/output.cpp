#include "output.hpp"

#include <cmath>
#include <cstdio>

namespace lhxcli {

std::string format_number(double v, int precision) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (unsigned char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out + '"';
}

std::string render(const Cell& c, Format fmt, int precision) {
    struct V {
        Format fmt;
        int precision;
        std::string operator()(Null) const { return fmt == Format::json ? "null" : ""; }
        std::string operator()(double v) const {
            if (fmt == Format::json && !std::isfinite(v)) return "null";
            return format_number(v, precision);
        }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
        std::string operator()(const std::string& s) const {
            return fmt == Format::json ? json_string(s) : csv_field(s);
        }
    };
    return std::visit(V{fmt, precision}, c);
}

void write_csv(std::ostream& os, const Document& doc, int precision) {
    for (const auto& [k, v] : doc.meta) os << "# " << k << '=' << render(v, Format::csv, precision) << '\n';
    bool first = true;
    for (const auto& t : doc.tables) {
        if (!first) os << '\n';
        first = false;
        for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
        os << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << render(row[i], Format::csv, precision);
            os << '\n';
        }
    }
}

void write_json(std::ostream& os, const Document& doc, int precision) {
    os << "{";
    bool first = true;
    auto sep = [&] {
        os << (first ? "\n" : ",\n");
        first = false;
    };
    for (const auto& [k, v] : doc.meta) {
        sep();
        os << "  " << json_string(k) << ": " << render(v, Format::json, precision);
    }
    for (const auto& t : doc.tables) {
        sep();
        os << "  " << json_string(t.name) << ": [";
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            os << (r ? ",\n    {" : "\n    {");
            for (std::size_t i = 0; i < t.columns.size(); ++i)
                os << (i ? ", " : "") << json_string(t.columns[i]) << ": " << render(t.rows[r][i], Format::json, precision);
            os << "}";
        }
        os << (t.rows.empty() ? "]" : "\n  ]");
    }
    os << "\n}\n";
}

}  // namespace

void write(std::ostream& os, const Document& doc, Format fmt, int precision) {
    if (fmt == Format::csv)
        write_csv(os, doc, precision);
    else
        write_json(os, doc, precision);
}

}  // namespace lhxcli
