#include "qdeform/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qdeform {

namespace {

// Quantity strings can carry diagnostic text from error rows; keep them on
// one CSV field / inside one JSON string.
std::string csv_safe(const std::string& text) {
    std::string out = text;
    for (char& c : out) {
        if (c == ',' || c == '"' || c == '\n' || c == '\r') c = ';';
    }
    return out;
}

std::string json_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 2);
    for (char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void sort_rows(std::vector<ReportRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        if (a.quantity != b.quantity) return a.quantity < b.quantity;
        if (a.s != b.s) return a.s < b.s;
        if (a.n_hat != b.n_hat) return a.n_hat < b.n_hat;
        return a.theta < b.theta;
    });
}

void write_csv(const std::vector<ReportRow>& rows, std::ostream& out) {
    out << "s,n_hat,theta,quantity,computed,expected,residual,pass\n";
    for (const ReportRow& row : rows) {
        out << format_double(row.s) << ',' << format_double(row.n_hat) << ','
            << format_double(row.theta) << ',' << csv_safe(row.quantity) << ','
            << format_double(row.computed) << ',' << format_double(row.expected) << ','
            << format_double(row.residual) << ',' << (row.pass ? "true" : "false")
            << '\n';
    }
}

void write_json(const std::vector<ReportRow>& rows, std::ostream& out) {
    if (rows.empty()) {
        out << "[]\n";
        return;
    }
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ReportRow& row = rows[i];
        out << "{\"s\":" << format_double(row.s)
            << ",\"n_hat\":" << format_double(row.n_hat)
            << ",\"theta\":" << format_double(row.theta)
            << ",\"quantity\":\"" << json_escape(row.quantity)
            << "\",\"computed\":" << format_double(row.computed)
            << ",\"expected\":" << format_double(row.expected)
            << ",\"residual\":" << format_double(row.residual)
            << ",\"pass\":" << (row.pass ? "true" : "false") << '}';
        out << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "]\n";
}

}  // namespace

double scaled_error(double computed, double expected) {
    return std::abs(computed - expected) / std::max(1.0, std::abs(expected));
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void emit_report(std::vector<ReportRow> rows, ReportFormat format, std::ostream& out) {
    sort_rows(rows);
    if (format == ReportFormat::Csv) {
        write_csv(rows, out);
    } else {
        write_json(rows, out);
    }
}

bool all_pass(const std::vector<ReportRow>& rows) {
    return std::all_of(rows.begin(), rows.end(),
                       [](const ReportRow& row) { return row.pass; });
}

}  // namespace qdeform
