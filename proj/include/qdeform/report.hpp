#ifndef QDEFORM_REPORT_HPP
#define QDEFORM_REPORT_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qdeform {

// One check outcome. Every field is serialized; n_hat and theta are 0 for
// quantities they do not apply to, so the schema stays uniform. pass is
// always residual <= tolerance for the run that produced the row.
struct ReportRow {
    double s = 0.0;
    double n_hat = 0.0;
    double theta = 0.0;
    std::string quantity;
    double computed = 0.0;
    double expected = 0.0;
    double residual = 0.0;
    bool pass = false;
};

enum class ReportFormat { Json, Csv };

// |computed - expected| relative to the expected magnitude, with an absolute
// floor of 1: identical to the absolute error for |expected| <= 1 (in
// particular for pure residuals, where expected is 0), relative beyond that
// so large q-numbers do not demand impossible absolute precision.
double scaled_error(double computed, double expected);

// Fixed 17-significant-digit decimal form ("%.17g"), enough to reproduce the
// binary double exactly on read-back.
std::string format_double(double value);

// Sorts rows by (quantity, s, n_hat, theta) and writes them. CSV starts with
// the fixed header s,n_hat,theta,quantity,computed,expected,residual,pass;
// JSON is an array of objects with exactly those keys, one object per line.
// Output is byte-identical for identical rows.
void emit_report(std::vector<ReportRow> rows, ReportFormat format, std::ostream& out);

bool all_pass(const std::vector<ReportRow>& rows);

}  // namespace qdeform

#endif
