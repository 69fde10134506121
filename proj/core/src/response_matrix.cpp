#include "pnr/response_matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace pnr {

ResponseMatrix::ResponseMatrix(int n_out, int m_max, std::string source)
    : n_out_(n_out), m_max_(m_max), source_(std::move(source)) {
    if (n_out < 0 || m_max < 0)
        throw std::invalid_argument("ResponseMatrix: n_out and m_max must be >= 0");
    entries_.assign(static_cast<size_t>(rows()) * cols(), 0.0);
}

double ResponseMatrix::column_sum(int m) const {
    double s = 0.0;
    for (int k = 0; k <= n_out_; ++k) s += at(k, m);
    return s;
}

ResponseMatrix collapse_to_n(const ResponseMatrix& raw, int n) {
    if (n > raw.n_out() || n < 0)
        throw std::invalid_argument("collapse_to_n: n exceeds the matrix output range");
    ResponseMatrix out(n, raw.m_max(), raw.source());
    for (int m = 0; m <= raw.m_max(); ++m) {
        for (int k = 0; k < n; ++k) out.at(k, m) = raw.at(k, m);
        double tail = 0.0;
        for (int k = n; k <= raw.n_out(); ++k) tail += raw.at(k, m);
        out.at(n, m) = tail;
    }
    bool monotone = true;
    for (int m = 1; m <= out.m_max(); ++m)
        if (out.at(n, m) < out.at(n, m - 1) - 1e-12) monotone = false;
    out.set_tail_monotone_verified(monotone);
    return out;
}

bool ResponseDiagnostics::ok(double column_tol, double entry_floor) const {
    if (max_column_sum_deviation > column_tol) return false;
    for (const auto& e : negative_entries)
        if (e.value < entry_floor) return false;
    return true;
}

ResponseDiagnostics validate_response(const ResponseMatrix& matrix) {
    ResponseDiagnostics d;
    for (int m = 0; m <= matrix.m_max(); ++m) {
        d.max_column_sum_deviation =
            std::max(d.max_column_sum_deviation, std::abs(matrix.column_sum(m) - 1.0));
        for (int k = 0; k <= matrix.n_out(); ++k)
            if (matrix.at(k, m) < 0.0)
                d.negative_entries.push_back({k, m, matrix.at(k, m)});
    }
    const int n = matrix.n_out();
    for (int m = 1; m <= matrix.m_max(); ++m)
        if (matrix.at(n, m) < matrix.at(n, m - 1) - 1e-12) d.tail_monotone = false;
    return d;
}

} // namespace pnr
