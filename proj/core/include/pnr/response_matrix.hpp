#pragma once

#include <string>
#include <vector>

namespace pnr {

/// Conditional probabilities P[k][m] that a detector reports output class k
/// given m input photons. Rows run over k = 0..n_out where the last row is the
/// absorbing ">= n_out" class; columns over m = 0..m_max. Columns are
/// probability distributions (they sum to 1).
class ResponseMatrix {
  public:
    ResponseMatrix() = default;
    ResponseMatrix(int n_out, int m_max, std::string source);

    int n_out() const { return n_out_; }
    int m_max() const { return m_max_; }
    int rows() const { return n_out_ + 1; }
    int cols() const { return m_max_ + 1; }

    double at(int k, int m) const { return entries_[static_cast<size_t>(k) * cols() + m]; }
    double& at(int k, int m) { return entries_[static_cast<size_t>(k) * cols() + m]; }

    double column_sum(int m) const;

    /// Descriptor of the producing configuration, e.g. "spatial(M=8,eta=1,dark=0)".
    const std::string& source() const { return source_; }
    void set_source(std::string s) { source_ = std::move(s); }

    /// Whether the producer verified that the absorbing row is non-decreasing
    /// in m over the tabulated range.
    bool tail_monotone_verified() const { return tail_monotone_verified_; }
    void set_tail_monotone_verified(bool v) { tail_monotone_verified_ = v; }

  private:
    int n_out_ = 0;
    int m_max_ = 0;
    std::vector<double> entries_;
    std::string source_;
    bool tail_monotone_verified_ = false;
};

/// Merges rows n..raw.n_out into a single absorbing row n; rows 0..n-1 are
/// copied unchanged, so column sums are preserved. Collapsing twice at the
/// same n is the identity.
ResponseMatrix collapse_to_n(const ResponseMatrix& raw, int n);

/// Report-only diagnostics for a response matrix.
struct ResponseDiagnostics {
    double max_column_sum_deviation = 0.0;
    struct NegativeEntry {
        int k;
        int m;
        double value;
    };
    std::vector<NegativeEntry> negative_entries;
    bool tail_monotone = true;
    bool ok(double column_tol = 1e-9, double entry_floor = -1e-12) const;
};

/// Checks column stochasticity, entry signs and the monotone-tail probe of the
/// absorbing row. Never mutates the matrix.
ResponseDiagnostics validate_response(const ResponseMatrix& matrix);

} // namespace pnr
