#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace cospec {

enum class ExtrapMethod { Root, Ratio };

inline const char* method_name(ExtrapMethod m) {
    return m == ExtrapMethod::Root ? "root" : "ratio";
}

// A limit estimate for a sampling-exponent sequence a_n ~ C rho^{2n}.
struct ExponentEstimate {
    double value = 0.0;
    ExtrapMethod method = ExtrapMethod::Ratio;
    int n_min = 0;
    int n_max = 0;
    double ci_halfwidth = 0.0;        // 0 for exact DP inputs
    bool monotone_certificate = false;  // root-method sequence nondecreasing
};

// A sequence a_n (n = 0..n_max, a_n = p_{2n} style) with per-n standard
// errors and the two extrapolations. The ratio method is the primary point
// estimate; the root method supplies the monotone certificate.
struct SequenceEstimate {
    std::vector<double> values;
    std::vector<double> std_err;  // empty or per-n (0 for exact)
    bool exact = true;
    bool zero_probability = false;  // all computed a_n vanished
    ExponentEstimate root;
    ExponentEstimate ratio;

    int n_max() const { return static_cast<int>(values.size()) - 1; }
    double root_at(int n) const {
        return n > 0 && values[n] > 0.0 ? std::pow(values[n], 0.5 / n) : 0.0;
    }
    double ratio_at(int n) const {
        return n > 0 && values[n - 1] > 0.0 && values[n] > 0.0
                   ? std::sqrt(values[n] / values[n - 1])
                   : 0.0;
    }
};

// Certificate slack: exact sequences must be monotone to 1e-12; Monte Carlo
// sequences within `sigmas` standard errors.
bool root_sequence_monotone(const SequenceEstimate& s, double slack = 1e-12, double sigmas = 4.0);

// Fill in root/ratio estimates (and the certificate) for a computed sequence.
void finalize_sequence(SequenceEstimate& s, double sigmas = 4.0);

}  // namespace cospec
