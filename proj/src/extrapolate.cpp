#include "cospec/extrapolate.hpp"

#include <algorithm>

namespace cospec {

bool root_sequence_monotone(const SequenceEstimate& s, double slack, double sigmas) {
    double prev = -1.0;
    for (int n = 1; n <= s.n_max(); ++n) {
        if (s.values[n] <= 0.0) return false;
        double r = s.root_at(n);
        double tol = slack;
        if (!s.std_err.empty() && s.std_err[n] > 0.0 && s.values[n] > 0.0) {
            // first-order error of a_n^{1/2n}
            tol += sigmas * (r / (2.0 * n)) * (s.std_err[n] / s.values[n]);
            if (n > 1 && s.std_err[n - 1] > 0.0 && s.values[n - 1] > 0.0)
                tol += sigmas * (prev / (2.0 * (n - 1))) * (s.std_err[n - 1] / s.values[n - 1]);
        }
        if (prev >= 0.0 && r < prev - tol) return false;
        prev = r;
    }
    return true;
}

void finalize_sequence(SequenceEstimate& s, double sigmas) {
    const int n = s.n_max();
    s.zero_probability = true;
    for (int i = 1; i <= n; ++i)
        if (s.values[i] > 0.0) s.zero_probability = false;

    s.root.method = ExtrapMethod::Root;
    s.ratio.method = ExtrapMethod::Ratio;
    s.root.n_min = s.ratio.n_min = 1;
    s.root.n_max = s.ratio.n_max = n;
    s.root.value = n >= 1 ? s.root_at(n) : 0.0;
    s.ratio.value = n >= 1 ? s.ratio_at(n) : 0.0;
    s.root.monotone_certificate = s.ratio.monotone_certificate =
        root_sequence_monotone(s, 1e-12, sigmas);

    if (!s.std_err.empty() && n >= 1) {
        // delta-method half-widths (conservative: no covariance credit)
        if (s.values[n] > 0.0) {
            double rel = s.std_err[n] / s.values[n];
            s.root.ci_halfwidth = s.root.value / (2.0 * n) * rel * sigmas;
            double rel2 = n >= 1 && s.values[n - 1] > 0.0 && s.std_err[n - 1] > 0.0
                              ? s.std_err[n - 1] / s.values[n - 1]
                              : 0.0;
            s.ratio.ci_halfwidth = 0.5 * s.ratio.value * (rel + rel2) * sigmas;
        }
    }
}

}  // namespace cospec
