#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cohomo/real_function.hpp"

namespace cohomo::carleman {

/// Strictly positive weights M_0..M_N, stored as logarithms so that fast
/// growing generators such as (n!)^2 stay representable for large N.
class CarlemanSequence {
public:
    /// Explicit terms; needs at least 3 finite positive entries.
    static CarlemanSequence from_terms(const std::vector<double>& terms);
    /// M_n = (n!)^alpha for n = 0..last, alpha >= 1.
    static CarlemanSequence factorial_power(double alpha, int last);
    /// Named generator "factorial^alpha" (alpha numeric), truncated at `last`.
    static CarlemanSequence generator(std::string_view spec, int last);

    int last_index() const noexcept { return static_cast<int>(log_terms_.size()) - 1; }
    double log_term(int n) const;
    /// exp(log_term(n)); may be +inf for very large terms.
    double term(int n) const;
    const std::string& name() const noexcept { return name_; }

private:
    CarlemanSequence(std::string name, std::vector<double> log_terms);
    std::string name_;
    std::vector<double> log_terms_;
};

struct ConditionResult {
    bool pass = false;
    double witness = 0.0;
    /// The infinite-range condition is replaced by a statement about the available range.
    bool surrogate = false;
};

/// Finite-truncation evidence for the sequence conditions, with a_n = (M_n / n!)^(1/n).
///
/// seq1  almost increasing a_n: witness is the minimal C with a_p <= C a_q (p <= q <= N);
///       passes when C over the full range stays within 10% of C over the first half.
/// seq2  M_0 = 1 <= M_1: witness M_1.
/// seq3  (M_{n+1}/(n+1)!)^2 <= (M_n/n!)(M_{n+2}/(n+2)!): witness is the worst ratio lhs/rhs.
/// seq4  sup (M_{n+1}/((n+1) M_n))^(1/n): witness is the max over the range; passes when it
///       stays within 10% of the max over the first half.
/// seq5  liminf a_n > 0: witness is min a_n over the tail half; passes when that is at least
///       90% of the minimum over [N/4, N/2].
struct SequenceReport {
    int truncation = 0;
    ConditionResult seq1;
    double seq1_half_constant = 0.0;
    ConditionResult seq2;
    double m0 = 0.0;
    double m1 = 0.0;
    ConditionResult seq3;
    int seq3_worst_index = 0;
    ConditionResult seq4;
    double seq4_half_max = 0.0;
    ConditionResult seq5;
    double seq5_reference_min = 0.0;

    bool passed() const noexcept
    {
        return seq1.pass && seq2.pass && seq3.pass && seq4.pass && seq5.pass;
    }
};

inline constexpr double kLogConvexitySlack = 1e-12;

/// Needs N >= 4. Throws InvalidArgument otherwise.
SequenceReport check_sequence(const CarlemanSequence& m);

/// Values a_n for n = 1..N (index 0 unused, set to NaN).
std::vector<double> normalized_roots(const CarlemanSequence& m);

enum class Trend { converging, diverging, inconclusive };
const char* trend_name(Trend t) noexcept;

/// Partial sums S_K = sum_{n=1}^{K} M_n / M_{n+1}, K = 1..terms.
///
/// The verdict compares the growth of the last two doubling blocks,
/// (S_T - S_{T/2}) / (S_{T/2} - S_{T/4}): below 0.8 reads as converging,
/// above 0.97 as diverging. This is the Denjoy–Carleman series read off a
/// finite prefix and never a proof.
struct Diagnostic {
    std::vector<double> partial_sums;
    double block_ratio = 0.0;
    Trend verdict = Trend::inconclusive;
};

/// Needs terms >= 10 and terms + 1 <= N.
Diagnostic nonquasianalytic_diagnostic(const CarlemanSequence& m, int terms);

inline constexpr int kMaxProbeOrder = 12;

/// Fit of ||f^(n)||_{inf,K} <= C_K rho_K^n M_n for n = 0..max_order.
struct MembershipProbe {
    double lo = 0.0;
    double hi = 0.0;
    int max_order = 0;
    std::vector<double> norms;
    double constant = 0.0; ///< C_K
    double rho = 0.0;      ///< rho_K
    double max_violation = 0.0;
    double tolerance = 1e-9;
    bool degenerate = false;
    bool pass = false;
};

/// rho_K = max_{n>=1} (||f^(n)|| M_0 / (||f|| M_n))^(1/n), C_K = max_n ||f^(n)|| / (rho_K^n M_n).
/// Throws UnsupportedCapability for point-only functions.
MembershipProbe probe_membership(const RealFunction& f, double lo, double hi, const CarlemanSequence& m,
                                 int max_order);

} // namespace cohomo::carleman
