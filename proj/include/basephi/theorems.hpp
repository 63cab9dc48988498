#pragma once

#include <basephi/expansion.hpp>
#include <basephi/morphism.hpp>
#include <basephi/report.hpp>
#include <basephi/sequences.hpp>

#include <cstdint>
#include <vector>

namespace basephi {

/// Four-way classification of N >= 1 by the digits of its base-phi
/// expansion around the radix point:
///   C iff d0 = 1,  A iff d1 d0 = 10,  B iff d1 d0 d-1 = 000,
///   D iff d1 d0 d-1 = 001.
/// The four cases are exhaustive and mutually exclusive.
enum class TCode : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

char to_char(TCode code);

TCode t_code_of(const PhiExpansion& e);
TCode t_code(const Int& n);

/// TCode refined by one higher digit: subscript = d_k(N).
struct TPlusCode {
    TCode base;
    int subscript;

    bool operator==(const TPlusCode&) const = default;
};

TPlusCode t_plus_code_of(const PhiExpansion& e, int k);
TPlusCode t_plus_code(const Int& n, int k);

/// Checks T(L_2n) = B, T(L_2n + 1) = C, T(L_2n+1 + 1) = D for n in [1, n_max].
VerificationReport t_anchor_values(int n_max);

/// Compares (T(N)) for N = 2..length+1 letterwise against the fixed point of
/// gamma seeded at A.
VerificationReport verify_theorem_52(std::uint64_t length, int jobs = 1);

/// Checks the block identities T(2)..T(L_n + 1) = gamma^n(A) for n in
/// [2, n_max] and T(L_n + 2)..T(L_n+1 + 1) = gamma^(n-1)(A) for n in [3, n_max].
VerificationReport verify_theorem_53(int n_max);

/// Predicted positions N <= limit carrying each letter:
///   A: floor(n phi) + 2n - 1,  B: floor(n phi) + 2n,
///   C: {1} + floor(n phi) + 2n + 1,  D: 3 floor(n phi) + n + 1,  n >= 1.
std::vector<Int> positions_predicted(TCode letter, const Int& limit);

/// Set equality of the four predicted position families against brute-force
/// classification of every N <= limit; also re-checks the d0 and d1-d0 digit
/// characterizations directly on raw digits.
VerificationReport verify_theorem_51(std::uint64_t limit, int jobs = 1);

/// Compares (T+(N)) for N = 2..length+1 against the fixed point of
/// gamma_plus(k) seeded at A0.  Requires k >= 2.
VerificationReport verify_gamma_plus_fixed_point(int k, std::uint64_t length, int jobs = 1);

/// The |Lambda_k| generalized Beatty families (p, q, r) = (L_k, L_k-1, r)
/// whose union is predicted to be {N : d_k(N) = 1}, for k >= 2:
/// r runs from -L_{k-1} (k even) or -L_{k-1} + 1 (k odd) upward,
/// |Lambda_k| = L_{k-1} + 1 (k even) or L_{k-1} - 1 (k odd) values in all.
std::vector<GbsParams> theorem_61_families(int k);

/// Set equality between the union of theorem_61_families(k) over n >= 1 and
/// the brute-force set {N <= limit : d_k(N) = 1}; also checks family
/// disjointness, the run ("train") length |Lambda_k|, and the first train's
/// interval bounds.
VerificationReport verify_theorem_61(int k, std::uint64_t limit, int jobs = 1);

/// Set equality of {N <= limit : d_-2(N) = 1} against the three families
/// 4 floor(n phi) + 3n + r, r in {2,3,4}, n >= 0.
VerificationReport verify_remark_62(std::uint64_t limit, int jobs = 1);

/// Frequency of d_0 = 1 over 1..limit, as an exact rational, with its signed
/// deviation from (5 - sqrt(5))/10.  The comparison constant is derived from
/// an exact integer square root at 12 decimal digits; the tolerance check
/// |deviation| < 1e-3 is an exact integer comparison.
struct FrequencyResult {
    Int ones_count;
    Int limit;
    std::string frequency_decimal;  // 12 places, truncated
    std::string deviation_decimal;  // signed, 12 places, truncated
    bool within_tolerance = false;
    std::chrono::milliseconds elapsed{0};

    VerificationReport to_report() const;
};

FrequencyResult digit_frequency(std::uint64_t limit, int jobs = 1);

/// Positions N <= limit with d_k(N) = 1 read directly off expansions.
std::vector<Int> positions_brute(int k, std::uint64_t limit, int jobs = 1);

/// Truncating decimal rendering of num/den to `places` fractional digits;
/// den > 0, sign carried by num.
std::string decimal_string(const Int& num, const Int& den, int places);

}  // namespace basephi
