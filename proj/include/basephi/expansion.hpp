#pragma once

#include <basephi/phi_int.hpp>
#include <basephi/sequences.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace basephi {

/// A finite 0/1 digit string d_L ... d_0 . d_-1 ... d_R around a radix point,
/// with L >= 0 >= R.  The number it denotes is sum(d_i * phi^i).  The empty
/// expansion (displayed "0") is the canonical form of zero.
///
/// Equality is exact: same bounds, same digits.  Canonical producers (expand,
/// the closed forms) always emit d_L = d_R = 1; parse keeps the literal
/// bounds of its input so that non-canonical strings can be inspected.
class PhiExpansion {
  public:
    PhiExpansion() = default;

    static PhiExpansion zero() { return PhiExpansion(); }

    /// Expansion with ones exactly at the given digit indices.
    static PhiExpansion from_ones(std::vector<int> one_indices);

    /// Parses "101.01"-style strings (the special "0" gives the zero
    /// expansion).  Throws std::invalid_argument on anything that does not
    /// match [01]+(.[01]+)?.
    static PhiExpansion parse(std::string_view text);

    bool is_zero() const { return bits_.empty(); }
    int l_index() const { return l_; }
    int r_index() const { return r_; }

    /// d_i, with 0 for any index outside [R, L].
    int digit(int i) const {
        if (is_zero() || i > l_ || i < r_) return 0;
        return bits_[static_cast<std::size_t>(l_ - i)];
    }

    /// Indices i with d_i = 1, in decreasing order.
    std::vector<int> one_indices() const;

    std::string to_string() const;

    bool operator==(const PhiExpansion&) const = default;

  private:
    int l_ = 0;
    int r_ = 0;
    std::vector<std::uint8_t> bits_;  // bits_[0] = d_L .. bits_[L-R] = d_R; empty = zero
};

/// Base-phi digits of N >= 0 by greedy most-significant-first extraction:
/// take the largest i with phi^i <= remainder, subtract, repeat.  The result
/// round-trips through value() and never contains adjacent ones.
PhiExpansion expand(const Int& n);

/// Same digits as expand(), built instead by recursion on Lucas intervals:
/// a small-N table, digit embedding on even intervals, and the three
/// prefix/suffix surgeries on odd intervals.  Serves as an independent
/// cross-check of expand().
PhiExpansion expand_recursive(const Int& n);

/// Exact value sum(d_i * phi^i) as an element of Z[phi].
PhiInt value(const PhiExpansion& e);

/// d_k(N) from expand(N); 0 when k lies outside the expansion's bounds.
int digit(const Int& n, int k);

struct Validity {
    bool ok = true;
    std::string detail;  // empty when ok
};

/// Valid means: no two adjacent ones, and d_L = d_R = 1 (or the expansion is
/// zero).  On failure, detail names the first offending index pair or bound.
Validity validate(const PhiExpansion& e);
bool is_valid(const PhiExpansion& e);

/// Closed-form digits of lucas(m) for m >= 2, chosen by parity of m and
/// never running the greedy algorithm: ones at {m, -m} for even m, and at
/// {m-1, m-3, ..., 0} and {-2, -4, ..., -(m-1)} for odd m.
PhiExpansion lucas_expansion_closed_form(int m);

/// Closed-form digits of lucas(2n+1) + 1 for n >= 1: ones at {2n+1},
/// {-1, -3, ..., -(2n-1)} and {-(2n+2)}.
PhiExpansion lucas_plus_one_expansion(int n);

/// The Lucas interval containing N: for index m even it is
/// [lucas(m), lucas(m+1)], odd [lucas(m)+1, lucas(m+1)-1]; the intervals for
/// m >= 1 partition [2, infinity).  Odd intervals with m >= 3 carry the
/// I/J/K sub-interval of N.
struct LucasInterval {
    int index = 0;  // m of Lambda_m
    Int lo;
    Int hi;
    bool even_kind = false;

    enum class Sub { I, J, K };
    std::optional<Sub> sub;
    Int sub_lo;
    Int sub_hi;
};

LucasInterval interval_of(const Int& n);

/// (L, R) bounds of expand(N), N >= 1; d_L = d_R = 1.
std::pair<int, int> lr_indices(const Int& n);

}  // namespace basephi
