#pragma once

#include <basephi/bigint.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace basephi {

/// Exact floor square root of x >= 0.  Newton iteration on unbounded
/// integers; the floor property isqrt(x)^2 <= x < (isqrt(x)+1)^2 is checked
/// before returning.
Int isqrt(const Int& x);

/// Lucas numbers: L0 = 2, L1 = 1, L(n) = L(n-1) + L(n-2).  Rejects n < 0.
Int lucas(long n);

/// Fibonacci numbers for any integer index: F(0) = 0, F(1) = 1, extended to
/// negative indices by F(-n) = (-1)^(n+1) F(n).
Int fibonacci(long i);

/// floor(n*phi) for n >= 0, computed exactly as floor((n + isqrt(5 n^2)) / 2).
Int floor_n_phi(const Int& n);

/// Parameters of a generalized Beatty sequence V(n) = p*floor(n*phi) + q*n + r.
struct GbsParams {
    Int p;
    Int q;
    Int r;

    bool operator==(const GbsParams&) const = default;
};

Int gbs_term(const GbsParams& params, const Int& n);

/// First differences V(n+1) - V(n) for n = 1..count.
std::vector<Int> gbs_differences(const GbsParams& params, std::size_t count);

/// Prefix of the Fibonacci word x_{a,b}: the image of the fixed point of
/// 0 -> 01, 1 -> 0 under 0 -> a, 1 -> b.  The first letter is a.
struct FibWord {
    Int a;
    Int b;
    std::vector<Int> letters;
};

FibWord fibonacci_word(const Int& a, const Int& b, std::size_t length);

/// Raised when a difference word is not a Fibonacci-word prefix over a
/// two-letter alphabet; `position` is the 1-based index of the first
/// violation.
class FibWordPrefixError : public std::invalid_argument {
  public:
    FibWordPrefixError(const std::string& message, std::size_t position)
        : std::invalid_argument(message), position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// Recovers (p, q, r) from a difference word and the first sequence term:
/// with alphabet {a, b} read off the word, p = a - b, q = 2b - a,
/// r = first_term - p - q.  The word must be a prefix of x_{a,b} of length
/// at least 2; gbs_differences of the result reproduces it.
GbsParams gbs_from_differences(const std::vector<Int>& diffs, const Int& first_term);

}  // namespace basephi
