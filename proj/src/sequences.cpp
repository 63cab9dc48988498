#include <basephi/sequences.hpp>

#include <stdexcept>
#include <utility>

namespace basephi {

Int isqrt(const Int& x) {
    if (x < 0) throw std::domain_error("isqrt: negative argument");
    if (x == 0) return 0;
    // Start strictly above sqrt(x), then Newton steps decrease to the floor.
    Int r = Int(1) << (boost::multiprecision::msb(x) / 2 + 1);
    for (;;) {
        Int next = (r + x / r) >> 1;
        if (next >= r) break;
        r = next;
    }
    if (!(r * r <= x && x < (r + 1) * (r + 1)))
        throw std::logic_error("isqrt: floor postcondition failed");
    return r;
}

Int lucas(long n) {
    if (n < 0) throw std::domain_error("lucas: negative index");
    Int a = 2, b = 1;  // L0, L1
    if (n == 0) return a;
    for (long i = 1; i < n; ++i) {
        Int next = a + b;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

namespace {

// {F(n), F(n+1)} by fast doubling, n >= 0.
std::pair<Int, Int> fib_pair(unsigned long n) {
    if (n == 0) return {0, 1};
    auto [a, b] = fib_pair(n >> 1);
    Int c = a * (2 * b - a);
    Int d = a * a + b * b;
    if (n & 1) return {d, c + d};
    return {c, d};
}

}  // namespace

Int fibonacci(long i) {
    const unsigned long m = i < 0 ? static_cast<unsigned long>(-(i + 1)) + 1
                                  : static_cast<unsigned long>(i);
    Int f = fib_pair(m).first;
    if (i < 0 && m % 2 == 0) f = -f;
    return f;
}

Int floor_n_phi(const Int& n) {
    if (n < 0) throw std::domain_error("floor_n_phi: negative argument");
    return (n + isqrt(5 * n * n)) >> 1;
}

Int gbs_term(const GbsParams& params, const Int& n) {
    return params.p * floor_n_phi(n) + params.q * n + params.r;
}

std::vector<Int> gbs_differences(const GbsParams& params, std::size_t count) {
    std::vector<Int> diffs;
    diffs.reserve(count);
    Int prev = gbs_term(params, 1);
    for (std::size_t n = 1; n <= count; ++n) {
        Int cur = gbs_term(params, Int(n + 1));
        diffs.push_back(cur - prev);
        prev = std::move(cur);
    }
    return diffs;
}

FibWord fibonacci_word(const Int& a, const Int& b, std::size_t length) {
    FibWord word{a, b, {}};
    word.letters.reserve(length);
    if (length == 0) return word;

    // Stream the fixed point of 0 -> 01, 1 -> 0: the buffer is a prefix of
    // the fixed point, and appending the image of the letter at the read
    // cursor extends it.
    std::vector<std::uint8_t> bits;
    bits.reserve(length + 2);
    bits.push_back(0);
    bits.push_back(1);
    for (std::size_t i = 1; bits.size() < length; ++i) {
        bits.push_back(0);
        if (bits[i] == 0) bits.push_back(1);
    }
    for (std::size_t i = 0; i < length; ++i) word.letters.push_back(bits[i] == 0 ? a : b);
    return word;
}

GbsParams gbs_from_differences(const std::vector<Int>& diffs, const Int& first_term) {
    if (diffs.empty()) throw FibWordPrefixError("empty difference word", 1);
    if (diffs.size() < 2)
        throw FibWordPrefixError(
            "difference word too short to identify a two-letter alphabet", 2);
    // In x_{a,b} the first two letters are a then b, so the alphabet can be
    // read off directly; equal first letters mean the alphabet is degenerate.
    const Int& a = diffs[0];
    const Int& b = diffs[1];
    if (a == b)
        throw FibWordPrefixError("degenerate alphabet: first two letters are equal", 2);
    FibWord expected = fibonacci_word(a, b, diffs.size());
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i] != expected.letters[i])
            throw FibWordPrefixError("difference word leaves the Fibonacci word at position " +
                                         std::to_string(i + 1),
                                     i + 1);
    }
    GbsParams params;
    params.p = a - b;
    params.q = 2 * b - a;
    params.r = first_term - params.p - params.q;
    return params;
}

}  // namespace basephi
