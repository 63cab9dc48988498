#pragma once

#include <basephi/bigint.hpp>

#include <compare>
#include <string>

namespace basephi {

/// Element a + b*phi of the ring Z[phi], phi = (1+sqrt(5))/2.
///
/// Since 1 and phi are independent over the rationals, the (a, b) pair is a
/// unique representation: two PhiInt are equal as reals iff they are equal
/// component-wise.  The ring is closed under multiplication via phi^2 = phi+1.
struct PhiInt {
    Int a;  // rational part
    Int b;  // coefficient of phi

    PhiInt() : a(0), b(0) {}
    PhiInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

    bool operator==(const PhiInt&) const = default;
};

PhiInt operator+(const PhiInt& x, const PhiInt& y);
PhiInt operator-(const PhiInt& x, const PhiInt& y);
PhiInt operator-(const PhiInt& x);
PhiInt operator*(const PhiInt& x, const PhiInt& y);

PhiInt& operator+=(PhiInt& x, const PhiInt& y);
PhiInt& operator-=(PhiInt& x, const PhiInt& y);

/// Exact sign of the real number a + b*phi, as -1, 0 or +1.
///
/// Pure-integer rule: with s = 2a + b the value is positive iff
///   (b >= 0 and s > 0), or
///   (b > 0 and s <= 0 and 5b^2 > s^2), or
///   (b < 0 and s > 0 and s^2 > 5b^2);
/// zero iff a = b = 0; negative otherwise.  s^2 = 5b^2 with b != 0 cannot
/// happen because sqrt(5) is irrational.  No floating point is involved.
int sign(const PhiInt& x);

/// Ordering of the real values; equals sign(x - y).
std::strong_ordering compare(const PhiInt& x, const PhiInt& y);

inline std::strong_ordering operator<=>(const PhiInt& x, const PhiInt& y) {
    return compare(x, y);
}

/// phi^i for any integer i, as F(i-1) + F(i)*phi with the Fibonacci sequence
/// extended to negative indices by F(-n) = (-1)^(n+1) F(n).
PhiInt phi_power(long i);

std::string to_string(const PhiInt& x);

}  // namespace basephi
