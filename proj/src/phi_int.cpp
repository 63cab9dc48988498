#include <basephi/phi_int.hpp>

#include <basephi/sequences.hpp>

#include <sstream>

namespace basephi {

PhiInt operator+(const PhiInt& x, const PhiInt& y) { return {x.a + y.a, x.b + y.b}; }

PhiInt operator-(const PhiInt& x, const PhiInt& y) { return {x.a - y.a, x.b - y.b}; }

PhiInt operator-(const PhiInt& x) { return {-x.a, -x.b}; }

PhiInt operator*(const PhiInt& x, const PhiInt& y) {
    // (a1 + b1*phi)(a2 + b2*phi) with phi^2 = phi + 1
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
}

PhiInt& operator+=(PhiInt& x, const PhiInt& y) {
    x.a += y.a;
    x.b += y.b;
    return x;
}

PhiInt& operator-=(PhiInt& x, const PhiInt& y) {
    x.a -= y.a;
    x.b -= y.b;
    return x;
}

int sign(const PhiInt& x) {
    if (x.a == 0 && x.b == 0) return 0;
    const Int s = 2 * x.a + x.b;
    bool positive = false;
    if (x.b >= 0 && s > 0) {
        positive = true;
    } else if (x.b > 0 && s <= 0) {
        positive = 5 * x.b * x.b > s * s;
    } else if (x.b < 0 && s > 0) {
        positive = s * s > 5 * x.b * x.b;
    }
    return positive ? 1 : -1;
}

std::strong_ordering compare(const PhiInt& x, const PhiInt& y) {
    switch (sign(x - y)) {
        case -1: return std::strong_ordering::less;
        case 0: return std::strong_ordering::equal;
        default: return std::strong_ordering::greater;
    }
}

PhiInt phi_power(long i) { return {fibonacci(i - 1), fibonacci(i)}; }

std::string to_string(const PhiInt& x) {
    std::ostringstream out;
    out << x.a;
    if (x.b >= 0) out << "+";
    out << x.b << "*phi";
    return out.str();
}

}  // namespace basephi
