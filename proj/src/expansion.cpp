#include <basephi/expansion.hpp>

#include <algorithm>
#include <stdexcept>

namespace basephi {

PhiExpansion PhiExpansion::from_ones(std::vector<int> one_indices) {
    PhiExpansion e;
    if (one_indices.empty()) return e;
    std::sort(one_indices.begin(), one_indices.end(), std::greater<int>());
    e.l_ = std::max(0, one_indices.front());
    e.r_ = std::min(0, one_indices.back());
    e.bits_.assign(static_cast<std::size_t>(e.l_ - e.r_) + 1, 0);
    for (int i : one_indices) e.bits_[static_cast<std::size_t>(e.l_ - i)] = 1;
    return e;
}

PhiExpansion PhiExpansion::parse(std::string_view text) {
    if (text == "0") return zero();
    const auto bad = [&] {
        throw std::invalid_argument("digit string must match [01]+(.[01]+)? : \"" +
                                    std::string(text) + "\"");
    };
    if (text.empty()) bad();
    PhiExpansion e;
    std::size_t dot = text.find('.');
    std::string_view int_part = dot == std::string_view::npos ? text : text.substr(0, dot);
    std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (int_part.empty() || (dot != std::string_view::npos && frac_part.empty())) bad();
    e.bits_.reserve(int_part.size() + frac_part.size());
    for (char c : int_part) {
        if (c != '0' && c != '1') bad();
        e.bits_.push_back(c == '1');
    }
    for (char c : frac_part) {
        if (c != '0' && c != '1') bad();
        e.bits_.push_back(c == '1');
    }
    e.l_ = static_cast<int>(int_part.size()) - 1;
    e.r_ = -static_cast<int>(frac_part.size());
    return e;
}

std::vector<int> PhiExpansion::one_indices() const {
    std::vector<int> ones;
    for (int i = l_; i >= r_ && !is_zero(); --i)
        if (digit(i)) ones.push_back(i);
    return ones;
}

std::string PhiExpansion::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    out.reserve(bits_.size() + 1);
    for (int i = l_; i >= 0; --i) out += digit(i) ? '1' : '0';
    if (r_ < 0) {
        out += '.';
        for (int i = -1; i >= r_; --i) out += digit(i) ? '1' : '0';
    }
    return out;
}

PhiExpansion expand(const Int& n) {
    if (n < 0) throw std::domain_error("expand: N must be >= 0");
    if (n == 0) return PhiExpansion::zero();

    PhiInt rem(n, 0);
    // Climb while phi^(i+1) <= remainder to find the leading digit index.
    int i = 0;
    PhiInt cur(1, 0);    // phi^i
    PhiInt above(0, 1);  // phi^(i+1)
    while (sign(rem - above) >= 0) {
        PhiInt next = cur + above;
        cur = std::move(above);
        above = std::move(next);
        ++i;
    }
    const int top = i;
    const int guard = -(2 * top + 4);

    std::vector<int> ones;
    PhiInt below = above - cur;  // phi^(i-1)
    while (rem.a != 0 || rem.b != 0) {
        if (i < guard) throw std::logic_error("expand: index guard hit; expansion did not terminate");
        PhiInt diff = rem - cur;
        if (sign(diff) >= 0) {
            // After taking phi^i the remainder is < phi^(i-1), so ones are
            // never adjacent.
            ones.push_back(i);
            rem = std::move(diff);
        }
        PhiInt next_below = cur - below;
        cur = std::move(below);
        below = std::move(next_below);
        --i;
    }
    return PhiExpansion::from_ones(std::move(ones));
}

PhiInt value(const PhiExpansion& e) {
    PhiInt total;
    if (e.is_zero()) return total;
    PhiInt cur = phi_power(e.l_index());
    PhiInt below = phi_power(e.l_index() - 1);
    for (int i = e.l_index(); i >= e.r_index(); --i) {
        if (e.digit(i)) total += cur;
        PhiInt next_below = cur - below;
        cur = std::move(below);
        below = std::move(next_below);
    }
    return total;
}

int digit(const Int& n, int k) { return expand(n).digit(k); }

Validity validate(const PhiExpansion& e) {
    if (e.is_zero()) return {};
    for (int i = e.l_index(); i > e.r_index(); --i)
        if (e.digit(i) && e.digit(i - 1))
            return {false, "adjacent ones at indices (" + std::to_string(i) + "," +
                               std::to_string(i - 1) + ")"};
    if (e.digit(e.l_index()) != 1)
        return {false, "leading digit at index " + std::to_string(e.l_index()) + " is 0"};
    if (e.digit(e.r_index()) != 1)
        return {false, "trailing digit at index " + std::to_string(e.r_index()) + " is 0"};
    return {};
}

bool is_valid(const PhiExpansion& e) { return validate(e).ok; }

PhiExpansion lucas_expansion_closed_form(int m) {
    if (m < 2) throw std::domain_error("lucas_expansion_closed_form: m must be >= 2");
    std::vector<int> ones;
    if (m % 2 == 0) {
        ones = {m, -m};
    } else {
        for (int i = m - 1; i >= 0; i -= 2) ones.push_back(i);
        for (int i = -2; i >= -(m - 1); i -= 2) ones.push_back(i);
    }
    return PhiExpansion::from_ones(std::move(ones));
}

PhiExpansion lucas_plus_one_expansion(int n) {
    if (n < 1) throw std::domain_error("lucas_plus_one_expansion: n must be >= 1");
    std::vector<int> ones{2 * n + 1};
    for (int i = -1; i >= -(2 * n - 1); i -= 2) ones.push_back(i);
    ones.push_back(-(2 * n + 2));
    return PhiExpansion::from_ones(std::move(ones));
}

LucasInterval interval_of(const Int& n) {
    if (n < 2) throw std::domain_error("interval_of: N must be >= 2");
    // Walk the Lucas pair; Lambda_m for m >= 1 partition [2, inf).
    Int lm = 1, lm1 = 3;  // L1, L2
    for (int m = 1;; ++m) {
        LucasInterval interval;
        interval.index = m;
        interval.even_kind = m % 2 == 0;
        interval.lo = interval.even_kind ? lm : lm + 1;
        interval.hi = interval.even_kind ? lm1 : lm1 - 1;
        if (n >= interval.lo && n <= interval.hi) {
            if (!interval.even_kind && m >= 3) {
                const int u = m / 2;
                const Int i_lo = lm + 1, i_hi = lm + lucas(2 * u - 2) - 1;
                const Int j_lo = i_hi + 1, j_hi = lm + lucas(2 * u - 1);
                const Int k_lo = j_hi + 1, k_hi = lm1 - 1;
                if (n <= i_hi) {
                    interval.sub = LucasInterval::Sub::I;
                    interval.sub_lo = i_lo;
                    interval.sub_hi = i_hi;
                } else if (n <= j_hi) {
                    interval.sub = LucasInterval::Sub::J;
                    interval.sub_lo = j_lo;
                    interval.sub_hi = j_hi;
                } else {
                    interval.sub = LucasInterval::Sub::K;
                    interval.sub_lo = k_lo;
                    interval.sub_hi = k_hi;
                }
            }
            return interval;
        }
        Int next = lm + lm1;
        lm = std::move(lm1);
        lm1 = std::move(next);
    }
}

namespace {

const char* const kSmallExpansions[12] = {
    "0",          "1",          "10.01",      "100.01",     "101.01",     "1000.1001",
    "1010.0001",  "10000.0001", "10001.0001", "10010.0101", "10100.0101", "10101.0101"};

void require(bool condition, const char* what) {
    if (!condition) throw std::logic_error(std::string("expand_recursive: ") + what);
}

// Removes one element equal to idx; the element must exist.
void remove_one(std::vector<int>& ones, int idx) {
    auto it = std::find(ones.begin(), ones.end(), idx);
    require(it != ones.end(), "expected digit 1 missing during surgery");
    ones.erase(it);
}

}  // namespace

PhiExpansion expand_recursive(const Int& n) {
    if (n < 0) throw std::domain_error("expand_recursive: N must be >= 0");
    if (n <= 11) return PhiExpansion::parse(kSmallExpansions[n.convert_to<int>()]);

    const LucasInterval interval = interval_of(n);
    const int m = interval.index;

    if (interval.even_kind) {
        // N = L_m + k with k in [0, L_{m-1}]: the digits of beta(k) drop into
        // the zero run of beta(L_m).
        const Int k = n - lucas(m);
        if (k == 0) return lucas_expansion_closed_form(m);
        const PhiExpansion inner = expand_recursive(k);
        require(inner.l_index() <= m - 2 && inner.r_index() >= -(m - 2),
                "embedded digits out of range");
        std::vector<int> ones = inner.one_indices();
        ones.push_back(m);
        ones.push_back(-m);
        return PhiExpansion::from_ones(std::move(ones));
    }

    // Odd interval Lambda_{2u+1}; each case recurses two Lucas indices down,
    // strips the outermost "10" / "01" pair as required, and affixes the
    // replacement digit blocks.
    const int u = m / 2;
    require(u >= 2, "odd-interval surgery reached below its base");
    const Int k = n - lucas(m);

    const auto checked_inner = [&](const Int& inner_n, bool odd_shape) {
        PhiExpansion inner = expand_recursive(inner_n);
        const int lt = odd_shape ? 2 * u - 1 : 2 * u - 2;
        const int rt = odd_shape ? -2 * u : -(2 * u - 2);
        require(inner.l_index() == lt && inner.r_index() == rt, "inner expansion span is wrong");
        require(inner.digit(lt) == 1 && inner.digit(lt - 1) == 0, "inner prefix is not 10");
        require(inner.digit(rt) == 1 && inner.digit(rt + 1) == 0, "inner suffix is not 01");
        return inner;
    };

    std::vector<int> ones;
    switch (*interval.sub) {
        case LucasInterval::Sub::I: {
            // beta(L_{2u+1}+k) = 1000 (10)^-1 beta(L_{2u-1}+k) (01)^-1 1001
            const PhiExpansion inner = checked_inner(lucas(2 * u - 1) + k, true);
            ones = inner.one_indices();
            remove_one(ones, 2 * u - 1);
            remove_one(ones, -2 * u);
            ones.push_back(2 * u + 1);
            ones.push_back(-2 * u + 1);
            ones.push_back(-2 * u - 2);
            break;
        }
        case LucasInterval::Sub::J: {
            // beta(L_{2u+1}+L_{2u-2}+k) = 10010 (10)^-1 beta(L_{2u-2}+k) (01)^-1 001001
            const Int k_j = n - interval.sub_lo;
            const PhiExpansion inner = checked_inner(lucas(2 * u - 2) + k_j, false);
            ones = inner.one_indices();
            remove_one(ones, 2 * u - 2);
            remove_one(ones, -(2 * u - 2));
            ones.push_back(2 * u + 1);
            ones.push_back(2 * u - 2);
            ones.push_back(-(2 * u - 1));
            ones.push_back(-(2 * u + 2));
            break;
        }
        case LucasInterval::Sub::K: {
            // beta(L_{2u+1}+L_{2u-1}+k) = 10 beta(L_{2u-1}+k) (01)^-1 0001
            const Int k_k = n - interval.sub_lo + 1;
            const PhiExpansion inner = checked_inner(lucas(2 * u - 1) + k_k, true);
            ones = inner.one_indices();
            remove_one(ones, -2 * u);
            ones.push_back(2 * u + 1);
            ones.push_back(-2 * u - 2);
            break;
        }
    }
    return PhiExpansion::from_ones(std::move(ones));
}

std::pair<int, int> lr_indices(const Int& n) {
    if (n < 1) throw std::domain_error("lr_indices: N must be >= 1");
    const PhiExpansion e = expand(n);
    return {e.l_index(), e.r_index()};
}

}  // namespace basephi
