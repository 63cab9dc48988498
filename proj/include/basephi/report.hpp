#pragma once

#include <basephi/bigint.hpp>

#include <chrono>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace basephi {

/// Structured outcome of one verification run: what was checked, over what
/// range, and every divergence found (capped).  Reports are deterministic
/// for a given parameter set apart from the elapsed time.
struct VerificationReport {
    struct Mismatch {
        Int n;
        std::string expected;
        std::string actual;
    };

    std::string id;  // e.g. "t51"
    std::vector<std::pair<std::string, std::string>> params;
    unsigned long long items_checked = 0;
    std::vector<Mismatch> mismatches;        // first `cap` mismatches only
    unsigned long long mismatch_count = 0;   // total, uncapped
    std::size_t cap = 20;
    std::chrono::milliseconds elapsed{0};

    bool pass() const { return mismatch_count == 0; }

    void add_param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
    }

    void add_mismatch(Int n, std::string expected, std::string actual) {
        ++mismatch_count;
        if (mismatches.size() < cap)
            mismatches.push_back({std::move(n), std::move(expected), std::move(actual)});
    }

    /// Line-oriented human-readable form.
    std::string to_text() const;

    /// One self-delimiting JSON record (a single line, no trailing newline).
    std::string to_record() const;
};

/// Runs fn, stores the wall-clock duration into report.elapsed.
template <typename Fn>
void timed(VerificationReport& report, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
}

}  // namespace basephi
