#include <basephi/report.hpp>

#include <json.hpp>

#include <sstream>

namespace basephi {

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    out << "target: " << id << "\n";
    for (const auto& [key, value] : params) out << key << ": " << value << "\n";
    out << "items_checked: " << items_checked << "\n";
    out << "mismatches: " << mismatch_count << "\n";
    for (const auto& m : mismatches)
        out << "  mismatch N=" << m.n << " expected=" << m.expected << " actual=" << m.actual
            << "\n";
    if (mismatch_count > mismatches.size())
        out << "  (" << mismatch_count - mismatches.size() << " more not shown)\n";
    out << "elapsed_ms: " << elapsed.count() << "\n";
    out << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

std::string VerificationReport::to_record() const {
    nlohmann::ordered_json record;
    record["target"] = id;
    for (const auto& [key, value] : params) record[key] = value;
    record["items_checked"] = items_checked;
    record["pass"] = pass();
    record["mismatch_count"] = mismatch_count;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& m : mismatches) {
        nlohmann::ordered_json entry;
        entry["n"] = m.n.str();
        entry["expected"] = m.expected;
        entry["actual"] = m.actual;
        list.push_back(entry);
    }
    record["mismatches"] = std::move(list);
    record["elapsed_ms"] = elapsed.count();
    return record.dump();
}

}  // namespace basephi
