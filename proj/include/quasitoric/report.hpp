#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "quasitoric/types.hpp"

namespace quasitoric {

/// Minimal ordered JSON document for reports. Written by hand so numbers
/// serialize with 17 significant digits and output is byte-deterministic.
class JsonValue {
public:
    using Array = std::vector<JsonValue>;
    using Object = std::vector<std::pair<std::string, JsonValue>>;

    JsonValue() : value_(nullptr) {}
    JsonValue(std::nullptr_t) : value_(nullptr) {}
    JsonValue(bool b) : value_(b) {}
    JsonValue(int v) : value_(static_cast<std::int64_t>(v)) {}
    JsonValue(std::int64_t v) : value_(v) {}
    JsonValue(std::uint64_t v) : value_(static_cast<std::int64_t>(v)) {}
    JsonValue(double v) : value_(v) {}
    JsonValue(const char* s) : value_(std::string(s)) {}
    JsonValue(std::string s) : value_(std::move(s)) {}
    JsonValue(Array a) : value_(std::move(a)) {}
    JsonValue(Object o) : value_(std::move(o)) {}

    static JsonValue object() { return JsonValue(Object{}); }
    static JsonValue array() { return JsonValue(Array{}); }

    JsonValue& set(const std::string& key, JsonValue v);
    JsonValue& push(JsonValue v);

    static JsonValue from_vector(const Vec& v);
    static JsonValue from_matrix(const Mat& m);
    static JsonValue from_complex(const Complex& z);  // [re, im]
    static JsonValue from_cvector(const CVec& v);
    static JsonValue from_index_set(const IndexSet& s);  // 1-based

    std::string dump(int indent = 2) const;

private:
    std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Array, Object> value_;
    void write(std::string& out, int indent, int depth) const;
};

/// FNV-1a 64-bit digest, used as the deterministic input fingerprint.
std::uint64_t fnv1a64(const std::string& data);

std::string hex64(std::uint64_t v);

struct CheckRecord {
    std::string name;
    std::string status;  // pass | fail | skip
    double residual = 0.0;
    int samples = 0;
    std::string detail;
};

JsonValue check_records_json(const std::vector<CheckRecord>& records);

inline bool all_passed(const std::vector<CheckRecord>& records) {
    for (const auto& r : records)
        if (r.status == "fail") return false;
    return true;
}

}  // namespace quasitoric
