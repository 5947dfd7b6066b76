#include "quasitoric/report.hpp"

#include <cmath>
#include <cstdio>

namespace quasitoric {

JsonValue& JsonValue::set(const std::string& key, JsonValue v) {
    auto& obj = std::get<Object>(value_);
    for (auto& kv : obj)
        if (kv.first == key) {
            kv.second = std::move(v);
            return *this;
        }
    obj.emplace_back(key, std::move(v));
    return *this;
}

JsonValue& JsonValue::push(JsonValue v) {
    std::get<Array>(value_).push_back(std::move(v));
    return *this;
}

JsonValue JsonValue::from_vector(const Vec& v) {
    JsonValue a = array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push(v[i]);
    return a;
}

JsonValue JsonValue::from_matrix(const Mat& m) {
    JsonValue a = array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        JsonValue row = array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push(m(r, c));
        a.push(std::move(row));
    }
    return a;
}

JsonValue JsonValue::from_complex(const Complex& z) {
    JsonValue a = array();
    a.push(z.real());
    a.push(z.imag());
    return a;
}

JsonValue JsonValue::from_cvector(const CVec& v) {
    JsonValue a = array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push(from_complex(v[i]));
    return a;
}

JsonValue JsonValue::from_index_set(const IndexSet& s) {
    JsonValue a = array();
    for (int j : s) a.push(static_cast<std::int64_t>(j + 1));
    return a;
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void write_double(std::string& out, double v) {
    if (!std::isfinite(v)) {
        out += "null";
        return;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void newline_indent(std::string& out, int indent, int depth) {
    if (indent <= 0) return;
    out += '\n';
    out.append(static_cast<size_t>(indent * depth), ' ');
}

}  // namespace

void JsonValue::write(std::string& out, int indent, int depth) const {
    if (std::holds_alternative<std::nullptr_t>(value_)) {
        out += "null";
    } else if (std::holds_alternative<bool>(value_)) {
        out += std::get<bool>(value_) ? "true" : "false";
    } else if (std::holds_alternative<std::int64_t>(value_)) {
        out += std::to_string(std::get<std::int64_t>(value_));
    } else if (std::holds_alternative<double>(value_)) {
        write_double(out, std::get<double>(value_));
    } else if (std::holds_alternative<std::string>(value_)) {
        write_escaped(out, std::get<std::string>(value_));
    } else if (std::holds_alternative<Array>(value_)) {
        const auto& a = std::get<Array>(value_);
        if (a.empty()) {
            out += "[]";
            return;
        }
        out += '[';
        for (size_t i = 0; i < a.size(); ++i) {
            if (i) out += ',';
            newline_indent(out, indent, depth + 1);
            a[i].write(out, indent, depth + 1);
        }
        newline_indent(out, indent, depth);
        out += ']';
    } else {
        const auto& o = std::get<Object>(value_);
        if (o.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        for (size_t i = 0; i < o.size(); ++i) {
            if (i) out += ',';
            newline_indent(out, indent, depth + 1);
            write_escaped(out, o[i].first);
            out += indent > 0 ? ": " : ":";
            o[i].second.write(out, indent, depth + 1);
        }
        newline_indent(out, indent, depth);
        out += '}';
    }
}

std::string JsonValue::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    out += '\n';
    return out;
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

JsonValue check_records_json(const std::vector<CheckRecord>& records) {
    JsonValue a = JsonValue::array();
    for (const auto& r : records) {
        JsonValue rec = JsonValue::object();
        rec.set("name", r.name);
        rec.set("status", r.status);
        rec.set("residual", r.residual);
        rec.set("samples", static_cast<std::int64_t>(r.samples));
        if (!r.detail.empty()) rec.set("detail", r.detail);
        a.push(std::move(rec));
    }
    return a;
}

}  // namespace quasitoric
