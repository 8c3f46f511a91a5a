#pragma once

#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace specham::jsonio {

// Formats a double with 12 significant digits; all numeric program output is
// funneled through this so reruns are byte-identical.
inline std::string format_double(double x) {
    if (std::isnan(x)) return "null";
    if (std::isinf(x)) return x > 0 ? "1e999" : "-1e999";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

inline std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out.push_back(c);
                }
        }
    }
    return out;
}

// Minimal JSON value with insertion-ordered object keys, so that emitted
// documents are deterministic.
class Value {
public:
    Value() : kind_(Kind::Null) {}
    Value(bool b) : kind_(Kind::Bool), bool_(b) {}
    Value(int v) : kind_(Kind::Int), int_(v) {}
    Value(long long v) : kind_(Kind::Int), int_(v) {}
    Value(double v) : kind_(Kind::Double), double_(v) {}
    Value(const char* s) : kind_(Kind::String), string_(s) {}
    Value(std::string s) : kind_(Kind::String), string_(std::move(s)) {}

    static Value object() {
        Value v;
        v.kind_ = Kind::Object;
        return v;
    }
    static Value array() {
        Value v;
        v.kind_ = Kind::Array;
        return v;
    }

    Value& set(const std::string& key, Value value) {
        members_.emplace_back(key, std::move(value));
        return *this;
    }
    Value& push(Value value) {
        items_.push_back(std::move(value));
        return *this;
    }

    std::string dump(int indent = 2) const {
        std::string out;
        write(out, indent, 0);
        if (indent > 0) out.push_back('\n');
        return out;
    }

private:
    enum class Kind { Null, Bool, Int, Double, String, Object, Array };

    void write(std::string& out, int indent, int depth) const {
        const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
        const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');
        const char* nl = indent > 0 ? "\n" : "";
        switch (kind_) {
            case Kind::Null: out += "null"; break;
            case Kind::Bool: out += bool_ ? "true" : "false"; break;
            case Kind::Int: out += std::to_string(int_); break;
            case Kind::Double: out += format_double(double_); break;
            case Kind::String:
                out += '"';
                out += escape(string_);
                out += '"';
                break;
            case Kind::Object: {
                if (members_.empty()) {
                    out += "{}";
                    break;
                }
                out += '{';
                out += nl;
                for (std::size_t i = 0; i < members_.size(); ++i) {
                    out += pad;
                    out += '"';
                    out += escape(members_[i].first);
                    out += "\": ";
                    members_[i].second.write(out, indent, depth + 1);
                    if (i + 1 < members_.size()) out += ',';
                    out += nl;
                }
                out += close_pad;
                out += '}';
                break;
            }
            case Kind::Array: {
                if (items_.empty()) {
                    out += "[]";
                    break;
                }
                out += '[';
                out += nl;
                for (std::size_t i = 0; i < items_.size(); ++i) {
                    out += pad;
                    items_[i].write(out, indent, depth + 1);
                    if (i + 1 < items_.size()) out += ',';
                    out += nl;
                }
                out += close_pad;
                out += ']';
                break;
            }
        }
    }

    Kind kind_;
    bool bool_ = false;
    long long int_ = 0;
    double double_ = 0;
    std::string string_;
    std::vector<std::pair<std::string, Value>> members_;
    std::vector<Value> items_;
};

} // namespace specham::jsonio
