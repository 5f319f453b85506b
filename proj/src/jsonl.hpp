#pragma once

// Internal helpers shared by the JSONL readers/writers (corpus, detections,
// predictions). Not installed.

#include "screenkit/errors.hpp"
#include "screenkit/geometry.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <iostream>
#include <string>
#include <vector>

namespace screenkit::detail {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

struct LineContext {
    const std::filesystem::path& path;
    long line = 0;

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(path.string(), line, message);
    }
};

inline bool is_blank(const std::string& s) {
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\r') return false;
    return true;
}

// Streams a JSONL file, invoking fn once per non-blank line with the parsed
// object. Throws std::runtime_error when the file cannot be opened and
// ParseError on invalid JSON or a non-object line.
inline void for_each_json_line(const std::filesystem::path& path,
                               const std::function<void(const LineContext&, const json&)>& fn) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    std::string line;
    long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        LineContext ctx{path, line_no};
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            ctx.fail(std::string("invalid JSON: ") + e.what());
        }
        if (!j.is_object()) ctx.fail("expected a JSON object");
        fn(ctx, j);
    }
}

inline const json& require_field(const LineContext& ctx, const json& obj, const char* key,
                                 const char* what) {
    auto it = obj.find(key);
    if (it == obj.end())
        ctx.fail(std::string("missing field '") + key + "' in " + what + " object");
    return *it;
}

inline std::string require_string(const LineContext& ctx, const json& obj, const char* key,
                                  const char* what) {
    const json& v = require_field(ctx, obj, key, what);
    if (!v.is_string()) ctx.fail(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

inline bool require_bool(const LineContext& ctx, const json& obj, const char* key,
                         const char* what) {
    const json& v = require_field(ctx, obj, key, what);
    if (!v.is_boolean()) ctx.fail(std::string("field '") + key + "' must be a boolean");
    return v.get<bool>();
}

inline double require_number(const LineContext& ctx, const json& obj, const char* key,
                             const char* what) {
    const json& v = require_field(ctx, obj, key, what);
    if (!v.is_number()) ctx.fail(std::string("field '") + key + "' must be a number");
    return v.get<double>();
}

inline int require_positive_int(const LineContext& ctx, const json& obj, const char* key,
                                const char* what) {
    const json& v = require_field(ctx, obj, key, what);
    if (!v.is_number_integer()) ctx.fail(std::string("field '") + key + "' must be an integer");
    const auto value = v.get<std::int64_t>();
    if (value < 1 || value > INT32_MAX)
        ctx.fail(std::string("field '") + key + "' must be a positive 32-bit integer");
    return static_cast<int>(value);
}

// Box as a 4-element [x_min, y_min, x_max, y_max] array of finite numbers
// with positive extent.
inline BoundingBox require_box(const LineContext& ctx, const json& obj, const char* key,
                               const char* what) {
    const json& v = require_field(ctx, obj, key, what);
    if (!v.is_array() || v.size() != 4)
        ctx.fail(std::string("field '") + key + "' must be a [x_min, y_min, x_max, y_max] array");
    double c[4];
    for (std::size_t i = 0; i < 4; ++i) {
        if (!v[i].is_number()) ctx.fail(std::string("field '") + key + "' must contain numbers");
        c[i] = v[i].get<double>();
    }
    const BoundingBox box{c[0], c[1], c[2], c[3]};
    if (!is_valid(box))
        ctx.fail(std::string("field '") + key +
                 "' must be finite with x_min < x_max and y_min < y_max");
    return box;
}

// Flags fields outside `known`: fatal in strict mode, otherwise a warning
// (collected, or written to stderr when no sink is given).
inline void check_unknown_fields(const LineContext& ctx, const json& obj,
                                 std::initializer_list<const char*> known, const char* what,
                                 bool strict, std::vector<std::string>* warnings) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool found = false;
        for (const char* k : known)
            if (it.key() == k) {
                found = true;
                break;
            }
        if (found) continue;
        const std::string message = "unknown field '" + it.key() + "' in " + what + " object";
        if (strict) ctx.fail(message);
        const std::string warning =
            ctx.path.string() + ":" + std::to_string(ctx.line) + ": " + message + " (ignored)";
        if (warnings)
            warnings->push_back(warning);
        else
            std::cerr << "warning: " << warning << "\n";
    }
}

inline std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path.string());
    return out;
}

inline void finish_output(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw std::runtime_error("failed writing file: " + path.string());
}

// Shortest decimal form that round-trips; used wherever numbers go into
// text outputs so repeated runs are byte-identical.
inline std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

}  // namespace screenkit::detail
