#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lpbench/errors.hpp"

namespace lpbench {

/// Shortest round-trip decimal representation of a double.
inline std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text, const std::string& what) {
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw DataError("invalid " + what + " '" + std::string(text) + "'");
    return value;
}

inline std::uint64_t parse_u64(std::string_view text, const std::string& what) {
    std::uint64_t value = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
        throw DataError("invalid " + what + " '" + std::string(text) + "'");
    return value;
}

inline std::string_view trim(std::string_view s) {
    constexpr std::string_view kSpace = " \t\r\n";
    while (!s.empty() && kSpace.find(s.front()) != std::string_view::npos) s.remove_prefix(1);
    while (!s.empty() && kSpace.find(s.back()) != std::string_view::npos) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (start <= line.size()) {
        std::size_t end = start;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
        if (end > start) fields.push_back(line.substr(start, end - start));
        if (end == line.size()) break;
        start = end + 1;
    }
    return fields;
}

} // namespace lpbench
