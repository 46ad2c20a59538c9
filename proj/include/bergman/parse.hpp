#pragma once

#include <charconv>
#include <string>
#include <string_view>

#include "bergman/domain.hpp"
#include "bergman/errors.hpp"

namespace bergman {

namespace detail {

inline std::string_view strip(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace detail

/// Parses one complex literal: "0.5", "-1.2e-3", "0.3i", "1+2i", "-0.5-0.25i".
inline Complex parse_complex_literal(std::string_view text) {
    const std::string_view s = detail::strip(text);
    const auto bad = [&] {
        return ContractViolation("cannot parse complex literal '" + std::string(text) + "'");
    };
    if (s.empty()) throw bad();

    const char* begin = s.data();
    const char* end = s.data() + s.size();
    double first = 0.0;
    auto res = std::from_chars(begin, end, first);
    if (res.ec != std::errc()) throw bad();
    const char* cur = res.ptr;

    if (cur == end) return {first, 0.0};                       // pure real
    if (*cur == 'i' && cur + 1 == end) return {0.0, first};    // pure imaginary
    if (*cur != '+' && *cur != '-') throw bad();

    double second = 0.0;
    res = std::from_chars(cur + (*cur == '+' ? 1 : 0), end, second);  // from_chars rejects '+'
    if (res.ec != std::errc()) throw bad();
    cur = res.ptr;
    if (cur == end || *cur != 'i' || cur + 1 != end) throw bad();
    return {first, second};
}

/// Parses a point "(c1, c2, ..., cm)" of comma-separated complex literals.
inline CPoint parse_point(std::string_view text) {
    std::string_view s = detail::strip(text);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
        throw ContractViolation("point must be parenthesized: '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
    CPoint p;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = s.find(',', start);
        const std::string_view piece =
            comma == std::string_view::npos ? s.substr(start) : s.substr(start, comma - start);
        p.coords.push_back(parse_complex_literal(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return p;
}

} // namespace bergman
