#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lip/integer.hpp"

namespace lip {

struct Point {
    Integer x;
    Integer y;

    friend bool operator==(const Point&, const Point&) = default;
};

// A finite, nonempty restriction x -> y with pairwise distinct x, kept sorted
// by x ascending.
class Sample {
public:
    explicit Sample(std::vector<Point> points) : points_(std::move(points)) {
        if (points_.empty()) throw InvalidSample("sample must contain at least one point");
        std::sort(points_.begin(), points_.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
        for (std::size_t i = 1; i < points_.size(); ++i) {
            if (points_[i].x == points_[i - 1].x) {
                throw InvalidSample("duplicate x value " + points_[i].x.str() + " in sample");
            }
        }
    }

    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    std::vector<Integer> xs() const {
        std::vector<Integer> out;
        out.reserve(points_.size());
        for (const auto& p : points_) out.push_back(p.x);
        return out;
    }

    std::optional<Integer> value_at(const Integer& x) const {
        auto it = std::lower_bound(points_.begin(), points_.end(), x,
                                   [](const Point& p, const Integer& v) { return p.x < v; });
        if (it == points_.end() || it->x != x) return std::nullopt;
        return it->y;
    }
    bool contains(const Integer& x) const { return value_at(x).has_value(); }

    const Integer& at(const Integer& x) const {
        auto it = std::lower_bound(points_.begin(), points_.end(), x,
                                   [](const Point& p, const Integer& v) { return p.x < v; });
        if (it == points_.end() || it->x != x) throw DomainError("x = " + x.str() + " is not in the sample");
        return it->y;
    }

    // Restriction to the given x values, all of which must be present.
    Sample restricted_to(const std::vector<Integer>& xs) const {
        std::vector<Point> out;
        out.reserve(xs.size());
        for (const auto& x : xs) out.push_back({x, at(x)});
        return Sample(std::move(out));
    }

    Sample without(const Integer& x) const {
        std::vector<Point> out;
        for (const auto& p : points_) {
            if (p.x != x) out.push_back(p);
        }
        if (out.size() == points_.size()) throw DomainError("x = " + x.str() + " is not in the sample");
        return Sample(std::move(out));
    }

    friend bool operator==(const Sample&, const Sample&) = default;

private:
    std::vector<Point> points_;
};

inline std::string to_string(const Sample& s) {
    std::string out;
    for (const auto& p : s) {
        if (!out.empty()) out += ",";
        out += "(" + p.x.str() + "," + p.y.str() + ")";
    }
    return out;
}

// "(x,y),(x,y),..." with optional whitespace anywhere between tokens.
inline Sample parse_points(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip();
        if (i >= text.size() || text[i] != c) {
            throw ParseError(std::string("points: expected '") + c + "' at offset " + std::to_string(i), i);
        }
        ++i;
    };
    auto integer = [&] {
        skip();
        std::size_t start = i;
        if (i < text.size() && text[i] == '-') ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i || (i == start + 1 && text[start] == '-')) {
            throw ParseError("points: expected integer at offset " + std::to_string(start), start);
        }
        return parse_integer(text.substr(start, i - start));
    };
    std::vector<Point> pts;
    while (true) {
        expect('(');
        Integer x = integer();
        expect(',');
        Integer y = integer();
        expect(')');
        pts.push_back({std::move(x), std::move(y)});
        skip();
        if (i == text.size()) break;
        expect(',');
    }
    return Sample(std::move(pts));
}

}  // namespace lip
