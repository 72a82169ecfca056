#include "tribone/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "tribone/error.hpp"

namespace tribone {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::not_closed: return "not-closed";
        case ErrorCode::non_integral_area: return "non-integral-area";
        case ErrorCode::not_a_cell_center: return "not-a-cell-center";
        case ErrorCode::off_hexagon_graph: return "off-hexagon-graph";
        case ErrorCode::invalid_params: return "invalid-params";
        case ErrorCode::empty_region: return "empty-region";
        case ErrorCode::not_simply_connected: return "not-simply-connected";
        case ErrorCode::non_isolated_spur: return "non-isolated-spur";
        case ErrorCode::shadow_not_closed: return "shadow-not-closed";
        case ErrorCode::invalid_tiling: return "invalid-tiling";
        case ErrorCode::invalid_placement: return "invalid-placement";
        case ErrorCode::construction_failed: return "construction-failed";
        case ErrorCode::resource_limit: return "resource-limit";
        case ErrorCode::parse_error: return "parse-error";
    }
    return "unknown";
}

std::string to_string(Point p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::optional<Step> step_from_vector(Point v) {
    for (auto s : all_steps) {
        if (vector_of(s) == v) return s;
    }
    return std::nullopt;
}

std::string_view to_string(Step s) {
    static constexpr std::array<std::string_view, 6> names{"a", "b", "c", "a'", "b'", "c'"};
    return names[static_cast<int>(s)];
}

std::optional<Step> parse_step(std::string_view token) {
    for (auto s : all_steps) {
        if (to_string(s) == token) return s;
    }
    return std::nullopt;
}

Point Word::displacement() const {
    Point d;
    for (auto s : steps) d += vector_of(s);
    return d;
}

std::vector<Point> Word::vertices() const {
    std::vector<Point> out;
    out.reserve(steps.size() + 1);
    Point p = base;
    out.push_back(p);
    for (auto s : steps) {
        p += vector_of(s);
        out.push_back(p);
    }
    return out;
}

Word make_word(std::string_view tokens, Point base) {
    Word w = parse_word(tokens);
    w.base = base;
    return w;
}

Word parse_word(std::string_view text) {
    Word w;
    std::istringstream in{std::string(text)};
    std::string token;
    bool seen_base = false;
    while (in >> token) {
        if (token.starts_with("base=")) {
            if (seen_base) throw Error(ErrorCode::parse_error, "duplicate base= token");
            long long x = 0, y = 0;
            char comma = 0;
            std::istringstream coords(token.substr(5));
            if (!(coords >> x >> comma >> y) || comma != ',' || !coords.eof()) {
                throw Error(ErrorCode::parse_error, "malformed basepoint '" + token + "'");
            }
            w.base = {x, y};
            seen_base = true;
            continue;
        }
        auto s = parse_step(token);
        if (!s) throw Error(ErrorCode::parse_error, "unknown step '" + token + "'");
        w.steps.push_back(*s);
    }
    return w;
}

std::string format_steps(std::span<const Step> steps) {
    std::string out;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i) out += ' ';
        out += to_string(steps[i]);
    }
    return out;
}

std::string format_word(const Word& w) {
    std::string out = "base=" + std::to_string(w.base.x) + "," + std::to_string(w.base.y);
    if (!w.steps.empty()) out += ' ' + format_steps(w.steps);
    return out;
}

Word rotate_word(const Word& w, int times) {
    Word out = w;
    out.base = rotate120(w.base, times);
    int t = ((times % 3) + 3) % 3;
    for (auto& s : out.steps) {
        for (int i = 0; i < t; ++i) s = rotate120(s);
    }
    return out;
}

Word cyclic_shift(const Word& w, std::size_t k) {
    if (w.steps.empty()) return w;
    k %= w.steps.size();
    Word out = w;
    for (std::size_t i = 0; i < k; ++i) out.base += vector_of(w.steps[i]);
    std::rotate(out.steps.begin(), out.steps.begin() + static_cast<std::ptrdiff_t>(k), out.steps.end());
    return out;
}

Word reversed(const Word& w) {
    Word out = w;
    out.base = w.endpoint();
    std::reverse(out.steps.begin(), out.steps.end());
    for (auto& s : out.steps) s = reverse(s);
    return out;
}

Word concat(const Word& first, const Word& second) {
    Word out = first;
    out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
    return out;
}

bool on_hexagon_graph(const Word& w) {
    Point p = w.base;
    for (auto s : w.steps) {
        auto cls = class_of(p);
        if (cls == Sublattice::minus_one) return false;
        if (is_primed(s) != (cls == Sublattice::one)) return false;
        p += vector_of(s);
    }
    return is_vertex(p);
}

std::int64_t area_double_sum(std::span<const Step> steps) {
    // sum_{i<j} v_i x v_j = sum_j (v_1 + ... + v_{j-1}) x v_j
    std::int64_t total = 0;
    Point prefix;
    for (auto s : steps) {
        total += cross(prefix, vector_of(s));
        prefix += vector_of(s);
    }
    return total;
}

std::int64_t signed_area(const Word& w) {
    if (!w.is_closed()) throw Error(ErrorCode::not_closed, "signed_area: word is not closed");
    auto sum = area_double_sum(w.steps);
    if (sum % 6 != 0) {
        throw Error(ErrorCode::non_integral_area,
                    "signed_area: double sum " + std::to_string(sum) + " is not divisible by 6");
    }
    return sum / 6;
}

namespace {

// Doubled Cartesian coordinates: x + y*w -> (2x - y, y*sqrt(3)); the sqrt(3)
// factor is a positive scaling of one axis and is dropped.
struct Doubled {
    std::int64_t X, Y;
};
Doubled doubled(Point p) { return {2 * p.x - p.y, p.y}; }

std::int64_t is_left(Doubled p0, Doubled p1, Doubled q) {
    return (p1.X - p0.X) * (q.Y - p0.Y) - (q.X - p0.X) * (p1.Y - p0.Y);
}

}  // namespace

std::int64_t winding_number(const Word& w, Point cell) {
    if (!w.is_closed()) throw Error(ErrorCode::not_closed, "winding_number: word is not closed");
    if (!is_cell_center(cell)) {
        throw Error(ErrorCode::not_a_cell_center, "winding_number: " + to_string(cell) + " is not a cell center");
    }
    const auto q = doubled(cell);
    std::int64_t wn = 0;
    Point p = w.base;
    for (auto s : w.steps) {
        Point next = p + vector_of(s);
        if (p == cell) {
            throw Error(ErrorCode::off_hexagon_graph, "winding_number: path passes through " + to_string(cell));
        }
        auto d0 = doubled(p);
        auto d1 = doubled(next);
        if (d0.Y <= q.Y) {
            if (d1.Y > q.Y && is_left(d0, d1, q) > 0) ++wn;
        } else {
            if (d1.Y <= q.Y && is_left(d0, d1, q) < 0) --wn;
        }
        p = next;
    }
    return wn;
}

bool cyclically_equal(std::span<const Step> u, std::span<const Step> v) {
    if (u.size() != v.size()) return false;
    const auto n = u.size();
    if (n == 0) return true;
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool match = true;
        for (std::size_t i = 0; i < n && match; ++i) match = u[(i + shift) % n] == v[i];
        if (match) return true;
    }
    return false;
}

}  // namespace tribone
