#include "tribone/region.hpp"

#include <algorithm>
#include <unordered_map>

#include "tribone/error.hpp"

namespace tribone {

BenzelParams::BenzelParams(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
    auto r = (a + b) % 3;
    class_ = r == 0 ? 0 : (r == 1 ? 1 : -1);
    switch (class_) {
        case 0:
            s_ = (2 * a - b) / 3;
            t_ = (2 * b - a) / 3;
            break;
        case 1:
            s_ = (2 * a - b - 2) / 3;
            t_ = (2 * b - a - 2) / 3;
            break;
        default:
            s_ = (2 * a - b - 1) / 3;
            t_ = (2 * b - a - 1) / 3;
            break;
    }
}

BenzelParams BenzelParams::make(std::int64_t a, std::int64_t b) {
    if (!valid(a, b)) {
        throw Error(ErrorCode::invalid_params, "benzel parameters (" + std::to_string(a) + "," + std::to_string(b) +
                                                   ") violate 2 <= a <= 2b, 2 <= b <= 2a");
    }
    return BenzelParams(a, b);
}

Region::Region(std::vector<Point> cells) : cells_(std::move(cells)) {
    for (auto p : cells_) {
        if (!is_cell_center(p)) {
            throw Error(ErrorCode::not_a_cell_center, "region cell " + to_string(p) + " is not of class -1");
        }
    }
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Region::contains(Point p) const { return std::binary_search(cells_.begin(), cells_.end(), p); }

std::optional<std::size_t> Region::index_of(Point p) const {
    auto it = std::lower_bound(cells_.begin(), cells_.end(), p);
    if (it == cells_.end() || *it != p) return std::nullopt;
    return static_cast<std::size_t>(it - cells_.begin());
}

Region Region::rotated(int times) const {
    std::vector<Point> out;
    out.reserve(cells_.size());
    for (auto p : cells_) out.push_back(rotate120(p, times));
    return Region(std::move(out));
}

Region Region::without(std::span<const Point> removed) const {
    std::vector<Point> out;
    out.reserve(cells_.size());
    for (auto p : cells_) {
        if (std::find(removed.begin(), removed.end(), p) == removed.end()) out.push_back(p);
    }
    return Region(std::move(out));
}

std::array<Point, 6> cell_corners(Point center) {
    // center+1, center-w^2, center+w, center-1, center+w^2, center-w
    return {center + Point{1, 0}, center + Point{1, 1}, center + Point{0, 1},
            center + Point{-1, 0}, center + Point{-1, -1}, center + Point{0, -1}};
}

std::array<Point, 6> cell_neighbours(Point center) {
    return {center + Point{1, -1}, center + Point{2, 1}, center + Point{1, 2},
            center + Point{-1, 1}, center + Point{-2, -1}, center + Point{-1, -2}};
}

std::array<Point, 6> bounding_hexagon(const BenzelParams& p) {
    const auto a = p.a(), b = p.b();
    return {Point{b, a}, Point{a - b, a}, Point{-a, b - a}, Point{-a, -b}, Point{a - b, -b}, Point{b, b - a}};
}

Point rightmost_corner(const BenzelParams& p) { return {p.b(), p.b() - p.a()}; }

Region benzel(const BenzelParams& p) {
    const auto hex = bounding_hexagon(p);
    auto inside = [&hex](Point q) {
        for (std::size_t i = 0; i < hex.size(); ++i) {
            const auto u = hex[i], v = hex[(i + 1) % hex.size()];
            if (cross(v - u, q - u) < 0) return false;
        }
        return true;
    };
    std::int64_t xmin = hex[0].x, xmax = hex[0].x, ymin = hex[0].y, ymax = hex[0].y;
    for (auto v : hex) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    std::vector<Point> cells;
    for (auto x = xmin; x <= xmax; ++x) {
        for (auto y = ymin; y <= ymax; ++y) {
            const Point c{x, y};
            if (!is_cell_center(c)) continue;
            const auto corners = cell_corners(c);
            if (std::all_of(corners.begin(), corners.end(), inside)) cells.push_back(c);
        }
    }
    return Region(std::move(cells));
}

Region triangle(std::int64_t n) {
    if (n < 1) throw Error(ErrorCode::invalid_params, "triangle size must be at least 1");
    // Apex at (0,2); row i holds apex + i*(-1,-2) + j*(1,-1), j = 0..i.
    std::vector<Point> cells;
    for (std::int64_t i = 0; i < n; ++i) {
        for (std::int64_t j = 0; j <= i; ++j) {
            cells.push_back(Point{0, 2} + (i - j) * Point{-1, -2} + j * Point{1, -1});
        }
    }
    return Region(std::move(cells));
}

Word trace_boundary(const Region& r, std::optional<Point> basepoint) {
    if (r.empty()) throw Error(ErrorCode::empty_region, "trace_boundary: region is empty");

    // Directed counterclockwise cell edges; an edge is on the boundary when its
    // reverse belongs to no cell. Every vertex of the hexagon graph touches
    // three mutually adjacent cells, so each boundary vertex has exactly one
    // outgoing boundary edge.
    std::unordered_map<Point, std::vector<Point>> out_edges;
    for (auto c : r.cells()) {
        const auto corners = cell_corners(c);
        for (std::size_t i = 0; i < 6; ++i) out_edges[corners[i]].push_back(corners[(i + 1) % 6]);
    }
    auto has_edge = [&out_edges](Point u, Point v) {
        auto it = out_edges.find(u);
        return it != out_edges.end() && std::find(it->second.begin(), it->second.end(), v) != it->second.end();
    };
    std::unordered_map<Point, Point> next;
    for (const auto& [u, targets] : out_edges) {
        for (auto v : targets) {
            if (!has_edge(v, u)) next.emplace(u, v);
        }
    }

    Point start;
    if (basepoint) {
        if (!next.contains(*basepoint)) {
            throw Error(ErrorCode::invalid_params, "trace_boundary: " + to_string(*basepoint) + " is not a boundary vertex");
        }
        start = *basepoint;
    } else {
        std::optional<Point> best;
        for (const auto& [u, v] : next) {
            if (class_of(u) == Sublattice::zero && (!best || u < *best)) best = u;
        }
        start = *best;
    }

    Word w;
    w.base = start;
    Point u = start;
    do {
        const Point v = next.at(u);
        w.steps.push_back(*step_from_vector(v - u));
        u = v;
        if (w.steps.size() > next.size()) break;
    } while (u != start);

    if (w.steps.size() != next.size()) {
        throw Error(ErrorCode::not_simply_connected,
                    "trace_boundary: region boundary has more than one component (holes or several pieces)");
    }
    return w;
}

namespace {

void append(std::vector<Step>& out, std::string_view tokens, std::int64_t times = 1) {
    const auto piece = make_word(tokens).steps;
    for (std::int64_t i = 0; i < times; ++i) out.insert(out.end(), piece.begin(), piece.end());
}

}  // namespace

Word boundary_word_closed_form(const BenzelParams& p) {
    const auto s = p.s(), t = p.t();
    Word w;
    auto& v = w.steps;
    switch (p.benzel_class()) {
        case 0:
            w.base = rightmost_corner(p);
            append(v, "b a' b c'", s);
            append(v, "c a' b a'", t);
            append(v, "c b' c a'", s);
            append(v, "a b' c b'", t);
            append(v, "a c' a b'", s);
            append(v, "b c' a c'", t);
            break;
        case 1:
            w.base = rightmost_corner(p) - Point{1, 0};
            append(v, "c' b a' b", s);
            append(v, "c' b");
            append(v, "a' c a' b", t);
            append(v, "a' c");
            append(v, "a' c b' c", s);
            append(v, "a' c");
            append(v, "b' a b' c", t);
            append(v, "b' a");
            append(v, "b' a c' a", s);
            append(v, "b' a");
            append(v, "c' b c' a", t);
            append(v, "c' b");
            break;
        default:
            w.base = rightmost_corner(p);
            append(v, "a' b c' b", s);
            append(v, "a'");
            append(v, "b a' c a'", t);
            append(v, "b");
            append(v, "b' c a' c", s);
            append(v, "b'");
            append(v, "c b' a b'", t);
            append(v, "c");
            append(v, "c' a b' a", s);
            append(v, "c'");
            append(v, "a c' b c'", t);
            append(v, "a");
            break;
    }
    return w;
}

std::vector<Spur> find_spurs(const Word& w) {
    std::vector<Spur> out;
    const auto n = w.size();
    if (n < 2) return out;
    for (std::size_t i = 0; i < n; ++i) {
        if (w.steps[(i + 1) % n] == reverse(w.steps[i])) out.push_back({i});
    }
    return out;
}

namespace {

struct DespurResult {
    Word word;
    std::vector<std::optional<std::size_t>> index_map;
    bool isolated = true;
};

DespurResult despur_impl(const Word& w) {
    DespurResult res;
    const auto n = w.size();
    res.index_map.assign(n, std::nullopt);
    const auto spurs = find_spurs(w);
    std::vector<bool> removed(n, false);
    bool wraps = false;
    for (auto [i] : spurs) {
        const auto j = (i + 1) % n;
        if (removed[i] || removed[j]) res.isolated = false;
        removed[i] = removed[j] = true;
        wraps = wraps || j == 0;
    }
    res.word.base = w.base;
    res.word.cyclic = w.cyclic;
    // A spur across the end of the word: its root is the new basepoint.
    if (wraps) {
        res.word.base += vector_of(w.steps[0]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (removed[i]) continue;
        res.index_map[i] = res.word.steps.size();
        res.word.steps.push_back(w.steps[i]);
    }
    if (!find_spurs(res.word).empty()) res.isolated = false;
    return res;
}

}  // namespace

bool spurs_isolated(const Word& w) { return despur_impl(w).isolated; }

Word despur(const Word& w) {
    auto res = despur_impl(w);
    if (!res.isolated) throw Error(ErrorCode::non_isolated_spur, "despur: word has non-isolated spurs");
    return std::move(res.word);
}

std::vector<std::optional<std::size_t>> despur_index_map(const Word& w) {
    auto res = despur_impl(w);
    if (!res.isolated) throw Error(ErrorCode::non_isolated_spur, "despur: word has non-isolated spurs");
    return std::move(res.index_map);
}

Word free_reduce(const Word& w) {
    std::vector<Step> stack;
    for (auto s : w.steps) {
        if (!stack.empty() && stack.back() == reverse(s)) {
            stack.pop_back();
        } else {
            stack.push_back(s);
        }
    }
    Word out;
    out.cyclic = w.cyclic;
    out.base = w.base;
    if (!w.cyclic) {
        out.steps = std::move(stack);
        return out;
    }
    // Strip a conjugating prefix u from u * r * u^-1.
    std::size_t lo = 0, hi = stack.size();
    while (hi - lo >= 2 && stack[lo] == reverse(stack[hi - 1])) {
        out.base += vector_of(stack[lo]);
        ++lo;
        --hi;
    }
    out.steps.assign(stack.begin() + static_cast<std::ptrdiff_t>(lo), stack.begin() + static_cast<std::ptrdiff_t>(hi));
    return out;
}

}  // namespace tribone
