#include "tribone/shadow.hpp"

#include <algorithm>
#include <cmath>

#include "tribone/error.hpp"

namespace tribone {

namespace {

std::vector<StepKind> classify_spur_free(const std::vector<Step>& steps) {
    const auto n = steps.size();
    std::vector<StepKind> out(n, StepKind::wind);
    for (std::size_t i = 0; i < n; ++i) {
        const auto prev = steps[(i + n - 1) % n];
        const auto next = steps[(i + 1) % n];
        out[i] = prev == next ? StepKind::weave : StepKind::wind;
    }
    return out;
}

// The step leaving the vertex between `in` and `out` along the third edge.
Step third_edge(Step in, Step out) {
    for (auto s : all_steps) {
        if (is_primed(s) == is_primed(out) && s != out && s != reverse(in)) return s;
    }
    throw Error(ErrorCode::shadow_not_closed, "shadow: no free edge for a spur");
}

// Steps of the shadow of a spur-free closed word; translation invariant.
std::vector<Step> shadow_steps(const std::vector<Step>& steps, ShadowSeed seed) {
    const auto n = steps.size();
    if (n == 0) return {};
    if (n < 3) throw Error(ErrorCode::shadow_not_closed, "shadow: word too short to shadow");
    if (is_primed(seed.first) == is_primed(seed.second) || seed.second == reverse(seed.first)) {
        throw Error(ErrorCode::invalid_params, "shadow: seed steps must form a non-backtracking walk");
    }
    const auto kinds = classify_spur_free(steps);
    std::vector<Step> out;
    out.reserve(n);
    out.push_back(seed.first);
    out.push_back(seed.second);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const auto prev = out[i - 1];
        // The shadow weaves exactly where the original winds.
        out.push_back(kinds[i] == StepKind::wind ? prev : third_edge(out[i], prev));
    }
    Point sum;
    for (auto s : out) sum += vector_of(s);
    if (sum != Point{}) {
        throw Error(ErrorCode::shadow_not_closed, "shadow: forced continuation does not return to its start");
    }
    if (out.back() == reverse(out.front()) || classify_spur_free(out) != flipped(kinds)) {
        throw Error(ErrorCode::shadow_not_closed, "shadow: continuation fails to shadow across the basepoint");
    }
    return out;
}

}  // namespace

std::vector<StepKind> flipped(const std::vector<StepKind>& kinds) {
    std::vector<StepKind> out = kinds;
    for (auto& k : out) {
        if (k == StepKind::weave) {
            k = StepKind::wind;
        } else if (k == StepKind::wind) {
            k = StepKind::weave;
        }
    }
    return out;
}

std::vector<StepKind> classify_steps(const Word& w) {
    const auto map = despur_index_map(w);
    const auto core = despur(w);
    const auto core_kinds = classify_spur_free(core.steps);
    std::vector<StepKind> out(w.size(), StepKind::spur_site);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (map[i]) out[i] = core_kinds[*map[i]];
    }
    return out;
}

std::vector<ShadowSeed> all_seeds(const Word& w) {
    const auto core = despur(w);
    const bool from_one = class_of(core.base) == Sublattice::one;
    std::vector<ShadowSeed> out;
    for (auto first : all_steps) {
        if (is_primed(first) != from_one) continue;
        for (auto second : all_steps) {
            if (is_primed(second) == from_one || second == reverse(first)) continue;
            out.push_back({first, second});
        }
    }
    return out;
}

bool preserves_orientation(const Word& w, ShadowSeed seed) {
    const auto core = despur(w);
    if (core.size() < 2) return true;
    return turn(seed.first, seed.second) == turn(core.steps[0], core.steps[1]);
}

std::vector<ShadowSeed> oriented_seeds(const Word& w) {
    std::vector<ShadowSeed> out;
    for (auto seed : all_seeds(w)) {
        if (preserves_orientation(w, seed)) out.push_back(seed);
    }
    return out;
}

ShadowSeed default_seed(const Word& w) {
    const auto core = despur(w);
    const Step first = class_of(core.base) == Sublattice::one ? Step::b_prime : Step::b;
    for (auto seed : oriented_seeds(w)) {
        if (seed.first == first) return seed;
    }
    // Only reachable for words too short to have a first turn.
    return {first, is_primed(first) ? Step::c : Step::a_prime};
}

Point default_shadow_base(const Word& w) {
    return class_of(w.base) == Sublattice::one ? Point{1, 0} : Point{0, 0};
}

Word shadow_word(const Word& w, Point basepoint, ShadowSeed seed) {
    if (!w.is_closed()) throw Error(ErrorCode::not_closed, "shadow: word is not closed");
    if (!on_hexagon_graph(w)) throw Error(ErrorCode::off_hexagon_graph, "shadow: word leaves the hexagon graph");
    if (class_of(basepoint) != class_of(w.base)) {
        throw Error(ErrorCode::invalid_params, "shadow: basepoint class must match the word's basepoint class");
    }
    const auto map = despur_index_map(w);
    const auto core = despur(w);
    const auto core_shadow = shadow_steps(core.steps, seed);
    const auto n = w.size();
    const auto m = core_shadow.size();

    Word out;
    out.base = basepoint;
    if (m == 0) {
        if (n != 0) throw Error(ErrorCode::shadow_not_closed, "shadow: word is a bare spur");
        return out;
    }
    out.steps.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (map[i]) out.steps[i] = core_shadow[*map[i]];
    }
    // Each spur becomes the free edge at the matching shadow vertex.
    std::vector<std::size_t> mapped_before(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) mapped_before[i + 1] = mapped_before[i] + (map[i] ? 1 : 0);
    for (auto [i] : find_spurs(w)) {
        const auto j = mapped_before[i] % m;
        const auto g = third_edge(core_shadow[(j + m - 1) % m], core_shadow[j]);
        out.steps[i] = g;
        out.steps[(i + 1) % n] = reverse(g);
    }
    if (!on_hexagon_graph(out)) {
        throw Error(ErrorCode::invalid_params, "shadow: seed does not leave the basepoint's sublattice");
    }
    return out;
}

Word shadow_word(const Word& w) { return shadow_word(w, default_shadow_base(w), default_seed(w)); }

std::string InvariantValue::rescaled_string() const {
    if (rescaled_integral()) return std::to_string(unrescaled / 3);
    return std::to_string(unrescaled) + "/3";
}

InvariantValue cl_invariant_of_boundary(const Word& boundary) {
    const auto core = despur(boundary);
    const auto shadow = shadow_word(boundary);
    const auto area = signed_area(shadow);
    return {class_of(core.base) == Sublattice::one ? -area : area};
}

InvariantValue cl_invariant_path(const Region& r) { return cl_invariant_of_boundary(trace_boundary(r)); }

std::int64_t area_formula(const BenzelParams& p) {
    const auto a = p.a(), b = p.b();
    const auto base = -a * a + 4 * a * b - b * b - a - b;
    return (p.benzel_class() == 1 ? base + 2 : base) / 2;
}

InvariantValue cl_invariant_formula(const BenzelParams& p) {
    const auto a = p.a(), b = p.b();
    switch (p.benzel_class()) {
        case 0: return {(-3 * a * a + 6 * a * b - 3 * b * b + a + b) / 2};
        case 1: return {(a * a - 4 * a * b + b * b + a + b - 2) / 2};
        default: return {(-3 * a * a + 6 * a * b - 3 * b * b - a - b + 2) / 2};
    }
}

namespace {

std::optional<std::int64_t> exact_sqrt(std::int64_t v) {
    if (v < 0) return std::nullopt;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r != v) return std::nullopt;
    return r;
}

}  // namespace

std::optional<std::int64_t> is_pentagonal_pair(std::int64_t a, std::int64_t b) {
    const auto lo = std::min(a, b), hi = std::max(a, b);
    if (lo < 1) return std::nullopt;
    // lo = k(3k-1)/2  <=>  24*lo + 1 = (6k-1)^2
    const auto root = exact_sqrt(24 * lo + 1);
    if (!root || (*root + 1) % 6 != 0) return std::nullopt;
    const auto k = (*root + 1) / 6;
    if (k < 2 || hi != k * (3 * k + 1) / 2) return std::nullopt;
    return k;
}

}  // namespace tribone
