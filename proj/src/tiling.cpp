#include "tribone/tiling.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <unordered_map>
#include <set>
#include <sstream>
#include <thread>

#include "tribone/error.hpp"

namespace tribone {

std::string_view to_string(TileKind k) {
    switch (k) {
        case TileKind::bone_ab: return "boneAB";
        case TileKind::bone_bc: return "boneBC";
        case TileKind::bone_ca: return "boneCA";
        case TileKind::stone_r: return "stoneR";
        case TileKind::stone_l: return "stoneL";
    }
    return "unknown";
}

std::optional<TileKind> parse_tile_kind(std::string_view name) {
    for (auto k : all_tile_kinds) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

std::array<Point, 3> tile_offsets(TileKind k) {
    switch (k) {
        case TileKind::bone_ab: return {Point{0, 0}, Point{1, -1}, Point{2, -2}};
        case TileKind::bone_bc: return {Point{0, 0}, Point{1, 2}, Point{2, 4}};
        case TileKind::bone_ca: return {Point{0, 0}, Point{2, 1}, Point{4, 2}};
        case TileKind::stone_r: return {Point{0, 0}, Point{1, 2}, Point{2, 1}};
        case TileKind::stone_l: return {Point{0, 0}, Point{1, -1}, Point{2, 1}};
    }
    return {};
}

TileKind rotate120(TileKind k) {
    switch (k) {
        case TileKind::bone_ab: return TileKind::bone_bc;
        case TileKind::bone_bc: return TileKind::bone_ca;
        case TileKind::bone_ca: return TileKind::bone_ab;
        default: return k;
    }
}

TileSet TileSet::parse(std::string_view name) {
    if (name == "bones") return bones();
    if (name == "stones") return stones();
    if (name == "stones+bones" || name == "bones+stones") return stones_and_bones();
    throw Error(ErrorCode::parse_error, "unknown tile set '" + std::string(name) + "' (bones, stones, stones+bones)");
}

std::string TileSet::name() const {
    if (*this == bones()) return "bones";
    if (*this == stones()) return "stones";
    if (*this == stones_and_bones()) return "stones+bones";
    std::string out;
    for (auto k : all_tile_kinds) {
        if (!contains(k)) continue;
        if (!out.empty()) out += '+';
        out += to_string(k);
    }
    return out;
}

std::array<Point, 3> cells_of(const Placement& p) {
    auto cells = tile_offsets(p.kind);
    for (auto& c : cells) c += p.anchor;
    return cells;
}

std::string to_string(const Placement& p) {
    return std::string(to_string(p.kind)) + "," + std::to_string(p.anchor.x) + "," + std::to_string(p.anchor.y);
}

Placement parse_placement(std::string_view text) {
    const auto comma = text.find(',');
    if (comma == std::string_view::npos) throw Error(ErrorCode::parse_error, "placement must be kind,x,y");
    const auto kind = parse_tile_kind(text.substr(0, comma));
    if (!kind) throw Error(ErrorCode::parse_error, "unknown tile kind '" + std::string(text.substr(0, comma)) + "'");
    std::istringstream in{std::string(text.substr(comma + 1))};
    long long x = 0, y = 0;
    char sep = 0;
    if (!(in >> x >> sep >> y) || sep != ',' || !in.eof()) {
        throw Error(ErrorCode::parse_error, "placement must be kind,x,y");
    }
    return {*kind, {x, y}};
}

std::vector<Placement> placements(const Region& r, TileSet tiles) {
    std::vector<Placement> out;
    for (auto k : all_tile_kinds) {
        if (!tiles.contains(k)) continue;
        for (auto c : r.cells()) {
            const Placement p{k, c};
            const auto cells = cells_of(p);
            if (std::all_of(cells.begin(), cells.end(), [&r](Point q) { return r.contains(q); })) out.push_back(p);
        }
    }
    return out;
}

Tiling::Tiling(Region r, std::vector<Placement> p) : region(std::move(r)), placements(std::move(p)) {
    std::sort(placements.begin(), placements.end());
}

Validation validate(const Tiling& t) {
    std::set<Point> covered;
    for (const auto& p : t.placements) {
        if (!is_cell_center(p.anchor)) return {false, "anchor of " + to_string(p) + " is not a cell center"};
        for (auto c : cells_of(p)) {
            if (!t.region.contains(c)) return {false, to_string(p) + " covers " + to_string(c) + " outside the region"};
            if (!covered.insert(c).second) return {false, to_string(p) + " overlaps another tile at " + to_string(c)};
        }
    }
    if (covered.size() != t.region.size()) {
        for (auto c : t.region.cells()) {
            if (!covered.contains(c)) return {false, "cell " + to_string(c) + " is not covered"};
        }
    }
    return {};
}

namespace {

void require_valid(const Tiling& t) {
    if (auto v = validate(t); !v) throw Error(ErrorCode::invalid_tiling, "invalid tiling: " + v.message);
}

}  // namespace

std::int64_t stone_balance(const Tiling& t) {
    const auto h = orientation_histogram(t);
    return 3 * (h.stone_r - h.stone_l);
}

OrientationHistogram orientation_histogram(const Tiling& t) {
    require_valid(t);
    OrientationHistogram h;
    for (const auto& p : t.placements) {
        switch (p.kind) {
            case TileKind::bone_ab: ++h.bone_ab; break;
            case TileKind::bone_bc: ++h.bone_bc; break;
            case TileKind::bone_ca: ++h.bone_ca; break;
            case TileKind::stone_r: ++h.stone_r; break;
            case TileKind::stone_l: ++h.stone_l; break;
        }
    }
    return h;
}

// ---------------------------------------------------------------------------
// Enumeration: plain backtracking over the lexicographically first uncovered
// cell, which is necessarily the anchor of the tile covering it.

std::size_t enumerate_tilings(const Region& r, TileSet tiles, std::optional<std::size_t> limit,
                              const std::function<bool(const Tiling&)>& emit) {
    if (limit && *limit == 0) return 0;
    const auto cells = r.cells();
    const auto n = cells.size();
    std::vector<std::vector<std::pair<Placement, std::array<std::size_t, 3>>>> by_anchor(n);
    for (const auto& p : placements(r, tiles)) {
        const auto pc = cells_of(p);
        std::array<std::size_t, 3> idx{};
        for (std::size_t i = 0; i < 3; ++i) idx[i] = *r.index_of(pc[i]);
        by_anchor[idx[0]].push_back({p, idx});
    }
    for (auto& v : by_anchor) std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first < y.first; });

    std::vector<bool> covered(n, false);
    std::vector<Placement> chosen;
    std::size_t emitted = 0;
    bool stop = false;

    std::function<void(std::size_t)> go = [&](std::size_t first) {
        while (first < n && covered[first]) ++first;
        if (first == n) {
            ++emitted;
            if (!emit(Tiling(r, chosen)) || (limit && emitted >= *limit)) stop = true;
            return;
        }
        for (const auto& [p, idx] : by_anchor[first]) {
            if (covered[idx[1]] || covered[idx[2]]) continue;
            for (auto i : idx) covered[i] = true;
            chosen.push_back(p);
            go(first + 1);
            chosen.pop_back();
            for (auto i : idx) covered[i] = false;
            if (stop) return;
        }
    };
    go(0);
    return emitted;
}

std::vector<Tiling> all_tilings(const Region& r, TileSet tiles, std::optional<std::size_t> limit) {
    std::vector<Tiling> out;
    enumerate_tilings(r, tiles, limit, [&out](const Tiling& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Counting: layered frontier dynamic programming. Cells are swept in
// sweep_key order; a state is the occupancy of the next W cells, bit 0 being
// the cell about to be decided. Each layer is a sorted array of distinct
// states with their multiplicities.

std::pair<std::int64_t, std::int64_t> sweep_key(Point cell) { return {2 * cell.x - cell.y, cell.y}; }

namespace {

using u128 = unsigned __int128;

struct CountOverflow {};

template <class C>
void add_to(C& acc, const C& v) {
    if constexpr (std::is_same_v<C, TilingCount>) {
        acc += v;
    } else {
        const C before = acc;
        acc += v;
        if (acc < before) throw CountOverflow{};
    }
}

template <class M>
struct Table {
    std::size_t window = 0;
    std::vector<std::vector<M>> by_start;  // placement masks relative to their first cell
};

template <class M, class C>
struct Entry {
    M mask;
    C count;
};

std::size_t memo_limit_bytes(const CountOptions& o) {
    std::size_t mb = o.memo_limit_mb;
    if (mb == 0) {
        mb = CountOptions::default_memo_limit_mb;
        if (const char* env = std::getenv("TRIBONE_MEMO_LIMIT_MB")) {
            char* end = nullptr;
            const auto v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) mb = static_cast<std::size_t>(v);
        }
    }
    return mb * 1024 * 1024;
}

[[noreturn]] void out_of_memory(std::size_t cell, std::size_t states, std::size_t limit) {
    throw Error(ErrorCode::resource_limit, "count: frontier at cell " + std::to_string(cell) + " needs " +
                                               std::to_string(states) + " states, over the " +
                                               std::to_string(limit / (1024 * 1024)) + " MB memo limit");
}

template <class M, class C>
void sort_merge(std::vector<Entry<M, C>>& v) {
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.mask < y.mask; });
    std::size_t w = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (w > 0 && v[w - 1].mask == v[i].mask) {
            add_to(v[w - 1].count, v[i].count);
        } else {
            if (w != i) v[w] = std::move(v[i]);
            ++w;
        }
    }
    v.resize(w);
}

template <class M, class C>
void expand(const Entry<M, C>* begin, const Entry<M, C>* end, const std::vector<M>& moves,
            std::vector<Entry<M, C>>& out) {
    for (auto e = begin; e != end; ++e) {
        if (e->mask & 1) {
            out.push_back({e->mask >> 1, e->count});
            continue;
        }
        for (auto m : moves) {
            if ((e->mask & m) == 0) out.push_back({(e->mask | m) >> 1, e->count});
        }
    }
}

template <class M>
std::size_t successor_count(M mask, const std::vector<M>& moves) {
    if (mask & 1) return 1;
    std::size_t k = 0;
    for (auto m : moves) k += (mask & m) == 0;
    return k;
}

using Clock = std::chrono::steady_clock;

void check_deadline(const CountOptions& options, Clock::time_point started, std::size_t cell) {
    if (options.time_limit_seconds <= 0) return;
    const std::chrono::duration<double> spent = Clock::now() - started;
    if (spent.count() > options.time_limit_seconds) {
        throw Error(ErrorCode::resource_limit, "count: time budget of " + std::to_string(options.time_limit_seconds) +
                                                   " s exhausted at cell " + std::to_string(cell));
    }
}

template <class M, class C>
C run_frontier(const Table<M>& table, const CountOptions& options, CountStats& stats, Clock::time_point started) {
    using E = Entry<M, C>;
    const auto limit = memo_limit_bytes(options);
    const unsigned threads = std::max(1u, options.threads);
    std::vector<E> cur{E{M{0}, C{1}}};
    const auto n = table.by_start.size();
    for (std::size_t i = 0; i < n; ++i) {
        check_deadline(options, started, i);
        const auto& moves = table.by_start[i];
        const std::size_t parts = std::min<std::size_t>(threads, std::max<std::size_t>(1, cur.size() / 4096));
        std::vector<std::size_t> bounds(parts + 1);
        for (std::size_t p = 0; p <= parts; ++p) bounds[p] = cur.size() * p / parts;

        std::vector<std::size_t> sizes(parts, 0);
        auto count_part = [&](std::size_t p) {
            std::size_t k = 0;
            for (auto j = bounds[p]; j < bounds[p + 1]; ++j) k += successor_count(cur[j].mask, moves);
            sizes[p] = k;
        };
        std::vector<std::vector<E>> outs(parts);
        auto build_part = [&](std::size_t p) {
            outs[p].reserve(sizes[p]);
            expand(cur.data() + bounds[p], cur.data() + bounds[p + 1], moves, outs[p]);
            sort_merge(outs[p]);
        };
        auto run = [&](auto&& f) {
            if (parts == 1) {
                f(0);
                return;
            }
            std::vector<std::jthread> pool;
            std::vector<std::exception_ptr> errors(parts);
            for (std::size_t p = 0; p < parts; ++p) {
                pool.emplace_back([&, p] {
                    try {
                        f(p);
                    } catch (...) {
                        errors[p] = std::current_exception();
                    }
                });
            }
            pool.clear();
            for (auto& e : errors) {
                if (e) std::rethrow_exception(e);
            }
        };

        run(count_part);
        std::size_t total = 0;
        for (auto s : sizes) total += s;
        const auto live = (cur.size() + total) * sizeof(E);
        if (live > limit) out_of_memory(i, total, limit);
        stats.peak_bytes = std::max(stats.peak_bytes, live);
        run(build_part);
        std::vector<E>().swap(cur);

        if (parts == 1) {
            cur = std::move(outs[0]);
        } else {
            std::size_t merged_bound = 0;
            for (auto& o : outs) merged_bound += o.size();
            const auto merge_live = 2 * merged_bound * sizeof(E);
            if (merge_live > limit) out_of_memory(i, merged_bound, limit);
            stats.peak_bytes = std::max(stats.peak_bytes, merge_live);
            cur.reserve(merged_bound);
            // k-way merge of sorted, locally merged parts
            std::vector<std::size_t> pos(parts, 0);
            while (true) {
                std::optional<M> best;
                for (std::size_t p = 0; p < parts; ++p) {
                    if (pos[p] < outs[p].size() && (!best || outs[p][pos[p]].mask < *best)) best = outs[p][pos[p]].mask;
                }
                if (!best) break;
                E acc{*best, C{0}};
                for (std::size_t p = 0; p < parts; ++p) {
                    if (pos[p] < outs[p].size() && outs[p][pos[p]].mask == *best) {
                        add_to(acc.count, outs[p][pos[p]].count);
                        ++pos[p];
                    }
                }
                cur.push_back(std::move(acc));
            }
        }
        stats.peak_states = std::max(stats.peak_states, cur.size());
        if (cur.empty()) return C{0};
    }
    for (const auto& e : cur) {
        if (e.mask == 0) return e.count;
    }
    return C{0};
}

template <class M>
Table<M> build_table(const std::vector<std::vector<std::vector<std::size_t>>>& offsets, std::size_t window) {
    Table<M> t;
    t.window = window;
    t.by_start.resize(offsets.size());
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        for (const auto& rel : offsets[i]) {
            M m{0};
            for (auto d : rel) m |= M{1} << d;
            t.by_start[i].push_back(m);
        }
    }
    return t;
}

template <class M>
TilingCount count_with(const Table<M>& table, const CountOptions& options, CountStats& stats) {
    const auto started = Clock::now();
    if (options.force_wide) {
        stats.wide_counts = true;
        return run_frontier<M, TilingCount>(table, options, stats, started);
    }
    try {
        return TilingCount(run_frontier<M, std::uint64_t>(table, options, stats, started));
    } catch (const CountOverflow&) {
    }
    try {
        const u128 v = run_frontier<M, u128>(table, options, stats, started);
        TilingCount out = static_cast<std::uint64_t>(v >> 64);
        out <<= 64;
        out += static_cast<std::uint64_t>(v);
        return out;
    } catch (const CountOverflow&) {
    }
    stats.wide_counts = true;
    return run_frontier<M, TilingCount>(table, options, stats, started);
}

}  // namespace

TilingCount count_tilings(const Region& r, TileSet tiles, const CountOptions& options, CountStats* stats_out) {
    CountStats stats;
    stats.cells = r.size();
    if (r.empty()) {
        if (stats_out) *stats_out = stats;
        return 1;
    }
    std::vector<Point> order(r.cells().begin(), r.cells().end());
    std::sort(order.begin(), order.end(), [](Point p, Point q) { return sweep_key(p) < sweep_key(q); });
    std::unordered_map<Point, std::size_t> index;
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = i;

    // Relative bit offsets of every placement, grouped by its first swept cell.
    std::vector<std::vector<std::vector<std::size_t>>> offsets(order.size());
    std::size_t window = 1;
    for (const auto& p : placements(r, tiles)) {
        std::vector<std::size_t> idx;
        for (auto c : cells_of(p)) idx.push_back(index.at(c));
        std::sort(idx.begin(), idx.end());
        std::vector<std::size_t> rel;
        for (auto v : idx) rel.push_back(v - idx[0]);
        window = std::max(window, rel.back() + 1);
        offsets[idx[0]].push_back(std::move(rel));
    }
    stats.window = window;

    TilingCount result;
    if (window <= 64) {
        result = count_with(build_table<std::uint64_t>(offsets, window), options, stats);
    } else if (window <= 128) {
        result = count_with(build_table<u128>(offsets, window), options, stats);
    } else {
        throw Error(ErrorCode::resource_limit,
                    "count: sweep window of " + std::to_string(window) + " cells exceeds the 128-cell limit");
    }
    if (stats_out) *stats_out = stats;
    return result;
}

TilingCount placement_frequency(const Region& r, TileSet tiles, const Placement& p, const CountOptions& options) {
    const auto cells = cells_of(p);
    if (!tiles.contains(p.kind)) {
        throw Error(ErrorCode::invalid_placement, to_string(p) + " is not in the tile set " + tiles.name());
    }
    for (auto c : cells) {
        if (!r.contains(c)) {
            throw Error(ErrorCode::invalid_placement, to_string(p) + " covers " + to_string(c) + " outside the region");
        }
    }
    return count_tilings(r.without(cells), tiles, options);
}

}  // namespace tribone
