#include "stc/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "stc/planar.hpp"

namespace stc {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidParams, what); }

void need_sizes(const FamilySpec& s, std::size_t count, int min_value)
{
    if (s.sizes.size() != count) bad(to_string(s.family) + " takes " + std::to_string(count) + " size parameter(s)");
    for (int v : s.sizes)
        if (v < min_value) bad(to_string(s.family) + " sizes must be at least " + std::to_string(min_value));
}

// Collects edges and deduplicated points, then relabels vertices in
// lexicographic (x, y) order.
class PlaneBuilder {
public:
    int point(double x, double y)
    {
        const auto key = std::make_pair(std::llround(x * 1e6), std::llround(y * 1e6));
        auto [it, fresh] = index_.try_emplace(key, static_cast<int>(pts_.size()));
        if (fresh) pts_.push_back({x, y});
        return it->second;
    }

    void edge(int a, int b)
    {
        if (a == b) return;
        edges_.insert({std::min(a, b), std::max(a, b)});
    }

    WeightedGraph build() const
    {
        const int n = static_cast<int>(pts_.size());
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const Point& p = pts_[static_cast<std::size_t>(a)];
            const Point& q = pts_[static_cast<std::size_t>(b)];
            return std::tie(p.x, p.y) < std::tie(q.x, q.y);
        });
        std::vector<int> label(static_cast<std::size_t>(n));
        std::vector<Point> coords(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            label[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
            coords[static_cast<std::size_t>(i)] = pts_[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])];
        }
        std::vector<std::pair<int, int>> relabeled;
        for (auto [a, b] : edges_) {
            const int x = label[static_cast<std::size_t>(a)];
            const int y = label[static_cast<std::size_t>(b)];
            relabeled.push_back({std::min(x, y), std::max(x, y)});
        }
        std::sort(relabeled.begin(), relabeled.end());
        std::vector<Edge> out;
        for (auto [a, b] : relabeled) out.push_back({a, b, 1.0});
        return WeightedGraph(n, std::move(out)).with_coordinates(std::move(coords));
    }

private:
    std::map<std::pair<long long, long long>, int> index_;
    std::vector<Point> pts_;
    std::set<std::pair<int, int>> edges_;
};

WeightedGraph complete(int n)
{
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j, 1.0});
    return WeightedGraph(n, std::move(e));
}

WeightedGraph multipartite(const std::vector<int>& parts)
{
    std::vector<int> part_of;
    for (std::size_t k = 0; k < parts.size(); ++k) part_of.insert(part_of.end(), static_cast<std::size_t>(parts[k]), static_cast<int>(k));
    const int n = static_cast<int>(part_of.size());
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)]) e.push_back({i, j, 1.0});
    return WeightedGraph(n, std::move(e));
}

WeightedGraph hypercube(int d)
{
    const int n = 1 << d;
    std::vector<Edge> e;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b) {
            const int u = v ^ (1 << b);
            if (v < u) e.push_back({v, u, 1.0});
        }
    return WeightedGraph(n, std::move(e));
}

WeightedGraph rect_grid(int m, int n)
{
    PlaneBuilder b;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const int v = b.point(i, j);
            if (i + 1 < m) b.edge(v, b.point(i + 1, j));
            if (j + 1 < n) b.edge(v, b.point(i, j + 1));
        }
    return b.build();
}

WeightedGraph tri_grid(int n)
{
    PlaneBuilder b;
    const double h = std::sqrt(3.0) / 2.0;
    auto at = [&](int i, int j) { return b.point(j - i / 2.0, i * h); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            const int v = at(i, j);
            if (j < i) b.edge(v, at(i, j + 1));
            if (i + 1 < n) {
                b.edge(v, at(i + 1, j));
                b.edge(v, at(i + 1, j + 1));
            }
        }
    return b.build();
}

void hexagon(PlaneBuilder& b, double cx, double cy)
{
    const double pi = std::acos(-1.0);
    int corner[6];
    for (int k = 0; k < 6; ++k) {
        const double a = pi / 6.0 + k * pi / 3.0;
        corner[k] = b.point(cx + std::cos(a), cy + std::sin(a));
    }
    for (int k = 0; k < 6; ++k) b.edge(corner[k], corner[(k + 1) % 6]);
}

WeightedGraph hex_rect(int m, int n)
{
    PlaneBuilder b;
    const double w = std::sqrt(3.0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) hexagon(b, w * c + (r % 2 ? w / 2.0 : 0.0), 1.5 * r);
    return b.build();
}

WeightedGraph hex_tri(int n)
{
    PlaneBuilder b;
    const double w = std::sqrt(3.0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n - r; ++c) hexagon(b, w * c + r * w / 2.0, 1.5 * r);
    return b.build();
}

WeightedGraph torus2(int m, int n)
{
    std::set<std::pair<int, int>> s;
    auto id = [&](int i, int j) { return ((i % m + m) % m) * n + (j % n + n) % n; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            const int v = id(i, j);
            for (int u : {id(i + 1, j), id(i, j + 1)}) s.insert({std::min(u, v), std::max(u, v)});
        }
    std::vector<Edge> e;
    for (auto [a, c] : s) e.push_back({a, c, 1.0});
    return WeightedGraph(m * n, std::move(e));
}

WeightedGraph grid3(int k, bool wrap)
{
    std::set<std::pair<int, int>> s;
    auto id = [&](int x, int y, int z) { return (x * k + y) * k + z; };
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            for (int z = 0; z < k; ++z) {
                const int v = id(x, y, z);
                const int nb[3][3] = {{x + 1, y, z}, {x, y + 1, z}, {x, y, z + 1}};
                for (const auto& q : nb) {
                    if (!wrap && (q[0] == k || q[1] == k || q[2] == k)) continue;
                    const int u = id(q[0] % k, q[1] % k, q[2] % k);
                    s.insert({std::min(u, v), std::max(u, v)});
                }
            }
    std::vector<Edge> e;
    for (auto [a, c] : s) e.push_back({a, c, 1.0});
    return WeightedGraph(k * k * k, std::move(e));
}

WeightedGraph pu_graph(int n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point> pts;
    std::vector<std::pair<int, int>> edges;
    for (int k = 0; k < n; ++k) {
        const Point q{unit(rng), unit(rng)};
        std::vector<std::pair<int, int>> added;
        for (int v = 0; v < k; ++v) {
            const Point a = pts[static_cast<std::size_t>(v)];
            bool ok = true;
            for (auto [x, y] : edges) {
                if (x == v || y == v) {
                    const Point c = pts[static_cast<std::size_t>(x == v ? y : x)];
                    if (segments_conflict(a, q, a, c, true)) ok = false;
                } else if (segments_conflict(a, q, pts[static_cast<std::size_t>(x)], pts[static_cast<std::size_t>(y)], false)) {
                    ok = false;
                }
                if (!ok) break;
            }
            for (int u = 0; ok && u < k; ++u) {
                if (u == v) continue;
                // a vertex lying on the segment would split it
                if (segments_conflict(a, q, pts[static_cast<std::size_t>(u)], pts[static_cast<std::size_t>(u)], false)) ok = false;
            }
            if (ok) added.push_back({v, k});
        }
        pts.push_back(q);
        edges.insert(edges.end(), added.begin(), added.end());
    }
    PlaneBuilder b;
    std::vector<int> id;
    for (const Point& p : pts) id.push_back(b.point(p.x, p.y));
    for (auto [x, y] : edges) b.edge(id[static_cast<std::size_t>(x)], id[static_cast<std::size_t>(y)]);
    return b.build();
}

WeightedGraph euclidean(const WeightedGraph& g)
{
    if (!g.has_coordinates()) throw Error(ErrorCode::MissingCoordinates, "euclidean weights need coordinates");
    const auto c = g.coordinates();
    std::vector<double> w;
    for (const Edge& e : g.edges()) {
        const Point a = c[static_cast<std::size_t>(e.u)];
        const Point b = c[static_cast<std::size_t>(e.v)];
        w.push_back(std::hypot(a.x - b.x, a.y - b.y));
    }
    return g.with_weights(w);
}

WeightedGraph apply_weights(const WeightedGraph& g, WeightMode mode)
{
    switch (mode) {
    case WeightMode::Unit: return g;
    case WeightMode::Euclidean: return euclidean(g);
    default: return label_weights(g, mode);
    }
}

std::string join(const std::vector<int>& v, const char* sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

// value/count pairs aggregated under a norm
double norm_of(const std::vector<std::pair<double, double>>& terms, Norm p)
{
    if (p.is_infinite()) {
        double best = 0.0;
        for (auto [v, c] : terms)
            if (c > 0) best = std::max(best, v);
        return best;
    }
    long double s = 0;
    for (auto [v, c] : terms) s += c * std::pow(static_cast<long double>(v), p.order());
    return static_cast<double>(std::pow(s, 1.0L / p.order()));
}

std::vector<std::pair<double, double>> base_terms(std::span<const int> parts)
{
    const int total = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<std::pair<double, double>> t;
    for (int n : parts) t.push_back({double(total - n), double(n)});
    return t;
}

void check_parts(std::span<const int> parts, int i, int j)
{
    const int k = static_cast<int>(parts.size());
    if (!(1 <= j && j < i && i <= k)) bad("need 1 <= j < i <= k");
}

}  // namespace

std::string to_string(Family f)
{
    switch (f) {
    case Family::Complete: return "complete";
    case Family::Multipartite: return "multipartite";
    case Family::Hypercube: return "hypercube";
    case Family::RectGrid: return "rect_grid";
    case Family::TriGrid: return "tri_grid";
    case Family::HexTri: return "hex_tri";
    case Family::HexRect: return "hex_rect";
    case Family::Torus2: return "torus2";
    case Family::Torus3: return "torus3";
    case Family::CubeGrid: return "cube_grid";
    case Family::Gnp: return "gnp";
    case Family::Pu: return "pu";
    }
    return "?";
}

std::string to_string(WeightMode w)
{
    switch (w) {
    case WeightMode::Unit: return "unit";
    case WeightMode::Plus: return "plus";
    case WeightMode::Minus: return "minus";
    case WeightMode::Euclidean: return "euclidean";
    }
    return "?";
}

std::string to_string(FormulaRole r)
{
    switch (r) {
    case FormulaRole::Exact: return "exact";
    case FormulaRole::UpperBound: return "upper_bound";
    case FormulaRole::Conjecture: return "conjecture";
    }
    return "?";
}

Family parse_family(const std::string& text)
{
    static const std::map<std::string, Family> names = {
        {"complete", Family::Complete},   {"k", Family::Complete},
        {"multipartite", Family::Multipartite}, {"kmn", Family::Multipartite}, {"bipartite", Family::Multipartite},
        {"hypercube", Family::Hypercube}, {"h", Family::Hypercube},
        {"rect_grid", Family::RectGrid},  {"r", Family::RectGrid},
        {"tri_grid", Family::TriGrid},    {"t", Family::TriGrid},
        {"hex_tri", Family::HexTri},      {"hex_rect", Family::HexRect},
        {"torus2", Family::Torus2},       {"torus3", Family::Torus3},
        {"cube_grid", Family::CubeGrid},  {"gnp", Family::Gnp},
        {"pu", Family::Pu},
    };
    auto it = names.find(text);
    if (it == names.end()) bad("unknown family '" + text + "'");
    return it->second;
}

WeightMode parse_weight_mode(const std::string& text)
{
    if (text == "unit") return WeightMode::Unit;
    if (text == "plus" || text == "+") return WeightMode::Plus;
    if (text == "minus" || text == "-") return WeightMode::Minus;
    if (text == "euclidean") return WeightMode::Euclidean;
    bad("unknown weight mode '" + text + "'");
}

bool is_planar_family(Family f)
{
    return f == Family::RectGrid || f == Family::TriGrid || f == Family::HexTri || f == Family::HexRect || f == Family::Pu;
}

std::string FamilySpec::name() const
{
    std::string w;
    if (weights == WeightMode::Plus) w = "^{w+}";
    if (weights == WeightMode::Minus) w = "^{w-}";
    if (weights == WeightMode::Euclidean) w = "^{d}";
    auto idx = [&](const std::string& base) {
        if (sizes.size() == 1) return base + w + "_" + std::to_string(sizes[0]);
        return base + w + "_{" + join(sizes, ",") + "}";
    };
    switch (family) {
    case Family::Complete: return idx("K");
    case Family::Multipartite: return idx("K");
    case Family::Hypercube: return idx("H");
    case Family::RectGrid: return idx("R");
    case Family::TriGrid: return idx("T");
    case Family::HexTri:
    case Family::HexRect: return idx("Hex");
    case Family::Torus2: return "Z_" + std::to_string(sizes.at(0)) + "xZ_" + std::to_string(sizes.at(1)) + w;
    case Family::Torus3: return "Z_" + std::to_string(sizes.at(0)) + "^3" + w;
    case Family::CubeGrid: return "C_{" + join({sizes.at(0), sizes.at(0), sizes.at(0)}, ",") + "}" + w;
    case Family::Gnp: {
        std::ostringstream s;
        s << "G(" << sizes.at(0) << "," << probability << ")" << w;
        return s.str();
    }
    case Family::Pu: return idx("PU");
    }
    return "?";
}

GnpSample sample_gnp(int n, double p, std::uint64_t seed)
{
    if (n < 2) bad("gnp needs n >= 2");
    if (!(p > 0.0 && p <= 1.0)) bad("gnp probability must lie in (0, 1]");
    constexpr int kAttempts = 100;
    for (int a = 0; a < kAttempts; ++a) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(a);
        std::mt19937_64 rng(s);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (unit(rng) < p) e.push_back({i, j, 1.0});
        WeightedGraph g(n, std::move(e));
        if (g.connected()) return {std::move(g), s, a};
    }
    throw Error(ErrorCode::DisconnectedSample, "no connected sample in " + std::to_string(kAttempts) + " seeds");
}

WeightedGraph generate(const FamilySpec& spec)
{
    WeightedGraph g;
    switch (spec.family) {
    case Family::Complete:
        need_sizes(spec, 1, 2);
        g = complete(spec.sizes[0]);
        break;
    case Family::Multipartite:
        if (spec.sizes.size() < 2) bad("multipartite needs at least two parts");
        for (int v : spec.sizes)
            if (v < 1) bad("part sizes must be positive");
        if (!std::is_sorted(spec.sizes.begin(), spec.sizes.end(), std::greater<>())) bad("parts must be sorted descending");
        g = multipartite(spec.sizes);
        break;
    case Family::Hypercube:
        need_sizes(spec, 1, 1);
        if (spec.sizes[0] > 20) bad("hypercube dimension above 20");
        g = hypercube(spec.sizes[0]);
        break;
    case Family::RectGrid:
        need_sizes(spec, 2, 1);
        if (spec.sizes[0] * spec.sizes[1] < 2) bad("grid needs two nodes");
        g = rect_grid(spec.sizes[0], spec.sizes[1]);
        break;
    case Family::TriGrid:
        need_sizes(spec, 1, 2);
        g = tri_grid(spec.sizes[0]);
        break;
    case Family::HexTri:
        need_sizes(spec, 1, 1);
        g = hex_tri(spec.sizes[0]);
        break;
    case Family::HexRect:
        need_sizes(spec, 2, 1);
        g = hex_rect(spec.sizes[0], spec.sizes[1]);
        break;
    case Family::Torus2:
        need_sizes(spec, 2, 3);
        g = torus2(spec.sizes[0], spec.sizes[1]);
        break;
    case Family::Torus3:
        need_sizes(spec, 1, 3);
        g = grid3(spec.sizes[0], true);
        break;
    case Family::CubeGrid:
        need_sizes(spec, 1, 2);
        g = grid3(spec.sizes[0], false);
        break;
    case Family::Gnp:
        need_sizes(spec, 1, 2);
        g = sample_gnp(spec.sizes[0], spec.probability, spec.seed).graph;
        break;
    case Family::Pu:
        need_sizes(spec, 1, 2);
        g = pu_graph(spec.sizes[0], spec.seed);
        break;
    }
    return apply_weights(g, spec.weights);
}

WeightedGraph label_weights(const WeightedGraph& graph, WeightMode mode, std::span<const double> labels)
{
    if (mode != WeightMode::Plus && mode != WeightMode::Minus) bad("label weights are plus or minus");
    if (!labels.empty() && static_cast<int>(labels.size()) != graph.vertex_count()) bad("one label per vertex");
    auto label = [&](VertexId v) { return labels.empty() ? static_cast<double>(v) : labels[static_cast<std::size_t>(v)]; };
    std::vector<double> w;
    for (const Edge& e : graph.edges()) {
        const double x = mode == WeightMode::Plus ? label(e.u) + label(e.v) : std::abs(label(e.u) - label(e.v));
        if (!(x > 0.0))
            throw Error(ErrorCode::ZeroWeight, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " gets weight " + std::to_string(x));
        w.push_back(x);
    }
    return graph.with_weights(w);
}

SpanningTree named_tree(const FamilySpec& spec, const WeightedGraph& graph, const TreeRequest& req)
{
    auto mismatch = [](const std::string& what) -> SpanningTree { throw Error(ErrorCode::KindFamilyMismatch, what); };
    std::vector<EdgeId> ids;
    auto add = [&](int a, int b) {
        const EdgeId e = graph.find_edge(a, b);
        if (e == kNoEdge) throw Error(ErrorCode::KindFamilyMismatch, "graph lacks edge " + std::to_string(a) + "-" + std::to_string(b));
        ids.push_back(e);
    };

    if (req.kind == TreeKind::Radial) {
        const int n = graph.vertex_count();
        if (req.vertex < 0 || req.vertex >= n) bad("radial centre out of range");
        if (graph.degree(req.vertex) != n - 1) return mismatch("radial centre is not adjacent to every vertex");
        for (int v = 0; v < n; ++v)
            if (v != req.vertex) add(req.vertex, v);
        return validate_tree(graph, ids);
    }

    if (req.kind == TreeKind::HypercubeDoubling) {
        if (spec.family != Family::Hypercube) return mismatch("doubling tree needs a hypercube");
        const int d = spec.sizes.at(0);
        for (int b = 0; b < d; ++b)
            for (int base = 0; base < (1 << d); base += 1 << (b + 1)) add(base, base + (1 << b));
        std::sort(ids.begin(), ids.end());
        return validate_tree(graph, ids);
    }

    if (spec.family != Family::Multipartite) return mismatch("named tree needs a complete multipartite graph");
    const auto& parts = spec.sizes;
    std::vector<int> first(parts.size() + 1, 0);
    for (std::size_t k = 0; k < parts.size(); ++k) first[k + 1] = first[k] + parts[k];
    const int n = first.back();
    auto part = [&](int idx) { return std::make_pair(first[static_cast<std::size_t>(idx - 1)], first[static_cast<std::size_t>(idx)]); };

    int i = req.i;
    int j = req.j;
    if (req.kind == TreeKind::TStar) {
        if (parts.size() != 2) return mismatch("T_star needs a bipartite graph");
        i = 2;
        j = 1;
    }
    check_parts(parts, i, j);
    const auto [ib, ie] = part(i);
    const auto [jb, je] = part(j);
    const int x = ib;

    if (req.kind == TreeKind::TS || req.kind == TreeKind::TStar) {
        const int y = je - 1;
        for (int v = 0; v < n; ++v) {
            if (v >= ib && v < ie) continue;
            if (v == y) continue;
            add(x, v);
        }
        for (int v = ib; v < ie; ++v) add(y, v);
    } else {
        if (parts[static_cast<std::size_t>(i - 1)] - 1 > parts[static_cast<std::size_t>(j - 1)]) return mismatch("X_j too small for the matching");
        for (int v = 0; v < n; ++v)
            if (v < ib || v >= ie) add(x, v);
        for (int t = 1; t < ie - ib; ++t) add(ib + t, jb + t - 1);
    }
    return validate_tree(graph, ids);
}

double multipartite_ts_value(std::span<const int> parts, int i, int j, Norm p)
{
    check_parts(parts, i, j);
    const int total = std::accumulate(parts.begin(), parts.end(), 0);
    const double ni = parts[static_cast<std::size_t>(i - 1)];
    const double nj = parts[static_cast<std::size_t>(j - 1)];
    auto t = base_terms(parts);
    t.push_back({total - nj, -1});
    t.push_back({total - ni, -1});
    t.push_back({ni * (total - ni - 1) + 2 - nj, 1});
    // merge so that cancelled terms drop out of the max
    std::map<double, double> m;
    for (auto [v, c] : t) m[v] += c;
    return norm_of({m.begin(), m.end()}, p);
}

double multipartite_tm_value(std::span<const int> parts, int i, int j, Norm p)
{
    check_parts(parts, i, j);
    const int total = std::accumulate(parts.begin(), parts.end(), 0);
    const double ni = parts[static_cast<std::size_t>(i - 1)];
    const double nj = parts[static_cast<std::size_t>(j - 1)];
    auto t = base_terms(parts);
    t.push_back({total - nj, -(ni - 1)});
    t.push_back({total - ni, -1});
    t.push_back({2 * total - ni - nj - 2, ni - 1});
    std::map<double, double> m;
    for (auto [v, c] : t) m[v] += c;
    return norm_of({m.begin(), m.end()}, p);
}

FormulaValue closed_form(const FamilySpec& spec, Norm p)
{
    auto none = [&]() -> FormulaValue {
        throw Error(ErrorCode::NoFormula, "no closed form for " + spec.name() + " at p=" + p.to_string());
    };
    const auto& s = spec.sizes;
    const bool inf = p.is_infinite();
    const bool one = p.order() == 1;

    if (spec.weights == WeightMode::Euclidean) return none();
    if (spec.weights != WeightMode::Unit) {
        if (!inf && !one) return none();
        const bool plus = spec.weights == WeightMode::Plus;
        const FormulaRole ub = FormulaRole::UpperBound;
        if (spec.family == Family::Complete) {
            const double n = s.at(0);
            if (plus) return {inf ? 3 * (n - 1) * (n - 2) / 2 + 1 : n * n * n - 7 * n * n / 2 + 9 * n / 2 - 2, ub};
            return {inf ? n * (n - 1) / 2 : n * (n - 1) / 2 + n * (n - 1) * (n - 2) / 3, ub};
        }
        if (spec.family != Family::Multipartite) return none();
        if (s.size() == 2 && s[1] >= 2) {
            const double n = s[0];
            const double m = s[1];
            if (plus)
                return {inf ? 3 * m * n + (m * m - 7 * m + 3 * n * n - 13 * n) / 2 + 6
                            : (9 * n * n * m + 3 * n * m * m) / 2 - m * m - 9 * m * n + 5 * m - 3 * n * n + 7 * n - 4,
                        ub};
            return {inf ? 2 * m * n + (m * m + 2 * m * n - 5 * m + n * n - 7 * n) / 2 + 4
                        : 3 * (n * n * m + n * m * m) / 2 - m * m - n * n - 4 * m * n + 3 * n + 3 * m - 2,
                    ub};
        }
        if (s.back() != 1 || s.size() < 3) return none();
        // parts n_1..n_{k-1} followed by the singleton
        const std::size_t k = s.size();
        const double N = std::accumulate(s.begin(), s.end(), 0);
        const double last = s[k - 2];
        auto nn = [&](std::size_t idx) { return idx == 0 ? 0.0 : double(s[idx - 1]); };  // n_0 = 0
        auto prefix = [&](std::size_t idx) {  // n_0 + ... + n_idx
            double t = 0;
            for (std::size_t a = 1; a <= idx; ++a) t += nn(a);
            return t;
        };
        auto suffix = [&](std::size_t idx) {  // n_{idx} + ... + n_{k-1}
            double t = 0;
            for (std::size_t a = idx; a <= k - 1; ++a) t += nn(a);
            return t;
        };
        if (inf) {
            const double a = N - last - 1;
            if (plus) return {(N - 2) * (N - last + 1) + a * (a - 1) / 2 + 1, ub};
            return {(N - 2) * a - a * (a - 1) / 2 + 1, ub};
        }
        double sum = 0;
        for (std::size_t i = 1; i + 2 <= k; ++i) {
            if (plus)
                sum += (4 * prefix(i - 1) + 3 * nn(i) + suffix(i + 1) - 1) * nn(i) * suffix(i + 1);
            else
                sum += nn(i) * (N - prefix(i) - 1) * (N - prefix(i - 1) - 1);
        }
        if (plus) return {(N - 1) * (3 * N - 4) / 2 + sum, ub};
        return {(N - 1) * N / 2 + sum, ub};
    }

    switch (spec.family) {
    case Family::Complete: {
        const double n = s.at(0);
        if (inf) return {n - 1, FormulaRole::Exact};
        return {std::pow(n - 1, (p.order() + 1.0) / p.order()), FormulaRole::Exact};
    }
    case Family::Multipartite: {
        const std::size_t k = s.size();
        const double N = std::accumulate(s.begin(), s.end(), 0);
        if (s.back() == 1) {
            // radial tree at the singleton
            std::vector<std::pair<double, double>> t;
            for (std::size_t i = 0; i + 1 < k; ++i) t.push_back({N - s[i], double(s[i])});
            return {norm_of(t, p), FormulaRole::Exact};
        }
        if (inf) return {2 * N - s[0] - s[1] - 2, FormulaRole::Exact};
        if (one) {
            double pairs = 0;
            for (std::size_t i = 0; i + 1 < k; ++i)
                for (std::size_t j = i + 1; j + 1 < k; ++j) pairs += double(s[i]) * s[j];
            const double nk = s.back();
            return {2 * pairs + 3 * (nk - 1) * (N - nk - 1) + N - 1, FormulaRole::Exact};
        }
        const int kk = static_cast<int>(k);
        return {std::min(multipartite_tm_value(s, kk, 1, p), multipartite_tm_value(s, 2, 1, p)), FormulaRole::UpperBound};
    }
    case Family::Hypercube: {
        const int d = s.at(0);
        if (inf && d < 7) return {std::ldexp(1.0, d - 1), FormulaRole::Exact};
        if (one) return {d * (d - 1) * std::ldexp(1.0, d - 2), FormulaRole::Conjecture};
        return none();
    }
    case Family::RectGrid: {
        if (!inf) return none();
        const int a = std::min(s.at(0), s.at(1));
        const int b = std::max(s.at(0), s.at(1));
        if (a < 3) return none();
        if (b > a && a > 3 && a % 2 == 0) return {double(a + 1), FormulaRole::Exact};
        return {double(a), FormulaRole::Exact};
    }
    case Family::TriGrid: {
        if (!inf || s.at(0) < 3) return none();
        return {2.0 * (2 * s[0] / 3), FormulaRole::Exact};
    }
    case Family::HexTri: {
        if (!inf || s.at(0) < 2) return none();
        const int n = s[0];
        return {3.0 + (n - 1) / 3 + (n - 2) / 3, FormulaRole::UpperBound};
    }
    case Family::HexRect: {
        if (!inf) return none();
        const int n = std::min(s.at(0), s.at(1));
        return {1.0 + 2 * ((n + 1) / 2), FormulaRole::UpperBound};
    }
    case Family::Torus2:
        if (!inf) return none();
        return {2.0 * std::min(s.at(0), s.at(1)), FormulaRole::Exact};
    default: return none();
    }
}

}  // namespace stc
