#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

namespace adjmin {

// Lattice point (i,j). Comparisons are row-major: by j, then i, so that
// sorting vertices or cells yields the fixed (y,x) order used everywhere
// for reproducible output.
struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
    friend bool operator<(const Point& p, const Point& q) {
        return p.y != q.y ? p.y < q.y : p.x < q.x;
    }
    Point operator+(const Point& q) const { return {x + q.x, y + q.y}; }
    Point operator-(const Point& q) const { return {x - q.x, y - q.y}; }
};

// An edge of a cell, endpoints stored sorted.
struct Edge {
    Point u, v;
    Edge(Point a, Point b) {
        if (b < a) std::swap(a, b);
        u = a;
        v = b;
    }
    friend bool operator==(const Edge&, const Edge&) = default;
    friend bool operator<(const Edge& e, const Edge& f) {
        return e.u == f.u ? e.v < f.v : e.u < f.u;
    }
};

// Unit cell [(i,j),(i+1,j+1)], identified by its lower-left corner.
// Corner names follow the usual convention: a lower-left, b upper-right,
// c upper-left, d lower-right; {a,b} is the diagonal pair, {c,d} the
// anti-diagonal pair, and the four edges are ac, cb, bd, ad.
struct Cell {
    Point ll;

    Point a() const { return ll; }
    Point b() const { return {ll.x + 1, ll.y + 1}; }
    Point c() const { return {ll.x, ll.y + 1}; }
    Point d() const { return {ll.x + 1, ll.y}; }

    std::array<Point, 4> vertices() const { return {a(), b(), c(), d()}; }
    std::array<Edge, 4> edges() const {
        return {Edge{a(), c()}, Edge{c(), b()}, Edge{b(), d()}, Edge{a(), d()}};
    }

    friend bool operator==(const Cell&, const Cell&) = default;
    friend bool operator<(const Cell& s, const Cell& t) { return s.ll < t.ll; }
};

// Chebyshev distance <= 1: the two cells share an edge or a vertex.
inline bool cells_weakly_adjacent(const Cell& s, const Cell& t) {
    if (s == t) return false;
    return std::llabs(s.ll.x - t.ll.x) <= 1 && std::llabs(s.ll.y - t.ll.y) <= 1;
}

// Shared full edge.
inline bool cells_edge_adjacent(const Cell& s, const Cell& t) {
    return std::llabs(s.ll.x - t.ll.x) + std::llabs(s.ll.y - t.ll.y) == 1;
}

// Finite set of cells, possibly empty. Cells are kept sorted and distinct.
class CellCollection {
  public:
    CellCollection() = default;

    static CellCollection from_lower_lefts(std::vector<Point> lls,
                                           std::size_t* merged_duplicates = nullptr) {
        std::sort(lls.begin(), lls.end());
        auto last = std::unique(lls.begin(), lls.end());
        if (merged_duplicates) *merged_duplicates = std::distance(last, lls.end());
        lls.erase(last, lls.end());
        CellCollection c;
        c.cells_.reserve(lls.size());
        for (const Point& p : lls) c.cells_.push_back(Cell{p});
        return c;
    }

    static CellCollection from_cells(std::vector<Cell> cs) {
        std::vector<Point> lls;
        lls.reserve(cs.size());
        for (const Cell& c : cs) lls.push_back(c.ll);
        return from_lower_lefts(std::move(lls));
    }

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t rank() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }

    bool contains_cell(Point ll) const {
        return std::binary_search(cells_.begin(), cells_.end(), Cell{ll});
    }

    // Union of the member vertex sets, sorted (y,x).
    std::vector<Point> vertices() const {
        std::vector<Point> vs;
        vs.reserve(cells_.size() * 4);
        for (const Cell& c : cells_)
            for (const Point& p : c.vertices()) vs.push_back(p);
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        return vs;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> es;
        es.reserve(cells_.size() * 4);
        for (const Cell& c : cells_)
            for (const Edge& e : c.edges()) es.push_back(e);
        std::sort(es.begin(), es.end());
        es.erase(std::unique(es.begin(), es.end()), es.end());
        return es;
    }

    // Minimal bounding box of the cells as [lo, hi] over lower-left corners.
    std::pair<Point, Point> cell_bbox() const {
        if (empty()) throw std::logic_error("cell_bbox of empty collection");
        std::int64_t xlo = cells_[0].ll.x, xhi = cells_[0].ll.x;
        std::int64_t ylo = cells_[0].ll.y, yhi = cells_[0].ll.y;
        for (const Cell& c : cells_) {
            xlo = std::min(xlo, c.ll.x);
            xhi = std::max(xhi, c.ll.x);
            ylo = std::min(ylo, c.ll.y);
            yhi = std::max(yhi, c.ll.y);
        }
        return {{xlo, ylo}, {xhi, yhi}};
    }

    friend bool operator==(const CellCollection&, const CellCollection&) = default;
    friend bool operator<(const CellCollection& c, const CellCollection& d) {
        return c.cells_ < d.cells_;
    }

  private:
    std::vector<Cell> cells_;
};

namespace detail {

// Components under an adjacency predicate, each sorted; deterministic order
// (by least cell of each component).
template <typename Adj>
std::vector<CellCollection> components_by(const CellCollection& c, Adj adjacent) {
    const auto& cs = c.cells();
    std::vector<int> comp(cs.size(), -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (comp[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            std::size_t k = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < cs.size(); ++j)
                if (comp[j] < 0 && adjacent(cs[k], cs[j])) {
                    comp[j] = ncomp;
                    stack.push_back(j);
                }
        }
        ++ncomp;
    }
    std::vector<std::vector<Cell>> parts(ncomp);
    for (std::size_t i = 0; i < cs.size(); ++i) parts[comp[i]].push_back(cs[i]);
    std::vector<CellCollection> out;
    out.reserve(ncomp);
    for (auto& p : parts) out.push_back(CellCollection::from_cells(std::move(p)));
    return out;
}

}  // namespace detail

// Polyomino components: maximal edge-connected subcollections.
inline std::vector<CellCollection> connected_components(const CellCollection& c) {
    return detail::components_by(c, cells_edge_adjacent);
}

// Weak connectivity uses the 8-neighbourhood. The empty collection counts
// as weakly connected.
inline bool is_weakly_connected(const CellCollection& c) {
    if (c.empty()) return true;
    return detail::components_by(c, cells_weakly_adjacent).size() == 1;
}

inline bool is_polyomino(const CellCollection& c) {
    if (c.empty()) return false;
    return connected_components(c).size() == 1;
}

// Groups of cells with pairwise disjoint vertex sets. Two cells share a
// vertex exactly when they are weakly adjacent, so these are the weak
// components.
inline std::vector<CellCollection> vertex_disjoint_split(const CellCollection& c) {
    return detail::components_by(c, cells_weakly_adjacent);
}

// Row and column convexity: cells of each row form a contiguous run of x
// coordinates, and symmetrically for columns.
inline bool is_convex(const CellCollection& c) {
    if (c.empty()) return true;
    auto [lo, hi] = c.cell_bbox();
    for (std::int64_t y = lo.y; y <= hi.y; ++y) {
        std::int64_t first = hi.x + 1, last = lo.x - 1, count = 0;
        for (const Cell& cell : c.cells())
            if (cell.ll.y == y) {
                first = std::min(first, cell.ll.x);
                last = std::max(last, cell.ll.x);
                ++count;
            }
        if (count > 0 && last - first + 1 != count) return false;
    }
    for (std::int64_t x = lo.x; x <= hi.x; ++x) {
        std::int64_t first = hi.y + 1, last = lo.y - 1, count = 0;
        for (const Cell& cell : c.cells())
            if (cell.ll.x == x) {
                first = std::min(first, cell.ll.y);
                last = std::max(last, cell.ll.y);
                ++count;
            }
        if (count > 0 && last - first + 1 != count) return false;
    }
    return true;
}

// The eight dihedral images of a point.
inline Point d4_point(int k, Point p) {
    Point q = (k & 4) ? Point{-p.x, p.y} : p;
    switch (k & 3) {
        case 0: return q;
        case 1: return {-q.y, q.x};
        case 2: return {-q.x, -q.y};
        default: return {q.y, -q.x};
    }
}

inline Cell d4_cell(int k, const Cell& c) {
    Point p = d4_point(k, c.a());
    Point q = d4_point(k, c.b());
    return Cell{{std::min(p.x, q.x), std::min(p.y, q.y)}};
}

// Shift so the minimal x and y over lower-left corners are both zero.
inline CellCollection translate_to_origin(const CellCollection& c) {
    if (c.empty()) return c;
    auto [lo, hi] = c.cell_bbox();
    (void)hi;
    std::vector<Point> lls;
    lls.reserve(c.rank());
    for (const Cell& cell : c.cells()) lls.push_back(cell.ll - lo);
    return CellCollection::from_lower_lefts(std::move(lls));
}

inline CellCollection translate(const CellCollection& c, Point delta) {
    std::vector<Point> lls;
    lls.reserve(c.rank());
    for (const Cell& cell : c.cells()) lls.push_back(cell.ll + delta);
    return CellCollection::from_lower_lefts(std::move(lls));
}

inline CellCollection d4_image(int k, const CellCollection& c) {
    std::vector<Point> lls;
    lls.reserve(c.rank());
    for (const Cell& cell : c.cells()) lls.push_back(d4_cell(k, cell).ll);
    return CellCollection::from_lower_lefts(std::move(lls));
}

// Least cell list over all 8 dihedral images, translation-normalized.
// Constant on the orbit under translations and D4, and idempotent.
inline CellCollection canonical_form(const CellCollection& c) {
    if (c.empty()) return c;
    CellCollection best;
    for (int k = 0; k < 8; ++k) {
        CellCollection image = translate_to_origin(d4_image(k, c));
        if (k == 0 || image < best) best = std::move(image);
    }
    return best;
}

enum class SymmetryMode { Translation, TranslationD4 };

// A reference shape for containment queries, translation-normalized.
struct Pattern {
    CellCollection cells;
    SymmetryMode mode = SymmetryMode::Translation;

    Pattern(CellCollection c, SymmetryMode m = SymmetryMode::Translation)
        : cells(translate_to_origin(c)), mode(m) {}

    static Pattern square_tetromino() {
        return Pattern(CellCollection::from_lower_lefts({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));
    }
    static Pattern x_pentomino() {
        return Pattern(
            CellCollection::from_lower_lefts({{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}}));
    }
};

// All translates (or translate+D4 images) of the pattern that are subsets of
// c, returned as distinct cell subsets.
inline std::vector<CellCollection> pattern_embeddings(const CellCollection& c,
                                                      const Pattern& p) {
    std::vector<CellCollection> found;
    if (p.cells.empty() || p.cells.rank() > c.rank()) return found;
    int kmax = p.mode == SymmetryMode::TranslationD4 ? 8 : 1;
    std::vector<CellCollection> orientations;
    for (int k = 0; k < kmax; ++k) {
        CellCollection img = translate_to_origin(d4_image(k, p.cells));
        if (std::find(orientations.begin(), orientations.end(), img) == orientations.end())
            orientations.push_back(img);
    }
    for (const CellCollection& orient : orientations) {
        const Point anchor = orient.cells().front().ll;
        for (const Cell& target : c.cells()) {
            Point delta = target.ll - anchor;
            bool all = true;
            for (const Cell& pc : orient.cells())
                if (!c.contains_cell(pc.ll + delta)) {
                    all = false;
                    break;
                }
            if (all) found.push_back(translate(orient, delta));
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

inline bool contains_pattern(const CellCollection& c, const Pattern& p) {
    return !pattern_embeddings(c, p).empty();
}

}  // namespace adjmin
