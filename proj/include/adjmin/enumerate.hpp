#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "adjmin/errors.hpp"
#include "adjmin/geometry.hpp"

namespace adjmin {

struct EnumerationConfig {
    int rank = 1;
    bool up_to_symmetry = true;
    // All filters must accept for a collection to be emitted.
    std::vector<std::function<bool(const CellCollection&)>> filters;
    int rank_budget = 8;
};

namespace detail {

// Redelmeier-style growth on the king graph. Shapes are grown from the
// (y,x)-least cell, pinned to the origin, with candidate cells numbered in
// discovery order and always extended by a higher-numbered candidate; this
// yields every weakly connected fixed shape exactly once, in a fixed order.
class KingEnumerator {
  public:
    KingEnumerator(int rank, const std::function<bool(const CellCollection&)>& emit)
        : rank_(rank), emit_(emit), width_(2 * rank - 1) {
        listed_.assign(static_cast<std::size_t>(width_) * rank_, false);
    }

    bool run() {
        chosen_.clear();
        candidates_.clear();
        candidates_.push_back({0, 0});
        listed_[index({0, 0})] = true;
        bool keep_going = grow(0);
        listed_[index({0, 0})] = false;
        return keep_going;
    }

  private:
    std::size_t index(Point p) const {
        return static_cast<std::size_t>(p.y) * width_ +
               static_cast<std::size_t>(p.x + rank_ - 1);
    }

    bool in_region(Point p) const {
        if (p.y < 0 || p.y >= rank_) return false;
        if (p.x <= -rank_ || p.x >= rank_) return false;
        return p.y > 0 || p.x >= 0;
    }

    bool grow(std::size_t next) {
        if (static_cast<int>(chosen_.size()) == rank_)
            return emit_(CellCollection::from_lower_lefts(chosen_));
        for (std::size_t q = next; q < candidates_.size(); ++q) {
            Point cell = candidates_[q];
            chosen_.push_back(cell);
            std::size_t added = 0;
            static constexpr Point kKingMoves[8] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                                    {1, 1},  {-1, 1}, {1, -1}, {-1, -1}};
            for (const Point& d : kKingMoves) {
                Point n = cell + d;
                if (in_region(n) && !listed_[index(n)]) {
                    listed_[index(n)] = true;
                    candidates_.push_back(n);
                    ++added;
                }
            }
            bool keep_going = grow(q + 1);
            for (std::size_t k = 0; k < added; ++k) {
                listed_[index(candidates_.back())] = false;
                candidates_.pop_back();
            }
            chosen_.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }

    int rank_;
    const std::function<bool(const CellCollection&)>& emit_;
    std::int64_t width_;
    std::vector<bool> listed_;
    std::vector<Point> chosen_;
    std::vector<Point> candidates_;
};

}  // namespace detail

// Streams every weakly connected collection of the configured rank exactly
// once (one representative per translation class, or per translation+D4
// class when up_to_symmetry). The visitor may return false to stop early.
inline void enumerate_collections(const EnumerationConfig& cfg,
                                  const std::function<bool(const CellCollection&)>& visit) {
    if (cfg.rank < 1) throw InputError("enumeration rank must be at least 1");
    if (cfg.rank > 9) throw BudgetError("enumeration beyond rank 9 is unsupported");
    if (cfg.rank > cfg.rank_budget)
        throw BudgetError("enumeration rank " + std::to_string(cfg.rank) +
                          " exceeds budget " + std::to_string(cfg.rank_budget));
    auto emit = [&](const CellCollection& c) -> bool {
        CellCollection shape = c;
        if (cfg.up_to_symmetry) {
            CellCollection normalized = translate_to_origin(shape);
            if (!(canonical_form(shape) == normalized)) return true;
            shape = std::move(normalized);
        }
        for (const auto& f : cfg.filters)
            if (!f(shape)) return true;
        return visit(shape);
    };
    detail::KingEnumerator(cfg.rank, emit).run();
}

inline std::uint64_t count_collections(const EnumerationConfig& cfg) {
    std::uint64_t n = 0;
    enumerate_collections(cfg, [&](const CellCollection&) {
        ++n;
        return true;
    });
    return n;
}

inline std::vector<CellCollection> collect_collections(EnumerationConfig cfg) {
    std::vector<CellCollection> out;
    enumerate_collections(cfg, [&](const CellCollection& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

}  // namespace adjmin
