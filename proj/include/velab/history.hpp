/// @file history.hpp
/// @brief Bounded, time-ordered ring of snapshots (oldest first) backing the
/// discrete time derivative Z0.
#pragma once

#include <deque>
#include <vector>

#include "velab/state.hpp"

namespace velab {

class History {
public:
    /// capacity = Z0 depth + 1.
    explicit History(std::size_t capacity = 4);

    /// Appends a snapshot, evicting the oldest when full.  Times must be
    /// strictly increasing and, once three or more are held, uniformly spaced
    /// to relative tolerance 1e-12.
    void push(StateSnapshot s);

    std::size_t size() const noexcept { return items_.size(); }
    std::size_t capacity() const noexcept { return capacity_; }
    bool empty() const noexcept { return items_.empty(); }
    const StateSnapshot& newest() const { return items_.back(); }
    const StateSnapshot& operator[](std::size_t k) const { return items_[k]; }

    std::vector<double> times() const;
    /// The trailing `count` entries (all when count exceeds size) as a new history.
    History tail(std::size_t count) const;

private:
    std::size_t capacity_;
    std::deque<StateSnapshot> items_;
};

}  // namespace velab
