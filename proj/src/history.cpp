#include "velab/history.hpp"

#include <cmath>

#include "velab/error.hpp"
#include "velab/grid.hpp"

namespace velab {

History::History(std::size_t capacity) : capacity_(capacity) {
    if (capacity_ == 0) throw ValidationError("history capacity must be >= 1");
}

void History::push(StateSnapshot s) {
    if (!items_.empty()) {
        const double last = items_.back().t;
        if (!(s.t > last)) throw ValidationError("history times must be strictly increasing");
        if (items_.size() >= 2) {
            const double window[3] = {items_[items_.size() - 2].t, last, s.t};
            if (!uniformly_spaced(window)) throw ValidationError("history snapshots must be uniformly spaced");
        }
    }
    items_.push_back(std::move(s));
    while (items_.size() > capacity_) items_.pop_front();
}

std::vector<double> History::times() const {
    std::vector<double> t;
    t.reserve(items_.size());
    for (const auto& s : items_) t.push_back(s.t);
    return t;
}

History History::tail(std::size_t count) const {
    History h(capacity_);
    const std::size_t start = count >= items_.size() ? 0 : items_.size() - count;
    for (std::size_t k = start; k < items_.size(); ++k) h.items_.push_back(items_[k]);
    return h;
}

}  // namespace velab
