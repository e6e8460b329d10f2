#include "levelga/problems/royal_road.hpp"

#include <stdexcept>

namespace levelga {

RoyalRoad::RoyalRoad(std::size_t n, std::size_t r) : n_(n), r_(r) {
    if (n < 1) throw std::invalid_argument("RoyalRoad: n must be >= 1");
    if (r < 1 || n % r != 0)
        throw std::invalid_argument("RoyalRoad: block length must divide n");
}

Fitness RoyalRoad::objective(const BitString& x) const {
    Fitness complete = 0;
    for (std::size_t b = 0; b < n_; b += r_) {
        bool full = true;
        for (std::size_t i = b; i < b + r_; ++i) {
            if (x.get(i) == 0) {
                full = false;
                break;
            }
        }
        complete += full;
    }
    return complete;
}

std::string RoyalRoad::name() const {
    return "rr:" + std::to_string(n_) + ":" + std::to_string(r_);
}

std::vector<Fitness> RoyalRoad::objective_values() const {
    std::vector<Fitness> v(blocks() + 1);
    for (std::size_t i = 0; i <= blocks(); ++i) v[i] = static_cast<Fitness>(i);
    return v;
}

}  // namespace levelga
