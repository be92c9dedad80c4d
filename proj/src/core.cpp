#include "schedmech/core.hpp"

namespace schedmech {

std::string Allocation::str() const {
    std::string s;
    for (int j = 0; j < tasks_; ++j) {
        if (j) s += ' ';
        s += std::to_string(player_of(j));
    }
    return s;
}

Instance::Instance(int num_players, int num_tasks, std::vector<std::vector<ExtRat>> times)
    : players_(num_players), tasks_(num_tasks), times_(std::move(times)) {
    if (players_ < 1)
        throw spec_error("instance needs at least one player");
    if (tasks_ < 1)
        throw spec_error("instance needs at least one task");
    if (static_cast<int>(times_.size()) != players_)
        throw spec_error("instance row count does not match num_players");
    for (const auto& row : times_)
        if (static_cast<int>(row.size()) != tasks_)
            throw spec_error("instance row length does not match num_tasks");
}

Instance Instance::with_row(int player, std::vector<ExtRat> row) const {
    auto times = times_;
    if (static_cast<int>(row.size()) != tasks_)
        throw spec_error("replacement row length does not match num_tasks");
    times[player - 1] = std::move(row);
    return Instance(players_, tasks_, std::move(times));
}

Instance Instance::transposed() const {
    require_two_players(*this);
    return Instance(2, tasks_, {times_[1], times_[0]});
}

ExtRat Instance::bundle_time(int player, std::uint32_t mask) const {
    ExtRat sum = 0;
    for (int j = 0; j < tasks_; ++j)
        if ((mask >> j) & 1u)
            sum += time(player, j);
    return sum;
}

bool Instance::all_finite() const {
    for (const auto& row : times_)
        for (const auto& v : row)
            if (!v.is_finite()) return false;
    return true;
}

void GadgetConfig::validate() const {
    if (!(ExtRat(0) < delta && delta < epsilon && epsilon < big))
        throw spec_error("gadget config must satisfy 0 < delta < epsilon < big");
}

ExtRat makespan(const Instance& inst, const Allocation& alloc) {
    require_two_players(inst);
    if (alloc.num_tasks() != inst.num_tasks())
        throw spec_error("allocation length does not match instance");
    return max(inst.bundle_time(1, alloc.player_mask(1)),
               inst.bundle_time(2, alloc.player_mask(2)));
}

ExtRat utility(int player, const Instance& inst, const Allocation& alloc,
               const PaymentProfile& pay) {
    require_two_players(inst);
    if (alloc.num_tasks() != inst.num_tasks())
        throw spec_error("allocation length does not match instance");
    return pay.of(player) - inst.bundle_time(player, alloc.player_mask(player));
}

void require_two_players(const Instance& inst) {
    if (inst.num_players() != 2)
        throw spec_error("operation is defined for exactly 2 players");
}

}  // namespace schedmech
