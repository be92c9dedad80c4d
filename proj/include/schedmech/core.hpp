#pragma once

#include "schedmech/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace schedmech {

// Player indices are 1 and 2 throughout; task indices are 0-based in code
// and 1-based in file formats and reports.

struct spec_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Which player runs each task. Stored as the set of tasks given to player 1
// (bit t set <=> task t runs on player 1); player 2 gets the complement.
class Allocation {
public:
    Allocation(int num_tasks, std::uint32_t player1_mask)
        : tasks_(num_tasks), mask_(player1_mask) {
        if (num_tasks < 0 || num_tasks > 30)
            throw spec_error("unsupported task count");
        if (mask_ >> tasks_)
            throw spec_error("allocation mask out of range");
    }

    static Allocation from_players(const std::vector<int>& player_of_task) {
        std::uint32_t mask = 0;
        for (std::size_t j = 0; j < player_of_task.size(); ++j) {
            int p = player_of_task[j];
            if (p != 1 && p != 2)
                throw spec_error("player index must be 1 or 2");
            if (p == 1) mask |= 1u << j;
        }
        return Allocation(static_cast<int>(player_of_task.size()), mask);
    }

    int num_tasks() const { return tasks_; }
    std::uint32_t player1_mask() const { return mask_; }
    std::uint32_t player_mask(int player) const {
        return player == 1 ? mask_ : full_mask() & ~mask_;
    }
    std::uint32_t full_mask() const { return (1u << tasks_) - 1; }
    bool to_player1(int task) const { return (mask_ >> task) & 1u; }
    int player_of(int task) const { return to_player1(task) ? 1 : 2; }
    int player1_task_count() const { return __builtin_popcount(mask_); }

    bool operator==(const Allocation&) const = default;

    std::string str() const;

private:
    int tasks_;
    std::uint32_t mask_;
};

// Declared processing times: row i-1 holds player i's value for each task.
class Instance {
public:
    Instance(int num_players, int num_tasks, std::vector<std::vector<ExtRat>> times);

    static Instance from_rows(std::vector<ExtRat> row1, std::vector<ExtRat> row2) {
        int m = static_cast<int>(row1.size());
        return Instance(2, m, {std::move(row1), std::move(row2)});
    }

    int num_players() const { return players_; }
    int num_tasks() const { return tasks_; }

    const ExtRat& time(int player, int task) const { return times_[player - 1][task]; }
    const std::vector<ExtRat>& row(int player) const { return times_[player - 1]; }

    Instance with_row(int player, std::vector<ExtRat> row) const;
    Instance transposed() const;  // 2 players: swap rows

    // sum of the player's times over the tasks in `mask`
    ExtRat bundle_time(int player, std::uint32_t mask) const;

    bool all_finite() const;
    bool operator==(const Instance&) const = default;

private:
    int players_;
    int tasks_;
    std::vector<std::vector<ExtRat>> times_;
};

// Amount paid to each player at one input.
struct PaymentProfile {
    ExtRat player1;
    ExtRat player2;

    const ExtRat& of(int player) const { return player == 1 ? player1 : player2; }
    bool operator==(const PaymentProfile&) const = default;
};

// Proof-device parameters: small perturbations and a finite stand-in for
// arbitrarily high values. Requires 0 < delta < epsilon < big.
struct GadgetConfig {
    ExtRat epsilon = ExtRat(1, 1000);
    ExtRat delta = ExtRat(1, 10000000);
    ExtRat big = ExtRat(1000000);

    void validate() const;
};

// max over players of the total time of the tasks assigned to that player
ExtRat makespan(const Instance& inst, const Allocation& alloc);

// payment minus own processing time of the allocated bundle
ExtRat utility(int player, const Instance& inst, const Allocation& alloc,
               const PaymentProfile& pay);

void require_two_players(const Instance& inst);

}  // namespace schedmech
