// SPDX-License-Identifier: Apache-2.0
//
// swseq - TX switching sequence design and evaluation for TDM MIMO channel sounders
// Copyright (C) 2026 swseq contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SWSEQ_SWITCHING_HPP
#define SWSEQ_SWITCHING_HPP

#include <string>

#include <armadillo>

#include "swseq/common.hpp"
#include "swseq/rng.hpp"

namespace swseq
{
    // Sounder timing constants and dimensions.
    //   t0: RX switch interval, t1: TX switch interval, T0: MIMO snapshot separation.
    // One TX dwell holds a full RX sweep (t1 >= M_R*t0) and one snapshot
    // separation holds a full TX sweep (T0 >= M_T*t1).
    struct timing
    {
        double t0_s = 0.0;
        double t1_s = 0.0;
        double snapshot_s = 0.0; // T0
        arma::uword n_tx = 0;    // M_T
        arma::uword n_rx = 0;    // M_R
        arma::uword n_freq = 0;  // M_f
        arma::uword n_snap = 0;  // T

        void validate() const;

        // target maximal non-ambiguous Doppler for scrambled sequences, M_T/(2*T0)
        double nu_up_hz() const { return static_cast<double>(n_tx) / (2.0 * snapshot_s); }

        // all switch intervals compressed by an integer divisor (dense sequences)
        timing compressed(unsigned divisor) const;
    };

    // Default sounder timing: M_T = M_R = 8, M_f = 129, T = 16 snapshots,
    // T0 = 620 us with back-to-back switching (t1 = T0/M_T, t0 = t1/M_R).
    timing default_timing();

    // TX switching schedule: column t holds the switching indices of all TX
    // antennas in snapshot t; every column is a permutation of 1..M_T.
    struct switching_schedule
    {
        arma::umat slots; // M_T x T, entries in 1..M_T
        timing tm;
        std::string label;

        void validate() const; // throws feasibility_error naming the offending column
    };

    // Absolute TX firing times implied by a schedule:
    //   eta(m,t) = (t-1)*M_T*t1 + (slots(m,t)-1)*t1   [seconds]
    arma::mat eta_from_schedule(const switching_schedule &s);

    switching_schedule uniform_schedule(const timing &tm);

    // Uniform pattern on timing compressed by `divisor` (snapshot separation
    // becomes T0/divisor; switch intervals shrink with it so a full sweep
    // still fits each snapshot).
    switching_schedule dense_schedule(const timing &tm, unsigned divisor);

    // Independent uniformly random permutation per column, reproducible from seed
    switching_schedule random_schedule(const timing &tm, std::uint64_t seed);

    // One same-column transposition; the neighborhood of the annealer's chain
    struct swap_move
    {
        arma::uword column;
        arma::uword row_a;
        arma::uword row_b; // row_a < row_b
    };

    // Number of distinct moves: T * C(M_T, 2)
    arma::uword neighborhood_size(arma::uword n_tx, arma::uword n_snap);

    // Uniform draw over the T*C(M_T,2) moves
    swap_move propose_swap(const switching_schedule &s, rng &gen);

    switching_schedule apply_swap(const switching_schedule &s, const swap_move &mv);

    // Copy of s with two entries of one uniformly chosen column exchanged
    switching_schedule neighbor_swap(const switching_schedule &s, rng &gen);

} // namespace swseq

#endif
