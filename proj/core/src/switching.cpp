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

#include "swseq/switching.hpp"

#include <algorithm>

namespace swseq
{

    void timing::validate() const
    {
        if (n_tx < 1 || n_rx < 1 || n_freq < 1 || n_snap < 1)
            throw config_error("timing: M_T, M_R, M_f, T must all be positive");
        if (!(t0_s > 0.0) || !(t1_s > 0.0) || !(snapshot_s > 0.0))
            throw config_error("timing: t0, t1, T0 must all be positive");
        if (t1_s < static_cast<double>(n_rx) * t0_s - 1e-15)
            throw config_error("timing: one TX dwell must fit a full RX sweep (t1 >= M_R*t0)");
        if (snapshot_s < static_cast<double>(n_tx) * t1_s - 1e-15)
            throw config_error("timing: one snapshot separation must fit a full TX sweep (T0 >= M_T*t1)");
    }

    timing timing::compressed(unsigned divisor) const
    {
        if (divisor < 1)
            throw feasibility_error("timing: dense divisor must be a positive integer");
        timing out = *this;
        const double d = static_cast<double>(divisor);
        out.t0_s /= d;
        out.t1_s /= d;
        out.snapshot_s /= d;
        if (out.snapshot_s < static_cast<double>(out.n_tx) * out.t1_s - 1e-15)
            throw feasibility_error("timing: compressed snapshot separation cannot hold a TX sweep");
        out.validate();
        return out;
    }

    timing default_timing()
    {
        timing tm;
        tm.n_tx = 8;
        tm.n_rx = 8;
        tm.n_freq = 129;
        tm.n_snap = 16;
        tm.snapshot_s = 620e-6;
        tm.t1_s = tm.snapshot_s / static_cast<double>(tm.n_tx);
        tm.t0_s = tm.t1_s / static_cast<double>(tm.n_rx);
        return tm;
    }

    void switching_schedule::validate() const
    {
        tm.validate();
        if (slots.n_rows != tm.n_tx || slots.n_cols != tm.n_snap)
            throw feasibility_error("schedule: slot matrix must be M_T x T (" +
                                    std::to_string(tm.n_tx) + " x " + std::to_string(tm.n_snap) +
                                    "), got " + std::to_string(slots.n_rows) + " x " +
                                    std::to_string(slots.n_cols));
        std::vector<bool> seen(tm.n_tx);
        for (arma::uword t = 0; t < slots.n_cols; ++t)
        {
            std::fill(seen.begin(), seen.end(), false);
            for (arma::uword m = 0; m < slots.n_rows; ++m)
            {
                arma::uword v = slots(m, t);
                if (v < 1 || v > tm.n_tx || seen[v - 1])
                    throw feasibility_error("schedule: column " + std::to_string(t + 1) +
                                            " is not a permutation of 1.." + std::to_string(tm.n_tx));
                seen[v - 1] = true;
            }
        }
    }

    arma::mat eta_from_schedule(const switching_schedule &s)
    {
        s.validate();
        arma::mat eta(s.slots.n_rows, s.slots.n_cols);
        const double t1 = s.tm.t1_s;
        const double block = static_cast<double>(s.tm.n_tx) * t1;
        for (arma::uword t = 0; t < s.slots.n_cols; ++t)
            for (arma::uword m = 0; m < s.slots.n_rows; ++m)
                eta(m, t) = static_cast<double>(t) * block +
                            static_cast<double>(s.slots(m, t) - 1) * t1;
        return eta;
    }

    switching_schedule uniform_schedule(const timing &tm)
    {
        tm.validate();
        switching_schedule s;
        s.tm = tm;
        s.label = "uniform";
        s.slots.set_size(tm.n_tx, tm.n_snap);
        for (arma::uword t = 0; t < tm.n_snap; ++t)
            for (arma::uword m = 0; m < tm.n_tx; ++m)
                s.slots(m, t) = m + 1;
        return s;
    }

    switching_schedule dense_schedule(const timing &tm, unsigned divisor)
    {
        switching_schedule s = uniform_schedule(tm);
        s.tm = tm.compressed(divisor);
        s.label = "dense/" + std::to_string(divisor);
        return s;
    }

    switching_schedule random_schedule(const timing &tm, std::uint64_t seed)
    {
        switching_schedule s = uniform_schedule(tm);
        s.label = "random";
        rng gen(seed);
        for (arma::uword t = 0; t < tm.n_snap; ++t)
        {
            // Fisher-Yates per column
            for (arma::uword i = tm.n_tx; i > 1; --i)
            {
                arma::uword j = gen.uniform_index(i);
                std::swap(s.slots(i - 1, t), s.slots(j, t));
            }
        }
        return s;
    }

    arma::uword neighborhood_size(arma::uword n_tx, arma::uword n_snap)
    {
        return n_snap * (n_tx * (n_tx - 1)) / 2;
    }

    swap_move propose_swap(const switching_schedule &s, rng &gen)
    {
        const arma::uword m = s.slots.n_rows;
        if (m < 2)
            throw feasibility_error("neighbor_swap: need at least two TX antennas");
        swap_move mv;
        mv.column = gen.uniform_index(s.slots.n_cols);
        // unrank a uniform draw over the C(M_T,2) unordered pairs
        arma::uword r = gen.uniform_index(m * (m - 1) / 2);
        arma::uword a = 0, row_len = m - 1;
        while (r >= row_len)
        {
            r -= row_len;
            ++a;
            --row_len;
        }
        mv.row_a = a;
        mv.row_b = a + 1 + r;
        return mv;
    }

    switching_schedule apply_swap(const switching_schedule &s, const swap_move &mv)
    {
        switching_schedule out = s;
        std::swap(out.slots(mv.row_a, mv.column), out.slots(mv.row_b, mv.column));
        return out;
    }

    switching_schedule neighbor_swap(const switching_schedule &s, rng &gen)
    {
        return apply_swap(s, propose_swap(s, gen));
    }

} // namespace swseq
