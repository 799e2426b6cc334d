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

#include "swseq/annealer.hpp"

#include <limits>
#include <mutex>

#include "swseq/rng.hpp"

namespace swseq
{

    void anneal_config::validate() const
    {
        if (!(temp0 > 0.0))
            throw config_error("anneal_config: temp0 must be positive");
        if (!(alpha > 0.0) || !(alpha < 1.0))
            throw config_error("anneal_config: alpha must lie in (0, 1)");
        if (k_max < 1)
            throw config_error("anneal_config: k_max must be >= 1");
        if (p < 2 || p % 2 != 0)
            throw config_error("anneal_config: p must be an even integer >= 2");
        cost_params c = cost;
        c.p = p;
        c.validate();
    }

    anneal_result anneal(const switching_schedule &initial, const array_model &tx,
                         const anneal_config &cfg)
    {
        cfg.validate();
        initial.validate();
        if (initial.tm.n_tx < 2)
            throw feasibility_error("anneal: M_T < 2 leaves no neighbor moves");

        cost_params cp = cfg.cost;
        cp.p = cfg.p;
        anneal_cost_engine engine(tx, cp, initial.tm.nu_up_hz());
        engine.reset(initial);

        rng gen(cfg.seed);
        anneal_result res;
        res.initial_cost = engine.current_cost();
        res.best_cost = res.initial_cost;
        res.schedule = initial;
        res.trace.reserve(cfg.k_max);

        switching_schedule current = initial;
        double cost_cur = res.initial_cost;
        double temp = cfg.temp0;

        for (arma::uword k = 1; k <= cfg.k_max; ++k)
        {
            if (cfg.epsilon_th > 0.0 && res.best_cost <= cfg.epsilon_th)
                break;
            temp *= cfg.alpha;

            const swap_move mv = propose_swap(current, gen);
            const double cost_cand = engine.try_swap(mv);
            const double u = gen.uniform();
            const double delta = cost_cur - cost_cand;
            const bool accepted = delta >= 0.0 || std::exp(delta / temp) > u;
            if (accepted)
            {
                engine.commit();
                current = apply_swap(current, mv);
                cost_cur = cost_cand;
                if (cost_cur < res.best_cost)
                {
                    res.best_cost = cost_cur;
                    res.schedule = current;
                }
            }
            res.trace.push_back({k, temp, cost_cand, accepted, res.best_cost});
        }
        res.schedule.label = "annealed";
        return res;
    }

    anneal_result anneal_best_of(const switching_schedule &initial, const array_model &tx,
                                 const anneal_config &cfg, unsigned n_chains, unsigned workers)
    {
        if (n_chains < 1)
            throw config_error("anneal_best_of: need at least one chain");
        std::vector<anneal_result> results(n_chains);
        rng master(cfg.seed);
        std::vector<std::uint64_t> seeds(n_chains);
        for (unsigned c = 0; c < n_chains; ++c)
            seeds[c] = master.fork(c).seed();

        parallel_for(n_chains, workers, [&](std::size_t c0, std::size_t c1) {
            for (std::size_t c = c0; c < c1; ++c)
            {
                anneal_config chain_cfg = cfg;
                chain_cfg.seed = seeds[c];
                results[c] = anneal(initial, tx, chain_cfg);
            }
        });

        std::size_t best = 0;
        for (std::size_t c = 1; c < n_chains; ++c)
            if (results[c].best_cost < results[best].best_cost)
                best = c;
        return results[best];
    }

    namespace
    {
        // s2 ~ s: equal everywhere except two entries of one column that hold
        // each other's values
        bool is_neighbor(const arma::umat &a, const arma::umat &b)
        {
            arma::uword col = a.n_cols, diff_rows[2] = {0, 0}, n_diff = 0;
            for (arma::uword t = 0; t < a.n_cols; ++t)
                for (arma::uword m = 0; m < a.n_rows; ++m)
                    if (a(m, t) != b(m, t))
                    {
                        if (n_diff < 2)
                            diff_rows[n_diff] = m;
                        ++n_diff;
                        if (n_diff > 2)
                            return false;
                        if (col == a.n_cols)
                            col = t;
                        else if (col != t)
                            return false;
                    }
            return n_diff == 2 &&
                   a(diff_rows[0], col) == b(diff_rows[1], col) &&
                   a(diff_rows[1], col) == b(diff_rows[0], col);
        }
    } // namespace

    double transition_probability(const switching_schedule &s, const switching_schedule &s2,
                                  double temperature, int p, const array_model &tx,
                                  const cost_params &cost)
    {
        if (!(temperature > 0.0))
            throw config_error("transition_probability: temperature must be positive");
        s.validate();
        s2.validate();
        if (s.slots.n_rows != s2.slots.n_rows || s.slots.n_cols != s2.slots.n_cols)
            return 0.0;

        const double a_size = static_cast<double>(neighborhood_size(s.tm.n_tx, s.tm.n_snap));
        ambiguity_evaluator ev(tx, [&] {
            cost_params c = cost;
            c.p = p;
            return c;
        }(), s.tm.nu_up_hz());

        const double f_s = ev.cost(eta_from_schedule(s), p);
        const auto accept = [&](const switching_schedule &cand) {
            const double f_c = ev.cost(eta_from_schedule(cand), p);
            return std::min(1.0, std::exp((f_s - f_c) / temperature));
        };

        const bool same = arma::all(arma::vectorise(s.slots) == arma::vectorise(s2.slots));
        if (same)
        {
            double total = 0.0;
            for (arma::uword t = 0; t < s.tm.n_snap; ++t)
                for (arma::uword i = 0; i + 1 < s.tm.n_tx; ++i)
                    for (arma::uword j = i + 1; j < s.tm.n_tx; ++j)
                        total += accept(apply_swap(s, {t, i, j}));
            return 1.0 - total / a_size;
        }
        if (!is_neighbor(s.slots, s2.slots))
            return 0.0;
        return accept(s2) / a_size;
    }

} // namespace swseq
