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

#ifndef SWSEQ_ANNEALER_HPP
#define SWSEQ_ANNEALER_HPP

#include <vector>

#include "swseq/ambiguity.hpp"
#include "swseq/switching.hpp"

namespace swseq
{
    // Simulated annealing over the feasible set of per-column permutations,
    // geometric cooling and Metropolis acceptance.
    struct anneal_config
    {
        int p = 6;                 // cost exponent
        double temp0 = 100.0;      // initial temperature
        double alpha = 0.97;       // cooling rate
        arma::uword k_max = 500;   // iteration budget
        double epsilon_th = 0.0;   // cost threshold, 0 disables
        std::uint64_t seed = 1;
        cost_params cost;          // evaluation grid (cost.p is ignored; p above rules)

        void validate() const;
    };

    struct anneal_record
    {
        arma::uword iteration;  // 1-based
        double temperature;     // temp0 * alpha^iteration
        double candidate_cost;
        bool accepted;
        double best_cost;       // non-increasing
    };

    struct anneal_result
    {
        switching_schedule schedule; // best-cost schedule visited
        std::vector<anneal_record> trace;
        double initial_cost = 0.0;
        double best_cost = 0.0;
    };

    // Alg: propose a same-column swap, accept when
    // exp((f_p(current) - f_p(candidate)) / temp) > uniform(0,1),
    // cool temp *= alpha each iteration, stop after k_max iterations or once
    // the best cost reaches epsilon_th. Returns the best schedule visited.
    anneal_result anneal(const switching_schedule &initial, const array_model &tx,
                         const anneal_config &cfg);

    // Independent chains with forked seeds; returns the lowest-cost result.
    anneal_result anneal_best_of(const switching_schedule &initial, const array_model &tx,
                                 const anneal_config &cfg, unsigned n_chains,
                                 unsigned workers = 1);

    // Transition kernel of the chain at fixed temperature:
    //   (1/A) * min(1, exp((f_p(s) - f_p(s2)) / temp))        if s2 ~ s,
    //   1 - sum over the A neighbors of the above              if s2 == s,
    //   0                                                      otherwise,
    // with A = T * C(M_T, 2).
    double transition_probability(const switching_schedule &s, const switching_schedule &s2,
                                  double temperature, int p, const array_model &tx,
                                  const cost_params &cost);

} // namespace swseq

#endif
